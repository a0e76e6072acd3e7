use crate::error::{Error, Result};
use crate::exactla::{Matrix, Rat, Subspace};
use crate::quiveralg::AlgebraRef;

use super::hom::{coords_in_basis, hom_space};
use super::rep::{
    hom_from_projective, kernel_cokernel, map_from_summands, realize_projectives, RepMap,
    Representation,
};

/// Vector-space duality: a right module over `A` becomes a right module over
/// the opposite algebra, with the same vertex dimensions and transposed
/// arrow actions. `D(D(M))` reproduces `M` on the nose.
pub fn dual(m: &Representation, target: &AlgebraRef) -> Result<Representation> {
    let q = m.algebra().quiver();
    if *target.quiver() != q.opposite() {
        return Err(Error::Category(
            "dual target is not presented over the opposite quiver".into(),
        ));
    }
    let dims = m.dims().to_vec();
    let arrow_mats = (0..q.arrows().len())
        .map(|a| m.arrow_mat(a).transpose())
        .collect();
    Representation::new(target.clone(), dims, arrow_mats)
}

/// Dual of a map: `D(f): D(target) -> D(source)`, transposed vertexwise.
pub fn dual_map(f: &RepMap, target_algebra: &AlgebraRef) -> Result<RepMap> {
    let dsrc = dual(f.target(), target_algebra)?;
    let dtgt = dual(f.source(), target_algebra)?;
    let mats = (0..f.mats().len())
        .map(|v| f.mat(v).transpose())
        .collect();
    RepMap::new(dsrc, dtgt, mats)
}

/// The radical subrepresentation `m . rad A`, one subspace per vertex.
pub fn radical_subspaces(m: &Representation) -> Vec<Subspace> {
    let nv = m.dims().len();
    let mut vecs: Vec<Vec<Vec<Rat>>> = vec![Vec::new(); nv];
    for (a, arrow) in m.algebra().quiver().arrows().iter().enumerate() {
        let mat = m.arrow_mat(a);
        for c in 0..mat.cols() {
            vecs[arrow.tgt].push(mat.col(c));
        }
    }
    (0..nv)
        .map(|v| Subspace::from_vectors(m.dims()[v], &vecs[v]))
        .collect()
}

/// Projective cover `P(m) ->> m`: one projective per top generator.
pub fn projective_cover(m: &Representation) -> (Vec<usize>, Representation, RepMap) {
    let alg = m.algebra().clone();
    let nv = alg.vertex_count();
    let rad = radical_subspaces(m);
    let mut mults = vec![0usize; nv];
    let mut pieces = Vec::new();
    for v in 0..nv {
        let q = Subspace::full(m.dims()[v])
            .quotient_coords(&rad[v])
            .expect("radical is contained in the module");
        mults[v] = q.rank;
        for k in 0..q.rank {
            pieces.push(hom_from_projective(&alg, v, m, &q.section.row(k)));
        }
    }
    let p = realize_projectives(&alg, &mults);
    let cover = map_from_summands(&p, &pieces, m);
    debug_assert!(cover.is_surjective(), "projective cover must be onto");
    (mults, p, cover)
}

/// Minimal projective presentation `P^{-1} -> P^0 ->> m`.
#[derive(Clone, Debug)]
pub struct ProjPresentation {
    pub p_minus1_mults: Vec<usize>,
    pub p_zero_mults: Vec<usize>,
    pub p_minus1: Representation,
    pub p_zero: Representation,
    /// `p_minus1 -> p_zero`
    pub diff: RepMap,
    /// `p_zero ->> m`
    pub cover: RepMap,
}

pub fn minimal_projective_presentation(m: &Representation) -> Result<ProjPresentation> {
    let (p_zero_mults, p_zero, cover) = projective_cover(m);
    let kc = kernel_cokernel(&cover);
    // the kernel of a projective cover sits inside the radical
    debug_assert!({
        let rad = radical_subspaces(&p_zero);
        (0..p_zero.dims().len()).all(|v| {
            (0..kc.kernel_incl.mat(v).cols())
                .all(|c| rad[v].contains(&kc.kernel_incl.mat(v).col(c)))
        })
    });
    let (p_minus1_mults, p_minus1, kcover) = projective_cover(&kc.kernel);
    let diff = kc.kernel_incl.compose(&kcover);
    Ok(ProjPresentation {
        p_minus1_mults,
        p_zero_mults,
        p_minus1,
        p_zero,
        diff,
        cover,
    })
}

/// Minimal injective copresentation `m >-> I^0 -> I^1`, computed by duality
/// over the opposite algebra.
#[derive(Clone, Debug)]
pub struct InjPresentation {
    pub i_zero_mults: Vec<usize>,
    pub i_one_mults: Vec<usize>,
    pub i_zero: Representation,
    pub i_one: Representation,
    /// `m >-> i_zero`
    pub envelope: RepMap,
    /// `i_zero -> i_one`
    pub diff: RepMap,
}

pub fn minimal_injective_presentation(m: &Representation) -> Result<InjPresentation> {
    let alg = m.algebra().clone();
    let op = alg.opposite();
    let dm = dual(m, &op)?;
    let pres = minimal_projective_presentation(&dm)?;
    let envelope = dual_map(&pres.cover, &alg)?;
    let diff = dual_map(&pres.diff, &alg)?;
    // D(P_v over A^op) is the injective at v over A; sanity-check on dims.
    debug_assert_eq!(envelope.source().dims(), m.dims());
    Ok(InjPresentation {
        i_zero_mults: pres.p_zero_mults,
        i_one_mults: pres.p_minus1_mults,
        i_zero: envelope.target().clone(),
        i_one: diff.target().clone(),
        envelope,
        diff,
    })
}

pub fn is_projective(m: &Representation) -> bool {
    let (_, _, cover) = projective_cover(m);
    cover.is_injective()
}

pub fn is_injective_module(m: &Representation) -> bool {
    let op = m.algebra().opposite();
    match dual(m, &op) {
        Ok(dm) => is_projective(&dm),
        Err(_) => false,
    }
}

/// Nakayama functor on projectives: `nu(P) = D(Hom_A(P, A))`.
///
/// `Hom_A(P, A)` carries its left-module structure as a representation of
/// the opposite algebra, with vertex spaces `Hom(P, e_v A)` and arrows
/// acting by postcomposition with left multiplication.
pub fn nu_module(p: &Representation) -> Result<Representation> {
    if !is_projective(p) {
        return Err(Error::NotInDomain(
            "Nakayama functor applies to add(A) only".into(),
        ));
    }
    let w = hom_into_regular(p)?;
    dual(&w, p.algebra())
}

/// `nu` on a map between projectives.
pub fn nu_map(f: &RepMap) -> Result<RepMap> {
    let alg = f.source().algebra().clone();
    if !is_projective(f.source()) || !is_projective(f.target()) {
        return Err(Error::NotInDomain(
            "Nakayama functor applies to add(A) only".into(),
        ));
    }
    let wq = hom_into_regular(f.target())?; // Hom(Q, A) over A^op
    let wp = hom_into_regular(f.source())?; // Hom(P, A) over A^op
    // precomposition Hom(Q, P_v) -> Hom(P, P_v)
    let op = wq.algebra().clone();
    let nv = alg.vertex_count();
    let canon: Vec<Representation> = (0..nv)
        .map(|v| Representation::projective(alg.clone(), v))
        .collect();
    let mut mats = Vec::with_capacity(nv);
    for v in 0..nv {
        let basis_q = hom_space(f.target(), &canon[v])?;
        let basis_p = hom_space(f.source(), &canon[v])?;
        let mat = Matrix::from_fn(basis_p.len(), basis_q.len(), |r, c| {
            let precomposed = basis_q[c].compose(f);
            coords_in_basis(&precomposed, &basis_p)
                .expect("precomposition lands in Hom(P, P_v)")[r]
                .clone()
        });
        mats.push(mat);
    }
    let hom_f = RepMap::new(wq, wp, mats)?;
    let _ = op;
    dual_map(&hom_f, &alg)
}

/// `Hom_A(p, A)` as a representation of the opposite algebra.
fn hom_into_regular(p: &Representation) -> Result<Representation> {
    let alg = p.algebra().clone();
    let op = alg.opposite();
    let nv = alg.vertex_count();
    let canon: Vec<Representation> = (0..nv)
        .map(|v| Representation::projective(alg.clone(), v))
        .collect();
    let bases: Vec<Vec<RepMap>> = (0..nv)
        .map(|v| hom_space(p, &canon[v]))
        .collect::<Result<_>>()?;
    let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    // op arrow for a: i -> j goes j -> i and acts by postcomposition with
    // left multiplication L_a : P_j -> P_i.
    let mut arrow_mats = vec![Matrix::zero(0, 0); op.quiver().arrows().len()];
    for (ai, arrow) in alg.quiver().arrows().iter().enumerate() {
        let (i, j) = (arrow.src, arrow.tgt);
        // L_a as a map P_j -> P_i: image of e_j is the arrow element.
        let elem = alg.arrow_element(ai);
        let elem_at_j: Vec<Rat> = super::rep::basis_indices(&alg, i, j)
            .iter()
            .map(|&b| elem[b].clone())
            .collect();
        let l_a = hom_from_projective(&alg, j, &canon[i], &elem_at_j);
        let mat = Matrix::from_fn(dims[i], dims[j], |r, c| {
            let post = l_a.compose(&bases[j][c]);
            coords_in_basis(&post, &bases[i])
                .expect("postcomposition lands in Hom(p, P_i)")[r]
                .clone()
        });
        arrow_mats[ai] = mat;
    }
    Representation::new(op, dims, arrow_mats)
}

/// Inverse Nakayama functor on injectives via the opposite algebra:
/// `nu^{-1}(M) = D(nu_{A^op}(D M))`.
pub fn nu_inv_module(m: &Representation) -> Result<Representation> {
    let alg = m.algebra().clone();
    let op = alg.opposite();
    let dm = dual(m, &op)?;
    if !is_projective(&dm) {
        return Err(Error::NotInDomain(
            "inverse Nakayama applies to add(D A) only".into(),
        ));
    }
    let nu_dm = nu_module(&dm)?;
    dual(&nu_dm, &alg)
}

pub fn nu_inv_map(f: &RepMap) -> Result<RepMap> {
    let alg = f.source().algebra().clone();
    let op = alg.opposite();
    let df = dual_map(f, &op)?;
    let nu_df = nu_map(&df)?;
    dual_map(&nu_df, &alg)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TranslateDirection {
    Tau,
    TauInverse,
}

/// Auslander-Reiten translate: `tau m = ker nu(f)` for `f` the minimal
/// presentation differential, and dually for `tau^{-1}`.
pub fn ar_translate(m: &Representation, direction: TranslateDirection) -> Result<Representation> {
    match direction {
        TranslateDirection::Tau => {
            let pres = minimal_projective_presentation(m)?;
            let nu_f = nu_map(&pres.diff)?;
            Ok(kernel_cokernel(&nu_f).kernel)
        }
        TranslateDirection::TauInverse => {
            let pres = minimal_injective_presentation(m)?;
            let nu_inv_g = nu_inv_map(&pres.diff)?;
            Ok(kernel_cokernel(&nu_inv_g).cokernel)
        }
    }
}

/// Maps `n -> t` that factor through an injective, as a subspace of
/// `Hom(n, t)` coordinates; classically these are the maps extending along
/// the injective envelope.
pub fn hom_through_injectives(
    n: &Representation,
    t: &Representation,
    hom_basis: &[RepMap],
) -> Result<Subspace> {
    let pres = minimal_injective_presentation(n)?;
    let maps_from_env = hom_space(&pres.i_zero, t)?;
    let vecs: Vec<Vec<Rat>> = maps_from_env
        .iter()
        .map(|h| {
            coords_in_basis(&h.compose(&pres.envelope), hom_basis)
                .expect("restriction lies in Hom(n, t)")
        })
        .collect();
    Ok(Subspace::from_vectors(hom_basis.len(), &vecs))
}

