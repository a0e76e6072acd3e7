use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, kernel_space, Matrix, Rat, Subspace};
use crate::quiveralg::TwoSidedIdeal;

use super::functors::minimal_projective_presentation;
use super::rep::{kernel_cokernel, RepMap, Representation};

/// Canonical basis of `Hom_A(m, n)` as the solution space of the vertexwise
/// commutation system.
pub fn hom_space(m: &Representation, n: &Representation) -> Result<Vec<RepMap>> {
    if !m.algebra().same_algebra(n.algebra()) {
        return Err(Error::Category("Hom between different algebras".into()));
    }
    let nv = m.dims().len();
    // unknown layout: per vertex, row-major entries of F_v
    let mut offsets = vec![0usize; nv + 1];
    for v in 0..nv {
        offsets[v + 1] = offsets[v] + n.dims()[v] * m.dims()[v];
    }
    let unknowns = offsets[nv];
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (a, arrow) in m.algebra().quiver().arrows().iter().enumerate() {
        let (v, w) = (arrow.src, arrow.tgt);
        let ms = m.arrow_mat(a); // m.dims[w] x m.dims[v]
        let nt = n.arrow_mat(a); // n.dims[w] x n.dims[v]
        // F_w * M_a - N_a * F_v = 0, entry (r, c): r < n.dims[w], c < m.dims[v]
        for r in 0..n.dims()[w] {
            for c in 0..m.dims()[v] {
                let mut row = vec![Rat::zero(); unknowns];
                for k in 0..m.dims()[w] {
                    // F_w[r, k] * M_a[k, c]
                    let coeff = ms.at(k, c);
                    if !coeff.is_zero() {
                        row[offsets[w] + r * m.dims()[w] + k] =
                            &row[offsets[w] + r * m.dims()[w] + k] + coeff;
                    }
                }
                for k in 0..n.dims()[v] {
                    // - N_a[r, k] * F_v[k, c]
                    let coeff = nt.at(r, k);
                    if !coeff.is_zero() {
                        row[offsets[v] + k * m.dims()[v] + c] =
                            &row[offsets[v] + k * m.dims()[v] + c] - coeff;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let basis = if rows.is_empty() {
        // no constraints: every vertexwise family is a map
        let mut vecs = Vec::with_capacity(unknowns);
        for i in 0..unknowns {
            let mut v = vec![Rat::zero(); unknowns];
            v[i] = crate::exactla::rat(1);
            vecs.push(v);
        }
        vecs
    } else {
        kernel_basis(&Matrix::from_rows(unknowns, rows))
    };
    Ok(basis
        .into_iter()
        .map(|flat| RepMap::from_flat(m, n, &flat))
        .collect())
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(hom_space(m, n)?.len())
}

/// Coordinates of `f` in a given Hom basis; None if outside the span.
pub fn coords_in_basis(f: &RepMap, basis: &[RepMap]) -> Option<Vec<Rat>> {
    if basis.is_empty() {
        return if f.is_zero() { Some(Vec::new()) } else { None };
    }
    let cols: Vec<Vec<Rat>> = basis.iter().map(RepMap::flatten).collect();
    let rows = cols[0].len();
    let m = Matrix::from_fn(rows, cols.len(), |r, c| cols[c][r].clone());
    m.solve(&f.flatten())
}

/// Ext^1 computed from the kernel of a minimal projective cover:
/// Ext^1(m, n) = coker(Hom(P^0, n) -> Hom(K, n)).
#[derive(Clone, Debug)]
pub struct Ext1 {
    pub dim: usize,
    /// Representatives in Hom(K, n) spanning the quotient.
    pub representatives: Vec<RepMap>,
}

pub fn ext1(m: &Representation, n: &Representation) -> Result<Ext1> {
    if !m.algebra().same_algebra(n.algebra()) {
        return Err(Error::Category("Ext between different algebras".into()));
    }
    if m.is_zero() || n.is_zero() {
        return Ok(Ext1 {
            dim: 0,
            representatives: Vec::new(),
        });
    }
    let pres = minimal_projective_presentation(m)?;
    let kc = kernel_cokernel(&pres.cover);
    let k = &kc.kernel;
    let incl = &kc.kernel_incl; // K -> P0
    let hom_k_n = hom_space(k, n)?;
    if hom_k_n.is_empty() {
        return Ok(Ext1 {
            dim: 0,
            representatives: Vec::new(),
        });
    }
    let hom_p0_n = hom_space(&pres.p_zero, n)?;
    // image of restriction along the inclusion, in coordinates of hom_k_n
    let mut image_vecs = Vec::new();
    for g in &hom_p0_n {
        let restricted = g.compose(incl);
        let coords = coords_in_basis(&restricted, &hom_k_n)
            .expect("restriction lands in Hom(K, n)");
        image_vecs.push(coords);
    }
    let image = Subspace::from_vectors(hom_k_n.len(), &image_vecs);
    let full = Subspace::full(hom_k_n.len());
    let q = full.quotient_coords(&image)?;
    let representatives = (0..q.rank)
        .map(|i| {
            let coords = q.section.row(i);
            let mut acc = RepMap::zero(k.clone(), n.clone()).unwrap();
            for (j, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    acc = acc.add(&hom_k_n[j].scale(c));
                }
            }
            acc
        })
        .collect();
    Ok(Ext1 {
        dim: q.rank,
        representatives,
    })
}

/// Trace of `x` in `m`: the sum of the images of all maps `x -> m`.
pub fn trace_subspaces(x: &Representation, m: &Representation) -> Result<Vec<Subspace>> {
    let maps = hom_space(x, m)?;
    let nv = m.dims().len();
    let mut spaces = vec![Vec::new(); nv];
    for f in &maps {
        for v in 0..nv {
            for c in 0..f.mat(v).cols() {
                spaces[v].push(f.mat(v).col(c));
            }
        }
    }
    Ok((0..nv)
        .map(|v| Subspace::from_vectors(m.dims()[v], &spaces[v]))
        .collect())
}

/// Reject of `x` in `m`: the joint kernel of all maps `m -> x`.
pub fn reject_subspaces(m: &Representation, x: &Representation) -> Result<Vec<Subspace>> {
    let maps = hom_space(m, x)?;
    let nv = m.dims().len();
    let mut spaces: Vec<Subspace> = (0..nv).map(|v| Subspace::full(m.dims()[v])).collect();
    for f in &maps {
        for v in 0..nv {
            spaces[v] = spaces[v].intersection(&kernel_space(f.mat(v)))?;
        }
    }
    Ok(spaces)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenCogMode {
    Gen,
    Cog,
}

/// Membership in gen(x) (m is a quotient of a finite sum of copies of x) or
/// cog(x) (m embeds into a finite product).
pub fn gen_cog_membership(
    x: &Representation,
    m: &Representation,
    mode: GenCogMode,
) -> Result<bool> {
    match mode {
        GenCogMode::Gen => {
            let tr = trace_subspaces(x, m)?;
            Ok(tr
                .iter()
                .enumerate()
                .all(|(v, s)| s.dim() == m.dims()[v]))
        }
        GenCogMode::Cog => {
            let rej = reject_subspaces(m, x)?;
            Ok(rej.iter().all(Subspace::is_zero))
        }
    }
}

/// Annihilator of `m` as a two-sided ideal: the kernel of the action map
/// `A -> End_k(m)`.
pub fn annihilator(m: &Representation) -> TwoSidedIdeal {
    let alg = m.algebra();
    let d = m.total_dim();
    let n = alg.dim();
    let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for i in 0..n {
        cols.push(m.total_action(&alg.unit_vector(i)).flat().to_vec());
    }
    let action = Matrix::from_fn(d * d, n, |r, c| cols[c][r].clone());
    let kernel = kernel_space(&action);
    TwoSidedIdeal::new(alg.clone(), kernel).expect("annihilators are two-sided")
}
