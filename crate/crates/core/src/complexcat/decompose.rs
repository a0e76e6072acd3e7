use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};
use crate::exactla::{column_space, kernel_space, rat, Matrix, Rat, Subspace};
use crate::modcat::{
    basis_indices, decompose_tracked, iso_map, lift_central_idempotent_table, map_from_summands,
    min_poly, rational_roots, realize_projectives, subrep, RepMap, Representation,
};
use crate::quiveralg::present::radical_of_table;
use crate::quiveralg::AlgebraRef;

use super::complex::{layout, summand_offsets, TwoTermComplex};
use super::homotopy::{hom_k, ChainMapRep, ChainPair, HomTarget, HomotopyHom};

/// One indecomposable homotopy summand with its embeddings.
#[derive(Clone, Debug)]
pub struct ComplexSummand {
    pub complex: TwoTermComplex,
    pub multiplicity: usize,
    /// per copy: (inclusion summand -> t, projection t -> summand)
    pub embeddings: Vec<(ChainPair, ChainPair)>,
}

/// Full decomposition of a two-term complex in the homotopy category.
#[derive(Clone, Debug)]
pub struct ComplexDecomposition {
    pub summands: Vec<ComplexSummand>,
    /// contractible pieces `P_v == P_v` stripped, counted per vertex
    pub contractibles: Vec<usize>,
}

impl ComplexDecomposition {
    pub fn distinct_count(&self) -> usize {
        self.summands.len()
    }

    pub fn total_count(&self) -> usize {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }
}

/// Express a projective module in add(A) canonically: multiplicities plus an
/// isomorphism from the canonical realization.
pub(crate) fn canonicalize_projective(
    rep: &Representation,
    seed: u64,
) -> Result<(Vec<usize>, RepMap)> {
    let alg = rep.algebra().clone();
    let nv = alg.vertex_count();
    if rep.total_dim() == 0 {
        let mults = vec![0; nv];
        let realized = realize_projectives(&alg, &mults);
        return Ok((mults, RepMap::zero(realized, rep.clone())?));
    }
    let projectives: Vec<Representation> = (0..nv)
        .map(|v| Representation::projective(alg.clone(), v))
        .collect();
    let tracked = decompose_tracked(rep, seed)?;
    let mut pieces: Vec<(usize, RepMap)> = Vec::new();
    for (leaf, incl) in tracked {
        let mut matched = None;
        for (v, p) in projectives.iter().enumerate() {
            if let Some(iso) = iso_map(p, &leaf)? {
                matched = Some((v, incl.compose(&iso)));
                break;
            }
        }
        let Some(found) = matched else {
            return Err(Error::NotInDomain(
                "complex term has a non-projective summand".into(),
            ));
        };
        pieces.push(found);
    }
    pieces.sort_by_key(|(v, _)| *v);
    let mut mults = vec![0usize; nv];
    for (v, _) in &pieces {
        mults[*v] += 1;
    }
    let realized = realize_projectives(&alg, &mults);
    let maps: Vec<RepMap> = pieces.into_iter().map(|(_, m)| m).collect();
    let u = map_from_summands(&realized, &maps, rep);
    if !u.is_isomorphism() {
        return Err(Error::Presentation(
            "tracked summands failed to reassemble to an isomorphism".into(),
        ));
    }
    Ok((mults, u))
}

/// Projections onto complementary subspaces, per vertex: coordinates in the
/// `a`-basis and in the `b`-basis.
fn complementary_projections(
    rep: &Representation,
    a: &[Subspace],
    b: &[Subspace],
) -> (Vec<Matrix>, Vec<Matrix>) {
    let nv = rep.dims().len();
    let mut pa = Vec::with_capacity(nv);
    let mut pb = Vec::with_capacity(nv);
    for v in 0..nv {
        let da = a[v].dim();
        let db = b[v].dim();
        assert_eq!(da + db, rep.dims()[v], "subspaces are not complementary");
        let full = a[v].basis().vstack(b[v].basis());
        let inv = full
            .transpose()
            .inverse()
            .expect("complementary subspaces stack to an invertible basis");
        pa.push(inv.submatrix(0..da, 0..rep.dims()[v]));
        pb.push(inv.submatrix(da..da + db, 0..rep.dims()[v]));
    }
    (pa, pb)
}

/// Carve the subcomplex spanned by complementary vertexwise subspaces in
/// both degrees; returns the canonicalized piece plus (incl, proj) tracked
/// against the ambient complex.
fn carve_subcomplex(
    t: &TwoTermComplex,
    spaces_m1: &[Subspace],
    comp_m1: &[Subspace],
    spaces_0: &[Subspace],
    comp_0: &[Subspace],
    seed: u64,
) -> Result<(TwoTermComplex, ChainPair, ChainPair)> {
    let (k1, incl1) = subrep(t.term_minus1(), spaces_m1);
    let (k0, incl0) = subrep(t.term_zero(), spaces_0);
    let (proj1_mats, _) = complementary_projections(t.term_minus1(), spaces_m1, comp_m1);
    let (proj0_mats, _) = complementary_projections(t.term_zero(), spaces_0, comp_0);
    let proj1 = RepMap::new(t.term_minus1().clone(), k1.clone(), proj1_mats)?;
    let proj0 = RepMap::new(t.term_zero().clone(), k0.clone(), proj0_mats)?;
    let d_k = proj0.compose(&t.diff().compose(&incl1));
    let (mults1, u1) = canonicalize_projective(&k1, seed)?;
    let (mults0, u0) = canonicalize_projective(&k0, seed)?;
    let u1_inv = u1.inverse().expect("canonicalization iso");
    let u0_inv = u0.inverse().expect("canonicalization iso");
    let diff_c = u0_inv.compose(&d_k).compose(&u1);
    let piece = TwoTermComplex::new(t.algebra().clone(), mults1, mults0, diff_c)?;
    let incl = ChainPair::new(incl1.compose(&u1), incl0.compose(&u0));
    let proj = ChainPair::new(u1_inv.compose(&proj1), u0_inv.compose(&proj0));
    debug_assert!(incl.is_chain_map(&piece, t));
    Ok((piece, incl, proj))
}

/// Both halves of a direct-sum split given complementary subspaces.
#[allow(clippy::type_complexity)]
fn split_complex(
    t: &TwoTermComplex,
    a_m1: Vec<Subspace>,
    b_m1: Vec<Subspace>,
    a_0: Vec<Subspace>,
    b_0: Vec<Subspace>,
    seed: u64,
) -> Result<(
    (TwoTermComplex, ChainPair, ChainPair),
    (TwoTermComplex, ChainPair, ChainPair),
)> {
    let first = carve_subcomplex(t, &a_m1, &b_m1, &a_0, &b_0, seed)?;
    let second = carve_subcomplex(t, &b_m1, &a_m1, &b_0, &a_0, seed)?;
    Ok((first, second))
}

/// Detect a contractible direct summand `P_v = P_v`: a diagonal block of the
/// differential whose lazy-path coefficient is nonzero.
fn find_contractible(t: &TwoTermComplex) -> Option<(usize, usize, usize)> {
    let alg = t.algebra();
    let src_layout = layout(t.mults_minus1());
    let tgt_layout = layout(t.mults_zero());
    let src_offsets = summand_offsets(alg, &src_layout);
    let tgt_offsets = summand_offsets(alg, &tgt_layout);
    for (j, &(v_src, _)) in src_layout.iter().enumerate() {
        for (i, &(v_tgt, _)) in tgt_layout.iter().enumerate() {
            if v_src != v_tgt {
                continue;
            }
            let v = v_src;
            let lazy_pos = basis_indices(alg, v, v)
                .iter()
                .position(|&b| b == alg.idempotent_index(v))
                .expect("lazy path in diagonal stratum");
            let row = tgt_offsets[i][v].0 + lazy_pos;
            let col = src_offsets[j][v].0 + lazy_pos;
            if !t.diff().mat(v).at(row, col).is_zero() {
                return Some((v, j, i));
            }
        }
    }
    None
}

/// Block inclusion of the `j`-th summand of the realization.
fn block_inclusion(
    alg: &AlgebraRef,
    mults: &[usize],
    realized: &Representation,
    j: usize,
) -> RepMap {
    let lay = layout(mults);
    let offs = summand_offsets(alg, &lay);
    let (v, _) = lay[j];
    let p = Representation::projective(alg.clone(), v);
    let mats: Vec<Matrix> = (0..alg.vertex_count())
        .map(|w| {
            let (start, end) = offs[j][w];
            Matrix::from_fn(realized.dims()[w], end - start, |r, c| {
                if r == start + c {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            })
        })
        .collect();
    RepMap::new_unchecked(p, realized.clone(), mats)
}

/// Block projection onto the `i`-th summand of the realization.
fn block_projection(
    alg: &AlgebraRef,
    mults: &[usize],
    realized: &Representation,
    i: usize,
) -> RepMap {
    let lay = layout(mults);
    let offs = summand_offsets(alg, &lay);
    let (v, _) = lay[i];
    let p = Representation::projective(alg.clone(), v);
    let mats: Vec<Matrix> = (0..alg.vertex_count())
        .map(|w| {
            let (start, end) = offs[i][w];
            Matrix::from_fn(end - start, realized.dims()[w], |r, c| {
                if c == start + r {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            })
        })
        .collect();
    RepMap::new_unchecked(realized.clone(), p, mats)
}

struct Leaf {
    complex: TwoTermComplex,
    incl: ChainPair,
    proj: ChainPair,
}

fn strip_one_contractible(
    t: &TwoTermComplex,
    seed: u64,
) -> Result<Option<(usize, TwoTermComplex, ChainPair, ChainPair)>> {
    let Some((v, j, i)) = find_contractible(t) else {
        return Ok(None);
    };
    let alg = t.algebra().clone();
    let u = block_inclusion(&alg, t.mults_minus1(), t.term_minus1(), j);
    let p = block_projection(&alg, t.mults_zero(), t.term_zero(), i);
    let w = p.compose(&t.diff().compose(&u)); // invertible endo of P_v
    let w_inv = w.inverse().expect("lazy coefficient nonzero makes this invertible");
    let e1 = u.compose(&w_inv).compose(&p).compose(t.diff());
    let e0 = t.diff().compose(&u).compose(&w_inv).compose(&p);
    debug_assert_eq!(e1.compose(&e1).mats(), e1.mats());
    debug_assert_eq!(e0.compose(&e0).mats(), e0.mats());
    let nv = alg.vertex_count();
    let ker1: Vec<Subspace> = (0..nv).map(|w| kernel_space(e1.mat(w))).collect();
    let im1: Vec<Subspace> = (0..nv).map(|w| column_space(e1.mat(w))).collect();
    let ker0: Vec<Subspace> = (0..nv).map(|w| kernel_space(e0.mat(w))).collect();
    let im0: Vec<Subspace> = (0..nv).map(|w| column_space(e0.mat(w))).collect();
    let (rest, incl, proj) = carve_subcomplex(t, &ker1, &im1, &ker0, &im0, seed)?;
    Ok(Some((v, rest, incl, proj)))
}

fn end_classes(t: &TwoTermComplex) -> Result<HomotopyHom> {
    hom_k(t, HomTarget::Complex(t), 0)
}

fn pair_total_matrix(p: &ChainPair) -> Matrix {
    let mut blocks: Vec<&Matrix> = p.fm1.mats().iter().collect();
    blocks.extend(p.f0.mats().iter());
    Matrix::block_diag(&blocks)
}

fn try_fitting_pair(
    t: &TwoTermComplex,
    psi: &ChainPair,
    lambda: &Rat,
    seed: u64,
) -> Result<Option<(Leaf, Leaf)>> {
    let id = ChainPair::identity(t);
    let shifted = psi.sub(&id.scale(lambda));
    let n = t.total_term_dim();
    let power = shifted.pow(n);
    let nv = t.algebra().vertex_count();
    let ker_m1: Vec<Subspace> = (0..nv).map(|v| kernel_space(power.fm1.mat(v))).collect();
    let im_m1: Vec<Subspace> = (0..nv).map(|v| column_space(power.fm1.mat(v))).collect();
    let ker_0: Vec<Subspace> = (0..nv).map(|v| kernel_space(power.f0.mat(v))).collect();
    let im_0: Vec<Subspace> = (0..nv).map(|v| column_space(power.f0.mat(v))).collect();
    let kdim: usize = ker_m1.iter().chain(ker_0.iter()).map(Subspace::dim).sum();
    if kdim == 0 || kdim == n {
        return Ok(None);
    }
    let ((c1, i1, p1), (c2, i2, p2)) = split_complex(t, ker_m1, im_m1, ker_0, im_0, seed)?;
    Ok(Some((
        Leaf {
            complex: c1,
            incl: i1,
            proj: p1,
        },
        Leaf {
            complex: c2,
            incl: i2,
            proj: p2,
        },
    )))
}

fn decompose_complex_leaves(
    t: &TwoTermComplex,
    incl: ChainPair,
    proj: ChainPair,
    contractibles: &mut Vec<usize>,
    rng: &mut ChaCha20Rng,
    seed: u64,
) -> Result<Vec<Leaf>> {
    if t.is_zero_complex() {
        return Ok(Vec::new());
    }
    if let Some((v, rest, rincl, rproj)) = strip_one_contractible(t, seed)? {
        contractibles[v] += 1;
        return decompose_complex_leaves(
            &rest,
            incl.compose(&rincl),
            rproj.compose(&proj),
            contractibles,
            rng,
            seed,
        );
    }
    let hom = end_classes(t)?;
    if hom.dim() == 1 {
        return Ok(vec![Leaf {
            complex: t.clone(),
            incl,
            proj,
        }]);
    }
    let mut recurse = |a: Leaf, b: Leaf, rng: &mut ChaCha20Rng| -> Result<Vec<Leaf>> {
        let mut out = decompose_complex_leaves(
            &a.complex,
            incl.compose(&a.incl),
            a.proj.compose(&proj),
            contractibles,
            rng,
            seed,
        )?;
        out.extend(decompose_complex_leaves(
            &b.complex,
            incl.compose(&b.incl),
            b.proj.compose(&proj),
            contractibles,
            rng,
            seed,
        )?);
        Ok(out)
    };
    // candidate endomorphism classes
    let mut candidates: Vec<ChainPair> = hom
        .class_reps()
        .iter()
        .map(|r| r.pair().clone())
        .collect();
    let b = candidates.len();
    for i in 0..b.min(6) {
        for j in (i + 1)..b.min(6) {
            candidates.push(candidates[i].add(&candidates[j]));
            candidates.push(candidates[i].sub(&candidates[j]));
        }
    }
    for _ in 0..30 {
        let coords: Vec<Rat> = (0..b).map(|_| rat(rng.gen_range(-3..=3))).collect();
        if coords.iter().any(|c| !c.is_zero()) {
            candidates.push(hom.class_combination(&coords).pair().clone());
        }
    }
    for psi in &candidates {
        for lambda in rational_roots(&min_poly(&pair_total_matrix(psi))) {
            if let Some((a, bb)) = try_fitting_pair(t, psi, &lambda, seed)? {
                return recurse(a, bb, rng);
            }
        }
    }
    // locality of End_K or a lifted central idempotent
    let table = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
        let fx = hom.class_combination(x);
        let fy = hom.class_combination(y);
        hom.reduce(&ChainMapRep::Pair(fx.pair().compose(fy.pair())))
            .expect("End classes are closed under composition")
    };
    let rad = radical_of_table(hom.dim(), &table);
    if hom.dim() - rad.dim() == 1 {
        return Ok(vec![Leaf {
            complex: t.clone(),
            incl,
            proj,
        }]);
    }
    let one = hom
        .reduce(&ChainMapRep::Pair(ChainPair::identity(t)))
        .expect("identity is an endomorphism class");
    if let Some(e) = lift_central_idempotent_table(hom.dim(), &table, &one, &rad, rng)? {
        let psi = hom.class_combination(&e).pair().clone();
        for lambda in rational_roots(&min_poly(&pair_total_matrix(&psi))) {
            if let Some((a, bb)) = try_fitting_pair(t, &psi, &lambda, seed)? {
                return recurse(a, bb, rng);
            }
        }
    }
    Err(Error::NonSplitEndomorphism(
        "complex endomorphism classes resist idempotent splitting".into(),
    ))
}

/// Homotopy-isomorphism test between minimal indecomposable complexes:
/// some pairwise composite of Hom-class representatives is a componentwise
/// isomorphism iff the complexes are isomorphic in the homotopy category.
pub fn complex_iso(c: &TwoTermComplex, d: &TwoTermComplex) -> Result<bool> {
    if c.mults_minus1() != d.mults_minus1() || c.mults_zero() != d.mults_zero() {
        return Ok(false);
    }
    if c.is_zero_complex() {
        return Ok(true);
    }
    let cd = hom_k(c, HomTarget::Complex(d), 0)?;
    let dc = hom_k(d, HomTarget::Complex(c), 0)?;
    for f in cd.class_reps() {
        for g in dc.class_reps() {
            if f.pair().compose(g.pair()).is_componentwise_iso() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Decompose a two-term complex into indecomposables in the homotopy
/// category. Contractible summands `P = P` are stripped first and reported
/// separately; the remaining minimal part is split by idempotents of its
/// endomorphism classes.
pub fn decompose_complex_with_seed(
    t: &TwoTermComplex,
    seed: u64,
) -> Result<ComplexDecomposition> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut contractibles = vec![0usize; t.algebra().vertex_count()];
    let id = ChainPair::identity(t);
    let leaves = decompose_complex_leaves(
        t,
        id.clone(),
        id,
        &mut contractibles,
        &mut rng,
        seed,
    )?;
    let mut summands: Vec<ComplexSummand> = Vec::new();
    for leaf in leaves {
        let mut placed = false;
        for s in summands.iter_mut() {
            if complex_iso(&leaf.complex, &s.complex)? {
                s.multiplicity += 1;
                s.embeddings.push((leaf.incl.clone(), leaf.proj.clone()));
                placed = true;
                break;
            }
        }
        if !placed {
            summands.push(ComplexSummand {
                complex: leaf.complex,
                multiplicity: 1,
                embeddings: vec![(leaf.incl, leaf.proj)],
            });
        }
    }
    summands.sort_by(|a, b| a.complex.sort_key().cmp(&b.complex.sort_key()));
    Ok(ComplexDecomposition {
        summands,
        contractibles,
    })
}

pub fn decompose_complex(t: &TwoTermComplex) -> Result<ComplexDecomposition> {
    decompose_complex_with_seed(t, crate::modcat::DEFAULT_SEED)
}

/// Build a two-term complex from any map between modules in add(A), by
/// canonicalizing both ends.
pub fn complex_from_projective_map(f: &RepMap, seed: u64) -> Result<TwoTermComplex> {
    let alg = f.source().algebra().clone();
    let (m1, u1) = canonicalize_projective(f.source(), seed)?;
    let (m0, u0) = canonicalize_projective(f.target(), seed)?;
    let u0_inv = u0.inverse().expect("canonicalization iso");
    let diff = u0_inv.compose(&f.compose(&u1));
    TwoTermComplex::new(alg, m1, m0, diff)
}
