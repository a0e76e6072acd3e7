use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Rat};
use crate::modcat::{
    basis_indices, hom_from_projective, kernel_cokernel, nu_map, nu_module, realize_projectives,
    ProjPresentation, RepMap, Representation,
};
use crate::quiveralg::AlgebraRef;

use super::homotopy::{hom_k, ChainMapRep, ChainPair, HomTarget, HomotopyHom};

/// Two-term complex of projectives concentrated in degrees -1 and 0, stored
/// as multiplicity vectors together with a differential between the
/// canonically realized terms.
#[derive(Clone, Debug)]
pub struct TwoTermComplex {
    algebra: AlgebraRef,
    m_minus1: Vec<usize>,
    m_zero: Vec<usize>,
    term_minus1: Representation,
    term_zero: Representation,
    diff: RepMap,
}

impl TwoTermComplex {
    pub fn new(
        algebra: AlgebraRef,
        m_minus1: Vec<usize>,
        m_zero: Vec<usize>,
        diff: RepMap,
    ) -> Result<Self> {
        if m_minus1.len() != algebra.vertex_count() || m_zero.len() != algebra.vertex_count() {
            return Err(Error::Dimension(
                "multiplicity vectors must have one entry per vertex".into(),
            ));
        }
        let term_minus1 = realize_projectives(&algebra, &m_minus1);
        let term_zero = realize_projectives(&algebra, &m_zero);
        if diff.source().dims() != term_minus1.dims() || diff.target().dims() != term_zero.dims() {
            return Err(Error::Dimension(
                "differential does not match the realized terms".into(),
            ));
        }
        Ok(TwoTermComplex {
            algebra,
            m_minus1,
            m_zero,
            term_minus1,
            term_zero,
            diff,
        })
    }

    /// The stalk complex `0 -> A`.
    pub fn stalk_regular(algebra: AlgebraRef) -> Self {
        let mults = vec![1; algebra.vertex_count()];
        Self::stalk_projectives(algebra, mults)
    }

    /// `0 -> (+) P_v^{m_v}` concentrated in degree zero.
    pub fn stalk_projectives(algebra: AlgebraRef, m_zero: Vec<usize>) -> Self {
        let zero_mults = vec![0; algebra.vertex_count()];
        let term_minus1 = realize_projectives(&algebra, &zero_mults);
        let term_zero = realize_projectives(&algebra, &m_zero);
        let diff = RepMap::zero(term_minus1.clone(), term_zero.clone()).unwrap();
        TwoTermComplex {
            algebra,
            m_minus1: zero_mults,
            m_zero,
            term_minus1,
            term_zero,
            diff,
        }
    }

    /// `(+) P_v^{m_v} -> 0` concentrated in degree -1.
    pub fn shifted_projectives(algebra: AlgebraRef, m_minus1: Vec<usize>) -> Self {
        let zero_mults = vec![0; algebra.vertex_count()];
        let term_minus1 = realize_projectives(&algebra, &m_minus1);
        let term_zero = realize_projectives(&algebra, &zero_mults);
        let diff = RepMap::zero(term_minus1.clone(), term_zero.clone()).unwrap();
        TwoTermComplex {
            algebra,
            m_minus1,
            m_zero: zero_mults,
            term_minus1,
            term_zero,
            diff,
        }
    }

    /// The complex `P^{-1} -> P^0` of a minimal projective presentation.
    pub fn from_presentation(algebra: AlgebraRef, pres: &ProjPresentation) -> Self {
        TwoTermComplex {
            algebra,
            m_minus1: pres.p_minus1_mults.clone(),
            m_zero: pres.p_zero_mults.clone(),
            term_minus1: pres.p_minus1.clone(),
            term_zero: pres.p_zero.clone(),
            diff: pres.diff.clone(),
        }
    }

    pub fn direct_sum(parts: &[&TwoTermComplex]) -> Result<Self> {
        let Some(first) = parts.first() else {
            return Err(Error::Dimension("empty direct sum".into()));
        };
        let algebra = first.algebra.clone();
        let nv = algebra.vertex_count();
        let mut m_minus1 = vec![0; nv];
        let mut m_zero = vec![0; nv];
        for p in parts {
            if !p.algebra.same_algebra(&algebra) {
                return Err(Error::Category("direct sum across algebras".into()));
            }
            for v in 0..nv {
                m_minus1[v] += p.m_minus1[v];
                m_zero[v] += p.m_zero[v];
            }
        }
        let term_minus1 = realize_projectives(&algebra, &m_minus1);
        let term_zero = realize_projectives(&algebra, &m_zero);
        // block-diagonal differential, but the canonical realization groups
        // copies by vertex, so route blocks through summand layouts
        let src_layouts: Vec<Vec<(usize, usize)>> =
            parts.iter().map(|p| layout(&p.m_minus1)).collect();
        let tgt_layouts: Vec<Vec<(usize, usize)>> =
            parts.iter().map(|p| layout(&p.m_zero)).collect();
        let sum_src_layout = layout(&m_minus1);
        let sum_tgt_layout = layout(&m_zero);
        // positions of each part's copies within the summed layout
        let mut src_pos = Vec::new();
        let mut seen = vec![0usize; nv];
        for l in &src_layouts {
            let mut positions = Vec::new();
            for &(v, _) in l {
                let idx = sum_src_layout
                    .iter()
                    .position(|&(w, c)| w == v && c == seen[v])
                    .unwrap();
                seen[v] += 1;
                positions.push(idx);
            }
            src_pos.push(positions);
        }
        let mut tgt_pos = Vec::new();
        let mut seen = vec![0usize; nv];
        for l in &tgt_layouts {
            let mut positions = Vec::new();
            for &(v, _) in l {
                let idx = sum_tgt_layout
                    .iter()
                    .position(|&(w, c)| w == v && c == seen[v])
                    .unwrap();
                seen[v] += 1;
                positions.push(idx);
            }
            tgt_pos.push(positions);
        }
        let src_offsets = summand_offsets(&algebra, &sum_src_layout);
        let tgt_offsets = summand_offsets(&algebra, &sum_tgt_layout);
        let mut mats: Vec<Matrix> = (0..nv)
            .map(|v| Matrix::zero(term_zero.dims()[v], term_minus1.dims()[v]))
            .collect();
        for (pi, p) in parts.iter().enumerate() {
            let p_src_offsets = summand_offsets(&algebra, &src_layouts[pi]);
            let p_tgt_offsets = summand_offsets(&algebra, &tgt_layouts[pi]);
            for v in 0..nv {
                let block = p.diff.mat(v);
                for (si, _) in src_layouts[pi].iter().enumerate() {
                    for (ti, _) in tgt_layouts[pi].iter().enumerate() {
                        let (pr0, pr1) = p_tgt_offsets[ti][v];
                        let (pc0, pc1) = p_src_offsets[si][v];
                        let (sr0, _) = tgt_offsets[tgt_pos[pi][ti]][v];
                        let (sc0, _) = src_offsets[src_pos[pi][si]][v];
                        for r in pr0..pr1 {
                            for c in pc0..pc1 {
                                mats[v].set(
                                    sr0 + (r - pr0),
                                    sc0 + (c - pc0),
                                    block.at(r, c).clone(),
                                );
                            }
                        }
                    }
                }
            }
        }
        let diff = RepMap::new(term_minus1.clone(), term_zero.clone(), mats)?;
        Ok(TwoTermComplex {
            algebra,
            m_minus1,
            m_zero,
            term_minus1,
            term_zero,
            diff,
        })
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn mults_minus1(&self) -> &[usize] {
        &self.m_minus1
    }

    pub fn mults_zero(&self) -> &[usize] {
        &self.m_zero
    }

    pub fn term_minus1(&self) -> &Representation {
        &self.term_minus1
    }

    pub fn term_zero(&self) -> &Representation {
        &self.term_zero
    }

    pub fn diff(&self) -> &RepMap {
        &self.diff
    }

    pub fn total_term_dim(&self) -> usize {
        self.term_minus1.total_dim() + self.term_zero.total_dim()
    }

    pub fn is_zero_complex(&self) -> bool {
        self.total_term_dim() == 0
    }

    /// Canonical ordering key: support sequences of the multiplicity
    /// vectors (a complex concentrated in degree 0 sorts first), then the
    /// differential content.
    pub fn sort_key(&self) -> (Vec<usize>, Vec<usize>, Vec<String>) {
        let expand = |mults: &[usize]| -> Vec<usize> {
            let mut out = Vec::new();
            for (v, &k) in mults.iter().enumerate() {
                for _ in 0..k {
                    out.push(v);
                }
            }
            out
        };
        (
            expand(&self.m_minus1),
            expand(&self.m_zero),
            self.diff.mats().iter().map(|m| format!("{m:?}")).collect(),
        )
    }
}

/// Summand layout of a multiplicity vector: (vertex, copy) pairs in
/// realization order.
pub(crate) fn layout(mults: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (v, &k) in mults.iter().enumerate() {
        for c in 0..k {
            out.push((v, c));
        }
    }
    out
}

/// Per-summand (start, end) ranges inside each vertex space of the
/// realization.
pub(crate) fn summand_offsets(
    algebra: &AlgebraRef,
    layout: &[(usize, usize)],
) -> Vec<Vec<(usize, usize)>> {
    let nv = algebra.vertex_count();
    let pdims: Vec<Vec<usize>> = (0..nv)
        .map(|p| {
            (0..nv)
                .map(|w| basis_indices(algebra, p, w).len())
                .collect()
        })
        .collect();
    let mut cursors = vec![0usize; nv];
    let mut out = Vec::with_capacity(layout.len());
    for &(p, _) in layout {
        let mut ranges = Vec::with_capacity(nv);
        for w in 0..nv {
            let d = pdims[p][w];
            ranges.push((cursors[w], cursors[w] + d));
            cursors[w] += d;
        }
        out.push(ranges);
    }
    out
}

/// Homology data of a two-term complex.
#[derive(Clone, Debug)]
pub struct HomologyInvariants {
    pub h0: Representation,
    /// projection `T^0 ->> H^0`
    pub h0_proj: RepMap,
    pub nu_minus1: Representation,
    pub nu_zero: Representation,
    /// `nu(T^{-1}) -> nu(T^0)`
    pub nu_diff: RepMap,
    pub h_minus1_nu: Representation,
    /// inclusion `H^{-1}(nu T) >-> nu(T^{-1})`
    pub h_minus1_incl: RepMap,
}

pub fn homology_invariants(t: &TwoTermComplex) -> Result<HomologyInvariants> {
    let kc = kernel_cokernel(t.diff());
    let nu_diff = nu_map(t.diff())?;
    let nkc = kernel_cokernel(&nu_diff);
    let nu_minus1 = nu_module(t.term_minus1())?;
    let nu_zero = nu_module(t.term_zero())?;
    debug_assert_eq!(nu_diff.source().dims(), nu_minus1.dims());
    debug_assert_eq!(nu_diff.target().dims(), nu_zero.dims());
    Ok(HomologyInvariants {
        h0: kc.cokernel,
        h0_proj: kc.coker_proj,
        nu_minus1,
        nu_zero,
        nu_diff,
        h_minus1_nu: nkc.kernel,
        h_minus1_incl: nkc.kernel_incl,
    })
}

/// Membership of a module in the torsion / torsion-free class of a complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorsionMembership {
    pub in_t: bool,
    pub in_f: bool,
}

pub fn torsion_pair_membership(
    t: &TwoTermComplex,
    m: &Representation,
) -> Result<TorsionMembership> {
    let in_t = hom_k(t, HomTarget::Stalk(m), 1)?.is_zero();
    let in_f = hom_k(t, HomTarget::Stalk(m), 0)?.is_zero();
    Ok(TorsionMembership { in_t, in_f })
}

/// `Hom_K(A, t)` as a right module, with its evaluation isomorphism onto
/// `H^0(t)`.
#[derive(Clone, Debug)]
pub struct RegularHomModule {
    pub rep: Representation,
    pub vertex_homs: Vec<HomotopyHom>,
    pub stalks: Vec<TwoTermComplex>,
    /// the verified isomorphism `rep -> H^0(t)`
    pub iso_to_h0: RepMap,
}

pub fn regular_hom_module(t: &TwoTermComplex) -> Result<RegularHomModule> {
    let alg = t.algebra().clone();
    let nv = alg.vertex_count();
    let stalks: Vec<TwoTermComplex> = (0..nv)
        .map(|v| {
            let mut m = vec![0; nv];
            m[v] = 1;
            TwoTermComplex::stalk_projectives(alg.clone(), m)
        })
        .collect();
    let vertex_homs: Vec<HomotopyHom> = stalks
        .iter()
        .map(|s| hom_k(s, HomTarget::Complex(t), 0))
        .collect::<Result<_>>()?;
    let dims: Vec<usize> = vertex_homs.iter().map(HomotopyHom::dim).collect();
    // arrow action: sigma . a = sigma composed with L_a : P_j -> P_i
    let mut arrow_mats = Vec::new();
    for (ai, arrow) in alg.quiver().arrows().iter().enumerate() {
        let (i, j) = (arrow.src, arrow.tgt);
        let elem = alg.arrow_element(ai);
        let elem_at_j: Vec<Rat> = basis_indices(&alg, i, j)
            .iter()
            .map(|&b| elem[b].clone())
            .collect();
        let proj_i = Representation::projective(alg.clone(), i);
        let l_a = hom_from_projective(&alg, j, &proj_i, &elem_at_j);
        // as a chain pair between the stalk complexes
        let zero_part = RepMap::zero(
            stalks[j].term_minus1().clone(),
            stalks[i].term_minus1().clone(),
        )?;
        let mat = Matrix::from_fn(dims[j], dims[i], |r, c| {
            let sigma = vertex_homs[i].class_reps()[c].pair();
            let composed = ChainPair::new(
                sigma.fm1.compose(&zero_part),
                sigma.f0.compose(&l_a),
            );
            vertex_homs[j]
                .reduce(&ChainMapRep::Pair(composed))
                .expect("composition stays a chain map")[r]
                .clone()
        });
        arrow_mats.push(mat);
    }
    let rep = Representation::new(alg.clone(), dims.clone(), arrow_mats)?;
    // evaluation iso onto H^0: sigma |-> class of sigma^0(e_i)
    let inv = homology_invariants(t)?;
    let mut iso_mats = Vec::new();
    for v in 0..nv {
        let lazy_pos = basis_indices(&alg, v, v)
            .iter()
            .position(|&b| b == alg.idempotent_index(v))
            .expect("lazy path is a basis element");
        let mat = Matrix::from_fn(inv.h0.dims()[v], dims[v], |r, c| {
            let sigma = vertex_homs[v].class_reps()[c].pair();
            let mut unit = vec![Rat::zero(); sigma.f0.source().dims()[v]];
            unit[lazy_pos] = Rat::one();
            let value = sigma.f0.mat(v).apply(&unit);
            inv.h0_proj.mat(v).apply(&value)[r].clone()
        });
        iso_mats.push(mat);
    }
    let iso_to_h0 = RepMap::new(rep.clone(), inv.h0.clone(), iso_mats)?;
    if !iso_to_h0.is_isomorphism() {
        return Err(Error::Presentation(
            "evaluation map Hom_K(A, T) -> H^0(T) failed to be invertible".into(),
        ));
    }
    Ok(RegularHomModule {
        rep,
        vertex_homs,
        stalks,
        iso_to_h0,
    })
}
