use num_traits::Zero;

use crate::complexcat::{
    end_algebra, homology_invariants, is_two_term_tilting, regular_hom_module, ChainMapRep,
    EndAlgebra, TiltingVerdict, TwoTermComplex,
};
use crate::error::{Error, Result};
use crate::exactla::{kernel_space, Matrix, Rat, SpanSolver, Subspace};
use crate::modcat::{hom_space, nu_map, RepMap, Representation};
use crate::quiveralg::present::algebra_from_multiplication;
use crate::quiveralg::{factor_algebra, AlgebraMorphism, AlgebraRef, FdAlgebra, Quiver, TwoSidedIdeal};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndringSide {
    H0,
    HMinus1Nu,
}

/// One side of the endomorphism-ring comparison. The kernel/annihilator
/// equality and all dimensions are computed at the level of the full
/// endomorphism algebra of the complex; the morphism, ideal and quotient
/// quiver are reported through the basic corner view (which is everything
/// in the multiplicity-free case).
#[derive(Clone, Debug)]
pub struct EndringReport {
    pub side: EndringSide,
    pub b_dim: usize,
    pub ideal_dim: usize,
    pub quotient_dim: usize,
    pub end_dim: usize,
    pub theta: AlgebraMorphism,
    pub theta_surjective: bool,
    pub kernel_equals_ideal: bool,
    /// the annihilator ideal cut down to the basic corner view
    pub ideal: TwoSidedIdeal,
    pub quotient_algebra: AlgebraRef,
    pub quotient_quiver: Quiver,
    pub end_view: AlgebraRef,
}

#[derive(Clone, Debug)]
pub struct EndringOutcome {
    /// verdict on the input; reports are emitted even when not tilting
    pub tilting: TiltingVerdict,
    pub b_dim: usize,
    pub summand_multiplicities: Vec<usize>,
    pub h0_side: EndringReport,
    pub dual_side: EndringReport,
}

struct SideData {
    /// per B-class column: the induced endomorphism in End-basis coords
    theta_class: Matrix,
    /// annihilator of the Hom module, in B class coordinates
    ideal_class: Subspace,
    end_basis: Vec<RepMap>,
}

/// Side 1: theta through the cokernel (the degree-zero homology functor),
/// the ideal through the composition action on `Hom_K(A, T)`.
fn h0_side_data(t: &TwoTermComplex, b: &EndAlgebra) -> Result<SideData> {
    let inv = homology_invariants(t)?;
    let hm = regular_hom_module(t)?;
    let nv = t.algebra().vertex_count();
    let w_dims: Vec<usize> = hm.rep.dims().to_vec();
    let total: usize = w_dims.iter().map(|d| d * d).sum();
    let mut action_cols: Vec<Vec<Rat>> = Vec::with_capacity(b.dim());
    for bclass in b.hom.class_reps() {
        let bpair = bclass.pair();
        let mut flat = Vec::with_capacity(total);
        for i in 0..nv {
            let mat = Matrix::from_fn(w_dims[i], w_dims[i], |r, c| {
                let sigma = hm.vertex_homs[i].class_reps()[c].pair();
                let composed = bpair.compose(sigma);
                hm.vertex_homs[i]
                    .reduce(&ChainMapRep::Pair(composed))
                    .expect("composition of classes")[r]
                    .clone()
            });
            flat.extend_from_slice(mat.flat());
        }
        action_cols.push(flat);
    }
    let action = Matrix::from_fn(total, b.dim(), |r, c| action_cols[c][r].clone());
    let ideal_class = kernel_space(&action);

    let end_basis = hom_space(&inv.h0, &inv.h0)?;
    let end_solver = solver_for(&end_basis);
    let sections: Vec<Matrix> = (0..nv)
        .map(|v| {
            Subspace::full(inv.h0_proj.source().dims()[v])
                .quotient_coords(&crate::exactla::column_space(t.diff().mat(v)))
                .expect("projection data")
                .section
        })
        .collect();
    let mut theta_cols = Vec::with_capacity(b.dim());
    for bclass in b.hom.class_reps() {
        let bpair = bclass.pair();
        let mats: Vec<Matrix> = (0..nv)
            .map(|v| {
                let q_phi = inv.h0_proj.mat(v) * bpair.f0.mat(v);
                &q_phi * &sections[v].transpose()
            })
            .collect();
        let induced = RepMap::new(inv.h0.clone(), inv.h0.clone(), mats)?;
        theta_cols.push(end_coords(&induced, &end_basis, &end_solver)?);
    }
    let theta_class = Matrix::from_fn(end_basis.len(), b.dim(), |r, c| theta_cols[c][r].clone());
    Ok(SideData {
        theta_class,
        ideal_class,
        end_basis,
    })
}

/// Side 2: theta through the kernel of `nu(d)`, the ideal through the
/// composition action on `Hom_K(A, nu T [-1])`.
fn dual_side_data(t: &TwoTermComplex, b: &EndAlgebra) -> Result<SideData> {
    let inv = homology_invariants(t)?;
    let alg = t.algebra().clone();
    let nv = alg.vertex_count();
    let nu_b_m1: Vec<RepMap> = b
        .hom
        .class_reps()
        .iter()
        .map(|r| nu_map(&r.pair().fm1))
        .collect::<Result<_>>()?;
    // W'_i = { eta: P_i -> nu T^{-1} : nu(d) . eta = 0 }
    let projectives: Vec<Representation> = (0..nv)
        .map(|v| Representation::projective(alg.clone(), v))
        .collect();
    let mut wprime_bases: Vec<Vec<RepMap>> = Vec::new();
    for p in &projectives {
        let ambient = hom_space(p, &inv.nu_minus1)?;
        if ambient.is_empty() {
            wprime_bases.push(Vec::new());
            continue;
        }
        let cols: Vec<Vec<Rat>> = ambient
            .iter()
            .map(|eta| inv.nu_diff.compose(eta).flatten())
            .collect();
        let rows = cols[0].len();
        let combos = if rows == 0 {
            Subspace::full(ambient.len()).basis_vectors()
        } else {
            let sys = Matrix::from_fn(rows, ambient.len(), |r, c| cols[c][r].clone());
            kernel_space(&sys).basis_vectors()
        };
        wprime_bases.push(
            combos
                .iter()
                .map(|coords| crate::modcat::combine(&ambient, coords))
                .collect(),
        );
    }
    let wprime_solvers: Vec<Option<SpanSolver>> = wprime_bases
        .iter()
        .map(|basis| {
            if basis.is_empty() {
                None
            } else {
                let cols: Vec<Vec<Rat>> = basis.iter().map(RepMap::flatten).collect();
                Some(SpanSolver::from_columns(cols[0].len(), &cols))
            }
        })
        .collect();
    let w_dims: Vec<usize> = wprime_bases.iter().map(Vec::len).collect();
    let total: usize = w_dims.iter().map(|d| d * d).sum();
    let mut action_cols: Vec<Vec<Rat>> = Vec::with_capacity(b.dim());
    for nb in &nu_b_m1 {
        let mut flat = Vec::with_capacity(total);
        for i in 0..nv {
            let mat = Matrix::from_fn(w_dims[i], w_dims[i], |r, c| {
                let composed = nb.compose(&wprime_bases[i][c]);
                wprime_solvers[i]
                    .as_ref()
                    .expect("nonzero basis")
                    .solve(&composed.flatten())
                    .expect("action preserves the kernel condition")[r]
                    .clone()
            });
            flat.extend_from_slice(mat.flat());
        }
        action_cols.push(flat);
    }
    let action = Matrix::from_fn(total, b.dim(), |r, c| action_cols[c][r].clone());
    let ideal_class = kernel_space(&action);
    // theta': restriction of nu(b) to the kernel representation
    let k = &inv.h_minus1_nu;
    let end_basis = hom_space(k, k)?;
    let end_solver = solver_for(&end_basis);
    let mut theta_cols = Vec::with_capacity(b.dim());
    for nb in &nu_b_m1 {
        let mats: Vec<Matrix> = (0..nv)
            .map(|v| {
                let incl = inv.h_minus1_incl.mat(v);
                let rhs = nb.mat(v) * incl;
                incl.solve_matrix(&rhs)
                    .expect("nu(b) preserves the kernel of nu(d)")
            })
            .collect();
        let induced = RepMap::new(k.clone(), k.clone(), mats)?;
        theta_cols.push(end_coords(&induced, &end_basis, &end_solver)?);
    }
    let theta_class = Matrix::from_fn(end_basis.len(), b.dim(), |r, c| theta_cols[c][r].clone());
    Ok(SideData {
        theta_class,
        ideal_class,
        end_basis,
    })
}

fn solver_for(basis: &[RepMap]) -> Option<SpanSolver> {
    if basis.is_empty() {
        None
    } else {
        let cols: Vec<Vec<Rat>> = basis.iter().map(RepMap::flatten).collect();
        Some(SpanSolver::from_columns(cols[0].len(), &cols))
    }
}

fn end_coords(
    f: &RepMap,
    _basis: &[RepMap],
    solver: &Option<SpanSolver>,
) -> Result<Vec<Rat>> {
    match solver {
        None => {
            if f.is_zero() {
                Ok(Vec::new())
            } else {
                Err(Error::Presentation("induced map outside End".into()))
            }
        }
        Some(sv) => sv
            .solve(&f.flatten())
            .ok_or_else(|| Error::Presentation("induced map outside End".into())),
    }
}

fn finish_side(side: EndringSide, b: &EndAlgebra, data: SideData) -> Result<EndringReport> {
    let b_dim = b.dim();
    let end_dim = data.end_basis.len();
    let ideal_dim = data.ideal_class.dim();
    // the theorem-level check: kernel of the homology-induced map equals
    // the annihilator of the Hom module, inside the full algebra
    let kernel_equals_ideal = kernel_space(&data.theta_class) == data.ideal_class;
    let theta_surjective = data.theta_class.rank() == end_dim;

    // basic corner display: ideal, quotient and the morphism between views
    let ideal_fd_vecs: Vec<Vec<Rat>> = data
        .ideal_class
        .basis_vectors()
        .iter()
        .map(|v| b.corner_fd_coords(v))
        .collect();
    let ideal_space = Subspace::from_vectors(b.fdview.dim(), &ideal_fd_vecs);
    let ideal = TwoSidedIdeal::new(b.fdview.clone(), ideal_space)?;
    let (quotient_algebra, _pi) = factor_algebra(&b.fdview, &ideal)?;

    // End-side corner through the theta images of the class idempotents
    let class_count = b.decomposition.summands.len();
    let f_vecs: Vec<Vec<Rat>> = (0..class_count)
        .map(|i| data.theta_class.apply(&b.class_idempotent(i)))
        .collect();
    let end_mult = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
        let solver = solver_for(&data.end_basis);
        let fx = crate::modcat::combine(&data.end_basis, x);
        let fy = crate::modcat::combine(&data.end_basis, y);
        end_coords(&fx.compose(&fy), &data.end_basis, &solver).expect("End composition")
    };
    let mut corner_vecs = Vec::new();
    for fi in &f_vecs {
        for fj in &f_vecs {
            for k in 0..end_dim {
                let mut unit = vec![Rat::zero(); end_dim];
                unit[k] = crate::exactla::rat(1);
                corner_vecs.push(end_mult(fi, &end_mult(&unit, fj)));
            }
        }
    }
    let end_corner = Subspace::from_vectors(end_dim, &corner_vecs);
    let (end_view, theta) = if end_corner.dim() == 0 {
        let zero = FdAlgebra::zero_algebra();
        let theta = AlgebraMorphism::new(
            b.fdview.clone(),
            zero.clone(),
            Matrix::zero(0, b.fdview.dim()),
        )?;
        (zero, theta)
    } else {
        let basis_vectors = end_corner.basis_vectors();
        let corner_solver = SpanSolver::from_columns(end_dim, &basis_vectors);
        let expand = |c: &[Rat]| -> Vec<Rat> {
            let mut out = vec![Rat::zero(); end_dim];
            for (i, ci) in c.iter().enumerate() {
                if !ci.is_zero() {
                    for (j, bj) in basis_vectors[i].iter().enumerate() {
                        out[j] = &out[j] + ci * bj;
                    }
                }
            }
            out
        };
        let corner_table = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
            corner_solver
                .solve(&end_mult(&expand(x), &expand(y)))
                .expect("corner closed under composition")
        };
        let mut vertex_names = Vec::new();
        let mut idem_vecs = Vec::new();
        for (i, f) in f_vecs.iter().enumerate() {
            if f.iter().any(|x| !x.is_zero()) {
                vertex_names.push((i + 1).to_string());
                idem_vecs.push(
                    corner_solver
                        .solve(f)
                        .expect("theta images of idempotents lie in the corner"),
                );
            }
        }
        let (end_view, end_to_fd) = algebra_from_multiplication(
            vertex_names,
            idem_vecs,
            end_corner.dim(),
            &corner_table,
            &|_| None,
        )?;
        // theta on the corner views: fd(B) -> corner class -> End corner fd
        let mut cols = Vec::with_capacity(b.fdview.dim());
        for k in 0..b.fdview.dim() {
            let fd_unit = {
                let mut v = vec![Rat::zero(); b.fdview.dim()];
                v[k] = crate::exactla::rat(1);
                v
            };
            let class = b
                .class_coords_from_fd(&fd_unit)
                .ok_or_else(|| Error::Presentation("corner view coordinates".into()))?;
            let image = data.theta_class.apply(&class);
            let corner_coords = corner_solver
                .solve(&image)
                .ok_or_else(|| Error::Presentation("theta image outside the corner".into()))?;
            cols.push(end_to_fd.apply(&corner_coords));
        }
        let theta_matrix = Matrix::from_fn(end_view.dim(), b.fdview.dim(), |r, c| {
            cols[c][r].clone()
        });
        let theta = AlgebraMorphism::new(b.fdview.clone(), end_view.clone(), theta_matrix)?;
        (end_view, theta)
    };
    Ok(EndringReport {
        side,
        b_dim,
        ideal_dim,
        quotient_dim: b_dim - ideal_dim,
        end_dim,
        theta,
        theta_surjective,
        kernel_equals_ideal,
        ideal,
        quotient_quiver: quotient_algebra.quiver().clone(),
        quotient_algebra,
        end_view,
    })
}

/// Both endomorphism-ring comparisons for a two-term complex: the kernel of
/// the map induced by homology must coincide with the annihilator of the
/// corresponding Hom module.
pub fn endring_verify(t: &TwoTermComplex, seed: u64) -> Result<EndringOutcome> {
    let tilting = is_two_term_tilting(t, seed)?;
    let b = end_algebra(t, seed)?;
    let h0 = finish_side(EndringSide::H0, &b, h0_side_data(t, &b)?)?;
    let dual = finish_side(EndringSide::HMinus1Nu, &b, dual_side_data(t, &b)?)?;
    Ok(EndringOutcome {
        tilting,
        b_dim: b.dim(),
        summand_multiplicities: b
            .decomposition
            .summands
            .iter()
            .map(|s| s.multiplicity)
            .collect(),
        h0_side: h0,
        dual_side: dual,
    })
}
