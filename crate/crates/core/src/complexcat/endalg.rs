use num_traits::Zero;

use crate::error::Result;
use crate::exactla::{Matrix, Rat, SpanSolver, Subspace};
use crate::quiveralg::present::algebra_from_multiplication;
use crate::quiveralg::AlgebraRef;

use super::complex::TwoTermComplex;
use super::decompose::{decompose_complex_with_seed, ComplexDecomposition};
use super::homotopy::{hom_k, ChainMapRep, ChainPair, HomTarget, HomotopyHom};

/// Endomorphism algebra of a two-term complex in the homotopy category.
///
/// The full algebra is carried by homotopy classes; `fdview` is its basic
/// corner, cut out by one idempotent per distinct summand, which is what a
/// quiver presentation can express. For multiplicity-free complexes the
/// corner is the whole algebra.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub complex: TwoTermComplex,
    /// classes of endomorphisms, with representatives
    pub hom: HomotopyHom,
    pub decomposition: ComplexDecomposition,
    /// basic corner as a quiver algebra
    pub fdview: AlgebraRef,
    /// corner basis columns, in class coordinates
    corner_solver: Option<SpanSolver>,
    /// fd coordinates from corner-basis coordinates
    corner_to_fd: Matrix,
    /// the corner unit (sum of one idempotent per class), class coords
    corner_unit: Vec<Rat>,
}

impl EndAlgebra {
    pub fn dim(&self) -> usize {
        self.hom.dim()
    }

    /// Compose two classes given by coordinates.
    pub fn multiply(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let fx = self.hom.class_combination(x);
        let fy = self.hom.class_combination(y);
        self.hom
            .reduce(&ChainMapRep::Pair(fx.pair().compose(fy.pair())))
            .expect("classes are closed under composition")
    }

    pub fn identity_coords(&self) -> Vec<Rat> {
        self.hom
            .reduce(&ChainMapRep::Pair(ChainPair::identity(&self.complex)))
            .expect("identity class")
    }

    /// Class coordinates of the idempotent projecting onto one distinct
    /// summand (all copies).
    pub fn summand_idempotent(&self, index: usize) -> Vec<Rat> {
        let mut acc = vec![Rat::zero(); self.dim()];
        for (incl, proj) in &self.decomposition.summands[index].embeddings {
            let e = incl.compose(proj);
            let coords = self
                .hom
                .reduce(&ChainMapRep::Pair(e))
                .expect("idempotent is an endomorphism class");
            for (k, c) in coords.iter().enumerate() {
                acc[k] = &acc[k] + c;
            }
        }
        acc
    }

    /// Class coordinates of the idempotent of the first copy of a class.
    pub fn class_idempotent(&self, index: usize) -> Vec<Rat> {
        let (incl, proj) = &self.decomposition.summands[index].embeddings[0];
        self.hom
            .reduce(&ChainMapRep::Pair(incl.compose(proj)))
            .expect("idempotent is an endomorphism class")
    }

    pub fn corner_unit(&self) -> &[Rat] {
        &self.corner_unit
    }

    /// Project into the corner and convert to fd-view coordinates.
    pub fn corner_fd_coords(&self, class_coords: &[Rat]) -> Vec<Rat> {
        let projected = self.multiply(
            &self.corner_unit,
            &self.multiply(class_coords, &self.corner_unit),
        );
        match &self.corner_solver {
            None => Vec::new(),
            Some(sv) => self
                .corner_to_fd
                .apply(&sv.solve(&projected).expect("corner projection lands in the corner")),
        }
    }

    /// Class coordinates of an fd-view element.
    pub fn class_coords_from_fd(&self, fd: &[Rat]) -> Option<Vec<Rat>> {
        let solver = self.corner_solver.as_ref()?;
        let corner_coords = self.corner_to_fd.inverse()?.apply(fd);
        Some(solver.expand(&corner_coords))
    }

    /// fd-view coordinates of a class already inside the corner; None when
    /// the class is not a corner element.
    pub fn fd_coords(&self, class_coords: &[Rat]) -> Option<Vec<Rat>> {
        match &self.corner_solver {
            None => {
                if class_coords.iter().all(Rat::is_zero) {
                    Some(Vec::new())
                } else {
                    None
                }
            }
            Some(sv) => Some(self.corner_to_fd.apply(&sv.solve(class_coords)?)),
        }
    }
}

/// Build the endomorphism algebra of `t` with its basic quiver view.
pub fn end_algebra(t: &TwoTermComplex, seed: u64) -> Result<EndAlgebra> {
    let hom = hom_k(t, HomTarget::Complex(t), 0)?;
    let decomposition = decompose_complex_with_seed(t, seed)?;
    let dim = hom.dim();
    let multiply = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
        let fx = hom.class_combination(x);
        let fy = hom.class_combination(y);
        hom.reduce(&ChainMapRep::Pair(fx.pair().compose(fy.pair())))
            .expect("classes are closed under composition")
    };
    // idempotents of the first copy of each class
    let mut class_idems = Vec::new();
    for s in &decomposition.summands {
        let (incl, proj) = &s.embeddings[0];
        class_idems.push(
            hom.reduce(&ChainMapRep::Pair(incl.compose(proj)))
                .expect("summand idempotent class"),
        );
    }
    let mut corner_unit = vec![Rat::zero(); dim];
    for e in &class_idems {
        for (k, c) in e.iter().enumerate() {
            corner_unit[k] = &corner_unit[k] + c;
        }
    }
    // corner basis: e_i . b . e_j over the class basis
    let mut corner_vecs = Vec::new();
    for ei in &class_idems {
        for ej in &class_idems {
            for k in 0..dim {
                let mut unit = vec![Rat::zero(); dim];
                unit[k] = crate::exactla::rat(1);
                corner_vecs.push(multiply(ei, &multiply(&unit, ej)));
            }
        }
    }
    let corner = Subspace::from_vectors(dim, &corner_vecs);
    let corner_dim = corner.dim();
    let (fdview, corner_to_fd, corner_solver) = if corner_dim == 0 {
        (
            crate::quiveralg::FdAlgebra::zero_algebra(),
            Matrix::zero(0, 0),
            None,
        )
    } else {
        let basis_vectors = corner.basis_vectors();
        let solver = SpanSolver::from_columns(dim, &basis_vectors);
        let corner_table = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
            let expand = |c: &[Rat]| -> Vec<Rat> {
                let mut out = vec![Rat::zero(); dim];
                for (i, ci) in c.iter().enumerate() {
                    if !ci.is_zero() {
                        for (j, bj) in basis_vectors[i].iter().enumerate() {
                            out[j] = &out[j] + ci * bj;
                        }
                    }
                }
                out
            };
            let product = multiply(&expand(x), &expand(y));
            solver
                .solve(&product)
                .expect("corner closed under multiplication")
        };
        let idem_vecs: Vec<Vec<Rat>> = class_idems
            .iter()
            .map(|e| solver.solve(e).expect("idempotents lie in the corner"))
            .collect();
        let vertex_names: Vec<String> =
            (1..=class_idems.len()).map(|i| i.to_string()).collect();
        let (alg, to_fd) = algebra_from_multiplication(
            vertex_names,
            idem_vecs,
            corner_dim,
            &corner_table,
            &|_| None,
        )?;
        (alg, to_fd, Some(solver))
    };
    Ok(EndAlgebra {
        complex: t.clone(),
        hom,
        decomposition,
        fdview,
        corner_solver,
        corner_to_fd,
        corner_unit,
    })
}

/// Tilting verdict for a two-term complex: both presilting conditions plus
/// the summand count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltingVerdict {
    pub presilting_up: bool,
    pub presilting_down: bool,
    pub summand_count: usize,
    pub contractibles_stripped: usize,
    pub tilting: bool,
}

pub fn is_two_term_tilting(t: &TwoTermComplex, seed: u64) -> Result<TiltingVerdict> {
    let up = hom_k(t, HomTarget::Complex(t), 1)?.is_zero();
    let down = hom_k(t, HomTarget::Complex(t), -1)?.is_zero();
    let dec = decompose_complex_with_seed(t, seed)?;
    let summand_count = dec.distinct_count();
    let tilting = up && down && summand_count == t.algebra().vertex_count();
    Ok(TiltingVerdict {
        presilting_up: up,
        presilting_down: down,
        summand_count,
        contractibles_stripped: dec.contractibles.iter().sum(),
        tilting,
    })
}
