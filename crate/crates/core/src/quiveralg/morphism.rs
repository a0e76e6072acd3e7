use crate::error::{Error, Result};
use crate::exactla::{kernel_space, Matrix, Rat, Subspace};

use super::algebra::AlgebraRef;

/// Linear map between algebras preserving identity and multiplication.
#[derive(Clone, Debug)]
pub struct AlgebraMorphism {
    source: AlgebraRef,
    target: AlgebraRef,
    matrix: Matrix,
}

impl AlgebraMorphism {
    pub fn new(source: AlgebraRef, target: AlgebraRef, matrix: Matrix) -> Result<Self> {
        matrix.check_dims(target.dim(), source.dim())?;
        let m = AlgebraMorphism {
            source,
            target,
            matrix,
        };
        m.verify()?;
        Ok(m)
    }

    pub fn identity(algebra: AlgebraRef) -> Self {
        let n = algebra.dim();
        AlgebraMorphism {
            source: algebra.clone(),
            target: algebra,
            matrix: Matrix::identity(n),
        }
    }

    fn verify(&self) -> Result<()> {
        if self.apply(&self.source.one()) != self.target.one() {
            return Err(Error::Presentation("morphism does not preserve 1".into()));
        }
        for i in 0..self.source.dim() {
            for j in 0..self.source.dim() {
                let bi = self.source.unit_vector(i);
                let bj = self.source.unit_vector(j);
                let lhs = self.apply(&self.source.multiply(&bi, &bj));
                let rhs = self
                    .target
                    .multiply(&self.apply(&bi), &self.apply(&bj));
                if lhs != rhs {
                    return Err(Error::Presentation(format!(
                        "morphism not multiplicative on ({}, {})",
                        self.source.label(i),
                        self.source.label(j)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &AlgebraRef {
        &self.source
    }

    pub fn target(&self) -> &AlgebraRef {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Rat]) -> Vec<Rat> {
        self.matrix.apply(x)
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim()
    }

    pub fn kernel(&self) -> Subspace {
        kernel_space(&self.matrix)
    }

    /// Some preimage of a target element, when one exists.
    pub fn preimage(&self, y: &[Rat]) -> Option<Vec<Rat>> {
        self.matrix.solve(y)
    }
}
