use num_traits::{One, Zero};

use super::{Matrix, Rat};
use crate::error::{Error, Result};

/// Subspace of `Q^ambient`, stored as a reduced row-echelon basis.
///
/// RREF is canonical, so two subspaces are equal exactly when their basis
/// matrices are identical; `PartialEq` below is that syntactic test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the rows of `m`.
    pub fn from_rows(m: &Matrix) -> Self {
        let ambient = m.cols();
        let (r, pivots) = m.rref();
        let basis = r.submatrix(0..pivots.len(), 0..ambient);
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn from_vectors(ambient: usize, vecs: &[Vec<Rat>]) -> Self {
        if vecs.is_empty() {
            return Subspace::zero(ambient);
        }
        Subspace::from_rows(&Matrix::from_rows(ambient, vecs.to_vec()))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rat>> {
        (0..self.dim()).map(|r| self.basis.row(r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Remainder of `v` after eliminating against the basis; zero iff `v` lies
    /// in the subspace. The eliminated coefficients are returned alongside.
    fn reduce(&self, v: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
        assert_eq!(v.len(), self.ambient, "reduce: ambient mismatch");
        let mut rem = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.dim());
        for (row, &p) in self.pivots.iter().enumerate() {
            let c = rem[p].clone();
            if !c.is_zero() {
                for j in 0..self.ambient {
                    let b = self.basis.at(row, j);
                    if !b.is_zero() {
                        rem[j] = &rem[j] - &c * b;
                    }
                }
            }
            coeffs.push(c);
        }
        (rem, coeffs)
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).0.iter().all(|x| x.is_zero())
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient);
        (0..other.dim()).all(|r| self.contains(&other.basis.row(r)))
    }

    /// Coordinates of `v` in the canonical basis; None if `v` is outside.
    pub fn coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let (rem, coeffs) = self.reduce(v);
        if rem.iter().all(|x| x.is_zero()) {
            Some(coeffs)
        } else {
            None
        }
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::from_rows(&self.basis.vstack(&other.basis)))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        // x = a^T * U = b^T * V; solve for (a, b) in the kernel of [U^T | -V^T].
        let sys = self.basis.transpose().hstack(&-&other.basis.transpose());
        let ker = kernel_basis(&sys);
        let vecs: Vec<Vec<Rat>> = ker
            .iter()
            .map(|ab| {
                let a = &ab[..self.dim()];
                let mut x = vec![Rat::zero(); self.ambient];
                for (row, coeff) in a.iter().enumerate() {
                    if !coeff.is_zero() {
                        for j in 0..self.ambient {
                            x[j] = &x[j] + coeff * self.basis.at(row, j);
                        }
                    }
                }
                x
            })
            .collect();
        Ok(Subspace::from_vectors(self.ambient, &vecs))
    }

    /// Surjective coordinate map on `self` vanishing exactly on `sub`.
    ///
    /// Returns a matrix acting on ambient vectors whose restriction to `self`
    /// has kernel `sub` and rank `dim self - dim sub`, together with a section
    /// of representatives (rows) mapping to the unit coordinates.
    pub fn quotient_coords(&self, sub: &Subspace) -> Result<QuotientMap> {
        self.check_ambient(sub)?;
        if !self.contains_space(sub) {
            return Err(Error::Containment(
                "quotient: second space is not contained in the first".into(),
            ));
        }
        let r = self.dim();
        let s = sub.dim();
        // Expansion coordinates on `self`: select pivot entries.
        let mut expand = Matrix::zero(r, self.ambient);
        for (row, &p) in self.pivots.iter().enumerate() {
            expand.set(row, p, Rat::one());
        }
        // `sub` expressed in those coordinates.
        let vprime = Matrix::from_rows(
            r,
            (0..s)
                .map(|i| {
                    self.coords(&sub.basis.row(i))
                        .expect("containment already checked")
                })
                .collect(),
        );
        let (vred, vpiv) = vprime.rref();
        // Reduction modulo sub followed by selection of the non-pivot coords.
        let nonpiv: Vec<usize> = (0..r).filter(|c| !vpiv.contains(c)).collect();
        let mut q = Matrix::zero(nonpiv.len(), self.ambient);
        for (qrow, &c) in nonpiv.iter().enumerate() {
            // coordinate c of the reduced expansion: y[c] - sum_j y[p_j] * vred[j][c]
            for amb in 0..self.ambient {
                let mut val = expand.at(c, amb).clone();
                for (j, &pj) in vpiv.iter().enumerate() {
                    let corr = vred.at(j, c) * expand.at(pj, amb);
                    val -= corr;
                }
                q.set(qrow, amb, val);
            }
        }
        let section = Matrix::from_rows(
            self.ambient,
            nonpiv.iter().map(|&c| self.basis.row(c)).collect(),
        );
        debug_assert!((0..s).all(|i| q.apply(&sub.basis.row(i)).iter().all(|x| x.is_zero())));
        debug_assert_eq!(&q * &section.transpose(), Matrix::identity(nonpiv.len()));
        Ok(QuotientMap {
            map: q,
            section,
            rank: nonpiv.len(),
        })
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Dimension(format!(
                "ambient mismatch: {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }
}

/// Quotient coordinate data produced by [`Subspace::quotient_coords`].
#[derive(Clone, Debug)]
pub struct QuotientMap {
    /// Acts on ambient vectors; restricted to the big space it is surjective
    /// with kernel the small space.
    pub map: Matrix,
    /// Rows are representatives mapping to the unit coordinate vectors.
    pub section: Matrix,
    pub rank: usize,
}

/// Canonical basis of the kernel of `m` (as row vectors, RREF-reduced).
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Rat>> {
    let (r, pivots) = m.rref();
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    let mut vecs = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Rat::zero(); m.cols()];
        v[f] = Rat::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r.at(row, f).clone();
        }
        vecs.push(v);
    }
    vecs
}

/// Kernel of `m` as a canonical subspace of the column space.
pub fn kernel_space(m: &Matrix) -> Subspace {
    let vecs = kernel_basis(m);
    let ker = Subspace::from_vectors(m.cols(), &vecs);
    debug_assert_eq!(m.rank() + ker.dim(), m.cols(), "rank-nullity");
    ker
}

/// Column space of `m` as a canonical subspace.
pub fn column_space(m: &Matrix) -> Subspace {
    Subspace::from_rows(&m.transpose())
}

/// Repeated exact solving against a fixed full-column-rank matrix: the
/// left inverse `(A^T A)^{-1} A^T` is computed once, each solve is a
/// matrix-vector product plus one verification pass.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    matrix: Matrix,
    left_inv: Matrix,
}

impl SpanSolver {
    /// Columns of `matrix` must be linearly independent.
    pub fn new(matrix: Matrix) -> Self {
        let at = matrix.transpose();
        let gram = &at * &matrix;
        let left_inv = &gram
            .inverse()
            .expect("SpanSolver needs independent columns")
            * &at;
        SpanSolver { matrix, left_inv }
    }

    pub fn from_columns(rows: usize, cols: &[Vec<Rat>]) -> Self {
        SpanSolver::new(Matrix::from_fn(rows, cols.len(), |r, c| cols[c][r].clone()))
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    /// The combination of columns with the given coordinates.
    pub fn expand(&self, coords: &[Rat]) -> Vec<Rat> {
        self.matrix.apply(coords)
    }

    /// Coordinates of `v` in the column span; None when outside.
    pub fn solve(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let c = self.left_inv.apply(v);
        if self.matrix.apply(&c) == v {
            Some(c)
        } else {
            None
        }
    }
}

/// Growing row span with incremental elimination; rows are kept mutually
/// reduced so membership tests are a single reduction pass.
#[derive(Clone, Debug, Default)]
pub struct IncrementalSpan {
    /// (pivot column, row) pairs sorted by pivot
    rows: Vec<(usize, Vec<Rat>)>,
}

impl IncrementalSpan {
    pub fn new() -> Self {
        IncrementalSpan { rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            let c = v[*pivot].clone();
            if !c.is_zero() {
                for (j, rj) in row.iter().enumerate() {
                    if !rj.is_zero() {
                        v[j] = &v[j] - &c * rj;
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(Rat::is_zero)
    }

    /// Insert `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Rat::one() / v[pivot].clone();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[pivot].clone();
            if !c.is_zero() {
                for (j, vj) in v.iter().enumerate() {
                    if !vj.is_zero() {
                        row[j] = &row[j] - &c * vj;
                    }
                }
            }
        }
        let pos = self
            .rows
            .binary_search_by_key(&pivot, |(p, _)| *p)
            .unwrap_err();
        self.rows.insert(pos, (pivot, v));
        true
    }
}

/// Result of [`linear_solve`].
#[derive(Clone, Debug)]
pub struct SolveResult {
    pub particular: Option<Vec<Rat>>,
    pub kernel: Subspace,
}

/// Solve `a * x = b`; the kernel spans exactly the homogeneous solutions.
pub fn linear_solve(a: &Matrix, b: Option<&[Rat]>) -> Result<SolveResult> {
    if let Some(rhs) = b {
        if rhs.len() != a.rows() {
            return Err(Error::Dimension(format!(
                "rhs has length {}, matrix has {} rows",
                rhs.len(),
                a.rows()
            )));
        }
    }
    let kernel = kernel_space(a);
    let particular = b.map(|rhs| a.solve(rhs)).unwrap_or(None);
    if let (Some(p), Some(rhs)) = (&particular, b) {
        debug_assert_eq!(a.apply(p), rhs.to_vec());
    }
    Ok(SolveResult { particular, kernel })
}
