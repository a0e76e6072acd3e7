use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{kernel_space, Matrix, Rat, Subspace};

use super::quiver::{Path, PathComb, Quiver};

pub type AlgebraRef = Arc<FdAlgebra>;

/// Finite-dimensional algebra presented over a quiver.
///
/// The basis is uniform: every basis element `b` satisfies
/// `e_src(b) * b * e_tgt(b) = b`, so the multiplication table is graded by
/// (source, target) pairs. Each basis element also carries an expression as
/// a rational combination of arrow paths, which is what lets arbitrary
/// elements act on quiver representations.
#[derive(Clone, Debug)]
pub struct FdAlgebra {
    quiver: Quiver,
    labels: Vec<String>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    /// `mult[i][j]`: coefficients of `b_i * b_j`; empty vector means zero.
    mult: Vec<Vec<Vec<Rat>>>,
    /// Basis index of the vertex idempotent, per quiver vertex.
    idem: Vec<usize>,
    /// Element of the algebra realizing each quiver arrow.
    arrow_elems: Vec<Vec<Rat>>,
    /// Expression of each basis element as a combination of arrow paths.
    basis_expr: Vec<PathComb>,
    /// Spanning set of the kernel of `paths -> algebra`; representations of
    /// the quiver are algebra modules exactly when these act by zero.
    relations: Vec<PathComb>,
    fingerprint: u64,
}

impl PartialEq for FdAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
            && self.labels == other.labels
            && self.mult == other.mult
    }
}

impl FdAlgebra {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn build(
        quiver: Quiver,
        labels: Vec<String>,
        src: Vec<usize>,
        tgt: Vec<usize>,
        mult: Vec<Vec<Vec<Rat>>>,
        idem: Vec<usize>,
        arrow_elems: Vec<Vec<Rat>>,
        basis_expr: Vec<PathComb>,
        relations: Vec<PathComb>,
    ) -> AlgebraRef {
        let mut hasher = DefaultHasher::new();
        labels.hash(&mut hasher);
        quiver.vertex_names().hash(&mut hasher);
        for row in &mult {
            for entry in row {
                for x in entry {
                    x.hash(&mut hasher);
                }
                entry.len().hash(&mut hasher);
            }
        }
        let alg = FdAlgebra {
            quiver,
            labels,
            src,
            tgt,
            mult,
            idem,
            arrow_elems,
            basis_expr,
            relations,
            fingerprint: hasher.finish(),
        };
        debug_assert!(alg.check_invariants().is_ok(), "{:?}", alg.check_invariants());
        Arc::new(alg)
    }

    /// The zero algebra: no vertices, no basis.
    pub fn zero_algebra() -> AlgebraRef {
        FdAlgebra::build(
            Quiver::new(Vec::new(), Vec::new()).unwrap(),
            Vec::new(),
            Vec::new(),
            Vec::new(),
            Vec::new(),
            Vec::new(),
            Vec::new(),
            Vec::new(),
            Vec::new(),
        )
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn basis_src(&self, i: usize) -> usize {
        self.src[i]
    }

    pub fn basis_tgt(&self, i: usize) -> usize {
        self.tgt[i]
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn idempotent_index(&self, v: usize) -> usize {
        self.idem[v]
    }

    pub fn idempotent(&self, v: usize) -> Vec<Rat> {
        self.unit_vector(self.idem[v])
    }

    pub fn arrow_element(&self, a: usize) -> &[Rat] {
        &self.arrow_elems[a]
    }

    pub fn basis_expression(&self, i: usize) -> &PathComb {
        &self.basis_expr[i]
    }

    pub fn relations(&self) -> &[PathComb] {
        &self.relations
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn same_algebra(&self, other: &FdAlgebra) -> bool {
        self.fingerprint == other.fingerprint && self.dim() == other.dim()
    }

    pub fn unit_vector(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim()];
        v[i] = Rat::one();
        v
    }

    pub fn one(&self) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim()];
        for &i in &self.idem {
            v[i] = Rat::one();
        }
        v
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Option<&Vec<Rat>> {
        let entry = &self.mult[i][j];
        if entry.is_empty() {
            None
        } else {
            Some(entry)
        }
    }

    pub fn multiply(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                if let Some(prod) = self.basis_product(i, j) {
                    let c = xi * yj;
                    for (k, pk) in prod.iter().enumerate() {
                        if !pk.is_zero() {
                            out[k] = &out[k] + &c * pk;
                        }
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x` on the algebra.
    pub fn left_mult_matrix(&self, x: &[Rat]) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |r, c| {
            let mut acc = Rat::zero();
            for (i, xi) in x.iter().enumerate() {
                if xi.is_zero() {
                    continue;
                }
                if let Some(prod) = self.basis_product(i, c) {
                    acc += xi * &prod[r];
                }
            }
            acc
        })
    }

    /// Matrix of right multiplication by `x` on the algebra.
    pub fn right_mult_matrix(&self, x: &[Rat]) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |r, c| {
            let mut acc = Rat::zero();
            for (j, xj) in x.iter().enumerate() {
                if xj.is_zero() {
                    continue;
                }
                if let Some(prod) = self.basis_product(c, j) {
                    acc += xj * &prod[r];
                }
            }
            acc
        })
    }

    /// Jacobson radical via the trace form of the regular representation;
    /// valid in characteristic zero.
    pub fn radical(&self) -> Subspace {
        let n = self.dim();
        if n == 0 {
            return Subspace::zero(0);
        }
        let lmats: Vec<Matrix> = (0..n)
            .map(|i| self.left_mult_matrix(&self.unit_vector(i)))
            .collect();
        let gram = Matrix::from_fn(n, n, |i, j| (&lmats[i] * &lmats[j]).trace());
        kernel_space(&gram)
    }

    /// Powers rad, rad^2, ... down to (and excluding) zero.
    pub fn radical_powers(&self) -> Vec<Subspace> {
        let rad = self.radical();
        let mut powers = Vec::new();
        let mut cur = rad.clone();
        while !cur.is_zero() {
            powers.push(cur.clone());
            let mut products = Vec::new();
            for v in cur.basis_vectors() {
                for w in rad.basis_vectors() {
                    products.push(self.multiply(&v, &w));
                }
            }
            cur = Subspace::from_vectors(self.dim(), &products);
        }
        powers
    }

    /// Smallest `m` with rad^m = 0.
    pub fn nilpotency_index(&self) -> usize {
        self.radical_powers().len() + 1
    }

    /// Evaluate a path as an algebra element (product of arrow elements).
    pub fn eval_path(&self, p: &Path) -> Vec<Rat> {
        if p.is_lazy() {
            return self.idempotent(p.src);
        }
        let mut acc = self.arrow_elems[p.arrows[0]].clone();
        for &a in &p.arrows[1..] {
            acc = self.multiply(&acc, &self.arrow_elems[a]);
        }
        acc
    }

    pub fn eval_comb(&self, comb: &PathComb) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim()];
        for (c, p) in &comb.terms {
            let v = self.eval_path(p);
            for (k, vk) in v.iter().enumerate() {
                if !vk.is_zero() {
                    out[k] = &out[k] + c * vk;
                }
            }
        }
        out
    }

    pub fn element_display(&self, x: &[Rat]) -> String {
        let mut parts = Vec::new();
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                parts.push(self.labels[i].clone());
            } else {
                parts.push(format!("{}*{}", c, self.labels[i]));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Opposite algebra: same basis labels, reversed multiplication and
    /// reversed quiver. Applying it twice gives back an equal algebra.
    pub fn opposite(&self) -> AlgebraRef {
        let n = self.dim();
        let mut mult = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                mult[i][j] = self.mult[j][i].clone();
            }
        }
        let quiver = self.quiver.opposite();
        let basis_expr = self
            .basis_expr
            .iter()
            .map(|c| c.reversed(&self.quiver))
            .collect();
        let relations = self
            .relations
            .iter()
            .map(|c| c.reversed(&self.quiver))
            .collect();
        FdAlgebra::build(
            quiver,
            self.labels.clone(),
            self.tgt.clone(),
            self.src.clone(),
            mult,
            self.idem.clone(),
            self.arrow_elems.clone(),
            basis_expr,
            relations,
        )
    }

    fn check_invariants(&self) -> Result<()> {
        let n = self.dim();
        if self.src.len() != n || self.tgt.len() != n || self.labels.len() != n {
            return Err(Error::Presentation("basis bookkeeping length mismatch".into()));
        }
        if self.idem.len() != self.quiver.vertex_count() {
            return Err(Error::Presentation("one idempotent per vertex required".into()));
        }
        // Orthogonal idempotents summing to the identity.
        for (v, &i) in self.idem.iter().enumerate() {
            if self.src[i] != v || self.tgt[i] != v {
                return Err(Error::Presentation("idempotent outside its diagonal stratum".into()));
            }
            for (w, &j) in self.idem.iter().enumerate() {
                let prod = self.multiply(&self.unit_vector(i), &self.unit_vector(j));
                let expected = if v == w {
                    self.unit_vector(i)
                } else {
                    vec![Rat::zero(); n]
                };
                if prod != expected {
                    return Err(Error::Presentation("idempotents not orthogonal".into()));
                }
            }
        }
        let one = self.one();
        for i in 0..n {
            let b = self.unit_vector(i);
            if self.multiply(&one, &b) != b || self.multiply(&b, &one) != b {
                return Err(Error::Presentation("identity fails".into()));
            }
            // Uniformity of the basis.
            let e_s = self.idempotent(self.src[i]);
            let e_t = self.idempotent(self.tgt[i]);
            if self.multiply(&e_s, &b) != b || self.multiply(&b, &e_t) != b {
                return Err(Error::Presentation(format!(
                    "basis element {} not uniform",
                    self.labels[i]
                )));
            }
        }
        // Associativity, spot-checked on all triples for small algebras and
        // on a deterministic sample otherwise.
        let triples: Vec<(usize, usize, usize)> = if n <= 12 {
            (0..n)
                .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
                .collect()
        } else {
            (0..3 * n)
                .map(|t| {
                    let x = t.wrapping_mul(2654435761) % n;
                    let y = t.wrapping_mul(40503) % n;
                    let z = (t * 7 + 3) % n;
                    (x, y, z)
                })
                .collect()
        };
        for (i, j, k) in triples {
            let ij = self.multiply(&self.unit_vector(i), &self.unit_vector(j));
            let jk = self.multiply(&self.unit_vector(j), &self.unit_vector(k));
            let left = self.multiply(&ij, &self.unit_vector(k));
            let right = self.multiply(&self.unit_vector(i), &jk);
            if left != right {
                return Err(Error::Presentation(format!(
                    "associativity fails on triple ({i},{j},{k})"
                )));
            }
        }
        // Arrow elements are uniform and basis expressions reproduce the basis.
        for (a, arrow) in self.quiver.arrows().iter().enumerate() {
            let x = &self.arrow_elems[a];
            let e_s = self.idempotent(arrow.src);
            let e_t = self.idempotent(arrow.tgt);
            let sandwich = self.multiply(&self.multiply(&e_s, x), &e_t);
            if &sandwich != x {
                return Err(Error::Presentation(format!(
                    "arrow element {} not uniform",
                    arrow.name
                )));
            }
        }
        for i in 0..n {
            if self.eval_comb(&self.basis_expr[i]) != self.unit_vector(i) {
                return Err(Error::Presentation(format!(
                    "basis expression for {} does not evaluate back",
                    self.labels[i]
                )));
            }
        }
        Ok(())
    }
}
