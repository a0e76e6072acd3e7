//! Exact linear algebra over the rationals.
//!
//! Everything downstream (Hom spaces, kernels, homotopy quotients, radicals)
//! reduces to the primitives here. All scalars are exact `BigRational`s;
//! there is no floating point anywhere in the engine. Subspaces are kept in
//! reduced row-echelon form so that equality of subspaces is equality of
//! basis matrices.

mod matrix;
mod subspace;

pub use matrix::Matrix;
pub use subspace::{
    column_space, kernel_basis, kernel_space, linear_solve, IncrementalSpan, QuotientMap,
    SolveResult, SpanSolver, Subspace,
};

pub type Rat = num_rational::BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use num_traits::{One, Zero};

    use super::*;

    /// Plain Gauss-Jordan elimination written independently of the library
    /// routines: the oracle the `rref`/kernel path is checked against.
    mod oracle {
        use super::{Rat, Zero};

        /// Row-reduce in place, returning pivot columns. No normalization
        /// conventions shared with `Matrix::rref` beyond the math itself.
        pub fn eliminate(rows: &mut [Vec<Rat>]) -> Vec<usize> {
            let nrows = rows.len();
            let ncols = if nrows == 0 { 0 } else { rows[0].len() };
            let mut pivots = Vec::new();
            let mut r = 0;
            for c in 0..ncols {
                let mut sel = None;
                for i in r..nrows {
                    if !rows[i][c].is_zero() {
                        sel = Some(i);
                        break;
                    }
                }
                let Some(i) = sel else { continue };
                rows.swap(i, r);
                let piv = rows[r][c].clone();
                for j in 0..ncols {
                    rows[r][j] = &rows[r][j] / &piv;
                }
                for k in 0..nrows {
                    if k != r && !rows[k][c].is_zero() {
                        let f = rows[k][c].clone();
                        for j in 0..ncols {
                            rows[k][j] = &rows[k][j] - &f * &rows[r][j];
                        }
                    }
                }
                pivots.push(c);
                r += 1;
                if r == nrows {
                    break;
                }
            }
            pivots
        }

        /// Kernel basis by back-substitution over the eliminated system.
        pub fn kernel(mat: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
            let mut rows: Vec<Vec<Rat>> = mat.to_vec();
            let pivots = eliminate(&mut rows);
            let mut basis = Vec::new();
            for free in (0..ncols).filter(|c| !pivots.contains(c)) {
                let mut v = vec![Rat::zero(); ncols];
                v[free] = Rat::from_integer(1.into());
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -rows[i][free].clone();
                }
                basis.push(v);
            }
            basis
        }

        pub fn in_span(span: &[Vec<Rat>], v: &[Rat]) -> bool {
            let mut rows: Vec<Vec<Rat>> = span.to_vec();
            let before = {
                let mut r = rows.clone();
                eliminate(&mut r).len()
            };
            rows.push(v.to_vec());
            let after = eliminate(&mut rows).len();
            before == after
        }
    }

    fn seeded_matrix(rows: usize, cols: usize, seed: u64) -> Matrix {
        // Small deterministic pseudo-random integers; plenty for oracles.
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
        Matrix::from_fn(rows, cols, |_, _| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            rat(((state >> 33) % 7) as i64 - 3)
        })
    }

    #[test]
    fn solve_identity() {
        let a = Matrix::identity(2);
        let res = linear_solve(&a, Some(&[rat(3), rat(5)])).unwrap();
        assert_eq!(res.particular, Some(vec![rat(3), rat(5)]));
        assert_eq!(res.kernel.dim(), 0);
    }

    #[test]
    fn solve_zero_map() {
        let a = Matrix::zero(1, 2);
        let res = linear_solve(&a, Some(&[rat(0)])).unwrap();
        assert_eq!(res.kernel.dim(), 2);
        assert!(res.particular.is_some());
    }

    #[test]
    fn solve_inconsistent() {
        let a = Matrix::zero(1, 2);
        let res = linear_solve(&a, Some(&[rat(1)])).unwrap();
        assert!(res.particular.is_none());
    }

    #[test]
    fn solve_dimension_error() {
        let a = Matrix::identity(2);
        assert!(linear_solve(&a, Some(&[rat(1)])).is_err());
    }

    #[test]
    fn kernel_matches_elimination_oracle() {
        for seed in 0..25u64 {
            let a = seeded_matrix(4, 4, seed);
            let ker = kernel_space(&a);
            let rows: Vec<Vec<Rat>> = (0..4).map(|r| a.row(r)).collect();
            let oracle_ker = oracle::kernel(&rows, 4);
            assert_eq!(ker.dim(), oracle_ker.len(), "seed {seed}");
            for v in ker.basis_vectors() {
                assert!(a.apply(&v).iter().all(|x| x.is_zero()));
                assert!(oracle::in_span(&oracle_ker, &v), "seed {seed}");
            }
            for v in &oracle_ker {
                assert!(ker.contains(v), "seed {seed}");
            }
        }
    }

    #[test]
    fn subspace_equal_spaces() {
        let u = Subspace::from_vectors(3, &[vec![rat(1), rat(2), rat(0)], vec![rat(0), rat(0), rat(1)]]);
        let inter = u.intersection(&u).unwrap();
        assert_eq!(inter, u);
        let q = u.quotient_coords(&u).unwrap();
        assert_eq!(q.rank, 0);
    }

    #[test]
    fn subspace_complementary_lines() {
        let u = Subspace::from_vectors(2, &[vec![rat(1), rat(0)]]);
        let v = Subspace::from_vectors(2, &[vec![rat(1), rat(1)]]);
        assert_eq!(u.sum(&v).unwrap().dim(), 2);
        assert_eq!(u.intersection(&v).unwrap().dim(), 0);
    }

    #[test]
    fn modular_law_against_oracle() {
        for seed in 0..20u64 {
            let u = Subspace::from_rows(&seeded_matrix(3, 5, seed));
            let v = Subspace::from_rows(&seeded_matrix(2, 5, seed + 1000));
            let s = u.sum(&v).unwrap();
            let i = u.intersection(&v).unwrap();
            assert_eq!(u.dim() + v.dim(), s.dim() + i.dim(), "seed {seed}");
            // Oracle cross-check: intersection members lie in both row spans.
            let urows = u.basis_vectors();
            let vrows = v.basis_vectors();
            for w in i.basis_vectors() {
                assert!(oracle::in_span(&urows, &w));
                assert!(oracle::in_span(&vrows, &w));
            }
            // And the sum is no bigger than the oracle's row count bound.
            let mut all = urows.clone();
            all.extend(vrows);
            let mut rows = all.clone();
            assert_eq!(oracle::eliminate(&mut rows).len(), s.dim());
        }
    }

    #[test]
    fn quotient_coords_behaviour() {
        let u = Subspace::full(4);
        let v = Subspace::from_vectors(4, &[vec![rat(1), rat(1), rat(0), rat(0)]]);
        let q = u.quotient_coords(&v).unwrap();
        assert_eq!(q.rank, 3);
        assert!(q.map.apply(&[rat(2), rat(2), rat(0), rat(0)]).iter().all(|x| x.is_zero()));
        // section maps back to unit coordinates
        for i in 0..q.rank {
            let rep = q.section.row(i);
            let coords = q.map.apply(&rep);
            for (j, c) in coords.iter().enumerate() {
                assert_eq!(*c == Rat::one(), i == j);
            }
        }
    }

    #[test]
    fn quotient_requires_containment() {
        let u = Subspace::from_vectors(2, &[vec![rat(1), rat(0)]]);
        let v = Subspace::from_vectors(2, &[vec![rat(0), rat(1)]]);
        assert!(u.quotient_coords(&v).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_int_rows(3, 3, &[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(3));
    }

    mod props {
        use proptest::prelude::*;

        use super::*;

        fn small_matrix() -> impl Strategy<Value = Matrix> {
            (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
                proptest::collection::vec(-4i64..5, r * c).prop_map(move |vals| {
                    Matrix::from_fn(r, c, |i, j| rat(vals[i * c + j]))
                })
            })
        }

        proptest! {
            #[test]
            fn rank_nullity(m in small_matrix()) {
                let ker = kernel_space(&m);
                prop_assert_eq!(m.rank() + ker.dim(), m.cols());
            }

            #[test]
            fn canonical_idempotence(m in small_matrix()) {
                let s = Subspace::from_rows(&m);
                let again = Subspace::from_rows(s.basis());
                prop_assert_eq!(s, again);
            }

            #[test]
            fn sum_contains_both(m in small_matrix(), n in small_matrix()) {
                let cols = m.cols().max(n.cols());
                let pad = |x: &Matrix| Matrix::from_fn(x.rows(), cols, |r, c| {
                    if c < x.cols() { x.at(r, c).clone() } else { Rat::zero() }
                });
                let u = Subspace::from_rows(&pad(&m));
                let v = Subspace::from_rows(&pad(&n));
                let s = u.sum(&v).unwrap();
                prop_assert!(s.contains_space(&u));
                prop_assert!(s.contains_space(&v));
                let i = u.intersection(&v).unwrap();
                prop_assert!(u.contains_space(&i));
                prop_assert!(v.contains_space(&i));
            }
        }
    }
}
