//! Quivers, path algebras with relations, factor and opposite algebras,
//! two-sided ideals and algebra morphisms.

mod algebra;
mod assemble;
mod ideal;
mod morphism;
pub(crate) mod present;
mod quiver;

pub use algebra::{AlgebraRef, FdAlgebra};
pub use assemble::{assemble_algebra, DEFAULT_MAX_PATH_LEN};
pub use ideal::{factor_algebra, ideal_from_matrix, kernel_ideal, radical_ideal, TwoSidedIdeal};
pub use morphism::AlgebraMorphism;
pub use quiver::{AlgebraPresentation, Arrow, Path, PathComb, Quiver};

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::error::Error;
    use crate::exactla::{rat, Rat, Subspace};

    pub(crate) fn a2_presentation() -> AlgebraPresentation {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![Arrow {
                name: "a".into(),
                src: 0,
                tgt: 1,
            }],
        )
        .unwrap();
        AlgebraPresentation::new(q, vec![]).unwrap()
    }

    pub(crate) fn hkm4_presentation() -> AlgebraPresentation {
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into(), "4".into()],
            vec![
                Arrow { name: "alpha".into(), src: 0, tgt: 1 },
                Arrow { name: "beta".into(), src: 0, tgt: 2 },
                Arrow { name: "gamma".into(), src: 1, tgt: 3 },
                Arrow { name: "delta".into(), src: 2, tgt: 3 },
            ],
        )
        .unwrap();
        let alpha_gamma = Path::from_arrows(&q, vec![0, 2]).unwrap();
        let beta_delta = Path::from_arrows(&q, vec![1, 3]).unwrap();
        AlgebraPresentation::new(
            q,
            vec![
                PathComb::single(alpha_gamma),
                PathComb::single(beta_delta),
            ],
        )
        .unwrap()
    }

    fn loop_presentation(relations: Vec<Vec<usize>>) -> AlgebraPresentation {
        // one vertex, one loop x; relations given as lists of powers, e.g.
        // [[2, -3]] is unused -- encode combinations directly below instead.
        let q = Quiver::new(
            vec!["v".into()],
            vec![Arrow { name: "x".into(), src: 0, tgt: 0 }],
        )
        .unwrap();
        let combs = relations
            .into_iter()
            .map(|powers| {
                PathComb::new(
                    powers
                        .iter()
                        .enumerate()
                        .map(|(i, &p)| {
                            let sign = if i == 0 { rat(1) } else { rat(-1) };
                            (sign, Path { src: 0, arrows: vec![0; p] })
                        })
                        .collect(),
                )
            })
            .collect();
        AlgebraPresentation::new(q, combs).unwrap()
    }

    #[test]
    fn a2_has_dimension_three() {
        let a = assemble_algebra(&a2_presentation(), 64).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.labels(), &["e1".to_string(), "e2".into(), "a".into()]);
    }

    #[test]
    fn single_vertex_is_the_base_field() {
        let q = Quiver::new(vec!["v".into()], vec![]).unwrap();
        let pres = AlgebraPresentation::new(q, vec![]).unwrap();
        let a = assemble_algebra(&pres, 64).unwrap();
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn hkm4_has_dimension_eight() {
        let a = assemble_algebra(&hkm4_presentation(), 64).unwrap();
        assert_eq!(a.dim(), 8);
        let labels: Vec<&str> = a.labels().iter().map(|s| s.as_str()).collect();
        assert_eq!(
            labels,
            ["e1", "e2", "e3", "e4", "alpha", "beta", "gamma", "delta"]
        );
        // alpha*gamma = 0 in the algebra
        let alpha = a.arrow_element(0).to_vec();
        let gamma = a.arrow_element(2).to_vec();
        assert!(a.multiply(&alpha, &gamma).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn loop_with_cube_zero() {
        let pres = loop_presentation(vec![vec![3]]);
        let a = assemble_algebra(&pres, 64).unwrap();
        assert_eq!(a.dim(), 3); // e, x, x^2
    }

    #[test]
    fn loop_without_relations_fails_loudly() {
        let pres = loop_presentation(vec![]);
        match assemble_algebra(&pres, 10) {
            Err(Error::NotFiniteDimensional(_)) => {}
            other => panic!("expected NotFiniteDimensional, got {other:?}"),
        }
    }

    #[test]
    fn adic_closure_semantics_for_mixed_relations() {
        // x^2 = x^3 generates an ideal whose arrow-adic closure contains x^2
        // (x^2 = sum of x^k - x^{k+1}); the assembled quotient is by that
        // closure, here k[x]/(x^2).
        let pres = loop_presentation(vec![vec![2, 3]]);
        let a = assemble_algebra(&pres, 12).unwrap();
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn mixed_length_admissible_relations() {
        // x^2 - x^3 together with x^4 collapses everything above x.
        let pres = loop_presentation(vec![vec![2, 3], vec![4]]);
        let a = assemble_algebra(&pres, 12).unwrap();
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn opposite_is_an_involution() {
        for pres in [a2_presentation(), hkm4_presentation()] {
            let a = assemble_algebra(&pres, 64).unwrap();
            let op = a.opposite();
            assert_eq!(op.dim(), a.dim());
            let back = op.opposite();
            assert_eq!(*back, *a);
        }
    }

    #[test]
    fn opposite_reverses_composability() {
        let a = assemble_algebra(&hkm4_presentation(), 64).unwrap();
        let op = a.opposite();
        // in A: alpha * gamma is composable (and zero); in A^op the product
        // composes the other way around: gamma^op * alpha^op lands in e4 A e1.
        let alpha = op.arrow_element(0).to_vec();
        let gamma = op.arrow_element(2).to_vec();
        assert!(op.multiply(&gamma, &alpha).iter().all(|x| x.is_zero()));
        assert_eq!(op.quiver().arrow(0).src, 1);
        assert_eq!(op.quiver().arrow(0).tgt, 0);
    }

    #[test]
    fn radical_of_path_algebra_is_arrow_ideal() {
        let a = assemble_algebra(&hkm4_presentation(), 64).unwrap();
        let rad = a.radical();
        assert_eq!(rad.dim(), 4); // alpha, beta, gamma, delta
        for arrow in 0..4 {
            assert!(rad.contains(a.arrow_element(arrow)));
        }
        assert_eq!(a.nilpotency_index(), 2);
    }

    #[test]
    fn factor_by_zero_ideal_is_identity() {
        let a = assemble_algebra(&hkm4_presentation(), 64).unwrap();
        let ideal = TwoSidedIdeal::zero(a.clone());
        let (b, pi) = factor_algebra(&a, &ideal).unwrap();
        assert_eq!(b.dim(), a.dim());
        assert_eq!(b.quiver(), a.quiver());
        assert!(pi.is_surjective());
        assert_eq!(pi.kernel().dim(), 0);
    }

    #[test]
    fn factor_hkm4_by_annihilator_ideal() {
        let a = assemble_algebra(&hkm4_presentation(), 64).unwrap();
        // span{e4, gamma, delta}
        let e4 = a.unit_vector(3);
        let gamma = a.unit_vector(6);
        let delta = a.unit_vector(7);
        let ideal = TwoSidedIdeal::new(
            a.clone(),
            Subspace::from_vectors(8, &[e4, gamma, delta]),
        )
        .unwrap();
        assert_eq!(ideal.dim(), 3);
        let (b, pi) = factor_algebra(&a, &ideal).unwrap();
        assert_eq!(b.dim(), 5);
        assert!(pi.is_surjective());
        let q = b.quiver();
        assert_eq!(q.vertex_names(), &["1".to_string(), "2".into(), "3".into()]);
        let mut ends: Vec<(usize, usize)> = q.arrows().iter().map(|ar| (ar.src, ar.tgt)).collect();
        ends.sort_unstable();
        assert_eq!(ends, vec![(0, 1), (0, 2)]);
        assert!(b.relations().is_empty());
    }

    #[test]
    fn non_ideal_subspace_is_rejected() {
        let a = assemble_algebra(&hkm4_presentation(), 64).unwrap();
        // span{e1} is not closed under right multiplication by alpha.
        let sub = Subspace::from_vectors(8, &[a.unit_vector(0)]);
        match TwoSidedIdeal::new(a, sub) {
            Err(Error::NotAnIdeal(_)) => {}
            other => panic!("expected NotAnIdeal, got {other:?}"),
        }
    }

    #[test]
    fn factor_by_radical_is_semisimple_of_vertex_count() {
        let a = assemble_algebra(&hkm4_presentation(), 64).unwrap();
        let rad = radical_ideal(&a);
        let (b, _) = factor_algebra(&a, &rad).unwrap();
        assert_eq!(b.dim(), a.vertex_count());
        // structure constants: product of distinct idempotents vanishes
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                let p = b.multiply(&b.unit_vector(i), &b.unit_vector(j));
                if i == j {
                    assert_eq!(p, b.unit_vector(i));
                } else {
                    assert!(p.iter().all(|x| x.is_zero()));
                }
            }
        }
    }

    #[test]
    fn factor_by_full_algebra_is_zero() {
        let a = assemble_algebra(&a2_presentation(), 64).unwrap();
        let ideal = TwoSidedIdeal::new(a.clone(), Subspace::full(3)).unwrap();
        let (b, _) = factor_algebra(&a, &ideal).unwrap();
        assert_eq!(b.dim(), 0);
        assert_eq!(b.vertex_count(), 0);
    }

    #[test]
    fn iterated_factors_match_preimage_factor() {
        let a = assemble_algebra(&hkm4_presentation(), 64).unwrap();
        // random-ish generated ideals: take each arrow element as generator
        for g in 4..8 {
            let ideal = TwoSidedIdeal::generated_by(a.clone(), &[a.unit_vector(g)]);
            let (b, pi) = factor_algebra(&a, &ideal).unwrap();
            // second ideal: image of another generator
            let g2 = 4 + ((g - 4) + 1) % 4;
            let img = pi.apply(&a.unit_vector(g2));
            if img.iter().all(Rat::is_zero) {
                continue;
            }
            let ideal2 = TwoSidedIdeal::generated_by(b.clone(), &[img]);
            let (c, _) = factor_algebra(&b, &ideal2).unwrap();
            // preimage sum ideal in a
            let both = TwoSidedIdeal::generated_by(
                a.clone(),
                &[a.unit_vector(g), a.unit_vector(g2)],
            );
            let (d, _) = factor_algebra(&a, &both).unwrap();
            assert_eq!(c.dim(), d.dim());
            assert_eq!(c.quiver().vertex_names(), d.quiver().vertex_names());
        }
    }

    #[test]
    fn idempotents_are_complete() {
        for pres in [a2_presentation(), hkm4_presentation()] {
            let a = assemble_algebra(&pres, 64).unwrap();
            let mut sum = vec![Rat::zero(); a.dim()];
            for v in 0..a.vertex_count() {
                let e = a.idempotent(v);
                assert_eq!(a.multiply(&e, &e), e);
                for (k, x) in e.iter().enumerate() {
                    sum[k] = &sum[k] + x;
                }
            }
            assert_eq!(sum, a.one());
        }
    }
}
