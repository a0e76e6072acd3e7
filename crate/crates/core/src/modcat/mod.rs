//! The module category of a quiver algebra: Hom and Ext^1 spaces, duality,
//! the Nakayama functor, the Auslander-Reiten translate, generation and
//! cogeneration tests, annihilators, and decomposition into
//! indecomposables.

mod decompose;
mod functors;
mod hom;
mod rep;

pub use decompose::{
    decompose, decompose_tracked, decompose_with_seed, indec_iso, is_indecomposable,
    is_isomorphic, iso_map, min_poly, rational_roots, split_off_copies, DEFAULT_SEED,
};
pub(crate) use decompose::{combine, lift_central_idempotent_table};
pub use functors::{
    ar_translate, dual, dual_map, hom_through_injectives, is_injective_module, is_projective,
    minimal_injective_presentation, minimal_projective_presentation, nu_inv_map, nu_inv_module,
    nu_map, nu_module, projective_cover, radical_subspaces, InjPresentation, ProjPresentation,
    TranslateDirection,
};
pub use hom::{
    annihilator, coords_in_basis, ext1, gen_cog_membership, hom_dim, hom_space, reject_subspaces,
    trace_subspaces, Ext1, GenCogMode,
};
pub use rep::{
    basis_indices, canonical_modules, contains_identity, hom_from_projective, kernel_cokernel,
    map_from_summands, map_into_summands, quotient_rep, realize_injectives, realize_projectives,
    restrict_scalars, subrep, CanonicalModules, KernelCokernel, RepMap, Representation,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::exactla::rat;
    use crate::quiveralg::{factor_algebra, TwoSidedIdeal};

    #[test]
    fn canonical_dim_vectors_a2() {
        let b = builtins::a2();
        let c = canonical_modules(&b.algebra);
        assert_eq!(c.projectives[0].dims(), &[1, 1]);
        assert_eq!(c.projectives[1].dims(), &[0, 1]);
        assert_eq!(c.injectives[0].dims(), &[1, 0]);
        assert_eq!(c.injectives[1].dims(), &[1, 1]);
        assert_eq!(c.simples[0].dims(), &[1, 0]);
        assert_eq!(c.simples[1].dims(), &[0, 1]);
    }

    #[test]
    fn canonical_dim_vectors_hkm4() {
        let b = builtins::hkm4();
        let c = canonical_modules(&b.algebra);
        assert_eq!(c.projectives[0].dims(), &[1, 1, 1, 0]);
        assert_eq!(c.projectives[1].dims(), &[0, 1, 0, 1]);
        assert_eq!(c.projectives[2].dims(), &[0, 0, 1, 1]);
        assert_eq!(c.projectives[3].dims(), &[0, 0, 0, 1]);
        assert_eq!(c.injectives[0].dims(), &[1, 0, 0, 0]);
        assert_eq!(c.injectives[1].dims(), &[1, 1, 0, 0]);
        assert_eq!(c.injectives[2].dims(), &[1, 0, 1, 0]);
        assert_eq!(c.injectives[3].dims(), &[0, 1, 1, 1]);
        for (i, p) in c.projectives.iter().enumerate() {
            assert_eq!(
                p.total_dim(),
                basis_indices(&b.algebra, i, 0).len()
                    + basis_indices(&b.algebra, i, 1).len()
                    + basis_indices(&b.algebra, i, 2).len()
                    + basis_indices(&b.algebra, i, 3).len()
            );
        }
        // dim A = sum of dims of the projectives
        let total: usize = c.projectives.iter().map(Representation::total_dim).sum();
        assert_eq!(total, b.algebra.dim());
    }

    #[test]
    fn hom_spaces_match_expected_dims() {
        let b = builtins::hkm4();
        let c = canonical_modules(&b.algebra);
        // distinct simples admit no maps
        assert_eq!(hom_dim(&c.simples[0], &c.simples[1]).unwrap(), 0);
        // Hom(P1, I3) is one-dimensional
        assert_eq!(hom_dim(&c.projectives[0], &c.injectives[2]).unwrap(), 1);
        // identity is always present
        for m in b.catalogue_reps() {
            let maps = hom_space(m, m).unwrap();
            assert!(contains_identity(&maps, m));
        }
    }

    #[test]
    fn projective_adjunction_across_catalogues() {
        for b in [builtins::a2(), builtins::a3lin(), builtins::hkm4()] {
            let c = canonical_modules(&b.algebra);
            for m in b.catalogue_reps() {
                for (i, p) in c.projectives.iter().enumerate() {
                    assert_eq!(hom_dim(p, m).unwrap(), m.dims()[i]);
                }
            }
        }
    }

    #[test]
    fn hom_composition_stays_in_hom() {
        let b = builtins::a3lin();
        let reps = b.catalogue_reps();
        let m = reps[0];
        let n = reps[3];
        let p = reps[5];
        let mn = hom_space(m, n).unwrap();
        let np = hom_space(n, p).unwrap();
        let mp = hom_space(m, p).unwrap();
        for f in &mn {
            for g in &np {
                let composite = g.compose(f);
                assert!(coords_in_basis(&composite, &mp).is_some());
            }
        }
    }

    #[test]
    fn kernel_cokernel_of_multiplication_map() {
        let b = builtins::hkm4();
        let c = canonical_modules(&b.algebra);
        // left multiplication by alpha: P2 -> P1
        let alpha = b.algebra.arrow_element(0);
        let at_2: Vec<_> = basis_indices(&b.algebra, 0, 1)
            .iter()
            .map(|&i| alpha[i].clone())
            .collect();
        let f = hom_from_projective(&b.algebra, 1, &c.projectives[0], &at_2);
        let kc = kernel_cokernel(&f);
        assert_eq!(kc.cokernel.dims(), &[1, 0, 1, 0]);
        // identity and zero maps
        let id = RepMap::identity(&c.projectives[0]);
        let kc_id = kernel_cokernel(&id);
        assert!(kc_id.kernel.is_zero());
        assert!(kc_id.cokernel.is_zero());
        let z = RepMap::zero(c.projectives[0].clone(), c.projectives[1].clone()).unwrap();
        let kc_z = kernel_cokernel(&z);
        assert_eq!(kc_z.kernel.dims(), c.projectives[0].dims());
        assert_eq!(kc_z.cokernel.dims(), c.projectives[1].dims());
    }

    #[test]
    fn minimal_presentations() {
        let a2 = builtins::a2();
        let c = canonical_modules(&a2.algebra);
        // projectives are their own covers
        let pres = minimal_projective_presentation(&c.projectives[0]).unwrap();
        assert!(pres.p_minus1.is_zero());
        assert_eq!(pres.p_zero_mults, vec![1, 0]);
        // S1 over a2: P2 -> P1
        let pres = minimal_projective_presentation(&c.simples[0]).unwrap();
        assert_eq!(pres.p_zero_mults, vec![1, 0]);
        assert_eq!(pres.p_minus1_mults, vec![0, 1]);
        // injective side of S3 over hkm4: I3 -> I1
        let h = builtins::hkm4();
        let ch = canonical_modules(&h.algebra);
        let ipres = minimal_injective_presentation(&ch.simples[2]).unwrap();
        assert_eq!(ipres.i_zero_mults, vec![0, 0, 1, 0]);
        assert_eq!(ipres.i_one_mults, vec![1, 0, 0, 0]);
    }

    #[test]
    fn duality_facts() {
        let b = builtins::a2();
        let c = canonical_modules(&b.algebra);
        let op = b.algebra.opposite();
        for (i, s) in c.simples.iter().enumerate() {
            let d = dual(s, &op).unwrap();
            assert_eq!(d.dims(), Representation::simple(op.clone(), i).dims());
        }
        let dp1 = dual(&c.projectives[0], &op).unwrap();
        assert_eq!(dp1.dims(), &[1, 1]);
        // D(P1) is the injective at vertex 1 over the opposite algebra
        assert_eq!(dp1.dims(), Representation::injective(op.clone(), 0).dims());
        assert!(is_injective_module(&dp1));
        for m in b.catalogue_reps() {
            let d = dual(m, &op).unwrap();
            assert_eq!(d.total_dim(), m.total_dim());
            let dd = dual(&d, &b.algebra).unwrap();
            assert_eq!(&dd, m);
        }
    }

    #[test]
    fn nakayama_sends_projectives_to_injectives() {
        let b = builtins::hkm4();
        let c = canonical_modules(&b.algebra);
        for v in 0..4 {
            let nu_p = nu_module(&c.projectives[v]).unwrap();
            assert_eq!(nu_p.dims(), c.injectives[v].dims(), "vertex {v}");
            assert!(indec_iso(&nu_p, &c.injectives[v]).unwrap());
        }
        // nu(P2 -> P1) has kernel S2
        let alpha = b.algebra.arrow_element(0);
        let at_2: Vec<_> = basis_indices(&b.algebra, 0, 1)
            .iter()
            .map(|&i| alpha[i].clone())
            .collect();
        let f = hom_from_projective(&b.algebra, 1, &c.projectives[0], &at_2);
        let nf = nu_map(&f).unwrap();
        let kc = kernel_cokernel(&nf);
        assert_eq!(kc.kernel.dims(), &[0, 1, 0, 0]);
    }

    #[test]
    fn nakayama_inverse_roundtrip_on_maps() {
        let b = builtins::a3lin();
        let c = canonical_modules(&b.algebra);
        for (i, j) in [(1usize, 0usize), (2, 0), (2, 1)] {
            let maps = hom_space(&c.projectives[i], &c.projectives[j]).unwrap();
            for f in maps {
                let back = nu_inv_map(&nu_map(&f).unwrap()).unwrap();
                assert_eq!(back.mats(), f.mats());
            }
        }
    }

    #[test]
    fn nakayama_domain_errors() {
        let b = builtins::a2();
        let c = canonical_modules(&b.algebra);
        match nu_module(&c.simples[0]) {
            Err(crate::error::Error::NotInDomain(_)) => {}
            other => panic!("expected NotInDomain, got {other:?}"),
        }
        match nu_inv_module(&c.simples[1]) {
            Err(crate::error::Error::NotInDomain(_)) => {}
            other => panic!("expected NotInDomain, got {other:?}"),
        }
        // Hom across algebras is a category error
        let other = builtins::a3lin();
        let m = canonical_modules(&other.algebra).simples[0].clone();
        match hom_space(&c.simples[0], &m) {
            Err(crate::error::Error::Category(_)) => {}
            other => panic!("expected CategoryError, got {other:?}"),
        }
    }

    #[test]
    fn ar_translate_facts() {
        let a2 = builtins::a2();
        let c = canonical_modules(&a2.algebra);
        // tau of projectives vanishes
        for p in &c.projectives {
            assert!(ar_translate(p, TranslateDirection::Tau).unwrap().is_zero());
        }
        // tau S1 = S2 over a2
        let t = ar_translate(&c.simples[0], TranslateDirection::Tau).unwrap();
        assert_eq!(t.dims(), c.simples[1].dims());
        // tau^{-1} of injectives vanishes
        for i in &c.injectives {
            assert!(ar_translate(i, TranslateDirection::TauInverse)
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn tau_orbits_of_hkm4() {
        let b = builtins::hkm4();
        // dotted orbits from the AR quiver: tau(I4)=P4, tau(S3)=P2,
        // tau(S2)=P3, tau(I2)=S3, tau(I3)=S2, tau(S1)=P1
        let pairs = [
            ("I4", "P4"),
            ("S3", "P2"),
            ("S2", "P3"),
            ("I2", "S3"),
            ("I3", "S2"),
            ("S1", "P1"),
        ];
        for (from, to) in pairs {
            let m = b.find(from).unwrap();
            let expected = b.find(to).unwrap();
            let t = ar_translate(m, TranslateDirection::Tau).unwrap();
            assert!(indec_iso(&t, expected).unwrap(), "tau({from}) = {to}");
            let back = ar_translate(&t, TranslateDirection::TauInverse).unwrap();
            assert!(indec_iso(&back, m).unwrap(), "tau^-1 tau({from})");
        }
    }

    #[test]
    fn ext_computations() {
        let a2 = builtins::a2();
        let c = canonical_modules(&a2.algebra);
        for p in &c.projectives {
            for m in a2.catalogue_reps() {
                assert_eq!(ext1(p, m).unwrap().dim, 0);
            }
        }
        assert_eq!(ext1(&c.simples[0], &c.simples[1]).unwrap().dim, 1);
    }

    #[test]
    fn ar_formula_on_hkm4_catalogue() {
        // dim Ext^1(m, n) = dim Hom(n, tau m) modulo maps through injectives
        let b = builtins::hkm4();
        for m in b.catalogue_reps() {
            let tau_m = ar_translate(m, TranslateDirection::Tau).unwrap();
            for n in b.catalogue_reps() {
                let e = ext1(m, n).unwrap().dim;
                let hom_basis = hom_space(n, &tau_m).unwrap();
                let through = hom_through_injectives(n, &tau_m, &hom_basis).unwrap();
                assert_eq!(
                    e,
                    hom_basis.len() - through.dim(),
                    "AR formula fails at a pair"
                );
            }
        }
    }

    #[test]
    fn gen_cog_membership_facts() {
        let a2 = builtins::a2();
        let c = canonical_modules(&a2.algebra);
        for m in a2.catalogue_reps() {
            assert!(gen_cog_membership(m, m, GenCogMode::Gen).unwrap());
            assert!(gen_cog_membership(m, m, GenCogMode::Cog).unwrap());
        }
        // S2 is not generated by P1 + S1
        let x = Representation::direct_sum(&[&c.projectives[0], &c.simples[0]]).unwrap();
        assert!(!gen_cog_membership(&x, &c.simples[1], GenCogMode::Gen).unwrap());
        // over hkm4: P4 is cogenerated by I4 + S3 + S2
        let h = builtins::hkm4();
        let y = Representation::direct_sum(&[
            h.find("I4").unwrap(),
            h.find("S3").unwrap(),
            h.find("S2").unwrap(),
        ])
        .unwrap();
        assert!(gen_cog_membership(&y, h.find("P4").unwrap(), GenCogMode::Cog).unwrap());
    }

    #[test]
    fn annihilator_facts() {
        let h = builtins::hkm4();
        let ch = canonical_modules(&h.algebra);
        assert_eq!(annihilator(&ch.regular).dim(), 0);
        // ann(H0) = span{e4, gamma, delta}
        let h0 = Representation::direct_sum(&[
            h.find("P1").unwrap(),
            h.find("I3").unwrap(),
            h.find("I2").unwrap(),
        ])
        .unwrap();
        let ann = annihilator(&h0);
        assert_eq!(ann.dim(), 3);
        for idx in [3usize, 6, 7] {
            assert!(ann.space().contains(&h.algebra.unit_vector(idx)));
        }
        // ann(S1) over a2 = span{e2, a}
        let a2 = builtins::a2();
        let c2 = canonical_modules(&a2.algebra);
        let ann_s1 = annihilator(&c2.simples[0]);
        assert_eq!(ann_s1.dim(), 2);
        assert!(ann_s1.space().contains(&a2.algebra.unit_vector(1)));
        assert!(ann_s1.space().contains(&a2.algebra.unit_vector(2)));
    }

    #[test]
    fn decompose_facts() {
        let h = builtins::hkm4();
        let ch = canonical_modules(&h.algebra);
        // P1 + P1
        let p1p1 =
            Representation::direct_sum(&[&ch.projectives[0], &ch.projectives[0]]).unwrap();
        let d = decompose(&p1p1).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 2);
        assert!(indec_iso(&d[0].0, &ch.projectives[0]).unwrap());
        // H0 of the paper complex decomposes into the three listed modules
        let h0 = Representation::direct_sum(&[
            h.find("P1").unwrap(),
            h.find("I3").unwrap(),
            h.find("I2").unwrap(),
        ])
        .unwrap();
        let d = decompose(&h0).unwrap();
        let mut dims: Vec<Vec<usize>> = d.iter().map(|(r, _)| r.dims().to_vec()).collect();
        dims.sort();
        assert_eq!(
            dims,
            vec![vec![1, 0, 1, 0], vec![1, 1, 0, 0], vec![1, 1, 1, 0]]
        );
        // regular module of a basic algebra
        let a2 = builtins::a2();
        let c2 = canonical_modules(&a2.algebra);
        let d = decompose(&c2.regular).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.iter().all(|(_, c)| *c == 1));
        // idempotence: decomposing a summand returns itself
        for (rep, _) in &d {
            let again = decompose(rep).unwrap();
            assert_eq!(again.len(), 1);
            assert_eq!(again[0].1, 1);
        }
    }

    #[test]
    fn decompose_is_seed_independent_on_catalogues() {
        let h = builtins::hkm4();
        let h0 = Representation::direct_sum(&[
            h.find("P1").unwrap(),
            h.find("I3").unwrap(),
            h.find("I2").unwrap(),
        ])
        .unwrap();
        let baseline: Vec<Vec<usize>> = decompose_with_seed(&h0, 1)
            .unwrap()
            .iter()
            .map(|(r, _)| r.dims().to_vec())
            .collect();
        for seed in 2..8u64 {
            let dims: Vec<Vec<usize>> = decompose_with_seed(&h0, seed)
                .unwrap()
                .iter()
                .map(|(r, _)| r.dims().to_vec())
                .collect();
            assert_eq!(dims, baseline);
        }
    }

    #[test]
    fn non_split_endomorphism_is_reported() {
        // Kronecker quiver, companion matrix of x^2 - 2: End is Q(sqrt 2).
        use crate::exactla::Matrix;
        use crate::quiveralg::{AlgebraPresentation, Arrow, Quiver};
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![
                Arrow { name: "x".into(), src: 0, tgt: 1 },
                Arrow { name: "y".into(), src: 0, tgt: 1 },
            ],
        )
        .unwrap();
        let pres = AlgebraPresentation::new(q, vec![]).unwrap();
        let alg = crate::quiveralg::assemble_algebra(&pres, 8).unwrap();
        let companion = Matrix::from_int_rows(2, 2, &[&[0, 2], &[1, 0]]);
        let rep = Representation::new(
            alg,
            vec![2, 2],
            vec![Matrix::identity(2), companion],
        )
        .unwrap();
        match decompose(&rep) {
            Err(crate::error::Error::NonSplitEndomorphism(_)) => {}
            other => panic!("expected NonSplitEndomorphism, got {other:?}"),
        }
    }

    #[test]
    fn restriction_to_factor_algebra() {
        let h = builtins::hkm4();
        let h0 = Representation::direct_sum(&[
            h.find("P1").unwrap(),
            h.find("I3").unwrap(),
            h.find("I2").unwrap(),
        ])
        .unwrap();
        let ann = annihilator(&h0);
        let (bar, pi) = factor_algebra(&h.algebra, &ann).unwrap();
        assert_eq!(bar.dim(), 5);
        let restricted = restrict_scalars(&h0, &pi).unwrap();
        assert_eq!(restricted.total_dim(), h0.total_dim());
        assert_eq!(annihilator(&restricted).dim(), 0);
    }

    #[test]
    fn rational_roots_and_min_poly() {
        use crate::exactla::Matrix;
        let m = Matrix::from_int_rows(2, 2, &[&[2, 0], &[0, 3]]);
        let p = min_poly(&m);
        // (x-2)(x-3) = 6 - 5x + x^2
        assert_eq!(p, vec![rat(6), rat(-5), rat(1)]);
        assert_eq!(rational_roots(&p), vec![rat(2), rat(3)]);
        let ident = TwoSidedIdeal::zero(builtins::a2().algebra).space().clone();
        assert!(ident.is_zero());
    }
}
