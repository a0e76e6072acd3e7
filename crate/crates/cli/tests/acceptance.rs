//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! All arithmetic is exact, so every comparison is exact equality.

use tiltlab::builtins;
use tiltlab::complexcat::{
    decompose_complex_with_seed, homology_invariants, is_two_term_tilting,
    regular_hom_module, torsion_pair_membership, TwoTermComplex,
};
use tiltlab::hkm::{
    construct_from_torsion, cotilting_verify, endring_verify, tilting_module_verify, TorsionData,
};
use tiltlab::modcat::{
    ar_translate, ext1, hom_space, hom_through_injectives, indec_iso, kernel_cokernel,
    Representation, TranslateDirection, DEFAULT_SEED,
};

mod oracle;

fn pass(criterion: &str) {
    println!("acceptance {criterion}: PASS");
}

/// Criterion 1: the worked example reproduces every embedded value.
#[test]
fn criterion_1_paper_reproduction() {
    let report = tiltlab_cli::paper::paper_example(DEFAULT_SEED).unwrap();
    let items = report.paper_example.as_ref().unwrap();
    for item in items {
        assert!(
            item.pass,
            "{}: expected {}, got {}",
            item.name, item.expected, item.got
        );
    }
    assert!(report.all_pass());
    pass("criterion 1 (paper reproduction: dims, ideals, quivers, kernels)");
}

fn paper_complex() -> (builtins::Builtin, TwoTermComplex) {
    let b = builtins::hkm4();
    let x = b.find("P1").unwrap().clone();
    let y = Representation::direct_sum(&[
        b.find("I4").unwrap(),
        b.find("S3").unwrap(),
        b.find("S2").unwrap(),
    ])
    .unwrap();
    let out = construct_from_torsion(&TorsionData { x, y }, DEFAULT_SEED).unwrap();
    (b, out.complex)
}

/// Criterion 2: torsion membership of all ten catalogue modules matches
/// the expected torsion and torsion-free lists.
#[test]
fn criterion_2_torsion_lists() {
    let (b, t) = paper_complex();
    let expected_t = ["P1", "I2", "I3", "S1"];
    let expected_f = ["P4", "P2", "P3", "I4", "S3", "S2"];
    assert_eq!(expected_t.len() + expected_f.len(), b.catalogue.len());
    for entry in &b.catalogue {
        let m = torsion_pair_membership(&t, &entry.rep).unwrap();
        assert_eq!(
            m.in_t,
            expected_t.contains(&entry.label.as_str()),
            "torsion membership of {}",
            entry.label
        );
        assert_eq!(
            m.in_f,
            expected_f.contains(&entry.label.as_str()),
            "torsion-free membership of {}",
            entry.label
        );
    }
    pass("criterion 2 (torsion lists: 4 torsion, 6 torsion-free)");
}

/// Criterion 3: the construction on (X, Y) returns the four expected
/// summands and passes the tilting check.
#[test]
fn criterion_3_construction_roundtrip() {
    let (_, t) = paper_complex();
    assert!(is_two_term_tilting(&t, DEFAULT_SEED).unwrap().tilting);
    let dec = decompose_complex_with_seed(&t, DEFAULT_SEED).unwrap();
    assert_eq!(dec.distinct_count(), 4);
    assert_eq!(dec.total_count(), 4);
    let expected: Vec<(Vec<usize>, Vec<usize>)> = vec![
        (vec![0, 0, 0, 0], vec![1, 0, 0, 0]),
        (vec![0, 1, 0, 0], vec![1, 0, 0, 0]),
        (vec![0, 0, 1, 0], vec![1, 0, 0, 0]),
        (vec![0, 0, 0, 1], vec![0, 0, 0, 0]),
    ];
    for (m1, m0) in expected {
        assert!(
            dec.summands
                .iter()
                .any(|s| s.complex.mults_minus1() == m1 && s.complex.mults_zero() == m0),
            "missing summand {m1:?} -> {m0:?}"
        );
    }
    pass("criterion 3 (construction returns T1..T4 and is tilting)");
}

/// All tilting complexes found by the independent bounded search, realized
/// through the engine, with agreement checks between oracle and pipeline.
fn oracle_tilting_complexes(name: &str) -> Vec<TwoTermComplex> {
    let b = builtins::by_name(name).unwrap();
    let found = oracle::enumerate_tilting(name);
    assert!(
        found.len() >= 2,
        "{name}: expected at least the stalk and its shift"
    );
    let mut out = Vec::new();
    for cand in &found {
        let t = oracle::realize(&b.algebra, cand);
        // cross-validation: the pipeline agrees with the oracle's verdict
        let verdict = is_two_term_tilting(&t, DEFAULT_SEED).unwrap();
        assert!(
            verdict.tilting,
            "{name}: pipeline disagrees with the oracle on {cand:?}"
        );
        out.push(t);
    }
    // the stalk and the shift are among them
    let n = b.algebra.vertex_count();
    let stalk_found = found.iter().any(|c| c.m0 == vec![1; n] && c.m1 == vec![0; n]);
    let shift_found = found.iter().any(|c| c.m1 == vec![1; n] && c.m0 == vec![0; n]);
    assert!(stalk_found && shift_found, "{name}: stalk or shift missing");
    out
}

/// Criterion 4: every tilting complex in the bounded search space passes
/// the tilting-module and cotilting-module verifications.
#[test]
fn criterion_4_tilting_module_property_suite() {
    let mut total = 0;
    for name in ["a2", "a3lin"] {
        for t in oracle_tilting_complexes(name) {
            let inv = homology_invariants(&t).unwrap();
            let rep = tilting_module_verify(&inv.h0, DEFAULT_SEED).unwrap();
            assert!(rep.verdict, "{name}: H^0 not a tilting module");
            let co = cotilting_verify(&inv.h_minus1_nu, DEFAULT_SEED).unwrap();
            assert!(co.verdict, "{name}: H^-1(nu T) not a cotilting module");
            total += 1;
        }
    }
    pass(&format!(
        "criterion 4 (tilting/cotilting modules over {total} enumerated tilting complexes)"
    ));
}

/// Criterion 5: the endomorphism-ring comparison holds for every complex of
/// criterion 4, on both sides, with exact dimension bookkeeping.
#[test]
fn criterion_5_endring_property_suite() {
    let mut total = 0;
    for name in ["a2", "a3lin"] {
        for t in oracle_tilting_complexes(name) {
            let out = endring_verify(&t, DEFAULT_SEED).unwrap();
            assert!(out.h0_side.kernel_equals_ideal, "{name}: Ker theta != b");
            assert_eq!(
                out.h0_side.end_dim,
                out.h0_side.b_dim - out.h0_side.ideal_dim,
                "{name}: dim End != dim B - dim b"
            );
            assert!(
                out.dual_side.kernel_equals_ideal,
                "{name}: Ker theta' != b'"
            );
            assert_eq!(
                out.dual_side.end_dim,
                out.dual_side.b_dim - out.dual_side.ideal_dim,
                "{name}: dual dimension bookkeeping"
            );
            total += 1;
        }
    }
    pass(&format!(
        "criterion 5 (endomorphism ring comparison over {total} complexes)"
    ));
}

/// Criterion 6: `Hom_K(A, T)` is isomorphic to `H^0(T)` through the
/// explicit evaluation map, over 50 random complexes per built-in algebra.
#[test]
fn criterion_6_hom_module_isomorphism() {
    for name in ["a2", "a3lin", "hkm4"] {
        let b = builtins::by_name(name).unwrap();
        let mut rng_state = 0xACCE55u64;
        let mut rand = move || {
            rng_state = rng_state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (rng_state >> 33) as usize
        };
        let n = b.algebra.vertex_count();
        for _ in 0..50 {
            let m1: Vec<usize> = (0..n).map(|_| rand() % 3).collect();
            let m0: Vec<usize> = (0..n).map(|_| rand() % 3).collect();
            let t = oracle::random_complex(&b.algebra, &m1, &m0, &mut rand);
            let hm = regular_hom_module(&t).unwrap();
            assert!(hm.iso_to_h0.is_isomorphism());
            let inv = homology_invariants(&t).unwrap();
            assert_eq!(hm.rep.total_dim(), inv.h0.total_dim());
        }
    }
    pass("criterion 6 (Hom_K(A, T) = H^0(T) via an explicit isomorphism, 150 random complexes)");
}

/// Criterion 7: the Auslander-Reiten machinery matches the expected
/// tau-orbits and the AR formula holds on all catalogue pairs.
#[test]
fn criterion_7_ar_machinery() {
    // tau S1 = S2 over a2
    let a2 = builtins::a2();
    let s1 = a2.find("S1").unwrap();
    let tau_s1 = ar_translate(s1, TranslateDirection::Tau).unwrap();
    assert_eq!(tau_s1.dims(), &[0, 1]);
    // dotted tau-orbits of the four-vertex example
    let b = builtins::hkm4();
    let orbits = [
        ("I4", "P4"),
        ("S3", "P2"),
        ("S2", "P3"),
        ("I2", "S3"),
        ("I3", "S2"),
        ("S1", "P1"),
    ];
    for (from, to) in orbits {
        let m = b.find(from).unwrap();
        let tau = ar_translate(m, TranslateDirection::Tau).unwrap();
        assert!(
            indec_iso(&tau, b.find(to).unwrap()).unwrap(),
            "tau({from}) = {to}"
        );
        let back = ar_translate(&tau, TranslateDirection::TauInverse).unwrap();
        assert!(indec_iso(&back, m).unwrap(), "tau^-1 tau({from}) = {from}");
    }
    // AR formula and rank-nullity on every catalogue pair
    for m in b.catalogue_reps() {
        let tau_m = ar_translate(m, TranslateDirection::Tau).unwrap();
        for n in b.catalogue_reps() {
            let e = ext1(m, n).unwrap().dim;
            let basis = hom_space(n, &tau_m).unwrap();
            let through = hom_through_injectives(n, &tau_m, &basis).unwrap();
            assert_eq!(e, basis.len() - through.dim(), "AR formula");
            // rank-nullity through an explicit kernel computation
            for f in &basis {
                let kc = kernel_cokernel(f);
                for v in 0..n.dims().len() {
                    assert_eq!(
                        f.mat(v).rank() + kc.kernel.dims()[v],
                        n.dims()[v],
                        "rank-nullity"
                    );
                }
            }
        }
    }
    pass("criterion 7 (tau-orbits, mutual inverses, AR formula, rank-nullity)");
}

/// Criterion 8: the stated negative controls fail for the stated reasons.
#[test]
fn criterion_8_negative_controls() {
    let a2 = builtins::a2();
    // (0 -> P1) fails the tilting check by summand count
    let p1_only = TwoTermComplex::stalk_projectives(a2.algebra.clone(), vec![1, 0]);
    let verdict = is_two_term_tilting(&p1_only, DEFAULT_SEED).unwrap();
    assert!(verdict.presilting_up && verdict.presilting_down);
    assert_eq!(verdict.summand_count, 1);
    assert!(!verdict.tilting);
    // P1 fails the tilting-module verification exactly at the coresolution
    // add-membership (the cokernel is S1, not in add(P1))
    let p1 = a2.find("P1").unwrap();
    let report = tilting_module_verify(p1, DEFAULT_SEED).unwrap();
    assert!(report.pd_le_1);
    assert!(report.ext_self_vanish);
    let cores = report.coresolution.as_ref().unwrap();
    assert!(cores.exact);
    assert_eq!(cores.x1.dims(), &[1, 0]);
    assert!(!cores.x1_in_add);
    assert!(!report.verdict);
    pass("criterion 8 (negative controls fail for the stated reasons)");
}
