//! Built-in fixture algebras with complete catalogues of indecomposables.
//!
//! `a2` is the quiver 1 -> 2, `a3lin` the linear 1 -> 2 -> 3, and `hkm4` the
//! four-vertex commutative-square-shaped algebra with both length-two paths
//! zero. All three are representation finite and their catalogues are the
//! deduplicated canonical modules.

use crate::exactla::rat;
use crate::modcat::{canonical_modules, Representation};
use crate::quiveralg::{
    assemble_algebra, AlgebraPresentation, AlgebraRef, Arrow, Path, PathComb, Quiver,
    DEFAULT_MAX_PATH_LEN,
};

#[derive(Clone, Debug)]
pub struct CatalogueEntry {
    pub label: String,
    pub rep: Representation,
}

#[derive(Clone, Debug)]
pub struct Builtin {
    pub name: &'static str,
    pub presentation: AlgebraPresentation,
    pub algebra: AlgebraRef,
    /// Complete list of indecomposables, pairwise non-isomorphic.
    pub catalogue: Vec<CatalogueEntry>,
}

impl Builtin {
    pub fn catalogue_reps(&self) -> Vec<&Representation> {
        self.catalogue.iter().map(|e| &e.rep).collect()
    }

    pub fn find(&self, label: &str) -> Option<&Representation> {
        self.catalogue
            .iter()
            .find(|e| e.label == label)
            .map(|e| &e.rep)
    }
}

pub fn a2_presentation() -> AlgebraPresentation {
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

pub fn a3lin_presentation() -> AlgebraPresentation {
    let q = Quiver::new(
        vec!["1".into(), "2".into(), "3".into()],
        vec![
            Arrow { name: "a".into(), src: 0, tgt: 1 },
            Arrow { name: "b".into(), src: 1, tgt: 2 },
        ],
    )
    .unwrap();
    AlgebraPresentation::new(q, vec![]).unwrap()
}

pub fn hkm4_presentation() -> AlgebraPresentation {
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
    let alpha_gamma = PathComb::new(vec![(rat(1), Path::from_arrows(&q, vec![0, 2]).unwrap())]);
    let beta_delta = PathComb::new(vec![(rat(1), Path::from_arrows(&q, vec![1, 3]).unwrap())]);
    AlgebraPresentation::new(q, vec![alpha_gamma, beta_delta]).unwrap()
}

fn build(name: &'static str, pres: AlgebraPresentation, labels: &[(&str, Kind)]) -> Builtin {
    let algebra = assemble_algebra(&pres, DEFAULT_MAX_PATH_LEN).unwrap();
    let canon = canonical_modules(&algebra);
    let catalogue = labels
        .iter()
        .map(|(label, kind)| {
            let rep = match kind {
                Kind::P(i) => canon.projectives[*i].clone(),
                Kind::I(i) => canon.injectives[*i].clone(),
                Kind::S(i) => canon.simples[*i].clone(),
            };
            CatalogueEntry {
                label: (*label).to_string(),
                rep,
            }
        })
        .collect();
    Builtin {
        name,
        presentation: pres,
        algebra,
        catalogue,
    }
}

enum Kind {
    P(usize),
    I(usize),
    S(usize),
}

/// Quiver 1 -> 2; three indecomposables.
pub fn a2() -> Builtin {
    build(
        "a2",
        a2_presentation(),
        &[("P1", Kind::P(0)), ("P2", Kind::P(1)), ("S1", Kind::S(0))],
    )
}

/// Quiver 1 -> 2 -> 3; six indecomposables (P3 = S3, I3 = P1, I1 = S1).
pub fn a3lin() -> Builtin {
    build(
        "a3lin",
        a3lin_presentation(),
        &[
            ("P1", Kind::P(0)),
            ("P2", Kind::P(1)),
            ("P3", Kind::P(2)),
            ("S1", Kind::S(0)),
            ("S2", Kind::S(1)),
            ("I2", Kind::I(1)),
        ],
    )
}

/// The four-vertex algebra with two zero relations; ten indecomposables
/// (I1 = S1).
pub fn hkm4() -> Builtin {
    build(
        "hkm4",
        hkm4_presentation(),
        &[
            ("P1", Kind::P(0)),
            ("P2", Kind::P(1)),
            ("P3", Kind::P(2)),
            ("P4", Kind::P(3)),
            ("I2", Kind::I(1)),
            ("I3", Kind::I(2)),
            ("I4", Kind::I(3)),
            ("S1", Kind::S(0)),
            ("S2", Kind::S(1)),
            ("S3", Kind::S(2)),
        ],
    )
}

pub fn by_name(name: &str) -> Option<Builtin> {
    match name {
        "a2" => Some(a2()),
        "a3lin" => Some(a3lin()),
        "hkm4" => Some(hkm4()),
        _ => None,
    }
}

pub const BUILTIN_NAMES: [&str; 3] = ["a2", "a3lin", "hkm4"];
