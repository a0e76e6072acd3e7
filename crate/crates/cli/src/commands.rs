//! Subcommand implementations over loaded algebras.

use std::path::PathBuf;

use tiltlab::builtins::{self, Builtin};
use tiltlab::complexcat::{
    decompose_complex_with_seed, homology_invariants, is_two_term_tilting,
    torsion_pair_membership, TwoTermComplex,
};
use tiltlab::error::{Error, Result};
use tiltlab::hkm::{
    addgen_verify, construct_from_torsion, cotilting_verify, endring_verify,
    tilting_module_verify, EndringReport, EndringSide, TiltingReport, TorsionData,
};
use tiltlab::modcat::{annihilator, decompose_with_seed, indec_iso, Representation};
use tiltlab::quiveralg::{assemble_algebra, factor_algebra, AlgebraRef, DEFAULT_MAX_PATH_LEN};

use crate::formats;
use crate::report::{
    AlgebraInfo, AnnihilatorSection, CheckSection, ConstructSection, CoresolutionInfo,
    EndringSection, HomologySection, ModuleInfo, QuiverInfo, Report, SummandInfo, TorsionRow,
};

pub struct LoadedAlgebra {
    pub name: String,
    pub algebra: AlgebraRef,
    pub builtin: Option<Builtin>,
}

impl LoadedAlgebra {
    pub fn info(&self) -> AlgebraInfo {
        AlgebraInfo {
            name: self.name.clone(),
            dim: self.algebra.dim(),
            quiver: QuiverInfo::from_quiver(self.algebra.quiver()),
            relation_count: self.algebra.relations().len(),
        }
    }

    /// Label a module against the builtin catalogue when one is loaded.
    fn label_of(&self, rep: &Representation) -> Option<String> {
        let b = self.builtin.as_ref()?;
        for entry in &b.catalogue {
            if indec_iso(rep, &entry.rep).ok()? {
                return Some(entry.label.clone());
            }
        }
        None
    }
}

pub fn load_algebra(
    builtin: Option<&str>,
    algebra_file: Option<&PathBuf>,
) -> Result<LoadedAlgebra> {
    match (builtin, algebra_file) {
        (Some(name), None) => {
            let b = builtins::by_name(name).ok_or_else(|| {
                Error::Parse {
                    line: 0,
                    msg: format!(
                        "unknown builtin `{name}` (available: {})",
                        builtins::BUILTIN_NAMES.join(", ")
                    ),
                }
            })?;
            Ok(LoadedAlgebra {
                name: name.to_string(),
                algebra: b.algebra.clone(),
                builtin: Some(b),
            })
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
                line: 0,
                msg: format!("cannot read {}: {e}", path.display()),
            })?;
            let pres = formats::parse_algebra(&text)?;
            let algebra = assemble_algebra(&pres, DEFAULT_MAX_PATH_LEN)?;
            Ok(LoadedAlgebra {
                name: path.display().to_string(),
                algebra,
                builtin: None,
            })
        }
        _ => Err(Error::Parse {
            line: 0,
            msg: "exactly one of --builtin and --algebra is required".into(),
        }),
    }
}

pub fn load_complex(loaded: &LoadedAlgebra, path: &PathBuf) -> Result<TwoTermComplex> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("cannot read {}: {e}", path.display()),
    })?;
    formats::parse_complex(&text, &loaded.algebra)
}

fn summand_infos(t: &TwoTermComplex, seed: u64) -> Result<Vec<SummandInfo>> {
    Ok(decompose_complex_with_seed(t, seed)?
        .summands
        .iter()
        .map(|s| SummandInfo {
            dims_minus1: s.complex.mults_minus1().to_vec(),
            dims_zero: s.complex.mults_zero().to_vec(),
            multiplicity: s.multiplicity,
        })
        .collect())
}

fn module_infos(
    loaded: &LoadedAlgebra,
    m: &Representation,
    seed: u64,
) -> Result<Vec<ModuleInfo>> {
    Ok(decompose_with_seed(m, seed)?
        .iter()
        .map(|(rep, mult)| ModuleInfo {
            dims: rep.dims().to_vec(),
            multiplicity: *mult,
            catalogue_label: loaded.label_of(rep),
        })
        .collect())
}

pub fn cmd_check(loaded: &LoadedAlgebra, t: &TwoTermComplex, seed: u64) -> Result<Report> {
    let mut report = Report::new("check");
    report.algebra = Some(loaded.info());
    let v = is_two_term_tilting(t, seed)?;
    report.check = Some(CheckSection {
        presilting_up: v.presilting_up,
        presilting_down: v.presilting_down,
        summand_count: v.summand_count,
        vertex_count: t.algebra().vertex_count(),
        contractibles_stripped: v.contractibles_stripped,
        tilting: v.tilting,
    });
    report.complex_summands = Some(summand_infos(t, seed)?);
    report.add_verdict("tilting", v.tilting);
    Ok(report)
}

pub fn cmd_homology(loaded: &LoadedAlgebra, t: &TwoTermComplex, seed: u64) -> Result<Report> {
    let mut report = Report::new("homology");
    report.algebra = Some(loaded.info());
    let inv = homology_invariants(t)?;
    report.homology = Some(HomologySection {
        h0_dims: inv.h0.dims().to_vec(),
        h0_summands: module_infos(loaded, &inv.h0, seed)?,
        h_minus1_nu_dims: inv.h_minus1_nu.dims().to_vec(),
        h_minus1_nu_summands: module_infos(loaded, &inv.h_minus1_nu, seed)?,
    });
    report.add_verdict("computed", true);
    Ok(report)
}

pub fn cmd_annihilator(loaded: &LoadedAlgebra, t: &TwoTermComplex) -> Result<Report> {
    let mut report = Report::new("annihilator");
    report.algebra = Some(loaded.info());
    let inv = homology_invariants(t)?;
    let ann = annihilator(&inv.h0);
    let (factor, _) = factor_algebra(&loaded.algebra, &ann)?;
    report.annihilator = Some(AnnihilatorSection {
        ideal_dim: ann.dim(),
        ideal_basis: ann.basis_labels(),
        factor_dim: factor.dim(),
        factor_quiver: QuiverInfo::from_quiver(factor.quiver()),
        factor_relation_count: factor.relations().len(),
    });
    report.add_verdict("computed", true);
    Ok(report)
}

fn tilting_section(r: &TiltingReport) -> crate::report::TiltingModuleSection {
    crate::report::TiltingModuleSection {
        zero_algebra: r.zero_algebra,
        ideal_dim: r.ideal_dim,
        factor_dim: r.factor_dim,
        pd_le_1: r.pd_le_1,
        ext_self_vanish: r.ext_self_vanish,
        coresolution: r.coresolution.as_ref().map(|c| CoresolutionInfo {
            copies: c.copies,
            exact: c.exact,
            x1_dims: c.x1.dims().to_vec(),
            x1_in_add: c.x1_in_add,
            x1_ext_projective: c.x1_ext_projective,
        }),
        verdict: r.verdict,
    }
}

pub fn cmd_tilting_module(
    loaded: &LoadedAlgebra,
    t: &TwoTermComplex,
    seed: u64,
) -> Result<Report> {
    let mut report = Report::new("tilting-module");
    report.algebra = Some(loaded.info());
    let inv = homology_invariants(t)?;
    let h0_report = tilting_module_verify(&inv.h0, seed)?;
    let co_report = cotilting_verify(&inv.h_minus1_nu, seed)?;
    report.add_verdict("h0_tilting_module", h0_report.verdict);
    report.add_verdict("h_minus1_nu_cotilting_module", co_report.verdict);
    report.tilting_module = Some(tilting_section(&h0_report));
    report.cotilting_module = Some(tilting_section(&co_report));
    Ok(report)
}

fn endring_section(r: &EndringReport) -> EndringSection {
    EndringSection {
        side: match r.side {
            EndringSide::H0 => "h0".into(),
            EndringSide::HMinus1Nu => "h_minus1_nu".into(),
        },
        b_dim: r.b_dim,
        ideal_dim: r.ideal_dim,
        quotient_dim: r.quotient_dim,
        end_dim: r.end_dim,
        theta_surjective: r.theta_surjective,
        kernel_equals_ideal: r.kernel_equals_ideal,
        quotient_quiver: QuiverInfo::from_quiver(&r.quotient_quiver),
    }
}

pub fn cmd_endring(loaded: &LoadedAlgebra, t: &TwoTermComplex, seed: u64) -> Result<Report> {
    let mut report = Report::new("endring");
    report.algebra = Some(loaded.info());
    let out = endring_verify(t, seed)?;
    report.add_verdict("input_tilting", out.tilting.tilting);
    report.add_verdict("h0_kernel_equals_ideal", out.h0_side.kernel_equals_ideal);
    report.add_verdict(
        "h0_dims_consistent",
        out.h0_side.end_dim == out.h0_side.b_dim - out.h0_side.ideal_dim,
    );
    report.add_verdict(
        "dual_kernel_equals_ideal",
        out.dual_side.kernel_equals_ideal,
    );
    report.add_verdict(
        "dual_dims_consistent",
        out.dual_side.end_dim == out.dual_side.b_dim - out.dual_side.ideal_dim,
    );
    report.endring = Some(vec![
        endring_section(&out.h0_side),
        endring_section(&out.dual_side),
    ]);
    Ok(report)
}

pub fn cmd_torsion(loaded: &LoadedAlgebra, t: &TwoTermComplex) -> Result<Report> {
    let mut report = Report::new("torsion");
    report.algebra = Some(loaded.info());
    let Some(b) = &loaded.builtin else {
        return Err(Error::Parse {
            line: 0,
            msg: "torsion tables need a builtin catalogue; use --builtin".into(),
        });
    };
    let mut rows = Vec::new();
    for entry in &b.catalogue {
        let m = torsion_pair_membership(t, &entry.rep)?;
        rows.push(TorsionRow {
            label: entry.label.clone(),
            dims: entry.rep.dims().to_vec(),
            in_t: m.in_t,
            in_f: m.in_f,
        });
    }
    report.torsion = Some(rows);
    report.add_verdict("computed", true);
    Ok(report)
}

pub enum ModuleSpec {
    Expr(String),
    File(PathBuf),
}

pub fn load_module(loaded: &LoadedAlgebra, spec: &ModuleSpec) -> Result<Representation> {
    match spec {
        ModuleSpec::Expr(e) => formats::parse_module_expr(e, &loaded.algebra),
        ModuleSpec::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
                line: 0,
                msg: format!("cannot read {}: {e}", path.display()),
            })?;
            formats::parse_module(&text, &loaded.algebra)
        }
    }
}

/// Build the complex from torsion data; returns the report together with
/// the printed complex file.
pub fn cmd_construct(
    loaded: &LoadedAlgebra,
    x: &ModuleSpec,
    y: &ModuleSpec,
    seed: u64,
) -> Result<(Report, String)> {
    let mut report = Report::new("construct");
    report.algebra = Some(loaded.info());
    let x = load_module(loaded, x)?;
    let y = load_module(loaded, y)?;
    let out = construct_from_torsion(&TorsionData { x, y }, seed)?;
    let verdict = is_two_term_tilting(&out.complex, seed)?;
    report.construct = Some(ConstructSection {
        preconditions_ok: out.preconditions_ok,
        mults_minus1: out.complex.mults_minus1().to_vec(),
        mults_zero: out.complex.mults_zero().to_vec(),
        tilting: verdict.tilting,
    });
    report.complex_summands = Some(summand_infos(&out.complex, seed)?);
    report.add_verdict("preconditions", out.preconditions_ok);
    report.add_verdict("tilting", verdict.tilting);
    let text = formats::print_complex(&out.complex);
    Ok((report, text))
}

/// Catalogue-wide add/gen agreement, used by the paper pipeline.
pub fn addgen_for(
    loaded: &LoadedAlgebra,
    t: &TwoTermComplex,
    seed: u64,
) -> Result<tiltlab::hkm::AddgenReport> {
    let b = loaded
        .builtin
        .as_ref()
        .ok_or_else(|| Error::Parse {
            line: 0,
            msg: "addgen verification needs a builtin catalogue".into(),
        })?;
    let cat: Vec<Representation> = b.catalogue.iter().map(|e| e.rep.clone()).collect();
    addgen_verify(t, &cat, seed)
}
