//! Machine-readable reports. Serialization is schema-versioned and
//! byte-deterministic for fixed inputs: all maps are ordered sequences and
//! struct field order is fixed.

use serde::Serialize;

use tiltlab::quiveralg::Quiver;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Clone, Debug)]
pub struct QuiverInfo {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowInfo>,
}

#[derive(Serialize, Clone, Debug)]
pub struct ArrowInfo {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

impl QuiverInfo {
    pub fn from_quiver(q: &Quiver) -> Self {
        QuiverInfo {
            vertices: q.vertex_names().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowInfo {
                    name: a.name.clone(),
                    src: q.vertex_name(a.src).to_string(),
                    tgt: q.vertex_name(a.tgt).to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct VerdictItem {
    pub name: String,
    pub pass: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct AlgebraInfo {
    pub name: String,
    pub dim: usize,
    pub quiver: QuiverInfo,
    pub relation_count: usize,
}

#[derive(Serialize, Clone, Debug)]
pub struct CheckSection {
    pub presilting_up: bool,
    pub presilting_down: bool,
    pub summand_count: usize,
    pub vertex_count: usize,
    pub contractibles_stripped: usize,
    pub tilting: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct SummandInfo {
    pub dims_minus1: Vec<usize>,
    pub dims_zero: Vec<usize>,
    pub multiplicity: usize,
}

#[derive(Serialize, Clone, Debug)]
pub struct ModuleInfo {
    pub dims: Vec<usize>,
    pub multiplicity: usize,
    pub catalogue_label: Option<String>,
}

#[derive(Serialize, Clone, Debug)]
pub struct HomologySection {
    pub h0_dims: Vec<usize>,
    pub h0_summands: Vec<ModuleInfo>,
    pub h_minus1_nu_dims: Vec<usize>,
    pub h_minus1_nu_summands: Vec<ModuleInfo>,
}

#[derive(Serialize, Clone, Debug)]
pub struct AnnihilatorSection {
    pub ideal_dim: usize,
    pub ideal_basis: Vec<String>,
    pub factor_dim: usize,
    pub factor_quiver: QuiverInfo,
    pub factor_relation_count: usize,
}

#[derive(Serialize, Clone, Debug)]
pub struct CoresolutionInfo {
    pub copies: usize,
    pub exact: bool,
    pub x1_dims: Vec<usize>,
    pub x1_in_add: bool,
    pub x1_ext_projective: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct TiltingModuleSection {
    pub zero_algebra: bool,
    pub ideal_dim: usize,
    pub factor_dim: usize,
    pub pd_le_1: bool,
    pub ext_self_vanish: bool,
    pub coresolution: Option<CoresolutionInfo>,
    pub verdict: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct EndringSection {
    pub side: String,
    pub b_dim: usize,
    pub ideal_dim: usize,
    pub quotient_dim: usize,
    pub end_dim: usize,
    pub theta_surjective: bool,
    pub kernel_equals_ideal: bool,
    pub quotient_quiver: QuiverInfo,
}

#[derive(Serialize, Clone, Debug)]
pub struct TorsionRow {
    pub label: String,
    pub dims: Vec<usize>,
    pub in_t: bool,
    pub in_f: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct ConstructSection {
    pub preconditions_ok: bool,
    pub mults_minus1: Vec<usize>,
    pub mults_zero: Vec<usize>,
    pub tilting: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct PaperCheckItem {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Serialize, Clone, Debug, Default)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<CheckSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complex_summands: Option<Vec<SummandInfo>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology: Option<HomologySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub annihilator: Option<AnnihilatorSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tilting_module: Option<TiltingModuleSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cotilting_module: Option<TiltingModuleSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub endring: Option<Vec<EndringSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion: Option<Vec<TorsionRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construct: Option<ConstructSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paper_example: Option<Vec<PaperCheckItem>>,
    pub verdicts: Vec<VerdictItem>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            ..Default::default()
        }
    }

    pub fn add_verdict(&mut self, name: &str, pass: bool) {
        self.verdicts.push(VerdictItem {
            name: name.to_string(),
            pass,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct ErrorObject {
    pub error: ErrorDetail,
}

#[derive(Serialize, Clone, Debug)]
pub struct ErrorDetail {
    pub kind: String,
    pub message: String,
}

pub fn error_json(err: &tiltlab::Error) -> String {
    let kind = match err {
        tiltlab::Error::Dimension(_) => "DimensionError",
        tiltlab::Error::Containment(_) => "ContainmentError",
        tiltlab::Error::Category(_) => "CategoryError",
        tiltlab::Error::NotFiniteDimensional(_) => "NotFiniteDimensional",
        tiltlab::Error::NotAnIdeal(_) => "NotAnIdeal",
        tiltlab::Error::NotInDomain(_) => "NotInDomain",
        tiltlab::Error::NonSplitEndomorphism(_) => "NonSplitEndomorphism",
        tiltlab::Error::NotFaithful(_) => "NotFaithful",
        tiltlab::Error::OutOfRange(_) => "OutOfRange",
        tiltlab::Error::Parse { .. } => "ParseError",
        tiltlab::Error::Presentation(_) => "PresentationError",
    };
    serde_json::to_string_pretty(&ErrorObject {
        error: ErrorDetail {
            kind: kind.to_string(),
            message: err.to_string(),
        },
    })
    .expect("error serialization")
}
