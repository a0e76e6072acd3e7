//! The paper-level pipelines: constructing a two-term tilting complex from
//! torsion data, verifying that the degree-zero homology is a tilting
//! module over its annihilator factor, and comparing endomorphism rings on
//! both sides.

mod construct;
mod endring;
mod verify;

pub use construct::{
    construct_from_torsion, ext_proj_inj_test, ConstructionOutcome, ExtMode, SummandCheck,
    TorsionData,
};
pub use endring::{endring_verify, EndringOutcome, EndringReport, EndringSide};
pub use verify::{
    addgen_verify, coresolution, cotilting_verify, tilting_module_verify, AddgenReport,
    Coresolution, TiltingReport,
};
