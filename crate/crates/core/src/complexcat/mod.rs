//! Two-term complexes of projectives, homotopy-category Hom spaces,
//! homology invariants, torsion pairs, tilting verdicts, and endomorphism
//! algebras of complexes.

mod complex;
mod decompose;
mod endalg;
mod homotopy;

pub use complex::{
    homology_invariants, regular_hom_module, torsion_pair_membership, HomologyInvariants,
    RegularHomModule, TorsionMembership, TwoTermComplex,
};
pub use decompose::{
    complex_from_projective_map, complex_iso, decompose_complex, decompose_complex_with_seed,
    ComplexDecomposition, ComplexSummand,
};
pub use endalg::{end_algebra, is_two_term_tilting, EndAlgebra, TiltingVerdict};
pub use homotopy::{hom_k, ChainMapRep, ChainPair, HomTarget, HomotopyHom};
