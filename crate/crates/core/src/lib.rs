//! Exact computation with two-term tilting complexes over finite-dimensional
//! quiver algebras.
//!
//! The engine builds path algebras with admissible relations over the exact
//! rationals, computes in the module category (Hom, Ext^1, duality, the
//! Nakayama functor and the Auslander-Reiten translate), works with two-term
//! complexes of projectives up to homotopy, and runs the verification
//! pipelines that check when the degree-zero homology of a two-term tilting
//! complex is a tilting module over its annihilator-factor algebra and how
//! the endomorphism rings on both sides are related.

pub mod builtins;
pub mod complexcat;
pub mod error;
pub mod hkm;
pub mod exactla;
pub mod modcat;
pub mod quiveralg;

pub use error::{Error, Result};
