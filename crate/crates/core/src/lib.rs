//! Exact arithmetic for PBW Gauss norms on universal enveloping algebras,
//! the normed Chevalley–Eilenberg and Koszul complexes with their
//! contracting homotopies, Hopf operations, and Lie algebra (co)homology.
//!
//! Everything is computed over the rationals with a p-adic valuation; norms
//! are points of `p^Q ∪ {0}` stored by exponent, so every comparison is exact.

pub mod cohomology;
pub mod completion;
pub mod complex;
pub mod error;
pub mod expr;
pub mod files;
pub mod lie;
pub mod linalg;
pub mod sample;
pub mod scalar;
pub mod uenv;
pub mod verify;

pub use error::{Error, Result};
