//! Generalized Reed-Muller codes R_q(r, m) over small fields, q ≤ 9.
//!
//! The crate covers the full low-weight story at desk scale:
//!
//! * [`field`] — GF(q) arithmetic through exhaustively checked tables;
//! * [`poly`] — value tables, reduced forms, interpolation, and the two
//!   linear-factor peeling operations;
//! * [`geometry`] — affine flats, the affine group action, hyperplane
//!   parallel classes and section counts;
//! * [`grm`] — code parameters, the W₁/W₂ weight formulas, and canonical
//!   constructors for every characterized minimum- and second-weight
//!   codeword family;
//! * [`classify`] — support classification with re-validating witnesses;
//! * [`search`] — exhaustive low-weight enumeration and affine-orbit
//!   sampling;
//! * [`blocking`] — two-sided blocking sets of the affine plane and their
//!   bridge to bivariate codewords without linear factors;
//! * [`io`] — the JSON codeword, flat and classification documents;
//! * [`selftest`] — the acceptance checks wired into both `cargo test`
//!   and the `selftest` subcommand of the CLI.

pub mod blocking;
pub mod classify;
pub mod field;
pub mod geometry;
pub mod grm;
pub mod io;
mod linalg;
pub mod poly;
pub mod search;
pub mod selftest;

pub use field::{build_field, shared_field, Elem, FieldSpec};
pub use grm::CodeParams;
pub use poly::{FuncTable, ReducedPoly};
