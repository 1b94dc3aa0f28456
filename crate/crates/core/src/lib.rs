//! Constructions and verifiers for local antimagic labelings of `rK_{m,n}`
//! and `K_{1,m,n}`.
//!
//! The crate is layered bottom-up:
//!
//! * [`design`] builds magic rectangles, nearly magic rectangles, Kotzig
//!   arrays and magic rectangle sets, and verifies them from their entries.
//! * [`builders`] assembles those into matrix families and blanked
//!   matrices, one recipe per graph family and parameter case.
//! * [`graph`] turns matrices into edge labelings, computes vertex weights
//!   and holds the table of known bounds.
//! * [`oracle`] computes the exact local antimagic chromatic number of
//!   small graphs by exhaustive search.
//! * [`io`] defines the JSON and CSV formats.

pub mod builders;
pub mod design;
pub mod error;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod oracle;

pub use error::{Error, Result};
pub use matrix::{ArrayShape, IntMatrix, MagicConstants};
