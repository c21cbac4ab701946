//! Cayley graphs of quadratic forms over finite fields.
//!
//! For a non-degenerate quadratic form `q` on `F^n` and `a ∈ F`, the
//! representation graph `G(q, a)` has vertex set `F^n` and joins `x` to `y`
//! whenever `q(y − x) = a`. This crate provides
//!
//! * finite-field arithmetic ([`gf`]) and quadratic forms with their
//!   classification ([`qform`]);
//! * closed-form counts of vectors, decompositions and isometries ([`counts`]);
//! * explicit graphs with brute-force invariant computation ([`graph`]);
//! * closed-form predictions of connectivity, diameter, girth, triangle and
//!   four-cycle counts ([`predict`]).

pub mod counts;
pub mod error;
pub mod gf;
pub mod graph;
mod linalg;
pub mod predict;
pub mod qform;

pub use error::{Error, Result};
pub use gf::{Field, FieldElement, SquareClass};
pub use qform::{parse_form, CanonicalType, QuadraticForm, Vector};

/// Default vertex cap for explicit graph construction.
pub const DEFAULT_MAX_VERTICES: u64 = 2_000_000;
