//! Search and verification engine for three-color Ramsey numbers of paths.
//!
//! The crate is split along the lines of the work it does:
//!
//! - [`graph`]: bit-mask graphs, edge colorings and exact path/cycle queries.
//! - [`formulas`]: closed-form Turán, circumference and Ramsey bounds, each
//!   paired with a brute-force oracle that works at small scale.
//! - [`constructions`]: blow-up witness colorings and the extremal graph
//!   families the bounds are attained by.
//! - [`search`]: exhaustive, symmetry-reduced backtracking over colorings.
//! - [`proof`]: mechanized arithmetic of the counting arguments behind
//!   `R3(P8) = 14` and `R3(P9) = 17`.
//! - [`cli`]: the `pathramsey` command-line surface and the coloring file
//!   format.
//!
//! Bound arithmetic is generic over the integer type (anything implementing
//! [`formulas::Count`], including `num_bigint::BigInt`); the aliases below
//! fix the machine-word choices the rest of the crate uses.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod proof;
pub mod search;

pub use error::{Error, Result};
pub use graph::{ColorReport, EdgeColoring, SimpleGraph, Target};

/// Integer type used for edge counts, bounds and slacks.
pub type Int = i64;

/// Exact rational type used where a bound is stated with fractions.
pub type Rational = num_rational::Ratio<Int>;

/// Color index. `0` means "uncolored", `1..=colors` are colors.
pub type Color = u8;
