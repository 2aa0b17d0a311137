//! Exact witness search and coefficient recovery for multivariate polynomials on grids.
//!
//! Polynomials live in a [`Ring`] over ℚ or a prime field. For a monomial
//! `x^alpha` that no other monomial of `f` dominates coordinatewise, `f` cannot
//! vanish on a grid `A_1 × … × A_n` with `|A_i| > alpha_i`; [`nss`] finds such a
//! point and recovers the coefficient from grid values alone. [`labeling`]
//! applies this to separating labelings of bipartite graphs.

pub mod cli;
pub mod error;
pub mod field;
pub mod labeling;
pub mod nss;
pub mod parse;
pub mod poly;

pub use error::{Error, ParseError, Result};
pub use field::{FieldSpec, FieldValue};
pub use nss::{Grid, MaximalityCheck, Witness, WitnessReport};
pub use parse::{format_polynomial, parse_polynomial};
pub use poly::{Monomial, Polynomial, Ring};

/// Comma-separated coordinates, as printed by the command line tool.
pub fn format_point(point: &[FieldValue]) -> String {
    point
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
