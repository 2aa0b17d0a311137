use thiserror::Error;

use crate::field::FieldSpec;

/// A syntax error in a polynomial expression, with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(pos: usize, message: impl Into<String>) -> Self {
        Self {
            pos,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible fields: {0} and {1}")]
    IncompatibleField(FieldSpec, FieldSpec),
    #[error("division by zero")]
    DivisionByZero,
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("invalid field spec {0:?} (expected \"q\" or \"fp:<prime>\")")]
    BadFieldSpec(String),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("polynomials live over different variable lists")]
    VariableMismatch,
    #[error("invalid variable list: {0}")]
    BadVariables(String),
    #[error("variable index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("cone has more than {cap} elements")]
    ConeTooLarge { cap: usize },
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error("duplicate element {value} in grid set {set}")]
    DuplicateGridElement { set: usize, value: String },
    #[error("point is not on the grid (coordinate {0})")]
    PointNotOnGrid(usize),
    #[error("grid set {set} has {found} elements, expected {expected}")]
    GridSizeMismatch {
        set: usize,
        expected: usize,
        found: usize,
    },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal contradiction: {0}")]
    Internal(String),
    #[error("graph is not bipartite; odd cycle {cycle:?}")]
    NotBipartite { cycle: Vec<usize> },
    #[error(
        "no orientation with outdegree <= {k}: subgraph on {} vertices has {edges} edges",
        vertices.len()
    )]
    Infeasible {
        k: usize,
        vertices: Vec<usize>,
        edges: usize,
    },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid labeling instance: {0}")]
    InvalidInstance(String),
    #[error("certificate failed: {0}")]
    Certificate(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
