use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("instance too large for exact enumeration: {what} is {size}, bound is {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),

    #[error("dependent or undersized set: {0}")]
    NotABase(String),

    #[error("matrix is not totally unimodular: rows {rows:?}, cols {cols:?} have determinant {det}")]
    NotTotallyUnimodular {
        rows: Vec<usize>,
        cols: Vec<usize>,
        det: BigInt,
    },

    #[error("vector is not in the lattice: {0}")]
    NotInLattice(String),

    #[error("not positive definite: leading minor of order {order} is {value}")]
    NotPositiveDefinite { order: usize, value: BigInt },

    #[error("not a Gram matrix: {0}")]
    NotGram(String),

    #[error("{0}")]
    Domain(String),

    #[error("empty graph: at least one edge is required")]
    EmptyGraph,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    /// Short stable code for diagnostics, one per variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Dimension(_) => "E-DIMENSION",
            Error::BoundExceeded { .. } => "E-BOUND",
            Error::DuplicateLabel(_) => "E-LABEL",
            Error::NotABase(_) => "E-NOT-A-BASE",
            Error::NotTotallyUnimodular { .. } => "E-NOT-TU",
            Error::NotInLattice(_) => "E-NOT-IN-LATTICE",
            Error::NotPositiveDefinite { .. } => "E-NOT-DEFINITE",
            Error::NotGram(_) => "E-NOT-GRAM",
            Error::Domain(_) => "E-DOMAIN",
            Error::EmptyGraph => "E-EMPTY-GRAPH",
            Error::Parse { .. } => "E-PARSE",
        }
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
