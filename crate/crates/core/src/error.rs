use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("lattice of rank {rank} in dimension {dim} is not full rank")]
    NotFullRank { rank: usize, dim: usize },

    #[error("integer overflow in machine-word exponent arithmetic")]
    Overflow,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("weight is not generic: binomial {0} is balanced")]
    TiedWeight(String),

    #[error("not a G-cluster: character {character} has {count} standard monomials")]
    NotACluster { character: usize, count: usize },

    #[error("cone is not pointed")]
    NotPointed,

    #[error("grading is not strictly positive on generator {0}")]
    InvalidGrading(String),

    #[error("quiver relation violated at i={i}, j={j}, rho={rho}")]
    RelationViolation { i: usize, j: usize, rho: usize },

    #[error("support quiver has a directed cycle through arrows {0:?}")]
    UnexpectedCycle(Vec<(usize, usize)>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("degenerate witness: weight is not strictly positive on {0}")]
    DegenerateWitness(String),

    #[error("data error: {0}")]
    Data(String),
}
