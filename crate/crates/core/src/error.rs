use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("{0} and {1} are not adjacent")]
    NotAnEdge(usize, usize),

    #[error("edge {0} belongs to the spanning forest")]
    TreeEdge(usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("not a 1-cycle")]
    NotACycle,

    #[error("not a cellular 2-cycle")]
    NotATwoCycle,

    #[error("not a {0}-cycle")]
    NotASimplicialCycle(usize),

    #[error("not a rook cycle")]
    NotARookCycle,

    #[error("parallelepipeds do not sum to zero")]
    NotARelation,

    #[error("not a simple cycle: {0}")]
    NotASimpleCycle(String),

    #[error("map is not an involution of the graph: {0}")]
    NotAnInvolution(String),

    #[error("cell ({0}, {1}) is not in the complex")]
    CellNotInComplex(usize, usize),

    #[error("enumeration exceeded the cap of {0}")]
    EnumerationCap(usize),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
