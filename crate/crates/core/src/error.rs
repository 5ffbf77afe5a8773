use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("invalid linking matrix: {0}")]
    InvalidLinking(String),

    #[error("planes {0} and {1} are not transverse")]
    NotTransverse(usize, usize),

    #[error("braid is not pure (strand permutation {0:?})")]
    NotPure(Vec<usize>),

    #[error("relator {index} has nonzero exponent sum in x{generator}")]
    NotCommutator { index: usize, generator: usize },

    #[error("word has nonzero exponent sum in x{0}")]
    NonzeroExponentSum(usize),

    #[error("generator x{generator} out of range for a presentation on {n} generators")]
    GeneratorOutOfRange { generator: usize, n: usize },

    #[error("representation is trivial mod {0}")]
    TrivialRepresentation(u64),

    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("twisted Alexander matrix would be {rows}x{cols}, above the {limit}x{limit} limit")]
    MatrixTooLarge { rows: usize, cols: usize, limit: usize },

    #[error("relation matrix has free rank {free_rank}, less than p-1 = {expected}")]
    MalformedPresentation { free_rank: usize, expected: usize },

    #[error("degree {degree} exceeds the supported bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },

    #[error("invariant shape violated: {0}")]
    ShapeViolation(String),

    #[error("unsupported request: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
