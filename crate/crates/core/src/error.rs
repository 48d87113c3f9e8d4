use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation contains a cycle through element {0}")]
    Cycle(usize),
    #[error("index {index} out of range for {n} elements")]
    Index { index: usize, n: usize },
    #[error("{what}: size {size} exceeds the cap of {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("map is not increasing from the first order of the source to the second order of the target")]
    NotIncreasing,
    #[error("double poset is not special (second order is not total)")]
    NotSpecial,
    #[error("invalid partition {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("invalid composition {0:?}")]
    InvalidComposition(Vec<usize>),
    #[error("letter multiplicities {0:?} are not weakly decreasing")]
    NotAPartition(Vec<usize>),
    #[error("word is not a lattice permutation")]
    NotLattice,
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("size mismatch: double poset has {poset} elements, partition has weight {partition}")]
    SizeMismatch { poset: usize, partition: usize },
    #[error("operation requires a nonempty argument")]
    Empty,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("integer overflow in coefficient arithmetic")]
    Overflow,
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    /// Stable name used in CLI diagnostics and FFI status codes.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Cycle(_) => "CycleError",
            Error::Index { .. } => "IndexError",
            Error::SizeCap { .. } => "SizeCapError",
            Error::NotIncreasing => "NotIncreasingError",
            Error::NotSpecial => "NotSpecialError",
            Error::InvalidPartition(_) => "InvalidPartitionError",
            Error::InvalidPermutation(_) => "InvalidPermutationError",
            Error::InvalidComposition(_) => "InvalidCompositionError",
            Error::NotAPartition(_) => "NotAPartitionError",
            Error::NotLattice => "NotLatticeError",
            Error::LengthMismatch { .. } => "LengthMismatchError",
            Error::SizeMismatch { .. } => "SizeMismatchError",
            Error::Empty => "EmptyError",
            Error::Precondition(_) => "PreconditionError",
            Error::Overflow => "OverflowError",
            Error::Parse { .. } => "ParseError",
        }
    }
}
