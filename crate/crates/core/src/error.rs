use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid deck size {0}: must be even, at least 2 and at most {max}", max = crate::deck::MAX_DECK_SIZE)]
    InvalidSize(usize),

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("labels do not form a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("deck is not in stay-stack: positions {0} and {1} do not hold a complementary pair")]
    NotStayStack(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("position {position} out of range for a deck of {size}")]
    PositionOutOfRange { position: usize, size: usize },

    #[error("deck size {size} exceeds the configured cap of {cap}")]
    SizeCap { size: usize, cap: usize },

    #[error("no case of the order formula covers {0}")]
    NoCase(String),

    #[error("orbit exceeds the node cap of {0}")]
    NodeCap(usize),

    #[error("stabilizer chain order {chain} disagrees with brute-force enumeration {enumerated}")]
    OracleMismatch { chain: String, enumerated: String },

    #[error("position {to} is unreachable from {from}")]
    Unreachable { from: usize, to: usize },

    #[error("{0} is not a power of two of at least {1}")]
    NotPowerOfTwo(usize, usize),

    #[error("k = {0} is outside 1..=16")]
    InvalidBits(u32),

    #[error("value {value} does not fit in {bits} bits")]
    ValueOutOfRange { value: u32, bits: u32 },

    #[error("diagram operation {op} is invalid for k = {bits}")]
    InvalidOp { op: String, bits: u32 },

    #[error("end cards {left} and {right} differ by neither one bit nor a full complement")]
    InvalidEnds { left: u32, right: u32 },

    #[error("shuffle {0} is not part of the trick alphabet")]
    NotInTrickAlphabet(String),

    #[error("special ordering lost after {0}: closure violated")]
    ClosureViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
