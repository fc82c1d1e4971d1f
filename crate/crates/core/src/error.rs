use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("unsupported matrix dimension {0} (expected 2 or 4)")]
    UnsupportedDimension(usize),

    #[error("generator index {index} out of range (gate set has {count} generators)")]
    GeneratorOutOfRange { index: usize, count: usize },

    #[error("parse error at token {position} ({token:?}): {reason}")]
    Parse {
        position: usize,
        token: String,
        reason: String,
    },

    #[error("unknown target gate {name:?}; available: {}", available.join(", "))]
    UnknownTarget {
        name: String,
        available: Vec<&'static str>,
    },

    #[error("sub-braid [{start}, {end}] out of range for a braid of length {len}")]
    SliceOutOfRange { start: usize, end: usize, len: usize },

    #[error("fitness is undefined for the empty braid")]
    EmptyBraid,

    #[error("parent of length {0} is too short to recombine (need at least 2)")]
    ParentTooShort(usize),

    #[error("no valid split point: every candidate prefix pair is identical")]
    NoValidSplit,

    #[error("generator index {index} needs strands {index} and {}, but only {strands} strands exist", index + 1)]
    StrandOutOfRange { index: usize, strands: usize },

    #[error("matrix {label:?} is not unitary within {tolerance:e}")]
    NotUnitary { label: String, tolerance: f64 },

    #[error("gate set file, line {line}: {reason}")]
    GateSetFile { line: usize, reason: String },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
