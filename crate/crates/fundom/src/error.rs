use thiserror::Error;

/// Errors reported by the library. All functions are total on valid input;
/// every variant names the contract that was violated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {0} is too small, need at least 2")]
    RankTooSmall(usize),
    #[error("simple valuation at position {index} is {value}, must be at least 1")]
    NonPositiveValuation { index: usize, value: i64 },
    #[error("expected rank {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("operation is specific to rank 3, got rank {0}")]
    RankNotThree(usize),
    #[error("simple valuations must be weakly increasing, got {0:?}")]
    UnsortedValuations(Vec<i64>),
    #[error("{0:?} is not a permutation of 0..{1}")]
    InvalidPermutation(Vec<usize>, usize),
    #[error("coweight {point:?} has level {got}, expected {expected}")]
    WrongLevel {
        point: Vec<i64>,
        got: i64,
        expected: i64,
    },
    #[error("coweight {0:?} has a negative coordinate")]
    OutsideTriangle(Vec<i64>),
    #[error("coweight {0:?} is not a fixed point of the fundamental domain")]
    OutsideDomain(Vec<i64>),
    #[error("block {0:?} is not a proper nonempty subset of the coordinate indices")]
    InvalidBlock(Vec<usize>),
    #[error("family must have one vertex per chamber ({expected}), got {got}")]
    IncompleteFamily { expected: usize, got: usize },
    #[error("family vertices must share a common level")]
    MixedLevels,
    #[error(
        "orthogonality violated between chambers {w} and {neighbor}: \
         difference {diff:?} is not a nonnegative multiple of the separating coroot"
    )]
    OrthogonalityViolation {
        w: String,
        neighbor: String,
        diff: Vec<i64>,
    },
    #[error("point {point:?} matched {count} region predicates, expected exactly one")]
    RegionCoverage { point: Vec<i64>, count: usize },
    #[error("point {point:?} matched {count} strata, tie-break failed")]
    AmbiguousStratum { point: Vec<i64>, count: usize },
    #[error("tie-break scale {got} is below the safe minimum {min} for these inputs")]
    ScaleTooSmall { got: i64, min: i64 },
    #[error("denominator factor carries no T-degree and cannot be expanded")]
    NonExpandableFactor,
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
