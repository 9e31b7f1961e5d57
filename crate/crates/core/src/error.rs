use num_bigint::BigUint;
use thiserror::Error;

/// Errors shared by the digit, clopen-set, measure and conversion operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radix {0} is smaller than 2")]
    RadixTooSmall(u64),
    #[error("a radix system needs a nonempty period")]
    EmptyPeriod,
    #[error("digit {digit} out of range for radix {radix} at position {position}")]
    DigitOutOfRange { position: u64, digit: u64, radix: u64 },
    #[error("operands belong to different radix systems")]
    MixedSystems,
    #[error("operands have different levels ({0} vs {1})")]
    LevelMismatch(u64, u64),
    #[error("successor of the lexicographic maximum")]
    Overflow,
    #[error("predecessor of the lexicographic minimum")]
    Underflow,
    #[error("rank {rank} outside [0, {size})")]
    RankOutOfRange { rank: BigUint, size: BigUint },
    #[error("target level {requested} is below the current level {current}")]
    LevelTooSmall { current: u64, requested: u64 },
    #[error("target level {requested} is above the current level {current}")]
    LevelTooLarge { current: u64, requested: u64 },
    #[error("the endpoints bound an empty interval")]
    EmptyInterval,
    #[error("base level has fewer than two elements")]
    TrivialBase,
    #[error("value outside [0, 1]")]
    OutOfRange,
    #[error("empty sample")]
    EmptyInput,
    #[error("sample depth {depth} is below the set level {level}")]
    DepthTooSmall { depth: u64, level: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
