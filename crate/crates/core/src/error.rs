use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NwtError {
    #[error("dimension mismatch: {left:?} times {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("vertex {vertex} in the uniform part has a different weight than vertex {first}")]
    NonUniformPart { first: usize, vertex: usize },
    #[error("triangle count may exceed 64 bits")]
    CountOverflow,
    #[error("counting supports at most {limit} vertices, got {n}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("internal defect: raw {which} count {raw} is not divisible by {divisor}")]
    Multiplicity {
        which: &'static str,
        raw: u64,
        divisor: u64,
    },
    #[error("weight magnitude {w_max} exceeds the supported bound {limit} for minimization")]
    WeightTooLarge { w_max: u128, limit: u128 },
    #[error("weight bound {bound} is smaller than the largest |weight| {actual}")]
    BoundTooSmall { bound: u64, actual: u64 },
    #[error("internal defect: no candidate in the window at level {level} (previous minimum {previous})")]
    WindowViolation { level: u32, previous: i128 },
}
