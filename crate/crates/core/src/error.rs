use thiserror::Error;

/// Errors produced by the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("group closure exceeded the element cap of {cap}")]
    CapExceeded { cap: usize },

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("target degree {degree} exceeds the computed bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },

    #[error("no object with index {0} in this category")]
    ObjectNotFound(usize),

    #[error("Steenrod operations on odd/exterior classes are not supported for l > 2")]
    OddPartUnsupported,

    #[error("fan is not simplicial: cone {0:?} has linearly dependent rays")]
    NonSimplicial(Vec<usize>),

    #[error("cone {0:?} has multiplicity divisible by l; its mod-l subgroup drops rank")]
    BadMultiplicity(Vec<usize>),

    #[error("degree bound {bound} too small to certify the check")]
    BoundTooSmall { bound: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
