use thiserror::Error;

use crate::bidegree::Bidegree;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid ring `{0}`, expected `Z` or `Fp:<p>`")]
    InvalidRing(String),

    #[error("boundary matrices do not compose to zero at weight {weight}, degree {degree}")]
    NotAComplex { weight: u32, degree: i64 },

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("element has a component in weight 0, outside the augmentation ideal")]
    NotAugmentationIdeal,

    #[error("bidegree {bidegree} exceeds the weight cap {cap}")]
    WeightOutOfRange { bidegree: Bidegree, cap: u32 },

    #[error("invariant factor {0} does not fit in 64 bits")]
    FactorOverflow(String),

    #[error("unsupported combination: {0}")]
    Unsupported(String),

    #[error("invalid generator list: {0}")]
    InvalidGenerators(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
