use thiserror::Error;

use crate::lattice::Point;
use crate::semigroup::{SmallSet, Violation};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("{op} is only available for n = 2 (got n = {dim})")]
    UnsupportedDimension { op: &'static str, dim: usize },

    #[error("not a good semigroup: {violation}")]
    NotGoodSemigroup { small: Box<SmallSet>, violation: Violation },

    #[error("not a good relative ideal: {violation}")]
    NotGoodIdeal { small: Box<SmallSet>, violation: Violation },

    #[error("operation requires a local good semigroup (found {witness} on the axes); decompose it as a product of local factors first")]
    NonLocal { witness: Point },

    #[error("the given set does not generate the small elements of the semigroup")]
    NotAGeneratingSystem,

    #[error("generators {0:?} have gcd different from 1")]
    GcdNotOne(Vec<i64>),

    #[error("empty generating set")]
    EmptyGenerators,

    #[error("{0}")]
    InvalidInput(String),

    #[error("ideal is not contained in the semigroup: {0} is missing")]
    NotContained(i64),

    #[error("multiplication by {factor} does not map the source semigroup into the target ({witness} -> {image})")]
    NotAMorphism { factor: i64, witness: i64, image: i64 },

    #[error("ideals live over different semigroups")]
    AmbientMismatch,

    #[error("canonical ideal from generators disagrees with the definition at {0}")]
    CanonicalMismatch(Point),
}
