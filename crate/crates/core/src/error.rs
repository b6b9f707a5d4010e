use thiserror::Error;

/// Errors raised by the exact-arithmetic layer and the geometric analyses on top of it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial has no Sturm chain")]
    ZeroPolynomial,

    #[error("empty interval: need lo < hi (got lo = {lo}, hi = {hi})")]
    EmptyInterval { lo: String, hi: String },

    #[error("isolation width must be positive (got {0})")]
    NonPositiveWidth(String),

    #[error("genus must be at least 1: the genus 0 case is not treated")]
    GenusZero,

    #[error("{name} must be a positive integer (got {value})")]
    NonPositive { name: &'static str, value: i64 },

    #[error("weights ({0}, {1}) must be relatively prime")]
    NotCoprime(u64, u64),

    #[error("m < k required: not a Kähler class (k = {k}, m = {m})")]
    NotKahlerClass { k: u64, m: u64 },

    #[error("r = {0} must lie in (-1, 1) and be nonzero")]
    RadiusOutOfRange(String),

    #[error("the ray v = w is the product ray: the admissible profile is undefined there")]
    ProductRay,

    #[error("homothety factor must be positive (got {0})")]
    NonPositiveHomothety(String),

    #[error("ray slope c = {0} must be a positive rational")]
    NonPositiveSlope(String),

    #[error("malformed rational {0:?}: expected \"p\" or \"p/q\"")]
    ParseRational(String),

    /// A proven invariant failed to hold; this indicates a bug rather than bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for failures that signal a broken internal invariant rather than invalid input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
