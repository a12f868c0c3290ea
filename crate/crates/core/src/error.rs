use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong while building or evaluating objects in this crate.
///
/// Results that are answers rather than failures (a bracket that leaves a
/// span, a set that does not close) are returned as ordinary values and only
/// become errors when the caller demands membership.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("pole: denominator {denominator} vanishes at λ = {lambda}")]
    Pole { denominator: String, lambda: String },
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("field is not in the span of the basis (stray term {witness})")]
    NotInSpan { witness: String },
    #[error("algebra does not close: [{a}, {b}] leaves the span (stray term {witness})")]
    NotClosed { a: String, b: String, witness: String },
    #[error("point lies on the projective horizon (denominator of the fractional map is zero)")]
    OnProjectiveHorizon,
    #[error("matrix is not nilpotent (fifth power is nonzero)")]
    NotNilpotent,
    #[error("matrix determinant is {0}, expected 1")]
    DeterminantNotOne(String),
    #[error("singular matrix")]
    Singular,
    #[error("out of domain: {0}")]
    OutOfDomain(String),
    #[error("{0} is not the square of a rational; use float mode or a perfect-square parameter")]
    NotPerfectSquare(String),
    #[error("σ(a,x) vanishes: the transformation is singular at this point")]
    DenominatorZero,
    #[error("chart boundary: ξ⁴ = {0} must be positive")]
    ChartBoundary(String),
    #[error("not a proper Lorentz matrix: {0}")]
    NotLorentz(String),
    #[error("parse error: {0}")]
    Parse(String),
}
