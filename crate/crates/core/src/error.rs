use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the special-function engine, the quadrature engines and
/// the kernel evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at {0}")]
    GammaPole(Complex64),

    #[error("hypergeometric parameter c = {0} is a non-positive integer")]
    HyperPole(Complex64),

    #[error("series did not converge within {terms} terms")]
    SeriesNotConverged { terms: usize },

    #[error("argument z = {0} lies on the branch cut [1, inf) and no side was declared")]
    BranchCut(Complex64),

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("point {0} is not strictly inside the unit disc")]
    OutsideDisc(Complex64),

    #[error("|A|^2 - |B|^2 = {0}, not an SU(1,1) element")]
    NotInGroup(f64),

    #[error("quadrature did not converge: estimate {estimate}, error estimate {error:e}")]
    QuadratureNotConverged { estimate: Complex64, error: f64 },

    #[error("integrand did not decay below the truncation threshold before offset {reached}")]
    TruncationNotReached { reached: f64 },

    #[error("kernel is singular on the diagonal (r = 0)")]
    Diagonal,

    #[error("Im(lambda) = {im} is outside the absolute-convergence envelope (needs >= {required})")]
    OutsideEnvelope { im: f64, required: f64 },

    #[error("initial data support radius {0} touches the disc boundary")]
    SupportTouchesBoundary(f64),

    #[error("finite-difference stencil leaves the domain at y = {0}")]
    StencilOutOfDomain(f64),

    #[error("invalid quadrature specification: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
