//! Error type shared by all solver stages.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Parameter validation failed (non-positive rate, bad pump spec, ...).
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A spectral grid request that would undersample the coherent window.
    #[error("invalid spectral grid: {0}")]
    InvalidGrid(String),

    /// The dense density-matrix system is numerically rank-deficient.
    /// Usually means a zero rate slipped through validation.
    #[error("singular density-matrix system (pivot {pivot:.3e})")]
    SingularSystem { pivot: f64 },

    /// |D| fell below threshold in the backward-wave solution: the medium is
    /// at or past the parametric-oscillation threshold and the boundary-value
    /// map diverges.
    #[error("gain divergence in backward-wave solution: |D| = {d_abs:.3e} at delta = {delta:.6e}")]
    GainDivergence { d_abs: f64, delta: f64 },

    /// Spectral quadrature did not settle under grid refinement.
    #[error("quadrature not converged after {refinements} refinements: max change {max_change:.3e} (rtol {rtol:.1e})")]
    QuadratureNotConverged {
        refinements: u32,
        max_change: f64,
        rtol: f64,
    },

    /// The integrand carries weight beyond the grid tails.
    #[error("quadrature truncated: tail extension contributes {tail_fraction:.3e} of the result (rtol {rtol:.1e})")]
    QuadratureTruncated { tail_fraction: f64, rtol: f64 },

    /// Correlation curve does not span enough delay for the requested metric.
    #[error("insufficient tau span for metrics: need {needed:.3e}, have {have:.3e}")]
    InsufficientSpan { needed: f64, have: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
