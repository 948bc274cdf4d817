//! Schwarzian derivatives of analytic maps, pointwise hyperbolic norms of
//! quadratic differentials, and grid-based sup-norm estimation.

mod maps;
mod quaddiff;
mod supnorm;

pub use maps::{AnalyticMap, Jet3};
pub use quaddiff::{DiskModel, QuadDifferentialField};
pub use supnorm::{sup_norm_estimate, GridSpec, SupNormEstimate};

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum SchwarzianError {
    #[error("derivative vanishes at z = {z} (|f'| = {modulus:.3e}); Schwarzian undefined")]
    CriticalPoint { z: num_complex::Complex64, modulus: f64 },
    #[error("point z = {z} outside the model domain")]
    OutsideDomain { z: num_complex::Complex64 },
    #[error("unknown map '{name}' or bad parameter count (got {params})")]
    UnknownMap { name: String, params: usize },
    #[error("refinement budget exhausted before sup-norm convergence (best lower bound {lower})")]
    BudgetExceeded { lower: f64, estimate: SupNormEstimate },
}
