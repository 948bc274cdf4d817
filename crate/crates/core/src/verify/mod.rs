//! Independent numerical verification of the inequalities behind the bound
//! functions: Monte-Carlo half-plane configurations, the piecewise case
//! function, adaptive polar quadrature for the area bound and the derivative
//! kernel, and a brute-force arc sampler for lamination norms.
//!
//! Everything here is deliberately a *second* computational route: the
//! samplers and quadratures never call the algorithms they are checking.

mod bers;
mod campaigns;
mod casefn;
pub mod lamination_oracle;
mod lemma;
mod quadrature;
mod report;

pub use bers::{bers_kernel, lipschitz_check, KernelSample, LambdaField, LipschitzCheck};
pub use campaigns::{run_area_campaign, run_bers_campaign, run_trig_campaign, run_wedge_campaign};
pub use casefn::angle_case_function;
pub use lemma::{check_lemma_config, run_lemma_campaign, sample_lemma_config, LemmaCheck, LemmaConfig};
pub use quadrature::{area_lemma_quadrature, AreaLemmaCase, HyperbolicDomain};
pub use report::VerificationReport;

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum VerifyError {
    #[error("hypothesis violated: {detail}")]
    HypothesisViolated { detail: String },
    #[error("rejection sampling budget exhausted after {attempts} attempts")]
    RejectionBudgetExceeded { attempts: u64 },
    #[error("configuration invalid: {detail}")]
    ConfigInvalid { detail: String },
    #[error("quadrature did not converge: achieved {achieved:.3e}, requested {requested:.3e}")]
    QuadratureNonConvergent { achieved: f64, requested: f64 },
    #[error(transparent)]
    Bounds(#[from] crate::bounds::BoundsError),
    #[error(transparent)]
    Geometry(#[from] crate::hyp::GeomError),
    #[error(transparent)]
    Lamination(#[from] crate::lamination::LaminationError),
}
