use serde::Serialize;

/// Outcome of a verification campaign. Violations are counted against
/// `bound_value + 1e-9`; `max_observed` is the largest quantity the campaign
/// compared against the bound.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub trials: u64,
    pub violations: u64,
    pub max_observed: f64,
    pub bound_value: f64,
    pub seed: u64,
    pub wall_time: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}
