use num_complex::Complex64;
use serde::Serialize;

use super::quaddiff::{DiskModel, QuadDifferentialField};
use super::SchwarzianError;

/// Grid specification for the sup-norm search, uniform in hyperbolic polar
/// coordinates `(r, θ)` out to hyperbolic radius `r_max`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub r_max: f64,
    pub radial: usize,
    pub angular: usize,
    /// Stop refining once the lower bound moves by less than this relative
    /// amount.
    pub refine_tol: f64,
    /// Number of resolution doublings allowed.
    pub max_refinements: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            r_max: 12.0,
            radial: 48,
            angular: 64,
            refine_tol: 1e-9,
            max_refinements: 6,
        }
    }
}

/// Result of the grid search: a certified-by-evaluation lower bound and a
/// heuristic upper companion (lower plus the largest oscillation between
/// adjacent samples). Only the lower bound is load-bearing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SupNormEstimate {
    pub lower: f64,
    pub upper: f64,
    pub samples: usize,
    pub grid: GridSpec,
}

/// Estimate the sup of the pointwise norm over the disk (or half-plane via
/// the model's coordinates pulled back to the disk grid).
///
/// The grid nests under refinement, so `lower` is monotone nondecreasing
/// across levels. Errors with the best estimate attached when the refinement
/// budget runs out before the lower bound settles.
pub fn sup_norm_estimate(
    phi: &QuadDifferentialField,
    grid: &GridSpec,
) -> Result<SupNormEstimate, SchwarzianError> {
    let mut radial = grid.radial.max(2);
    let mut angular = grid.angular.max(4);
    let mut best = scan(phi, grid, radial, angular);
    for _ in 0..grid.max_refinements {
        let prev = best.lower;
        radial *= 2;
        angular *= 2;
        let next = scan(phi, grid, radial, angular);
        best = SupNormEstimate {
            lower: next.lower.max(best.lower),
            upper: next.upper.max(next.lower.max(best.lower)),
            samples: next.samples,
            grid: *grid,
        };
        if (best.lower - prev).abs() <= grid.refine_tol * best.lower.max(1e-300) {
            return Ok(best);
        }
    }
    Err(SchwarzianError::BudgetExceeded {
        lower: best.lower,
        estimate: best,
    })
}

fn scan(phi: &QuadDifferentialField, grid: &GridSpec, radial: usize, angular: usize) -> SupNormEstimate {
    let mut lower: f64 = 0.0;
    let mut osc: f64 = 0.0;
    let mut samples = 0;
    let mut prev_ring: Vec<f64> = Vec::new();
    for j in 0..=radial {
        let r = grid.r_max * j as f64 / radial as f64;
        let rho = (r / 2.0).tanh();
        let mut ring: Vec<f64> = Vec::with_capacity(angular);
        for i in 0..angular {
            let theta = std::f64::consts::TAU * i as f64 / angular as f64;
            let z = disk_coord(phi.model(), rho, theta);
            let v = phi.pointwise_norm(z).unwrap_or(f64::NAN);
            let v = if v.is_finite() { v } else { 0.0 };
            samples += 1;
            lower = lower.max(v);
            if i > 0 {
                osc = osc.max((v - ring[i - 1]).abs());
            }
            if !prev_ring.is_empty() {
                osc = osc.max((v - prev_ring[i]).abs());
            }
            ring.push(v);
        }
        osc = osc.max((ring[0] - ring[angular - 1]).abs());
        prev_ring = ring;
    }
    SupNormEstimate {
        lower,
        upper: lower + osc,
        samples,
        grid: *grid,
    }
}

fn disk_coord(model: DiskModel, rho: f64, theta: f64) -> Complex64 {
    let z = Complex64::from_polar(rho, theta);
    match model {
        DiskModel::Disk => z,
        // Same hyperbolic grid transported to the upper half-plane.
        DiskModel::HalfPlane => {
            let one = Complex64::new(1.0, 0.0);
            Complex64::new(0.0, 1.0) * (one + z) / (one - z)
        }
    }
}
