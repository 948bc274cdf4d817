use std::sync::Arc;

use num_complex::Complex64;

use crate::hyp::MoebiusMap;

use super::maps::AnalyticMap;
use super::SchwarzianError;

/// Which model the field lives on; fixes the hyperbolic area form used by
/// the pointwise norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiskModel {
    /// Unit disk, area form `4/(1-|z|^2)^2`.
    Disk,
    /// Upper half-plane, area form `1/Im(z)^2`.
    HalfPlane,
}

impl DiskModel {
    pub fn area_form(self, z: Complex64) -> Option<f64> {
        match self {
            DiskModel::Disk => {
                let d = 1.0 - z.norm_sqr();
                (d > 0.0).then(|| 4.0 / (d * d))
            }
            DiskModel::HalfPlane => (z.im > 0.0).then(|| 1.0 / (z.im * z.im)),
        }
    }
}

/// A holomorphic quadratic differential `φ(z) dz²` given by an evaluator.
#[derive(Clone)]
pub struct QuadDifferentialField {
    eval: Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>,
    model: DiskModel,
}

impl QuadDifferentialField {
    pub fn from_fn(model: DiskModel, f: impl Fn(Complex64) -> Complex64 + Send + Sync + 'static) -> Self {
        Self {
            eval: Arc::new(f),
            model,
        }
    }

    pub fn constant(model: DiskModel, c: Complex64) -> Self {
        Self::from_fn(model, move |_| c)
    }

    /// The Schwarzian derivative of a map, as a field on the disk.
    ///
    /// Evaluation at a critical point of the map yields a non-finite value
    /// rather than an error; sup-norm scans skip such samples.
    pub fn schwarzian_of(map: AnalyticMap) -> Self {
        Self::from_fn(DiskModel::Disk, move |z| {
            map.schwarzian(z)
                .unwrap_or(Complex64::new(f64::INFINITY, 0.0))
        })
    }

    pub fn model(&self) -> DiskModel {
        self.model
    }

    pub fn value(&self, z: Complex64) -> Complex64 {
        (self.eval)(z)
    }

    /// Pointwise hyperbolic norm `|φ(z)| / ρ(z)` with ρ the area form of the
    /// model; invariant under Möbius pullback.
    pub fn pointwise_norm(&self, z: Complex64) -> Result<f64, SchwarzianError> {
        let rho = self
            .model
            .area_form(z)
            .ok_or(SchwarzianError::OutsideDomain { z })?;
        Ok(self.value(z).norm() / rho)
    }

    /// The pullback `m*φ = (φ ∘ m) (m')²`.
    pub fn pullback(&self, m: MoebiusMap) -> Self {
        let inner = self.eval.clone();
        Self {
            eval: Arc::new(move |z| {
                let d = m.deriv(z);
                inner(m.apply_finite(z)) * d * d
            }),
            model: self.model,
        }
    }

    /// Cauchy–Riemann residual `|∂φ/∂z̄|` estimated on a four-point stencil
    /// of the given scale; near zero for holomorphic fields.
    pub fn holomorphy_residual(&self, z: Complex64, scale: f64) -> f64 {
        let h = scale;
        let fx = (self.value(z + Complex64::new(h, 0.0)) - self.value(z - Complex64::new(h, 0.0)))
            / (2.0 * h);
        let fy = (self.value(z + Complex64::new(0.0, h)) - self.value(z - Complex64::new(0.0, h)))
            / (2.0 * h);
        0.5 * (fx + Complex64::new(0.0, 1.0) * fy).norm()
    }

    /// On-demand holomorphy check: residual below 1e-6 relative to the
    /// probe scale.
    pub fn is_holomorphic_at(&self, z: Complex64, scale: f64) -> bool {
        self.holomorphy_residual(z, scale) < 1e-6 * (1.0 + self.value(z).norm())
    }
}

impl std::fmt::Debug for QuadDifferentialField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QuadDifferentialField({:?})", self.model)
    }
}
