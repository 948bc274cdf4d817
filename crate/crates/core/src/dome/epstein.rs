use num_complex::Complex64;

use crate::bounds::{r_from_norm, BoundsError};
use crate::schwarzian::{QuadDifferentialField, SchwarzianError};

use super::DomeError;

/// Principal-curvature field of the normal-flow surface at time `t`,
/// driven by the pointwise norm of a quadratic differential. Immersed at
/// `t = 0` where the norm stays below 1/2.
pub struct EpsteinCurvatureField {
    field: QuadDifferentialField,
    pub t: f64,
}

impl EpsteinCurvatureField {
    pub fn new(field: QuadDifferentialField, t: f64) -> Self {
        Self { field, t }
    }

    pub fn norm_at(&self, z: Complex64) -> Result<f64, SchwarzianError> {
        self.field.pointwise_norm(z)
    }

    pub fn dual_eigenvalues_at(&self, z: Complex64) -> Result<(f64, f64), SchwarzianError> {
        Ok(dual_eigenvalues(self.norm_at(z)?, self.t))
    }

    pub fn principal_curvatures_at(&self, z: Complex64) -> Result<(f64, f64), DomeError> {
        epstein_principal_curvatures(self.norm_at(z)?, self.t)
    }
}

/// Eigenvalues `e^{-2t} (1 ± 2n)` of the dual shape operator of the
/// normal-flow surface at time `t`, for pointwise Schwarzian norm `n`.
pub fn dual_eigenvalues(n: f64, t: f64) -> (f64, f64) {
    let s = (-2.0 * t).exp();
    (s * (1.0 + 2.0 * n), s * (1.0 - 2.0 * n))
}

/// Principal curvatures of the normal-flow surface at time `t`, recovered
/// eigenvalue-wise from the duals through `b = (1 - b̂)/(1 + b̂)`.
///
/// At `t = 0` this is `(-n/(n+1), -n/(n-1))`. Errors when a dual eigenvalue
/// hits -1, where the conversion is undefined.
pub fn epstein_principal_curvatures(n: f64, t: f64) -> Result<(f64, f64), DomeError> {
    if n < 0.0 {
        return Err(DomeError::ParameterRange {
            name: "n",
            value: n,
            lo: 0.0,
            hi: f64::INFINITY,
        });
    }
    let (mu_plus, mu_minus) = dual_eigenvalues(n, t);
    let convert = |mu: f64| -> Result<f64, DomeError> {
        if (mu + 1.0).abs() < 1e-12 {
            Err(DomeError::DualEigenvalueSingular { eigenvalue: mu })
        } else {
            Ok((1.0 - mu) / (1.0 + mu))
        }
    };
    Ok((convert(mu_plus)?, convert(mu_minus)?))
}

/// Flow times `(t0, t1)` past which the normal-flow surface is locally
/// convex / concave: `e^{2 t0} = 1 + 2s`, `e^{2 t1} = 1 - 2s`. The gap
/// `t0 - t1` is exactly the thickness bound `r(s)`.
pub fn convexity_times(s: f64) -> Result<(f64, f64), BoundsError> {
    r_from_norm(s)?; // same domain check: 0 <= s < 1/2
    Ok((0.5 * (1.0 + 2.0 * s).ln(), 0.5 * (1.0 - 2.0 * s).ln()))
}

/// Thickness bound `½ log((1+2s)/(1-2s))` for hulls of curves bounded by a
/// univalent image with Schwarzian sup norm `s < 1/2`.
pub fn thickness_bound(s: f64) -> Result<f64, BoundsError> {
    r_from_norm(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn flat_surface_has_zero_curvatures() {
        assert_eq!(epstein_principal_curvatures(0.0, 0.0).unwrap(), (0.0, 0.0));
    }

    #[test]
    fn quarter_norm_curvatures() {
        let (k1, k2) = epstein_principal_curvatures(0.25, 0.0).unwrap();
        assert!((k1 + 0.2).abs() < 1e-15); // -n/(n+1) = -1/5
        assert!((k2 - 1.0 / 3.0).abs() < 1e-15); // -n/(n-1) = 1/3
        let (m1, m2) = dual_eigenvalues(0.25, 0.0);
        assert_eq!((m1, m2), (1.5, 0.5));
    }

    #[test]
    fn duals_round_trip_through_the_curvatures() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..2000 {
            let n = rng.random::<f64>() * 0.49;
            let t = rng.random::<f64>() * 2.0 - 1.0;
            let (m1, m2) = dual_eigenvalues(n, t);
            if (m1 + 1.0).abs() < 1e-9 || (m2 + 1.0).abs() < 1e-9 {
                continue;
            }
            let (k1, k2) = epstein_principal_curvatures(n, t).unwrap();
            // Apply (1 - b)/(1 + b) to each curvature: recovers the dual.
            assert!(((1.0 - k1) / (1.0 + k1) - m1).abs() < 1e-12);
            assert!(((1.0 - k2) / (1.0 + k2) - m2).abs() < 1e-12);
        }
    }

    #[test]
    fn singular_dual_detected() {
        // e^{-2t}(1 - 2n) = -1 for n = 1 at t = 0.
        assert!(matches!(
            epstein_principal_curvatures(1.0, 0.0),
            Err(DomeError::DualEigenvalueSingular { .. })
        ));
    }

    #[test]
    fn convexity_gap_is_thickness_bound() {
        assert_eq!(convexity_times(0.0).unwrap(), (0.0, 0.0));
        let (t0, t1) = convexity_times(0.25).unwrap();
        assert!((t0 - 0.5 * 1.5_f64.ln()).abs() < 1e-15);
        assert!((t1 - 0.5 * 0.5_f64.ln()).abs() < 1e-15);
        assert!((t0 - t1 - 0.5 * 3.0_f64.ln()).abs() < 1e-15);
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..2000 {
            let s = rng.random::<f64>() * 0.499;
            let (t0, t1) = convexity_times(s).unwrap();
            assert!((t0 - t1 - r_from_norm(s).unwrap()).abs() < 1e-14);
        }
        assert!(convexity_times(0.5).is_err());
    }

    #[test]
    fn thickness_bound_values() {
        assert_eq!(thickness_bound(0.0).unwrap(), 0.0);
        assert!((thickness_bound(0.18).unwrap() - 0.5 * (1.36_f64 / 0.64).ln()).abs() < 1e-15);
        assert!(thickness_bound(0.5).is_err());
    }

    #[test]
    fn curvature_field_over_the_wedge_map() {
        use crate::schwarzian::AnalyticMap;
        // The wedge field has constant norm (1-k^2)/2 along the real
        // diameter, so the curvatures there match the scalar formulas.
        let k = 0.8;
        let s = (1.0 - k * k) / 2.0;
        let field = EpsteinCurvatureField::new(
            QuadDifferentialField::schwarzian_of(AnalyticMap::wedge(k)),
            0.0,
        );
        for &x in &[0.0, 0.4, -0.6] {
            let z = Complex64::new(x, 0.0);
            let n = field.norm_at(z).unwrap();
            assert!((n - s).abs() < 1e-12);
            let (k1, k2) = field.principal_curvatures_at(z).unwrap();
            assert!((k1 + s / (s + 1.0)).abs() < 1e-12);
            assert!((k2 + s / (s - 1.0)).abs() < 1e-12);
            let (m1, m2) = field.dual_eigenvalues_at(z).unwrap();
            assert!((m1 - (1.0 + 2.0 * s)).abs() < 1e-12);
            assert!((m2 - (1.0 - 2.0 * s)).abs() < 1e-12);
        }
    }
}
