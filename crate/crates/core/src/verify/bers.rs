use std::sync::Arc;

use num_complex::Complex64;

use super::VerifyError;

/// A bounded Beltrami-coefficient field on the unit disk, with its declared
/// sup norm.
#[derive(Clone)]
pub struct LambdaField {
    eval: Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>,
    pub sup: f64,
}

impl LambdaField {
    pub fn constant_one() -> Self {
        Self {
            eval: Arc::new(|_| Complex64::new(1.0, 0.0)),
            sup: 1.0,
        }
    }

    pub fn from_fn(sup: f64, f: impl Fn(Complex64) -> Complex64 + Send + Sync + 'static) -> Self {
        Self {
            eval: Arc::new(f),
            sup,
        }
    }

    /// A smooth unimodular field (`|λ| = 1` pointwise): pure phase.
    pub fn unimodular_phase(c1: f64, c2: f64) -> Self {
        Self::from_fn(1.0, move |z| {
            Complex64::from_polar(1.0, c1 * z.re + c2 * z.im * z.im)
        })
    }

    pub fn value(&self, z: Complex64) -> Complex64 {
        (self.eval)(z)
    }
}

impl std::fmt::Debug for LambdaField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LambdaField(sup = {})", self.sup)
    }
}

/// The derivative kernel `-(6/π) ∫_Δ λ(ξ)/(ξ - z)^4 dA(ξ)` for `|z| > 1`.
///
/// Rays from `z` sweep the visibility cone of the disk; the radial factor is
/// `s^{-3}` after the area element, integrated by Gauss panels, and the
/// angular integral is adaptive Simpson on the complex values. For `λ ≡ 1`
/// the mean-value property gives `-6/z^4` exactly.
pub fn bers_kernel(lambda: &LambdaField, z: Complex64, tol: f64) -> Result<Complex64, VerifyError> {
    let rz = z.norm();
    if rz <= 1.0 + 1e-6 {
        return Err(VerifyError::ConfigInvalid {
            detail: format!("|z| = {rz} must exceed 1 + 1e-6"),
        });
    }
    let theta0 = (-z).arg();
    let half = (1.0 / rz).asin();
    let integrand = |theta: f64| -> Complex64 {
        let dir = Complex64::from_polar(1.0, theta);
        // Chord of the unit circle along the ray z + s dir.
        let p = (z.conj() * dir).re;
        let disc = p * p - (rz * rz - 1.0);
        if disc <= 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let (a, b) = (-p - disc.sqrt(), -p + disc.sqrt());
        if b <= 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let a = a.max(1e-12);
        let radial = gauss_panels(
            &|s: f64| lambda.value(z + s * dir) / (s * s * s),
            a,
            b,
        );
        let e = Complex64::from_polar(1.0, -4.0 * theta);
        e * radial
    };
    let integral = adaptive_simpson_complex(
        &integrand,
        theta0 - half,
        theta0 + half,
        tol * rz.powi(-4).max(1e-12),
        44,
    )?;
    Ok(-(6.0 / std::f64::consts::PI) * integral)
}

/// Fixed 16-point Gauss-Legendre on geometric panels: accurate for the
/// smooth, steep `s^{-3}` factor.
fn gauss_panels(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64) -> Complex64 {
    // Abscissas/weights for n = 16 on [-1, 1].
    const X: [f64; 8] = [
        0.0950125098376374,
        0.2816035507792589,
        0.4580167776572274,
        0.6178762444026438,
        0.7554044083550030,
        0.8656312023878318,
        0.9445750230732326,
        0.9894009349916499,
    ];
    const W: [f64; 8] = [
        0.1894506104550685,
        0.1826034150449236,
        0.1691565193950025,
        0.1495959888165767,
        0.1246289712555339,
        0.0951585116824928,
        0.0622535239386479,
        0.0271524594117541,
    ];
    // Split [a, b] into panels with bounded ratio so s^{-3} stays tame.
    let mut panels = Vec::new();
    let mut lo = a;
    while lo * 2.0 < b {
        panels.push((lo, lo * 2.0));
        lo *= 2.0;
    }
    panels.push((lo, b));
    let mut total = Complex64::new(0.0, 0.0);
    for (p0, p1) in panels {
        let c = 0.5 * (p0 + p1);
        let h = 0.5 * (p1 - p0);
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..8 {
            acc += W[i] * (f(c + h * X[i]) + f(c - h * X[i]));
        }
        total += acc * h;
    }
    total
}

fn adaptive_simpson_complex(
    f: &dyn Fn(f64) -> Complex64,
    a: f64,
    b: f64,
    tol: f64,
    max_depth: usize,
) -> Result<Complex64, VerifyError> {
    fn simpson(fa: Complex64, fm: Complex64, fb: Complex64, a: f64, b: f64) -> Complex64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn rec(
        f: &dyn Fn(f64) -> Complex64,
        a: f64,
        b: f64,
        fa: Complex64,
        fm: Complex64,
        fb: Complex64,
        whole: Complex64,
        tol: f64,
        depth: usize,
    ) -> Result<Complex64, VerifyError> {
        let m = 0.5 * (a + b);
        let flm = f(0.5 * (a + m));
        let frm = f(0.5 * (m + b));
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        let delta = left + right - whole;
        if delta.norm() <= 15.0 * tol {
            return Ok(left + right + delta / 15.0);
        }
        if depth == 0 {
            return Err(VerifyError::QuadratureNonConvergent {
                achieved: delta.norm() / 15.0,
                requested: tol,
            });
        }
        Ok(rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)?
            + rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)?)
    }
    let panels = 8;
    let mut total = Complex64::new(0.0, 0.0);
    for k in 0..panels {
        let x0 = a + (b - a) * k as f64 / panels as f64;
        let x1 = a + (b - a) * (k + 1) as f64 / panels as f64;
        let m = 0.5 * (x0 + x1);
        let (f0, fm, f1) = (f(x0), f(m), f(x1));
        total += rec(
            f,
            x0,
            x1,
            f0,
            fm,
            f1,
            simpson(f0, fm, f1, x0, x1),
            tol / panels as f64,
            max_depth,
        )?;
    }
    Ok(total)
}

/// One kernel evaluation against the mean-value reference for the constant
/// field: `-6/z^4` exactly.
#[derive(Debug, Clone, Copy)]
pub struct KernelSample {
    pub z: Complex64,
    pub value: Complex64,
    pub reference: Complex64,
    /// Norm of the value against the exterior hyperbolic area form.
    pub pointwise_norm: f64,
}

impl KernelSample {
    /// Evaluate the constant-field kernel at `z` (requires `|z| > 1 + 1e-6`).
    pub fn constant_field(z: Complex64, tol: f64) -> Result<Self, VerifyError> {
        let value = bers_kernel(&LambdaField::constant_one(), z, tol)?;
        let d = z.norm_sqr() - 1.0;
        Ok(Self {
            z,
            value,
            reference: -6.0 / (z * z * z * z),
            pointwise_norm: value.norm() * d * d / 4.0,
        })
    }
}

/// Result of the Lipschitz-constant sweep.
#[derive(Debug, Clone)]
pub struct LipschitzCheck {
    pub max_ratio: f64,
    pub pass: bool,
    pub ratios: Vec<(Complex64, f64)>,
}

/// Pointwise norm of the kernel against the exterior hyperbolic area form
/// `4/(|z|^2-1)^2`, normalized by the field's sup; the ratio must stay at or
/// below 3/2, which it approaches as `|z| -> ∞` for `λ ≡ 1`.
pub fn lipschitz_check(
    lambda: &LambdaField,
    sample_points: &[Complex64],
    tol: f64,
) -> Result<LipschitzCheck, VerifyError> {
    let mut ratios = Vec::with_capacity(sample_points.len());
    let mut max_ratio: f64 = 0.0;
    for &z in sample_points {
        let k = bers_kernel(lambda, z, tol.min(1e-6))?;
        let d = z.norm_sqr() - 1.0;
        let rho = 4.0 / (d * d);
        let ratio = k.norm() / rho / lambda.sup;
        max_ratio = max_ratio.max(ratio);
        ratios.push((z, ratio));
    }
    Ok(LipschitzCheck {
        max_ratio,
        pass: max_ratio <= 1.5 + tol,
        ratios,
    })
}
