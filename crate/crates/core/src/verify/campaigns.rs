//! Prepackaged verification campaigns behind the batch front-end: each runs
//! a family of independent checks and folds the outcome into a
//! [`VerificationReport`].

use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::bending_bound;
use crate::dome::{thickness_bound, wedge_dome, wedge_thickness};
use crate::hyp::{ideal_triangle_side, ideal_triangle_side_sinh, ideal_triangle_tan_product};
use crate::schwarzian::{sup_norm_estimate, AnalyticMap, GridSpec, QuadDifferentialField};

use super::bers::{lipschitz_check, KernelSample, LambdaField};
use super::quadrature::{area_lemma_quadrature, AreaLemmaCase};
use super::report::VerificationReport;
use super::VerifyError;

/// Mutual consistency of the three ideal-vertex triangle formulas on random
/// angle pairs, sampled away from the degenerate sum where half the digits
/// are genuinely lost.
pub fn run_trig_campaign(trials: u64, seed: u64, tol: f64) -> VerificationReport {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0;
    let mut max_observed: f64 = 0.0;
    let mut done = 0;
    while done < trials {
        let alpha = 0.05 + rng.random::<f64>() * (std::f64::consts::PI - 0.2);
        let beta = 0.05 + rng.random::<f64>() * (std::f64::consts::PI - alpha - 0.1).max(1e-3);
        if alpha + beta >= std::f64::consts::PI - 0.05 {
            continue;
        }
        let c1 = ideal_triangle_side(alpha, beta).expect("validated angles");
        let c2 = ideal_triangle_side_sinh(alpha, beta).expect("validated angles");
        let c3 = ideal_triangle_tan_product(alpha, beta).expect("validated angles");
        let sh = (alpha.cos() + beta.cos()) / (alpha.sin() * beta.sin());
        let ch = (alpha.cos() * beta.cos() + 1.0) / (alpha.sin() * beta.sin());
        let pythagoras = (sh * sh + 1.0 - ch * ch).abs() / (ch * ch);
        let residual = (c1 - c2).abs().max((c1 - c3).abs()).max(pythagoras);
        max_observed = max_observed.max(residual);
        if residual > tol {
            violations += 1;
        }
        done += 1;
    }
    VerificationReport {
        trials,
        violations,
        max_observed,
        bound_value: tol,
        seed,
        wall_time: start.elapsed().as_secs_f64(),
    }
}

/// End-to-end wedge suite: exact bending against the closed-form bound, the
/// atomic lamination norm, sampled thickness against the flow-time gap, and
/// the sup-norm estimate of the registry map against `(1-k^2)/2`.
pub fn run_wedge_campaign(
    k: f64,
    l: f64,
    samples: usize,
    seed: u64,
    thickness_tol: f64,
) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let invalid = |detail: String| VerifyError::ConfigInvalid { detail };
    if !(0.0 < k && k < 1.0) {
        return Err(invalid(format!("k = {k} must lie in (0, 1)")));
    }
    let s = (1.0 - k * k) / 2.0;
    let x_max = 0.5 / l.cosh();
    if s > x_max + 1e-13 {
        return Err(invalid(format!(
            "(1-k^2)/2 = {s} exceeds sech(L)/2 = {x_max}: L = {l} inadmissible"
        )));
    }
    let dome = wedge_dome(k).map_err(|e| invalid(e.to_string()))?;
    let bound = bending_bound(l, s)?.value;
    let mut violations = 0;
    if dome.weight > bound + 1e-12 {
        violations += 1;
    }
    if (dome.lamination().norm_l(l)? - dome.weight).abs() > 1e-12 {
        violations += 1;
    }
    let thickness = wedge_thickness(k, samples).map_err(|e| invalid(e.to_string()))?;
    if thickness > thickness_bound(s)? + thickness_tol {
        violations += 1;
    }
    let map = AnalyticMap::by_name("wedge", &[k]).map_err(|e| invalid(e.to_string()))?;
    let phi = QuadDifferentialField::schwarzian_of(map);
    let est = sup_norm_estimate(&phi, &GridSpec::default()).map_err(|e| invalid(e.to_string()))?;
    if (est.lower - s).abs() > 1e-3 {
        violations += 1;
    }
    Ok(VerificationReport {
        trials: 4,
        violations,
        max_observed: thickness,
        bound_value: bound,
        seed,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

/// Area bound campaign: the two exact equality cases plus random Möbius
/// images of the disk case, each quadrature-evaluated against π/4.
pub fn run_area_campaign(trials: u64, seed: u64, tol: f64) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let quad_tol = tol.clamp(1e-8, 1e-7);
    let mut cases = vec![
        AreaLemmaCase::disk_exterior(Complex64::new(0.0, 0.0)),
        AreaLemmaCase::half_plane(Complex64::new(0.0, 1.0)),
    ];
    for i in 0..trials {
        // Per-trial derived seeds keep reports independent of scheduling.
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ i);
        cases.push(AreaLemmaCase::random_moebius_image(&mut rng));
    }
    let bound = std::f64::consts::FRAC_PI_4;
    let mut violations = 0;
    let mut max_observed: f64 = 0.0;
    for (i, case) in cases.iter().enumerate() {
        let v = area_lemma_quadrature(case, quad_tol)?;
        max_observed = max_observed.max(v);
        if v > bound + tol {
            violations += 1;
        }
        if i < 2 && (v - bound).abs() > tol {
            violations += 1;
        }
    }
    Ok(VerificationReport {
        trials: cases.len() as u64,
        violations,
        max_observed,
        bound_value: bound,
        seed,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

/// Kernel campaign: the constant field against the mean-value closed form
/// `-6/z^4`, plus the Lipschitz-ratio sweep against 3/2.
pub fn run_bers_campaign(samples: usize, seed: u64, tol: f64) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let lambda = LambdaField::constant_one();
    // Log-spaced radii with golden-angle spin, out to |z| = 50.
    let points: Vec<Complex64> = (0..samples)
        .map(|i| {
            let t = i as f64 / (samples.max(2) - 1) as f64;
            let radius = 1.25 * (50.0f64 / 1.25).powf(t);
            Complex64::from_polar(radius, 2.399963229728653 * i as f64)
        })
        .collect();
    let mut violations = 0;
    for &z in &points {
        let sample = KernelSample::constant_field(z, (tol * 0.1).max(1e-8))?;
        if (sample.value - sample.reference).norm() > tol * sample.reference.norm() {
            violations += 1;
        }
    }
    let check = lipschitz_check(&lambda, &points, tol)?;
    for (z, ratio) in &check.ratios {
        let expect = 1.5 * (1.0 - 1.0 / z.norm_sqr()).powi(2);
        if (ratio - expect).abs() > tol || *ratio > 1.5 + tol {
            violations += 1;
        }
    }
    Ok(VerificationReport {
        trials: 2 * points.len() as u64,
        violations,
        max_observed: check.max_ratio,
        bound_value: 1.5,
        seed,
        wall_time: start.elapsed().as_secs_f64(),
    })
}
