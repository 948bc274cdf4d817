use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::angle_bound;
use crate::hyp::{
    dist_h2, ext_angle_halfplanes, half_planes_disjoint, mink::Mink3, GeomError, Geodesic,
    HalfPlaneH2, PointH2, Side,
};

use super::report::VerificationReport;
use super::VerifyError;

const REJECTION_BUDGET: u64 = 100_000;

/// A sampled configuration of three half-planes and marked boundary points,
/// normalized with `z1` at the origin and `H1` the lower half-disk.
#[derive(Debug, Clone)]
pub struct LemmaConfig {
    pub l: f64,
    pub r: f64,
    pub h1: HalfPlaneH2,
    pub h2: HalfPlaneH2,
    pub h3: HalfPlaneH2,
    pub z1: PointH2,
    pub z2: PointH2,
    pub z3: PointH2,
}

/// Result of checking one configuration against the exterior-angle bound.
#[derive(Debug, Clone, Copy)]
pub struct LemmaCheck {
    pub intersects: bool,
    pub angle: f64,
    pub bound: f64,
    pub pass: bool,
}

/// Rejection-sample a configuration satisfying all the hypotheses:
/// `d(z1,z2) <= L`, `d(z1,z3) <= r`, `z1 ∉ H2°`, `z2 ∉ H1°`, and `H3`
/// disjoint from both `H1` and `H2`. Deterministic per seed.
pub fn sample_lemma_config(l: f64, r: f64, seed: u64) -> Result<LemmaConfig, VerifyError> {
    if l.sinh() * r.sinh() > 1.0 + 1e-12 {
        return Err(VerifyError::HypothesisViolated {
            detail: format!("sinh(L) sinh(r) = {} > 1", l.sinh() * r.sinh()),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0;
    loop {
        attempts += 1;
        if attempts > REJECTION_BUDGET {
            return Err(VerifyError::RejectionBudgetExceeded { attempts });
        }
        if let Some(cfg) = try_sample(l, r, &mut rng)? {
            validate_config(&cfg)?;
            return Ok(cfg);
        }
    }
}

fn try_sample(l: f64, r: f64, rng: &mut ChaCha8Rng) -> Result<Option<LemmaConfig>, VerifyError> {
    let z1 = PointH2::origin();
    let g1 = Geodesic::new(0.0, std::f64::consts::PI)?;
    let h1 = HalfPlaneH2::new(g1, Side::CwArc);

    // Boundary of H2 crosses the real axis within hyperbolic distance L of
    // the origin at a uniform angle; H2 is the side whose ideal arc contains
    // the boundary point 1, which keeps z1 out of its interior.
    let d_t = rng.random::<f64>() * l;
    let tau = (d_t / 2.0).tanh();
    let theta = rng.random::<f64>() * std::f64::consts::PI;
    let g2 = geodesic_through(Complex64::new(tau, 0.0), theta)?;
    let (p2, q2) = g2.endpoints();
    let zero_in_ccw = (0.0 - p2).rem_euclid(std::f64::consts::TAU) < q2 - p2;
    let h2 = HalfPlaneH2::new(g2, if zero_in_ccw { Side::CcwArc } else { Side::CwArc });
    if h2.contains_interior(&z1) {
        return Ok(None);
    }

    // z2 on the ray of g2 leaving the real axis into the upper half-disk.
    let base = PointH2::from_xy(tau, 0.0)?.minkowski();
    let tangent = g2.polar().cross(base).normalize_spacelike();
    let upward = {
        let probe = PointH2::from_minkowski(base.add(tangent.scale(1e-3)))?;
        if probe.z().im >= 0.0 {
            1.0
        } else {
            -1.0
        }
    };
    let s = rng.random::<f64>() * 2.0 * l * upward;
    let z2 = match PointH2::from_minkowski(base.scale(s.cosh()).add(tangent.scale(s.sinh()))) {
        Ok(p) => p,
        Err(_) => return Ok(None), // numerically at the circle; resample
    };
    if dist_h2(&z1, &z2) > l || z2.z().im < -1e-12 {
        return Ok(None);
    }

    // H3: support half-plane at distance <= r from the origin, facing away.
    // Its ideal arc has half-width atan(1/sinh d3); drawing the direction
    // inside the window compatible with disjointness from H1 discards only
    // proposals that could never validate, leaving the accepted
    // distribution unchanged.
    let d3 = rng.random::<f64>() * r;
    let half_width = 1.0_f64.atan2(d3.sinh());
    let window = (std::f64::consts::PI - 2.0 * half_width).max(0.0);
    if window <= 0.0 {
        return Ok(None);
    }
    let phi = half_width + rng.random::<f64>() * window;
    let g3 = Geodesic::tangent_at(phi, d3);
    let h3 = {
        let h = HalfPlaneH2::new(g3, Side::CcwArc);
        if h.contains_interior(&PointH2::origin()) {
            h.complement()
        } else {
            h
        }
    };
    let z3 = PointH2::new(Complex64::from_polar((d3 / 2.0).tanh(), phi))?;
    if !half_planes_disjoint(&h3, &h1) || !half_planes_disjoint(&h3, &h2) {
        return Ok(None);
    }

    Ok(Some(LemmaConfig {
        l,
        r,
        h1,
        h2,
        h3,
        z1,
        z2,
        z3,
    }))
}

/// Geodesic through an interior point with tangent at Euclidean angle theta.
fn geodesic_through(z: Complex64, theta: f64) -> Result<Geodesic, VerifyError> {
    let p = PointH2::new(z)?;
    let x = p.minkowski();
    // Differentiate the hyperboloid embedding along the Euclidean direction.
    let d = 1.0 - z.norm_sqr();
    let (ux, uy) = (theta.cos(), theta.sin());
    let zdotu = 2.0 * (z.re * ux + z.im * uy);
    let v = Mink3([
        (2.0 * ux * d + 2.0 * z.re * zdotu) / (d * d),
        (2.0 * uy * d + 2.0 * z.im * zdotu) / (d * d),
        (zdotu * d + (1.0 + z.norm_sqr()) * zdotu) / (d * d),
    ])
    .normalize_spacelike();
    let e1 = x.add(v);
    let e2 = x.sub(v);
    Ok(Geodesic::new(
        e1.0[1].atan2(e1.0[0]),
        e2.0[1].atan2(e2.0[0]),
    )?)
}

/// Check every hypothesis of a configuration; used as the constructive
/// postcondition of the sampler.
pub fn validate_config(cfg: &LemmaConfig) -> Result<(), VerifyError> {
    let fail = |detail: String| Err(VerifyError::ConfigInvalid { detail });
    if cfg.l.sinh() * cfg.r.sinh() > 1.0 + 1e-12 {
        return fail("sinh(L) sinh(r) > 1".into());
    }
    let on_boundary = |h: &HalfPlaneH2, p: &PointH2| h.signed(p).abs() < 1e-9;
    if !on_boundary(&cfg.h1, &cfg.z1) || !on_boundary(&cfg.h2, &cfg.z2) || !on_boundary(&cfg.h3, &cfg.z3) {
        return fail("marked points must lie on their boundaries".into());
    }
    if dist_h2(&cfg.z1, &cfg.z2) > cfg.l + 1e-9 {
        return fail(format!("d(z1,z2) = {} > L", dist_h2(&cfg.z1, &cfg.z2)));
    }
    if dist_h2(&cfg.z1, &cfg.z3) > cfg.r + 1e-9 {
        return fail(format!("d(z1,z3) = {} > r", dist_h2(&cfg.z1, &cfg.z3)));
    }
    if cfg.h2.signed(&cfg.z1) < -1e-9 {
        return fail("z1 inside the interior of H2".into());
    }
    if cfg.h1.signed(&cfg.z2) < -1e-9 {
        return fail("z2 inside the interior of H1".into());
    }
    if !half_planes_disjoint(&cfg.h3, &cfg.h1) || !half_planes_disjoint(&cfg.h3, &cfg.h2) {
        return fail("H3 must be disjoint from H1 and H2".into());
    }
    Ok(())
}

/// Compare the exterior angle of `H1, H2` against the bound; the
/// configuration passes when they intersect (or nest, angle 0) at exterior
/// angle at most `angle_bound(L, r) + 1e-9`.
pub fn check_lemma_config(cfg: &LemmaConfig) -> Result<LemmaCheck, VerifyError> {
    let bound = angle_bound(cfg.l, cfg.r)?.value;
    match ext_angle_halfplanes(&cfg.h1, &cfg.h2) {
        Ok(angle) => Ok(LemmaCheck {
            intersects: true,
            angle,
            bound,
            pass: angle <= bound + 1e-9,
        }),
        Err(GeomError::DisjointHalfPlanes { .. }) => Ok(LemmaCheck {
            intersects: false,
            angle: f64::NAN,
            bound,
            pass: false,
        }),
        Err(e) => Err(VerifyError::Geometry(e)),
    }
}

/// Monte-Carlo campaign at fixed `(L, r)`: per-trial seeds are derived as
/// `seed ^ trial` so serial and parallel runs report identically.
pub fn run_lemma_campaign(l: f64, r: f64, trials: u64, seed: u64) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let mut violations = 0;
    let mut max_observed: f64 = 0.0;
    let mut bound = 0.0;
    for trial in 0..trials {
        let cfg = sample_lemma_config(l, r, seed ^ trial)?;
        let check = check_lemma_config(&cfg)?;
        bound = check.bound;
        if check.angle.is_finite() {
            max_observed = max_observed.max(check.angle);
        }
        if !check.pass {
            violations += 1;
        }
    }
    Ok(VerificationReport {
        trials,
        violations,
        max_observed,
        bound_value: bound,
        seed,
        wall_time: start.elapsed().as_secs_f64(),
    })
}
