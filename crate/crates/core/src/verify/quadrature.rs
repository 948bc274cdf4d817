use num_complex::Complex64;
use rand::Rng;

use crate::dome::RoundDisk;
use crate::hyp::{ExtComplex, MoebiusMap};

use super::VerifyError;

/// A round domain with exactly known hyperbolic metric; the density is the
/// area form (square of the length density).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HyperbolicDomain {
    UnitDisk,
    UpperHalfPlane,
    Disk { center: Complex64, radius: f64 },
    DiskExterior { center: Complex64, radius: f64 },
    /// `{ z : Re(conj(normal) z) > offset }` for a unit normal.
    HalfPlane { normal: Complex64, offset: f64 },
}

impl HyperbolicDomain {
    /// Hyperbolic area form at an interior point.
    pub fn density(&self, z: Complex64) -> Option<f64> {
        let lam = match self {
            HyperbolicDomain::UnitDisk => {
                let d = 1.0 - z.norm_sqr();
                (d > 0.0).then(|| 2.0 / d)?
            }
            HyperbolicDomain::UpperHalfPlane => (z.im > 0.0).then(|| 1.0 / z.im)?,
            HyperbolicDomain::Disk { center, radius } => {
                let d = radius * radius - (z - center).norm_sqr();
                (d > 0.0).then(|| 2.0 * radius / d)?
            }
            HyperbolicDomain::DiskExterior { center, radius } => {
                let d = (z - center).norm_sqr() - radius * radius;
                (d > 0.0).then(|| 2.0 * radius / d)?
            }
            HyperbolicDomain::HalfPlane { normal, offset } => {
                let d = (normal.conj() * z).re - offset;
                (d > 0.0).then(|| 1.0 / d)?
            }
        };
        Some(lam * lam)
    }

    pub fn contains(&self, z: Complex64) -> bool {
        self.density(z).is_some()
    }

    /// The oriented boundary circle, disk side matching the domain.
    pub fn circle(&self) -> RoundDisk {
        match self {
            HyperbolicDomain::UnitDisk => RoundDisk::unit_disk(),
            HyperbolicDomain::UpperHalfPlane => {
                // Im z > 0 <=> Re(conj(-i) z) < 0.
                RoundDisk::half_plane(-Complex64::new(0.0, 1.0), 0.0)
            }
            HyperbolicDomain::Disk { center, radius } => RoundDisk::disk(*center, *radius),
            HyperbolicDomain::DiskExterior { center, radius } => {
                RoundDisk::disk_exterior(*center, *radius)
            }
            HyperbolicDomain::HalfPlane { normal, offset } => {
                RoundDisk::half_plane(-*normal, -*offset)
            }
        }
    }

    /// Reconstruct a domain from an oriented circle.
    pub fn from_circle(c: &RoundDisk) -> HyperbolicDomain {
        if c.a.abs() < 1e-12 {
            // Half-plane: form = 2 Re(conj(b) z) + d < 0.
            let normal = -c.b / c.b.norm();
            let offset = c.d / (2.0 * c.b.norm());
            HyperbolicDomain::HalfPlane { normal, offset }
        } else if c.a > 0.0 {
            let (center, radius) = c.center_radius().expect("bounded disk");
            HyperbolicDomain::Disk { center, radius }
        } else {
            let flipped = c.complement();
            let (center, radius) = flipped.center_radius().expect("bounded complement");
            HyperbolicDomain::DiskExterior { center, radius }
        }
    }

    pub fn transformed(&self, m: &MoebiusMap) -> HyperbolicDomain {
        HyperbolicDomain::from_circle(&self.circle().transformed(m))
    }
}

/// One instance of the area inequality: evaluation point `z` in the round
/// domain `omega`, and the integration region `region` = intersection of the
/// oriented closed disks, contained in the complement of `omega`.
#[derive(Debug, Clone)]
pub struct AreaLemmaCase {
    pub omega: HyperbolicDomain,
    pub region: Vec<RoundDisk>,
    pub z: Complex64,
}

impl AreaLemmaCase {
    /// The equality case: unit disk, full exterior, evaluation at `z`.
    pub fn disk_exterior(z: Complex64) -> Self {
        Self {
            omega: HyperbolicDomain::UnitDisk,
            region: vec![RoundDisk::unit_disk().complement()],
            z,
        }
    }

    /// The equality case on the upper half-plane: region is the closed lower
    /// half-plane.
    pub fn half_plane(z: Complex64) -> Self {
        Self {
            omega: HyperbolicDomain::UpperHalfPlane,
            // Im z < 0 <=> Re(conj(i) z) < 0.
            region: vec![RoundDisk::half_plane(Complex64::new(0.0, 1.0), 0.0)],
            z,
        }
    }

    /// Möbius image of a case: covariance of every ingredient.
    pub fn transformed(&self, m: &MoebiusMap) -> Option<Self> {
        let z = m.apply(ExtComplex::Finite(self.z)).finite()?;
        Some(Self {
            omega: self.omega.transformed(m),
            region: self.region.iter().map(|c| c.transformed(m)).collect(),
            z,
        })
    }

    /// A random Möbius image of the disk equality case, rejecting maps that
    /// push the configuration into numerically hostile territory.
    pub fn random_moebius_image<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let z = Complex64::from_polar(rng.random::<f64>() * 0.8, rng.random::<f64>() * 7.0);
            let base = AreaLemmaCase::disk_exterior(z);
            let m = MoebiusMap::random_sphere(rng);
            if let Some(case) = base.transformed(&m) {
                if case.z.norm() < 50.0 && case.omega.density(case.z).map_or(false, |d| d > 1e-6) {
                    return case;
                }
            }
        }
    }

    /// A random convex circular polygon inside the disk exterior: the
    /// integral over a sub-region keeps the inequality strict.
    pub fn random_polygon<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let z = Complex64::from_polar(rng.random::<f64>() * 0.7, rng.random::<f64>() * 7.0);
            // Anchor point well outside the disk; every constraint keeps it.
            let anchor = Complex64::from_polar(2.5 + rng.random::<f64>() * 2.0, rng.random::<f64>() * 7.0);
            let mut region = vec![RoundDisk::disk_exterior(Complex64::new(0.0, 0.0), 1.2)];
            let sides = 2 + (rng.random::<u32>() % 4) as usize;
            for _ in 0..sides {
                let dir = Complex64::from_polar(1.0, rng.random::<f64>() * 7.0);
                let radius = 1.0 + rng.random::<f64>() * 6.0;
                let center = anchor + dir * radius * (0.2 + 0.75 * rng.random::<f64>());
                region.push(RoundDisk::disk(center, radius));
            }
            if region.iter().all(|c| c.eval(anchor) < -1e-6) {
                return Self {
                    omega: HyperbolicDomain::UnitDisk,
                    region,
                    z,
                };
            }
        }
    }
}

/// Adaptive polar quadrature of `∫_region |ξ - z|^{-4} dA / ρ_Ω(z)`.
///
/// The radial integral along each ray from `z` is exact (the region is an
/// intersection of generalized disks, so each ray meets it in finitely many
/// intervals with endpoints from quadratics); the angular integral is
/// adaptive Simpson down to `tol`.
pub fn area_lemma_quadrature(case: &AreaLemmaCase, tol: f64) -> Result<f64, VerifyError> {
    if tol < 1e-8 {
        return Err(VerifyError::ConfigInvalid {
            detail: format!("quadrature tol {tol} below the supported 1e-8"),
        });
    }
    let rho = case.omega.density(case.z).ok_or_else(|| VerifyError::ConfigInvalid {
        detail: "evaluation point outside the metric domain".into(),
    })?;
    if case.region.iter().all(|c| c.eval(case.z) < 0.0) {
        return Err(VerifyError::ConfigInvalid {
            detail: "evaluation point inside the integration region".into(),
        });
    }
    let f = |theta: f64| ray_mass(case, theta);
    // Integrate piecewise between the tangency directions of the region's
    // boundary circles: the radial mass is smooth inside each arc, so the
    // angular Simpson never has to chase a derivative kink.
    let mut cuts = tangency_angles(case);
    cuts.push(0.0);
    cuts.push(std::f64::consts::TAU);
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    let mut integral = 0.0;
    let n_arcs = cuts.len() - 1;
    for w in cuts.windows(2) {
        integral += adaptive_simpson(&f, w[0], w[1], tol * rho * 0.5 / n_arcs as f64, 48)?;
    }
    Ok(integral / rho)
}

/// Directions from `z` in which a ray is tangent to a boundary circle of the
/// region; the radial mass has derivative kinks exactly there.
fn tangency_angles(case: &AreaLemmaCase) -> Vec<f64> {
    let tau = std::f64::consts::TAU;
    let mut cuts = Vec::new();
    for c in &case.region {
        if c.a.abs() < 1e-12 {
            // Half-plane boundary: kinks where the ray runs parallel to it.
            let normal = c.b.arg();
            cuts.push((normal + std::f64::consts::FRAC_PI_2).rem_euclid(tau));
            cuts.push((normal - std::f64::consts::FRAC_PI_2).rem_euclid(tau));
        } else {
            let center = -c.b / c.a;
            let radius = 1.0 / c.a.abs();
            let offset = center - case.z;
            let dist = offset.norm();
            if dist > radius {
                let spread = (radius / dist).asin();
                let dir = offset.arg();
                cuts.push((dir + spread).rem_euclid(tau));
                cuts.push((dir - spread).rem_euclid(tau));
            }
        }
    }
    cuts
}

/// `∫ s^{-3} ds` over the ray `z + s e^{iθ}` clipped to the region.
fn ray_mass(case: &AreaLemmaCase, theta: f64) -> f64 {
    let dir = Complex64::from_polar(1.0, theta);
    // Start with (0, inf) and intersect the admissible set of each disk.
    let mut intervals = vec![(0.0_f64, f64::INFINITY)];
    for c in &case.region {
        let quad_a = c.a;
        let quad_b = 2.0 * (c.a * (case.z.conj() * dir).re + (c.b.conj() * dir).re);
        let quad_c = c.eval(case.z);
        let allowed = quadratic_nonpositive(quad_a, quad_b, quad_c);
        intervals = intersect_intervals(&intervals, &allowed);
        if intervals.is_empty() {
            return 0.0;
        }
    }
    let mut mass = 0.0;
    for (lo, hi) in intervals {
        let lo = lo.max(1e-9);
        if hi <= lo {
            continue;
        }
        let hi_term = if hi.is_finite() { 1.0 / (hi * hi) } else { 0.0 };
        mass += 0.5 * (1.0 / (lo * lo) - hi_term);
    }
    mass
}

/// Solution set of `a s^2 + b s + c <= 0` as at most two intervals.
fn quadratic_nonpositive(a: f64, b: f64, c: f64) -> Vec<(f64, f64)> {
    if a.abs() < 1e-14 {
        if b.abs() < 1e-14 {
            return if c <= 0.0 {
                vec![(f64::NEG_INFINITY, f64::INFINITY)]
            } else {
                vec![]
            };
        }
        let root = -c / b;
        return if b > 0.0 {
            vec![(f64::NEG_INFINITY, root)]
        } else {
            vec![(root, f64::INFINITY)]
        };
    }
    let disc = b * b - 4.0 * a * c;
    if disc <= 0.0 {
        return if a < 0.0 {
            vec![(f64::NEG_INFINITY, f64::INFINITY)]
        } else {
            vec![]
        };
    }
    let sq = disc.sqrt();
    let r1 = (-b - sq) / (2.0 * a);
    let r2 = (-b + sq) / (2.0 * a);
    let (lo, hi) = if r1 < r2 { (r1, r2) } else { (r2, r1) };
    if a > 0.0 {
        vec![(lo, hi)]
    } else {
        vec![(f64::NEG_INFINITY, lo), (hi, f64::INFINITY)]
    }
}

fn intersect_intervals(a: &[(f64, f64)], b: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for &(a0, a1) in a {
        for &(b0, b1) in b {
            let lo = a0.max(b0);
            let hi = a1.min(b1);
            if hi > lo {
                out.push((lo, hi));
            }
        }
    }
    out
}

/// Plain recursive adaptive Simpson with an absolute tolerance.
fn adaptive_simpson(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    max_depth: usize,
) -> Result<f64, VerifyError> {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    fn rec(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: usize,
    ) -> Result<f64, VerifyError> {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        let delta = left + right - whole;
        if delta.abs() <= 15.0 * tol {
            return Ok(left + right + delta / 15.0);
        }
        if depth == 0 {
            return Err(VerifyError::QuadratureNonConvergent {
                achieved: delta.abs() / 15.0,
                requested: tol,
            });
        }
        Ok(rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)?
            + rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)?)
    }
    // Seed with a handful of panels so thin angular features are not missed.
    let panels = 16;
    let mut total = 0.0;
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
