//! Brute-force verification oracle for lamination norms: sample short
//! piecewise-geodesic arcs and take the largest transverse mass seen.
//!
//! Independent of the window algorithm: arcs are built from common
//! perpendiculars and random polylines, and their mass is accumulated from
//! raw endpoint-separation tests against each leaf. The sampled maximum can
//! only under-approximate the norm, and attains it once the length budget
//! clears the relevant gap.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hyp::mink::Mink3;
use crate::hyp::{Geodesic, PointH2};
use crate::lamination::FiniteLamination;

/// Maximum transverse mass over sampled open arcs of length < `l`.
pub fn sampled_norm(mu: &FiniteLamination, l: f64, samples: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = mu.leaves().len();
    if n == 0 {
        return 0.0;
    }
    let mut best: f64 = 0.0;

    // Deterministic pass: the common perpendicular of every leaf pair,
    // extended into crossings of both extremes when the budget allows.
    for i in 0..n {
        for j in i..n {
            if let Some(arc) = perpendicular_arc(mu, i, j, l) {
                best = best.max(polyline_mass(mu, &arc));
            }
        }
    }

    // Random pass: 1-3 segment polylines of total length just under l.
    for _ in 0..samples {
        let segs = 1 + (rng.random::<u32>() % 3) as usize;
        let start = random_point(&mut rng);
        let mut arc = vec![start];
        let mut remaining = l * (0.98 - 0.1 * rng.random::<f64>());
        let mut x = start.minkowski();
        for s in 0..segs {
            let frac = if s + 1 == segs {
                1.0
            } else {
                rng.random::<f64>()
            };
            let step = remaining * frac;
            remaining -= step;
            let dir = random_tangent(&mut rng, x);
            let next = x.scale(step.cosh()).add(dir.scale(step.sinh()));
            if let Ok(p) = PointH2::from_minkowski(next) {
                arc.push(p);
                x = next.normalize_timelike();
            } else {
                break;
            }
        }
        best = best.max(polyline_mass(mu, &arc));
    }
    best
}

/// Transverse mass of an open polyline: a leaf counts once if any segment
/// separates its endpoints strictly.
fn polyline_mass(mu: &FiniteLamination, arc: &[PointH2]) -> f64 {
    let mut mass = 0.0;
    for leaf in mu.leaves() {
        let n = leaf.geodesic.polar();
        let crossed = arc.windows(2).any(|seg| {
            let sa = seg[0].minkowski().dot(n);
            let sb = seg[1].minkowski().dot(n);
            sa.abs() > 1e-12 && sb.abs() > 1e-12 && sa.signum() != sb.signum()
        });
        if crossed {
            mass += leaf.weight;
        }
    }
    mass
}

/// The common-perpendicular segment between two leaves, stretched past both
/// feet so the extreme leaves are crossed, when that fits in length < l.
fn perpendicular_arc(mu: &FiniteLamination, i: usize, j: usize, l: f64) -> Option<Vec<PointH2>> {
    let gi = &mu.leaves()[i].geodesic;
    let gj = &mu.leaves()[j].geodesic;
    if i == j {
        // A short arc crossing a single leaf, at its closest point to the
        // origin for determinism.
        let n = gi.polar();
        let (x0, _) = gi.frame();
        let eps = (l / 4.0).min(0.1);
        let a = PointH2::from_minkowski(x0.scale(eps.cosh()).add(n.scale(eps.sinh()))).ok()?;
        let b = PointH2::from_minkowski(x0.scale(eps.cosh()).add(n.scale(-eps.sinh()))).ok()?;
        return Some(vec![a, b]);
    }
    let u = gi.polar().dot(gj.polar());
    if u.abs() <= 1.0 + 1e-12 {
        return None; // asymptotic leaves have no common perpendicular
    }
    let gap = u.abs().acosh();
    if gap >= l - 1e-3 {
        return None;
    }
    let foot_i = foot_on(gi, gj)?;
    let foot_j = foot_on(gj, gi)?;
    let v = foot_j.sub(foot_i.scale(gap.cosh())).scale(1.0 / gap.sinh());
    let eps = ((l - gap) / 2.0 * 0.9).min(0.5);
    let point_at = |s: f64| PointH2::from_minkowski(foot_i.scale(s.cosh()).add(v.scale(s.sinh()))).ok();
    Some(vec![point_at(-eps)?, point_at(gap + eps)?])
}

/// Foot of the common perpendicular on `host`, dropped from `other`.
fn foot_on(host: &Geodesic, other: &Geodesic) -> Option<Mink3> {
    let nh = host.polar();
    let no = other.polar();
    let u = nh.dot(no);
    if u * u <= 1.0 {
        return None;
    }
    Some(no.sub(nh.scale(u)).normalize_timelike())
}

/// Random stacked lamination with up to `max_leaves` leaves: tilted fence
/// posts along the real diameter, rejection-checked for disjointness.
pub fn random_stacked_lamination<R: Rng + ?Sized>(
    rng: &mut R,
    max_leaves: usize,
) -> FiniteLamination {
    use crate::lamination::Leaf;
    loop {
        let n = 1 + (rng.random::<u32>() as usize) % max_leaves;
        let mut positions: Vec<f64> = (0..n).map(|_| rng.random::<f64>() * 4.0 - 2.0).collect();
        positions.sort_by(|a, b| a.partial_cmp(b).unwrap());
        if positions.windows(2).any(|w| w[1] - w[0] < 0.05) {
            continue;
        }
        let leaves: Option<Vec<Leaf>> = positions
            .iter()
            .map(|&s| {
                let tilt = (rng.random::<f64>() - 0.5) * 0.5;
                let (x0, v) = Geodesic::diameter(0.0).frame();
                // Point on the real diameter at signed arclength s.
                let base = x0.scale(s.cosh()).add(v.scale(s.sinh())).normalize_timelike();
                let p = PointH2::from_minkowski(base).ok()?;
                // Leaf through p at angle (pi/2 + tilt) to the diameter.
                let weight = 0.1 + rng.random::<f64>() * 2.9;
                let geodesic = geodesic_through_at(p, std::f64::consts::FRAC_PI_2 + tilt)?;
                Some(Leaf { geodesic, weight })
            })
            .collect();
        let Some(leaves) = leaves else { continue };
        match FiniteLamination::new(leaves) {
            Ok(lam) if lam.is_stacked() => return lam,
            _ => continue,
        }
    }
}

/// Geodesic through a point at a Euclidean angle to the horizontal.
fn geodesic_through_at(p: PointH2, theta: f64) -> Option<Geodesic> {
    let z = p.z();
    let x = p.minkowski();
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
    Geodesic::new(e1.0[1].atan2(e1.0[0]), e2.0[1].atan2(e2.0[0])).ok()
}

fn random_point<R: Rng + ?Sized>(rng: &mut R) -> PointH2 {
    loop {
        let z = num_complex::Complex64::new(
            rng.random::<f64>() * 1.9 - 0.95,
            rng.random::<f64>() * 1.9 - 0.95,
        );
        if let Ok(p) = PointH2::new(z) {
            if z.norm() < 0.95 {
                return p;
            }
        }
    }
}

fn random_tangent<R: Rng + ?Sized>(rng: &mut R, x: Mink3) -> Mink3 {
    let theta = rng.random::<f64>() * std::f64::consts::TAU;
    // Project a random spatial direction onto the tangent space at x.
    let raw = Mink3([theta.cos(), theta.sin(), 0.0]);
    let lam = raw.dot(x); // <x,x> = -1, so the tangential part is raw + lam x
    raw.add(x.scale(lam)).normalize_spacelike()
}
