use num_complex::Complex64;
use std::f64::consts::PI;

use crate::hyp::Geodesic;
use crate::lamination::{FiniteLamination, Leaf};

use super::halfspace::{ext_dihedral, HalfSpaceH3, RoundDisk};
use super::DomeError;

/// A point of the upper half-space model: horizontal coordinate `w`, height
/// `t > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointH3 {
    pub w: Complex64,
    pub t: f64,
}

impl PointH3 {
    pub fn new(w: Complex64, t: f64) -> Result<Self, DomeError> {
        if t > 0.0 {
            Ok(Self { w, t })
        } else {
            Err(DomeError::NotInterior { t })
        }
    }
}

/// The exactly-bent dome over the reflex wedge complementary to the sector
/// of angle `kπ`: two vertical half-planes over the sector's edge rays,
/// meeting along the vertical geodesic over the origin with exterior
/// dihedral angle `(1-k)π`.
#[derive(Debug, Clone)]
pub struct WedgeDome {
    pub k: f64,
    /// Support half-spaces carrying the two faces.
    pub faces: [HalfSpaceH3; 2],
    /// Edge-ray directions of the two faces.
    face_angles: [f64; 2],
    /// Bending weight along the edge geodesic.
    pub weight: f64,
}

/// Build the dome for `k` in `(0, 1]`; `k = 1` degenerates to a flat plane
/// with zero bending.
pub fn wedge_dome(k: f64) -> Result<WedgeDome, DomeError> {
    if !(k > 0.0 && k <= 1.0) {
        return Err(DomeError::ParameterRange {
            name: "k",
            value: k,
            lo: 0.0,
            hi: 1.0,
        });
    }
    // Support half-space below the sector's first edge line and beyond the
    // second; both boundary planes contain the bending line over 0.
    let f1 = HalfSpaceH3::over(RoundDisk::half_plane(Complex64::new(0.0, 1.0), 0.0));
    let edge_normal = Complex64::from_polar(1.0, k * PI + PI / 2.0);
    let f2 = HalfSpaceH3::over(RoundDisk::half_plane(-edge_normal, 0.0));
    let weight = ext_dihedral(&f1, &f2)?;
    debug_assert!((weight - (1.0 - k) * PI).abs() < 1e-12);
    Ok(WedgeDome {
        k,
        faces: [f1, f2],
        face_angles: [0.0, k * PI],
        weight,
    })
}

impl WedgeDome {
    /// The bending measured lamination on the intrinsic hyperbolic plane of
    /// the dome: a single leaf carrying the full bending weight (empty for
    /// the flat dome `k = 1`).
    pub fn lamination(&self) -> FiniteLamination {
        let leaves = if self.weight > 0.0 {
            vec![Leaf {
                geodesic: Geodesic::new(0.0, PI).expect("antipodal endpoints"),
                weight: self.weight,
            }]
        } else {
            Vec::new()
        };
        FiniteLamination::new(leaves).expect("single leaf is always valid")
    }
}

/// Distance from an interior point to the dome: the minimum over its two
/// faces, each a geodesic half-plane bounded by the bending line, with the
/// perpendicular foot clipped to the face.
pub fn dome_distance(p: &PointH3, dome: &WedgeDome) -> f64 {
    dome.face_angles
        .iter()
        .map(|&alpha| face_distance(p, alpha))
        .fold(f64::INFINITY, f64::min)
}

/// Distance to the vertical half-plane over the ray at angle `alpha`.
fn face_distance(p: &PointH3, alpha: f64) -> f64 {
    let w = p.w * Complex64::from_polar(1.0, -alpha);
    if w.re >= 0.0 {
        // Perpendicular foot lands on the face.
        (w.im.abs() / p.t).asinh()
    } else {
        // Closest point is on the bending line (the vertical axis).
        ((w.norm_sqr() + p.t * p.t).sqrt() / p.t).acosh()
    }
}

/// A point of the opposite hull boundary: the dome over the sector itself,
/// which is the Euclidean half-cone of half-angle `kπ/2` around the sector
/// bisector. `sigma` translates along the bending line, `psi` in `(0, π)`
/// sweeps the cone section from one edge ray to the other.
pub fn wedge_cone_point(k: f64, sigma: f64, psi: f64) -> PointH3 {
    let a = k * PI / 2.0;
    let bis = Complex64::from_polar(1.0, a);
    let perp = Complex64::from_polar(1.0, a - PI / 2.0);
    let w = (bis * a.cos() + perp * a.sin() * psi.cos()) * sigma.exp();
    let t = a.sin() * psi.sin() * sigma.exp();
    PointH3 { w, t }
}

/// Numerical sup over sampled points of the sector dome of the distance to
/// the complementary (bent) dome. Deterministic grid in the axial and
/// angular coordinates; reported as a lower estimate of the sup.
pub fn wedge_thickness(k: f64, samples: usize) -> Result<f64, DomeError> {
    if !(k > 0.0 && k < 1.0) {
        return Err(DomeError::ParameterRange {
            name: "k",
            value: k,
            lo: 0.0,
            hi: 1.0,
        });
    }
    let dome = wedge_dome(k)?;
    let n_psi = ((samples as f64).sqrt() as usize).max(3) | 1; // odd: includes psi = pi/2
    let n_sigma = (samples / n_psi).max(1);
    let mut sup: f64 = 0.0;
    for j in 0..n_sigma {
        let sigma = if n_sigma == 1 {
            0.0
        } else {
            -10.0 + 20.0 * j as f64 / (n_sigma - 1) as f64
        };
        for i in 1..=n_psi {
            let psi = PI * i as f64 / (n_psi + 1) as f64;
            let p = wedge_cone_point(k, sigma, psi);
            sup = sup.max(dome_distance(&p, &dome));
        }
    }
    Ok(sup)
}
