use num_complex::Complex64;

use super::mink::Mink3;
use super::GeomError;

/// Points must stay this far inside the open unit disk.
pub const BOUNDARY_EPS: f64 = 1e-14;

/// A point of the hyperbolic plane in the Poincaré disk model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointH2 {
    z: Complex64,
}

impl PointH2 {
    pub fn new(z: Complex64) -> Result<Self, GeomError> {
        let modulus = z.norm();
        if modulus < 1.0 - BOUNDARY_EPS {
            Ok(Self { z })
        } else {
            Err(GeomError::PointOutsideDisk { modulus })
        }
    }

    pub fn from_xy(x: f64, y: f64) -> Result<Self, GeomError> {
        Self::new(Complex64::new(x, y))
    }

    pub fn origin() -> Self {
        Self {
            z: Complex64::new(0.0, 0.0),
        }
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    /// Lift to a unit timelike vector on the hyperboloid.
    pub fn minkowski(&self) -> Mink3 {
        let n2 = self.z.norm_sqr();
        let d = 1.0 - n2;
        Mink3([2.0 * self.z.re / d, 2.0 * self.z.im / d, (1.0 + n2) / d])
    }

    /// Project a timelike vector back to disk coordinates.
    pub fn from_minkowski(v: Mink3) -> Result<Self, GeomError> {
        let v = v.normalize_timelike();
        let z = Complex64::new(v.0[0], v.0[1]) / (1.0 + v.0[2]);
        Self::new(z)
    }

    pub fn dist(&self, other: &PointH2) -> f64 {
        dist_h2(self, other)
    }
}

/// Hyperbolic distance between two disk points (curvature −1).
pub fn dist_h2(p: &PointH2, q: &PointH2) -> f64 {
    let num = p.z - q.z;
    let den = Complex64::new(1.0, 0.0) - q.z.conj() * p.z;
    let t = (num / den).norm();
    // t < 1 for interior points; clamp against rounding at extreme moduli.
    2.0 * t.min(1.0 - f64::EPSILON).atanh()
}

/// Disk model to upper half-plane, `z -> i(1+z)/(1-z)`.
pub fn disk_to_half_plane(p: &PointH2) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    Complex64::new(0.0, 1.0) * (one + p.z) / (one - p.z)
}

/// Upper half-plane to disk model, `w -> (w-i)/(w+i)`.
pub fn half_plane_to_disk(w: Complex64) -> Result<PointH2, GeomError> {
    let i = Complex64::new(0.0, 1.0);
    PointH2::new((w - i) / (w + i))
}
