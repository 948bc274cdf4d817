use num_complex::Complex64;

use crate::hyp::{ExtComplex, MoebiusMap, TANGENCY_EPS};

use super::wedge::PointH3;
use super::DomeError;

/// An oriented generalized circle on the sphere at infinity, normalized so
/// `|b|^2 - a d = 1`. The selected disk is where the Hermitian form
/// `a|z|^2 + 2 Re(conj(b) z) + d` is negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoundDisk {
    pub a: f64,
    pub b: Complex64,
    pub d: f64,
}

impl RoundDisk {
    fn normalized(a: f64, b: Complex64, d: f64) -> Self {
        let q = b.norm_sqr() - a * d;
        debug_assert!(q > 0.0, "not a real circle: |b|^2 - ad = {q}");
        let s = q.sqrt();
        Self {
            a: a / s,
            b: b / s,
            d: d / s,
        }
    }

    /// The bounded disk `|z - center| < radius`.
    pub fn disk(center: Complex64, radius: f64) -> Self {
        Self::normalized(1.0, -center, center.norm_sqr() - radius * radius)
    }

    /// The complement `|z - center| > radius`, a disk containing infinity.
    pub fn disk_exterior(center: Complex64, radius: f64) -> Self {
        let d = Self::disk(center, radius);
        d.complement()
    }

    /// The half-plane `Re(conj(normal) z) < offset` for a unit normal.
    pub fn half_plane(normal: Complex64, offset: f64) -> Self {
        Self::normalized(0.0, normal / 2.0, -offset)
    }

    pub fn unit_disk() -> Self {
        Self::normalized(1.0, Complex64::new(0.0, 0.0), -1.0)
    }

    pub fn complement(&self) -> Self {
        Self {
            a: -self.a,
            b: -self.b,
            d: -self.d,
        }
    }

    /// Hermitian form at a finite point; negative inside the disk.
    pub fn eval(&self, z: Complex64) -> f64 {
        self.a * z.norm_sqr() + 2.0 * (self.b.conj() * z).re + self.d
    }

    pub fn contains(&self, z: ExtComplex) -> bool {
        match z {
            ExtComplex::Finite(z) => self.eval(z) < 0.0,
            ExtComplex::Infinity => self.a < 0.0,
        }
    }

    /// Minkowski pairing of two circles; `|.| < 1` iff they cross, with the
    /// dihedral cosine convention matching half-space outward normals.
    pub fn inner(&self, other: &RoundDisk) -> f64 {
        (self.b * other.b.conj()).re - 0.5 * (self.a * other.d + other.a * self.d)
    }

    /// Image circle under a Möbius map of the sphere, orientation included.
    pub fn transformed(&self, m: &MoebiusMap) -> Self {
        let mi = m.inverse();
        // Congruence (m^{-1})^T C conj(m^{-1}) of C = [[a, conj(b)], [b, d]].
        let (p, q, r, s) = (mi.a, mi.b, mi.c, mi.d);
        let a = Complex64::new(self.a, 0.0);
        let d = Complex64::new(self.d, 0.0);
        let bc = self.b.conj();
        // Left multiply by transpose(mi): rows (p, r), (q, s).
        let m00 = p * a + r * self.b;
        let m01 = p * bc + r * d;
        let m10 = q * a + s * self.b;
        let m11 = q * bc + s * d;
        // Right multiply by conj(mi).
        let a2 = m00 * p.conj() + m01 * r.conj();
        let b2 = m10 * p.conj() + m11 * r.conj();
        let d2 = m10 * q.conj() + m11 * s.conj();
        Self::normalized(a2.re, b2, d2.re)
    }

    /// Euclidean description: `(center, radius)` for bounded disks, `None`
    /// for half-planes and disks containing infinity.
    pub fn center_radius(&self) -> Option<(Complex64, f64)> {
        if self.a.abs() < 1e-14 {
            return None;
        }
        let center = -self.b / self.a;
        let radius = 1.0 / self.a.abs();
        (self.a > 0.0).then_some((center, radius))
    }
}

/// A closed half-space of hyperbolic 3-space bounded by the geodesic plane
/// over a round disk; the half-space sits over the disk side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfSpaceH3 {
    pub boundary: RoundDisk,
}

impl HalfSpaceH3 {
    pub fn over(boundary: RoundDisk) -> Self {
        Self { boundary }
    }

    /// Hyperbolic sine of the signed distance from an interior point to the
    /// boundary plane; negative inside the half-space.
    pub fn signed(&self, p: &PointH3) -> f64 {
        let c = &self.boundary;
        let s = p.w.norm_sqr() + p.t * p.t;
        (c.a * s + 2.0 * (c.b.conj() * p.w).re + c.d) / (2.0 * p.t)
    }

    pub fn contains(&self, p: &PointH3) -> bool {
        self.signed(p) <= 1e-12
    }

    pub fn complement(&self) -> Self {
        Self {
            boundary: self.boundary.complement(),
        }
    }

    pub fn transformed(&self, m: &MoebiusMap) -> Self {
        Self {
            boundary: self.boundary.transformed(m),
        }
    }
}

/// Exterior dihedral angle between two half-spaces whose boundary planes
/// meet; 0 for nested half-spaces, π at opposed tangency, error when the
/// planes are disjoint.
pub fn ext_dihedral(h1: &HalfSpaceH3, h2: &HalfSpaceH3) -> Result<f64, DomeError> {
    let u = h1.boundary.inner(&h2.boundary);
    if u >= 1.0 - TANGENCY_EPS {
        Ok(0.0)
    } else if u > -(1.0 - TANGENCY_EPS) {
        Ok(u.clamp(-1.0, 1.0).acos())
    } else if u >= -1.0 - TANGENCY_EPS {
        Ok(std::f64::consts::PI)
    } else {
        Err(DomeError::DisjointPlanes { product: u })
    }
}
