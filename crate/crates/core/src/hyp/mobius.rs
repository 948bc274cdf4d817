use num_complex::Complex64;
use rand::Rng;

use super::point::PointH2;
use super::GeomError;

/// A point of the Riemann sphere: finite complex number or infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtComplex {
    Finite(Complex64),
    Infinity,
}

impl ExtComplex {
    pub fn finite(self) -> Option<Complex64> {
        match self {
            ExtComplex::Finite(z) => Some(z),
            ExtComplex::Infinity => None,
        }
    }
}

impl From<Complex64> for ExtComplex {
    fn from(z: Complex64) -> Self {
        ExtComplex::Finite(z)
    }
}

/// A Möbius transformation `z -> (az + b)/(cz + d)`, stored up to scale.
///
/// Arithmetic is projective throughout: infinity is a legal input and output
/// and never raises.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusMap {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl MoebiusMap {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self, GeomError> {
        let det = (a * d - b * c).norm();
        if det < 1e-100 {
            return Err(GeomError::SingularMatrix { det });
        }
        Ok(Self { a, b, c, d })
    }

    pub fn identity() -> Self {
        Self {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: Complex64::new(1.0, 0.0),
        }
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    /// Rescale so the determinant is 1.
    pub fn normalized(&self) -> Self {
        let s = self.det().sqrt();
        Self {
            a: self.a / s,
            b: self.b / s,
            c: self.c / s,
            d: self.d / s,
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    pub fn apply(&self, z: ExtComplex) -> ExtComplex {
        match z {
            ExtComplex::Finite(z) => {
                let num = self.a * z + self.b;
                let den = self.c * z + self.d;
                if den.norm() == 0.0 {
                    ExtComplex::Infinity
                } else {
                    ExtComplex::Finite(num / den)
                }
            }
            ExtComplex::Infinity => {
                if self.c.norm() == 0.0 {
                    ExtComplex::Infinity
                } else {
                    ExtComplex::Finite(self.a / self.c)
                }
            }
        }
    }

    /// Apply to a finite point known not to hit the pole.
    pub fn apply_finite(&self, z: Complex64) -> Complex64 {
        (self.a * z + self.b) / (self.c * z + self.d)
    }

    /// Image of the ideal boundary point at the given angle, as an angle.
    ///
    /// Meaningful for maps preserving the unit circle.
    pub fn apply_boundary_angle(&self, theta: f64) -> f64 {
        match self.apply(ExtComplex::Finite(Complex64::from_polar(1.0, theta))) {
            ExtComplex::Finite(w) => w.arg().rem_euclid(std::f64::consts::TAU),
            // A disk automorphism never sends the circle to infinity.
            ExtComplex::Infinity => 0.0,
        }
    }

    pub fn apply_point(&self, p: &PointH2) -> Result<PointH2, GeomError> {
        PointH2::new(self.apply_finite(p.z()))
    }

    /// First derivative `m'(z) = det / (cz + d)^2`.
    pub fn deriv(&self, z: Complex64) -> Complex64 {
        let den = self.c * z + self.d;
        self.det() / (den * den)
    }

    /// Second and third derivatives, for chain rules.
    pub fn deriv2(&self, z: Complex64) -> Complex64 {
        let den = self.c * z + self.d;
        -2.0 * self.c * self.det() / (den * den * den)
    }

    pub fn deriv3(&self, z: Complex64) -> Complex64 {
        let den = self.c * z + self.d;
        6.0 * self.c * self.c * self.det() / (den * den * den * den)
    }

    /// The disk automorphism `z -> e^{iθ} (z - a)/(1 - conj(a) z)`.
    pub fn disk_automorphism(a: Complex64, theta: f64) -> Result<Self, GeomError> {
        let rot = Complex64::from_polar(1.0, theta);
        Self::new(rot, -rot * a, -a.conj(), Complex64::new(1.0, 0.0))
    }

    /// Cayley map from the disk to the upper half-plane, `z -> i(1+z)/(1-z)`.
    pub fn cayley() -> Self {
        let i = Complex64::new(0.0, 1.0);
        Self {
            a: i,
            b: i,
            c: Complex64::new(-1.0, 0.0),
            d: Complex64::new(1.0, 0.0),
        }
    }

    pub fn random_disk_automorphism<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let r = 0.9 * rng.random::<f64>();
        let phi = std::f64::consts::TAU * rng.random::<f64>();
        let theta = std::f64::consts::TAU * rng.random::<f64>();
        Self::disk_automorphism(Complex64::from_polar(r, phi), theta)
            .expect("|a| < 1 is never singular")
    }

    /// Uniform-ish random element of PSL(2, C), kept away from degeneracy.
    pub fn random_sphere<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let mut c = || Complex64::new(rng.random::<f64>() * 2.0 - 1.0, rng.random::<f64>() * 2.0 - 1.0);
            let m = Self {
                a: c(),
                b: c(),
                c: c(),
                d: c(),
            };
            if m.det().norm() > 0.05 {
                return m.normalized();
            }
        }
    }
}
