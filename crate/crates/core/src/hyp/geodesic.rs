use std::f64::consts::TAU;

use super::mink::Mink3;
use super::mobius::MoebiusMap;
use super::point::PointH2;
use super::{GeomError, TANGENCY_EPS};

const ANGLE_EPS: f64 = 1e-12;

/// An unoriented complete geodesic, stored by its two ideal endpoints.
///
/// Endpoints are angles on the unit circle, normalized so that
/// `0 <= p < q < 2π`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geodesic {
    p: f64,
    q: f64,
}

fn norm_angle(a: f64) -> f64 {
    let mut t = a.rem_euclid(TAU);
    if t >= TAU {
        t -= TAU;
    }
    t
}

impl Geodesic {
    pub fn new(a: f64, b: f64) -> Result<Self, GeomError> {
        let (mut p, mut q) = (norm_angle(a), norm_angle(b));
        if p > q {
            std::mem::swap(&mut p, &mut q);
        }
        let gap = q - p;
        if gap < ANGLE_EPS || TAU - gap < ANGLE_EPS {
            return Err(GeomError::DegenerateGeodesic { p, q });
        }
        Ok(Self { p, q })
    }

    /// The diameter through `e^{iθ}` and `-e^{iθ}`.
    pub fn diameter(theta: f64) -> Self {
        Self::new(theta, theta + std::f64::consts::PI).expect("antipodal endpoints")
    }

    /// The geodesic at hyperbolic distance `d >= 0` from the origin whose
    /// closest point lies in direction `θ`; `d = 0` gives the perpendicular
    /// diameter.
    pub fn tangent_at(theta: f64, d: f64) -> Self {
        // Half the angular width of its ideal arc: cot(phi) = sinh(d).
        let phi = 1.0_f64.atan2(d.sinh());
        Self::new(theta - phi, theta + phi).expect("positive arc width")
    }

    pub fn endpoints(&self) -> (f64, f64) {
        (self.p, self.q)
    }

    /// Unit spacelike polar vector for the orientation `p -> q`.
    pub fn polar(&self) -> Mink3 {
        let (a, b) = (self.p, self.q);
        let denom = 1.0 - (a - b).cos();
        Mink3([
            (a.sin() - b.sin()) / denom,
            (b.cos() - a.cos()) / denom,
            (a - b).sin() / denom,
        ])
    }

    /// True if the other geodesic's endpoints interleave with ours on the
    /// circle, i.e. the two geodesics cross in the open disk.
    pub fn crosses(&self, other: &Geodesic) -> bool {
        let in_arc = |t: f64| {
            let d = norm_angle(t - self.p);
            d > ANGLE_EPS && d < self.q - self.p - ANGLE_EPS
        };
        let (a, b) = other.endpoints();
        in_arc(a) != in_arc(b) && !self.shares_endpoint(other)
    }

    pub fn shares_endpoint(&self, other: &Geodesic) -> bool {
        let close = |x: f64, y: f64| {
            let d = norm_angle(x - y);
            d < ANGLE_EPS || TAU - d < ANGLE_EPS
        };
        let (a, b) = other.endpoints();
        close(self.p, a) || close(self.p, b) || close(self.q, a) || close(self.q, b)
    }

    /// Point of intersection with a crossing geodesic.
    pub fn intersection(&self, other: &Geodesic) -> Option<PointH2> {
        if !self.crosses(other) {
            return None;
        }
        let w = self.polar().cross(other.polar());
        PointH2::from_minkowski(w).ok()
    }

    /// A point on the geodesic together with a unit tangent, for arclength
    /// parametrization `x(s) = x0 cosh s + v sinh s`.
    pub fn frame(&self) -> (Mink3, Mink3) {
        let n = self.polar();
        let o = Mink3([0.0, 0.0, 1.0]);
        let lam = o.dot(n);
        let x0 = o.sub(n.scale(lam)).normalize_timelike();
        let v = n.cross(x0).normalize_spacelike();
        (x0, v)
    }

    /// Image under a Möbius map preserving the circle at infinity.
    pub fn transformed(&self, m: &MoebiusMap) -> Geodesic {
        Geodesic::new(
            m.apply_boundary_angle(self.p),
            m.apply_boundary_angle(self.q),
        )
        .expect("injective boundary map keeps endpoints distinct")
    }
}

/// Möbius-invariant pairing of two geodesics.
///
/// Returns `t < 1` when the geodesics cross (`t` is the cosine of the acute
/// crossing angle), `t = 1` when they share exactly one ideal endpoint or
/// coincide, and `t = cosh(distance) > 1` when they are disjoint.
pub fn inversive_product(g1: &Geodesic, g2: &Geodesic) -> f64 {
    if g1 == g2 {
        return 1.0;
    }
    g1.polar().dot(g2.polar()).abs()
}

/// Hyperbolic distance between two disjoint geodesics (0 when they meet).
pub fn geodesic_gap(g1: &Geodesic, g2: &Geodesic) -> f64 {
    let t = inversive_product(g1, g2);
    if t <= 1.0 {
        0.0
    } else {
        t.acosh()
    }
}

/// Distance from a point to a complete geodesic, realized by the
/// perpendicular foot.
pub fn dist_point_geodesic(p: &PointH2, g: &Geodesic) -> f64 {
    p.minkowski().dot(g.polar()).abs().asinh()
}

/// Classification helper shared with the half-plane module: signed product
/// with the tangency band applied symmetrically.
pub(super) fn classify_product(u: f64) -> ProductClass {
    if u >= 1.0 - TANGENCY_EPS {
        ProductClass::NestedOrEqual
    } else if u <= -(1.0 - TANGENCY_EPS) {
        ProductClass::OpposedOrDisjoint
    } else {
        ProductClass::Crossing
    }
}

pub(super) enum ProductClass {
    Crossing,
    NestedOrEqual,
    OpposedOrDisjoint,
}
