use super::geodesic::{classify_product, Geodesic, ProductClass};
use super::mink::Mink3;
use super::mobius::MoebiusMap;
use super::point::PointH2;
use super::{GeomError, TANGENCY_EPS};

/// Selects one of the two components of the disk minus a geodesic, by the
/// ideal boundary arc bounding it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// The component whose circular arc runs counterclockwise from `p` to `q`.
    CcwArc,
    /// The complementary component (arc from `q` counterclockwise to `p`).
    CwArc,
}

impl Side {
    pub fn flipped(self) -> Side {
        match self {
            Side::CcwArc => Side::CwArc,
            Side::CwArc => Side::CcwArc,
        }
    }
}

/// A closed half-plane of the hyperbolic plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlaneH2 {
    boundary: Geodesic,
    side: Side,
}

impl HalfPlaneH2 {
    pub fn new(boundary: Geodesic, side: Side) -> Self {
        Self { boundary, side }
    }

    /// The half-plane `{x : <x, n> <= 0}` for a unit spacelike `n`.
    pub fn from_outward_polar(n: Mink3) -> Result<Self, GeomError> {
        // Ideal endpoints: directions θ with n1 cosθ + n2 sinθ = n3.
        let amp = (n.0[0] * n.0[0] + n.0[1] * n.0[1]).sqrt();
        let phase = n.0[1].atan2(n.0[0]);
        let delta = (n.0[2] / amp).clamp(-1.0, 1.0).acos();
        let boundary = Geodesic::new(phase - delta, phase + delta)?;
        let (p, q) = boundary.endpoints();
        // The closure of the half-plane contains the ideal arc where the
        // form is negative; test the ccw-arc midpoint.
        let mid = Mink3::ideal(0.5 * (p + q));
        let side = if mid.dot(n) <= 0.0 {
            Side::CcwArc
        } else {
            Side::CwArc
        };
        Ok(Self { boundary, side })
    }

    pub fn boundary(&self) -> &Geodesic {
        &self.boundary
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn complement(&self) -> Self {
        Self {
            boundary: self.boundary,
            side: self.side.flipped(),
        }
    }

    /// Outward unit co-normal: the half-plane is `{x : <x, n> <= 0}`.
    pub fn outward_polar(&self) -> Mink3 {
        let n = self.boundary.polar();
        match self.side {
            Side::CcwArc => n,
            Side::CwArc => n.scale(-1.0),
        }
    }

    /// Hyperbolic sine of the signed distance to the boundary; positive
    /// outside the half-plane.
    pub fn signed(&self, p: &PointH2) -> f64 {
        p.minkowski().dot(self.outward_polar())
    }

    pub fn contains(&self, p: &PointH2) -> bool {
        self.signed(p) <= 1e-12
    }

    pub fn contains_interior(&self, p: &PointH2) -> bool {
        self.signed(p) < -1e-12
    }

    pub fn transformed(&self, m: &MoebiusMap) -> HalfPlaneH2 {
        let g = self.boundary.transformed(m);
        // Track the side through an ideal point of the bounding arc.
        let (p, q) = self.boundary.endpoints();
        let mid = match self.side {
            Side::CcwArc => 0.5 * (p + q),
            Side::CwArc => 0.5 * (p + q) + std::f64::consts::PI,
        };
        let mid_image = m.apply_boundary_angle(mid);
        let (ip, iq) = g.endpoints();
        let inside_ccw = {
            let d = (mid_image - ip).rem_euclid(std::f64::consts::TAU);
            d < iq - ip
        };
        HalfPlaneH2::new(g, if inside_ccw { Side::CcwArc } else { Side::CwArc })
    }
}

/// Exterior angle between two half-planes whose boundaries cross, coincide,
/// or nest.
///
/// With outward co-normals `n1, n2`, crossing boundaries give
/// `acos(<n1, n2>)`; nesting gives 0 and opposed tangency gives π. When the
/// closures are disjoint (or overlap only in a band between disjoint
/// boundaries) there is no exterior angle and `DisjointHalfPlanes` is raised.
pub fn ext_angle_halfplanes(h1: &HalfPlaneH2, h2: &HalfPlaneH2) -> Result<f64, GeomError> {
    let u = h1.outward_polar().dot(h2.outward_polar());
    match classify_product(u) {
        ProductClass::Crossing => Ok(u.clamp(-1.0, 1.0).acos()),
        ProductClass::NestedOrEqual => Ok(0.0),
        ProductClass::OpposedOrDisjoint => {
            if u >= -1.0 - TANGENCY_EPS {
                // Asymptotic and externally tangent: bent by a straight angle.
                Ok(std::f64::consts::PI)
            } else {
                Err(GeomError::DisjointHalfPlanes { product: u })
            }
        }
    }
}

/// True when the closed half-planes are disjoint in the hyperbolic plane
/// (sharing at most an ideal endpoint).
pub fn half_planes_disjoint(h1: &HalfPlaneH2, h2: &HalfPlaneH2) -> bool {
    let n1 = h1.outward_polar();
    let n2 = h2.outward_polar();
    let u = n1.dot(n2);
    if u > -1.0 + TANGENCY_EPS {
        return false;
    }
    if u >= -1.0 - TANGENCY_EPS {
        // Opposed asymptotic boundaries: closures meet only at infinity.
        return true;
    }
    // Boundaries are disjoint and the normals oppose. Distinguish facing
    // half-planes from the covering pair via the perpendicular foot on the
    // second boundary: it must lie outside the first half-plane.
    let foot = n1.sub(n2.scale(u)).normalize_timelike();
    foot.dot(n1) > 0.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{FRAC_PI_2, PI, TAU};

    fn lower_half() -> HalfPlaneH2 {
        HalfPlaneH2::new(Geodesic::new(0.0, PI).unwrap(), Side::CwArc)
    }

    fn upper_half() -> HalfPlaneH2 {
        HalfPlaneH2::new(Geodesic::new(0.0, PI).unwrap(), Side::CcwArc)
    }

    #[test]
    fn membership_signs() {
        let low = lower_half();
        let below = PointH2::from_xy(0.0, -0.4).unwrap();
        let above = PointH2::from_xy(0.0, 0.4).unwrap();
        assert!(low.contains(&below));
        assert!(!low.contains(&above));
        assert!(low.contains_interior(&below));
        // Signed value is sinh of the distance to the boundary.
        let d = super::super::dist_point_geodesic(&above, low.boundary());
        assert!((low.signed(&above) - d.sinh()).abs() < 1e-12);
    }

    #[test]
    fn equal_half_planes_have_zero_angle() {
        let h = lower_half();
        assert_eq!(ext_angle_halfplanes(&h, &h).unwrap(), 0.0);
    }

    #[test]
    fn opposed_half_planes_bend_by_pi() {
        assert!((ext_angle_halfplanes(&lower_half(), &upper_half()).unwrap() - PI).abs() < 1e-15);
    }

    #[test]
    fn crossing_diameters_match_euclidean_oracle() {
        // Both boundaries pass through the origin, where the hyperbolic and
        // Euclidean angles agree. Oracle: angle between outward Euclidean
        // normals of the two half-planes at the crossing point.
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..200 {
            let theta = 0.1 + rng.random::<f64>() * (PI - 0.2);
            let h1 = lower_half();
            // Half-plane bounded by the diameter at angle theta, on the side
            // of the arc (theta, theta + pi): Euclidean outward normal at the
            // origin is -i * e^{i theta} rotated to the excluded side.
            let h2 = HalfPlaneH2::new(Geodesic::diameter(theta), Side::CcwArc);
            let n1 = Complex64::new(0.0, 1.0); // outward of the lower half-disk
            let inside_dir = Complex64::from_polar(1.0, theta + FRAC_PI_2);
            let probe = PointH2::new(inside_dir * 0.1).unwrap();
            let n2 = if h2.contains(&probe) { -inside_dir } else { inside_dir };
            let oracle = (n1.re * n2.re + n1.im * n2.im).clamp(-1.0, 1.0).acos();
            let got = ext_angle_halfplanes(&h1, &h2).unwrap();
            assert!(
                (got - oracle).abs() < 1e-12,
                "theta {theta}: got {got}, oracle {oracle}"
            );
        }
    }

    #[test]
    fn disjoint_half_planes_error() {
        let h1 = HalfPlaneH2::new(Geodesic::tangent_at(0.0, 0.6), Side::CcwArc);
        let h2 = HalfPlaneH2::new(Geodesic::tangent_at(PI, 0.6), Side::CcwArc);
        // Orient both away from the origin.
        let o = PointH2::origin();
        let h1 = if h1.contains(&o) { h1.complement() } else { h1 };
        let h2 = if h2.contains(&o) { h2.complement() } else { h2 };
        assert!(half_planes_disjoint(&h1, &h2));
        assert!(matches!(
            ext_angle_halfplanes(&h1, &h2),
            Err(GeomError::DisjointHalfPlanes { .. })
        ));
        // The nested pair is fine and has angle zero.
        assert!(!half_planes_disjoint(&h1, &h2.complement()));
        assert_eq!(ext_angle_halfplanes(&h1, &h2.complement()).unwrap(), 0.0);
        // The covering pair is also rejected.
        assert!(!half_planes_disjoint(&h1.complement(), &h2.complement()));
        assert!(ext_angle_halfplanes(&h1.complement(), &h2.complement()).is_err());
    }

    #[test]
    fn ext_angle_is_moebius_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let mut checked = 0;
        while checked < 1000 {
            let g1 = Geodesic::new(rng.random::<f64>() * TAU, rng.random::<f64>() * TAU);
            let g2 = Geodesic::new(rng.random::<f64>() * TAU, rng.random::<f64>() * TAU);
            let (g1, g2) = match (g1, g2) {
                (Ok(a), Ok(b)) => (a, b),
                _ => continue,
            };
            if !g1.crosses(&g2) {
                continue;
            }
            let h1 = HalfPlaneH2::new(g1, Side::CcwArc);
            let h2 = HalfPlaneH2::new(g2, Side::CwArc);
            let before = ext_angle_halfplanes(&h1, &h2).unwrap();
            let m = MoebiusMap::random_disk_automorphism(&mut rng);
            let after = ext_angle_halfplanes(&h1.transformed(&m), &h2.transformed(&m)).unwrap();
            assert!((before - after).abs() < 1e-10, "{before} vs {after}");
            checked += 1;
        }
    }

    #[test]
    fn transform_tracks_sides() {
        let mut rng = ChaCha8Rng::seed_from_u64(57);
        for _ in 0..500 {
            let g = Geodesic::new(rng.random::<f64>() * TAU, rng.random::<f64>() * TAU);
            let g = match g {
                Ok(g) => g,
                Err(_) => continue,
            };
            let h = HalfPlaneH2::new(g, if rng.random::<bool>() { Side::CcwArc } else { Side::CwArc });
            let m = MoebiusMap::random_disk_automorphism(&mut rng);
            let p = loop {
                let z = Complex64::new(rng.random::<f64>() * 1.6 - 0.8, rng.random::<f64>() * 1.6 - 0.8);
                if z.norm() < 0.8 {
                    break PointH2::new(z).unwrap();
                }
            };
            if h.signed(&p).abs() < 1e-6 {
                continue;
            }
            let hp = h.transformed(&m);
            let pp = m.apply_point(&p).unwrap();
            assert_eq!(h.contains(&p), hp.contains(&pp));
        }
    }
}
