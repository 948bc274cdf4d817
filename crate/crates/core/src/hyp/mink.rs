//! Minkowski `R^{2,1}` vectors backing the hyperboloid model.
//!
//! Signature (+, +, −). Unit timelike vectors (`<x,x> = −1`, positive last
//! coordinate) are points of the hyperbolic plane; unit spacelike vectors are
//! polar duals of geodesics. `<x, n>` for a point `x` and a unit polar `n` is
//! the hyperbolic sine of the signed distance from the point to the geodesic.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mink3(pub [f64; 3]);

impl Mink3 {
    pub fn dot(self, other: Mink3) -> f64 {
        let a = self.0;
        let b = other.0;
        a[0] * b[0] + a[1] * b[1] - a[2] * b[2]
    }

    /// Minkowski cross product: orthogonal to both arguments.
    pub fn cross(self, other: Mink3) -> Mink3 {
        let a = self.0;
        let b = other.0;
        // Euclidean cross product followed by the metric flip on the last axis.
        Mink3([
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            -(a[0] * b[1] - a[1] * b[0]),
        ])
    }

    pub fn scale(self, s: f64) -> Mink3 {
        Mink3([self.0[0] * s, self.0[1] * s, self.0[2] * s])
    }

    pub fn add(self, other: Mink3) -> Mink3 {
        Mink3([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    pub fn sub(self, other: Mink3) -> Mink3 {
        self.add(other.scale(-1.0))
    }

    /// Normalize a timelike vector onto the upper sheet of the hyperboloid.
    pub fn normalize_timelike(self) -> Mink3 {
        let q = self.dot(self);
        debug_assert!(q < 0.0, "expected timelike vector, <v,v> = {q}");
        let v = self.scale(1.0 / (-q).sqrt());
        if v.0[2] < 0.0 {
            v.scale(-1.0)
        } else {
            v
        }
    }

    /// Normalize a spacelike vector to unit Minkowski norm.
    pub fn normalize_spacelike(self) -> Mink3 {
        let q = self.dot(self);
        debug_assert!(q > 0.0, "expected spacelike vector, <v,v> = {q}");
        self.scale(1.0 / q.sqrt())
    }

    /// Null vector over the ideal boundary point at the given angle.
    pub fn ideal(angle: f64) -> Mink3 {
        Mink3([angle.cos(), angle.sin(), 1.0])
    }
}
