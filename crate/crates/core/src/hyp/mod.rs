//! Primitives for the hyperbolic plane in the Poincaré disk model.
//!
//! Conventions, fixed once for the whole crate:
//!
//! - Curvature −1; length density `2/(1−|z|²)`, so the hyperbolic *area* form
//!   is `4/(1−|z|²)²`. Distances from the origin satisfy `d(0, r) = 2 atanh r`.
//! - Geodesics are stored by their ideal endpoints, as angles in `[0, 2π)` on
//!   the unit circle. Endpoint arithmetic stays stable arbitrarily close to
//!   the boundary, where interior representations degrade.
//! - Internally, points and geodesics are lifted to the hyperboloid model in
//!   Minkowski `R^{2,1}`: a point becomes a unit timelike vector, a geodesic a
//!   unit spacelike polar vector. Distances, crossing angles and side tests
//!   all reduce to the Minkowski inner product.
//!
//! Upper half-plane conversions are provided through [`MoebiusMap::cayley`].

mod geodesic;
mod halfplane;
pub mod mink;
mod mobius;
mod point;
mod triangle;

pub use geodesic::{dist_point_geodesic, geodesic_gap, inversive_product, Geodesic};
pub use halfplane::{ext_angle_halfplanes, half_planes_disjoint, HalfPlaneH2, Side};
pub use mobius::{ExtComplex, MoebiusMap};
pub use point::{disk_to_half_plane, dist_h2, half_plane_to_disk, PointH2, BOUNDARY_EPS};
pub use triangle::{
    ideal_triangle_side, ideal_triangle_side_sinh, ideal_triangle_tan_product, IdealTriangleSolve,
};

use thiserror::Error;

/// Tolerance band around inversive product 1 inside which a pair of
/// geodesics is classified as asymptotic (tangent at infinity).
pub const TANGENCY_EPS: f64 = 1e-10;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum GeomError {
    #[error("point outside the open unit disk: |z| = {modulus}")]
    PointOutsideDisk { modulus: f64 },
    #[error("ideal endpoints coincide (p = {p}, q = {q}): no geodesic")]
    DegenerateGeodesic { p: f64, q: f64 },
    #[error("half-plane closures are disjoint or only share a band (inversive product {product:.6}); no exterior angle")]
    DisjointHalfPlanes { product: f64 },
    #[error("no triangle with ideal vertex: alpha + beta = {sum} >= pi")]
    IdealAngleSum { sum: f64 },
    #[error("matrix determinant too close to zero (|det| = {det})")]
    SingularMatrix { det: f64 },
}
