//! Numerical toolkit for the hyperbolic geometry of univalent maps: Schwarzian
//! derivatives and their sup norms, finite measured laminations and their
//! short-arc mass, convex-hull thickness over wedge domains, and the explicit
//! scalar bounds tying these together, with independent Monte-Carlo and
//! quadrature verification of every inequality the bounds rest on.
//!
//! Module map:
//!
//! - [`hyp`] — Poincaré-disk primitives: Möbius maps, points, geodesics,
//!   half-planes, ideal-vertex triangle trigonometry.
//! - [`schwarzian`] — analytic maps with third-order jets, quadratic
//!   differentials, pointwise hyperbolic norms and sup-norm estimation.
//! - [`bounds`] — the closed-form bound functions with branch bookkeeping.
//! - [`lamination`] — finite measured laminations, transverse measure, the
//!   length-limited norm, and good-partition angle sums.
//! - [`dome`] — half-spaces in hyperbolic 3-space, exactly bent wedge domes,
//!   thickness sampling, and dual shape-operator curvature formulas.
//! - [`verify`] — rejection-sampled half-plane configurations, adaptive polar
//!   quadrature for the area and kernel checks, and verification reports.
//!
//! Everything is plain `f64`, deterministic under fixed seeds, and safe for
//! parallel use: all public types are immutable after construction.

pub mod bounds;
pub mod dome;
pub mod hyp;
pub mod lamination;
pub mod schwarzian;
pub mod verify;

pub use num_complex;

pub use bounds::{BoundEvaluation, Branch, ReferenceConstants};
pub use hyp::{dist_h2, Geodesic, HalfPlaneH2, MoebiusMap, PointH2, Side};
pub use lamination::{FiniteLamination, TransverseArc};
