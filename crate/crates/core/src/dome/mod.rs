//! Half-spaces in hyperbolic 3-space over round disks, exactly bent wedge
//! domes, hull-thickness sampling, and the dual shape-operator curvature
//! formulas for normal-flow surfaces.
//!
//! Planes in the upper half-space model are encoded by their boundary
//! circles as normalized Hermitian triples `(a, b, d)` with
//! `|b|^2 - a d = 1`; the form `a|z|^2 + 2 Re(conj(b) z) + d` is negative on
//! the disk side. Möbius maps act by matrix congruence, which keeps every
//! angle computation a one-line inner product.

mod epstein;
mod halfspace;
mod wedge;

pub use epstein::{
    convexity_times, dual_eigenvalues, epstein_principal_curvatures, thickness_bound,
    EpsteinCurvatureField,
};
pub use halfspace::{ext_dihedral, HalfSpaceH3, RoundDisk};
pub use wedge::{dome_distance, wedge_cone_point, wedge_dome, wedge_thickness, PointH3, WedgeDome};

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum DomeError {
    #[error("{name} = {value} outside ({lo}, {hi})")]
    ParameterRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },
    #[error("boundary planes are disjoint (inversive product {product:.6}); no dihedral angle")]
    DisjointPlanes { product: f64 },
    #[error("dual shape operator eigenvalue {eigenvalue} at -1; curvature conversion undefined")]
    DualEigenvalueSingular { eigenvalue: f64 },
    #[error("point must lie strictly inside the upper half-space (t = {t})")]
    NotInterior { t: f64 },
    #[error(transparent)]
    Norm(#[from] crate::schwarzian::SchwarzianError),
}
