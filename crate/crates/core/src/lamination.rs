//! Finite measured laminations on the hyperbolic plane: transverse measure,
//! the length-limited norm for stacked families, and good-partition angle
//! sums.
//!
//! A finite lamination is *stacked* when a single geodesic crosses every
//! leaf. The length-`L` norm is computed by a window scan over the leaves in
//! their order along such a transversal: a block of consecutive leaves is
//! admissible when the extreme pair sits at hyperbolic distance strictly
//! below `L` (an open arc slightly longer than that distance crosses the
//! whole block, and no shorter arc can).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hyp::{
    ext_angle_halfplanes, geodesic_gap, GeomError, Geodesic, HalfPlaneH2, MoebiusMap, PointH2,
};

/// Ties closer than this slack are resolved toward exclusion.
const WINDOW_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Error)]
pub enum LaminationError {
    #[error("invalid lamination: leaves {i} and {j} {reason}")]
    InvalidLamination { i: usize, j: usize, reason: &'static str },
    #[error("leaf {index} has non-positive weight {weight}")]
    BadWeight { index: usize, weight: f64 },
    #[error("lamination is not stacked: no geodesic crosses every leaf")]
    NotStacked,
    #[error("arc endpoint lies on leaf {leaf} and the closed arc makes the crossing ambiguous")]
    Tangency { leaf: usize },
    #[error("partition is not good: half-planes {index} and {} do not meet", index + 1)]
    NotGood { index: usize },
    #[error(transparent)]
    Geometry(#[from] GeomError),
}

/// A weighted geodesic leaf.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Leaf {
    pub geodesic: Geodesic,
    pub weight: f64,
}

/// Finitely many pairwise disjoint weighted geodesics.
#[derive(Debug, Clone)]
pub struct FiniteLamination {
    leaves: Vec<Leaf>,
    /// Leaf indices in order along the transversal, when one exists.
    order: Option<Vec<usize>>,
    transversal: Option<Geodesic>,
}

impl FiniteLamination {
    pub fn new(leaves: Vec<Leaf>) -> Result<Self, LaminationError> {
        for (i, leaf) in leaves.iter().enumerate() {
            if !(leaf.weight > 0.0) {
                return Err(LaminationError::BadWeight {
                    index: i,
                    weight: leaf.weight,
                });
            }
        }
        for i in 0..leaves.len() {
            for j in (i + 1)..leaves.len() {
                let (gi, gj) = (&leaves[i].geodesic, &leaves[j].geodesic);
                if nearly_equal(gi, gj) {
                    return Err(LaminationError::InvalidLamination {
                        i,
                        j,
                        reason: "coincide",
                    });
                }
                if gi.crosses(gj) {
                    return Err(LaminationError::InvalidLamination {
                        i,
                        j,
                        reason: "cross",
                    });
                }
            }
        }
        let (order, transversal) = stacked_order(&leaves);
        Ok(Self {
            leaves,
            order,
            transversal,
        })
    }

    pub fn leaves(&self) -> &[Leaf] {
        &self.leaves
    }

    pub fn total_weight(&self) -> f64 {
        self.leaves.iter().map(|l| l.weight).sum()
    }

    /// True when some geodesic crosses every leaf (checked constructively at
    /// construction time).
    pub fn is_stacked(&self) -> bool {
        self.order.is_some()
    }

    /// A witness transversal crossing all leaves, if stacked.
    pub fn transversal(&self) -> Option<&Geodesic> {
        self.transversal.as_ref()
    }

    /// Leaf indices ordered along the transversal.
    pub fn stacked_order(&self) -> Option<&[usize]> {
        self.order.as_deref()
    }

    /// Total weight of the leaves separating the arc's endpoints. Open arcs
    /// exclude leaves through an endpoint; closed arcs make such a crossing
    /// ambiguous and raise `Tangency`.
    pub fn transverse_measure(&self, arc: &TransverseArc) -> Result<f64, LaminationError> {
        let xa = arc.a.minkowski();
        let xb = arc.b.minkowski();
        let mut mass = 0.0;
        for (idx, leaf) in self.leaves.iter().enumerate() {
            let n = leaf.geodesic.polar();
            let sa = xa.dot(n);
            let sb = xb.dot(n);
            if sa.abs() < 1e-12 && sb.abs() < 1e-12 {
                // Arc runs along the leaf: not transverse.
                return Err(LaminationError::Tangency { leaf: idx });
            }
            if sa.abs() < 1e-12 || sb.abs() < 1e-12 {
                if arc.open {
                    continue;
                }
                return Err(LaminationError::Tangency { leaf: idx });
            }
            if sa.signum() != sb.signum() {
                mass += leaf.weight;
            }
        }
        Ok(mass)
    }

    /// Hyperbolic distance between two leaves (0 when asymptotic).
    pub fn leaf_gap(&self, i: usize, j: usize) -> f64 {
        geodesic_gap(&self.leaves[i].geodesic, &self.leaves[j].geodesic)
    }

    /// Supremal transverse mass over open arcs of length strictly less than
    /// `l`. Requires a stacked lamination.
    pub fn norm_l(&self, l: f64) -> Result<f64, LaminationError> {
        let order = self.order.as_ref().ok_or(LaminationError::NotStacked)?;
        let n = order.len();
        if n == 0 {
            return Ok(0.0);
        }
        let mut best = 0.0_f64;
        let mut j = 0usize; // window is [i, j)
        let mut sum = 0.0;
        // Two-pointer scan: gaps grow monotonically along the stack.
        for i in 0..n {
            if j == i {
                sum += self.leaves[order[j]].weight;
                j += 1;
            }
            while j < n && self.leaf_gap(order[i], order[j]) < l - WINDOW_SLACK {
                sum += self.leaves[order[j]].weight;
                j += 1;
            }
            best = best.max(sum);
            sum -= self.leaves[order[i]].weight;
        }
        Ok(best)
    }

    /// Image lamination under a Möbius map of the disk.
    pub fn transformed(&self, m: &MoebiusMap) -> Result<Self, LaminationError> {
        Self::new(
            self.leaves
                .iter()
                .map(|leaf| Leaf {
                    geodesic: leaf.geodesic.transformed(m),
                    weight: leaf.weight,
                })
                .collect(),
        )
    }

    pub fn from_file_spec(spec: &LaminationFile) -> Result<Self, LaminationError> {
        let leaves = spec
            .leaves
            .iter()
            .enumerate()
            .map(|(i, ls)| {
                let geodesic = Geodesic::new(ls.endpoints[0], ls.endpoints[1])
                    .map_err(LaminationError::Geometry)?;
                if !(ls.weight > 0.0) {
                    return Err(LaminationError::BadWeight {
                        index: i,
                        weight: ls.weight,
                    });
                }
                Ok(Leaf {
                    geodesic,
                    weight: ls.weight,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(leaves)
    }

    pub fn to_file_spec(&self) -> LaminationFile {
        LaminationFile {
            leaves: self
                .leaves
                .iter()
                .map(|l| LeafSpec {
                    endpoints: [l.geodesic.endpoints().0, l.geodesic.endpoints().1],
                    weight: l.weight,
                })
                .collect(),
        }
    }
}

/// On-disk lamination record: ideal endpoints in radians plus weights.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LaminationFile {
    pub leaves: Vec<LeafSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LeafSpec {
    pub endpoints: [f64; 2],
    pub weight: f64,
}

/// A geodesic arc between two interior points, open or closed.
#[derive(Debug, Clone, Copy)]
pub struct TransverseArc {
    pub a: PointH2,
    pub b: PointH2,
    pub open: bool,
}

impl TransverseArc {
    pub fn open(a: PointH2, b: PointH2) -> Self {
        Self { a, b, open: true }
    }

    pub fn length(&self) -> f64 {
        self.a.dist(&self.b)
    }
}

/// An ordered chain of support half-planes along an arc.
#[derive(Debug, Clone)]
pub struct GoodPartitionData {
    pub half_planes: Vec<HalfPlaneH2>,
}

/// Sum of exterior angles between consecutive half-planes. Errors with
/// `NotGood` when a consecutive pair fails to meet.
pub fn good_partition_bound(data: &GoodPartitionData) -> Result<f64, LaminationError> {
    let mut total = 0.0;
    for (index, pair) in data.half_planes.windows(2).enumerate() {
        total += ext_angle_halfplanes(&pair[0], &pair[1])
            .map_err(|_| LaminationError::NotGood { index })?;
    }
    Ok(total)
}

fn nearly_equal(a: &Geodesic, b: &Geodesic) -> bool {
    let (p1, q1) = a.endpoints();
    let (p2, q2) = b.endpoints();
    (p1 - p2).abs() < 1e-12 && (q1 - q2).abs() < 1e-12
}

/// Side of `host` on which `other` lies: false/true for the two arcs, None
/// when undecidable (shared endpoints on both sides cannot happen for
/// distinct disjoint leaves).
fn side_of(host: &Geodesic, other: &Geodesic) -> bool {
    let (p, q) = host.endpoints();
    let in_ccw = |t: f64| {
        let d = (t - p).rem_euclid(std::f64::consts::TAU);
        d > 1e-12 && d < q - p - 1e-12
    };
    let (a, b) = other.endpoints();
    // Disjointness guarantees both endpoints fall in the same arc; a shared
    // endpoint defers to the other one.
    if (a - p).abs() < 1e-12 || (a - q).abs() < 1e-12 {
        in_ccw(b)
    } else {
        in_ccw(a)
    }
}

/// Constructive stacked check: build the order along a transversal, if any.
fn stacked_order(leaves: &[Leaf]) -> (Option<Vec<usize>>, Option<Geodesic>) {
    let n = leaves.len();
    if n == 0 {
        return (Some(Vec::new()), None);
    }
    if n == 1 {
        let g = leaves[0].geodesic;
        let (p, q) = g.endpoints();
        let mid1 = 0.5 * (p + q);
        let mid2 = mid1 + std::f64::consts::PI;
        let t = Geodesic::new(mid1, mid2).ok();
        return (Some(vec![0]), t);
    }
    // sides[i][j]: which arc of leaf i contains leaf j.
    let sides: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        false
                    } else {
                        side_of(&leaves[i].geodesic, &leaves[j].geodesic)
                    }
                })
                .collect()
        })
        .collect();
    let separates = |m: usize, a: usize, b: usize| sides[m][a] != sides[m][b];

    // Ends of the chain separate no pair.
    let mut ends = Vec::new();
    for i in 0..n {
        let mut count = 0;
        for a in 0..n {
            for b in (a + 1)..n {
                if a != i && b != i && separates(i, a, b) {
                    count += 1;
                }
            }
        }
        if count == 0 {
            ends.push(i);
        }
    }
    if ends.len() != 2 {
        return (None, None);
    }
    let e = ends[0];
    let mut keyed: Vec<(usize, usize)> = (0..n)
        .map(|j| {
            if j == e {
                (0, j)
            } else {
                let between = (0..n)
                    .filter(|&m| m != e && m != j && separates(m, e, j))
                    .count();
                (between + 1, j)
            }
        })
        .collect();
    keyed.sort_unstable();
    let order: Vec<usize> = keyed.iter().map(|&(_, j)| j).collect();
    // Positions must be distinct and the betweenness relation consistent.
    for w in keyed.windows(2) {
        if w[0].0 == w[1].0 {
            return (None, None);
        }
    }
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                if !separates(order[b], order[a], order[c])
                    || separates(order[a], order[b], order[c])
                    || separates(order[c], order[a], order[b])
                {
                    return (None, None);
                }
            }
        }
    }

    // Transversal witness: ideal points beyond both ends of the stack.
    let first = order[0];
    let last = order[n - 1];
    let mid_away = |host: usize, toward: usize| {
        let (p, q) = leaves[host].geodesic.endpoints();
        if sides[host][toward] {
            // Others sit in the ccw arc; pick the cw arc midpoint.
            0.5 * (p + q) + std::f64::consts::PI
        } else {
            0.5 * (p + q)
        }
    };
    let t = match Geodesic::new(mid_away(first, last), mid_away(last, first)) {
        Ok(t) => t,
        Err(_) => return (None, None),
    };
    for leaf in leaves {
        if !t.crosses(&leaf.geodesic) {
            return (None, None);
        }
    }
    (Some(order), Some(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    /// Fence lamination: leaves perpendicular to the real diameter at signed
    /// hyperbolic positions `s`, so pairwise gaps are |s_i - s_j| exactly.
    pub(crate) fn fence(positions: &[f64], weights: &[f64]) -> FiniteLamination {
        let leaves = positions
            .iter()
            .zip(weights)
            .map(|(&s, &w)| Leaf {
                geodesic: if s >= 0.0 {
                    Geodesic::tangent_at(0.0, s)
                } else {
                    Geodesic::tangent_at(PI, -s)
                },
                weight: w,
            })
            .collect();
        FiniteLamination::new(leaves).unwrap()
    }

    #[test]
    fn crossing_leaves_rejected() {
        let leaves = vec![
            Leaf {
                geodesic: Geodesic::diameter(0.0),
                weight: 1.0,
            },
            Leaf {
                geodesic: Geodesic::diameter(1.0),
                weight: 1.0,
            },
        ];
        assert!(matches!(
            FiniteLamination::new(leaves),
            Err(LaminationError::InvalidLamination { reason: "cross", .. })
        ));
    }

    #[test]
    fn fence_is_stacked_and_ordered() {
        let lam = fence(&[-0.5, 0.2, 0.9, 1.4], &[1.0, 2.0, 3.0, 4.0]);
        assert!(lam.is_stacked());
        let order = lam.stacked_order().unwrap();
        // Order may run either way along the transversal.
        let w: Vec<f64> = order.iter().map(|&i| lam.leaves()[i].weight).collect();
        assert!(w == [1.0, 2.0, 3.0, 4.0] || w == [4.0, 3.0, 2.0, 1.0]);
        let t = lam.transversal().unwrap();
        for leaf in lam.leaves() {
            assert!(t.crosses(&leaf.geodesic));
        }
    }

    #[test]
    fn fan_is_not_stacked() {
        // Three leaves hugging three far-apart boundary directions: each pair
        // is disjoint and no leaf separates the other two.
        let lam = FiniteLamination::new(vec![
            Leaf {
                geodesic: Geodesic::tangent_at(0.0, 1.5),
                weight: 1.0,
            },
            Leaf {
                geodesic: Geodesic::tangent_at(2.0 * PI / 3.0, 1.5),
                weight: 1.0,
            },
            Leaf {
                geodesic: Geodesic::tangent_at(4.0 * PI / 3.0, 1.5),
                weight: 1.0,
            },
        ])
        .unwrap();
        assert!(!lam.is_stacked());
        assert!(matches!(lam.norm_l(1.0), Err(LaminationError::NotStacked)));
    }

    #[test]
    fn transverse_measure_counts_separating_leaves() {
        let lam = fence(&[0.2, 0.6, 1.0], &[1.0, 2.0, 3.0]);
        // Arc from the origin to a point beyond the second leaf but short of
        // the third: crosses leaves at 0.2 and 0.6.
        let a = PointH2::origin();
        let b = PointH2::from_xy((0.8_f64 / 2.0).tanh(), 0.0).unwrap();
        let arc = TransverseArc::open(a, b);
        assert_eq!(lam.transverse_measure(&arc).unwrap(), 3.0);
        // Arc crossing nothing.
        let c = PointH2::from_xy(0.0, 0.05).unwrap();
        assert_eq!(lam.transverse_measure(&TransverseArc::open(a, c)).unwrap(), 0.0);
    }

    #[test]
    fn open_arcs_exclude_endpoint_leaves() {
        let lam = fence(&[0.5], &[2.0]);
        let a = PointH2::origin();
        // Endpoint exactly on the leaf.
        let b = PointH2::from_xy((0.5_f64 / 2.0).tanh(), 0.0).unwrap();
        let open = TransverseArc::open(a, b);
        assert_eq!(lam.transverse_measure(&open).unwrap(), 0.0);
        let closed = TransverseArc { a, b, open: false };
        assert!(matches!(
            lam.transverse_measure(&closed),
            Err(LaminationError::Tangency { leaf: 0 })
        ));
    }

    #[test]
    fn single_leaf_norm_is_weight() {
        let lam = fence(&[0.3], &[2.5]);
        assert_eq!(lam.norm_l(1e-6).unwrap(), 2.5);
        assert_eq!(lam.norm_l(10.0).unwrap(), 2.5);
    }

    #[test]
    fn two_leaf_norm_thresholds_at_gap() {
        let lam = fence(&[0.0, 0.7], &[1.0, 1.0]);
        assert_eq!(lam.norm_l(0.7).unwrap(), 1.0); // strict: length < L
        assert_eq!(lam.norm_l(0.7 + 1e-9).unwrap(), 2.0);
        assert_eq!(lam.norm_l(0.1).unwrap(), 1.0);
    }

    #[test]
    fn three_leaf_windows() {
        let lam = fence(&[0.0, 0.4, 0.8], &[1.0, 1.0, 1.0]);
        assert_eq!(lam.norm_l(0.9).unwrap(), 3.0);
        assert_eq!(lam.norm_l(0.5).unwrap(), 2.0);
        // Heaviest admissible window need not touch the ends.
        let lam = fence(&[0.0, 1.0, 1.4, 2.4], &[1.0, 5.0, 5.0, 1.0]);
        assert_eq!(lam.norm_l(0.6).unwrap(), 10.0);
    }

    #[test]
    fn norm_monotone_and_bounded() {
        let lam = fence(&[-0.9, -0.1, 0.5, 1.3, 2.0], &[0.7, 1.1, 0.4, 2.2, 0.9]);
        let total = lam.total_weight();
        let mut prev = 0.0;
        for k in 1..=60 {
            let l = 0.05 * k as f64;
            let v = lam.norm_l(l).unwrap();
            assert!(v >= prev);
            assert!(v <= total + 1e-12);
            prev = v;
        }
        assert_eq!(lam.norm_l(10.0).unwrap(), total);
    }

    #[test]
    fn norm_is_moebius_invariant() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        let lam = fence(&[-0.6, 0.1, 0.9, 1.7], &[1.0, 2.0, 1.5, 0.5]);
        for _ in 0..100 {
            let m = MoebiusMap::random_disk_automorphism(&mut rng);
            let mapped = lam.transformed(&m).unwrap();
            assert!(mapped.is_stacked());
            for &l in &[0.3, 0.75, 1.2, 2.6] {
                let a = lam.norm_l(l).unwrap();
                let b = mapped.norm_l(l).unwrap();
                assert!((a - b).abs() < 1e-10, "norm changed under Möbius: {a} vs {b}");
            }
        }
    }

    #[test]
    fn good_partition_trivial_cases() {
        use crate::hyp::Side;
        let g = Geodesic::diameter(0.0);
        let h = HalfPlaneH2::new(g, Side::CwArc);
        let data = GoodPartitionData {
            half_planes: vec![h, h, h],
        };
        assert_eq!(good_partition_bound(&data).unwrap(), 0.0);

        // Two half-planes crossing at a known exterior angle.
        let h2 = HalfPlaneH2::new(Geodesic::diameter(1.0), Side::CcwArc);
        let expect = ext_angle_halfplanes(&h, &h2).unwrap();
        let data = GoodPartitionData {
            half_planes: vec![h, h2],
        };
        assert!((good_partition_bound(&data).unwrap() - expect).abs() < 1e-15);
    }

    #[test]
    fn pencil_refinement_is_exactly_additive() {
        use crate::hyp::Side;
        // Half-planes bounded by diameters through the origin: inserting an
        // intermediate member of the pencil splits the angle exactly.
        let h = |theta: f64| HalfPlaneH2::new(Geodesic::diameter(theta), Side::CcwArc);
        let coarse = GoodPartitionData {
            half_planes: vec![h(0.0), h(0.9)],
        };
        let fine = GoodPartitionData {
            half_planes: vec![h(0.0), h(0.35), h(0.9)],
        };
        let a = good_partition_bound(&coarse).unwrap();
        let b = good_partition_bound(&fine).unwrap();
        assert!((a - 0.9).abs() < 1e-12);
        assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn tangent_circle_refinement_never_increases() {
        use crate::hyp::Side;
        // Support half-planes tangent to the circle of hyperbolic radius R
        // about the origin; exterior angle between tangents at central angle
        // delta is 2 asin(cosh R sin(delta/2)).
        let r = 0.8_f64;
        let tangent = |theta: f64| {
            let h = HalfPlaneH2::new(Geodesic::tangent_at(theta, r), Side::CcwArc);
            if h.contains(&PointH2::origin()) {
                h.complement()
            } else {
                h
            }
        };
        let (t1, t2, t3) = (0.1, 0.5, 1.1);
        let fine = good_partition_bound(&GoodPartitionData {
            half_planes: vec![tangent(t1), tangent(t2), tangent(t3)],
        })
        .unwrap();
        let coarse = good_partition_bound(&GoodPartitionData {
            half_planes: vec![tangent(t1), tangent(t3)],
        })
        .unwrap();
        assert!(fine <= coarse + 1e-12, "refinement increased: {fine} > {coarse}");
        let closed_form = |delta: f64| 2.0 * (r.cosh() * (delta / 2.0).sin()).asin();
        assert!((coarse - closed_form(t3 - t1)).abs() < 1e-12);
        assert!((fine - closed_form(t2 - t1) - closed_form(t3 - t2)).abs() < 1e-12);
    }

    #[test]
    fn good_partition_dominates_single_atom_measure() {
        use crate::hyp::Side;
        // One leaf of weight w crossed by an arc along the real axis; support
        // half-planes with boundaries meeting on the leaf at exterior angle w
        // realize the measure exactly, coarser angles dominate it.
        let w = 0.9_f64;
        let lam = fence(&[0.0], &[w]);
        let arc = TransverseArc::open(
            PointH2::from_xy(-0.3, 0.0).unwrap(),
            PointH2::from_xy(0.3, 0.0).unwrap(),
        );
        let measure = lam.transverse_measure(&arc).unwrap();
        assert_eq!(measure, w);

        let lower = HalfPlaneH2::new(Geodesic::diameter(0.0), Side::CwArc);
        let pick = |theta: f64, target: f64| {
            let a = HalfPlaneH2::new(Geodesic::diameter(theta), Side::CcwArc);
            let b = a.complement();
            [a, b]
                .into_iter()
                .find(|h| (ext_angle_halfplanes(&lower, h).unwrap() - target).abs() < 1e-12)
                .expect("one side realizes the target angle")
        };
        let exact = GoodPartitionData {
            half_planes: vec![lower, pick(w, w)],
        };
        let bound = good_partition_bound(&exact).unwrap();
        assert!((bound - measure).abs() < 1e-12);
        // A sloppier support choice still bounds the measure from above.
        let coarse = GoodPartitionData {
            half_planes: vec![lower, pick(w + 0.4, w + 0.4)],
        };
        assert!(good_partition_bound(&coarse).unwrap() >= measure);
    }

    #[test]
    fn partition_with_disjoint_neighbors_is_not_good() {
        use crate::hyp::Side;
        let away = |theta: f64| {
            let h = HalfPlaneH2::new(Geodesic::tangent_at(theta, 1.2), Side::CcwArc);
            if h.contains(&PointH2::origin()) {
                h.complement()
            } else {
                h
            }
        };
        let data = GoodPartitionData {
            half_planes: vec![away(0.0), away(PI)],
        };
        assert!(matches!(
            good_partition_bound(&data),
            Err(LaminationError::NotGood { index: 0 })
        ));
    }

    #[test]
    fn file_spec_roundtrip() {
        let lam = fence(&[0.1, 0.8], &[1.5, 2.5]);
        let spec = lam.to_file_spec();
        let back = FiniteLamination::from_file_spec(&spec).unwrap();
        assert_eq!(back.leaves().len(), 2);
        assert_eq!(back.norm_l(0.5).unwrap(), lam.norm_l(0.5).unwrap());
    }
}
