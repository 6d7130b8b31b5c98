//! Planar primitives: points, disks, nearest-neighbor assignment, and
//! circle packing in a circle.

use alloc::vec::Vec;
use core::fmt;

use crate::packing_table::{MAX_TABLE_COUNT, PACKING_CENTERS, PACKING_RATIOS};

/// Relative slack applied to tangency/containment comparisons.
const REL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2D {
    pub x: f64,
    pub y: f64,
}

impl Point2D {
    pub fn new(x: f64, y: f64) -> Self {
        Point2D { x, y }
    }

    pub const ORIGIN: Point2D = Point2D { x: 0.0, y: 0.0 };

    pub fn norm(&self) -> f64 {
        libm::hypot(self.x, self.y)
    }
}

/// A disk given by center and radius (meters). Radius must be positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    pub center: Point2D,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: Point2D, radius: f64) -> Self {
        assert!(radius > 0.0, "disk radius must be positive");
        Disk { center, radius }
    }

    pub fn contains(&self, p: Point2D) -> bool {
        distance(self.center, p) <= self.radius * (1.0 + REL_TOL)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeometryError {
    /// `nearest_index` called with an empty candidate list.
    NoCandidates,
    /// `pack_disks` called with inner radius exceeding the outer radius.
    ClusterExceedsNetwork,
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::NoCandidates => write!(f, "no candidates"),
            GeometryError::ClusterExceedsNetwork => write!(f, "cluster exceeds network"),
        }
    }
}

/// Euclidean distance between two points.
pub fn distance(p: Point2D, q: Point2D) -> f64 {
    libm::hypot(p.x - q.x, p.y - q.y)
}

/// Index of the closest candidate to `p`; ties go to the lowest index.
pub fn nearest_index(p: Point2D, candidates: &[Point2D]) -> Result<usize, GeometryError> {
    if candidates.is_empty() {
        return Err(GeometryError::NoCandidates);
    }
    let mut best = 0;
    let mut best_d = distance(p, candidates[0]);
    for (i, &c) in candidates.iter().enumerate().skip(1) {
        let d = distance(p, c);
        if d < best_d {
            best = i;
            best_d = d;
        }
    }
    Ok(best)
}

/// Centers of the largest number of pairwise-disjoint disks of
/// `inner_radius` that fit inside a disk of `outer_radius` centered at the
/// origin.
///
/// Counts up to 50 come from an embedded table of near-optimal
/// circle-packing-in-a-circle layouts; beyond that a hexagonal lattice is
/// used. The layout is deterministic for given radii.
pub fn pack_disks(outer_radius: f64, inner_radius: f64) -> Result<Vec<Point2D>, GeometryError> {
    assert!(inner_radius > 0.0 && outer_radius > 0.0, "radii must be positive");
    if inner_radius > outer_radius * (1.0 + REL_TOL) {
        return Err(GeometryError::ClusterExceedsNetwork);
    }
    let ratio = outer_radius / inner_radius;

    let mut table_n = 0;
    for n in (1..=MAX_TABLE_COUNT).rev() {
        if PACKING_RATIOS[n - 1] <= ratio * (1.0 + REL_TOL) {
            table_n = n;
            break;
        }
    }

    // The table stops at 50 disks; at large ratios a hexagonal lattice
    // packs more.
    let hex = if table_n == MAX_TABLE_COUNT {
        let h = hex_lattice_centers(outer_radius, inner_radius);
        if h.len() > MAX_TABLE_COUNT {
            Some(h)
        } else {
            None
        }
    } else {
        None
    };
    if let Some(h) = hex {
        return Ok(h);
    }

    debug_assert!(table_n >= 1);
    let centers = PACKING_CENTERS[table_n - 1];
    Ok(centers
        .iter()
        .map(|&(x, y)| Point2D::new(x * outer_radius, y * outer_radius))
        .collect())
}

/// Hexagonal-lattice centers with spacing `2 * inner` whose disks fit in
/// the outer disk, ordered by (row, column) for determinism.
fn hex_lattice_centers(outer: f64, inner: f64) -> Vec<Point2D> {
    let pitch = 2.0 * inner;
    let row_h = pitch * libm::sqrt(3.0) / 2.0;
    let reach = outer - inner;
    let mut out = Vec::new();
    let j_max = libm::floor(reach / row_h) as i64;
    for j in -j_max..=j_max {
        let y = j as f64 * row_h;
        let x_off = if j.rem_euclid(2) == 1 { pitch / 2.0 } else { 0.0 };
        let half_w = libm::sqrt(reach * reach - y * y);
        let i_min = libm::ceil((-half_w - x_off) / pitch) as i64;
        let i_max = libm::floor((half_w - x_off) / pitch) as i64;
        for i in i_min..=i_max {
            let x = i as f64 * pitch + x_off;
            if libm::hypot(x, y) <= reach * (1.0 + REL_TOL) {
                out.push(Point2D::new(x, y));
            }
        }
    }
    out
}
