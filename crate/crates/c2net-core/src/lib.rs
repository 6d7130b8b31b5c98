//! Capacity-centric (C²) clustering of ultra-dense wireless networks.
//!
//! The crate computes per-cluster and network-wide uplink capacities for a
//! planar network of single-antenna base stations and users, by three
//! independent routes:
//!
//! * Monte-Carlo over small-scale fading ([`channel::mc_capacity`]),
//! * the deterministic asymptotic-eigenvalue formula
//!   ([`channel::asymptotic_eigen_capacity`]),
//! * closed-form theory for round clusters ([`theory`]): capacity via the
//!   gain-ratio theorem and capacity-region bounds.
//!
//! It also builds the three competing network organizations — C² (packing
//! based), cellular (Voronoi), and CoMP (random-datum clustering) — and
//! aggregates per-cluster capacities to network metrics ([`metrics`]).
//!
//! The crate is `no_std` (with `alloc`); all IO, configuration, and file
//! formats live in the companion `c2net-cli` crate.

#![no_std]

extern crate alloc;

pub mod architecture;
pub mod channel;
pub mod geometry;
pub mod metrics;
mod packing_table;
pub mod pathloss;
mod rng;
pub mod sampling;
pub mod theory;

pub use architecture::{Architecture, ArchitectureKind, Cluster};
pub use channel::{CapacityEstimate, ClusterChannel};
pub use geometry::{Disk, Point2D};
pub use metrics::CapacityReport;
pub use pathloss::{PowerLawParams, ThreeSlopeParams};
pub use sampling::{DensityProfile, NodeSet};

/// A per-cluster capacity value in bits/s/Hz per BS.
///
/// The fully coordinated, zero-noise corner (no external interference,
/// `n0_over_p = 0`) has unbounded capacity; it is carried as an explicit
/// tag so aggregation code can exclude it instead of propagating a
/// floating-point infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Capacity {
    Finite(f64),
    Infinite,
}

impl Capacity {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Capacity::Infinite)
    }

    /// The finite value, or `None` for the infinite tag.
    pub fn finite(&self) -> Option<f64> {
        match self {
            Capacity::Finite(v) => Some(*v),
            Capacity::Infinite => None,
        }
    }
}
