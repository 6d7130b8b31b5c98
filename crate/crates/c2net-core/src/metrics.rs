//! Per-cluster capacity evaluation for an architecture and aggregation
//! to network-level metrics.

use alloc::vec::Vec;
use core::fmt;

use crate::architecture::Architecture;
use crate::channel::{self, ChannelError};
use crate::geometry::Point2D;
use crate::pathloss::ThreeSlopeParams;
use crate::theory::{self, RegionPair, TheoryError};
use crate::Capacity;

#[derive(Debug, Clone, PartialEq)]
pub enum MetricsError {
    /// Closed-form evaluation requested for a cluster without a disk
    /// region (cellular/CoMP).
    NoRegionForClosedForm,
    NoBaseStations,
    NoUsers,
    Channel(ChannelError),
    Theory(TheoryError),
}

impl fmt::Display for MetricsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricsError::NoRegionForClosedForm => write!(f, "no region for closed form"),
            MetricsError::NoBaseStations => write!(f, "no base stations"),
            MetricsError::NoUsers => write!(f, "zero users"),
            MetricsError::Channel(e) => write!(f, "channel error: {e}"),
            MetricsError::Theory(e) => write!(f, "theory error: {e}"),
        }
    }
}

impl From<ChannelError> for MetricsError {
    fn from(e: ChannelError) -> Self {
        MetricsError::Channel(e)
    }
}

impl From<TheoryError> for MetricsError {
    fn from(e: TheoryError) -> Self {
        MetricsError::Theory(e)
    }
}

/// How per-cluster capacities are computed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CapacityMethod {
    /// Deterministic asymptotic-eigenvalue formula.
    Eigen,
    /// Monte-Carlo over small-scale fading.
    MonteCarlo { trials: usize, seed: u64 },
    /// Constant-density closed form at the cluster-disk center
    /// (C² clusters only).
    Theory,
}

impl CapacityMethod {
    pub fn tag(&self) -> &'static str {
        match self {
            CapacityMethod::Eigen => "eigen",
            CapacityMethod::MonteCarlo { .. } => "mc",
            CapacityMethod::Theory => "theory",
        }
    }
}

/// Capacity of a single cluster within a report.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterCapacity {
    pub cluster_id: usize,
    pub bs_count: usize,
    pub user_count: usize,
    pub capacity: Capacity,
}

/// Per-cluster capacities plus network aggregates.
#[derive(Debug, Clone, PartialEq)]
pub struct CapacityReport {
    pub per_cluster: Vec<ClusterCapacity>,
    pub method: &'static str,
    /// Network average capacity per BS, bits/s/Hz.
    pub c_bs: f64,
    /// Network average capacity per user, `c_bs / realized_beta`.
    pub c_u: f64,
    /// Sampled user-to-BS ratio `K / L`.
    pub realized_beta: f64,
    /// Clusters excluded from the aggregates because their capacity is
    /// unbounded (zero noise, zero external interference).
    pub infinite_cluster_count: usize,
}

/// Evaluate every cluster of `arch` by the chosen method and aggregate.
pub fn evaluate_architecture(
    arch: &Architecture,
    pathloss: &ThreeSlopeParams,
    n0_over_p: f64,
    method: CapacityMethod,
) -> Result<CapacityReport, MetricsError> {
    let nodes = &arch.node_set;
    let all_users = &nodes.user_positions;
    let mut per_cluster = Vec::with_capacity(arch.clusters.len());
    for cluster in &arch.clusters {
        let bs: Vec<Point2D> = cluster
            .bs_indices
            .iter()
            .map(|&i| nodes.bs_positions[i])
            .collect();
        let users_in: Vec<Point2D> = cluster
            .user_indices
            .iter()
            .map(|&i| all_users[i])
            .collect();
        let mut in_cluster = alloc::vec![false; all_users.len()];
        for &i in &cluster.user_indices {
            in_cluster[i] = true;
        }
        let users_out: Vec<Point2D> = all_users
            .iter()
            .enumerate()
            .filter(|(i, _)| !in_cluster[*i])
            .map(|(_, p)| *p)
            .collect();

        let capacity = if bs.is_empty() {
            // a cluster with no BS contributes nothing and no weight
            Capacity::Finite(0.0)
        } else {
            match method {
                CapacityMethod::Eigen => {
                    channel::asymptotic_eigen_capacity(&bs, &users_in, &users_out, pathloss, n0_over_p)?
                }
                CapacityMethod::MonteCarlo { trials, seed } => {
                    if users_in.is_empty() {
                        // BS serving nobody: zero capacity by convention
                        Capacity::Finite(0.0)
                    } else if n0_over_p == 0.0 && users_out.is_empty() {
                        Capacity::Infinite
                    } else {
                        let p_over_n0 = if n0_over_p == 0.0 {
                            f64::INFINITY
                        } else {
                            1.0 / n0_over_p
                        };
                        let est = channel::mc_capacity(
                            &bs,
                            &users_in,
                            &users_out,
                            pathloss,
                            p_over_n0,
                            trials,
                            crate::rng::derive_seed(seed, cluster.id as u64),
                        )?;
                        Capacity::Finite(est.mean)
                    }
                }
                CapacityMethod::Theory => {
                    let region = cluster.region.ok_or(MetricsError::NoRegionForClosedForm)?;
                    let pair = RegionPair {
                        network: nodes.network,
                        cluster: region,
                    };
                    theory::corollary1_capacity(region.center, &pair, pathloss)?
                }
            }
        };
        per_cluster.push(ClusterCapacity {
            cluster_id: cluster.id,
            bs_count: bs.len(),
            user_count: users_in.len(),
            capacity,
        });
    }

    let finite: Vec<(f64, usize)> = per_cluster
        .iter()
        .filter_map(|c| c.capacity.finite().map(|v| (v, c.bs_count)))
        .collect();
    let infinite_cluster_count = per_cluster.len() - finite.len();
    let finite_bs: usize = finite.iter().map(|(_, l)| l).sum();
    // if every BS sits in an unbounded cluster the network aggregate
    // itself is unbounded rather than undefined
    let c_bs = if finite_bs == 0 && infinite_cluster_count > 0 {
        f64::INFINITY
    } else {
        network_capacity_per_bs(&finite)?
    };
    let realized_beta = nodes.realized_beta();
    let c_u = network_capacity_per_user(c_bs, realized_beta)?;
    Ok(CapacityReport {
        per_cluster,
        method: method.tag(),
        c_bs,
        c_u,
        realized_beta,
        infinite_cluster_count,
    })
}

/// BS-count weighted mean of per-cluster capacities:
/// `sum_j C_j L_j / L`.
pub fn network_capacity_per_bs(per_cluster: &[(f64, usize)]) -> Result<f64, MetricsError> {
    let total_bs: usize = per_cluster.iter().map(|(_, l)| l).sum();
    if total_bs == 0 {
        return Err(MetricsError::NoBaseStations);
    }
    let weighted: f64 = per_cluster.iter().map(|(c, l)| c * *l as f64).sum();
    Ok(weighted / total_bs as f64)
}

/// `c_u = c_bs / beta`.
pub fn network_capacity_per_user(c_bs: f64, realized_beta: f64) -> Result<f64, MetricsError> {
    if !(realized_beta > 0.0) {
        return Err(MetricsError::NoUsers);
    }
    Ok(c_bs / realized_beta)
}
