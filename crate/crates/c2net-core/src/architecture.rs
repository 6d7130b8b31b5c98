//! The three competing network organizations as node partitions:
//! C² (packing based), cellular (Voronoi), and CoMP (random-datum
//! clustering).

use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{self, distance, Disk};
use crate::sampling::NodeSet;

#[derive(Debug, Clone, PartialEq)]
pub enum ArchitectureError {
    NoBaseStations,
    ClusterExceedsNetwork,
    InvalidRadius,
}

impl fmt::Display for ArchitectureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArchitectureError::NoBaseStations => write!(f, "no base stations"),
            ArchitectureError::ClusterExceedsNetwork => write!(f, "cluster exceeds network"),
            ArchitectureError::InvalidRadius => write!(f, "radius must be positive"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArchitectureKind {
    C2,
    Cellular,
    CoMP,
}

impl ArchitectureKind {
    pub fn name(&self) -> &'static str {
        match self {
            ArchitectureKind::C2 => "c2",
            ArchitectureKind::Cellular => "cellular",
            ArchitectureKind::CoMP => "comp",
        }
    }
}

/// One cluster: indices into the node set, plus the disk region for C²
/// clusters (cellular/CoMP clusters have no closed-form region).
#[derive(Debug, Clone, PartialEq)]
pub struct Cluster {
    pub id: usize,
    pub bs_indices: Vec<usize>,
    pub user_indices: Vec<usize>,
    pub region: Option<Disk>,
}

/// A partition of all BSs and users into disjoint clusters.
#[derive(Debug, Clone, PartialEq)]
pub struct Architecture {
    pub kind: ArchitectureKind,
    pub clusters: Vec<Cluster>,
    pub node_set: NodeSet,
}

impl Architecture {
    pub fn cluster_count(&self) -> usize {
        self.clusters.len()
    }
}

/// Partition nodes into packing-based C² clusters of radius `r_th`.
///
/// Cluster centers depend only on the network and threshold radii, never
/// on the node positions; nodes join the cluster with the nearest center
/// (which is the covering cluster whenever a node lies inside some
/// cluster disk, since the disks are disjoint).
pub fn build_c2(node_set: &NodeSet, r_th: f64) -> Result<Architecture, ArchitectureError> {
    if r_th <= 0.0 {
        return Err(ArchitectureError::InvalidRadius);
    }
    let centers = geometry::pack_disks(node_set.network.radius, r_th)
        .map_err(|_| ArchitectureError::ClusterExceedsNetwork)?;
    let mut clusters: Vec<Cluster> = centers
        .iter()
        .enumerate()
        .map(|(id, &c)| Cluster {
            id,
            bs_indices: Vec::new(),
            user_indices: Vec::new(),
            region: Some(Disk::new(c, r_th)),
        })
        .collect();
    for (i, p) in node_set.bs_positions.iter().enumerate() {
        let j = geometry::nearest_index(*p, &centers).expect("non-empty centers");
        clusters[j].bs_indices.push(i);
    }
    for (i, p) in node_set.user_positions.iter().enumerate() {
        let j = geometry::nearest_index(*p, &centers).expect("non-empty centers");
        clusters[j].user_indices.push(i);
    }
    Ok(Architecture {
        kind: ArchitectureKind::C2,
        clusters,
        node_set: node_set.clone(),
    })
}

/// One cluster per BS; users attach to their nearest BS (Voronoi).
pub fn build_cellular(node_set: &NodeSet) -> Result<Architecture, ArchitectureError> {
    if node_set.bs_positions.is_empty() {
        return Err(ArchitectureError::NoBaseStations);
    }
    let mut clusters: Vec<Cluster> = (0..node_set.bs_positions.len())
        .map(|id| Cluster {
            id,
            bs_indices: alloc::vec![id],
            user_indices: Vec::new(),
            region: None,
        })
        .collect();
    for (i, p) in node_set.user_positions.iter().enumerate() {
        let j = geometry::nearest_index(*p, &node_set.bs_positions).expect("non-empty BS list");
        clusters[j].user_indices.push(i);
    }
    Ok(Architecture {
        kind: ArchitectureKind::Cellular,
        clusters,
        node_set: node_set.clone(),
    })
}

/// Random-datum CoMP clustering: repeatedly pick a uniformly random
/// unassigned BS, group every unassigned BS within `r_comp` of it, until
/// none remain; users then inherit the cluster of their nearest BS.
pub fn build_comp(
    node_set: &NodeSet,
    r_comp: f64,
    seed: u64,
) -> Result<Architecture, ArchitectureError> {
    if node_set.bs_positions.is_empty() {
        return Err(ArchitectureError::NoBaseStations);
    }
    if r_comp <= 0.0 {
        return Err(ArchitectureError::InvalidRadius);
    }
    let l = node_set.bs_positions.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cluster_of_bs = alloc::vec![usize::MAX; l];
    let mut unassigned: Vec<usize> = (0..l).collect();
    let mut clusters: Vec<Cluster> = Vec::new();
    while !unassigned.is_empty() {
        let pick = rng.gen_range(0..unassigned.len());
        let datum = unassigned[pick];
        let datum_pos = node_set.bs_positions[datum];
        let id = clusters.len();
        let mut members = Vec::new();
        unassigned.retain(|&b| {
            if distance(node_set.bs_positions[b], datum_pos) <= r_comp {
                members.push(b);
                cluster_of_bs[b] = id;
                false
            } else {
                true
            }
        });
        clusters.push(Cluster {
            id,
            bs_indices: members,
            user_indices: Vec::new(),
            region: None,
        });
    }
    for (i, p) in node_set.user_positions.iter().enumerate() {
        let j = geometry::nearest_index(*p, &node_set.bs_positions).expect("non-empty BS list");
        clusters[cluster_of_bs[j]].user_indices.push(i);
    }
    Ok(Architecture {
        kind: ArchitectureKind::CoMP,
        clusters,
        node_set: node_set.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point2D;
    use crate::sampling::{sample_node_set, CountMode, DensityProfile};

    fn node_set(seed: u64) -> NodeSet {
        let network = Disk::new(Point2D::ORIGIN, 1000.0);
        sample_node_set(
            &network,
            &DensityProfile::Constant { density: 3e-5 },
            &DensityProfile::Constant { density: 6e-5 },
            CountMode::Poisson,
            seed,
        )
        .unwrap()
    }

    fn assert_partition(arch: &Architecture) {
        let l = arch.node_set.bs_positions.len();
        let k = arch.node_set.user_positions.len();
        let mut bs_seen = alloc::vec![false; l];
        let mut user_seen = alloc::vec![false; k];
        for c in &arch.clusters {
            for &b in &c.bs_indices {
                assert!(!bs_seen[b], "BS {b} in two clusters");
                bs_seen[b] = true;
            }
            for &u in &c.user_indices {
                assert!(!user_seen[u], "user {u} in two clusters");
                user_seen[u] = true;
            }
        }
        assert!(bs_seen.iter().all(|&s| s));
        assert!(user_seen.iter().all(|&s| s));
    }

    #[test]
    fn c2_fig3_cluster_count() {
        let arch = build_c2(&node_set(1), 175.0).unwrap();
        assert_eq!(arch.cluster_count(), 24);
        assert_partition(&arch);
    }

    #[test]
    fn c2_full_coordination() {
        let ns = node_set(2);
        let arch = build_c2(&ns, 1000.0).unwrap();
        assert_eq!(arch.cluster_count(), 1);
        assert_eq!(arch.clusters[0].bs_indices.len(), ns.bs_positions.len());
        assert_eq!(arch.clusters[0].user_indices.len(), ns.user_positions.len());
    }

    #[test]
    fn c2_geometry_independent_of_bs_layout() {
        let a = build_c2(&node_set(3), 100.0).unwrap();
        let mut other = node_set(4);
        other.user_positions = node_set(3).user_positions;
        let b = build_c2(&other, 100.0).unwrap();
        let centers_a: Vec<_> = a.clusters.iter().map(|c| c.region.unwrap()).collect();
        let centers_b: Vec<_> = b.clusters.iter().map(|c| c.region.unwrap()).collect();
        assert_eq!(centers_a, centers_b);
        // area bound
        assert!(a.cluster_count() <= 100);
    }

    #[test]
    fn c2_rejects_oversized_threshold() {
        assert_eq!(
            build_c2(&node_set(5), 2000.0),
            Err(ArchitectureError::ClusterExceedsNetwork)
        );
    }

    #[test]
    fn cellular_partition() {
        let network = Disk::new(Point2D::ORIGIN, 100.0);
        let ns = NodeSet {
            bs_positions: alloc::vec![
                Point2D::new(0.0, 0.0),
                Point2D::new(50.0, 0.0),
                Point2D::new(0.0, 50.0)
            ],
            user_positions: alloc::vec![
                Point2D::new(1.0, 0.0),
                Point2D::new(49.0, 0.0),
                Point2D::new(0.0, 51.0),
                Point2D::new(30.0, 0.0),
                Point2D::new(-10.0, 0.0)
            ],
            network,
        };
        let arch = build_cellular(&ns).unwrap();
        assert_eq!(arch.cluster_count(), 3);
        assert_partition(&arch);
        let user_total: usize = arch.clusters.iter().map(|c| c.user_indices.len()).sum();
        assert_eq!(user_total, 5);

        // equidistant user joins the lowest-index BS
        let tie = NodeSet {
            bs_positions: alloc::vec![Point2D::new(-10.0, 0.0), Point2D::new(10.0, 0.0)],
            user_positions: alloc::vec![Point2D::ORIGIN],
            network,
        };
        let arch = build_cellular(&tie).unwrap();
        assert_eq!(arch.clusters[0].user_indices, alloc::vec![0]);
        assert!(arch.clusters[1].user_indices.is_empty());
    }

    #[test]
    fn cellular_single_bs_takes_all() {
        let ns = node_set(6);
        let single = NodeSet {
            bs_positions: alloc::vec![Point2D::ORIGIN],
            user_positions: ns.user_positions.clone(),
            network: ns.network,
        };
        let arch = build_cellular(&single).unwrap();
        assert_eq!(arch.cluster_count(), 1);
        assert_eq!(
            arch.clusters[0].user_indices.len(),
            ns.user_positions.len()
        );
    }

    #[test]
    fn comp_extremes_and_determinism() {
        let ns = node_set(7);
        // radius below any pairwise BS distance: degenerates to cellular
        let tiny = build_comp(&ns, 1e-9, 0).unwrap();
        assert_eq!(tiny.cluster_count(), ns.bs_positions.len());
        assert_partition(&tiny);

        // radius beyond the network diameter: one cluster
        let huge = build_comp(&ns, 5000.0, 0).unwrap();
        assert_eq!(huge.cluster_count(), 1);

        // deterministic given the seed
        let a = build_comp(&ns, 100.0, 11).unwrap();
        let b = build_comp(&ns, 100.0, 11).unwrap();
        assert_eq!(a.cluster_count(), b.cluster_count());
        assert_eq!(a.clusters, b.clusters);
        assert_partition(&a);
    }
}
