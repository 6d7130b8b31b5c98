//! Randomized invariant checks over the geometry, path-loss, and
//! clustering primitives.

use c2net_core::architecture::build_c2;
use c2net_core::geometry::{distance, pack_disks, Disk, Point2D};
use c2net_core::pathloss::{gain_squared, ThreeSlopeParams};
use c2net_core::sampling::{sample_node_set, CountMode, DensityProfile};
use proptest::prelude::*;

fn point() -> impl Strategy<Value = Point2D> {
    (-1e4f64..1e4, -1e4f64..1e4).prop_map(|(x, y)| Point2D::new(x, y))
}

proptest! {
    #[test]
    fn distance_is_a_metric(a in point(), b in point(), c in point()) {
        let ab = distance(a, b);
        prop_assert_eq!(ab, distance(b, a));
        prop_assert!(ab >= 0.0);
        prop_assert!(distance(a, a) == 0.0);
        // triangle inequality, with slack for rounding
        prop_assert!(ab <= distance(a, c) + distance(c, b) + 1e-9 * (1.0 + ab));
    }

    #[test]
    fn pathloss_gain_bounded_and_monotone(d in 0.0f64..1e5, step in 0.0f64..1e3) {
        let pl = ThreeSlopeParams::default_urban();
        let g = gain_squared(d, &pl).unwrap();
        prop_assert!(g > 0.0);
        prop_assert!(g <= pl.plateau());
        prop_assert!(gain_squared(d + step, &pl).unwrap() <= g);
    }

    #[test]
    fn packed_disks_are_disjoint_and_contained(
        r0 in 100.0f64..5e3,
        ratio in 1.0f64..12.0,
    ) {
        let r_th = r0 / ratio;
        let centers = pack_disks(r0, r_th).unwrap();
        prop_assert!(!centers.is_empty());
        for (i, a) in centers.iter().enumerate() {
            prop_assert!(a.norm() <= r0 - r_th + 1e-6 * r0);
            for b in centers.iter().skip(i + 1) {
                prop_assert!(distance(*a, *b) >= 2.0 * r_th - 1e-6 * r0);
            }
        }
        // disjointness caps the count by the area ratio
        prop_assert!(centers.len() as f64 * r_th * r_th <= r0 * r0 * (1.0 + 1e-6));
    }

    #[test]
    fn c2_clusters_partition_what_they_cover(seed in 0u64..1000) {
        let network = Disk::new(Point2D::ORIGIN, 400.0);
        let ns = sample_node_set(
            &network,
            &DensityProfile::Constant { density: 5e-5 },
            &DensityProfile::Constant { density: 1e-4 },
            CountMode::Poisson,
            seed,
        ).unwrap();
        let arch = build_c2(&ns, 120.0).unwrap();
        let mut bs_seen = vec![false; ns.bs_positions.len()];
        let mut user_seen = vec![false; ns.user_positions.len()];
        for cl in &arch.clusters {
            for &i in &cl.bs_indices {
                prop_assert!(!bs_seen[i]);
                bs_seen[i] = true;
            }
            for &i in &cl.user_indices {
                prop_assert!(!user_seen[i]);
                user_seen[i] = true;
            }
        }
        prop_assert!(bs_seen.iter().all(|&s| s));
        prop_assert!(user_seen.iter().all(|&s| s));
    }
}
