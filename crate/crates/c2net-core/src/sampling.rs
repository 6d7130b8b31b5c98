//! Node placement over the network disk: piecewise-homogeneous Poisson
//! point processes with constant or concentric-ring density profiles.
//!
//! Counts are Poisson with mean `density * area` per ring (the constant
//! case is a homogeneous PPP); a fixed-count mode rounds the mean instead,
//! for experiments that need exact user/BS ratios. Placement within a ring
//! is exactly uniform via inverse-CDF on the radius.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};

use crate::geometry::{Disk, Point2D};
use crate::rng::derive_seed;

#[derive(Debug, Clone, PartialEq)]
pub enum SamplingError {
    /// Every ring has zero expected count.
    EmptyDensityProfile,
    /// Ring boundaries not strictly increasing in (0, 1], negative
    /// densities, or mismatched lengths.
    InvalidProfile,
}

impl fmt::Display for SamplingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SamplingError::EmptyDensityProfile => write!(f, "empty density profile"),
            SamplingError::InvalidProfile => write!(f, "invalid density profile"),
        }
    }
}

/// Node density over the network disk, in nodes per square meter.
#[derive(Debug, Clone, PartialEq)]
pub enum DensityProfile {
    Constant { density: f64 },
    /// Concentric rings centered on the network center. `boundaries` are
    /// outer ring edges as fractions of the network radius, strictly
    /// increasing and ending at 1; `densities[i]` applies between
    /// `boundaries[i-1]` and `boundaries[i]`.
    ConcentricRings {
        boundaries: Vec<f64>,
        densities: Vec<f64>,
    },
}

impl DensityProfile {
    /// The urban/rural split used for visualization: three equal-width
    /// rings at 5/9, 3/9, 1/9 of the base density, densest innermost.
    pub fn concentric_thirds(base_density: f64) -> Self {
        DensityProfile::ConcentricRings {
            boundaries: alloc::vec![1.0 / 3.0, 2.0 / 3.0, 1.0],
            densities: alloc::vec![
                5.0 / 9.0 * base_density,
                3.0 / 9.0 * base_density,
                1.0 / 9.0 * base_density,
            ],
        }
    }

    fn validate(&self) -> Result<(), SamplingError> {
        match self {
            DensityProfile::Constant { density } => {
                if !density.is_finite() || *density < 0.0 {
                    return Err(SamplingError::InvalidProfile);
                }
            }
            DensityProfile::ConcentricRings {
                boundaries,
                densities,
            } => {
                if boundaries.is_empty()
                    || boundaries.len() != densities.len()
                    || densities.iter().any(|d| !d.is_finite() || *d < 0.0)
                {
                    return Err(SamplingError::InvalidProfile);
                }
                let mut prev = 0.0;
                for &b in boundaries {
                    if !(b > prev && b <= 1.0) {
                        return Err(SamplingError::InvalidProfile);
                    }
                    prev = b;
                }
                if (prev - 1.0).abs() > 1e-12 {
                    return Err(SamplingError::InvalidProfile);
                }
            }
        }
        Ok(())
    }

    /// Rings as (inner radius, outer radius, density) in absolute meters.
    pub fn rings(&self, network_radius: f64) -> Vec<(f64, f64, f64)> {
        match self {
            DensityProfile::Constant { density } => {
                alloc::vec![(0.0, network_radius, *density)]
            }
            DensityProfile::ConcentricRings {
                boundaries,
                densities,
            } => {
                let mut out = Vec::with_capacity(boundaries.len());
                let mut a = 0.0;
                for (&b, &rho) in boundaries.iter().zip(densities) {
                    out.push((a * network_radius, b * network_radius, rho));
                    a = b;
                }
                out
            }
        }
    }

    /// Expected node count over a disk of the given radius.
    pub fn expected_count(&self, network_radius: f64) -> f64 {
        self.rings(network_radius)
            .iter()
            .map(|&(a, b, rho)| rho * PI * (b * b - a * a))
            .sum()
    }

    /// Density at distance `r` from the network center.
    pub fn density_at(&self, r: f64, network_radius: f64) -> f64 {
        match self {
            DensityProfile::Constant { density } => *density,
            DensityProfile::ConcentricRings { .. } => self
                .rings(network_radius)
                .iter()
                .find(|&&(a, b, _)| r >= a && r <= b)
                .map(|&(_, _, rho)| rho)
                .unwrap_or(0.0),
        }
    }
}

/// How per-ring node counts are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    /// Poisson-distributed counts (a true PPP).
    Poisson,
    /// Counts fixed at the rounded mean; positions still uniform.
    FixedMean,
}

/// Sampled BS and user coordinates over the network disk.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSet {
    pub bs_positions: Vec<Point2D>,
    pub user_positions: Vec<Point2D>,
    pub network: Disk,
}

impl NodeSet {
    /// Realized user-to-BS ratio `K / L`.
    pub fn realized_beta(&self) -> f64 {
        self.user_positions.len() as f64 / self.bs_positions.len() as f64
    }
}

/// Draw one point set over the network disk. Deterministic given the seed.
pub fn sample_nodes(
    network: &Disk,
    profile: &DensityProfile,
    seed: u64,
) -> Result<Vec<Point2D>, SamplingError> {
    sample_nodes_with_mode(network, profile, CountMode::Poisson, seed)
}

pub fn sample_nodes_with_mode(
    network: &Disk,
    profile: &DensityProfile,
    mode: CountMode,
    seed: u64,
) -> Result<Vec<Point2D>, SamplingError> {
    profile.validate()?;
    if profile.expected_count(network.radius) <= 0.0 {
        return Err(SamplingError::EmptyDensityProfile);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (a, b, rho) in profile.rings(network.radius) {
        let mean = rho * PI * (b * b - a * a);
        let count = match mode {
            CountMode::Poisson => {
                if mean > 0.0 {
                    // mean is finite and positive; Poisson::new only fails otherwise
                    Poisson::new(mean)
                        .map_err(|_| SamplingError::InvalidProfile)?
                        .sample(&mut rng) as usize
                } else {
                    0
                }
            }
            CountMode::FixedMean => libm::round(mean) as usize,
        };
        for _ in 0..count {
            out.push(uniform_in_ring(network.center, a, b, &mut rng));
        }
    }
    Ok(out)
}

/// Sample BSs and users with decorrelated sub-seeds derived from `seed`.
pub fn sample_node_set(
    network: &Disk,
    bs_profile: &DensityProfile,
    user_profile: &DensityProfile,
    mode: CountMode,
    seed: u64,
) -> Result<NodeSet, SamplingError> {
    let bs_positions =
        sample_nodes_with_mode(network, bs_profile, mode, derive_seed(seed, 0))?;
    let user_positions =
        sample_nodes_with_mode(network, user_profile, mode, derive_seed(seed, 1))?;
    Ok(NodeSet {
        bs_positions,
        user_positions,
        network: *network,
    })
}

/// Uniform point in the annulus `a <= r <= b` around `center`, via
/// inverse-CDF on the radius: `r = sqrt(a^2 + u (b^2 - a^2))`.
fn uniform_in_ring<R: Rng>(center: Point2D, a: f64, b: f64, rng: &mut R) -> Point2D {
    let u: f64 = rng.gen();
    let r = libm::sqrt(a * a + u * (b * b - a * a));
    let phi: f64 = rng.gen::<f64>() * 2.0 * PI;
    Point2D::new(
        center.x + r * libm::cos(phi),
        center.y + r * libm::sin(phi),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::distance;

    fn network() -> Disk {
        Disk::new(Point2D::ORIGIN, 1000.0)
    }

    #[test]
    fn constant_density_poisson_count() {
        let profile = DensityProfile::Constant { density: 6e-3 };
        let mean = profile.expected_count(1000.0);
        assert!((mean - 18849.55).abs() < 0.1);
        let pts = sample_nodes(&network(), &profile, 42).unwrap();
        let sigma = libm::sqrt(mean);
        assert!((pts.len() as f64 - mean).abs() < 3.0 * sigma, "{}", pts.len());
        for p in &pts {
            assert!(distance(*p, Point2D::ORIGIN) <= 1000.0);
        }
    }

    #[test]
    fn zero_density_is_error() {
        let profile = DensityProfile::Constant { density: 0.0 };
        assert_eq!(
            sample_nodes(&Disk::new(Point2D::ORIGIN, 1.0), &profile, 1),
            Err(SamplingError::EmptyDensityProfile)
        );
    }

    #[test]
    fn concentric_per_ring_counts() {
        let rho_b = 3e-3;
        let profile = DensityProfile::concentric_thirds(rho_b);
        let r0 = 1000.0;
        let pts = sample_nodes(&network(), &profile, 7).unwrap();
        for (a, b, rho) in profile.rings(r0) {
            let mean = rho * PI * (b * b - a * a);
            let n = pts
                .iter()
                .filter(|p| {
                    let r = distance(**p, Point2D::ORIGIN);
                    r >= a && r <= b
                })
                .count() as f64;
            assert!((n - mean).abs() < 4.0 * libm::sqrt(mean), "ring {a}-{b}: {n} vs {mean}");
        }
        // total expectation is the sum of density * area over rings
        let total: f64 = profile
            .rings(r0)
            .iter()
            .map(|&(a, b, rho)| rho * PI * (b * b - a * a))
            .sum();
        assert!((profile.expected_count(r0) - total).abs() < 1e-9);
        assert!((pts.len() as f64 - total).abs() < 3.0 * libm::sqrt(total));
    }

    #[test]
    fn seeded_determinism() {
        let profile = DensityProfile::Constant { density: 1e-4 };
        let a = sample_nodes(&network(), &profile, 5).unwrap();
        let b = sample_nodes(&network(), &profile, 5).unwrap();
        assert_eq!(a, b);
        let c = sample_nodes(&network(), &profile, 6).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn fixed_mean_mode_count() {
        let profile = DensityProfile::Constant { density: 1e-4 };
        let pts =
            sample_nodes_with_mode(&network(), &profile, CountMode::FixedMean, 9).unwrap();
        let mean = profile.expected_count(1000.0);
        assert_eq!(pts.len(), libm::round(mean) as usize);
    }

    #[test]
    fn invalid_profiles_rejected() {
        let bad = DensityProfile::ConcentricRings {
            boundaries: alloc::vec![0.5, 0.4, 1.0],
            densities: alloc::vec![1.0, 1.0, 1.0],
        };
        assert_eq!(
            sample_nodes(&network(), &bad, 0),
            Err(SamplingError::InvalidProfile)
        );
        let not_ending_at_one = DensityProfile::ConcentricRings {
            boundaries: alloc::vec![0.5, 0.9],
            densities: alloc::vec![1.0, 1.0],
        };
        assert_eq!(
            sample_nodes(&network(), &not_ending_at_one, 0),
            Err(SamplingError::InvalidProfile)
        );
    }

    #[test]
    fn empirical_ring_density_chi_square() {
        // chi-square over 20 seeds at loose significance for the
        // concentric profile
        let rho_b = 2e-3;
        let profile = DensityProfile::concentric_thirds(rho_b);
        let r0 = 1000.0;
        let rings = profile.rings(r0);
        let mut chi2 = 0.0;
        for seed in 0..20u64 {
            let pts = sample_nodes(&network(), &profile, 1000 + seed).unwrap();
            for &(a, b, rho) in &rings {
                let mean = rho * PI * (b * b - a * a);
                let n = pts
                    .iter()
                    .filter(|p| {
                        let r = distance(**p, Point2D::ORIGIN);
                        r >= a && r <= b
                    })
                    .count() as f64;
                chi2 += (n - mean) * (n - mean) / mean;
            }
        }
        // 60 dof: mean 60, std sqrt(120) ~ 11; 5 sigma is very loose
        assert!(chi2 < 60.0 + 5.0 * libm::sqrt(120.0), "chi2 = {chi2}");
    }
}
