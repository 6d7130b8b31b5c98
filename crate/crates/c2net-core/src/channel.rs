//! Per-cluster fading realizations and capacity estimation.
//!
//! The channel matrix entry between BS `l` and in-cluster user `k` is
//! `h = sqrt(f(d)) * g` with `g` circular-symmetric complex Gaussian of
//! unit variance. Out-of-cluster interference enters through its fading
//! expectation only, as the diagonal `sigma[l] = sum_out f(d)` (in units
//! of the transmit power P), never as a random draw.
//!
//! Capacity per BS is `(1/L) log2 det(I + Ht Ht^H)` with the row-whitened
//! `Ht[l][.] = H[l][.] / sqrt(N0/P + sigma[l])`, evaluated through a
//! Hermitian Cholesky factorization of the Gram matrix.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::geometry::{distance, Point2D};
use crate::pathloss::{gain_squared_unchecked, ThreeSlopeParams};
use crate::rng::derive_seed;
use crate::Capacity;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChannelError {
    /// Cluster without at least one BS and one user.
    DegenerateCluster,
    /// Non-finite matrix entries (e.g. zero noise and zero interference
    /// in the whitening denominator).
    InvalidChannel,
}

impl fmt::Display for ChannelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChannelError::DegenerateCluster => write!(f, "degenerate cluster"),
            ChannelError::InvalidChannel => write!(f, "invalid channel"),
        }
    }
}

/// Row-major complex matrix, just large enough for the Gram/Cholesky
/// path used here.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

/// One fading realization of a cluster: channel matrix `h` (L x K),
/// per-BS interference diagonal `sigma` (in units of P), and the
/// power-to-noise ratio.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterChannel {
    pub h: ComplexMatrix,
    pub sigma: Vec<f64>,
    pub p_over_n0: f64,
}

/// Monte-Carlo capacity estimate in bits/s/Hz per BS.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub trials: usize,
}

/// Draw one fading realization for a cluster.
pub fn build_cluster_channel(
    cluster_bs: &[Point2D],
    cluster_users: &[Point2D],
    external_users: &[Point2D],
    pathloss: &ThreeSlopeParams,
    p_over_n0: f64,
    seed: u64,
) -> Result<ClusterChannel, ChannelError> {
    if cluster_bs.is_empty() || cluster_users.is_empty() {
        return Err(ChannelError::DegenerateCluster);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l_j = cluster_bs.len();
    let k_j = cluster_users.len();
    let mut h = ComplexMatrix::zeros(l_j, k_j);
    for (l, bs) in cluster_bs.iter().enumerate() {
        for (k, user) in cluster_users.iter().enumerate() {
            let amp = libm::sqrt(gain_squared_unchecked(distance(*bs, *user), pathloss));
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            // CN(0,1): unit total variance split across re/im
            let g = Complex64::new(re, im) * core::f64::consts::FRAC_1_SQRT_2;
            h.set(l, k, g * amp);
        }
    }
    let sigma = cluster_bs
        .iter()
        .map(|bs| {
            external_users
                .iter()
                .map(|u| gain_squared_unchecked(distance(*bs, *u), pathloss))
                .sum()
        })
        .collect();
    Ok(ClusterChannel { h, sigma, p_over_n0 })
}

/// Capacity of one realization: `(1/L) log2 det(I + Ht Ht^H)`.
pub fn sample_capacity(ch: &ClusterChannel) -> Result<f64, ChannelError> {
    if !ch.h.is_finite() || ch.sigma.iter().any(|s| !(*s >= 0.0)) {
        return Err(ChannelError::InvalidChannel);
    }
    let l_j = ch.h.rows;
    let k_j = ch.h.cols;
    let n0_over_p = if ch.p_over_n0.is_infinite() { 0.0 } else { 1.0 / ch.p_over_n0 };

    // row weights 1 / sqrt(N0/P + sigma_l)
    let mut w = Vec::with_capacity(l_j);
    for &s in &ch.sigma {
        let denom = n0_over_p + s;
        if denom <= 0.0 {
            return Err(ChannelError::InvalidChannel);
        }
        w.push(1.0 / libm::sqrt(denom));
    }

    // Gram matrix G = I + Ht Ht^H
    let mut g = ComplexMatrix::zeros(l_j, l_j);
    for a in 0..l_j {
        for b in a..l_j {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..k_j {
                acc += ch.h.get(a, k) * ch.h.get(b, k).conj();
            }
            acc *= w[a] * w[b];
            if a == b {
                acc += 1.0;
            }
            g.set(a, b, acc);
            g.set(b, a, acc.conj());
        }
    }
    let logdet = cholesky_logdet2(&mut g).ok_or(ChannelError::InvalidChannel)?;
    Ok((logdet / l_j as f64).max(0.0))
}

/// log2 det of a Hermitian positive-definite matrix, in place.
fn cholesky_logdet2(g: &mut ComplexMatrix) -> Option<f64> {
    let n = g.rows;
    let mut acc = 0.0;
    for j in 0..n {
        let mut d = g.get(j, j).re;
        for k in 0..j {
            d -= g.get(j, k).norm_sqr();
        }
        if !(d > 0.0) {
            return None;
        }
        let l_jj = libm::sqrt(d);
        acc += libm::log2(l_jj);
        g.set(j, j, Complex64::new(l_jj, 0.0));
        for i in (j + 1)..n {
            let mut v = g.get(i, j);
            for k in 0..j {
                v -= g.get(i, k) * g.get(j, k).conj();
            }
            g.set(i, j, v / l_jj);
        }
    }
    Some(2.0 * acc)
}

/// Mean and standard error of [`sample_capacity`] over independent fading
/// draws. Per-trial sub-seeds are derived from `(seed, trial)`, so the
/// estimate is a pure function of the seed regardless of evaluation order.
pub fn mc_capacity(
    cluster_bs: &[Point2D],
    cluster_users: &[Point2D],
    external_users: &[Point2D],
    pathloss: &ThreeSlopeParams,
    p_over_n0: f64,
    trials: usize,
    seed: u64,
) -> Result<CapacityEstimate, ChannelError> {
    assert!(trials >= 1, "trials must be >= 1");
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for t in 0..trials {
        let ch = build_cluster_channel(
            cluster_bs,
            cluster_users,
            external_users,
            pathloss,
            p_over_n0,
            derive_seed(seed, t as u64),
        )?;
        let c = sample_capacity(&ch)?;
        sum += c;
        sum_sq += c * c;
    }
    let n = trials as f64;
    let mean = sum / n;
    let var = ((sum_sq - sum * sum / n) / (n - 1.0).max(1.0)).max(0.0);
    Ok(CapacityEstimate {
        mean,
        std_error: libm::sqrt(var / n),
        trials,
    })
}

/// Deterministic asymptotic capacity from the diagonal-limit eigenvalues:
/// `lambda_l = sum_in f / (N0/P + sum_out f)`, averaged as
/// `(1/L) sum_l log2(1 + lambda_l)`.
pub fn asymptotic_eigen_capacity(
    cluster_bs: &[Point2D],
    cluster_users: &[Point2D],
    external_users: &[Point2D],
    pathloss: &ThreeSlopeParams,
    n0_over_p: f64,
) -> Result<Capacity, ChannelError> {
    if cluster_bs.is_empty() {
        return Err(ChannelError::DegenerateCluster);
    }
    let mut acc = 0.0;
    for bs in cluster_bs {
        let s_in: f64 = cluster_users
            .iter()
            .map(|u| gain_squared_unchecked(distance(*bs, *u), pathloss))
            .sum();
        if s_in == 0.0 {
            continue;
        }
        let s_out: f64 = external_users
            .iter()
            .map(|u| gain_squared_unchecked(distance(*bs, *u), pathloss))
            .sum();
        let denom = n0_over_p + s_out;
        if denom <= 0.0 {
            // fully coordinated, zero-noise corner
            return Ok(Capacity::Infinite);
        }
        acc += libm::log2(1.0 + s_in / denom);
    }
    Ok(Capacity::Finite(acc / cluster_bs.len() as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathloss::ThreeSlopeParams;

    const PL: ThreeSlopeParams = ThreeSlopeParams { d0: 10.0, d1: 50.0 };

    fn one_by_one(h: Complex64, sigma: f64, p_over_n0: f64) -> ClusterChannel {
        let mut m = ComplexMatrix::zeros(1, 1);
        m.set(0, 0, h);
        ClusterChannel {
            h: m,
            sigma: vec![sigma],
            p_over_n0,
        }
    }

    #[test]
    fn build_single_link_plateau_gain() {
        let bs = [Point2D::ORIGIN];
        let users = [Point2D::new(5.0, 0.0)];
        let plateau = PL.plateau();
        // expectation of |h|^2 over fading equals the plateau gain
        let mut acc = 0.0;
        let n = 4000;
        for s in 0..n {
            let ch = build_cluster_channel(&bs, &users, &[], &PL, 1.0, s).unwrap();
            acc += ch.h.get(0, 0).norm_sqr();
            assert!(ch.sigma[0] == 0.0);
        }
        let mean = acc / n as f64;
        assert!((mean - plateau).abs() / plateau < 0.1, "{mean} vs {plateau}");
    }

    #[test]
    fn build_sigma_sums_external_gains() {
        let bs = [Point2D::ORIGIN];
        let users = [Point2D::new(5.0, 0.0)];
        let ext = [Point2D::new(5.0, 0.0), Point2D::new(0.0, 5.0)];
        let ch = build_cluster_channel(&bs, &users, &ext, &PL, 1.0, 0).unwrap();
        let expected = 2.0 * PL.plateau();
        assert!((ch.sigma[0] - expected).abs() / expected < 1e-12);
        assert!((expected - 2.0 * 2.8284e-5).abs() / expected < 1e-4);
    }

    #[test]
    fn build_degenerate_cluster_rejected() {
        assert_eq!(
            build_cluster_channel(&[], &[Point2D::ORIGIN], &[], &PL, 1.0, 0),
            Err(ChannelError::DegenerateCluster)
        );
        assert_eq!(
            build_cluster_channel(&[Point2D::ORIGIN], &[], &[], &PL, 1.0, 0),
            Err(ChannelError::DegenerateCluster)
        );
    }

    #[test]
    fn sample_capacity_scalar_cases() {
        // unit-SNR scalar channel: log2(1 + 1) = 1
        let ch = one_by_one(Complex64::new(1.0, 0.0), 0.0, 1.0);
        assert!((sample_capacity(&ch).unwrap() - 1.0).abs() < 1e-12);

        // zero matrix: identity determinant
        let ch = one_by_one(Complex64::new(0.0, 0.0), 0.0, 1.0);
        assert_eq!(sample_capacity(&ch).unwrap(), 0.0);
    }

    #[test]
    fn sample_capacity_diagonal_two_branch() {
        // 2x2 diagonal with per-branch SNRs 1 and 3: (log2 2 + log2 4)/2
        let mut h = ComplexMatrix::zeros(2, 2);
        h.set(0, 0, Complex64::new(1.0, 0.0));
        h.set(1, 1, Complex64::new(libm::sqrt(3.0), 0.0));
        let ch = ClusterChannel {
            h,
            sigma: vec![0.0, 0.0],
            p_over_n0: 1.0,
        };
        assert!((sample_capacity(&ch).unwrap() - 1.5).abs() < 1e-12);
    }

    #[test]
    fn sample_capacity_rejects_zero_denominator() {
        let ch = one_by_one(Complex64::new(1.0, 0.0), 0.0, f64::INFINITY);
        assert_eq!(sample_capacity(&ch), Err(ChannelError::InvalidChannel));
    }

    #[test]
    fn logdet_matches_cofactor_expansion_oracle() {
        use rand::Rng;
        // brute-force determinant for small complex matrices
        fn det(m: &ComplexMatrix) -> Complex64 {
            let n = m.rows;
            if n == 1 {
                return m.get(0, 0);
            }
            let mut acc = Complex64::new(0.0, 0.0);
            for c in 0..n {
                let mut minor = ComplexMatrix::zeros(n - 1, n - 1);
                for r in 1..n {
                    let mut cc = 0;
                    for k in 0..n {
                        if k == c {
                            continue;
                        }
                        minor.set(r - 1, cc, m.get(r, k));
                        cc += 1;
                    }
                }
                let sign = if c % 2 == 0 { 1.0 } else { -1.0 };
                acc += m.get(0, c) * det(&minor) * sign;
            }
            acc
        }

        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for n in 1..=4usize {
            for _ in 0..20 {
                let k = n + 1;
                let mut h = ComplexMatrix::zeros(n, k);
                for r in 0..n {
                    for c in 0..k {
                        h.set(r, c, Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5));
                    }
                }
                let ch = ClusterChannel {
                    h: h.clone(),
                    sigma: vec![0.0; n],
                    p_over_n0: 1.0,
                };
                // I + H H^H explicitly, then cofactor determinant
                let mut g = ComplexMatrix::zeros(n, n);
                for a in 0..n {
                    for b in 0..n {
                        let mut acc = Complex64::new(0.0, 0.0);
                        for c in 0..k {
                            acc += h.get(a, c) * h.get(b, c).conj();
                        }
                        if a == b {
                            acc += 1.0;
                        }
                        g.set(a, b, acc);
                    }
                }
                let oracle = libm::log2(det(&g).re) / n as f64;
                let got = sample_capacity(&ch).unwrap();
                assert!((got - oracle).abs() / oracle.abs().max(1e-30) < 1e-10);
            }
        }
    }

    #[test]
    fn capacity_invariant_under_permutations() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let n = 3;
        let k = 5;
        let mut h = ComplexMatrix::zeros(n, k);
        for r in 0..n {
            for c in 0..k {
                h.set(r, c, Complex64::new(rng.gen::<f64>(), rng.gen::<f64>()));
            }
        }
        let sigma = vec![0.3, 0.1, 0.7];
        let base = sample_capacity(&ClusterChannel {
            h: h.clone(),
            sigma: sigma.clone(),
            p_over_n0: 2.0,
        })
        .unwrap();

        // permute rows (with sigma) and columns
        let row_perm = [2usize, 0, 1];
        let col_perm = [4usize, 2, 0, 3, 1];
        let mut hp = ComplexMatrix::zeros(n, k);
        for (r_new, &r_old) in row_perm.iter().enumerate() {
            for (c_new, &c_old) in col_perm.iter().enumerate() {
                hp.set(r_new, c_new, h.get(r_old, c_old));
            }
        }
        let sigma_p: Vec<f64> = row_perm.iter().map(|&r| sigma[r]).collect();
        let permuted = sample_capacity(&ClusterChannel {
            h: hp,
            sigma: sigma_p,
            p_over_n0: 2.0,
        })
        .unwrap();
        assert!((base - permuted).abs() < 1e-12);
    }

    #[test]
    fn mc_capacity_decreases_with_interference() {
        // common random numbers: same seed, larger sigma via a farther vs
        // nearer external user
        let bs = [Point2D::ORIGIN, Point2D::new(30.0, 0.0)];
        let users = [Point2D::new(10.0, 5.0), Point2D::new(25.0, -5.0)];
        let ext_near = [Point2D::new(60.0, 0.0)];
        let ext_far = [Point2D::new(200.0, 0.0)];
        let low =
            mc_capacity(&bs, &users, &ext_near, &PL, 1e6, 64, 3).unwrap();
        let high =
            mc_capacity(&bs, &users, &ext_far, &PL, 1e6, 64, 3).unwrap();
        assert!(high.mean > low.mean);
    }

    #[test]
    fn mc_capacity_single_trial_deterministic() {
        let bs = [Point2D::ORIGIN];
        let users = [Point2D::new(20.0, 0.0)];
        let a = mc_capacity(&bs, &users, &[], &PL, 1e4, 1, 11).unwrap();
        let b = mc_capacity(&bs, &users, &[], &PL, 1e4, 1, 11).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.std_error, 0.0);
    }

    #[test]
    fn eigen_gains_cancel() {
        // one in-cluster and one external user at equal plateau distance:
        // lambda = 1, capacity = 1
        let bs = [Point2D::ORIGIN];
        let users = [Point2D::new(5.0, 0.0)];
        let ext = [Point2D::new(0.0, 5.0)];
        let c = asymptotic_eigen_capacity(&bs, &users, &ext, &PL, 0.0).unwrap();
        assert_eq!(c, Capacity::Finite(1.0));
    }

    #[test]
    fn eigen_edge_cases() {
        let bs = [Point2D::ORIGIN];
        // no in-cluster users: zero capacity
        assert_eq!(
            asymptotic_eigen_capacity(&bs, &[], &[Point2D::new(5.0, 0.0)], &PL, 0.0).unwrap(),
            Capacity::Finite(0.0)
        );
        // no external users, zero noise: fully coordinated limit
        assert_eq!(
            asymptotic_eigen_capacity(&bs, &[Point2D::new(5.0, 0.0)], &[], &PL, 0.0).unwrap(),
            Capacity::Infinite
        );
        assert_eq!(
            asymptotic_eigen_capacity(&[], &[], &[], &PL, 0.0),
            Err(ChannelError::DegenerateCluster)
        );
    }
}
