//! Closed-form capacity machinery for round networks and clusters:
//! adaptive quadrature of gain integrals, the gain-ratio capacity theorem
//! and its constant-density corollary, the `V_j(x)` interference fraction,
//! the boundary gain integral `q(R_j)`, and the capacity-region bounds.
//!
//! All integrals reduce to 1-D radial quadrature around the evaluation
//! point: the angular measure of the circle of radius `s` inside the
//! region (weighted by a ring-piecewise density) has a closed form, and
//! the radial integrand `f(s) * s * w(s)` is bounded (the path-loss
//! plateau removes the singularity) and piecewise smooth between
//! breakpoints aligned to `{d0, d1}`, the region tangency radii, and the
//! density-ring crossing radii. Panels are refined by adaptive
//! Gauss-Legendre bisection until a relative tolerance is met.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use crate::geometry::{distance, Disk, Point2D};
use crate::pathloss::{gain_squared_unchecked, ThreeSlopeParams};
use crate::sampling::DensityProfile;
use crate::Capacity;

/// Default relative tolerance for gain integrals.
pub const DEFAULT_REL_TOL: f64 = 1e-6;

const MAX_DEPTH: u32 = 30;

#[derive(Debug, Clone, PartialEq)]
pub enum TheoryError {
    /// Adaptive refinement hit its depth limit before reaching the
    /// requested tolerance; carries the achieved relative error estimate.
    QuadratureFailure { achieved: f64 },
}

impl fmt::Display for TheoryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoryError::QuadratureFailure { achieved } => {
                write!(f, "quadrature failure (achieved relative error {achieved:e})")
            }
        }
    }
}

/// Network region `D_0` and one cluster region `D_j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionPair {
    pub network: Disk,
    pub cluster: Disk,
}

// 15-point Gauss-Legendre rule on [-1, 1].
static GL15: [(f64, f64); 15] = [
    (-9.87992518020485377e-01, 3.07532419961186465e-02),
    (-9.37273392400705951e-01, 7.03660474881080689e-02),
    (-8.48206583410427206e-01, 1.07159220467171773e-01),
    (-7.24417731360170070e-01, 1.39570677926153908e-01),
    (-5.70972172608538830e-01, 1.66269205816993781e-01),
    (-3.94151347077563385e-01, 1.86161000015561878e-01),
    (-2.01194093997434514e-01, 1.98431485327111246e-01),
    (0.00000000000000000e+00, 2.02578241925560898e-01),
    (2.01194093997434514e-01, 1.98431485327111246e-01),
    (3.94151347077563385e-01, 1.86161000015561878e-01),
    (5.70972172608538830e-01, 1.66269205816993781e-01),
    (7.24417731360170070e-01, 1.39570677926153908e-01),
    (8.48206583410427206e-01, 1.07159220467171773e-01),
    (9.37273392400705951e-01, 7.03660474881080689e-02),
    (9.87992518020485377e-01, 3.07532419961186465e-02),
];

fn gl15<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> f64 {
    let c = 0.5 * (lo + hi);
    let h = 0.5 * (hi - lo);
    let mut acc = 0.0;
    for &(x, w) in GL15.iter() {
        acc += w * f(c + h * x);
    }
    acc * h
}

fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    tol: f64,
    depth: u32,
    err_acc: &mut f64,
) -> Result<f64, f64> {
    let whole = gl15(f, lo, hi);
    let mid = 0.5 * (lo + hi);
    let halves = gl15(f, lo, mid) + gl15(f, mid, hi);
    let err = (halves - whole).abs();
    if err <= tol || hi - lo < 1e-14 * hi.abs().max(1.0) {
        *err_acc += err;
        return Ok(halves);
    }
    if depth >= MAX_DEPTH {
        *err_acc += err;
        return Err(halves);
    }
    let left = adaptive(f, lo, mid, 0.5 * tol, depth + 1, err_acc);
    let right = adaptive(f, mid, hi, 0.5 * tol, depth + 1, err_acc);
    match (left, right) {
        (Ok(a), Ok(b)) => Ok(a + b),
        (a, b) => Err(a.unwrap_or_else(|v| v) + b.unwrap_or_else(|v| v)),
    }
}

/// Half-angle of the arc of the circle `|y - x| = s` lying inside the
/// disk; `PI` means the full circle is inside.
fn arc_half_angle(s: f64, center_dist: f64, radius: f64) -> f64 {
    let b = center_dist;
    let a = radius;
    if s <= 0.0 || a <= 0.0 {
        return 0.0;
    }
    if b + s <= a {
        return PI;
    }
    if s >= a + b || s + a <= b {
        return 0.0;
    }
    if b == 0.0 {
        return if s <= a { PI } else { 0.0 };
    }
    let cosg = (b * b + s * s - a * a) / (2.0 * b * s);
    libm::acos(cosg.clamp(-1.0, 1.0))
}

/// Overlap length of two arcs on the unit circle, given by center angles
/// and half-widths.
fn arc_overlap(theta1: f64, g1: f64, theta2: f64, g2: f64) -> f64 {
    if g1 <= 0.0 || g2 <= 0.0 {
        return 0.0;
    }
    if g1 >= PI {
        return 2.0 * g2;
    }
    if g2 >= PI {
        return 2.0 * g1;
    }
    let mut delta = theta2 - theta1;
    // wrap into [-PI, PI]
    while delta > PI {
        delta -= 2.0 * PI;
    }
    while delta < -PI {
        delta += 2.0 * PI;
    }
    let mut acc = 0.0;
    for shift in [-2.0 * PI, 0.0, 2.0 * PI] {
        let lo = (delta - g2 + shift).max(-g1);
        let hi = (delta + g2 + shift).min(g1);
        if hi > lo {
            acc += hi - lo;
        }
    }
    acc
}

/// `integral of f(x - y) * rho(y) dy` over the disk `region`.
///
/// Ring densities in `density` are anchored to `density_frame` (the
/// network disk); for a constant density the frame is irrelevant.
pub fn integrate_gain(
    x: Point2D,
    region: &Disk,
    density: &DensityProfile,
    density_frame: &Disk,
    pathloss: &ThreeSlopeParams,
    rel_tol: f64,
) -> Result<f64, TheoryError> {
    assert!(
        rel_tol > 1e-12 && rel_tol < 1e-2,
        "rel_tol must lie in (1e-12, 1e-2)"
    );
    if region.radius <= 0.0 {
        return Ok(0.0);
    }

    let b_region = distance(x, region.center);
    let theta_region = libm::atan2(region.center.y - x.y, region.center.x - x.x);
    let s_lo = (b_region - region.radius).max(0.0);
    let s_hi = b_region + region.radius;

    // telescoped ring decomposition: rho(y) = sum_k coeff_k * 1_{|y - O| <= r_k}
    struct RingTerm {
        coeff: f64,
        radius: f64,
    }
    let (ring_terms, const_density): (Vec<RingTerm>, Option<f64>) = match density {
        DensityProfile::Constant { density } => (Vec::new(), Some(*density)),
        DensityProfile::ConcentricRings {
            boundaries,
            densities,
        } => {
            let mut terms = Vec::with_capacity(boundaries.len());
            for i in 0..boundaries.len() {
                let next = if i + 1 < densities.len() { densities[i + 1] } else { 0.0 };
                terms.push(RingTerm {
                    coeff: densities[i] - next,
                    radius: boundaries[i] * density_frame.radius,
                });
            }
            (terms, None)
        }
    };
    let b_frame = distance(x, density_frame.center);
    let theta_frame = libm::atan2(
        density_frame.center.y - x.y,
        density_frame.center.x - x.x,
    );

    // angular weight at radius s
    let weight = |s: f64| -> f64 {
        let g_region = arc_half_angle(s, b_region, region.radius);
        if g_region <= 0.0 {
            return 0.0;
        }
        match const_density {
            Some(rho) => 2.0 * g_region * rho,
            None => ring_terms
                .iter()
                .map(|t| {
                    let g_ring = arc_half_angle(s, b_frame, t.radius);
                    t.coeff * arc_overlap(theta_region, g_region, theta_frame, g_ring)
                })
                .sum(),
        }
    };
    let integrand = |s: f64| gain_squared_unchecked(s, pathloss) * s * weight(s);

    // panel breakpoints: path-loss knees, region tangency, ring crossings
    let mut cuts: Vec<f64> = Vec::new();
    cuts.push(s_lo);
    cuts.push(s_hi);
    for c in [pathloss.d0, pathloss.d1] {
        if c > s_lo && c < s_hi {
            cuts.push(c);
        }
    }
    for t in &ring_terms {
        for c in [(b_frame - t.radius).abs(), b_frame + t.radius] {
            if c > s_lo && c < s_hi {
                cuts.push(c);
            }
        }
    }
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    cuts.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * s_hi);

    // rough pass to scale the absolute tolerance
    let mut rough = 0.0;
    for w in cuts.windows(2) {
        rough += gl15(&integrand, w[0], w[1]);
    }
    let scale = rough.abs().max(f64::MIN_POSITIVE);
    let n_panels = (cuts.len() - 1).max(1);
    let tol_panel = rel_tol * scale / n_panels as f64;

    let mut total = 0.0;
    let mut err_acc = 0.0;
    let mut failed = false;
    for w in cuts.windows(2) {
        match adaptive(&integrand, w[0], w[1], tol_panel, 0, &mut err_acc) {
            Ok(v) => total += v,
            Err(v) => {
                total += v;
                failed = true;
            }
        }
    }
    if failed && err_acc > rel_tol * total.abs().max(f64::MIN_POSITIVE) {
        return Err(TheoryError::QuadratureFailure {
            achieved: err_acc / total.abs().max(f64::MIN_POSITIVE),
        });
    }
    Ok(total.max(0.0))
}

/// Average cluster capacity per BS from the gain-ratio form:
/// `log2[(N0/P + I_D0) / (N0/P + I_D0 - I_Dj)]` evaluated at BS
/// position `x`.
pub fn theorem1_capacity(
    x: Point2D,
    regions: &RegionPair,
    density: &DensityProfile,
    pathloss: &ThreeSlopeParams,
    n0_over_p: f64,
) -> Result<Capacity, TheoryError> {
    let i0 = integrate_gain(
        x,
        &regions.network,
        density,
        &regions.network,
        pathloss,
        DEFAULT_REL_TOL,
    )?;
    let ij = integrate_gain(
        x,
        &regions.cluster,
        density,
        &regions.network,
        pathloss,
        DEFAULT_REL_TOL,
    )?;
    let num = n0_over_p + i0;
    let den = n0_over_p + (i0 - ij).max(0.0);
    if den <= num * 1e-12 {
        return Ok(Capacity::Infinite);
    }
    Ok(Capacity::Finite(libm::log2(num / den).max(0.0)))
}

/// Interference-limited, constant-density capacity; the user density
/// cancels in the gain ratio.
pub fn corollary1_capacity(
    x: Point2D,
    regions: &RegionPair,
    pathloss: &ThreeSlopeParams,
) -> Result<Capacity, TheoryError> {
    theorem1_capacity(
        x,
        regions,
        &DensityProfile::Constant { density: 1.0 },
        pathloss,
        0.0,
    )
}

/// `V_j(x) = 1 - I_Dj / I_D0` with unit constant density; lies in [0, 1]
/// and satisfies `corollary1_capacity(x) = -log2(V_j(x))`.
pub fn vj_of_x(
    x: Point2D,
    regions: &RegionPair,
    pathloss: &ThreeSlopeParams,
) -> Result<f64, TheoryError> {
    let unit = DensityProfile::Constant { density: 1.0 };
    let i0 = integrate_gain(
        x,
        &regions.network,
        &unit,
        &regions.network,
        pathloss,
        DEFAULT_REL_TOL,
    )?;
    let ij = integrate_gain(
        x,
        &regions.cluster,
        &unit,
        &regions.network,
        pathloss,
        DEFAULT_REL_TOL,
    )?;
    if i0 <= 0.0 {
        return Ok(1.0);
    }
    Ok((1.0 - ij / i0).clamp(0.0, 1.0))
}

/// Gain integral over a cluster disk of radius `r_j`, measured from a
/// point on its boundary; strictly increasing in `r_j` and bounded above
/// by `pi * d1^(-1.5) * (ln(d1/d0) + 7/6)`.
pub fn q_of_rj(r_j: f64, pathloss: &ThreeSlopeParams) -> Result<f64, TheoryError> {
    assert!(r_j > 0.0, "r_j must be positive");
    let region = Disk::new(Point2D::new(r_j, 0.0), r_j);
    integrate_gain(
        Point2D::ORIGIN,
        &region,
        &DensityProfile::Constant { density: 1.0 },
        &region,
        pathloss,
        DEFAULT_REL_TOL,
    )
}

/// The infinite-plane gain integral per unit density:
/// `2 pi d1^(-1.5) * (7/6 + ln(d1/d0))`.
pub fn infinite_plane_gain_integral(pathloss: &ThreeSlopeParams) -> f64 {
    2.0 * PI * libm::pow(pathloss.d1, -1.5)
        * (7.0 / 6.0 + libm::log(pathloss.d1 / pathloss.d0))
}

/// Analytic tail of the infinite-plane gain integral beyond radius `r`
/// (requires `r >= d1`): `2 pi r^(-1.5) / 1.5`.
pub fn gain_integral_tail(r: f64, pathloss: &ThreeSlopeParams) -> f64 {
    assert!(r >= pathloss.d1);
    2.0 * PI * libm::pow(r, -1.5) / 1.5
}

/// Closed-form upper bound on `min_x V_j(x)` (attained at the cluster
/// center in the infinite-network limit), piecewise in `r_j`.
pub fn vj_min_upper_bound(r_j: f64, pathloss: &ThreeSlopeParams) -> f64 {
    assert!(r_j > 0.0, "r_j must be positive");
    let d0 = pathloss.d0;
    let d1 = pathloss.d1;
    let denom = libm::log(d1 / d0) + 7.0 / 6.0;
    if r_j > d1 {
        (2.0 / 3.0) * libm::pow(r_j, -1.5) / (libm::pow(d1, -1.5) * denom)
    } else if r_j > d0 {
        (libm::log(d1 / r_j) + 2.0 / 3.0) / denom
    } else {
        1.0 - r_j * r_j / (2.0 * d0 * d0 * denom)
    }
}

/// Upper bound on `max_x V_j(x)`: `1 - q(r_j) / A` with
/// `A = 2 pi d1^(-1.5) (ln(d1/d0) + 7/6)`; lies in [1/2, 1).
pub fn vj_max_upper_bound(r_j: f64, pathloss: &ThreeSlopeParams) -> Result<f64, TheoryError> {
    let a = infinite_plane_gain_integral(pathloss);
    Ok(1.0 - q_of_rj(r_j, pathloss)? / a)
}

/// Lower bound on the largest attainable cluster capacity,
/// `-log2(vj_min_upper_bound)`.
pub fn cj_max_lower_bound(r_j: f64, pathloss: &ThreeSlopeParams) -> f64 {
    -libm::log2(vj_min_upper_bound(r_j, pathloss))
}

/// Lower bound on the smallest attainable cluster capacity,
/// `log2[A / (A - q(r_j))]`; at most 1 bit/s/Hz since `q <= A/2`.
pub fn cj_min_lower_bound(r_j: f64, pathloss: &ThreeSlopeParams) -> Result<f64, TheoryError> {
    let a = infinite_plane_gain_integral(pathloss);
    let q = q_of_rj(r_j, pathloss)?;
    Ok(libm::log2(a / (a - q)))
}
