//! End-to-end acceptance checks. Each test prints a single
//! `[criterion N] PASS/FAIL` line (visible with `--nocapture`) before
//! asserting, so the suite doubles as a checklist.

use c2net_core::architecture::{build_c2, build_cellular, build_comp};
use c2net_core::channel::{asymptotic_eigen_capacity, mc_capacity};
use c2net_core::geometry::{pack_disks, Disk, Point2D};
use c2net_core::metrics::{evaluate_architecture, CapacityMethod};
use c2net_core::pathloss::ThreeSlopeParams;
use c2net_core::sampling::{sample_node_set, CountMode, DensityProfile, NodeSet};
use c2net_core::theory::{
    cj_max_lower_bound, cj_min_lower_bound, corollary1_capacity, gain_integral_tail,
    infinite_plane_gain_integral, integrate_gain, q_of_rj, vj_max_upper_bound,
    vj_min_upper_bound, vj_of_x, RegionPair,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const R0: f64 = 1000.0;
const RHO_U: f64 = 6e-3;

fn pl() -> ThreeSlopeParams {
    ThreeSlopeParams::default_urban()
}

fn network() -> Disk {
    Disk::new(Point2D::ORIGIN, R0)
}

fn report(criterion: u32, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("[criterion {criterion}] {verdict} — {detail}");
    assert!(ok, "[criterion {criterion}] {detail}");
}

fn sample(beta: f64, bs_profile: &DensityProfile, seed: u64) -> NodeSet {
    let _ = beta;
    sample_node_set(
        &network(),
        bs_profile,
        &DensityProfile::Constant { density: RHO_U },
        CountMode::Poisson,
        seed,
    )
    .unwrap()
}

fn constant_bs(beta: f64) -> DensityProfile {
    DensityProfile::Constant {
        density: RHO_U / beta,
    }
}

#[test]
fn criterion_1_cluster_count() {
    let centers = pack_disks(R0, 175.0).unwrap();
    let ns = sample(3.0, &constant_bs(3.0), 1);
    let arch = build_c2(&ns, 175.0).unwrap();
    let ok = centers.len() == 24 && arch.cluster_count() == 24;
    report(
        1,
        ok,
        &format!(
            "r0=1000 r_th=175 packs {} disks, c2 yields {} clusters (want 24)",
            centers.len(),
            arch.cluster_count()
        ),
    );
}

#[test]
fn criterion_2_bound_bracketing() {
    let pl = pl();
    let radii = [50.0, 100.0, 150.0, 200.0];
    let betas = [1.0, 3.0];
    let seeds = [1u64, 2, 3];
    let mut total = 0usize;
    let mut inside_scaled = 0usize;
    let mut inside_strict = 0usize;
    for &beta in &betas {
        for &seed in &seeds {
            let ns = sample(beta, &constant_bs(beta), seed);
            for &rj in &radii {
                let bs_in: Vec<Point2D> = ns
                    .bs_positions
                    .iter()
                    .copied()
                    .filter(|p| p.norm() <= rj)
                    .collect();
                let (users_in, users_out): (Vec<Point2D>, Vec<Point2D>) = ns
                    .user_positions
                    .iter()
                    .copied()
                    .partition(|p| p.norm() <= rj);
                let c = asymptotic_eigen_capacity(&bs_in, &users_in, &users_out, &pl, 0.0)
                    .unwrap()
                    .finite()
                    .unwrap();
                let lo = cj_min_lower_bound(rj, &pl).unwrap();
                let hi = cj_max_lower_bound(rj, &pl);
                total += 1;
                if c >= lo * 0.95 && c <= hi * 1.05 {
                    inside_scaled += 1;
                }
                if c > lo && c < hi {
                    inside_strict += 1;
                }
            }
        }
    }
    let ok = inside_scaled == total && inside_strict as f64 >= 0.95 * total as f64;
    report(
        2,
        ok,
        &format!(
            "{inside_scaled}/{total} points within scaled bounds, {inside_strict}/{total} strictly between"
        ),
    );
}

#[test]
fn criterion_3_architecture_ordering() {
    let pl = pl();
    let beta = 2.0;
    let r_th = 100.0;
    let seeds = [1u64, 2, 3];
    let profiles: [(&str, DensityProfile, f64); 2] = [
        ("constant", constant_bs(beta), 1.10),
        (
            "concentric",
            DensityProfile::concentric_thirds(RHO_U / beta),
            1.05,
        ),
    ];
    let mut all_ok = true;
    let mut details = Vec::new();
    for (name, profile, comp_factor) in &profiles {
        let mut means = [0.0f64; 3]; // c2, cellular, comp
        for &seed in &seeds {
            let ns = sample(beta, profile, seed);
            let archs = [
                build_c2(&ns, r_th).unwrap(),
                build_cellular(&ns).unwrap(),
                build_comp(&ns, r_th, seed).unwrap(),
            ];
            for (i, arch) in archs.iter().enumerate() {
                let rep =
                    evaluate_architecture(arch, &pl, 0.0, CapacityMethod::Eigen).unwrap();
                means[i] += rep.c_bs / seeds.len() as f64;
            }
        }
        let (c2, cell, comp) = (means[0], means[1], means[2]);
        let ok = c2 >= 2.5 * cell && c2 >= comp_factor * comp;
        all_ok &= ok;
        details.push(format!(
            "{name}: c2={c2:.3} cellular={cell:.3} comp={comp:.3} (gain {:.2}x / {:.2}x)",
            c2 / cell,
            c2 / comp
        ));
    }
    report(3, all_ok, &details.join("; "));
}

#[test]
fn criterion_4_bs_distribution_independence() {
    let beta = 2.0;
    let constant = sample(beta, &constant_bs(beta), 5);
    let concentric = sample(
        beta,
        &DensityProfile::concentric_thirds(RHO_U / beta),
        5,
    );
    let a = build_c2(&constant, 175.0).unwrap();
    let b = build_c2(&concentric, 175.0).unwrap();
    let mut ok = a.cluster_count() == b.cluster_count();
    if ok {
        for (ca, cb) in a.clusters.iter().zip(b.clusters.iter()) {
            let (ra, rb) = (ca.region.unwrap(), cb.region.unwrap());
            ok &= ra.center == rb.center && ra.radius == rb.radius;
        }
    }
    report(
        4,
        ok,
        &format!(
            "c2 geometry under constant vs concentric BS profiles: {} vs {} clusters, centers/radii {}",
            a.cluster_count(),
            b.cluster_count(),
            if ok { "identical" } else { "differ" }
        ),
    );
}

#[test]
fn criterion_5_piecewise_continuity() {
    let pl = pl();
    let mut worst: f64 = 0.0;
    for knee in [pl.d0, pl.d1] {
        let below = knee * (1.0 - 1e-13);
        let above = knee * (1.0 + 1e-13);
        for f in [
            vj_min_upper_bound(below, &pl) - vj_min_upper_bound(above, &pl),
            cj_max_lower_bound(below, &pl) - cj_max_lower_bound(above, &pl),
        ] {
            let scale = vj_min_upper_bound(knee, &pl).abs().max(1e-300);
            worst = worst.max(f.abs() / scale);
        }
    }
    let ok = worst < 1e-9;
    report(
        5,
        ok,
        &format!("branch mismatch at d0/d1: {worst:.2e} relative (want < 1e-9)"),
    );
}

#[test]
fn criterion_6_quadrature_oracle() {
    let pl = pl();
    let r = 1e5;
    let disk = Disk::new(Point2D::ORIGIN, r);
    let numeric = integrate_gain(
        Point2D::ORIGIN,
        &disk,
        &DensityProfile::Constant { density: 1.0 },
        &disk,
        &pl,
        1e-6,
    )
    .unwrap()
        + gain_integral_tail(r, &pl);
    let exact = infinite_plane_gain_integral(&pl);
    let rel = (numeric - exact).abs() / exact;
    let ok = rel < 5e-3;
    report(
        6,
        ok,
        &format!("disk(1e5) + tail = {numeric:.6e} vs closed form {exact:.6e} ({rel:.2e} rel)"),
    );
}

/// Exponential integral E1(x), series for x <= 1 and a modified Lentz
/// continued fraction for x > 1.
fn exp_integral_e1(x: f64) -> f64 {
    assert!(x > 0.0);
    if x <= 1.0 {
        const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
        let mut sum = 0.0;
        let mut term = 1.0;
        for k in 1..60 {
            term *= -x / k as f64;
            sum += term / k as f64;
        }
        -EULER_GAMMA - x.ln() - sum
    } else {
        let tiny = 1e-300;
        let mut f = tiny;
        let mut c = f;
        let mut d = 0.0;
        for i in 0..200 {
            // continued fraction e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...)))
            let (a, b) = if i == 0 {
                (1.0, x + 1.0)
            } else {
                let k = i as f64;
                (-k * k, x + 2.0 * k + 1.0)
            };
            d = b + a * d;
            if d.abs() < tiny {
                d = tiny;
            }
            c = b + a / c;
            if c.abs() < tiny {
                c = tiny;
            }
            d = 1.0 / d;
            let delta = c * d;
            f *= delta;
            if (delta - 1.0).abs() < 1e-15 {
                break;
            }
        }
        (-x).exp() * f
    }
}

#[test]
fn criterion_7_monte_carlo_oracle() {
    let pl = pl();
    let bs = [Point2D::ORIGIN];
    let user = [Point2D::new(5.0, 0.0)]; // plateau distance: gain is exact
    let gain = pl.plateau();
    let mut all_ok = true;
    let mut details = Vec::new();
    for (i, rho) in [0.1f64, 1.0, 10.0].iter().enumerate() {
        let est = mc_capacity(&bs, &user, &[], &pl, rho / gain, 100_000, 11 + i as u64).unwrap();
        let exact = (1.0 / rho).exp() * exp_integral_e1(1.0 / rho) / 2f64.ln();
        let z = (est.mean - exact).abs() / est.std_error;
        all_ok &= z <= 3.0;
        details.push(format!("rho={rho}: mc={:.5} exact={exact:.5} ({z:.2} se)", est.mean));
    }
    report(7, all_ok, &details.join("; "));
}

#[test]
fn criterion_8_diagonal_convergence() {
    let pl = pl();
    let rj = 100.0;
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let draw = |a: f64, b: f64, rng: &mut ChaCha8Rng| {
        let u: f64 = rng.gen();
        let r = (a * a + u * (b * b - a * a)).sqrt();
        let t: f64 = rng.gen::<f64>() * std::f64::consts::TAU;
        Point2D::new(r * t.cos(), r * t.sin())
    };
    let bs: Vec<Point2D> = (0..64).map(|_| draw(0.0, rj, &mut rng)).collect();
    let users_in: Vec<Point2D> = (0..192).map(|_| draw(0.0, rj, &mut rng)).collect();
    let users_out: Vec<Point2D> = (0..600).map(|_| draw(rj, 300.0, &mut rng)).collect();

    let eigen = asymptotic_eigen_capacity(&bs, &users_in, &users_out, &pl, 0.0)
        .unwrap()
        .finite()
        .unwrap();
    let mc = mc_capacity(&bs, &users_in, &users_out, &pl, f64::INFINITY, 200, 3).unwrap();
    let rel = (mc.mean - eigen).abs() / eigen;
    let ok = rel < 0.15;
    report(
        8,
        ok,
        &format!("L=64 K=192(+600 ext): mc={:.4} eigen={eigen:.4} ({rel:.3} rel, want < 0.15)", mc.mean),
    );
}

#[test]
fn criterion_9_identity_and_monotonicity() {
    let pl = pl();
    let mut ok = true;
    let mut notes = Vec::new();

    // corollary1 == -log2(vj) on assorted geometries
    let mut worst_identity: f64 = 0.0;
    let geoms = [
        (Point2D::ORIGIN, 120.0, Point2D::new(30.0, 10.0)),
        (Point2D::new(400.0, -200.0), 90.0, Point2D::new(420.0, -180.0)),
        (Point2D::new(-650.0, 0.0), 150.0, Point2D::new(-700.0, 60.0)),
    ];
    for (center, rj, x) in geoms {
        let pair = RegionPair {
            network: network(),
            cluster: Disk::new(center, rj),
        };
        let c = corollary1_capacity(x, &pair, &pl).unwrap().finite().unwrap();
        let v = vj_of_x(x, &pair, &pl).unwrap();
        worst_identity = worst_identity.max((c + v.log2()).abs());
    }
    ok &= worst_identity < 1e-6;
    notes.push(format!("identity err {worst_identity:.1e}"));

    // monotone q and capacity bounds on an R_j grid
    let grid: Vec<f64> = (1..=60).map(|i| 5.0 * i as f64).collect();
    let mut monotone = true;
    for w in grid.windows(2) {
        monotone &= q_of_rj(w[1], &pl).unwrap() > q_of_rj(w[0], &pl).unwrap();
        monotone &= cj_max_lower_bound(w[1], &pl) > cj_max_lower_bound(w[0], &pl);
        monotone &=
            cj_min_lower_bound(w[1], &pl).unwrap() > cj_min_lower_bound(w[0], &pl).unwrap();
    }
    ok &= monotone;
    notes.push(format!("monotone {monotone}"));

    // vj_max in [1/2, 1)
    let mut vmax_ok = true;
    for &rj in &grid {
        let v = vj_max_upper_bound(rj, &pl).unwrap();
        vmax_ok &= (0.5..1.0).contains(&v);
    }
    ok &= vmax_ok;
    notes.push(format!("vj_max range {vmax_ok}"));

    // mean-value sandwich: the BS-averaged capacity of a cluster sits in
    // the sampled min/max range of the pointwise capacity
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut sandwich = true;
    for _ in 0..20 {
        let rj = 30.0 + rng.gen::<f64>() * 120.0;
        let c_dist = rng.gen::<f64>() * (R0 - rj);
        let ang = rng.gen::<f64>() * std::f64::consts::TAU;
        let center = Point2D::new(c_dist * ang.cos(), c_dist * ang.sin());
        let pair = RegionPair {
            network: network(),
            cluster: Disk::new(center, rj),
        };
        let sample_x = |rng: &mut ChaCha8Rng| {
            let rr = rj * rng.gen::<f64>().sqrt();
            let aa = rng.gen::<f64>() * std::f64::consts::TAU;
            Point2D::new(center.x + rr * aa.cos(), center.y + rr * aa.sin())
        };
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for _ in 0..25 {
            let c = corollary1_capacity(sample_x(&mut rng), &pair, &pl)
                .unwrap()
                .finite()
                .unwrap();
            lo = lo.min(c);
            hi = hi.max(c);
        }
        let mut avg = 0.0;
        for _ in 0..8 {
            avg += corollary1_capacity(sample_x(&mut rng), &pair, &pl)
                .unwrap()
                .finite()
                .unwrap();
        }
        avg /= 8.0;
        sandwich &= avg >= lo * 0.98 && avg <= hi * 1.02;
    }
    ok &= sandwich;
    notes.push(format!("sandwich {sandwich}"));

    report(9, ok, &notes.join(", "));
}
