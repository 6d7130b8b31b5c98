//! The three experiment drivers and their CSV/JSON outputs.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use c2net_core::architecture::{build_c2, build_cellular, build_comp, Architecture};
use c2net_core::channel::asymptotic_eigen_capacity;
use c2net_core::geometry::{Disk, Point2D};
use c2net_core::metrics::{evaluate_architecture, CapacityMethod, MetricsError};
use c2net_core::pathloss::ThreeSlopeParams;
use c2net_core::sampling::{sample_node_set, NodeSet};
use c2net_core::theory::{cj_max_lower_bound, cj_min_lower_bound};
use c2net_core::Capacity;

use crate::config::{ArchKind, MethodKind, ScenarioConfig};

/// Failure modes mapped to process exit codes.
#[derive(Debug)]
pub enum RunError {
    /// Exit 2: the configuration is invalid or inconsistent.
    Config(String),
    /// Exit 3: quadrature or linear-algebra failure.
    Numerical(String),
    /// Exit 4: filesystem failure.
    Io(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Config(_) => 2,
            RunError::Numerical(_) => 3,
            RunError::Io(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            RunError::Config(m) | RunError::Numerical(m) | RunError::Io(m) => m,
        }
    }
}

impl From<MetricsError> for RunError {
    fn from(e: MetricsError) -> Self {
        match e {
            // asking for the closed form on region-less clusters is a
            // configuration mistake, not a numerical failure
            MetricsError::NoRegionForClosedForm => RunError::Config(e.to_string()),
            _ => RunError::Numerical(e.to_string()),
        }
    }
}

fn io_err(e: std::io::Error, path: &Path) -> RunError {
    RunError::Io(format!("{}: {e}", path.display()))
}

fn pathloss(cfg: &ScenarioConfig) -> ThreeSlopeParams {
    ThreeSlopeParams::new(cfg.d0_m, cfg.d1_m)
}

fn network(cfg: &ScenarioConfig) -> Disk {
    Disk::new(Point2D::ORIGIN, cfg.r0_m)
}

fn sample(cfg: &ScenarioConfig, seed: u64) -> Result<NodeSet, RunError> {
    sample_node_set(
        &network(cfg),
        &cfg.bs_density_profile(),
        &cfg.user_density_profile(),
        cfg.count_mode(),
        seed,
    )
    .map_err(|e| RunError::Config(format!("sampling: {e}")))
}

fn build(cfg: &ScenarioConfig, arch: ArchKind, ns: &NodeSet, seed: u64) -> Result<Architecture, RunError> {
    match arch {
        ArchKind::C2 => build_c2(ns, cfg.r_th_m),
        ArchKind::Cellular => build_cellular(ns),
        ArchKind::Comp => build_comp(ns, cfg.r_comp_m, seed),
    }
    .map_err(|e| RunError::Config(format!("architecture: {e}")))
}

fn method(cfg: &ScenarioConfig, seed: u64) -> CapacityMethod {
    match cfg.method {
        MethodKind::Eigen => CapacityMethod::Eigen,
        MethodKind::Mc => CapacityMethod::MonteCarlo {
            trials: cfg.trials,
            seed,
        },
        MethodKind::Theory => CapacityMethod::Theory,
    }
}

/// Shortest round-trip decimal form; `inf` for the unbounded tag.
fn fmt_f64(v: f64) -> String {
    if v.is_infinite() {
        "inf".to_string()
    } else {
        format!("{v}")
    }
}

fn fmt_capacity(c: Capacity) -> String {
    match c {
        Capacity::Finite(v) => fmt_f64(v),
        Capacity::Infinite => "inf".to_string(),
    }
}

fn json_f64(v: f64) -> serde_json::Value {
    if v.is_finite() {
        serde_json::json!(v)
    } else {
        serde_json::Value::Null
    }
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<(), RunError> {
    fs::create_dir_all(dir).map_err(|e| io_err(e, dir))?;
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|e| io_err(e, &path))
}

fn write_summary(
    cfg: &ScenarioConfig,
    command: &str,
    results: serde_json::Value,
) -> Result<(), RunError> {
    let doc = serde_json::json!({
        "command": command,
        "config": cfg,
        "results": results,
    });
    let mut text = serde_json::to_string_pretty(&doc)
        .map_err(|e| RunError::Io(format!("summary.json: {e}")))?;
    text.push('\n');
    write_file(&cfg.output_dir, "summary.json", &text)
}

fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0).max(1.0);
    (mean, var.sqrt())
}

/// One row per (architecture, seed): `comparison.csv` plus a
/// `summary.json` with per-architecture mean/std over seeds.
pub fn run_compare(cfg: &ScenarioConfig) -> Result<(), RunError> {
    let pl = pathloss(cfg);
    let mut csv = String::from("arch,seed,cluster_count,c_bs_bits,c_u_bits,realized_beta\n");
    let mut per_arch: Vec<(ArchKind, Vec<f64>, Vec<f64>)> = cfg
        .architectures
        .iter()
        .map(|&a| (a, Vec::new(), Vec::new()))
        .collect();
    for &seed in &cfg.seeds {
        let ns = sample(cfg, seed)?;
        for (arch, c_bs_list, c_u_list) in per_arch.iter_mut() {
            let built = build(cfg, *arch, &ns, seed)?;
            let rep = evaluate_architecture(&built, &pl, cfg.n0_over_p, method(cfg, seed))?;
            let _ = writeln!(
                csv,
                "{},{seed},{},{},{},{}",
                arch_name(*arch),
                built.cluster_count(),
                fmt_f64(rep.c_bs),
                fmt_f64(rep.c_u),
                fmt_f64(rep.realized_beta)
            );
            c_bs_list.push(rep.c_bs);
            c_u_list.push(rep.c_u);
        }
    }
    write_file(&cfg.output_dir, "comparison.csv", &csv)?;

    let mut results = serde_json::Map::new();
    for (arch, c_bs_list, c_u_list) in &per_arch {
        let (mb, sb) = mean_std(c_bs_list);
        let (mu, su) = mean_std(c_u_list);
        results.insert(
            arch_name(*arch).to_string(),
            serde_json::json!({
                "c_bs_mean": json_f64(mb),
                "c_bs_std": json_f64(sb),
                "c_u_mean": json_f64(mu),
                "c_u_std": json_f64(su),
                "seeds": cfg.seeds.len(),
            }),
        );
    }
    write_summary(cfg, "compare", serde_json::Value::Object(results))
}

fn arch_name(a: ArchKind) -> &'static str {
    match a {
        ArchKind::C2 => "c2",
        ArchKind::Cellular => "cellular",
        ArchKind::Comp => "comp",
    }
}

/// Capacity bounds and simulated capacity versus cluster radius:
/// `bounds_curve.csv` with one row per (R_j, beta, seed).
pub fn run_bounds_curve(cfg: &ScenarioConfig, rj_list: &[f64]) -> Result<(), RunError> {
    if rj_list.is_empty() {
        return Err(RunError::Config("rj_list must not be empty".into()));
    }
    for &rj in rj_list {
        if !(rj > 0.0 && rj <= 2.0 * cfg.r0_m) {
            return Err(RunError::Config(format!(
                "rj_list values must lie in (0, 2*r0_m] (got {rj})"
            )));
        }
    }
    let pl = pathloss(cfg);
    let mut csv = String::from(
        "rj_m,beta,seed,cj_max_lower_bits,cj_min_lower_bits,bounds_mean_bits,c_eigen_bits\n",
    );
    let mut n_inside = 0usize;
    let mut n_total = 0usize;
    for &beta in &cfg.betas {
        let mut beta_cfg = cfg.clone();
        beta_cfg.beta = beta;
        for &seed in &cfg.seeds {
            let ns = sample(&beta_cfg, seed)?;
            for &rj in rj_list {
                let hi = cj_max_lower_bound(rj, &pl);
                let lo = cj_min_lower_bound(rj, &pl)
                    .map_err(|e| RunError::Numerical(e.to_string()))?;
                let mid = 0.5 * (lo + hi);
                // simulated capacity of a cluster disk centered in the
                // network, everything outside it interfering
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
                let c = if bs_in.is_empty() {
                    Capacity::Finite(0.0)
                } else {
                    asymptotic_eigen_capacity(&bs_in, &users_in, &users_out, &pl, cfg.n0_over_p)
                        .map_err(|e| RunError::Numerical(e.to_string()))?
                };
                if let Capacity::Finite(v) = c {
                    n_total += 1;
                    if v > lo && v < hi {
                        n_inside += 1;
                    }
                }
                let _ = writeln!(
                    csv,
                    "{},{},{seed},{},{},{},{}",
                    fmt_f64(rj),
                    fmt_f64(beta),
                    fmt_f64(hi),
                    fmt_f64(lo),
                    fmt_f64(mid),
                    fmt_capacity(c)
                );
            }
        }
    }
    write_file(&cfg.output_dir, "bounds_curve.csv", &csv)?;
    write_summary(
        cfg,
        "bounds-curve",
        serde_json::json!({
            "points": n_total,
            "points_between_bounds": n_inside,
            "rj_list_m": rj_list,
        }),
    )
}

/// Per-cluster geometry and capacity for external heatmap rendering:
/// one `heatmap_<arch>.csv` per architecture, first seed only.
pub fn run_heatmap(cfg: &ScenarioConfig) -> Result<(), RunError> {
    let pl = pathloss(cfg);
    let seed = cfg.seeds[0];
    let ns = sample(cfg, seed)?;
    let mut files = Vec::new();
    for &arch in &cfg.architectures {
        let built = build(cfg, arch, &ns, seed)?;
        let rep = evaluate_architecture(&built, &pl, cfg.n0_over_p, method(cfg, seed))?;
        let mut csv =
            String::from("cluster_id,center_x_m,center_y_m,radius_m,l_j,k_j,c_j_bits\n");
        for (cluster, cap) in built.clusters.iter().zip(rep.per_cluster.iter()) {
            let (cx, cy, radius) = match (arch, cluster.region) {
                (_, Some(region)) => (
                    region.center.x,
                    region.center.y,
                    fmt_f64(region.radius),
                ),
                (ArchKind::Cellular, None) => {
                    let bs = ns.bs_positions[cluster.bs_indices[0]];
                    (bs.x, bs.y, String::new())
                }
                (_, None) => {
                    // no disk region: report the BS centroid
                    let n = cluster.bs_indices.len().max(1) as f64;
                    let (sx, sy) = cluster
                        .bs_indices
                        .iter()
                        .fold((0.0, 0.0), |(ax, ay), &i| {
                            (ax + ns.bs_positions[i].x, ay + ns.bs_positions[i].y)
                        });
                    (sx / n, sy / n, String::new())
                }
            };
            let _ = writeln!(
                csv,
                "{},{},{},{radius},{},{},{}",
                cluster.id,
                fmt_f64(cx),
                fmt_f64(cy),
                cap.bs_count,
                cap.user_count,
                fmt_capacity(cap.capacity)
            );
        }
        let name = format!("heatmap_{}.csv", arch_name(arch));
        write_file(&cfg.output_dir, &name, &csv)?;
        files.push(serde_json::json!({
            "arch": arch_name(arch),
            "file": name,
            "clusters": built.cluster_count(),
        }));
    }
    write_summary(
        cfg,
        "heatmap",
        serde_json::json!({ "seed": seed, "outputs": files }),
    )
}
