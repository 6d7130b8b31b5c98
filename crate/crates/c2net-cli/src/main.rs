//! Command-line front end: scenario configuration plus the three
//! experiment drivers (architecture comparison, capacity-bound curve,
//! per-cluster heatmap data).

mod config;
mod runs;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{ConfigError, ScenarioConfig};
use runs::RunError;

#[derive(Parser)]
#[command(
    name = "c2net",
    about = "Capacity-centric clustering experiments for ultra-dense wireless networks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare network capacity per BS/user across architectures.
    Compare(Overrides),
    /// Tabulate capacity bounds and simulated capacity vs cluster radius.
    BoundsCurve {
        /// Comma-separated cluster radii in meters, e.g. 20,60,100.
        #[arg(long, value_name = "LIST")]
        rj_list: String,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Emit per-cluster center/size/capacity tables for plotting.
    Heatmap(Overrides),
}

/// Flag mirrors of the config-file keys; flags override file values.
#[derive(Args)]
struct Overrides {
    /// Flat key=value config file.
    #[arg(long, value_name = "FILE", overrides_with = "config")]
    config: Option<PathBuf>,
    #[arg(long, value_name = "METERS", overrides_with = "r0_m")]
    r0_m: Option<String>,
    #[arg(long, value_name = "PER_M2", overrides_with = "rho_u_per_m2")]
    rho_u_per_m2: Option<String>,
    #[arg(long, overrides_with = "beta")]
    beta: Option<String>,
    #[arg(long, value_name = "METERS", overrides_with = "r_th_m")]
    r_th_m: Option<String>,
    #[arg(long, value_name = "METERS", overrides_with = "d0_m")]
    d0_m: Option<String>,
    #[arg(long, value_name = "METERS", overrides_with = "d1_m")]
    d1_m: Option<String>,
    #[arg(long, overrides_with = "n0_over_p")]
    n0_over_p: Option<String>,
    /// constant | concentric
    #[arg(long, overrides_with = "bs_profile")]
    bs_profile: Option<String>,
    /// Comma-separated subset of c2,cellular,comp.
    #[arg(long, overrides_with = "architectures")]
    architectures: Option<String>,
    #[arg(long, value_name = "METERS", overrides_with = "r_comp_m")]
    r_comp_m: Option<String>,
    /// eigen | mc | theory
    #[arg(long, overrides_with = "method")]
    method: Option<String>,
    #[arg(long, overrides_with = "trials")]
    trials: Option<String>,
    /// Comma-separated seed list.
    #[arg(long, visible_alias = "seed", overrides_with = "seeds")]
    seeds: Option<String>,
    /// poisson | fixed-count
    #[arg(long, overrides_with = "sampling")]
    sampling: Option<String>,
    #[arg(long, value_name = "DIR", overrides_with = "output_dir")]
    output_dir: Option<String>,
    /// Comma-separated beta list for the bounds curve.
    #[arg(long, overrides_with = "betas")]
    betas: Option<String>,
}

impl Overrides {
    fn resolve(&self) -> Result<ScenarioConfig, RunError> {
        let mut cfg = ScenarioConfig::default();
        if let Some(path) = &self.config {
            let text = std::fs::read_to_string(path)
                .map_err(|e| RunError::Io(format!("{}: {e}", path.display())))?;
            config::apply_config_file(&mut cfg, &text).map_err(cfg_err)?;
        }
        let flags: [(&str, &Option<String>); 16] = [
            ("r0_m", &self.r0_m),
            ("rho_u_per_m2", &self.rho_u_per_m2),
            ("beta", &self.beta),
            ("r_th_m", &self.r_th_m),
            ("d0_m", &self.d0_m),
            ("d1_m", &self.d1_m),
            ("n0_over_p", &self.n0_over_p),
            ("bs_profile", &self.bs_profile),
            ("architectures", &self.architectures),
            ("r_comp_m", &self.r_comp_m),
            ("method", &self.method),
            ("trials", &self.trials),
            ("seeds", &self.seeds),
            ("sampling", &self.sampling),
            ("output_dir", &self.output_dir),
            ("betas", &self.betas),
        ];
        for (key, value) in flags {
            if let Some(v) = value {
                cfg.set(key, v).map_err(cfg_err)?;
            }
        }
        cfg.finalize().map_err(cfg_err)?;
        Ok(cfg)
    }
}

fn cfg_err(e: ConfigError) -> RunError {
    RunError::Config(e.to_string())
}

fn parse_rj_list(text: &str) -> Result<Vec<f64>, RunError> {
    let mut out = Vec::new();
    for tok in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        out.push(
            tok.parse::<f64>()
                .map_err(|_| RunError::Config(format!("invalid rj_list entry: {tok:?}")))?,
        );
    }
    Ok(out)
}

fn run() -> Result<(), RunError> {
    match Cli::parse().command {
        Command::Compare(ov) => runs::run_compare(&ov.resolve()?),
        Command::BoundsCurve { rj_list, overrides } => {
            let cfg = overrides.resolve()?;
            runs::run_bounds_curve(&cfg, &parse_rj_list(&rj_list)?)
        }
        Command::Heatmap(ov) => runs::run_heatmap(&ov.resolve()?),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
