//! Scenario configuration: flat key=value files, flag overrides, and
//! validation.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use c2net_core::sampling::{CountMode, DensityProfile};

#[derive(Debug)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BsProfileKind {
    Constant,
    Concentric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ArchKind {
    C2,
    Cellular,
    Comp,
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodKind {
    Eigen,
    Mc,
    Theory,
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SamplingKind {
    Poisson,
    FixedCount,
}

/// Fully resolved run configuration; serialized verbatim into
/// `summary.json` for auditability.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ScenarioConfig {
    pub r0_m: f64,
    pub rho_u_per_m2: f64,
    pub beta: f64,
    pub r_th_m: f64,
    pub d0_m: f64,
    pub d1_m: f64,
    pub n0_over_p: f64,
    pub bs_profile: BsProfileKind,
    pub architectures: Vec<ArchKind>,
    pub r_comp_m: f64,
    pub method: MethodKind,
    pub trials: usize,
    pub seeds: Vec<u64>,
    pub sampling: SamplingKind,
    pub output_dir: PathBuf,
    /// β values swept by the bounds-curve command (defaults to `[beta]`).
    pub betas: Vec<f64>,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig {
            r0_m: 1000.0,
            rho_u_per_m2: 6e-3,
            beta: 2.0,
            r_th_m: 100.0,
            d0_m: 10.0,
            d1_m: 50.0,
            n0_over_p: 0.0,
            bs_profile: BsProfileKind::Constant,
            architectures: vec![ArchKind::C2, ArchKind::Cellular, ArchKind::Comp],
            r_comp_m: f64::NAN, // resolved to r_th_m unless set
            method: MethodKind::Eigen,
            trials: 500,
            seeds: vec![1, 2, 3],
            sampling: SamplingKind::Poisson,
            output_dir: PathBuf::from("."),
            betas: Vec::new(), // resolved to [beta] unless set
        }
    }
}

impl ScenarioConfig {
    pub fn count_mode(&self) -> CountMode {
        match self.sampling {
            SamplingKind::Poisson => CountMode::Poisson,
            SamplingKind::FixedCount => CountMode::FixedMean,
        }
    }

    pub fn bs_density_profile(&self) -> DensityProfile {
        let base = self.rho_u_per_m2 / self.beta;
        match self.bs_profile {
            BsProfileKind::Constant => DensityProfile::Constant { density: base },
            BsProfileKind::Concentric => DensityProfile::concentric_thirds(base),
        }
    }

    pub fn user_density_profile(&self) -> DensityProfile {
        DensityProfile::Constant {
            density: self.rho_u_per_m2,
        }
    }

    /// Apply one `key = value` assignment from a file or flag.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        let bad = |k: &str, v: &str| ConfigError(format!("invalid value for {k}: {v:?}"));
        match key {
            "r0_m" => self.r0_m = parse_f64(key, value)?,
            "rho_u_per_m2" => self.rho_u_per_m2 = parse_f64(key, value)?,
            "beta" => self.beta = parse_f64(key, value)?,
            "r_th_m" => self.r_th_m = parse_f64(key, value)?,
            "d0_m" => self.d0_m = parse_f64(key, value)?,
            "d1_m" => self.d1_m = parse_f64(key, value)?,
            "n0_over_p" => self.n0_over_p = parse_f64(key, value)?,
            "r_comp_m" => self.r_comp_m = parse_f64(key, value)?,
            "trials" => {
                self.trials = value.trim().parse().map_err(|_| bad(key, value))?;
            }
            "bs_profile" => {
                self.bs_profile = match value.trim() {
                    "constant" => BsProfileKind::Constant,
                    "concentric" => BsProfileKind::Concentric,
                    _ => return Err(bad(key, value)),
                }
            }
            "architectures" => {
                let mut archs = Vec::new();
                for tok in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    archs.push(match tok {
                        "c2" => ArchKind::C2,
                        "cellular" => ArchKind::Cellular,
                        "comp" => ArchKind::Comp,
                        _ => return Err(bad(key, value)),
                    });
                }
                if archs.is_empty() {
                    return Err(bad(key, value));
                }
                self.architectures = archs;
            }
            "method" => {
                self.method = match value.trim() {
                    "eigen" => MethodKind::Eigen,
                    "mc" => MethodKind::Mc,
                    "theory" => MethodKind::Theory,
                    _ => return Err(bad(key, value)),
                }
            }
            "seeds" => {
                self.seeds = parse_list(key, value, |t| t.parse::<u64>().ok())?;
            }
            "sampling" => {
                self.sampling = match value.trim() {
                    "poisson" => SamplingKind::Poisson,
                    "fixed-count" => SamplingKind::FixedCount,
                    _ => return Err(bad(key, value)),
                }
            }
            "output_dir" => self.output_dir = PathBuf::from(value.trim()),
            "betas" => {
                self.betas = parse_list(key, value, |t| t.parse::<f64>().ok())?;
            }
            _ => return Err(ConfigError(format!("unknown config key: {key}"))),
        }
        Ok(())
    }

    /// Fill derived defaults and check invariants. Errors name the
    /// offending field.
    pub fn finalize(&mut self) -> Result<(), ConfigError> {
        if self.r_comp_m.is_nan() {
            self.r_comp_m = self.r_th_m;
        }
        if self.betas.is_empty() {
            self.betas = vec![self.beta];
        }
        let positive: [(&str, f64); 7] = [
            ("r0_m", self.r0_m),
            ("rho_u_per_m2", self.rho_u_per_m2),
            ("beta", self.beta),
            ("r_th_m", self.r_th_m),
            ("d0_m", self.d0_m),
            ("d1_m", self.d1_m),
            ("r_comp_m", self.r_comp_m),
        ];
        for (name, v) in positive {
            if !(v > 0.0) || !v.is_finite() {
                return Err(ConfigError(format!("{name} must be positive (got {v})")));
            }
        }
        if !(self.d0_m < self.d1_m && self.d1_m < self.r0_m) {
            return Err(ConfigError(format!(
                "require d0_m < d1_m < r0_m (got {} / {} / {})",
                self.d0_m, self.d1_m, self.r0_m
            )));
        }
        if self.r_th_m > self.r0_m {
            return Err(ConfigError("r_th_m must not exceed r0_m".into()));
        }
        if !(self.n0_over_p >= 0.0) || !self.n0_over_p.is_finite() {
            return Err(ConfigError(format!(
                "n0_over_p must be non-negative (got {})",
                self.n0_over_p
            )));
        }
        if self.trials == 0 {
            return Err(ConfigError("trials must be >= 1".into()));
        }
        if self.seeds.is_empty() {
            return Err(ConfigError("seeds must not be empty".into()));
        }
        for b in &self.betas {
            if !(*b > 0.0) || !b.is_finite() {
                return Err(ConfigError(format!("betas entries must be positive (got {b})")));
            }
        }
        Ok(())
    }
}

fn parse_f64(key: &str, value: &str) -> Result<f64, ConfigError> {
    value
        .trim()
        .parse::<f64>()
        .map_err(|_| ConfigError(format!("invalid value for {key}: {value:?}")))
}

fn parse_list<T>(
    key: &str,
    value: &str,
    parse: impl Fn(&str) -> Option<T>,
) -> Result<Vec<T>, ConfigError> {
    let mut out = Vec::new();
    for tok in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        out.push(parse(tok).ok_or_else(|| {
            ConfigError(format!("invalid value for {key}: {value:?}"))
        })?);
    }
    if out.is_empty() {
        return Err(ConfigError(format!("{key} must not be empty")));
    }
    Ok(out)
}

/// Parse a flat `key = value` file: one assignment per line, `#`
/// comments, blank lines ignored, unknown keys rejected.
pub fn apply_config_file(cfg: &mut ScenarioConfig, text: &str) -> Result<(), ConfigError> {
    let mut seen: BTreeMap<String, ()> = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            ConfigError(format!("line {}: expected key = value", lineno + 1))
        })?;
        let key = key.trim();
        if seen.insert(key.to_string(), ()).is_some() {
            return Err(ConfigError(format!("duplicate config key: {key}")));
        }
        cfg.set(key, value.trim())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        let mut cfg = ScenarioConfig::default();
        apply_config_file(
            &mut cfg,
            "r0_m = 800\nbeta=3 # comment\n\narchitectures = c2, cellular\nseeds = 4,5\n",
        )
        .unwrap();
        cfg.finalize().unwrap();
        assert_eq!(cfg.r0_m, 800.0);
        assert_eq!(cfg.beta, 3.0);
        assert_eq!(cfg.architectures, vec![ArchKind::C2, ArchKind::Cellular]);
        assert_eq!(cfg.seeds, vec![4, 5]);
        assert_eq!(cfg.r_comp_m, cfg.r_th_m);
        assert_eq!(cfg.betas, vec![3.0]);
    }

    #[test]
    fn unknown_key_rejected() {
        let mut cfg = ScenarioConfig::default();
        let err = apply_config_file(&mut cfg, "radius = 5\n").unwrap_err();
        assert!(err.0.contains("unknown config key: radius"));
    }

    #[test]
    fn validation_names_field() {
        let mut cfg = ScenarioConfig::default();
        cfg.set("beta", "0").unwrap();
        let err = cfg.finalize().unwrap_err();
        assert!(err.0.contains("beta"));
    }

    #[test]
    fn ordering_invariant_enforced() {
        let mut cfg = ScenarioConfig::default();
        cfg.set("d1_m", "5").unwrap();
        assert!(cfg.finalize().is_err());
    }
}
