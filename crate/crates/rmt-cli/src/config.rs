//! Flag/config-file resolution and the canonical config header.
//!
//! Every command accepts the same flag set (unused flags are simply
//! ignored by commands that don't need them), optionally back-filled from
//! a `key=value` config file — explicit flags always win. The resolved
//! settings a command actually used are serialized into a canonical JSON
//! object that is stamped into every output header, so a run can be
//! reproduced from its own output file.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::Args;

use crate::output::OutFormat;

/// Exit disciplines: usage/config problems exit 2, numerical failures 3.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Numerical(m) => m,
        }
    }
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn numerical(msg: impl std::fmt::Display) -> CliError {
    CliError::Numerical(msg.to_string())
}

/// The shared flag set. All values are optional at parse time; each
/// command validates and defaults what it uses.
#[derive(Args, Clone, Debug, Default)]
pub struct CommonArgs {
    /// Ensemble: wigner | goe | gue | wishart | beta
    #[arg(long)]
    pub ensemble: Option<String>,

    /// Matrix dimension (rows for wishart/lpp; CD kernel order for gap)
    #[arg(long)]
    pub n: Option<usize>,

    /// Column count for wishart matrices and lpp grids
    #[arg(long)]
    pub m_cols: Option<usize>,

    /// Dyson index β (beta ensemble and dyson command; default 2)
    #[arg(long)]
    pub beta: Option<f64>,

    /// Wigner entry law: gaussian | rademacher | uniform
    #[arg(long)]
    pub entry_law: Option<String>,

    /// RNG seed (default 0); fixed seed ⇒ byte-identical output
    #[arg(long)]
    pub seed: Option<u64>,

    /// Repetition count for Monte-Carlo commands
    #[arg(long)]
    pub reps: Option<usize>,

    /// Output path (stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Output format: csv | json (default csv)
    #[arg(long)]
    pub format: Option<String>,

    /// Kernel for gap probabilities: sine | airy | cd
    #[arg(long)]
    pub kernel: Option<String>,

    /// Interval endpoints a b
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
    pub interval: Option<Vec<f64>>,

    /// Quadrature node count (default 40); also the stieltjes grid size
    #[arg(long)]
    pub nodes: Option<usize>,

    /// Dyson simulation end time (default 10)
    #[arg(long)]
    pub t_end: Option<f64>,

    /// Dyson time step (default 1e-4)
    #[arg(long)]
    pub dt: Option<f64>,

    /// Geometric weight parameter, 0 < q < 1 (default 0.5)
    #[arg(long)]
    pub q: Option<f64>,

    /// Grid step for the tracy-widom table (default 0.05)
    #[arg(long, allow_negative_numbers = true)]
    pub step: Option<f64>,

    /// Largest gap count m for gap probability tables (default 8)
    #[arg(long)]
    pub m_max: Option<usize>,

    /// Read eigenvalues from a file instead of sampling (moments)
    #[arg(long)]
    pub input: Option<PathBuf>,
}

impl CommonArgs {
    /// Back-fill unset flags from `key=value` lines. Keys use the flag
    /// names (`-` and `_` interchangeable); `interval` takes two values
    /// separated by whitespace or a comma. Explicit flags always win.
    pub fn merge_config_file(&mut self, path: &PathBuf) -> Result<(), CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read config file {}: {e}", path.display())))?;
        let mut map = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| usage(format!("config line {} is not key=value", lineno + 1)))?;
            map.insert(key.trim().replace('-', "_"), value.trim().to_string());
        }

        fn parse<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, CliError> {
            v.parse()
                .map_err(|_| usage(format!("config value for {key} is invalid: {v}")))
        }

        for (key, value) in &map {
            match key.as_str() {
                "ensemble" => {
                    self.ensemble.get_or_insert_with(|| value.clone());
                }
                "entry_law" => {
                    self.entry_law.get_or_insert_with(|| value.clone());
                }
                "format" => {
                    self.format.get_or_insert_with(|| value.clone());
                }
                "kernel" => {
                    self.kernel.get_or_insert_with(|| value.clone());
                }
                "n" => {
                    self.n.get_or_insert(parse(key, value)?);
                }
                "m_cols" => {
                    self.m_cols.get_or_insert(parse(key, value)?);
                }
                "beta" => {
                    self.beta.get_or_insert(parse(key, value)?);
                }
                "seed" => {
                    self.seed.get_or_insert(parse(key, value)?);
                }
                "reps" => {
                    self.reps.get_or_insert(parse(key, value)?);
                }
                "nodes" => {
                    self.nodes.get_or_insert(parse(key, value)?);
                }
                "t_end" => {
                    self.t_end.get_or_insert(parse(key, value)?);
                }
                "dt" => {
                    self.dt.get_or_insert(parse(key, value)?);
                }
                "q" => {
                    self.q.get_or_insert(parse(key, value)?);
                }
                "step" => {
                    self.step.get_or_insert(parse(key, value)?);
                }
                "m_max" => {
                    self.m_max.get_or_insert(parse(key, value)?);
                }
                "out" => {
                    self.out.get_or_insert_with(|| PathBuf::from(value));
                }
                "input" => {
                    self.input.get_or_insert_with(|| PathBuf::from(value));
                }
                "interval" => {
                    if self.interval.is_none() {
                        let parts: Vec<f64> = value
                            .split(|c: char| c == ',' || c.is_whitespace())
                            .filter(|s| !s.is_empty())
                            .map(|s| parse("interval", s))
                            .collect::<Result<_, _>>()?;
                        if parts.len() != 2 {
                            return Err(usage("config interval needs exactly two values"));
                        }
                        self.interval = Some(parts);
                    }
                }
                other => return Err(usage(format!("unknown config key: {other}"))),
            }
        }
        Ok(())
    }

    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(0)
    }

    pub fn format(&self) -> Result<OutFormat, CliError> {
        match self.format.as_deref() {
            None | Some("csv") => Ok(OutFormat::Csv),
            Some("json") => Ok(OutFormat::Json),
            Some(other) => Err(usage(format!("unknown format: {other} (csv | json)"))),
        }
    }

    pub fn require_n(&self) -> Result<usize, CliError> {
        match self.n {
            Some(n) if n > 0 => Ok(n),
            Some(_) => Err(usage("--n must be positive")),
            None => Err(usage("--n is required")),
        }
    }

    pub fn interval_pair(&self) -> Result<Option<(f64, f64)>, CliError> {
        match &self.interval {
            None => Ok(None),
            Some(v) => {
                let (a, b) = (v[0], v[1]);
                if !(a.is_finite() && b.is_finite() && a < b) {
                    return Err(usage("--interval needs finite a < b"));
                }
                Ok(Some((a, b)))
            }
        }
    }
}

/// Canonical JSON builder for the output header: insertion-ordered fixed
/// keys, shortest-round-trip numbers, no whitespace.
pub struct ConfigJson {
    body: String,
}

impl ConfigJson {
    pub fn new(command: &str) -> Self {
        let mut body = String::from("{");
        let _ = write!(body, "\"command\":\"{command}\"");
        ConfigJson { body }
    }

    pub fn str_field(mut self, key: &str, value: &str) -> Self {
        let _ = write!(self.body, ",\"{key}\":\"{value}\"");
        self
    }

    pub fn uint_field(mut self, key: &str, value: u64) -> Self {
        let _ = write!(self.body, ",\"{key}\":{value}");
        self
    }

    pub fn float_field(mut self, key: &str, value: f64) -> Self {
        let _ = write!(self.body, ",\"{key}\":{value}");
        self
    }

    pub fn interval_field(mut self, key: &str, a: f64, b: f64) -> Self {
        let _ = write!(self.body, ",\"{key}\":[{a},{b}]");
        self
    }

    pub fn finish(mut self, format: OutFormat) -> String {
        let f = match format {
            OutFormat::Csv => "csv",
            OutFormat::Json => "json",
        };
        let _ = write!(self.body, ",\"format\":\"{f}\"}}");
        self.body
    }
}
