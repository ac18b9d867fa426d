//! The ten batch commands: each resolves its settings, runs the
//! experiment through `rmt-core`, and renders one table.
//!
//! Column schemas (CSV shown; JSON mirrors them as records):
//!
//! | command       | columns                              |
//! |---------------|--------------------------------------|
//! | sample        | `index,value`                        |
//! | histogram     | `bin_lo,bin_hi,count,density`        |
//! | moments       | `k,mean,variance,reps`               |
//! | stieltjes     | `re_z,im_z,re_g,im_g`                |
//! | variance-scan | `n,mean,variance,reps` + slope row   |
//! | tracy-widom   | `s,F2`                               |
//! | gap           | `m,A_m`                              |
//! | dyson         | `t,lambda_1,…,lambda_n`              |
//! | lpp           | `rep,rows,cols,q,G`                  |
//! | lis           | `rep,n,l`                            |
//!
//! Monte-Carlo commands derive one RNG stream per repetition from
//! `(seed, rep)`, so output is reproducible byte-for-byte regardless of
//! evaluation order.

use std::fs;
use std::path::Path;

use rmt_core::determinantal::{gap_probabilities, tracy_widom_cdf};
use rmt_core::dyson::{dyson_simulate, DysonInit};
use rmt_core::ensembles::{
    sample_beta_tridiagonal, sample_goe, sample_gue, sample_wigner, sample_wishart,
    EntryDistribution,
};
use rmt_core::linalg::{
    hermitian_eigenvalues, symmetric_eigenvalues, tridiagonal_eigenvalues,
};
use rmt_core::num_complex::Complex64;
use rmt_core::orthopoly::{AiryKernel, ChristoffelDarboux, SineKernel};
use rmt_core::rng::RngState;
use rmt_core::rsk::{lis_length, lpp_grid, sample_geometric_matrix, Permutation};
use rmt_core::spectral::{
    histogram, measure_moment, moment_variance_experiment, pairwise_sum,
    stieltjes_transform, EmpiricalMeasure,
};

use crate::config::{numerical, usage, CliError, CommonArgs, ConfigJson};
use crate::output::{emit, render, Cell, OutFormat, Table};

/// Fixed imaginary offset for the stieltjes command's evaluation line.
const STIELTJES_ETA: f64 = 0.05;

/// Size ladder scanned by variance-scan.
const VARIANCE_SIZES: [usize; 4] = [100, 200, 400, 800];

pub fn run(command: &str, args: &CommonArgs) -> Result<(), CliError> {
    match command {
        "sample" => cmd_sample(args),
        "histogram" => cmd_histogram(args),
        "moments" => cmd_moments(args),
        "stieltjes" => cmd_stieltjes(args),
        "variance-scan" => cmd_variance_scan(args),
        "tracy-widom" => cmd_tracy_widom(args),
        "gap" => cmd_gap(args),
        "dyson" => cmd_dyson(args),
        "lpp" => cmd_lpp(args),
        "lis" => cmd_lis(args),
        other => Err(usage(format!("unknown command: {other}"))),
    }
}

/// Parsed `--ensemble` / `--entry-law` pair.
enum EnsembleSpec {
    Wigner(EntryDistribution),
    Goe,
    Gue,
    Wishart,
    BetaTridiagonal,
}

impl EnsembleSpec {
    fn parse(args: &CommonArgs) -> Result<Self, CliError> {
        let name = args
            .ensemble
            .as_deref()
            .ok_or_else(|| usage("--ensemble is required"))?;
        match name {
            "wigner" => {
                let law = match args.entry_law.as_deref() {
                    None | Some("gaussian") => EntryDistribution::Gaussian,
                    Some("rademacher") => EntryDistribution::Rademacher,
                    Some("uniform") => EntryDistribution::Uniform,
                    Some(other) => {
                        return Err(usage(format!(
                            "unknown entry law: {other} (gaussian | rademacher | uniform)"
                        )))
                    }
                };
                Ok(EnsembleSpec::Wigner(law))
            }
            "goe" => Ok(EnsembleSpec::Goe),
            "gue" => Ok(EnsembleSpec::Gue),
            "wishart" => Ok(EnsembleSpec::Wishart),
            "beta" => Ok(EnsembleSpec::BetaTridiagonal),
            other => Err(usage(format!(
                "unknown ensemble: {other} (wigner | goe | gue | wishart | beta)"
            ))),
        }
    }

    fn label(&self) -> &'static str {
        match self {
            EnsembleSpec::Wigner(_) => "wigner",
            EnsembleSpec::Goe => "goe",
            EnsembleSpec::Gue => "gue",
            EnsembleSpec::Wishart => "wishart",
            EnsembleSpec::BetaTridiagonal => "beta",
        }
    }

    fn entry_law_label(&self) -> Option<&'static str> {
        match self {
            EnsembleSpec::Wigner(EntryDistribution::Gaussian) => Some("gaussian"),
            EnsembleSpec::Wigner(EntryDistribution::Rademacher) => Some("rademacher"),
            EnsembleSpec::Wigner(EntryDistribution::Uniform) => Some("uniform"),
            _ => None,
        }
    }

    /// One spectrum, sorted ascending.
    fn eigenvalues(
        &self,
        args: &CommonArgs,
        rng: &mut RngState,
    ) -> Result<Vec<f64>, CliError> {
        let n = args.require_n()?;
        let mut eigs = match self {
            EnsembleSpec::Wigner(law) => {
                let x = sample_wigner(n, *law, rng).map_err(usage_from)?;
                symmetric_eigenvalues(&x).map_err(numerical)?
            }
            EnsembleSpec::Goe => {
                let x = sample_goe(n, rng).map_err(usage_from)?;
                symmetric_eigenvalues(&x).map_err(numerical)?
            }
            EnsembleSpec::Gue => {
                let x = sample_gue(n, rng).map_err(usage_from)?;
                hermitian_eigenvalues(&x).map_err(numerical)?
            }
            EnsembleSpec::Wishart => {
                let m = match args.m_cols {
                    Some(m) if m > 0 => m,
                    Some(_) => return Err(usage("--m-cols must be positive")),
                    None => return Err(usage("--m-cols is required for wishart")),
                };
                let x = sample_wishart(n, m, rng).map_err(usage_from)?;
                symmetric_eigenvalues(&x).map_err(numerical)?
            }
            EnsembleSpec::BetaTridiagonal => {
                let beta = args.beta.unwrap_or(2.0);
                let t = sample_beta_tridiagonal(n, beta, rng).map_err(usage_from)?;
                tridiagonal_eigenvalues(&t).map_err(numerical)?
            }
        };
        eigs.sort_unstable_by(f64::total_cmp);
        Ok(eigs)
    }

    /// Config fields shared by every ensemble-driven command.
    fn stamp(&self, json: ConfigJson, args: &CommonArgs) -> ConfigJson {
        let mut json = json.str_field("ensemble", self.label());
        if let Some(n) = args.n {
            json = json.uint_field("n", n as u64);
        }
        if matches!(self, EnsembleSpec::Wishart) {
            if let Some(m) = args.m_cols {
                json = json.uint_field("m_cols", m as u64);
            }
        }
        if matches!(self, EnsembleSpec::BetaTridiagonal) {
            json = json.float_field("beta", args.beta.unwrap_or(2.0));
        }
        if let Some(law) = self.entry_law_label() {
            json = json.str_field("entry_law", law);
        }
        json
    }
}

fn usage_from(e: impl std::fmt::Display) -> CliError {
    usage(e.to_string())
}

fn cmd_sample(args: &CommonArgs) -> Result<(), CliError> {
    let spec = EnsembleSpec::parse(args)?;
    let format = args.format()?;
    let mut rng = RngState::new(args.seed());
    let eigs = spec.eigenvalues(args, &mut rng)?;
    let config = spec
        .stamp(ConfigJson::new("sample"), args)
        .uint_field("seed", args.seed())
        .finish(format);
    let mut table = Table::new(&["index", "value"]);
    for (i, &v) in eigs.iter().enumerate() {
        table.push(vec![Cell::Uint(i as u64 + 1), Cell::Float(v)]);
    }
    emit_table(args, format, &config, &table)
}

fn pooled_eigenvalues(
    spec: &EnsembleSpec,
    args: &CommonArgs,
    reps: usize,
) -> Result<Vec<f64>, CliError> {
    let mut all = Vec::new();
    for rep in 0..reps {
        let mut rng = RngState::with_stream(args.seed(), rep as u64);
        all.extend(spec.eigenvalues(args, &mut rng)?);
    }
    Ok(all)
}

fn cmd_histogram(args: &CommonArgs) -> Result<(), CliError> {
    let spec = EnsembleSpec::parse(args)?;
    let format = args.format()?;
    let reps = args.reps.unwrap_or(1).max(1);
    let values = pooled_eigenvalues(&spec, args, reps)?;
    let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !(hi > lo) {
        return Err(numerical("degenerate spectrum: all eigenvalues equal"));
    }
    // √count bins, clamped to a plot-friendly range.
    let bins = ((values.len() as f64).sqrt().ceil() as usize).clamp(10, 200);
    let h = histogram(&values, lo, hi, bins).map_err(numerical)?;
    let densities = h.densities();
    let config = spec
        .stamp(ConfigJson::new("histogram"), args)
        .uint_field("seed", args.seed())
        .uint_field("reps", reps as u64)
        .finish(format);
    let mut table = Table::new(&["bin_lo", "bin_hi", "count", "density"]);
    for (i, (&count, &density)) in h.counts().iter().zip(&densities).enumerate() {
        table.push(vec![
            Cell::Float(h.edges()[i]),
            Cell::Float(h.edges()[i + 1]),
            Cell::Uint(count),
            Cell::Float(density),
        ]);
    }
    emit_table(args, format, &config, &table)
}

/// Parse an eigenvalue file as written by `sample`: `#` comments and the
/// column header are skipped; the last comma-field of each row is the
/// value, so both bare lists and `index,value` files load.
fn read_eigenvalue_file(path: &Path) -> Result<Vec<f64>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let mut values = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let field = line.rsplit(',').next().expect("split is never empty").trim();
        match field.parse::<f64>() {
            Ok(v) => values.push(v),
            Err(_) if values.is_empty() => continue, // column header
            Err(_) => {
                return Err(usage(format!("unparseable eigenvalue line: {line}")));
            }
        }
    }
    if values.is_empty() {
        return Err(usage(format!("no eigenvalues found in {}", path.display())));
    }
    Ok(values)
}

fn uniform_measure(values: &[f64]) -> Result<EmpiricalMeasure, CliError> {
    let w = 1.0 / values.len() as f64;
    EmpiricalMeasure::from_atoms(values.iter().map(|&x| (x, w)).collect())
        .map_err(numerical)
}

fn cmd_moments(args: &CommonArgs) -> Result<(), CliError> {
    let format = args.format()?;
    const K_MAX: u32 = 8;
    let mut table = Table::new(&["k", "mean", "variance", "reps"]);

    let config = if let Some(input) = &args.input {
        // Single fixed spectrum from a file.
        let values = read_eigenvalue_file(input)?;
        let mu = uniform_measure(&values)?;
        for k in 1..=K_MAX {
            table.push(vec![
                Cell::Uint(k as u64),
                Cell::Float(measure_moment(&mu, k)),
                Cell::Float(0.0),
                Cell::Uint(1),
            ]);
        }
        ConfigJson::new("moments")
            .str_field("input", &input.display().to_string())
            .finish(format)
    } else {
        // Monte-Carlo over an ensemble: mean and unbiased variance of
        // ⟨L_N, x^k⟩ across reps.
        let spec = EnsembleSpec::parse(args)?;
        let reps = args.reps.unwrap_or(1).max(1);
        let mut per_k: Vec<Vec<f64>> = vec![Vec::with_capacity(reps); K_MAX as usize];
        for rep in 0..reps {
            let mut rng = RngState::with_stream(args.seed(), rep as u64);
            let eigs = spec.eigenvalues(args, &mut rng)?;
            let mu = uniform_measure(&eigs)?;
            for k in 1..=K_MAX {
                per_k[(k - 1) as usize].push(measure_moment(&mu, k));
            }
        }
        for k in 1..=K_MAX {
            let vals = &per_k[(k - 1) as usize];
            let mean = pairwise_sum(vals) / reps as f64;
            let variance = if reps > 1 {
                let sq: Vec<f64> = vals.iter().map(|v| (v - mean) * (v - mean)).collect();
                pairwise_sum(&sq) / (reps - 1) as f64
            } else {
                0.0
            };
            table.push(vec![
                Cell::Uint(k as u64),
                Cell::Float(mean),
                Cell::Float(variance),
                Cell::Uint(reps as u64),
            ]);
        }
        spec.stamp(ConfigJson::new("moments"), args)
            .uint_field("seed", args.seed())
            .uint_field("reps", reps as u64)
            .finish(format)
    };
    emit_table(args, format, &config, &table)
}

fn cmd_stieltjes(args: &CommonArgs) -> Result<(), CliError> {
    let spec = EnsembleSpec::parse(args)?;
    let format = args.format()?;
    let (a, b) = args.interval_pair()?.unwrap_or((-3.0, 3.0));
    let points = args.nodes.unwrap_or(121).max(2);
    let mut rng = RngState::new(args.seed());
    let eigs = spec.eigenvalues(args, &mut rng)?;
    let mu = uniform_measure(&eigs)?;
    let config = spec
        .stamp(ConfigJson::new("stieltjes"), args)
        .uint_field("seed", args.seed())
        .interval_field("interval", a, b)
        .uint_field("nodes", points as u64)
        .float_field("eta", STIELTJES_ETA)
        .finish(format);
    let mut table = Table::new(&["re_z", "im_z", "re_g", "im_g"]);
    for i in 0..points {
        let x = a + (b - a) * i as f64 / (points - 1) as f64;
        let z = Complex64::new(x, STIELTJES_ETA);
        let g = stieltjes_transform(&mu, z).map_err(numerical)?;
        table.push(vec![
            Cell::Float(z.re),
            Cell::Float(z.im),
            Cell::Float(g.re),
            Cell::Float(g.im),
        ]);
    }
    emit_table(args, format, &config, &table)
}

fn cmd_variance_scan(args: &CommonArgs) -> Result<(), CliError> {
    let spec = EnsembleSpec::parse(args)?;
    let format = args.format()?;
    let reps = args.reps.unwrap_or(100);
    let scan = moment_variance_experiment(&VARIANCE_SIZES, reps, |n, rep| {
        // One stream per (size, rep) pair keeps the scan reproducible
        // under any evaluation order.
        let mut rng = RngState::with_stream(args.seed(), (n as u64) << 32 | rep);
        let mut local = args.clone();
        local.n = Some(n);
        let eigs = spec
            .eigenvalues(&local, &mut rng)
            .expect("scan sizes are valid");
        let mu = uniform_measure(&eigs).expect("nonempty spectrum");
        measure_moment(&mu, 2)
    })
    .map_err(usage_from)?;
    let slope = scan
        .slope
        .ok_or_else(|| numerical("variance vanished; log-log fit undefined"))?;
    let config = spec
        .stamp(ConfigJson::new("variance-scan"), args)
        .uint_field("seed", args.seed())
        .uint_field("reps", reps as u64)
        .finish(format);
    let mut table = Table::new(&["n", "mean", "variance", "reps"]);
    for row in &scan.rows {
        table.push(vec![
            Cell::Uint(row.n as u64),
            Cell::Float(row.mean),
            Cell::Float(row.variance),
            Cell::Uint(row.reps as u64),
        ]);
    }
    // Trailing summary row: the fitted log-log slope of the variance.
    table.push(vec![
        Cell::Text("slope".into()),
        Cell::Float(slope),
        Cell::Text(String::new()),
        Cell::Text(String::new()),
    ]);
    emit_table(args, format, &config, &table)
}

fn cmd_tracy_widom(args: &CommonArgs) -> Result<(), CliError> {
    let format = args.format()?;
    let (a, b) = args.interval_pair()?.unwrap_or((-6.0, 3.0));
    if !(-10.0..=6.0).contains(&a) || !(-10.0..=6.0).contains(&b) {
        return Err(usage("tracy-widom interval must lie within [-10, 6]"));
    }
    let step = args.step.unwrap_or(0.05);
    if !(step > 0.0) {
        return Err(usage("--step must be positive"));
    }
    let m = args.nodes.unwrap_or(40);
    let config = ConfigJson::new("tracy-widom")
        .interval_field("interval", a, b)
        .float_field("step", step)
        .uint_field("nodes", m as u64)
        .finish(format);
    let mut table = Table::new(&["s", "F2"]);
    let count = ((b - a) / step).round() as usize;
    for i in 0..=count {
        let s = a + step * i as f64;
        if s > b + 1e-12 {
            break;
        }
        let f2 = tracy_widom_cdf(s, m).map_err(numerical)?;
        table.push(vec![Cell::Float(s), Cell::Float(f2)]);
    }
    emit_table(args, format, &config, &table)
}

fn cmd_gap(args: &CommonArgs) -> Result<(), CliError> {
    let format = args.format()?;
    let (lo, hi) = args
        .interval_pair()?
        .ok_or_else(|| usage("--interval a b is required"))?;
    let m = args.nodes.unwrap_or(40);
    let m_max = args.m_max.unwrap_or(8);
    let kernel_name = args
        .kernel
        .as_deref()
        .ok_or_else(|| usage("--kernel is required (sine | airy | cd)"))?;
    let mut config = ConfigJson::new("gap").str_field("kernel", kernel_name);
    let probs = match kernel_name {
        "sine" => gap_probabilities(&SineKernel, lo, hi, m, m_max),
        "airy" => {
            if !(-30.0..=30.0).contains(&lo) || !(-30.0..=30.0).contains(&hi) {
                return Err(usage("airy kernel interval must lie within [-30, 30]"));
            }
            gap_probabilities(&AiryKernel, lo, hi, m, m_max)
        }
        "cd" => {
            let order = args.require_n()?;
            config = config.uint_field("n", order as u64);
            gap_probabilities(&ChristoffelDarboux::new(order), lo, hi, m, m_max)
        }
        other => {
            return Err(usage(format!(
                "unknown kernel: {other} (sine | airy | cd)"
            )))
        }
    }
    .map_err(numerical)?;
    let config = config
        .interval_field("interval", lo, hi)
        .uint_field("nodes", m as u64)
        .uint_field("m_max", m_max as u64)
        .finish(format);
    let mut table = Table::new(&["m", "A_m"]);
    for (k, &p) in probs.iter().enumerate() {
        table.push(vec![Cell::Uint(k as u64), Cell::Float(p)]);
    }
    emit_table(args, format, &config, &table)
}

fn cmd_dyson(args: &CommonArgs) -> Result<(), CliError> {
    let format = args.format()?;
    let n = args.require_n()?;
    let beta = args.beta.unwrap_or(2.0);
    let t_end = args.t_end.unwrap_or(10.0);
    let dt = args.dt.unwrap_or(1e-4);
    let steps = (t_end / dt + 0.5) as usize;
    // Thin the trajectory to at most ~200 snapshot rows.
    let snapshot_every = (steps / 200).max(1);
    let mut rng = RngState::new(args.seed());
    let traj = dyson_simulate(
        n,
        beta,
        t_end,
        dt,
        snapshot_every,
        DysonInit::ZerosPerturbed,
        &mut rng,
    )
    .map_err(numerical)?;
    let config = ConfigJson::new("dyson")
        .uint_field("n", n as u64)
        .float_field("beta", beta)
        .float_field("t_end", t_end)
        .float_field("dt", dt)
        .uint_field("seed", args.seed())
        .finish(format);
    let mut columns = vec!["t".to_string()];
    columns.extend((1..=n).map(|i| format!("lambda_{i}")));
    let mut table = Table::with_columns(columns);
    for snap in &traj.snapshots {
        let mut row = Vec::with_capacity(n + 1);
        row.push(Cell::Float(snap.time()));
        row.extend(snap.lambdas().iter().map(|&l| Cell::Float(l)));
        table.push(row);
    }
    emit_table(args, format, &config, &table)
}

fn cmd_lpp(args: &CommonArgs) -> Result<(), CliError> {
    let format = args.format()?;
    let rows = args.require_n()?;
    let cols = args.m_cols.unwrap_or(rows);
    if cols == 0 {
        return Err(usage("--m-cols must be positive"));
    }
    let q = args.q.unwrap_or(0.5);
    if !(q > 0.0 && q < 1.0) {
        return Err(usage("--q must satisfy 0 < q < 1"));
    }
    let reps = args.reps.unwrap_or(1).max(1);
    let config = ConfigJson::new("lpp")
        .uint_field("n", rows as u64)
        .uint_field("m_cols", cols as u64)
        .float_field("q", q)
        .uint_field("seed", args.seed())
        .uint_field("reps", reps as u64)
        .finish(format);
    let mut table = Table::new(&["rep", "rows", "cols", "q", "G"]);
    for rep in 0..reps {
        let mut rng = RngState::with_stream(args.seed(), rep as u64);
        let w = sample_geometric_matrix(rows, cols, q, &mut rng).map_err(usage_from)?;
        table.push(vec![
            Cell::Uint(rep as u64 + 1),
            Cell::Uint(rows as u64),
            Cell::Uint(cols as u64),
            Cell::Float(q),
            Cell::Uint(lpp_grid(&w)),
        ]);
    }
    emit_table(args, format, &config, &table)
}

fn cmd_lis(args: &CommonArgs) -> Result<(), CliError> {
    let format = args.format()?;
    let n = args.require_n()?;
    let reps = args.reps.unwrap_or(1).max(1);
    let config = ConfigJson::new("lis")
        .uint_field("n", n as u64)
        .uint_field("seed", args.seed())
        .uint_field("reps", reps as u64)
        .finish(format);
    let mut table = Table::new(&["rep", "n", "l"]);
    for rep in 0..reps {
        let mut rng = RngState::with_stream(args.seed(), rep as u64);
        let p = Permutation::sample(n, &mut rng);
        table.push(vec![
            Cell::Uint(rep as u64 + 1),
            Cell::Uint(n as u64),
            Cell::Uint(lis_length(&p) as u64),
        ]);
    }
    emit_table(args, format, &config, &table)
}

fn emit_table(
    args: &CommonArgs,
    format: OutFormat,
    config: &str,
    table: &Table,
) -> Result<(), CliError> {
    let content = render(format, config, table);
    emit(args.out.as_deref(), &content)
        .map_err(|e| usage(format!("cannot write output: {e}")))
}
