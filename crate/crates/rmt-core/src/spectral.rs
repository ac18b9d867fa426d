//! Empirical spectral measures and the statistics built on them: moments,
//! Stieltjes transforms and their inversion, variance-scaling experiments,
//! edge rescaling, unfolded spacings, histograms, and KS distances.

use alloc::vec::Vec;

use num_complex::Complex64;

#[allow(unused_imports)]
use crate::float::FloatExt;
use crate::laws;
use crate::linalg::{Convention, SpectralSample};
use crate::quad;

/// Errors from spectral statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectralError {
    /// Operation requires a nonempty sample or sample set.
    EmptySample,
    /// Stieltjes transforms are defined off the real axis only.
    RealArgument,
    /// The η schedule must be strictly decreasing and positive.
    BadSchedule,
    /// Interval must satisfy a < b.
    BadInterval,
    /// The spacing window is empty or the fraction is out of (0, 1].
    BadWindow,
    /// A slope fit needs at least two sizes.
    TooFewSizes,
    /// Variance estimates need at least 30 repetitions.
    TooFewReps,
    /// Histogram request with no bins or zero width.
    ZeroWidth,
    /// The operation requires a specific normalization convention.
    WrongConvention,
}

impl core::fmt::Display for SpectralError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SpectralError::EmptySample => write!(f, "empty sample"),
            SpectralError::RealArgument => write!(f, "requires Im z != 0"),
            SpectralError::BadSchedule => {
                write!(f, "eta schedule must be positive and strictly decreasing")
            }
            SpectralError::BadInterval => write!(f, "interval must satisfy a < b"),
            SpectralError::BadWindow => write!(f, "spacing window is empty"),
            SpectralError::TooFewSizes => write!(f, "need at least two sizes for a slope"),
            SpectralError::TooFewReps => write!(f, "need at least 30 repetitions"),
            SpectralError::ZeroWidth => write!(f, "histogram needs positive width and bins"),
            SpectralError::WrongConvention => {
                write!(f, "sample normalization convention does not match the operation")
            }
        }
    }
}

impl core::error::Error for SpectralError {}

/// Sum with pairwise (cascade) association: deterministic for a fixed input
/// order, accurate to O(log n) rounding error, and independent of how the
/// caller distributed the work that produced the slice.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        2 => xs[0] + xs[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
        }
    }
}

/// Discrete probability measure: atoms of `(location, weight)`.
#[derive(Clone, Debug)]
pub struct EmpiricalMeasure {
    atoms: Vec<(f64, f64)>,
}

impl EmpiricalMeasure {
    /// Build from explicit atoms; weights must be nonnegative and sum to 1
    /// within 1e−12.
    pub fn from_atoms(atoms: Vec<(f64, f64)>) -> Result<Self, SpectralError> {
        if atoms.is_empty() {
            return Err(SpectralError::EmptySample);
        }
        if atoms.iter().any(|&(_, w)| !(w >= 0.0)) {
            return Err(SpectralError::EmptySample);
        }
        let total: f64 = pairwise_sum(&atoms.iter().map(|&(_, w)| w).collect::<Vec<_>>());
        if (total - 1.0).abs() > 1e-12 {
            return Err(SpectralError::EmptySample);
        }
        Ok(EmpiricalMeasure { atoms })
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }
}

/// The empirical measure `L_N = (1/N) Σ δ_{λ_i}` of a spectrum.
pub fn empirical_measure(s: &SpectralSample) -> Result<EmpiricalMeasure, SpectralError> {
    if s.n() == 0 {
        return Err(SpectralError::EmptySample);
    }
    let w = 1.0 / s.n() as f64;
    Ok(EmpiricalMeasure {
        atoms: s.eigenvalues().iter().map(|&x| (x, w)).collect(),
    })
}

/// `⟨μ, x^k⟩ = Σ w_i x_i^k`.
pub fn measure_moment(mu: &EmpiricalMeasure, k: u32) -> f64 {
    let terms: Vec<f64> = mu
        .atoms
        .iter()
        .map(|&(x, w)| w * x.powi(k as i32))
        .collect();
    pairwise_sum(&terms)
}

/// Stieltjes transform `g_μ(z) = Σ w_i/(x_i − z)` for `Im z ≠ 0`.
pub fn stieltjes_transform(
    mu: &EmpiricalMeasure,
    z: Complex64,
) -> Result<Complex64, SpectralError> {
    if z.im == 0.0 {
        return Err(SpectralError::RealArgument);
    }
    let mut re_parts = Vec::with_capacity(mu.atoms.len());
    let mut im_parts = Vec::with_capacity(mu.atoms.len());
    for &(x, w) in &mu.atoms {
        let v = w / (Complex64::new(x, 0.0) - z);
        re_parts.push(v.re);
        im_parts.push(v.im);
    }
    Ok(Complex64::new(pairwise_sum(&re_parts), pairwise_sum(&im_parts)))
}

/// Result of a Stieltjes inversion: the extrapolated mass and the raw
/// quadrature value at each η of the schedule.
#[derive(Clone, Debug)]
pub struct InversionReport {
    /// Extrapolated η → 0 estimate of μ[a, b].
    pub estimate: f64,
    /// The (η, ∫ (1/π) Im g(x+iη) dx) pairs actually evaluated.
    pub values: Vec<(f64, f64)>,
}

/// Recover `μ[a, b]` from a Stieltjes transform via
/// `μ[a,b] = lim_{η→0} ∫_a^b (1/π)·Im g(x + iη) dx`.
///
/// Each η is integrated by composite Simpson with at least 2048 panels per
/// unit length, increased to ~6/η panels per unit when η is small — the
/// integrand develops Lorentzian features of width η near atoms, and a rule
/// that does not resolve that scale produces garbage regardless of its
/// nominal order. The reported estimate extrapolates the last two schedule
/// entries linearly to η = 0 (the boundary error is O(η log 1/η), dominated
/// by the linear term away from edges).
pub fn stieltjes_invert(
    g: impl Fn(Complex64) -> Complex64,
    a: f64,
    b: f64,
    eta_schedule: &[f64],
) -> Result<InversionReport, SpectralError> {
    if !(a < b) {
        return Err(SpectralError::BadInterval);
    }
    if eta_schedule.is_empty() || eta_schedule.iter().any(|&e| !(e > 0.0)) {
        return Err(SpectralError::BadSchedule);
    }
    if eta_schedule.windows(2).any(|w| w[1] >= w[0]) {
        return Err(SpectralError::BadSchedule);
    }

    let mut values = Vec::with_capacity(eta_schedule.len());
    for &eta in eta_schedule {
        let per_unit = (6.0 / eta).max(2048.0);
        let mut panels = ((b - a) * per_unit).ceil() as usize;
        panels = panels.max(2);
        if panels % 2 == 1 {
            panels += 1;
        }
        let integral = quad::simpson(
            |x| g(Complex64::new(x, eta)).im / core::f64::consts::PI,
            a,
            b,
            panels,
        );
        values.push((eta, integral));
    }

    let estimate = if values.len() == 1 {
        values[0].1
    } else {
        // Linear extrapolation to η = 0 through the two smallest η.
        let (e1, v1) = values[values.len() - 2];
        let (e2, v2) = values[values.len() - 1];
        v2 + (v2 - v1) * e2 / (e1 - e2)
    };
    Ok(InversionReport { estimate, values })
}

/// One row of a variance-scaling experiment.
#[derive(Clone, Debug)]
pub struct VarianceRow {
    pub n: usize,
    pub mean: f64,
    pub variance: f64,
    pub reps: usize,
}

/// Result of [`moment_variance_experiment`].
#[derive(Clone, Debug)]
pub struct VarianceScan {
    pub rows: Vec<VarianceRow>,
    /// Least-squares slope of `ln variance` against `ln n`; `None` when some
    /// variance vanishes (e.g. the k = 0 moment, which is constant).
    pub slope: Option<f64>,
}

/// Runs `stat(n, rep)` for every size and repetition and tabulates the mean
/// and unbiased variance per size, plus the fitted log-log slope of the
/// variance.
///
/// The statistic callback receives the repetition index so it can derive a
/// per-rep RNG stream; results are then independent of evaluation order and
/// thread count by construction.
pub fn moment_variance_experiment(
    sizes: &[usize],
    reps: usize,
    mut stat: impl FnMut(usize, u64) -> f64,
) -> Result<VarianceScan, SpectralError> {
    if sizes.len() < 2 {
        return Err(SpectralError::TooFewSizes);
    }
    if reps < 30 {
        return Err(SpectralError::TooFewReps);
    }
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let values: Vec<f64> = (0..reps).map(|r| stat(n, r as u64)).collect();
        let mean = pairwise_sum(&values) / reps as f64;
        let sq: Vec<f64> = values.iter().map(|v| (v - mean) * (v - mean)).collect();
        let variance = pairwise_sum(&sq) / (reps - 1) as f64;
        rows.push(VarianceRow { n, mean, variance, reps });
    }

    let slope = if rows.iter().any(|r| r.variance <= 0.0) {
        None
    } else {
        // Ordinary least squares of ln var on ln n.
        let lx: Vec<f64> = rows.iter().map(|r| (r.n as f64).ln()).collect();
        let ly: Vec<f64> = rows.iter().map(|r| r.variance.ln()).collect();
        let mx = pairwise_sum(&lx) / lx.len() as f64;
        let my = pairwise_sum(&ly) / ly.len() as f64;
        let mut sxx = 0.0;
        let mut sxy = 0.0;
        for (x, y) in lx.iter().zip(&ly) {
            sxx += (x - mx) * (x - mx);
            sxy += (x - mx) * (y - my);
        }
        Some(sxy / sxx)
    };
    Ok(VarianceScan { rows, slope })
}

/// `|ḡ + 1/z + ḡ²/z|` where `ḡ` is the Monte-Carlo mean of the empirical
/// Stieltjes transforms: the defect in the semicircle self-consistency
/// equation `s(z) = −1/z − s(z)²/z`.
pub fn self_consistency_residual(
    measures: &[EmpiricalMeasure],
    z: Complex64,
) -> Result<f64, SpectralError> {
    if measures.is_empty() {
        return Err(SpectralError::EmptySample);
    }
    if z.im == 0.0 {
        return Err(SpectralError::RealArgument);
    }
    let mut res = Vec::with_capacity(measures.len());
    let mut ims = Vec::with_capacity(measures.len());
    for mu in measures {
        let g = stieltjes_transform(mu, z)?;
        res.push(g.re);
        ims.push(g.im);
    }
    let mean = Complex64::new(
        pairwise_sum(&res) / measures.len() as f64,
        pairwise_sum(&ims) / measures.len() as f64,
    );
    let defect = mean + 1.0 / z + mean * mean / z;
    Ok(defect.norm())
}

/// `(λ_max − 2√N)·N^{1/6}`: the Tracy–Widom rescaling of the top
/// eigenvalue. Requires the `UnitEntries` convention — applying it to an
/// already-rescaled spectrum would silently produce nonsense.
pub fn largest_eigenvalue_rescaled(s: &SpectralSample) -> Result<f64, SpectralError> {
    if s.n() == 0 {
        return Err(SpectralError::EmptySample);
    }
    if s.convention() != Convention::UnitEntries {
        return Err(SpectralError::WrongConvention);
    }
    let n = s.n() as f64;
    let lambda_max = *s.eigenvalues().last().expect("nonempty");
    Ok((lambda_max - 2.0 * n.sqrt()) * n.powf(1.0 / 6.0))
}

/// Unfolded nearest-neighbor spacings from the central part of the
/// spectrum.
///
/// `window` is the fraction of the spectrum retained, centered at the
/// median index (e.g. 0.5 keeps the middle half); edges are excluded because
/// the semicircle unfolding degenerates there. Each raw spacing is
/// multiplied by `N·ρ_sc(x_mid)` in the `[−2, 2]` normalization, so the mean
/// unfolded spacing is ≈ 1.
pub fn bulk_spacings(s: &SpectralSample, window: f64) -> Result<Vec<f64>, SpectralError> {
    if s.n() == 0 {
        return Err(SpectralError::EmptySample);
    }
    if !(window > 0.0 && window <= 1.0) {
        return Err(SpectralError::BadWindow);
    }
    let n = s.n();
    // Map eigenvalues to the [−2, 2] support normalization.
    let scale = match s.convention() {
        Convention::OneOverSqrtN => 1.0,
        Convention::UnitEntries => 1.0 / (n as f64).sqrt(),
        Convention::HalfWeight => (2.0 / n as f64).sqrt(),
    };
    let keep = ((n as f64) * window).floor() as usize;
    if keep < 2 {
        return Err(SpectralError::BadWindow);
    }
    let lo = (n - keep) / 2;
    let hi = lo + keep;
    let xs: Vec<f64> = s.eigenvalues()[lo..hi].iter().map(|&l| l * scale).collect();
    let mut out = Vec::with_capacity(xs.len() - 1);
    for w in xs.windows(2) {
        let mid = 0.5 * (w[0] + w[1]);
        out.push((w[1] - w[0]) * n as f64 * laws::semicircle_density(mid));
    }
    Ok(out)
}

/// Fixed-width histogram.
#[derive(Clone, Debug)]
pub struct Histogram {
    edges: Vec<f64>,
    counts: Vec<u64>,
    total: u64,
}

impl Histogram {
    pub fn edges(&self) -> &[f64] {
        &self.edges
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Per-bin density values: count/(total·width); integrates to exactly 1.
    pub fn densities(&self) -> Vec<f64> {
        self.edges
            .windows(2)
            .zip(&self.counts)
            .map(|(e, &c)| c as f64 / (self.total as f64 * (e[1] - e[0])))
            .collect()
    }
}

/// Bin `values` into `bins` equal-width bins on `[lo, hi]`; values outside
/// the range are clamped into the end bins so counts always sum to the
/// sample size.
pub fn histogram(values: &[f64], lo: f64, hi: f64, bins: usize) -> Result<Histogram, SpectralError> {
    if values.is_empty() {
        return Err(SpectralError::EmptySample);
    }
    if bins == 0 || !(hi > lo) {
        return Err(SpectralError::ZeroWidth);
    }
    let width = (hi - lo) / bins as f64;
    let edges: Vec<f64> = (0..=bins).map(|i| lo + i as f64 * width).collect();
    let mut counts = alloc::vec![0u64; bins];
    for &v in values {
        let raw = ((v - lo) / width).floor();
        let idx = if raw < 0.0 {
            0
        } else if raw >= bins as f64 {
            bins - 1
        } else {
            raw as usize
        };
        counts[idx] += 1;
    }
    Ok(Histogram { edges, counts, total: values.len() as u64 })
}

/// Kolmogorov–Smirnov distance between a sample and an exact CDF:
/// `sup_x |F_N(x) − F(x)|` computed exactly at the jump points.
pub fn ks_statistic(sorted_sample: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let n = sorted_sample.len() as f64;
    let mut worst = 0.0_f64;
    for (i, &x) in sorted_sample.iter().enumerate() {
        let f = cdf(x);
        let above = ((i + 1) as f64 / n - f).abs();
        let below = (f - i as f64 / n).abs();
        worst = worst.max(above).max(below);
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Convention, SpectralSample};
    use alloc::vec;

    fn sample(eigs: Vec<f64>) -> SpectralSample {
        SpectralSample::new(eigs, Convention::OneOverSqrtN, 2.0)
    }

    #[test]
    fn empirical_measure_basics() {
        let s = sample(vec![0.0]);
        let mu = empirical_measure(&s).unwrap();
        assert_eq!(mu.atoms(), &[(0.0, 1.0)]);

        let s = sample(vec![-1.0, 1.0]);
        let mu = empirical_measure(&s).unwrap();
        assert_eq!(mu.atoms(), &[(-1.0, 0.5), (1.0, 0.5)]);
        assert!((measure_moment(&mu, 0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn measure_moment_values() {
        let mu = EmpiricalMeasure::from_atoms(vec![(-1.0, 0.5), (1.0, 0.5)]).unwrap();
        assert_eq!(measure_moment(&mu, 3), 0.0);
        let mu = EmpiricalMeasure::from_atoms(vec![(2.0, 1.0)]).unwrap();
        assert_eq!(measure_moment(&mu, 4), 16.0);
    }

    #[test]
    fn from_atoms_validates() {
        assert!(EmpiricalMeasure::from_atoms(vec![]).is_err());
        assert!(EmpiricalMeasure::from_atoms(vec![(0.0, 0.7)]).is_err());
        assert!(EmpiricalMeasure::from_atoms(vec![(0.0, -0.5), (1.0, 1.5)]).is_err());
    }

    #[test]
    fn stieltjes_of_point_mass() {
        let mu = EmpiricalMeasure::from_atoms(vec![(0.0, 1.0)]).unwrap();
        let g = stieltjes_transform(&mu, Complex64::new(0.0, 1.0)).unwrap();
        assert!((g - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        let g = stieltjes_transform(&mu, Complex64::new(0.0, 2.0)).unwrap();
        assert!((g - Complex64::new(0.0, 0.5)).norm() < 1e-15);
        assert_eq!(
            stieltjes_transform(&mu, Complex64::new(1.0, 0.0)).unwrap_err(),
            SpectralError::RealArgument
        );
    }

    #[test]
    fn stieltjes_herglotz_for_any_measure() {
        let mu = EmpiricalMeasure::from_atoms(vec![(-2.0, 0.25), (0.3, 0.5), (1.9, 0.25)]).unwrap();
        for z in [Complex64::new(0.1, 0.5), Complex64::new(-3.0, 2.0), Complex64::new(1.0, 1e-6)] {
            let g = stieltjes_transform(&mu, z).unwrap();
            assert!(g.im > 0.0, "Im g must be positive in the upper half plane");
            let gc = stieltjes_transform(&mu, z.conj()).unwrap();
            assert!(gc.im < 0.0);
        }
    }

    #[test]
    fn inversion_of_point_mass() {
        let g = |z: Complex64| -1.0 / z;
        let schedule = [1e-2, 1e-3, 1e-4];
        let full = stieltjes_invert(g, -1.0, 1.0, &schedule).unwrap();
        assert!((full.estimate - 1.0).abs() < 1e-3, "mass {}", full.estimate);
        let none = stieltjes_invert(g, 1.0, 2.0, &schedule).unwrap();
        assert!(none.estimate.abs() < 1e-3, "mass {}", none.estimate);
        assert_eq!(full.values.len(), 3);
    }

    #[test]
    fn inversion_schedule_validation() {
        let g = |z: Complex64| -1.0 / z;
        assert_eq!(
            stieltjes_invert(g, 1.0, 1.0, &[1e-2]).unwrap_err(),
            SpectralError::BadInterval
        );
        assert_eq!(
            stieltjes_invert(g, 0.0, 1.0, &[]).unwrap_err(),
            SpectralError::BadSchedule
        );
        assert_eq!(
            stieltjes_invert(g, 0.0, 1.0, &[1e-3, 1e-2]).unwrap_err(),
            SpectralError::BadSchedule
        );
        assert_eq!(
            stieltjes_invert(g, 0.0, 1.0, &[1e-2, -1e-3]).unwrap_err(),
            SpectralError::BadSchedule
        );
    }

    #[test]
    fn inversion_recovers_semicircle_mass() {
        let g = |z| laws::semicircle_stieltjes(z).expect("Im z > 0 on the contour");
        let schedule = [1e-2, 1e-3, 1e-4];
        let report = stieltjes_invert(g, -1.0, 1.0, &schedule).unwrap();
        let expect = 1.0 / 3.0 + 3.0_f64.sqrt() / (2.0 * core::f64::consts::PI);
        assert!(
            (report.estimate - expect).abs() < 1e-3,
            "estimate {} vs {expect}",
            report.estimate
        );
    }

    #[test]
    fn self_consistency_exact_root_is_zero() {
        // The symmetric two-atom measure at ±√(2√2 − 2) has transform
        // 2i/(x² + 4) = i(√2 − 1) at z = 2i — exactly the semicircle
        // transform there — so the residual must vanish to rounding.
        let x = (2.0 * 2.0_f64.sqrt() - 2.0).sqrt();
        let mu = EmpiricalMeasure::from_atoms(vec![(-x, 0.5), (x, 0.5)]).unwrap();
        let z = Complex64::new(0.0, 2.0);
        let g = stieltjes_transform(&mu, z).unwrap();
        let exact = laws::semicircle_stieltjes(z).unwrap();
        assert!((g - exact).norm() < 1e-15);
        let residual = self_consistency_residual(&[mu], z).unwrap();
        assert!(residual < 1e-12, "residual {residual}");
        assert_eq!(
            self_consistency_residual(&[], z).unwrap_err(),
            SpectralError::EmptySample
        );
    }

    #[test]
    fn largest_eigenvalue_rescaling() {
        let n = 100usize;
        let mut eigs = vec![0.0; n];
        eigs[n - 1] = 2.0 * (n as f64).sqrt();
        let s = SpectralSample::new(eigs, Convention::UnitEntries, 2.0);
        assert!(largest_eigenvalue_rescaled(&s).unwrap().abs() < 1e-12);

        let t = SpectralSample::new(vec![1.0, 2.0], Convention::OneOverSqrtN, 2.0);
        assert_eq!(
            largest_eigenvalue_rescaled(&t).unwrap_err(),
            SpectralError::WrongConvention
        );
    }

    #[test]
    fn equally_spaced_spectrum_unfolds_to_equal_spacings() {
        // Synthetic spectrum confined to a window narrow enough that ρ is
        // flat to 1e−9: spacings all equal before and after unfolding.
        let n = 101;
        let eigs: Vec<f64> = (0..n).map(|i| (i as f64 - 50.0) * 1e-6).collect();
        let s = SpectralSample::new(eigs, Convention::OneOverSqrtN, 2.0);
        let sp = bulk_spacings(&s, 0.5).unwrap();
        let first = sp[0];
        for &v in &sp {
            assert!((v - first).abs() < 1e-6 * first, "{v} vs {first}");
        }
        assert_eq!(
            bulk_spacings(&s, 0.0).unwrap_err(),
            SpectralError::BadWindow
        );
        assert_eq!(
            bulk_spacings(&s, 0.001).unwrap_err(),
            SpectralError::BadWindow
        );
    }

    #[test]
    fn histogram_basics() {
        let h = histogram(&[0.5], 0.0, 1.0, 4).unwrap();
        assert_eq!(h.counts(), &[0, 0, 1, 0]);
        assert_eq!(h.total(), 1);

        let h = histogram(&[0.1, 0.9], 0.0, 1.0, 2).unwrap();
        assert_eq!(h.counts(), &[1, 1]);

        // Density integrates to 1.
        let h = histogram(&[0.1, 0.2, 0.3, 0.7, 1.4, -0.5], -1.0, 2.0, 7).unwrap();
        let width = 3.0 / 7.0;
        let integral: f64 = h.densities().iter().map(|d| d * width).sum();
        assert!((integral - 1.0).abs() < 1e-12);

        assert_eq!(histogram(&[], 0.0, 1.0, 2).unwrap_err(), SpectralError::EmptySample);
        assert_eq!(histogram(&[0.0], 1.0, 1.0, 2).unwrap_err(), SpectralError::ZeroWidth);
        assert_eq!(histogram(&[0.0], 0.0, 1.0, 0).unwrap_err(), SpectralError::ZeroWidth);
    }

    #[test]
    fn variance_experiment_zero_variance_statistic() {
        let scan = moment_variance_experiment(&[50, 100], 30, |_, _| 1.0).unwrap();
        assert_eq!(scan.rows.len(), 2);
        for row in &scan.rows {
            assert_eq!(row.variance, 0.0);
            assert!((row.mean - 1.0).abs() < 1e-15);
        }
        assert!(scan.slope.is_none());
    }

    #[test]
    fn variance_experiment_validation() {
        assert_eq!(
            moment_variance_experiment(&[100], 30, |_, _| 0.0).unwrap_err(),
            SpectralError::TooFewSizes
        );
        assert_eq!(
            moment_variance_experiment(&[50, 100], 10, |_, _| 0.0).unwrap_err(),
            SpectralError::TooFewReps
        );
    }

    #[test]
    fn variance_experiment_recovers_known_slope() {
        // Deterministic statistic with variance ∝ 1/n²: alternating ±1/n.
        let scan = moment_variance_experiment(&[100, 200, 400], 40, |n, rep| {
            let sign = if rep % 2 == 0 { 1.0 } else { -1.0 };
            sign / n as f64
        })
        .unwrap();
        let slope = scan.slope.unwrap();
        assert!((slope + 2.0).abs() < 1e-6, "slope {slope}");
    }

    #[test]
    fn ks_statistic_simple_cases() {
        // Perfect quantile sample against U[0,1]: KS = 1/(2N) shifted grid.
        let xs: Vec<f64> = (0..100).map(|i| (i as f64 + 0.5) / 100.0).collect();
        let ks = ks_statistic(&xs, |x| x.clamp(0.0, 1.0));
        assert!((ks - 0.005).abs() < 1e-12);

        // Degenerate sample far from the CDF.
        let ks = ks_statistic(&[10.0], |x| if x < 0.0 { 0.0 } else { 1.0 });
        assert!(ks <= 1.0 && ks >= 0.0);
    }

    #[test]
    fn pairwise_sum_matches_naive_on_small_input() {
        let xs: Vec<f64> = (0..1000).map(|i| (i as f64).sin()).collect();
        let naive: f64 = xs.iter().sum();
        assert!((pairwise_sum(&xs) - naive).abs() < 1e-9);
        assert_eq!(pairwise_sum(&[]), 0.0);
        assert_eq!(pairwise_sum(&[3.5]), 3.5);
    }
}
