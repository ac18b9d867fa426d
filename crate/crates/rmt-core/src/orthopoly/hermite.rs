//! Physicists' Hermite polynomials, the orthonormal Hermite functions
//! built from them, and two asymptotic regimes (bulk oscillation and the
//! steepest-descent cosine form) used to validate kernel scaling limits.
//!
//! Conventions: `H_n` satisfies `H_{n+1} = 2x H_n − 2n H_{n−1}` and is
//! orthogonal with respect to the weight `e^{−x²}`. The Hermite *function*
//! absorbs the square root of the weight,
//!
//! ```text
//! φ_n(x) = H_n(x) e^{−x²/2} / (π^{1/4} 2^{n/2} √(n!)),
//! ```
//!
//! so that `∫ φ_m φ_n dx = δ_{mn}` over the whole line.

#[allow(unused_imports)]
use crate::float::FloatExt;

use alloc::vec::Vec;

use super::OrthoError;

/// Physicists' Hermite polynomial `H_n(x)` by upward recurrence.
///
/// Values grow like `n!·2^n` near the classical edge; overflow to infinity
/// for large `n` is deliberate and left to the caller, who should prefer
/// [`hermite_function`] whenever a normalized quantity suffices.
pub fn hermite_poly(n: usize, x: f64) -> f64 {
    let mut prev = 1.0_f64; // H_0
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * x; // H_1
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Orthonormal Hermite function `φ_n(x)`.
///
/// Uses the normalized three-term recurrence
/// `φ_{k+1} = x √(2/(k+1)) φ_k − √(k/(k+1)) φ_{k−1}` seeded with
/// `φ_0 = π^{−1/4} e^{−x²/2}`, which is stable for all `n` and `x` of
/// interest (no factorials or large powers appear).
pub fn hermite_function(n: usize, x: f64) -> f64 {
    let mut seq = HermiteFunctionIter::new(x);
    seq.nth(n).expect("iterator is unbounded")
}

/// All of `φ_0(x), …, φ_{n_max}(x)` in one pass of the recurrence.
pub fn hermite_function_sequence(n_max: usize, x: f64) -> Vec<f64> {
    HermiteFunctionIter::new(x).take(n_max + 1).collect()
}

struct HermiteFunctionIter {
    x: f64,
    k: usize,
    prev: f64,
    cur: f64,
}

impl HermiteFunctionIter {
    fn new(x: f64) -> Self {
        // φ_0 = π^{−1/4} e^{−x²/2}
        let phi0 = (-0.5 * x * x).exp() / core::f64::consts::PI.powf(0.25);
        Self {
            x,
            k: 0,
            prev: 0.0,
            cur: phi0,
        }
    }
}

impl Iterator for HermiteFunctionIter {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        let out = self.cur;
        let kf = self.k as f64;
        let next = self.x * (2.0 / (kf + 1.0)).sqrt() * self.cur
            - (kf / (kf + 1.0)).sqrt() * self.prev;
        self.prev = self.cur;
        self.cur = next;
        self.k += 1;
        Some(out)
    }
}

/// Comparison of a rescaled Hermite function against its bulk limit.
#[derive(Clone, Copy, Debug)]
pub struct BulkAsymptotic {
    /// `(−1)^m m^{1/4} φ_{2m}(πξ/√(2m))` (or the odd-index analogue).
    pub scaled: f64,
    /// The limit `cos(πξ)/√π` (even) or `sin(πξ)/√π` (odd).
    pub limit: f64,
    /// `scaled − limit`.
    pub residual: f64,
}

/// Bulk (Plancherel–Rotach central) asymptotics of the Hermite functions:
/// for even index `n = 2m`,
///
/// ```text
/// (−1)^m m^{1/4} φ_{2m}(πξ/√(2n)) → cos(πξ)/√π   as m → ∞,
/// ```
///
/// and with `odd = true` the analogous statement for index `n = 2m + 1`
/// with `sin(πξ)/√π` on the right. The argument scale is `√(2n)` in the
/// *full* index `n` — the same scale as the bulk kernel limit; writing
/// `√(2m)` there (a factor `√2` in the argument) sends the rescaled
/// function to `cos(√2·πξ)/√π` instead and nothing converges to the stated
/// limit. The residual decays like `O(1/m)` at fixed `ξ`, which the
/// callers' ladder tests verify.
pub fn hermite_bulk_asymptotic(m: usize, xi: f64, odd: bool) -> BulkAsymptotic {
    let mf = m as f64;
    let index = 2 * m + usize::from(odd);
    let x = core::f64::consts::PI * xi / (2.0 * index as f64).sqrt();
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let scaled = sign * mf.powf(0.25) * hermite_function(index, x);
    let arg = core::f64::consts::PI * xi;
    let limit = if odd { arg.sin() } else { arg.cos() } / core::f64::consts::PI.sqrt();
    BulkAsymptotic {
        scaled,
        limit,
        residual: scaled - limit,
    }
}

/// Steepest-descent (oscillatory-region) approximation of `H_n(√(2n)·y)`.
#[derive(Clone, Copy, Debug)]
pub struct SteepestDescent {
    /// Natural log of the cosine-form amplitude
    /// `√2 (2n)^{n/2} e^{−n/2} e^{ny²} (1−y²)^{−1/4}`.
    pub ln_amplitude: f64,
    /// Phase `n(y√(1−y²) − arccos y) + π/4 − (arccos y)/2`.
    pub phase: f64,
}

impl SteepestDescent {
    /// `amplitude · cos(phase)`; overflows to `±∞` once `ln_amplitude`
    /// exceeds ~709, which is why the log form is the primary output.
    pub fn value(&self) -> f64 {
        self.ln_amplitude.exp() * self.phase.cos()
    }
}

/// Saddle-point approximation to `H_n(√(2n)·y)` inside the oscillatory
/// region `|y| < 0.9`, valid for `n ≥ 10`:
///
/// ```text
/// H_n(√(2n) y) ≈ c_n(y) e^{ny²} cos(n(y√(1−y²) − θ_c) + π/4 − θ_c/2),
/// c_n(y) = √2 (2n)^{n/2} e^{−n/2} (1−y²)^{−1/4},   θ_c = arccos y.
/// ```
///
/// The constant and phase offset follow from evaluating the Gaussian
/// integral at the two conjugate saddles `e^{±iθ_c}` of the generating
/// integral; the overall sign is pinned by matching `H_n(0)` parity
/// (`phase = −nπ/2` at `y = 0` reproduces the sign of `(−1)^{n/2}`).
/// Near `|y| = 1` the two saddles coalesce and the form degrades into the
/// Airy regime, hence the hard `0.9` cutoff.
pub fn hermite_steepest_descent(n: usize, y: f64) -> Result<SteepestDescent, OrthoError> {
    if n < 10 {
        return Err(OrthoError::SteepestDescentIndex);
    }
    if !(y.abs() < 0.9) {
        return Err(OrthoError::SteepestDescentRegion);
    }
    let nf = n as f64;
    let theta_c = y.acos();
    let ln_amplitude = 0.5 * core::f64::consts::LN_2 + 0.5 * nf * (2.0 * nf).ln() - 0.5 * nf
        + nf * y * y
        - 0.25 * (1.0 - y * y).ln();
    let phase = nf * (y * (1.0 - y * y).sqrt() - theta_c) + core::f64::consts::FRAC_PI_4
        - 0.5 * theta_c;
    Ok(SteepestDescent {
        ln_amplitude,
        phase,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::gauss_legendre_on;

    // (n, x, φ_n(x)) from 40-digit arithmetic.
    const HERMITE_FN_REF: &[(usize, f64, f64)] = &[
        (0, 0.0, 0.75112554446494248),
        (1, 0.7, 0.58200058556771563),
        (5, 1.3, -0.39939146281375077),
        (10, 0.3, -0.072726725500382949),
        (25, 2.0, 0.30444393686297934),
        (60, 0.5, 0.17026626299339075),
        (100, 14.142135623730951, 0.31010980202443222),
        (100, 13.8, 0.43112644942459456),
        (160, 17.0, -0.29802385574427884),
    ];

    #[test]
    fn low_order_polynomials_match_closed_forms() {
        for &x in &[-2.0, -0.3, 0.0, 0.5, 1.7] {
            assert_eq!(hermite_poly(0, x), 1.0);
            assert_eq!(hermite_poly(1, x), 2.0 * x);
            assert!((hermite_poly(2, x) - (4.0 * x * x - 2.0)).abs() < 1e-12);
            assert!((hermite_poly(3, x) - (8.0 * x * x * x - 12.0 * x)).abs() < 1e-12);
            let h4 = 16.0 * x.powi(4) - 48.0 * x * x + 12.0;
            assert!((hermite_poly(4, x) - h4).abs() < 1e-10);
        }
    }

    #[test]
    fn generating_function_oracle() {
        // e^{2xt − t²} = Σ_k H_k(x) t^k / k!; with |t| ≤ 0.3 the k ≤ 12
        // partial sum is accurate to far below the 1e−8 comparison level.
        for &x in &[-1.0, -0.4, 0.0, 0.55, 1.0] {
            for &t in &[-0.3, -0.1, 0.2, 0.3] {
                let lhs = (2.0 * x * t - t * t).exp();
                let mut sum = 0.0;
                let mut t_pow = 1.0;
                let mut factorial = 1.0;
                for k in 0..=12 {
                    sum += hermite_poly(k, x) * t_pow / factorial;
                    t_pow *= t;
                    factorial *= (k + 1) as f64;
                }
                assert!(
                    (lhs - sum).abs() < 1e-8,
                    "generating function mismatch at x = {x}, t = {t}"
                );
            }
        }
    }

    #[test]
    fn function_matches_frozen_reference() {
        for &(n, x, expected) in HERMITE_FN_REF {
            let got = hermite_function(n, x);
            assert!(
                (got - expected).abs() < 1e-12 * expected.abs().max(1.0),
                "φ_{n}({x}) = {got}, want {expected}"
            );
        }
    }

    #[test]
    fn function_agrees_with_polynomial_at_small_index() {
        // φ_n = H_n e^{−x²/2} / (π^{1/4} 2^{n/2} √(n!)) for n ≤ 12.
        for n in 0..=12usize {
            for &x in &[-1.5, 0.2, 0.9, 2.4] {
                let mut norm = core::f64::consts::PI.powf(0.25);
                for k in 1..=n {
                    norm *= (2.0 * k as f64).sqrt();
                }
                let direct = hermite_poly(n, x) * (-0.5 * x * x).exp() / norm;
                let recur = hermite_function(n, x);
                assert!(
                    (direct - recur).abs() < 1e-10 * direct.abs().max(1.0),
                    "n = {n}, x = {x}: {direct} vs {recur}"
                );
            }
        }
    }

    #[test]
    fn functions_are_orthonormal() {
        // 240-node Gauss–Legendre on [−15, 15] integrates φ_m φ_n for
        // m, n ≤ 30 essentially exactly: the integrand is negligible
        // (~e^{−112}) beyond |x| = 15, and the narrower interval keeps the
        // central node spacing well below the oscillation wavelength.
        let (nodes, weights) = gauss_legendre_on(-15.0, 15.0, 240);
        let max_n = 30usize;
        let table: Vec<Vec<f64>> = nodes
            .iter()
            .map(|&x| hermite_function_sequence(max_n, x))
            .collect();
        for m in (0..=max_n).step_by(5) {
            for n in (m..=max_n).step_by(5) {
                let mut acc = 0.0;
                for (i, &w) in weights.iter().enumerate() {
                    acc += w * table[i][m] * table[i][n];
                }
                let expected = if m == n { 1.0 } else { 0.0 };
                assert!(
                    (acc - expected).abs() < 1e-10,
                    "⟨φ_{m}, φ_{n}⟩ = {acc}"
                );
            }
        }
    }

    #[test]
    fn sequence_matches_single_evaluations() {
        let xs = hermite_function_sequence(40, 1.234);
        assert_eq!(xs.len(), 41);
        for (n, &v) in xs.iter().enumerate().step_by(7) {
            assert_eq!(v, hermite_function(n, 1.234));
        }
    }

    #[test]
    fn bulk_asymptotic_even_and_odd_converge() {
        // Fixed ξ = 0.35: residual should fall like 1/m along the ladder.
        let ladder = [20usize, 40, 80, 160];
        let mut prev_even = f64::INFINITY;
        let mut prev_odd = f64::INFINITY;
        for &m in &ladder {
            let even = hermite_bulk_asymptotic(m, 0.35, false);
            let odd = hermite_bulk_asymptotic(m, 0.35, true);
            assert!(even.residual.abs() < prev_even);
            assert!(odd.residual.abs() < prev_odd);
            prev_even = even.residual.abs();
            prev_odd = odd.residual.abs();
        }
        // And the final rung is genuinely close to the limit.
        assert!(prev_even < 5e-3);
        assert!(prev_odd < 5e-3);
    }

    #[test]
    fn bulk_asymptotic_odd_at_half() {
        // sin(π/2)/√π is the odd-index limit at ξ = 1/2.
        let report = hermite_bulk_asymptotic(120, 0.5, true);
        let target = 1.0 / core::f64::consts::PI.sqrt();
        assert!((report.limit - target).abs() < 1e-15);
        assert!(report.residual.abs() < 2e-3, "residual {}", report.residual);
    }

    #[test]
    fn steepest_descent_matches_exact_values() {
        // Compare in log scale: ln|H_n(√(2n) y)| via the stable normalized
        // recurrence plus exact ln(n!) accumulation. All four points have
        // |cos(phase)| > 0.39, safely away from zero crossings.
        for &(n, y) in &[(50usize, 0.25f64), (100, 0.3), (100, 0.6), (200, 0.42)] {
            let sd = hermite_steepest_descent(n, y).unwrap();
            let x = (2.0 * n as f64).sqrt() * y;
            let mut ln_norm = 0.25 * core::f64::consts::PI.ln();
            for k in 1..=n {
                ln_norm += 0.5 * (2.0 * k as f64).ln();
            }
            let phi = hermite_function(n, x);
            let ln_exact = phi.abs().ln() + ln_norm + 0.5 * x * x;
            let ln_approx = sd.ln_amplitude + sd.phase.cos().abs().ln();
            // Amplitude check is only meaningful away from zeros of the
            // cosine; all four points sit at |cos| > 0.2.
            assert!(sd.phase.cos().abs() > 0.2, "test point too near a zero");
            assert!(
                (ln_exact - ln_approx).abs() < 0.05,
                "n = {n}, y = {y}: ln exact {ln_exact} vs approx {ln_approx}"
            );
            // Sign agreement.
            let exact_sign = phi.signum();
            let approx_sign = sd.phase.cos().signum();
            assert_eq!(exact_sign, approx_sign, "sign flip at n = {n}, y = {y}");
        }
    }

    #[test]
    fn steepest_descent_amplitude_within_five_percent() {
        // Relative amplitude error at n = 100, y = 0.3, measured at a point
        // where the cosine is near ±1 (so the value *is* the amplitude).
        let n = 100usize;
        let y = 0.3;
        let sd = hermite_steepest_descent(n, y).unwrap();
        let x = (2.0 * n as f64).sqrt() * y;
        let mut ln_norm = 0.25 * core::f64::consts::PI.ln();
        for k in 1..=n {
            ln_norm += 0.5 * (2.0 * k as f64).ln();
        }
        let exact = hermite_function(n, x) * (ln_norm + 0.5 * x * x).exp();
        let approx = sd.value();
        assert!(
            ((approx - exact) / exact).abs() < 0.05,
            "relative error {:.3}",
            ((approx - exact) / exact).abs()
        );
    }

    #[test]
    fn steepest_descent_zero_crossings_interlace() {
        // Between consecutive sign changes of the predicted cosine the true
        // Hermite function must change sign too (n = 60, y ∈ [0.1, 0.5]).
        let n = 60usize;
        let scale = (2.0 * n as f64).sqrt();
        let mut predicted_zeros = Vec::new();
        let samples = 4000;
        let mut prev = hermite_steepest_descent(n, 0.1).unwrap().phase.cos();
        for i in 1..=samples {
            let y = 0.1 + 0.4 * i as f64 / samples as f64;
            let c = hermite_steepest_descent(n, y).unwrap().phase.cos();
            if prev.signum() != c.signum() {
                predicted_zeros.push(y);
            }
            prev = c;
        }
        assert!(
            predicted_zeros.len() >= 5,
            "expected several oscillations, got {}",
            predicted_zeros.len()
        );
        // Each predicted zero should be within a half-oscillation of a true
        // sign change of φ_n.
        for window in predicted_zeros.windows(2) {
            let (a, b) = (window[0], window[1]);
            let fa = hermite_function(n, scale * a);
            let fb = hermite_function(n, scale * b);
            assert!(
                fa.signum() != fb.signum(),
                "no true zero between predicted zeros {a} and {b}"
            );
        }
    }

    #[test]
    fn steepest_descent_phase_at_origin() {
        // phase(y = 0) = −nπ/2 + 0 exactly: reproduces H_n(0) parity.
        for &n in &[10usize, 11, 12, 13] {
            let sd = hermite_steepest_descent(n, 0.0).unwrap();
            let expected = -(n as f64) * core::f64::consts::FRAC_PI_2
                + core::f64::consts::FRAC_PI_4
                - 0.25 * core::f64::consts::PI;
            assert!(
                (sd.phase - expected).abs() < 1e-12,
                "phase at origin for n = {n}"
            );
        }
    }

    #[test]
    fn steepest_descent_rejects_bad_inputs() {
        assert_eq!(
            hermite_steepest_descent(9, 0.2).unwrap_err(),
            OrthoError::SteepestDescentIndex
        );
        assert_eq!(
            hermite_steepest_descent(50, 0.95).unwrap_err(),
            OrthoError::SteepestDescentRegion
        );
        assert_eq!(
            hermite_steepest_descent(50, f64::NAN).unwrap_err(),
            OrthoError::SteepestDescentRegion
        );
    }
}
