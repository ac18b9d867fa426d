//! Correlation kernels: the finite-`N` Christoffel–Darboux kernel of the
//! Hermite functions and its two universal scaling limits, the sine kernel
//! (bulk) and the Airy kernel (soft edge).

#[allow(unused_imports)]
use crate::float::FloatExt;

use super::airy::airy;
use super::hermite::hermite_function_sequence;
use super::Kernel;

/// Distance below which two arguments count as "on the diagonal" and the
/// cancellation-prone divided-difference forms switch to stable ones.
const NEAR_DIAGONAL: f64 = 1e-6;

/// Christoffel–Darboux kernel `K_N(x, y) = Σ_{k<N} φ_k(x) φ_k(y)` of the
/// first `N` Hermite functions.
///
/// Away from the diagonal the two-term Christoffel–Darboux form
///
/// ```text
/// K_N(x, y) = √(N/2) · (φ_N(x) φ_{N−1}(y) − φ_{N−1}(x) φ_N(y)) / (x − y)
/// ```
///
/// is used (`O(N)` work for the recurrence but only two products); within
/// [`NEAR_DIAGONAL`] of the diagonal it switches to the explicit sum, which
/// has no cancelling difference quotient.
#[derive(Clone, Copy, Debug)]
pub struct ChristoffelDarboux {
    order: usize,
}

impl ChristoffelDarboux {
    /// Kernel of order `N ≥ 1` (projects onto `span{φ_0, …, φ_{N−1}}`).
    pub fn new(order: usize) -> Self {
        assert!(order >= 1, "Christoffel-Darboux kernel needs order >= 1");
        Self { order }
    }

    /// The projection rank `N`.
    pub fn order(&self) -> usize {
        self.order
    }

    fn sum_form(&self, x: f64, y: f64) -> f64 {
        let fx = hermite_function_sequence(self.order - 1, x);
        let fy = hermite_function_sequence(self.order - 1, y);
        let mut acc = 0.0;
        for k in 0..self.order {
            acc += fx[k] * fy[k];
        }
        acc
    }
}

impl Kernel for ChristoffelDarboux {
    fn evaluate(&self, x: f64, y: f64) -> f64 {
        if (x - y).abs() <= NEAR_DIAGONAL {
            return self.sum_form(x, y);
        }
        let n = self.order;
        let fx = hermite_function_sequence(n, x);
        let fy = hermite_function_sequence(n, y);
        (0.5 * n as f64).sqrt() * (fx[n] * fy[n - 1] - fx[n - 1] * fy[n]) / (x - y)
    }

    fn diagonal(&self, x: f64) -> f64 {
        self.sum_form(x, x)
    }
}

/// The bulk universal limit `K(x, y) = sin(π(x−y)) / (π(x−y))`.
#[derive(Clone, Copy, Debug, Default)]
pub struct SineKernel;

impl Kernel for SineKernel {
    fn evaluate(&self, x: f64, y: f64) -> f64 {
        let d = core::f64::consts::PI * (x - y);
        if d.abs() < 1e-4 {
            // Taylor form: relative truncation error (πd)⁶/5040 < 1e−27.
            let d2 = d * d;
            1.0 - d2 / 6.0 + d2 * d2 / 120.0
        } else {
            d.sin() / d
        }
    }

    fn diagonal(&self, _x: f64) -> f64 {
        1.0
    }
}

/// The soft-edge universal limit
/// `K(x, y) = (Ai(x) Ai′(y) − Ai(y) Ai′(x)) / (x − y)`.
///
/// Arguments must stay in the Airy evaluation range `[−30, 30]`; outside it
/// the kernel panics (quadrature domains are validated upstream before any
/// evaluation loop starts).
#[derive(Clone, Copy, Debug, Default)]
pub struct AiryKernel;

impl Kernel for AiryKernel {
    fn evaluate(&self, x: f64, y: f64) -> f64 {
        if (x - y).abs() <= NEAR_DIAGONAL {
            // The kernel is smooth and symmetric: the midpoint diagonal
            // value differs from K(x, y) by O((x−y)²).
            return self.diagonal(0.5 * (x + y));
        }
        let (ax, apx) = airy(x).expect("Airy kernel argument out of range");
        let (ay, apy) = airy(y).expect("Airy kernel argument out of range");
        (ax * apy - ay * apx) / (x - y)
    }

    fn diagonal(&self, x: f64) -> f64 {
        let (ax, apx) = airy(x).expect("Airy kernel argument out of range");
        apx * apx - x * ax * ax
    }
}

/// The Christoffel–Darboux kernel rescaled into bulk coordinates:
///
/// ```text
/// K^bulk_N(ξ, η) = (π/√(2N)) · K_N(πξ/√(2N), πη/√(2N)),
/// ```
///
/// which converges to [`SineKernel`] as `N → ∞` at fixed `(ξ, η)`.
#[derive(Clone, Copy, Debug)]
pub struct BulkScaledCd {
    cd: ChristoffelDarboux,
    scale: f64,
}

impl BulkScaledCd {
    pub fn new(order: usize) -> Self {
        let cd = ChristoffelDarboux::new(order);
        let scale = core::f64::consts::PI / (2.0 * order as f64).sqrt();
        Self { cd, scale }
    }
}

impl Kernel for BulkScaledCd {
    fn evaluate(&self, xi: f64, eta: f64) -> f64 {
        self.scale * self.cd.evaluate(self.scale * xi, self.scale * eta)
    }

    fn diagonal(&self, xi: f64) -> f64 {
        self.scale * self.cd.diagonal(self.scale * xi)
    }
}

/// The Christoffel–Darboux kernel rescaled into soft-edge coordinates:
/// with `h = 2^{−1/2} N^{−1/6}` and `x(t) = √(2N) + t·h`,
///
/// ```text
/// K^edge_N(s, t) = h · K_N(x(s), x(t)),
/// ```
///
/// which converges to [`AiryKernel`] as `N → ∞` at fixed `(s, t)`.
#[derive(Clone, Copy, Debug)]
pub struct EdgeScaledCd {
    cd: ChristoffelDarboux,
    center: f64,
    width: f64,
}

impl EdgeScaledCd {
    pub fn new(order: usize) -> Self {
        let nf = order as f64;
        Self {
            cd: ChristoffelDarboux::new(order),
            center: (2.0 * nf).sqrt(),
            width: core::f64::consts::FRAC_1_SQRT_2 * nf.powf(-1.0 / 6.0),
        }
    }

    fn map(&self, t: f64) -> f64 {
        self.center + t * self.width
    }
}

impl Kernel for EdgeScaledCd {
    fn evaluate(&self, s: f64, t: f64) -> f64 {
        self.width * self.cd.evaluate(self.map(s), self.map(t))
    }

    fn diagonal(&self, t: f64) -> f64 {
        self.width * self.cd.diagonal(self.map(t))
    }
}
