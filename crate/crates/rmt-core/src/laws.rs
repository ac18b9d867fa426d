//! Closed-form limiting laws: the semicircle and Marchenko–Pastur
//! distributions — densities, CDFs, moments, and Stieltjes transforms.

use num_complex::Complex64;

#[allow(unused_imports)]
use crate::float::FloatExt;
use crate::combinatorics;
use crate::quad;

const PI: f64 = core::f64::consts::PI;

/// Errors from limit-law evaluations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawError {
    /// Stieltjes transforms are defined off the real axis only.
    RealArgument,
    /// The Marchenko–Pastur aspect ratio must be positive and finite.
    InvalidLambda,
}

impl core::fmt::Display for LawError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            LawError::RealArgument => write!(f, "Stieltjes transform requires Im z != 0"),
            LawError::InvalidLambda => write!(f, "aspect ratio must be positive and finite"),
        }
    }
}

impl core::error::Error for LawError {}

/// Semicircle density `√((4 − x²)₊)/(2π)` on `[−2, 2]`.
pub fn semicircle_density(x: f64) -> f64 {
    let t = 4.0 - x * x;
    if t <= 0.0 {
        0.0
    } else {
        t.sqrt() / (2.0 * PI)
    }
}

/// Semicircle CDF in closed form:
/// `1/2 + x√(4 − x²)/(4π) + asin(x/2)/π` on the support, clamped outside.
pub fn semicircle_cdf(x: f64) -> f64 {
    if x <= -2.0 {
        return 0.0;
    }
    if x >= 2.0 {
        return 1.0;
    }
    0.5 + x * (4.0 - x * x).sqrt() / (4.0 * PI) + (x / 2.0).asin() / PI
}

/// k-th moment of the semicircle law: 0 for odd k, the Catalan number
/// `C_{k/2}` for even k (computed exactly in integers, converted at the end).
pub fn semicircle_moment(k: u32) -> f64 {
    if k % 2 == 1 {
        return 0.0;
    }
    let m = k / 2;
    match combinatorics::catalan(m) {
        Ok(c) => c as f64,
        Err(_) => {
            // Out of exact 128-bit range (m > 65): fall back to the same
            // recurrence in floating point.
            let mut c = 1.0_f64;
            for j in 1..=(m as u64) {
                c *= (2 * (2 * j - 1)) as f64 / (j + 1) as f64;
            }
            c
        }
    }
}

/// Stieltjes transform of the semicircle law, `g(z) = ∫ ρ(x)/(x − z) dx`,
/// in closed form as the Herglotz root of `s² + zs + 1 = 0`.
///
/// The two roots have product 1; the one satisfying `Im s · Im z > 0` is the
/// transform (a Stieltjes transform maps each half-plane into itself).
pub fn semicircle_stieltjes(z: Complex64) -> Result<Complex64, LawError> {
    if z.im == 0.0 {
        return Err(LawError::RealArgument);
    }
    let w = (z * z - 4.0).sqrt();
    let s = (-z + w) / 2.0;
    if s.im * z.im > 0.0 {
        Ok(s)
    } else {
        Ok((-z - w) / 2.0)
    }
}

/// Marchenko–Pastur law with aspect ratio `λ = m/n`.
///
/// Support edges `a = (1 − √λ)²`, `b = (1 + √λ)²`; for `λ > 1` the law
/// carries an atom at 0 of mass `1 − 1/λ`. The continuous density is
/// `√((b − x)(x − a)) / (2πλx)`; the `1/λ` factor is required for the total
/// mass (continuous part plus atom) to equal 1.
#[derive(Clone, Copy, Debug)]
pub struct MarchenkoPasturLaw {
    lambda: f64,
    a: f64,
    b: f64,
}

impl MarchenkoPasturLaw {
    pub fn new(lambda: f64) -> Result<Self, LawError> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(LawError::InvalidLambda);
        }
        let r = lambda.sqrt();
        Ok(MarchenkoPasturLaw { lambda, a: (1.0 - r) * (1.0 - r), b: (1.0 + r) * (1.0 + r) })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Support `(a, b)` of the continuous part.
    pub fn support(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    /// Mass of the atom at 0: `max(0, 1 − 1/λ)`.
    pub fn atom(&self) -> f64 {
        (1.0 - 1.0 / self.lambda).max(0.0)
    }

    /// Continuous density at `x`.
    pub fn density(&self, x: f64) -> f64 {
        if x <= self.a || x >= self.b {
            return 0.0;
        }
        ((self.b - x) * (x - self.a)).sqrt() / (2.0 * PI * self.lambda * x)
    }

    /// CDF including the atom.
    ///
    /// The continuous part is integrated under the substitution
    /// `x = 1 + λ + 2√λ sin θ`, which turns the edge square roots into
    /// `(1 + cos 2θ)/(π(1 + λ + 2√λ sin θ))` — analytic on
    /// `[−π/2, π/2]`, so a fixed 64-node Gauss–Legendre rule resolves it to
    /// near machine precision.
    pub fn cdf(&self, x: f64) -> f64 {
        let atom = if x >= 0.0 { self.atom() } else { 0.0 };
        if x <= self.a {
            return atom;
        }
        if x >= self.b {
            return 1.0;
        }
        let r = self.lambda.sqrt();
        let theta = ((x - 1.0 - self.lambda) / (2.0 * r)).clamp(-1.0, 1.0).asin();
        let (nodes, weights) = quad::gauss_legendre_on(-0.5 * PI, theta, 64);
        let mut acc = 0.0;
        for (t, w) in nodes.iter().zip(&weights) {
            let xx = 1.0 + self.lambda + 2.0 * r * t.sin();
            acc += w * (1.0 + (2.0 * t).cos()) / (PI * xx);
        }
        atom + acc
    }
}
