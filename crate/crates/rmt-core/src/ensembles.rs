//! Seedable samplers for the classical random-matrix ensembles.
//!
//! Conventions (tracked by [`crate::linalg::Convention`] on spectra):
//!
//! * Wigner matrices carry entries `Z_ij/√n` with `E Z = 0`, `E Z² = 1`
//!   (limiting support `[−2, 2]`);
//! * GOE has diagonal variance 2 and off-diagonal variance 1, GUE diagonal
//!   `N(0,1)` and off-diagonal `E|X_ij|² = 1` (unit entries; spectrum edge
//!   near `2√n`);
//! * Wishart returns `(1/n)·XᵀX` of size m×m, so the Marchenko–Pastur
//!   support formula applies with `λ = m/n` directly;
//! * the β-tridiagonal model has diagonal `N(0, 2/β)` and off-diagonal
//!   `χ_{βk}·√(1/β)` (equivalently `χ_{βk}/√2·s` with the overall scale
//!   `s = √(2/β)`), which reproduces GOE at β=1 and GUE at β=2 *exactly*
//!   in distribution — the off-diagonal of a Householder-reduced GOE/GUE
//!   matrix is precisely the χ norm of the eliminated column.

use num_complex::Complex64;

#[allow(unused_imports)]
use crate::float::FloatExt;
use crate::linalg::{HermitianMatrix, SymmetricMatrix, TridiagonalSymmetric};
use crate::rng::RngState;

/// Errors from ensemble construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnsembleError {
    /// Matrix dimensions must be at least 1.
    ZeroDimension,
    /// The Dyson index β must be positive and finite.
    InvalidBeta,
}

impl core::fmt::Display for EnsembleError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EnsembleError::ZeroDimension => write!(f, "ensemble dimension must be positive"),
            EnsembleError::InvalidBeta => write!(f, "beta must be positive and finite"),
        }
    }
}

impl core::error::Error for EnsembleError {}

/// Mean-zero, variance-one entry laws for Wigner matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryDistribution {
    /// Standard normal.
    Gaussian,
    /// ±1 equiprobable.
    Rademacher,
    /// Uniform on `[−√3, √3]`.
    Uniform,
}

impl EntryDistribution {
    /// One draw from the law.
    pub fn sample(&self, rng: &mut RngState) -> f64 {
        match self {
            EntryDistribution::Gaussian => rng.normal(),
            EntryDistribution::Rademacher => {
                if rng.next_u64() & 1 == 0 {
                    1.0
                } else {
                    -1.0
                }
            }
            EntryDistribution::Uniform => {
                let sqrt3 = 3.0_f64.sqrt();
                (2.0 * rng.uniform() - 1.0) * sqrt3
            }
        }
    }
}

/// Wigner matrix: `X_ij = Z_ij/√n`, `Z` iid over `i ≤ j` from `dist`.
pub fn sample_wigner(
    n: usize,
    dist: EntryDistribution,
    rng: &mut RngState,
) -> Result<SymmetricMatrix, EnsembleError> {
    if n == 0 {
        return Err(EnsembleError::ZeroDimension);
    }
    let inv_sqrt_n = 1.0 / (n as f64).sqrt();
    Ok(SymmetricMatrix::from_fn(n, |_, _| dist.sample(rng) * inv_sqrt_n))
}

/// GOE matrix with unit-variance off-diagonal and variance-2 diagonal.
pub fn sample_goe(n: usize, rng: &mut RngState) -> Result<SymmetricMatrix, EnsembleError> {
    if n == 0 {
        return Err(EnsembleError::ZeroDimension);
    }
    let sqrt2 = 2.0_f64.sqrt();
    Ok(SymmetricMatrix::from_fn(n, |i, j| {
        if i == j {
            sqrt2 * rng.normal()
        } else {
            rng.normal()
        }
    }))
}

/// GUE matrix: real `N(0,1)` diagonal, off-diagonal `(ξ + iη)/√2` so
/// `E|X_ij|² = 1`.
pub fn sample_gue(n: usize, rng: &mut RngState) -> Result<HermitianMatrix, EnsembleError> {
    if n == 0 {
        return Err(EnsembleError::ZeroDimension);
    }
    let inv_sqrt2 = core::f64::consts::FRAC_1_SQRT_2;
    Ok(HermitianMatrix::from_fn(n, |i, j| {
        if i == j {
            Complex64::new(rng.normal(), 0.0)
        } else {
            Complex64::new(rng.normal() * inv_sqrt2, rng.normal() * inv_sqrt2)
        }
    }))
}

/// Wishart matrix `(1/n)·XᵀX` of size m×m, with `X` an n×m matrix of iid
/// standard Gaussians. Positive semidefinite; rank-deficient when `m > n`.
pub fn sample_wishart(
    n: usize,
    m: usize,
    rng: &mut RngState,
) -> Result<SymmetricMatrix, EnsembleError> {
    if n == 0 || m == 0 {
        return Err(EnsembleError::ZeroDimension);
    }
    let mut x = alloc::vec![0.0_f64; n * m];
    for slot in x.iter_mut() {
        *slot = rng.normal();
    }
    let inv_n = 1.0 / n as f64;
    Ok(SymmetricMatrix::from_fn(m, |i, j| {
        let mut acc = 0.0;
        for r in 0..n {
            acc += x[r * m + i] * x[r * m + j];
        }
        acc * inv_n
    }))
}

/// β-ensemble tridiagonal model: diagonal `N(0, 2/β)`, off-diagonal entry
/// coupling positions `(j, j+1)` distributed as `χ_{β(n−1−j)}·√(1/β)`.
///
/// The eigenvalue density is `∝ ∏|λ_i − λ_j|^β exp(−(β/4)Σλ²)`, the same
/// normalization in which GOE (β=1) and GUE (β=2) are expressed with unit
/// entries.
pub fn sample_beta_tridiagonal(
    n: usize,
    beta: f64,
    rng: &mut RngState,
) -> Result<TridiagonalSymmetric, EnsembleError> {
    if n == 0 {
        return Err(EnsembleError::ZeroDimension);
    }
    if !(beta > 0.0) || !beta.is_finite() {
        return Err(EnsembleError::InvalidBeta);
    }
    let s = (2.0 / beta).sqrt();
    let offdiag_scale = s * core::f64::consts::FRAC_1_SQRT_2;
    let diag: alloc::vec::Vec<f64> = (0..n).map(|_| rng.normal() * s).collect();
    let offdiag: alloc::vec::Vec<f64> = (1..n)
        .map(|j| {
            let dof = beta * (n - j) as f64;
            rng.chi(dof) * offdiag_scale
        })
        .collect();
    Ok(TridiagonalSymmetric::new(diag, offdiag).expect("lengths consistent by construction"))
}
