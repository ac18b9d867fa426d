//! Dense symmetric / Hermitian eigenvalue computation and resolvents.
//!
//! The eigensolver is the classical two-stage reduction: Householder
//! similarity transformations bring a real symmetric matrix to tridiagonal
//! form, and implicit-shift QL iteration then deflates eigenvalues one by
//! one. Only eigenvalues are computed (no accumulation of transforms), which
//! is all the spectral statistics in this crate require.
//!
//! Hermitian matrices are handled through the real 2n×2n embedding
//! `[[Re H, −Im H], [Im H, Re H]]`, whose spectrum is that of `H` with every
//! eigenvalue doubled; the solver checks the pairing explicitly, which
//! doubles as an internal consistency probe.
//!
//! Resolvents `G(z) = (A − zI)^{−1}` for non-real `z` are computed by complex
//! LU factorization with partial pivoting.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

#[allow(unused_imports)]
use crate::float::FloatExt;

/// Errors from construction or eigenvalue computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinalgError {
    /// An input entry was NaN or infinite.
    NonFinite,
    /// Rows do not form a square matrix of the declared dimension.
    DimensionMismatch,
    /// The input is not exactly symmetric (or Hermitian).
    NotSymmetric,
    /// QL iteration failed to converge within the iteration cap.
    NoConvergence,
    /// Eigenvalues of the real embedding of a Hermitian matrix failed to
    /// pair up; this indicates an internal error, not bad input.
    PairingFailure,
    /// The resolvent is only defined off the real axis.
    RealShift,
    /// A pivot vanished during LU factorization.
    Singular,
    /// Row/column index out of range.
    IndexOutOfRange,
}

impl core::fmt::Display for LinalgError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            LinalgError::NonFinite => write!(f, "matrix entries must be finite"),
            LinalgError::DimensionMismatch => write!(f, "rows do not form a square matrix"),
            LinalgError::NotSymmetric => write!(f, "matrix is not symmetric/Hermitian"),
            LinalgError::NoConvergence => {
                write!(f, "QL iteration exceeded its cap of 30 sweeps per dimension")
            }
            LinalgError::PairingFailure => {
                write!(f, "embedded Hermitian eigenvalues failed to pair")
            }
            LinalgError::RealShift => write!(f, "resolvent requires Im z != 0"),
            LinalgError::Singular => write!(f, "matrix is numerically singular"),
            LinalgError::IndexOutOfRange => write!(f, "index out of range"),
        }
    }
}

impl core::error::Error for LinalgError {}

/// Normalization convention attached to a spectrum.
///
/// The same ensemble appears in the literature under three scalings; keeping
/// the convention explicit prevents silent factor-of-√N bugs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// Entries of unit variance, no rescaling: spectrum edge near `2√N`.
    UnitEntries,
    /// Entries divided by `√N`: limiting support `[−2, 2]`.
    OneOverSqrtN,
    /// Matrix divided by `√2` relative to unit entries: edge near `√(2N)`,
    /// matching the weight `e^{−x²}` orthogonal-polynomial normalization.
    HalfWeight,
}

/// Dense real symmetric matrix, row-major storage.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    /// The zero matrix of dimension `n` (0 allowed: the empty matrix).
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix { n, data: vec![0.0; n * n] }
    }

    /// Build from explicit rows; rejects non-square or non-symmetric input.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(LinalgError::DimensionMismatch);
            }
            data.extend_from_slice(row);
        }
        let m = SymmetricMatrix { n, data };
        for i in 0..n {
            for j in (i + 1)..n {
                if m.data[i * n + j] != m.data[j * n + i] {
                    return Err(LinalgError::NotSymmetric);
                }
            }
        }
        Ok(m)
    }

    /// Build by calling `f(i, j)` for every pair `i ≤ j`; symmetry holds by
    /// construction.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = SymmetricMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                m.data[i * n + j] = v;
                m.data[j * n + i] = v;
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Set entry `(i, j)` and its mirror `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.data[i * self.n + i]).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |m, &v| m.max(v.abs()))
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

/// Dense complex Hermitian matrix, row-major storage.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn zeros(n: usize) -> Self {
        HermitianMatrix { n, data: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    /// Build by calling `f(i, j)` for `i ≤ j`; the lower triangle is the
    /// conjugate mirror and diagonal imaginary parts are discarded, so the
    /// result is Hermitian exactly.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = HermitianMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                let v = if i == j { Complex64::new(v.re, 0.0) } else { v };
                m.data[i * n + j] = v;
                m.data[j * n + i] = v.conj();
            }
        }
        m
    }

    /// Build from explicit rows; rejects input that is not Hermitian exactly.
    pub fn from_rows<R: AsRef<[Complex64]>>(rows: &[R]) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(LinalgError::DimensionMismatch);
            }
            data.extend_from_slice(row);
        }
        let m = HermitianMatrix { n, data };
        for i in 0..n {
            for j in i..n {
                if m.data[i * n + j] != m.data[j * n + i].conj() {
                    return Err(LinalgError::NotSymmetric);
                }
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    /// Set entry `(i, j)` for `i ≤ j`; the mirror entry is conjugated.
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        let v = if i == j { Complex64::new(v.re, 0.0) } else { v };
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v.conj();
    }

    /// Trace (real by Hermiticity).
    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.data[i * self.n + i].re).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |m, v| m.max(v.norm()))
    }

    /// The real symmetric 2n×2n embedding `[[Re, −Im], [Im, Re]]`.
    ///
    /// Its spectrum is the spectrum of `self`, each eigenvalue with doubled
    /// multiplicity.
    pub fn embed_real(&self) -> SymmetricMatrix {
        let n = self.n;
        let mut m = SymmetricMatrix::zeros(2 * n);
        for i in 0..n {
            for j in 0..n {
                let v = self.data[i * n + j];
                m.data[i * (2 * n) + j] = v.re;
                m.data[(i + n) * (2 * n) + (j + n)] = v.re;
                m.data[i * (2 * n) + (j + n)] = -v.im;
                m.data[(i + n) * (2 * n) + j] = v.im;
            }
        }
        m
    }

    fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.re.is_finite() && v.im.is_finite())
    }
}

/// Symmetric tridiagonal matrix: `diag` of length n, `offdiag` of length n−1.
#[derive(Clone, Debug, PartialEq)]
pub struct TridiagonalSymmetric {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl TridiagonalSymmetric {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self, LinalgError> {
        if diag.is_empty() && !offdiag.is_empty() {
            return Err(LinalgError::DimensionMismatch);
        }
        if !diag.is_empty() && offdiag.len() != diag.len() - 1 {
            return Err(LinalgError::DimensionMismatch);
        }
        Ok(TridiagonalSymmetric { diag, offdiag })
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// Expand to dense form (used by tests to cross-check the QL core
    /// against the dense path).
    pub fn to_dense(&self) -> SymmetricMatrix {
        let n = self.n();
        SymmetricMatrix::from_fn(n, |i, j| {
            if i == j {
                self.diag[i]
            } else if j == i + 1 {
                self.offdiag[i]
            } else {
                0.0
            }
        })
    }
}

/// A computed spectrum with its normalization convention.
#[derive(Clone, Debug)]
pub struct SpectralSample {
    eigenvalues: Vec<f64>,
    convention: Convention,
    beta: f64,
}

impl SpectralSample {
    /// Sorts the eigenvalues ascending; `beta` records the symmetry class
    /// the sample was drawn from (1, 2, or general for tridiagonal models).
    pub fn new(mut eigenvalues: Vec<f64>, convention: Convention, beta: f64) -> Self {
        eigenvalues.sort_unstable_by(f64::total_cmp);
        SpectralSample { eigenvalues, convention, beta }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// Householder reduction of a symmetric matrix to tridiagonal form
/// (eigenvalues-only variant: the orthogonal factor is not accumulated).
pub fn householder_tridiagonalize(a: &SymmetricMatrix) -> TridiagonalSymmetric {
    let n = a.n;
    if n == 0 {
        return TridiagonalSymmetric { diag: Vec::new(), offdiag: Vec::new() };
    }
    let mut a = a.data.clone();
    let mut e = vec![0.0_f64; n];

    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let mut scale = 0.0;
            for k in 0..=l {
                scale += a[i * n + k].abs();
            }
            if scale == 0.0 {
                e[i] = a[i * n + l];
            } else {
                for k in 0..=l {
                    a[i * n + k] /= scale;
                    h += a[i * n + k] * a[i * n + k];
                }
                let f = a[i * n + l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i * n + l] = f - g;
                let mut f_acc = 0.0;
                for j in 0..=l {
                    // g = (A·u)_j restricted to the active block, using
                    // symmetry to read only the lower triangle.
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[j * n + k] * a[i * n + k];
                    }
                    for k in (j + 1)..=l {
                        g += a[k * n + j] * a[i * n + k];
                    }
                    e[j] = g / h;
                    f_acc += e[j] * a[i * n + j];
                }
                let hh = f_acc / (h + h);
                // Rank-2 update A ← A − u qᵀ − q uᵀ on the active block.
                for j in 0..=l {
                    let f = a[i * n + j];
                    let q = e[j] - hh * f;
                    e[j] = q;
                    for k in 0..=j {
                        a[j * n + k] -= f * e[k] + q * a[i * n + k];
                    }
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
        let _ = h;
    }

    let diag: Vec<f64> = (0..n).map(|j| a[j * n + j]).collect();
    let offdiag: Vec<f64> = (1..n).map(|j| e[j]).collect();
    TridiagonalSymmetric { diag, offdiag }
}

/// Implicit-shift QL iteration on a symmetric tridiagonal matrix.
///
/// Returns the eigenvalues in ascending order, or `NoConvergence` if the
/// iteration budget of `30·n` shift sweeps is exhausted (which signals a
/// pathological input: random-matrix workloads use a handful of sweeps per
/// eigenvalue).
pub fn tridiagonal_eigenvalues(t: &TridiagonalSymmetric) -> Result<Vec<f64>, LinalgError> {
    let n = t.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    if !t.diag.iter().chain(t.offdiag.iter()).all(|v| v.is_finite()) {
        return Err(LinalgError::NonFinite);
    }
    let mut d = t.diag.clone();
    // e[i] couples positions (i, i+1); e[n−1] is a zero sentinel.
    let mut e = vec![0.0_f64; n];
    e[..n - 1].copy_from_slice(&t.offdiag);

    let eps = f64::EPSILON;
    let mut budget = 30usize * n;

    for l in 0..n {
        loop {
            // Find the first decoupled position at or after l.
            let mut m = l;
            while m < n - 1 {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            if budget == 0 {
                return Err(LinalgError::NoConvergence);
            }
            budget -= 1;

            // Wilkinson-style implicit shift from the 2×2 block at l.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                let r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    // Rotation annihilated prematurely: deflate and restart.
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                let r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    d.sort_unstable_by(f64::total_cmp);
    Ok(d)
}

/// All eigenvalues of a dense symmetric matrix, ascending.
pub fn symmetric_eigenvalues(a: &SymmetricMatrix) -> Result<Vec<f64>, LinalgError> {
    if !a.is_finite() {
        return Err(LinalgError::NonFinite);
    }
    tridiagonal_eigenvalues(&householder_tridiagonalize(a))
}

/// All eigenvalues of a Hermitian matrix, ascending, via the real 2n×2n
/// embedding. Each eigenvalue of the embedding must appear twice; a pairing
/// failure is reported rather than silently averaged away.
pub fn hermitian_eigenvalues(h: &HermitianMatrix) -> Result<Vec<f64>, LinalgError> {
    if !h.is_finite() {
        return Err(LinalgError::NonFinite);
    }
    let n = h.n;
    if n == 0 {
        return Ok(Vec::new());
    }
    let doubled = symmetric_eigenvalues(&h.embed_real())?;
    let scale = doubled
        .iter()
        .fold(1.0_f64, |m, &v| m.max(v.abs()));
    let tol = 1e-8 * scale * (n as f64).max(1.0);
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let a = doubled[2 * k];
        let b = doubled[2 * k + 1];
        if (a - b).abs() > tol {
            return Err(LinalgError::PairingFailure);
        }
        out.push(0.5 * (a + b));
    }
    Ok(out)
}

/// Dense complex matrix (resolvent values), row-major storage.
#[derive(Clone, Debug)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.data[i * self.n + i]).sum()
    }

    /// `trace / n` — the empirical Stieltjes transform when applied to a
    /// resolvent.
    pub fn normalized_trace(&self) -> Complex64 {
        self.trace() / self.n as f64
    }
}

/// Resolvent `G(z) = (A − zI)^{−1}` for `Im z ≠ 0`, by complex LU with
/// partial pivoting.
pub fn resolvent(a: &SymmetricMatrix, z: Complex64) -> Result<ComplexMatrix, LinalgError> {
    if z.im == 0.0 {
        return Err(LinalgError::RealShift);
    }
    if !a.is_finite() {
        return Err(LinalgError::NonFinite);
    }
    let n = a.n;
    let mut lu: Vec<Complex64> = a
        .data
        .iter()
        .map(|&v| Complex64::new(v, 0.0))
        .collect();
    for i in 0..n {
        lu[i * n + i] -= z;
    }

    // Factor PA = LU.
    let mut perm: Vec<usize> = (0..n).collect();
    for k in 0..n {
        let mut p = k;
        let mut best = lu[k * n + k].norm_sqr();
        for i in (k + 1)..n {
            let v = lu[i * n + k].norm_sqr();
            if v > best {
                best = v;
                p = i;
            }
        }
        if best == 0.0 {
            // Cannot occur for Hermitian A and Im z ≠ 0, but guard anyway.
            return Err(LinalgError::Singular);
        }
        if p != k {
            for j in 0..n {
                lu.swap(k * n + j, p * n + j);
            }
            perm.swap(k, p);
        }
        let piv = lu[k * n + k];
        for i in (k + 1)..n {
            let m = lu[i * n + k] / piv;
            lu[i * n + k] = m;
            for j in (k + 1)..n {
                let upd = m * lu[k * n + j];
                lu[i * n + j] -= upd;
            }
        }
    }

    // Solve (A − zI) g_col = e_j for each j.
    let mut g = vec![Complex64::new(0.0, 0.0); n * n];
    let mut col = vec![Complex64::new(0.0, 0.0); n];
    for j in 0..n {
        for (i, slot) in col.iter_mut().enumerate() {
            *slot = if perm[i] == j {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            };
        }
        // Forward substitution (L has unit diagonal).
        for i in 1..n {
            let mut acc = col[i];
            for k in 0..i {
                acc -= lu[i * n + k] * col[k];
            }
            col[i] = acc;
        }
        // Back substitution.
        for i in (0..n).rev() {
            let mut acc = col[i];
            for k in (i + 1)..n {
                acc -= lu[i * n + k] * col[k];
            }
            col[i] = acc / lu[i * n + i];
        }
        for i in 0..n {
            g[i * n + j] = col[i];
        }
    }

    Ok(ComplexMatrix { n, data: g })
}

/// The (n−1)-dimensional matrix obtained by deleting row and column `i`.
pub fn principal_submatrix(a: &SymmetricMatrix, i: usize) -> Result<SymmetricMatrix, LinalgError> {
    let n = a.n;
    if i >= n {
        return Err(LinalgError::IndexOutOfRange);
    }
    let keep: Vec<usize> = (0..n).filter(|&k| k != i).collect();
    Ok(SymmetricMatrix::from_fn(n - 1, |r, c| a.get(keep[r], keep[c])))
}
