//! Independent oracles for the dense symmetric eigensolver.
//!
//! The QL solver is validated three ways, none of which share code with
//! the Householder/QL path:
//!
//! * a Sturm-count bisection oracle (sign changes of the leading
//!   principal minors of `A − xI`, computed as LDLᵀ pivot signs) locates
//!   each eigenvalue to ~1e−12 and the QL values must match to 1e−10;
//! * matrix-analysis inequalities (Hoffman–Wielandt, Cauchy interlacing,
//!   Weyl perturbation bounds) that every correct spectrum must satisfy;
//! * invariance of trace and Frobenius norm under the spectral map.

use rmt_core::linalg::{principal_submatrix, symmetric_eigenvalues, SymmetricMatrix};
use rmt_core::rng::RngState;

/// A full-support random symmetric matrix with entries of magnitude
/// ~`scale`; scale varies across instances to exercise tolerance logic.
fn random_symmetric(n: usize, scale: f64, rng: &mut RngState) -> SymmetricMatrix {
    SymmetricMatrix::from_fn(n, |_, _| scale * rng.normal())
}

fn frobenius_norm(a: &SymmetricMatrix) -> f64 {
    a.data().iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn frobenius_distance(a: &SymmetricMatrix, b: &SymmetricMatrix) -> f64 {
    a.data()
        .iter()
        .zip(b.data())
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Number of eigenvalues of `a` strictly below `x`, by Sylvester's law of
/// inertia: Gaussian elimination without pivoting on `A − xI` is an LDLᵀ
/// factorization whose pivot `d_k` equals the ratio `M_k/M_{k−1}` of
/// consecutive leading principal minors of the characteristic matrix, so
/// the count of negative pivots equals the Sturm sign-change count of the
/// char-poly minor sequence. Returns `None` when a pivot collapses (probe
/// sits numerically on an eigenvalue of a leading submatrix).
fn sturm_count_below(a: &SymmetricMatrix, x: f64) -> Option<usize> {
    let n = a.n();
    let mut m = vec![0.0_f64; n * n];
    for i in 0..n {
        for j in 0..n {
            m[i * n + j] = a.get(i, j) - if i == j { x } else { 0.0 };
        }
    }
    let mut negatives = 0;
    for k in 0..n {
        let piv = m[k * n + k];
        if piv.abs() < 1e-280 {
            return None;
        }
        if piv < 0.0 {
            negatives += 1;
        }
        for i in (k + 1)..n {
            let f = m[i * n + k] / piv;
            for j in (k + 1)..n {
                m[i * n + j] -= f * m[k * n + j];
            }
        }
    }
    Some(negatives)
}

/// `sturm_count_below` with probe-point nudging: a collapsed pivot means
/// the probe hit a submatrix eigenvalue exactly, so shift it by a relative
/// epsilon and retry. The count at the nudged point is still a valid
/// bisection predicate because the nudge is far below the bisection
/// tolerance.
fn count_below(a: &SymmetricMatrix, x: f64, scale: f64) -> usize {
    let mut probe = x;
    for _ in 0..8 {
        if let Some(c) = sturm_count_below(a, probe) {
            return c;
        }
        probe += 1e-13 * scale.max(1.0);
    }
    panic!("Sturm count failed to stabilize near {x}");
}

/// The `j`-th smallest eigenvalue (0-based) by bisection on the Sturm
/// count, bracketed by Gershgorin bounds.
fn bisection_eigenvalue(a: &SymmetricMatrix, j: usize) -> f64 {
    let n = a.n();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let radius: f64 = (0..n).filter(|&k| k != i).map(|k| a.get(i, k).abs()).sum();
        lo = lo.min(a.get(i, i) - radius);
        hi = hi.max(a.get(i, i) + radius);
    }
    let scale = lo.abs().max(hi.abs());
    // Open the bracket slightly so the invariant below holds strictly.
    lo -= 1e-8 * scale.max(1.0);
    hi += 1e-8 * scale.max(1.0);

    // Invariant: count(lo) ≤ j < count(hi).
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if count_below(a, mid, scale) > j {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo <= 1e-13 * scale.max(1.0) {
            break;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn ql_matches_sturm_bisection_oracle() {
    let mut rng = RngState::new(0x51e6_0a2c_9b3d_74f1);
    for instance in 0..50 {
        let n = 2 + (instance % 7); // 2..=8
        // Scales from 1e−2 to 1e2 hit the solver's relative tolerances.
        let scale = 10.0_f64.powf(rng.uniform() * 4.0 - 2.0);
        let a = random_symmetric(n, scale, &mut rng);
        let eigs = symmetric_eigenvalues(&a).unwrap();
        assert_eq!(eigs.len(), n);
        for j in 0..n {
            let oracle = bisection_eigenvalue(&a, j);
            assert!(
                (eigs[j] - oracle).abs() <= 1e-10 * scale.max(1.0),
                "instance {instance} (n={n}, scale={scale:.2e}): eigenvalue {j} \
                 QL {:+.15e} vs bisection {:+.15e}",
                eigs[j],
                oracle,
            );
        }
    }
}

#[test]
fn hoffman_wielandt_inequality_holds() {
    // Σ (λ_i(A) − λ_i(B))² ≤ ‖A − B‖_F² for sorted spectra: any violation
    // beyond rounding means at least one spectrum is wrong.
    let mut rng = RngState::new(0x7d09_44c8_e1b2_a653);
    for instance in 0..500 {
        let n = 2 + (instance % 19); // 2..=20
        let scale = 10.0_f64.powf(rng.uniform() * 2.0 - 1.0);
        let a = random_symmetric(n, scale, &mut rng);
        let b = random_symmetric(n, scale, &mut rng);
        let ea = symmetric_eigenvalues(&a).unwrap();
        let eb = symmetric_eigenvalues(&b).unwrap();
        let lhs: f64 = ea.iter().zip(&eb).map(|(x, y)| (x - y) * (x - y)).sum();
        let rhs = frobenius_distance(&a, &b).powi(2);
        assert!(
            lhs <= rhs * (1.0 + 1e-12) + 1e-12 * scale * scale,
            "instance {instance} (n={n}): Hoffman–Wielandt violated, {lhs:.15e} > {rhs:.15e}"
        );
    }
}

#[test]
fn cauchy_interlacing_holds_for_principal_submatrices() {
    // μ_1 … μ_{n−1} of any (n−1)-principal submatrix interlace λ_1 … λ_n:
    // λ_k ≤ μ_k ≤ λ_{k+1}.
    let mut rng = RngState::new(0x3fb8_12d7_66ce_09a4);
    for instance in 0..500 {
        let n = 2 + (instance % 19);
        let scale = 10.0_f64.powf(rng.uniform() * 2.0 - 1.0);
        let a = random_symmetric(n, scale, &mut rng);
        let lambda = symmetric_eigenvalues(&a).unwrap();
        let cut = (rng.below(n as u64)) as usize;
        let b = principal_submatrix(&a, cut).unwrap();
        let mu = symmetric_eigenvalues(&b).unwrap();
        let slack = 1e-10 * scale.max(1.0);
        for k in 0..n - 1 {
            assert!(
                lambda[k] - slack <= mu[k] && mu[k] <= lambda[k + 1] + slack,
                "instance {instance} (n={n}, cut={cut}): interlacing violated at k={k}: \
                 {:+.6e} ≤ {:+.6e} ≤ {:+.6e}",
                lambda[k],
                mu[k],
                lambda[k + 1],
            );
        }
    }
}

#[test]
fn weyl_perturbation_bound_holds() {
    // max_i |λ_i(A+E) − λ_i(A)| ≤ ‖E‖₂ ≤ ‖E‖_F.
    let mut rng = RngState::new(0xa1c5_3e88_f042_bd19);
    for instance in 0..200 {
        let n = 2 + (instance % 19);
        let a = random_symmetric(n, 1.0, &mut rng);
        let e = random_symmetric(n, 1e-3, &mut rng);
        let mut ape = a.clone();
        for i in 0..n {
            for j in i..n {
                ape.set(i, j, a.get(i, j) + e.get(i, j));
            }
        }
        let ea = symmetric_eigenvalues(&a).unwrap();
        let eap = symmetric_eigenvalues(&ape).unwrap();
        let bound = frobenius_norm(&e) * (1.0 + 1e-12) + 1e-12;
        for (x, y) in ea.iter().zip(&eap) {
            assert!(
                (x - y).abs() <= bound,
                "instance {instance} (n={n}): Weyl bound violated: |{x:+.6e} − {y:+.6e}| > {bound:.3e}"
            );
        }
    }
}

#[test]
fn trace_and_frobenius_norm_are_spectral_invariants() {
    // tr A = Σλ_i and ‖A‖_F² = Σλ_i²: both exact linear-algebra identities,
    // checked to rounding accuracy.
    let mut rng = RngState::new(0xc4d2_7b1e_5f90_3a86);
    for instance in 0..200 {
        let n = 2 + (instance % 19);
        let a = random_symmetric(n, 1.0, &mut rng);
        let eigs = symmetric_eigenvalues(&a).unwrap();
        let sum: f64 = eigs.iter().sum();
        let sum_sq: f64 = eigs.iter().map(|v| v * v).sum();
        let fro_sq = frobenius_norm(&a).powi(2);
        assert!(
            (sum - a.trace()).abs() <= 1e-10 * (n as f64),
            "instance {instance}: trace mismatch {sum} vs {}",
            a.trace()
        );
        assert!(
            (sum_sq - fro_sq).abs() <= 1e-9 * fro_sq.max(1.0),
            "instance {instance}: ‖·‖_F mismatch {sum_sq} vs {fro_sq}"
        );
    }
}
