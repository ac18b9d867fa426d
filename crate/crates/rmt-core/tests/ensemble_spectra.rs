//! Statistical integration tests: sampled spectra against closed-form
//! limit laws and exact finite-n moment formulas.
//!
//! Every test fixes its seed, so the asserted bounds are deterministic
//! statements about specific draws; the bounds themselves sit several
//! standard errors beyond the expected fluctuation scale.

use rmt_core::combinatorics::{exact_trace_moment, gaussian_moment_table};
use rmt_core::ensembles::{
    sample_beta_tridiagonal, sample_goe, sample_gue, sample_wigner, sample_wishart,
    EntryDistribution,
};
use rmt_core::laws::{semicircle_cdf, semicircle_stieltjes, MarchenkoPasturLaw};
use rmt_core::linalg::{
    hermitian_eigenvalues, symmetric_eigenvalues, tridiagonal_eigenvalues,
};
use rmt_core::num_complex::Complex64;
use rmt_core::rng::RngState;
use rmt_core::spectral::{ks_statistic, stieltjes_transform, EmpiricalMeasure};

fn measure_of(values: &[f64]) -> EmpiricalMeasure {
    let w = 1.0 / values.len() as f64;
    EmpiricalMeasure::from_atoms(values.iter().map(|&x| (x, w)).collect()).unwrap()
}

fn scaled_moment(eigs: &[f64], n: usize, k: i32) -> f64 {
    let s = 1.0 / (n as f64).sqrt();
    eigs.iter().map(|&l| (l * s).powi(k)).sum::<f64>() / n as f64
}

#[test]
fn wigner_esd_is_ks_close_to_the_semicircle() {
    let mut rng = RngState::new(0x6f02_bb71_c9e4_5ad8);
    let n = 600;
    let x = sample_wigner(n, EntryDistribution::Gaussian, &mut rng).unwrap();
    let mut eigs = symmetric_eigenvalues(&x).unwrap();
    eigs.sort_unstable_by(f64::total_cmp);
    let ks = ks_statistic(&eigs, semicircle_cdf);
    assert!(ks < 0.05, "KS(ESD, semicircle) = {ks:.4} at n = {n}");
}

#[test]
fn rademacher_and_uniform_wigner_share_the_semicircle_limit() {
    // Universality at the ESD level: the limit is entry-law independent.
    let mut rng = RngState::new(0x28c9_4de0_f1a7_63b5);
    let n = 500;
    for dist in [EntryDistribution::Rademacher, EntryDistribution::Uniform] {
        let x = sample_wigner(n, dist, &mut rng).unwrap();
        let mut eigs = symmetric_eigenvalues(&x).unwrap();
        eigs.sort_unstable_by(f64::total_cmp);
        let ks = ks_statistic(&eigs, semicircle_cdf);
        assert!(ks < 0.06, "KS = {ks:.4} for {dist:?}");
    }
}

#[test]
fn wishart_esd_is_ks_close_to_marchenko_pastur() {
    let mut rng = RngState::new(0x4ba6_17f3_88d0_2c9e);
    let (n, m) = (400, 200);
    let w = sample_wishart(n, m, &mut rng).unwrap();
    let mut eigs = symmetric_eigenvalues(&w).unwrap();
    eigs.sort_unstable_by(f64::total_cmp);
    let mp = MarchenkoPasturLaw::new(m as f64 / n as f64).unwrap();
    let ks = ks_statistic(&eigs, |x| mp.cdf(x));
    assert!(ks < 0.05, "KS(ESD, MP(1/2)) = {ks:.4}");
}

#[test]
fn beta_two_tridiagonal_matches_dense_gue_moments() {
    // The β = 2 tridiagonal model has exactly the GUE eigenvalue density
    // (unit-entries normalization), so the ÷√n spectral moments of the two
    // samplers must agree within Monte-Carlo error. Var ⟨x²⟩ ≈ c/n² puts
    // the SE of a 40-rep mean near 2e−3; the bands sit at ~10 SE.
    let n = 150;
    let reps = 40;
    let (mut t2, mut t4) = (0.0, 0.0);
    let (mut g2, mut g4) = (0.0, 0.0);
    for rep in 0..reps {
        let mut rng = RngState::with_stream(0x91c2_e84a_0d5b_73f6, rep);
        let t = sample_beta_tridiagonal(n, 2.0, &mut rng).unwrap();
        let eigs = tridiagonal_eigenvalues(&t).unwrap();
        t2 += scaled_moment(&eigs, n, 2);
        t4 += scaled_moment(&eigs, n, 4);

        let mut rng = RngState::with_stream(0x5d38_fa06_c714_29eb, rep);
        let h = sample_gue(n, &mut rng).unwrap();
        let eigs = hermitian_eigenvalues(&h).unwrap();
        g2 += scaled_moment(&eigs, n, 2);
        g4 += scaled_moment(&eigs, n, 4);
    }
    let r = reps as f64;
    assert!(
        (t2 / r - g2 / r).abs() < 0.02,
        "⟨x²⟩: tridiagonal {:.4} vs GUE {:.4}",
        t2 / r,
        g2 / r
    );
    assert!(
        (t4 / r - g4 / r).abs() < 0.06,
        "⟨x⁴⟩: tridiagonal {:.4} vs GUE {:.4}",
        t4 / r,
        g4 / r
    );
}

#[test]
fn beta_one_tridiagonal_matches_dense_goe_moments() {
    let n = 150;
    let reps = 40;
    let (mut t2, mut g2) = (0.0, 0.0);
    for rep in 0..reps {
        let mut rng = RngState::with_stream(0x0be2_66d1_4af9_8305, rep);
        let t = sample_beta_tridiagonal(n, 1.0, &mut rng).unwrap();
        let eigs = tridiagonal_eigenvalues(&t).unwrap();
        t2 += scaled_moment(&eigs, n, 2);

        let mut rng = RngState::with_stream(0xd671_03b8_92ce_4f1a, rep);
        let x = sample_goe(n, &mut rng).unwrap();
        let eigs = symmetric_eigenvalues(&x).unwrap();
        g2 += scaled_moment(&eigs, n, 2);
    }
    let r = reps as f64;
    assert!(
        (t2 / r - g2 / r).abs() < 0.02,
        "⟨x²⟩: tridiagonal {:.4} vs GOE {:.4}",
        t2 / r,
        g2 / r
    );
}

#[test]
fn monte_carlo_trace_moments_match_the_exact_word_sum() {
    // exact_trace_moment enumerates all n^k index words and factorizes
    // expectations over entry moments — an oracle with no sampling and no
    // eigensolver. Monte Carlo over actual samples must agree within a
    // few standard errors (asserted at 5 SE, self-calibrated).
    let n = 4;
    let k = 4;
    let reps = 40_000;
    for (dist, table) in [
        (EntryDistribution::Gaussian, gaussian_moment_table(k)),
        (EntryDistribution::Rademacher, vec![1.0, 0.0, 1.0, 0.0, 1.0]),
    ] {
        let exact = exact_trace_moment(n, k, &table).unwrap();
        let mut values = Vec::with_capacity(reps);
        for rep in 0..reps {
            let mut rng = RngState::with_stream(0x7a51_c0d9_3eb8_62f4, rep as u64);
            let x = sample_wigner(n, dist, &mut rng).unwrap();
            let eigs = symmetric_eigenvalues(&x).unwrap();
            values.push(eigs.iter().map(|l| l.powi(k as i32)).sum::<f64>() / n as f64);
        }
        let mean = values.iter().sum::<f64>() / reps as f64;
        let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>()
            / (reps - 1) as f64;
        let se = (var / reps as f64).sqrt();
        assert!(
            (mean - exact).abs() < 5.0 * se + 1e-9,
            "{dist:?}: MC {mean:.5} vs exact {exact:.5} (SE {se:.5})"
        );
    }
}

#[test]
fn largest_eigenvalue_concentrates_below_the_edge() {
    // P(λ_max > 2 + δ) → 0: across 30 draws at n = 300 the largest
    // eigenvalue stays well under 2.2 (TW fluctuations are O(n^{−2/3})).
    for rep in 0..30 {
        let mut rng = RngState::with_stream(0xfd28_9a40_517c_e6b3, rep);
        let n = 300;
        let x = sample_wigner(n, EntryDistribution::Gaussian, &mut rng).unwrap();
        let eigs = symmetric_eigenvalues(&x).unwrap();
        let lambda_max = eigs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        assert!(
            lambda_max < 2.2,
            "rep {rep}: λ_max = {lambda_max:.4} escaped the edge window"
        );
    }
}

#[test]
fn sampled_stieltjes_transform_approaches_the_semicircle_transform() {
    let mut rng = RngState::new(0x83d5_9f21_b06e_47ca);
    let n = 500;
    let x = sample_wigner(n, EntryDistribution::Gaussian, &mut rng).unwrap();
    let eigs = symmetric_eigenvalues(&x).unwrap();
    let mu = measure_of(&eigs);
    for z in [
        Complex64::new(0.0, 1.0),
        Complex64::new(1.0, 0.5),
        Complex64::new(-2.5, 0.3),
    ] {
        let sampled = stieltjes_transform(&mu, z).unwrap();
        let exact = semicircle_stieltjes(z).unwrap();
        assert!(
            (sampled - exact).norm() < 0.03,
            "g_n(z) = {sampled} vs s(z) = {exact} at z = {z}"
        );
    }
}
