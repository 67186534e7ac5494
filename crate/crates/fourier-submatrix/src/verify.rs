//! Named self-check suites behind `fsl verify`: each suite re-runs the
//! module invariants on fixed deterministic inputs and reports one line per
//! check, so a build can be validated without the test harness.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::bounds::{alpha_star, rates, BoundReport};
use crate::fourier::{centered_cond, singular_spectrum, SubmatrixSpec};
use crate::kernels::{
    dense_dft_of_samples, dkb_dft_formula, jpair_residual, verify_pair_quadrature,
    GaussianKernel, KaiserBesselKernel, PairKind, DKB_DFT_DEFAULT_MMAX,
};
use crate::sincsums::{default_grid, verify_lemma_bounds};
use crate::symmetry::condrat_check;
use crate::trials::{gaussian_trial, kb_trial};
use crate::{bounds, Result};

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Worst observed value vs. its threshold, for the report line.
    pub detail: String,
}

impl Check {
    fn max_err(name: &'static str, err: f64, tol: f64) -> Self {
        Check {
            name,
            passed: err <= tol,
            detail: format!("max error {err:.3e} (tolerance {tol:.1e})"),
        }
    }

    fn count(name: &'static str, violations: usize, total: usize) -> Self {
        Check {
            name,
            passed: violations == 0,
            detail: format!("{violations} violations in {total} cases"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Core,
    Kernels,
    Sinc,
    Symmetry,
    Bounds,
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "all" => Ok(Suite::All),
            "core" => Ok(Suite::Core),
            "kernels" => Ok(Suite::Kernels),
            "sinc" => Ok(Suite::Sinc),
            "symmetry" => Ok(Suite::Symmetry),
            "bounds" => Ok(Suite::Bounds),
            _ => Err(format!(
                "unknown suite '{s}' (expected all|core|kernels|sinc|symmetry|bounds)"
            )),
        }
    }
}

pub fn run_suite(suite: Suite) -> Result<Vec<Check>> {
    Ok(match suite {
        Suite::All => {
            let mut out = core_suite()?;
            out.extend(kernels_suite()?);
            out.extend(sinc_suite()?);
            out.extend(symmetry_suite()?);
            out.extend(bounds_suite()?);
            out
        }
        Suite::Core => core_suite()?,
        Suite::Kernels => kernels_suite()?,
        Suite::Sinc => sinc_suite()?,
        Suite::Symmetry => symmetry_suite()?,
        Suite::Bounds => bounds_suite()?,
    })
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

fn core_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let mut err: f64 = 0.0;
    for n in [4usize, 8, 16, 64] {
        let s = singular_spectrum(&SubmatrixSpec::centered(n, n, n)?);
        let root_n = (n as f64).sqrt();
        for v in &s.values {
            err = err.max((v / root_n - 1.0).abs());
        }
        err = err.max((s.cond.finite().unwrap() - 1.0).abs());
    }
    checks.push(Check::max_err("full matrix is sqrt(N)-unitary", err, 1e-12));

    // 2x2 analytic oracle: the centered 2x2 block of the size-4 matrix has
    // cond 1 + sqrt(2).
    let c = centered_cond(4, 2, 2)?.finite().unwrap();
    checks.push(Check::max_err(
        "2x2 block matches analytic cond 1+sqrt(2)",
        (c - (1.0 + 2.0f64.sqrt())).abs(),
        1e-12,
    ));

    // The singular spectrum depends only on the block size, not its position.
    let mut err: f64 = 0.0;
    for (n, p, q) in [(16usize, 5usize, 3usize), (24, 7, 7), (20, 4, 9)] {
        let base = singular_spectrum(&SubmatrixSpec::centered(n, p, q)?);
        for (dr, dc) in [(1i64, 0i64), (0, 3), (7, 11)] {
            let moved = singular_spectrum(&SubmatrixSpec::centered(n, p, q)?.translate(dr, dc));
            for (a, b) in base.values.iter().zip(&moved.values) {
                err = err.max((a - b).abs() / base.sigma1);
            }
        }
        let swapped = singular_spectrum(&SubmatrixSpec::centered(n, p, q)?.adjoint());
        for (a, b) in base.values.iter().zip(&swapped.values) {
            err = err.max((a - b).abs() / base.sigma1);
        }
    }
    checks.push(Check::max_err(
        "spectrum invariant under translation and adjoint",
        err,
        1e-12,
    ));

    Ok(checks)
}

fn kernels_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let centered = |n: usize| {
        let lo = -((n / 2) as i64);
        (0..n as i64).map(move |r| lo + r)
    };

    // Discrete Poisson identity for the periodized Gaussian, N=64.
    let g = GaussianKernel::new(2.0, 64)?;
    let peak = g.periodized_dft(0);
    let mut err: f64 = 0.0;
    for k in centered(64) {
        let dense = dense_dft_of_samples(|j| g.periodized_sample(j), 64, k);
        err = err.max((dense.re - g.periodized_dft(k)).abs() / peak);
        err = err.max(dense.im.abs() / peak);
    }
    checks.push(Check::max_err("gaussian discrete Poisson identity", err, 1e-8));

    // Same for the deplinthed Kaiser-Bessel at N=64, q=16, balanced sigma.
    let (n, q) = (64usize, 16usize);
    let sigma = PI / 2.0 * 0.5 * q as f64;
    let k = KaiserBesselKernel::new(sigma, q, true)?;
    let peak = dkb_dft_formula(&k, 0, n, DKB_DFT_DEFAULT_MMAX)?;
    let mut err: f64 = 0.0;
    for idx in centered(n) {
        let dense = dense_dft_of_samples(|j| k.position(j as f64), n, idx);
        let formula = dkb_dft_formula(&k, idx, n, DKB_DFT_DEFAULT_MMAX)?;
        err = err.max((dense.re - formula).abs() / peak);
        err = err.max(dense.im.abs() / peak);
    }
    checks.push(Check::max_err(
        "deplinthed KB discrete Poisson identity",
        err,
        1e-8,
    ));

    // Transform pairs against adaptive quadrature; the KB grids straddle the
    // cutoff frequency sigma/(2 pi) where the closed form changes branch.
    let g_grid: Vec<f64> = (0..=12).map(|i| -1.5 + 0.25 * i as f64).collect();
    let kb_cut = 3.0 / (2.0 * PI);
    let kb_grid: Vec<f64> = (0..=12).map(|i| kb_cut * (0.25 * i as f64)).collect();
    let mut err: f64 = 0.0;
    err = err.max(verify_pair_quadrature(PairKind::Gaussian, 1.5, &g_grid)?);
    err = err.max(verify_pair_quadrature(PairKind::KaiserBessel, 3.0, &kb_grid)?);
    err = err.max(verify_pair_quadrature(
        PairKind::DeplinthedKaiserBessel,
        3.0,
        &kb_grid,
    )?);
    checks.push(Check::max_err("transform pairs vs quadrature", err, 1e-8));

    // Bessel-J expansion of the KB frequency side across its cutoff.
    let mut err: f64 = 0.0;
    for b in [0.5, 2.0, 5.0] {
        for i in 0..=10 {
            err = err.max(jpair_residual(b, 0.3 * i as f64 * b)?);
        }
    }
    checks.push(Check::max_err("Bessel-J frequency expansion", err, 1e-8));

    Ok(checks)
}

fn sinc_suite() -> Result<Vec<Check>> {
    let grid = default_grid();
    let total = grid.len();
    let reports = verify_lemma_bounds(&grid, 1e-8)?;
    let violations = reports.iter().filter(|r| r.ratio > 1.0).count();
    let worst = reports.iter().map(|r| r.ratio).fold(0.0f64, f64::max);
    Ok(vec![
        Check {
            name: "warped sinc sum lemma bounds",
            passed: violations == 0 && total >= 100,
            detail: format!(
                "{violations} violations in {} checks over {total} parameter points (worst ratio {worst:.3})",
                reports.len()
            ),
        },
    ])
}

fn symmetry_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    // Worked 1x1 case inside N=4: the complementary 3x3 block has cond
    // exactly 2 = sqrt(4).
    let r = condrat_check(&SubmatrixSpec::centered(4, 1, 1)?)?;
    let err = (r.cond_d.finite().unwrap() - 2.0)
        .abs()
        .max(r.identity_residual.unwrap());
    checks.push(Check::max_err("worked complement case at N=4", err, 1e-12));

    // Exhaustive sweep of the complement identity and the four proof
    // identities over every centered block with p + q < N.
    let specs: Vec<SubmatrixSpec> = (6..=24usize)
        .step_by(3)
        .flat_map(|n| {
            (1..n).flat_map(move |p| (1..n - p).map(move |q| (n, p, q)))
        })
        .map(|(n, p, q)| SubmatrixSpec::centered(n, p, q).unwrap())
        .collect();
    let (mut id_err, mut proof_err) = (0.0f64, 0.0f64);
    let mut skipped = 0usize;
    for spec in &specs {
        let r = condrat_check(spec)?;
        let n = spec.n as f64;
        match r.identity_residual {
            Some(res) => id_err = id_err.max(res),
            None => skipped += 1,
        }
        proof_err = proof_err
            .max(r.ac_residual / n)
            .max(r.ca_residual / n)
            .max(r.dc_residual / n)
            .max(r.zero_d_residual / n);
    }
    checks.push(Check {
        name: "complement condition-ratio identity",
        passed: id_err <= 1e-9,
        detail: format!(
            "max residual {id_err:.3e} over {} specs ({skipped} overflowed)",
            specs.len()
        ),
    });
    checks.push(Check::max_err(
        "singular-value pairing proof identities",
        proof_err,
        1e-10,
    ));

    Ok(checks)
}

fn bounds_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    // Every applicable bound below the computed cond, exhaustively for small N.
    let cases: Vec<(usize, usize, usize)> = (2..=24usize)
        .flat_map(|n| (1..n).flat_map(move |p| (1..=p).map(move |q| (n, p, q))))
        .collect();
    let violations: usize = cases
        .par_iter()
        .map(|&(n, p, q)| {
            BoundReport::compute(n, p, q).map_or(1, |r| r.violations(1e-9).len())
        })
        .sum();
    checks.push(Check::count(
        "lower bounds below computed cond (exhaustive N<=24)",
        violations,
        cases.len(),
    ));

    // Trial-vector certificates sandwich sigma_min.
    let mut violations = 0usize;
    let mut total = 0usize;
    for n in [16usize, 32] {
        for p in 1..n {
            for q in 1..=p {
                let s = singular_spectrum(&SubmatrixSpec::centered(n, p, q)?);
                let slack = 1e-12 * s.sigma1;
                let ub = bounds::sigma_min_upper_bounds(n, p, q);
                for (trial, envelope) in [
                    (kb_trial(n, p, q), ub.kb),
                    (gaussian_trial(n, p, q), ub.gaussian),
                ] {
                    let Ok(t) = trial else { continue };
                    total += 1;
                    if s.sigma_min > t.ratio + slack {
                        violations += 1;
                    }
                    if let Some(e) = envelope {
                        if t.ratio > e + slack {
                            violations += 1;
                        }
                    }
                }
            }
        }
    }
    checks.push(Check::count(
        "trial ratios between sigma_min and proved envelopes",
        violations,
        total,
    ));

    // Rate identities: the KB rate doubles the Gaussian one everywhere, and
    // the corner/KB crossover sits where predicted.
    let mut err: f64 = 0.0;
    for i in 1..100usize {
        for j in 1..100usize {
            let r = rates(i as f64 / 100.0, j as f64 / 100.0)?;
            err = err.max((r.rho_kb - 2.0 * r.rho_gaussian).abs());
        }
    }
    checks.push(Check::max_err("KB rate doubles Gaussian rate", err, 1e-15));
    let a = alpha_star();
    checks.push(Check {
        name: "corner/KB rate crossover near 0.117",
        passed: (0.116..=0.118).contains(&a),
        detail: format!("alpha* = {a:.6}"),
    });

    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_parse() {
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert_eq!("sinc".parse::<Suite>().unwrap(), Suite::Sinc);
        assert!("spectral".parse::<Suite>().is_err());
    }

    #[test]
    fn core_and_symmetry_pass() {
        for suite in [Suite::Core, Suite::Symmetry] {
            let checks = run_suite(suite).unwrap();
            assert!(!checks.is_empty());
            assert!(all_passed(&checks), "{checks:?}");
        }
    }

    #[test]
    fn kernels_pass() {
        let checks = run_suite(Suite::Kernels).unwrap();
        assert!(all_passed(&checks), "{checks:?}");
    }
}
