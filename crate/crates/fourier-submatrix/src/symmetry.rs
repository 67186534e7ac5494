//! Symmetry structure of the condition number over shape space: the exact
//! complement identity cond(A)/cond(D) = sqrt(1 - sigma_min(C)^2/N), its four
//! underlying singular-value identities, and the near inversion symmetry of
//! the (p, q) condition map.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::rates;
use crate::fourier::{singular_spectrum, Cond, SubmatrixSpec};
use crate::{Error, Result};

/// One verification of the complement identity on a concrete spec.
///
/// `A` is the given p x q submatrix, `D` its full complement
/// ((N-p) x (N-q), complementary rows and columns), and `C` the off-diagonal
/// block with complementary rows but A's columns.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplementReport {
    pub spec: SubmatrixSpec,
    pub cond_a: Cond,
    pub cond_d: Cond,
    pub sigma_min_c: f64,
    /// cond(A)/cond(D), absent when either overflows.
    pub lhs: Option<f64>,
    pub rhs: f64,
    pub identity_residual: Option<f64>,
    /// |sigma_min(A)^2 + sigma_max(C)^2 - N|
    pub ac_residual: f64,
    /// |sigma_max(A)^2 + sigma_min(C)^2 - N|
    pub ca_residual: f64,
    /// |sigma_min(D) - sigma_min(A)| (equality forced by the AC and DC identities)
    pub dc_residual: f64,
    /// |sigma_max(D) - sqrt(N)|
    pub zero_d_residual: f64,
}

pub fn condrat_check(spec: &SubmatrixSpec) -> Result<ComplementReport> {
    let n = spec.n as f64;
    // The singular-value pairing needs full column rank, i.e. the tall
    // orientation; the adjoint changes neither cond(A) nor cond(D).
    let spec = if spec.q > spec.p { spec.adjoint() } else { spec.clone() };
    let spec = &spec;
    let (d_spec, c_spec) = spec.complement()?;
    let a = singular_spectrum(spec);
    let d = singular_spectrum(&d_spec);
    let c = singular_spectrum(&c_spec);

    let rhs = (1.0 - c.sigma_min * c.sigma_min / n).sqrt();
    let lhs = match (a.cond.finite(), d.cond.finite()) {
        (Some(ca), Some(cd)) => Some(ca / cd),
        _ => None,
    };
    Ok(ComplementReport {
        spec: spec.clone(),
        cond_a: a.cond.clone(),
        cond_d: d.cond.clone(),
        sigma_min_c: c.sigma_min,
        lhs,
        rhs,
        identity_residual: lhs.map(|l| (l - rhs).abs()),
        ac_residual: (a.sigma_min * a.sigma_min + c.sigma1 * c.sigma1 - n).abs(),
        ca_residual: (a.sigma1 * a.sigma1 + c.sigma_min * c.sigma_min - n).abs(),
        dc_residual: (d.sigma_min - a.sigma_min).abs(),
        zero_d_residual: (d.sigma1 - n.sqrt()).abs(),
    })
}

/// One cell of the exhaustive (p, q) condition map at fixed N.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapCell {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub cond: Cond,
    /// |ln cond(p,q) - ln cond(N-p,N-q)|, absent when either side overflows
    /// or the inversion partner leaves the table.
    pub delta_inversion: Option<f64>,
}

/// cond of the centered submatrix for every 1 <= p, q <= N-1, with the
/// measured deviation from inversion symmetry (exact only asymptotically).
pub fn near_symmetry_map(n: usize) -> Result<Vec<MapCell>> {
    if !(2..=32).contains(&n) {
        return Err(Error::Domain(format!(
            "exhaustive map limited to 2 <= N <= 32, got {n}"
        )));
    }
    let conds: Vec<Cond> = (1..n)
        .flat_map(|p| (1..n).map(move |q| (p, q)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(p, q)| crate::fourier::centered_cond(n, p, q).expect("valid dims"))
        .collect();
    let at = |p: usize, q: usize| &conds[(p - 1) * (n - 1) + (q - 1)];
    let mut out = Vec::with_capacity((n - 1) * (n - 1));
    for p in 1..n {
        for q in 1..n {
            let cond = at(p, q).clone();
            let delta_inversion = match (cond.finite(), at(n - p, n - q).finite()) {
                (Some(c), Some(ci)) => Some((c.ln() - ci.ln()).abs()),
                _ => None,
            };
            out.push(MapCell { n, p, q, cond, delta_inversion });
        }
    }
    Ok(out)
}

pub fn write_map_csv<W: Write>(cells: &[MapCell], mut w: W) -> Result<()> {
    writeln!(w, "N,p,q,cond_log10,delta_inversion")?;
    for c in cells {
        let cond = match c.cond.finite() {
            Some(v) => format!("{:.10e}", v.log10()),
            None => "inf".to_string(),
        };
        let delta = match c.delta_inversion {
            Some(d) => format!("{d:.10e}"),
            None => String::new(),
        };
        writeln!(w, "{},{},{},{},{}", c.n, c.p, c.q, cond, delta)?;
    }
    Ok(())
}

/// Growth-rate corollary on the complementary region: for
/// alpha, beta > 1 - 4/(e pi) the corner rate applies at (1-alpha, 1-beta).
pub fn corollary_region(alpha: f64, beta: f64) -> Result<Option<f64>> {
    if !(0.0 < alpha && alpha < 1.0 && 0.0 < beta && beta < 1.0) {
        return Err(Error::Domain(format!(
            "corollary_region needs (alpha, beta) in (0,1)^2, got ({alpha}, {beta})"
        )));
    }
    let threshold = 1.0 - 4.0 / (std::f64::consts::E * std::f64::consts::PI);
    if alpha > threshold && beta > threshold {
        Ok(rates(1.0 - alpha, 1.0 - beta)?.rho_corner)
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn worked_one_by_one_case() {
        // N=4, A the 1x1 matrix [1] at (0,0): C is all-ones 3x1 with
        // sigma = sqrt(3), so cond(A)/cond(D) = sqrt(1 - 3/4) = 1/2 and
        // cond(D) = 2 = sqrt(N) exactly.
        let spec = SubmatrixSpec::new(4, 1, 1, 0, 0).unwrap();
        let r = condrat_check(&spec).unwrap();
        assert!((r.sigma_min_c - 3f64.sqrt()).abs() < 1e-12);
        assert!((r.lhs.unwrap() - 0.5).abs() < 1e-12);
        assert!((r.rhs - 0.5).abs() < 1e-12);
        assert!((r.cond_d.finite().unwrap() - 2.0).abs() < 1e-12);
        assert!((r.cond_a.finite().unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn random_specs_satisfy_identity_and_strict_inequality() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut tested = 0;
        while tested < 200 {
            let n = rng.gen_range(4..=24usize);
            let p = rng.gen_range(1..n - 1);
            if p + 1 >= n {
                continue;
            }
            let q = rng.gen_range(1..n - p);
            let spec = SubmatrixSpec::new(
                n,
                p,
                q,
                rng.gen_range(0..n as i64),
                rng.gen_range(0..n as i64),
            )
            .unwrap();
            let r = condrat_check(&spec).unwrap();
            let (Some(lhs), Some(resid)) = (r.lhs, r.identity_residual) else {
                continue; // overflow cell: skip, do not count
            };
            assert!(resid <= 1e-9 * lhs, "residual {resid} at {spec:?}");
            // cond(A) strictly below cond(D) whenever p + q < N.
            assert!(lhs < 1.0, "cond(A) >= cond(D) at {spec:?}");
            let tol = 1e-10 * n as f64;
            assert!(r.ac_residual <= tol, "ac {} tol {} at {:?}", r.ac_residual, tol, spec);
            assert!(r.ca_residual <= tol);
            assert!(r.dc_residual <= tol);
            assert!(r.zero_d_residual <= tol);
            tested += 1;
        }
    }

    #[test]
    fn complement_rejects_large_blocks() {
        let spec = SubmatrixSpec::centered(8, 5, 4).unwrap();
        assert!(condrat_check(&spec).is_err());
    }

    #[test]
    fn map_diagonal_symmetry_and_trivial_cell() {
        let cells = near_symmetry_map(12).unwrap();
        let at = |p: usize, q: usize| &cells[(p - 1) * 11 + (q - 1)];
        assert!((at(1, 1).cond.finite().unwrap() - 1.0).abs() < 1e-12);
        for p in 1..12 {
            for q in 1..12 {
                if let (Some(a), Some(b)) = (at(p, q).cond.finite(), at(q, p).cond.finite()) {
                    assert!((a - b).abs() <= 1e-10 * a);
                }
            }
        }
    }

    #[test]
    fn inversion_asymmetry_shrinks_with_n() {
        // Compare the same shape fractions (multiples of 1/8) at N=8 vs N=16.
        let max_delta = |n: usize, step: usize| {
            let cells = near_symmetry_map(n).unwrap();
            cells
                .iter()
                .filter(|c| c.p % step == 0 && c.q % step == 0)
                .filter_map(|c| c.delta_inversion)
                .fold(0.0f64, f64::max)
        };
        let d8 = max_delta(8, 1);
        let d16 = max_delta(16, 2);
        assert!(d16 < d8, "delta at N=16 ({d16}) should undercut N=8 ({d8})");
    }

    #[test]
    fn corollary_region_gating() {
        assert!(corollary_region(0.5, 0.5).unwrap().is_none());
        let r = corollary_region(0.95, 0.95).unwrap().unwrap();
        let direct = rates(0.05, 0.05).unwrap().rho_corner.unwrap();
        assert!((r - direct).abs() < 1e-12);
        // Threshold sits at 1 - 4/(e pi) ~ 0.532.
        assert!(corollary_region(0.54, 0.54).unwrap().is_some());
        assert!(corollary_region(0.52, 0.54).unwrap().is_none());
    }

    #[test]
    fn map_csv_format() {
        let cells = near_symmetry_map(8).unwrap();
        let mut buf = Vec::new();
        write_map_csv(&cells, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("N,p,q,cond_log10,delta_inversion\n"));
        assert_eq!(text.lines().count(), 50);
    }
}
