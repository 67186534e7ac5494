//! One-sided warped sinc sums with rigorous tail control, and the numerical
//! verification of every bound used in the sigma_min proofs. Writes the full
//! check table as CSV to stdout when given `--csv`.

use fourier_submatrix::sincsums::{
    default_grid, sinc_sum, verify_lemma_bounds, write_csv, SincSumParams,
};

fn main() {
    let csv = std::env::args().any(|a| a == "--csv");
    let grid = default_grid();
    // Tail tolerance 1e-6 keeps this interactive; the acceptance suite runs
    // the same grid at 1e-8 (minutes).
    let checks = verify_lemma_bounds(&grid, 1e-6).unwrap();

    if csv {
        write_csv(&checks, std::io::stdout().lock()).unwrap();
        return;
    }

    // One sum in detail: the value comes with a certified tail bound.
    let p = SincSumParams::new(10.0, 2.0, 6.0).unwrap();
    let (value, tail) = sinc_sum(&p, 1e-8).unwrap();
    println!(
        "S(a=10, sigma=2, b=6) = {value:.12e}  (tail bound {tail:.1e}, proved envelope {:.3})",
        5.0 / (2.0 * p.a * p.alpha().sqrt()) + 5.0
    );

    // The whole grid: worst observed/bound ratio per lemma.
    let mut worst: std::collections::BTreeMap<&str, f64> = Default::default();
    for c in &checks {
        let w = worst.entry(c.lemma_id.as_str()).or_insert(0.0);
        *w = w.max(c.ratio);
    }
    println!("\n{} checks over {} parameter points; worst observed/bound:", checks.len(), grid.len());
    for (id, r) in worst {
        println!("  {id:<15} {r:.3}");
    }
}
