//! Sharpness map over shape space: measured growth rate vs the best proven
//! one on a lattice of rational shapes. Writes CSV to the given path
//! (default rate_map.csv) at a small spacing; the `fsl grid` command scales
//! this to the published 1/30 lattice.

use fourier_submatrix::empirics::{rate_grid, write_grid_csv, Region};

fn main() {
    let out = std::env::args().nth(1).unwrap_or_else(|| "rate_map.csv".into());
    let cells = rate_grid(10, Region::Full, 512).unwrap();

    let file = std::fs::File::create(&out).unwrap();
    write_grid_csv(&cells, std::io::BufWriter::new(file)).unwrap();

    let measurable: Vec<_> = cells.iter().filter(|c| c.ratio.is_some()).collect();
    let sharp = measurable.iter().filter(|c| c.ratio.unwrap() < 1.2).count();
    println!(
        "{} cells, {} measurable within budget, {} with measured/proven < 1.2",
        cells.len(),
        measurable.len(),
        sharp
    );
    println!("worst ratios:");
    let mut sorted = measurable.clone();
    sorted.sort_by(|a, b| b.ratio.partial_cmp(&a.ratio).unwrap());
    for c in sorted.iter().take(5) {
        println!(
            "  ({:.1}, {:.1})  ratio {:.3}{}",
            c.rates.alpha,
            c.rates.beta,
            c.ratio.unwrap(),
            if c.diagonal { "  (diagonal: slowest convergence)" } else { "" }
        );
    }
    println!("wrote {out}");
}
