//! Measuring the true exponential growth rate of cond along a fixed-shape
//! family, and comparing it to the proven lower-bound rates.

use fourier_submatrix::bounds::rates;
use fourier_submatrix::empirics::{empirical_rate, RationalShape};

fn main() {
    for (an, ad, bn, bd) in [(1usize, 2usize, 1usize, 2usize), (1, 2, 1, 4), (2, 3, 1, 6)] {
        let shape = RationalShape::new(an, ad, bn, bd).unwrap();
        let e = empirical_rate(&shape, 16.0).unwrap();
        let rs = rates(shape.alpha(), shape.beta()).unwrap();
        println!("shape ({an}/{ad}, {bn}/{bd}), family step {}:", shape.step());
        println!("  ln cond = {:.3} at N = {}", e.cond_hi_log, e.n_hi);
        println!("  ln cond = {:.3} at N = {}", e.cond_lo_log, e.n_lo);
        println!(
            "  measured rate {:.4} +/- {:.4}; proven {:.4} (ratio {:.3}); prolate prediction {:.4}",
            e.rho_tilde,
            e.accuracy_est,
            rs.rho_best,
            e.rho_tilde / rs.rho_best,
            rs.rho_prolate
        );
    }
}
