//! The exact identity tying a block's condition number to that of its
//! complementary block, and the near-symmetric condition map it explains.

use fourier_submatrix::fourier::SubmatrixSpec;
use fourier_submatrix::symmetry::{condrat_check, corollary_region, near_symmetry_map};

fn main() {
    // cond(A) / cond(D) = sqrt(1 - sigma_min(C)^2 / N) < 1, exactly.
    for (n, p, q) in [(12usize, 5usize, 4usize), (20, 8, 6), (24, 10, 10)] {
        let r = condrat_check(&SubmatrixSpec::centered(n, p, q).unwrap()).unwrap();
        println!(
            "N={n} p={p} q={q}: cond(A)/cond(D) = {:.12} vs sqrt identity {:.12} (residual {:.1e})",
            r.lhs.unwrap(),
            r.rhs,
            r.identity_residual.unwrap()
        );
    }

    // Worked 1x1 case: the complement of a single entry of the 4-point
    // matrix is a 3x3 block with cond exactly sqrt(4) = 2.
    let r = condrat_check(&SubmatrixSpec::centered(4, 1, 1).unwrap()).unwrap();
    println!("\n1x1 inside N=4: cond(D) = {:?}", r.cond_d);

    // The full (p,q) condition map is nearly, but not exactly, symmetric
    // under (p,q) -> (N-p, N-q); the asymmetry shrinks as N grows.
    let n = 16usize;
    let map = near_symmetry_map(n).unwrap();
    let worst = map
        .iter()
        .filter_map(|c| c.delta_inversion)
        .fold(0.0f64, f64::max);
    println!("\nN={n} map: worst |ln cond(p,q) - ln cond(N-p,N-q)| = {worst:.3}");

    // Where the ratio bound is strong enough to transfer growth rates to
    // the complement shape.
    for (a, b) in [(0.6, 0.55), (0.9, 0.2)] {
        println!(
            "corollary applies at ({a},{b})? {:?}",
            corollary_region(a, b).unwrap().is_some()
        );
    }
}
