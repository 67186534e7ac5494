//! The transform pairs behind the trial vectors, checked two independent
//! ways: adaptive quadrature of the continuous pair, and the discrete
//! Poisson-summation identity for the sampled, periodized kernels.

use std::f64::consts::PI;

use fourier_submatrix::kernels::{
    dense_dft_of_samples, dkb_dft_formula, verify_pair_quadrature, GaussianKernel,
    KaiserBesselKernel, PairKind, DKB_DFT_DEFAULT_MMAX,
};

fn main() {
    // Continuous pairs vs quadrature, across the Kaiser-Bessel cutoff at
    // omega = sigma / 2 pi where the closed form switches branch.
    let sigma = 3.0;
    let cut = sigma / (2.0 * PI);
    let grid: Vec<f64> = (0..=12).map(|i| cut * 0.25 * i as f64).collect();
    for kind in [
        PairKind::Gaussian,
        PairKind::KaiserBessel,
        PairKind::DeplinthedKaiserBessel,
    ] {
        let err = verify_pair_quadrature(kind, sigma, &grid).unwrap();
        println!("{kind:?}: max quadrature error {err:.2e}");
    }

    // Discrete identity: the dense DFT of the periodized Gaussian samples
    // equals the periodized closed-form transform, to machine precision.
    let n = 64usize;
    let g = GaussianKernel::new(2.5, n).unwrap();
    let peak = g.periodized_dft(0);
    let gauss_err = (0..n as i64)
        .map(|k| {
            let k = k - (n / 2) as i64;
            let dense = dense_dft_of_samples(|j| g.periodized_sample(j), n, k);
            (dense.re - g.periodized_dft(k)).abs().max(dense.im.abs()) / peak
        })
        .fold(0.0f64, f64::max);
    println!("gaussian discrete identity: max scaled error {gauss_err:.2e}");

    // Same for the deplinthed Kaiser-Bessel, whose transform is a sinh-like
    // closed form below cutoff and an oscillatory one above.
    let q = 16usize;
    let k = KaiserBesselKernel::new(PI / 2.0 * 0.5 * q as f64, q, true).unwrap();
    let peak = dkb_dft_formula(&k, 0, n, DKB_DFT_DEFAULT_MMAX).unwrap();
    let dkb_err = (0..n as i64)
        .map(|idx| {
            let idx = idx - (n / 2) as i64;
            let dense = dense_dft_of_samples(|j| k.position(j as f64), n, idx);
            let formula = dkb_dft_formula(&k, idx, n, DKB_DFT_DEFAULT_MMAX).unwrap();
            (dense.re - formula).abs().max(dense.im.abs()) / peak
        })
        .fold(0.0f64, f64::max);
    println!("deplinthed KB discrete identity: max scaled error {dkb_err:.2e}");
}
