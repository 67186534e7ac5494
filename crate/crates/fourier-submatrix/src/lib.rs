//! Conditioning of cyclically contiguous submatrices of the DFT matrix.
//!
//! The `N`-point DFT matrix `F` has entries `exp(2*pi*i*j*k/N)` with row and
//! column indices understood mod `N` and centered on zero. While `F/sqrt(N)`
//! is unitary, its contiguous `p x q` submatrices are exponentially
//! ill-conditioned, with a growth rate governed by the shape parameters
//! `alpha = p/N` and `beta = q/N`.
//!
//! This crate provides:
//!
//! - exact singular spectra and condition numbers of such submatrices
//!   ([`fourier`]),
//! - closed-form lower bounds on the condition number with all constants
//!   explicit, together with competitor bounds and asymptotic rates
//!   ([`bounds`]),
//! - certified variational upper bounds on the smallest singular value from
//!   periodized Gaussian and deplinthed Kaiser-Bessel trial vectors
//!   ([`trials`]),
//! - the underlying transform pairs and their discrete Poisson-summation
//!   identities ([`kernels`]), and the one-sided warped sinc sums with
//!   rigorous tail control ([`sincsums`]),
//! - the exact complement identity relating a submatrix to its
//!   complementary-index submatrix ([`symmetry`]),
//! - empirical asymptotic growth-rate measurement along fixed-shape families
//!   and sharpness maps over shape space ([`empirics`]).
//!
//! See the `examples/` directory for one runnable example per capability,
//! and the `fsl` binary for a command-line front end.

pub mod bounds;
pub mod empirics;
mod error;
pub mod fourier;
pub mod kernels;
mod quad;
pub mod sincsums;
pub mod specfun;
pub mod symmetry;
pub mod trials;
pub mod verify;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
