//! Closed-form condition-number lower bounds, smallest-singular-value upper
//! bounds, asymptotic growth rates, and the Bessel–Chebyshev low-rank
//! expansion that produces the corner-regime bound.
//!
//! Every evaluator symmetrizes `(p, q)` internally (the adjoint has the same
//! singular values), checks its own hypotheses, and reports `None` when they
//! fail — bounds are never silently extrapolated outside their proofs.

use faer::c64;
use serde::{Deserialize, Serialize};

use crate::fourier::{singular_values, Cond, SingularSpectrum, SubmatrixSpec};
use crate::specfun::{bessel_i0, bessel_i0_ln, bessel_jn, chebyshev_t, sinc};
use crate::trials::{p_bar, q_bar};
use crate::{Error, Result};

const FRAC_4_E_PI: f64 = 4.0 / (std::f64::consts::E * std::f64::consts::PI);

fn symmetrize(p: usize, q: usize) -> (usize, usize) {
    (p.max(q), p.min(q))
}

fn pow10(log10: f64) -> f64 {
    // f64::INFINITY past the representable range; the log10 value is the
    // reliable channel there.
    10f64.powf(log10)
}

/// log10 of the Gaussian-trial condition lower bound, `None` outside
/// `2 < q <= p < N-2` (after symmetrization).
fn gaussian_log10(n: usize, p: usize, q: usize) -> Option<f64> {
    let (p, q) = symmetrize(p, q);
    if !(2 < q && q <= p && p < n.saturating_sub(2)) {
        return None;
    }
    let qb = q_bar(q) as f64;
    let frac = 1.0 - p_bar(p, n) as f64 / n as f64;
    let ln = 0.5 * (p as f64).ln() + 0.25 * frac.ln()
        - (6.0 * qb.powf(0.25) * (n as f64).sqrt()).ln()
        + std::f64::consts::FRAC_PI_4 * frac * qb;
    Some(ln / std::f64::consts::LN_10)
}

/// log10 of the Kaiser–Bessel condition lower bound, `None` unless
/// `1 <= q <= p < N`.
fn kb_log10(n: usize, p: usize, q: usize) -> Option<f64> {
    let (p, q) = symmetrize(p, q);
    if !(1 <= q && q <= p && p < n) {
        return None;
    }
    let sigma = std::f64::consts::FRAC_PI_2 * (1.0 - p as f64 / n as f64) * q as f64;
    let ln_num = ln_i0_minus_1(sigma);
    let denom = 2.0 * ((n as f64 / p as f64).sqrt() + 6.0 * q as f64);
    Some((ln_num - denom.ln()) / std::f64::consts::LN_10)
}

/// `ln(I0(x) - 1)`; for huge arguments the `-1` is far below rounding.
fn ln_i0_minus_1(x: f64) -> f64 {
    if x <= 30.0 {
        (bessel_i0(x).expect("x <= 30 in range") - 1.0).ln()
    } else {
        bessel_i0_ln(x).expect("x >= 0")
    }
}

/// log10 of the corner (small-p, small-q) condition lower bound, `None`
/// outside `1 < q <= p < 4N/(e pi) + 1`.
fn corner_log10(n: usize, p: usize, q: usize) -> Option<f64> {
    let (p, q) = symmetrize(p, q);
    if q <= 1 || (p as f64) >= FRAC_4_E_PI * n as f64 + 1.0 {
        return None;
    }
    let x = (p as f64 - 1.0) / (FRAC_4_E_PI * n as f64);
    let ln = (1.0 - x).ln() - (2.0 * (q as f64).sqrt()).ln() + (q as f64 - 1.0) * (1.0 / x).ln();
    Some(ln / std::f64::consts::LN_10)
}

/// Condition lower bound from the balanced periodized-Gaussian trial vector.
pub fn bound_gaussian(n: usize, p: usize, q: usize) -> Option<f64> {
    gaussian_log10(n, p, q).map(pow10)
}

/// Condition lower bound from the deplinthed Kaiser–Bessel trial vector.
pub fn bound_kb(n: usize, p: usize, q: usize) -> Option<f64> {
    kb_log10(n, p, q).map(pow10)
}

/// Condition lower bound from the Bessel–Chebyshev low-rank expansion,
/// strongest when both p/N and q/N are small.
pub fn bound_corner(n: usize, p: usize, q: usize) -> Option<f64> {
    corner_log10(n, p, q).map(pow10)
}

/// The three closed-form upper bounds on the smallest singular value.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SigmaMinUpperBounds {
    pub gaussian: Option<f64>,
    pub kb: Option<f64>,
    pub corner: Option<f64>,
}

pub fn sigma_min_upper_bounds(n: usize, p: usize, q: usize) -> SigmaMinUpperBounds {
    let (p, q) = symmetrize(p, q);
    let gaussian = if 2 < q && q <= p && p < n.saturating_sub(2) {
        let qb = q_bar(q) as f64;
        let frac = 1.0 - p_bar(p, n) as f64 / n as f64;
        Some(
            6.0 * (qb / frac).powf(0.25)
                * (n as f64).sqrt()
                * (-std::f64::consts::FRAC_PI_4 * qb * frac).exp(),
        )
    } else {
        None
    };
    let kb = if p < n {
        let alpha = p as f64 / n as f64;
        let sigma = std::f64::consts::FRAC_PI_2 * (1.0 - alpha) * q as f64;
        let ln = (2.0 * (n as f64).sqrt() * (1.0 + 6.0 * alpha.sqrt() * q as f64)).ln()
            - ln_i0_minus_1(sigma);
        Some(ln.exp())
    } else {
        None
    };
    let corner = if q > 1 && (p as f64) < FRAC_4_E_PI * n as f64 + 1.0 {
        let x = (p as f64 - 1.0) / (FRAC_4_E_PI * n as f64);
        Some(2.0 * ((p * q) as f64).sqrt() / (1.0 - x) * x.powi(q as i32 - 1))
    } else {
        None
    };
    SigmaMinUpperBounds { gaussian, kb, corner }
}

/// Phase matrix `e^{i x_j t_k}` on the proof's tensor grids
/// `x_j = (-1 + 2j/(p-1)) W`, `t_k = -1 + 2k/(q-1)`, `W = pi (q-1)(p-1) / 2N`.
/// It equals the centered submatrix up to diagonal unimodular factors, so the
/// singular values agree.
pub fn phase_matrix(n: usize, p: usize, q: usize) -> Result<faer::Mat<c64>> {
    if !(1 < q && q <= p) {
        return Err(Error::Hypothesis(format!(
            "phase matrix needs 1 < q <= p (got p={p}, q={q})"
        )));
    }
    let w = std::f64::consts::PI * ((q - 1) * (p - 1)) as f64 / (2.0 * n as f64);
    Ok(faer::Mat::from_fn(p, q, |j, k| {
        let x = (-1.0 + 2.0 * j as f64 / (p as f64 - 1.0)) * w;
        let t = -1.0 + 2.0 * k as f64 / (q as f64 - 1.0);
        c64::from_polar(1.0, x * t)
    }))
}

/// Truncated Bessel–Chebyshev expansion of the phase matrix:
/// `sum_{m<nterms} u_m v_m^T` with `u_0 = J_0(x_j)`, `u_m = 2 i^m J_m(x_j)`,
/// `v_m = T_m(t_k)`. Returns the approximation and the operator-norm residual
/// against the exactly built phase matrix.
pub fn chebyshev_lowrank(
    n: usize,
    p: usize,
    q: usize,
    nterms: usize,
) -> Result<(faer::Mat<c64>, f64)> {
    let a = phase_matrix(n, p, q)?;
    let w = std::f64::consts::PI * ((q - 1) * (p - 1)) as f64 / (2.0 * n as f64);
    if (q as f64 - 1.0) <= w {
        return Err(Error::Domain(format!(
            "expansion tail diverges: need q-1 > W (q={q}, W={w:.3})"
        )));
    }
    let mut approx = faer::Mat::<c64>::zeros(p, q);
    for m in 0..nterms {
        let i_pow = match m % 4 {
            0 => c64::new(1.0, 0.0),
            1 => c64::new(0.0, 1.0),
            2 => c64::new(-1.0, 0.0),
            _ => c64::new(0.0, -1.0),
        };
        let scale = if m == 0 { 1.0 } else { 2.0 };
        for j in 0..p {
            let x = (-1.0 + 2.0 * j as f64 / (p as f64 - 1.0)) * w;
            let u = i_pow * (scale * bessel_jn(m, x)?);
            for k in 0..q {
                let t = -1.0 + 2.0 * k as f64 / (q as f64 - 1.0);
                approx[(j, k)] += u * chebyshev_t(m, t)?;
            }
        }
    }
    let diff = faer::Mat::from_fn(p, q, |j, k| a[(j, k)] - approx[(j, k)]);
    let residual = singular_values(&diff)[0];
    Ok((approx, residual))
}

/// Exponential growth rates cond ~ e^{rho N} along the shape ray
/// (p, q) = (alpha N, beta N).
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct RateSet {
    pub alpha: f64,
    pub beta: f64,
    pub rho_gaussian: f64,
    pub rho_kb: f64,
    pub rho_corner: Option<f64>,
    pub rho_prolate: f64,
    pub rho_moitra: f64,
    /// Best *proven* rate: max of the KB and corner theorem rates (the
    /// Gaussian and Moitra rates are strictly dominated by KB; the prolate
    /// rate is an asymptotic description, not a proved lower bound).
    pub rho_best: f64,
}

pub fn rates(alpha: f64, beta: f64) -> Result<RateSet> {
    if !(0.0 < alpha && alpha < 1.0 && 0.0 < beta && beta < 1.0) {
        return Err(Error::Domain(format!(
            "rates need (alpha, beta) in (0,1)^2, got ({alpha}, {beta})"
        )));
    }
    let lo = alpha.min(beta);
    let hi = alpha.max(beta);
    let gap = lo - alpha * beta;
    let rho_gaussian = std::f64::consts::FRAC_PI_4 * gap;
    let rho_kb = std::f64::consts::FRAC_PI_2 * gap;
    let rho_corner = (hi < FRAC_4_E_PI).then(|| lo * (FRAC_4_E_PI / hi).ln());
    let rho_prolate = lo * (1.0 / (std::f64::consts::FRAC_PI_4 * hi).tan()).ln();
    let rho_moitra = 0.5 * std::f64::consts::LN_2 * gap;
    Ok(RateSet {
        alpha,
        beta,
        rho_gaussian,
        rho_kb,
        rho_corner,
        rho_prolate,
        rho_moitra,
        rho_best: rho_corner.map_or(rho_kb, |c| c.max(rho_kb)),
    })
}

/// Shape fraction where the corner and KB rates cross on the diagonal's
/// small-alpha side: the root of `log(4/(e pi a)) = (pi/2)(1 - a)`.
pub fn alpha_star() -> f64 {
    let f = |a: f64| (FRAC_4_E_PI / a).ln() - std::f64::consts::FRAC_PI_2 * (1.0 - a);
    let (mut lo, mut hi) = (1e-6, FRAC_4_E_PI - 1e-9);
    debug_assert!(f(lo) > 0.0 && f(hi) < 0.0);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Li–Liao style smallest-singular-value upper bound `sqrt(8pq)(pi alpha)^{q-1}`
/// with `alpha = p/N`, plus a flag for its stated region of validity
/// (roughly `alpha <= 4^{-q} / sqrt(p)`).
pub fn liliao_bound(n: usize, p: usize, q: usize) -> (f64, bool) {
    let (p, q) = symmetrize(p, q);
    let alpha = p as f64 / n as f64;
    let value = (8.0 * (p * q) as f64).sqrt()
        * (std::f64::consts::PI * alpha).powi(q as i32 - 1);
    let valid = alpha <= 4f64.powi(-(q as i32)) / (p as f64).sqrt();
    (value, valid)
}

/// Condition lower bound for the half-size (p = q = N/2) submatrix:
/// `sqrt(N) 2^{N/4 - 1}`.
pub fn pan_bound(n: usize) -> Result<f64> {
    if n % 2 != 0 {
        return Err(Error::Hypothesis(format!(
            "half-size bound needs even N, got {n}"
        )));
    }
    Ok((n as f64).sqrt() * 2f64.powf(n as f64 / 4.0 - 1.0))
}

/// Prolate matrix with entries `alpha sinc(pi alpha (j-k))` — the N -> infinity
/// limit of `A^H A / N` for a tall centered submatrix with q fixed and
/// p = alpha N.
pub fn prolate_matrix(q: usize, alpha: f64) -> faer::Mat<f64> {
    faer::Mat::from_fn(q, q, |j, k| {
        alpha * sinc(std::f64::consts::PI * alpha * (j as f64 - k as f64))
    })
}

/// Slepian's large-q asymptote for the smallest prolate eigenvalue:
/// `2^{9/4} sqrt(pi q) (1 - cos pi alpha)^{1/4} (1 + cos pi alpha)^{-1/2}
/// theta^{-q}` with `theta = cot^2(pi alpha / 4)`.
pub fn slepian_lambda0(q: usize, alpha: f64) -> f64 {
    let c = (std::f64::consts::PI * alpha).cos();
    let theta = 1.0 / (std::f64::consts::FRAC_PI_4 * alpha).tan().powi(2);
    2f64.powf(2.25) * (std::f64::consts::PI * q as f64).sqrt() * (1.0 - c).powf(0.25)
        / (1.0 + c).sqrt()
        * theta.powi(-(q as i32))
}

/// Every closed-form bound evaluated on one centered submatrix, alongside the
/// computed spectrum. log10 companions stay finite when a value overflows f64.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub cond_computed: Cond,
    pub sigma1: f64,
    pub sigma_min: f64,
    pub lb_gaussian: Option<f64>,
    pub lb_gaussian_log10: Option<f64>,
    pub lb_kb: Option<f64>,
    pub lb_kb_log10: Option<f64>,
    pub lb_corner: Option<f64>,
    pub lb_corner_log10: Option<f64>,
    pub lb_pan: Option<f64>,
    pub lb_pan_log10: Option<f64>,
    pub lb_liliao_derived: Option<f64>,
    pub lb_liliao_derived_log10: Option<f64>,
    pub ub_sigma_min_gaussian: Option<f64>,
    pub ub_sigma_min_kb: Option<f64>,
    pub ub_sigma_min_corner: Option<f64>,
    pub best_lb: f64,
    pub best_lb_log10: f64,
}

impl BoundReport {
    pub fn compute(n: usize, p: usize, q: usize) -> Result<Self> {
        let spec = SubmatrixSpec::centered(n, p, q)?;
        let SingularSpectrum { sigma1, sigma_min, cond, .. } =
            crate::fourier::singular_spectrum(&spec);

        let lb_gaussian_log10 = gaussian_log10(n, p, q);
        let lb_kb_log10 = kb_log10(n, p, q);
        let lb_corner_log10 = corner_log10(n, p, q);
        // The half-size bound only speaks about p = q = N/2.
        let lb_pan = (n % 2 == 0 && p == n / 2 && q == n / 2).then(|| pan_bound(n).unwrap());
        // sigma1 >= sqrt(p) converts the Li–Liao sigma_min upper bound into a
        // condition lower bound; only trusted inside its validity region.
        let (ptall, qtall) = symmetrize(p, q);
        let (ll, ll_valid) = liliao_bound(n, ptall, qtall);
        let lb_liliao_derived = ll_valid.then(|| (ptall as f64).sqrt() / ll);

        let ubs = sigma_min_upper_bounds(n, p, q);
        let mut best_log10 = f64::NEG_INFINITY;
        for l in [
            lb_gaussian_log10,
            lb_kb_log10,
            lb_corner_log10,
            lb_pan.map(f64::log10),
            lb_liliao_derived.map(f64::log10),
        ]
        .into_iter()
        .flatten()
        {
            best_log10 = best_log10.max(l);
        }
        Ok(BoundReport {
            n,
            p,
            q,
            cond_computed: cond,
            sigma1,
            sigma_min,
            lb_gaussian: lb_gaussian_log10.map(pow10),
            lb_gaussian_log10,
            lb_kb: lb_kb_log10.map(pow10),
            lb_kb_log10,
            lb_corner: lb_corner_log10.map(pow10),
            lb_corner_log10,
            lb_pan,
            lb_pan_log10: lb_pan.map(f64::log10),
            lb_liliao_derived,
            lb_liliao_derived_log10: lb_liliao_derived.map(f64::log10),
            ub_sigma_min_gaussian: ubs.gaussian,
            ub_sigma_min_kb: ubs.kb,
            ub_sigma_min_corner: ubs.corner,
            best_lb: pow10(best_log10),
            best_lb_log10: best_log10,
        })
    }

    /// Lower bounds vs computed cond, upper bounds vs computed sigma_min.
    /// Returns the list of violated bound names (empty means all dominated).
    pub fn violations(&self, slack: f64) -> Vec<&'static str> {
        let mut out = Vec::new();
        if let Some(c) = self.cond_computed.finite() {
            let cl = c.log10();
            for (name, lb) in [
                ("lb_gaussian", self.lb_gaussian_log10),
                ("lb_kb", self.lb_kb_log10),
                ("lb_corner", self.lb_corner_log10),
                ("lb_pan", self.lb_pan_log10),
                ("lb_liliao_derived", self.lb_liliao_derived_log10),
            ] {
                if let Some(l) = lb {
                    if l > cl + slack {
                        out.push(name);
                    }
                }
            }
        }
        for (name, ub) in [
            ("ub_sigma_min_gaussian", self.ub_sigma_min_gaussian),
            ("ub_sigma_min_kb", self.ub_sigma_min_kb),
            ("ub_sigma_min_corner", self.ub_sigma_min_corner),
        ] {
            if let Some(u) = ub {
                if u < self.sigma_min * (1.0 - 1e-10) {
                    out.push(name);
                }
            }
        }
        out
    }
}
