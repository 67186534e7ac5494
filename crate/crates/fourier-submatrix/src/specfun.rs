//! Special functions used throughout the crate: sinc and its warped variant,
//! modified Bessel `I0`, Bessel `J_n`, Chebyshev `T_n`, the frequency warping
//! deviation `R(x) = x - sqrt(x^2 - sigma^2)`, and Siegel's bound function
//! `g(z)`.
//!
//! All functions are pure and deterministic. Accuracy targets: `sinc` and
//! `warped_sinc` to relative 1e-14, `I0` to relative 1e-13, `J_n` to absolute
//! 1e-13 (Miller backward recurrence, stable for the `n > x` regime).

use crate::{Error, Result};

/// `sinc(x) = sin(x)/x`, with `sinc(0) = 1`.
///
/// A degree-7 Taylor polynomial is used for `|x| < 1e-2` to avoid
/// cancellation near the removable singularity.
pub fn sinc(x: f64) -> f64 {
    let ax = x.abs();
    if ax < 1e-2 {
        let x2 = x * x;
        1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0))
    } else {
        x.sin() / x
    }
}

/// `sinh(s)/s` with the removable singularity filled.
fn sinhc(s: f64) -> f64 {
    let s2 = s * s;
    if s.abs() < 1e-2 {
        1.0 + s2 / 6.0 * (1.0 + s2 / 20.0 * (1.0 + s2 / 42.0))
    } else {
        s.sinh() / s
    }
}

/// Warped sinc: `sinc(sqrt(x^2 - sigma^2))` for `x >= sigma`, analytically
/// continued to `sinh(sqrt(sigma^2 - x^2))/sqrt(sigma^2 - x^2)` for
/// `x < sigma`. Continuous across the cutoff `x = sigma`.
///
/// Below cutoff the value is exponentially large, around `e^sigma / sigma`;
/// at and beyond cutoff it is bounded by 1 in magnitude.
pub fn warped_sinc(x: f64, sigma: f64) -> f64 {
    debug_assert!(x >= 0.0 && sigma >= 0.0);
    if x >= sigma {
        // (x - sigma)(x + sigma) avoids cancellation for x near sigma.
        sinc(((x - sigma) * (x + sigma)).sqrt())
    } else {
        sinhc(((sigma - x) * (sigma + x)).sqrt())
    }
}

/// Modified Bessel function `I0(x)` for `0 <= x <= 700`.
///
/// Power series for `x <= 15`, asymptotic expansion
/// `e^x / sqrt(2 pi x) * (1 + 1/8x + ...)` beyond.
pub fn bessel_i0(x: f64) -> Result<f64> {
    if !(0.0..=700.0).contains(&x) {
        return Err(Error::Overflow(format!(
            "bessel_i0 requires 0 <= x <= 700, got {x}"
        )));
    }
    if x <= 15.0 {
        Ok(bessel_i0_series(x))
    } else {
        // Sum the asymptotic series until terms stop decreasing.
        let mut sum = 1.0;
        let mut term = 1.0;
        let mut k = 1u32;
        loop {
            let m = 2.0 * k as f64 - 1.0;
            let next = term * m * m / (8.0 * x * k as f64);
            if next >= term || next < 1e-18 * sum {
                sum += next;
                break;
            }
            sum += next;
            term = next;
            k += 1;
        }
        Ok(x.exp() / (2.0 * std::f64::consts::PI * x).sqrt() * sum)
    }
}

/// `ln I0(x)` for any `x >= 0`, immune to the overflow of `I0` itself.
///
/// Direct log of the series/asymptotic value up to 700; beyond that the
/// asymptotic form `x - ln sqrt(2 pi x) + ln(correction)` where the
/// correction series is O(1) and the neglected remainder is below 1e-16.
pub fn bessel_i0_ln(x: f64) -> Result<f64> {
    if x < 0.0 {
        return Err(Error::Domain(format!("bessel_i0_ln requires x >= 0, got {x}")));
    }
    if x <= 700.0 {
        return Ok(bessel_i0(x)?.ln());
    }
    let mut sum = 1.0;
    let mut term = 1.0;
    for k in 1..20u32 {
        let m = 2.0 * k as f64 - 1.0;
        term *= m * m / (8.0 * x * k as f64);
        sum += term;
        if term < 1e-18 {
            break;
        }
    }
    Ok(x - 0.5 * (2.0 * std::f64::consts::PI * x).ln() + sum.ln())
}

/// Power series for `I0`: all terms positive, no cancellation.
fn bessel_i0_series(x: f64) -> f64 {
    let y = x * x / 4.0;
    let mut sum = 1.0;
    let mut term = 1.0;
    let mut k = 1u32;
    while term > 1e-18 * sum {
        term *= y / ((k as f64) * (k as f64));
        sum += term;
        k += 1;
    }
    sum
}

/// Bessel function of the first kind `J_n(x)` for `0 <= n <= 10^4`,
/// `|x| <= 10^4`, absolute error <= 1e-13.
///
/// Miller backward recurrence normalized against `J0 + 2*sum J_{2k} = 1`,
/// stable in the regime `n > x` where forward recurrence blows up.
pub fn bessel_jn(n: usize, x: f64) -> Result<f64> {
    if n > 10_000 {
        return Err(Error::Domain(format!("bessel_jn order too large: {n}")));
    }
    if x.abs() > 10_000.0 {
        return Err(Error::Domain(format!("bessel_jn argument too large: {x}")));
    }
    if x == 0.0 {
        return Ok(if n == 0 { 1.0 } else { 0.0 });
    }
    let sign = if x < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
    let ax = x.abs();

    // If J_n underflows (n far beyond the turning point), report zero.
    // First-term estimate: J_n ~ (x/2)^n / n!.
    if n > 1 {
        let nf = n as f64;
        let log_lead = nf * (ax / 2.0).ln() - ln_factorial(nf);
        if log_lead < -800.0 {
            return Ok(0.0);
        }
    }

    // Start index: above both n and the turning point |x|, plus margin.
    let base = n.max(ax.ceil() as usize);
    let start = base + 2 * (base as f64).sqrt() as usize + 40;
    let start = start + start % 2; // even

    let mut jp = 0.0f64; // J_{m+1}
    let mut j = 1e-300f64; // J_m (arbitrary scale)
    let mut norm = 0.0f64; // accumulates J0 + 2*sum_{k>=1} J_{2k}
    let mut result = 0.0f64;
    let mut m = start;
    loop {
        let jm = 2.0 * (m as f64 + 1.0) / ax * j - jp; // J_{m} from J_{m+1}, J_{m+2}
        jp = j;
        j = jm;
        if m % 2 == 0 {
            norm += if m == 0 { j } else { 2.0 * j };
        }
        if m == n {
            result = j;
        }
        if m == 0 {
            break;
        }
        // Rescale to avoid overflow of the unnormalized recurrence.
        if j.abs() > 1e250 {
            let s = 1e-250;
            j *= s;
            jp *= s;
            norm *= s;
            result *= s;
        }
        m -= 1;
    }
    Ok(sign * result / norm)
}

fn ln_factorial(n: f64) -> f64 {
    // Stirling with correction terms; adequate for the crude underflow test.
    if n < 2.0 {
        return 0.0;
    }
    n * n.ln() - n + 0.5 * (2.0 * std::f64::consts::PI * n).ln() + 1.0 / (12.0 * n)
}

/// Chebyshev polynomial `T_n(t) = cos(n * arccos(t))` for `|t| <= 1`.
pub fn chebyshev_t(n: usize, t: f64) -> Result<f64> {
    if t.abs() > 1.0 {
        return Err(Error::Domain(format!(
            "chebyshev_t requires |t| <= 1, got {t}"
        )));
    }
    Ok(((n as f64) * t.acos()).cos())
}

/// Frequency warping deviation `R(x) = x - sqrt(x^2 - sigma^2)`, `x >= sigma`.
///
/// Satisfies `0 <= R(x) <= sigma^2 / x`.
pub fn warp_deviation(x: f64, sigma: f64) -> Result<f64> {
    if x < sigma {
        return Err(Error::Domain(format!(
            "warp_deviation requires x >= sigma, got x={x}, sigma={sigma}"
        )));
    }
    if sigma == 0.0 {
        return Ok(0.0);
    }
    // Stable form sigma^2 / (x + sqrt(x^2 - sigma^2)).
    Ok(sigma * sigma / (x + ((x - sigma) * (x + sigma)).sqrt()))
}

/// Siegel's bound function `g(z) = z e^{sqrt(1-z^2)} / (1 + sqrt(1-z^2))`
/// on `(0, 1]`; satisfies `g(z) <= e z / 2`.
pub fn siegel_g(z: f64) -> Result<f64> {
    if !(z > 0.0 && z <= 1.0) {
        return Err(Error::Domain(format!(
            "siegel_g requires 0 < z <= 1, got {z}"
        )));
    }
    let s = ((1.0 - z) * (1.0 + z)).sqrt();
    Ok(z * s.exp() / (1.0 + s))
}
