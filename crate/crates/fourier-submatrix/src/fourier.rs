//! Construction of cyclically contiguous DFT submatrices, their singular
//! spectra and condition numbers, and index-set manipulations (translation,
//! adjoint, complement).
//!
//! Index sets are stored as `(offset, length)` pairs with all arithmetic
//! mod `N`. The canonical "centered" submatrix places the rows on the `p`
//! highest-magnitude output frequencies and the columns on the `q`
//! lowest-magnitude inputs `{ -floor(q/2), ..., ceil(q/2)-1 }`.

use faer::{c64, Mat};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Relative threshold below which a condition number is reported as overflow.
///
/// A backward-stable SVD resolves singular values to absolute accuracy about
/// `sigma_1 * 1e-16`, so condition numbers beyond `1e16` are not measurable
/// in double precision.
pub const COND_OVERFLOW_RATIO: f64 = 1e16;

/// A cyclically contiguous `p x q` submatrix of the `N x N` DFT matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmatrixSpec {
    /// Ambient DFT size.
    pub n: usize,
    /// Number of rows (length of the cyclic row index run).
    pub p: usize,
    /// Number of columns.
    pub q: usize,
    /// Cyclic start of the row index set (any representative mod `N`).
    pub row_offset: i64,
    /// Cyclic start of the column index set.
    pub col_offset: i64,
}

impl SubmatrixSpec {
    /// A submatrix with explicit offsets. Fails if `p` or `q` exceeds `N`.
    pub fn new(n: usize, p: usize, q: usize, row_offset: i64, col_offset: i64) -> Result<Self> {
        if n == 0 || p == 0 || q == 0 || p > n || q > n {
            return Err(Error::Dimension(format!(
                "need 1 <= p,q <= N, got N={n}, p={p}, q={q}"
            )));
        }
        Ok(Self {
            n,
            p,
            q,
            row_offset,
            col_offset,
        })
    }

    /// The canonical centered submatrix: rows on the `p` highest output
    /// frequencies, columns on `{ -floor(q/2), ..., ceil(q/2)-1 }`.
    pub fn centered(n: usize, p: usize, q: usize) -> Result<Self> {
        // Row set starts at ceil((N-p)/2) and runs p steps, wrapping through
        // the +/- N/2 frequencies.
        let row_offset = ((n - p) as i64 + 1).div_euclid(2);
        let col_offset = -((q / 2) as i64);
        Self::new(n, p, q, row_offset, col_offset)
    }

    /// Row index values (representatives `offset + r`, not reduced).
    pub fn row_indices(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.p as i64).map(move |r| self.row_offset + r)
    }

    /// Column index values.
    pub fn col_indices(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.q as i64).map(move |c| self.col_offset + c)
    }

    /// Cyclic translation of both index sets.
    ///
    /// Spectra are invariant: a cyclic translation multiplies the submatrix
    /// by diagonal unitary phase matrices.
    pub fn translate(&self, drow: i64, dcol: i64) -> Self {
        let n = self.n as i64;
        Self {
            row_offset: (self.row_offset + drow).rem_euclid(n),
            col_offset: (self.col_offset + dcol).rem_euclid(n),
            ..*self
        }
    }

    /// The spec of the Hermitian adjoint: rows and columns swapped.
    /// `cond(A*) = cond(A)`.
    pub fn adjoint(&self) -> Self {
        Self {
            n: self.n,
            p: self.q,
            q: self.p,
            row_offset: self.col_offset,
            col_offset: self.row_offset,
        }
    }

    /// Complementary submatrices for the complement identity.
    ///
    /// Returns `(D, C)`: `D` is the `(N-p) x (N-q)` submatrix on the
    /// complementary row and column sets, `C` the `(N-p) x q` submatrix
    /// sharing this spec's columns with complementary rows. Requires
    /// `p + q < N` so the downstream proposition hypotheses are checkable.
    pub fn complement(&self) -> Result<(Self, Self)> {
        if self.p + self.q >= self.n {
            return Err(Error::Hypothesis(format!(
                "complement requires p + q < N, got p={}, q={}, N={}",
                self.p, self.q, self.n
            )));
        }
        let d = Self::new(
            self.n,
            self.n - self.p,
            self.n - self.q,
            self.row_offset + self.p as i64,
            self.col_offset + self.q as i64,
        )?;
        let c = Self::new(
            self.n,
            self.n - self.p,
            self.q,
            self.row_offset + self.p as i64,
            self.col_offset,
        )?;
        Ok((d, c))
    }

    /// Whether the index sets are those of `Self::centered(n, p, q)` up to
    /// cyclic equivalence of offsets.
    pub fn is_centered(&self) -> bool {
        let c = Self::centered(self.n, self.p, self.q).unwrap();
        let n = self.n as i64;
        self.row_offset.rem_euclid(n) == c.row_offset.rem_euclid(n)
            && self.col_offset.rem_euclid(n) == c.col_offset.rem_euclid(n)
    }
}

/// A condition number, or an overflow marker when `sigma_min` underflows the
/// relative precision of the SVD (`cond` would exceed about 1e16).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cond {
    /// Measurable value.
    Finite(f64),
    /// Beyond double-precision measurability.
    Overflow(String),
}

impl Cond {
    pub fn overflow() -> Self {
        Cond::Overflow("overflow".into())
    }

    pub fn finite(&self) -> Option<f64> {
        match self {
            Cond::Finite(v) => Some(*v),
            Cond::Overflow(_) => None,
        }
    }

    pub fn is_overflow(&self) -> bool {
        matches!(self, Cond::Overflow(_))
    }

    /// log10 of the condition number, `None` when overflowed.
    pub fn log10(&self) -> Option<f64> {
        self.finite().map(f64::log10)
    }
}

impl std::fmt::Display for Cond {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cond::Finite(v) => write!(f, "{v}"),
            Cond::Overflow(_) => write!(f, "overflow(>1e16)"),
        }
    }
}

/// Singular values of a submatrix, sorted descending.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SingularSpectrum {
    /// All `min(p, q)` singular values, descending.
    pub values: Vec<f64>,
    pub sigma1: f64,
    pub sigma_min: f64,
    pub cond: Cond,
}

/// Entries `exp(2 pi i j k / N)` over the spec's index sets.
///
/// The phase is reduced via `(j*k) mod N` before trigonometric evaluation,
/// which keeps full precision for large index products.
pub fn build_submatrix(spec: &SubmatrixSpec) -> Mat<c64> {
    let n = spec.n as i64;
    let rows: Vec<i64> = spec.row_indices().collect();
    let cols: Vec<i64> = spec.col_indices().collect();
    let scale = 2.0 * std::f64::consts::PI / spec.n as f64;
    Mat::from_fn(spec.p, spec.q, |r, c| {
        let m = (rows[r] * cols[c]).rem_euclid(n);
        let theta = scale * m as f64;
        c64::new(theta.cos(), theta.sin())
    })
}

/// Singular values of an arbitrary dense complex matrix, descending.
pub fn singular_values(a: &Mat<c64>) -> Vec<f64> {
    let svd = a.svd().expect("SVD failed to converge");
    let s = svd.S();
    let k = a.nrows().min(a.ncols());
    (0..k).map(|i| s[i].re).collect()
}

/// Largest singular value of a dense complex matrix.
pub fn operator_norm(a: &Mat<c64>) -> f64 {
    if a.nrows() == 0 || a.ncols() == 0 {
        return 0.0;
    }
    singular_values(a)[0]
}

/// Full singular spectrum of the submatrix via a dense SVD.
pub fn singular_spectrum(spec: &SubmatrixSpec) -> SingularSpectrum {
    // The SVD of the adjoint has the same values; run the cheaper (tall)
    // orientation.
    let work = if spec.q > spec.p {
        spec.adjoint()
    } else {
        *spec
    };
    let values = singular_values(&build_submatrix(&work));
    let sigma1 = values[0];
    let sigma_min = *values.last().unwrap();
    let cond = if sigma_min > sigma1 / COND_OVERFLOW_RATIO {
        Cond::Finite(sigma1 / sigma_min)
    } else {
        Cond::overflow()
    };
    SingularSpectrum {
        values,
        sigma1,
        sigma_min,
        cond,
    }
}

/// Condition number of the centered `p x q` submatrix of the size-`N` DFT.
pub fn centered_cond(n: usize, p: usize, q: usize) -> Result<Cond> {
    Ok(singular_spectrum(&SubmatrixSpec::centered(n, p, q)?).cond)
}
