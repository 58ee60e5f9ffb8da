//! Bernstein basis, exact binomials and Bernstein-form coefficient sequences.
//!
//! Polynomials are evaluated with the de Casteljau recurrence. Direct basis
//! summation via [`bernstein`] exists for checking, not for evaluation.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Exact binomial coefficient `C(n, k)`.
///
/// Uses the multiplicative recurrence `C(n, i+1) = C(n, i) (n - i) / (i + 1)`,
/// which divides exactly at every step. Fails instead of wrapping when an
/// intermediate product leaves the `u128` range.
pub fn binomial(n: usize, k: usize) -> Result<u128> {
    if k > n {
        return Err(Error::BinomialDomain { n, k });
    }
    let steps = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..steps {
        acc = acc.checked_mul((n - i) as u128).ok_or(Error::BinomialOverflow { n, k })?
            / (i + 1) as u128;
    }
    Ok(acc)
}

pub(crate) fn binomial_f64(n: usize, k: usize) -> Result<f64> {
    binomial(n, k).map(|c| c as f64)
}

/// `x^k` by repeated squaring, with `0^0 = 1`.
pub(crate) fn powi(mut x: f64, mut k: usize) -> f64 {
    let mut acc = 1.0;
    while k > 0 {
        if k & 1 == 1 {
            acc *= x;
        }
        x *= x;
        k >>= 1;
    }
    acc
}

pub(crate) fn check_parameter(t: f64) -> Result<()> {
    if (0.0..=1.0).contains(&t) {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange(t))
    }
}

/// Bernstein basis polynomial `B_i^n(t) = C(n, i) t^i (1 - t)^(n - i)`.
pub fn bernstein(n: usize, i: usize, t: f64) -> Result<f64> {
    check_parameter(t)?;
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, degree: n });
    }
    Ok(binomial_f64(n, i)? * powi(t, i) * powi(1.0 - t, n - i))
}

/// Coefficients of a polynomial in the degree-`m` Bernstein basis.
///
/// Each coefficient is a vector of the same dimension `dim` (scalars are
/// `dim == 1`). Storage is flat, coefficient-major.
#[derive(Debug, Clone, PartialEq)]
pub struct BernsteinCoefficients {
    dim: usize,
    data: Vec<f64>,
}

impl BernsteinCoefficients {
    pub fn from_scalars(values: Vec<f64>) -> Result<Self> {
        Self::from_flat(1, values)
    }

    pub fn from_vectors<V: AsRef<[f64]>>(vectors: &[V]) -> Result<Self> {
        let first = vectors.first().ok_or(Error::EmptyCoefficients)?;
        let dim = first.as_ref().len();
        let mut data = Vec::with_capacity(dim * vectors.len());
        for v in vectors {
            let v = v.as_ref();
            if v.len() != dim {
                return Err(Error::RaggedCoefficients);
            }
            data.extend_from_slice(v);
        }
        Self::from_flat(dim, data)
    }

    /// Builds from flat storage of `(degree + 1) * dim` values.
    pub fn from_flat(dim: usize, data: Vec<f64>) -> Result<Self> {
        if data.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        if dim == 0 || !data.len().is_multiple_of(dim) {
            return Err(Error::RaggedCoefficients);
        }
        Ok(BernsteinCoefficients { dim, data })
    }

    pub fn degree(&self) -> usize {
        self.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of coefficients, `degree + 1`.
    pub fn len(&self) -> usize {
        self.data.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coefficient(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn iter(&self) -> core::slice::ChunksExact<'_, f64> {
        self.data.chunks_exact(self.dim)
    }

    pub fn as_flat(&self) -> &[f64] {
        &self.data
    }

    pub fn into_flat(self) -> Vec<f64> {
        self.data
    }

    /// Evaluates the polynomial at `t` by de Casteljau.
    ///
    /// Any real `t` is accepted; inside `[0, 1]` every step is a convex
    /// combination.
    pub fn eval(&self, t: f64) -> Vec<f64> {
        let mut work = self.data.clone();
        de_casteljau_in_place(&mut work, self.dim, t);
        work.truncate(self.dim);
        work
    }

    /// Scalar evaluation of a `dim == 1` sequence.
    pub fn eval_scalar(&self, t: f64) -> f64 {
        debug_assert_eq!(self.dim, 1);
        self.eval(t)[0]
    }

    /// Direct basis summation `sum_i c_i B_i^m(t)`; for cross-checking de Casteljau.
    pub fn eval_by_basis(&self, t: f64) -> Result<Vec<f64>> {
        let m = self.degree();
        let mut out = alloc::vec![0.0; self.dim];
        for (i, c) in self.iter().enumerate() {
            let b = bernstein(m, i, t)?;
            for (o, x) in out.iter_mut().zip(c) {
                *o += b * x;
            }
        }
        Ok(out)
    }

    /// Degree-`(m + 1)` representation of the same polynomial.
    pub fn elevate_once(&self) -> Self {
        let mut out = self.clone();
        out.elevate_in_place();
        out
    }

    /// Raises the degree by one in place:
    /// `c'_i = i/(m+1) c_{i-1} + (1 - i/(m+1)) c_i`, with both ends kept.
    pub fn elevate_in_place(&mut self) {
        let dim = self.dim;
        let m = self.degree();
        let last = self.data.len() - dim;
        self.data.extend_from_within(last..);
        let denom = (m + 1) as f64;
        // Walk downwards so `c_{i-1}` is still the old value when `c_i` is rewritten.
        for i in (1..=m).rev() {
            let a = i as f64 / denom;
            let b = 1.0 - a;
            for c in 0..dim {
                let prev = self.data[(i - 1) * dim + c];
                let cur = &mut self.data[i * dim + c];
                *cur = a * prev + b * *cur;
            }
        }
    }

    /// Applies `elevate_in_place` `times` times.
    pub fn elevate(&mut self, times: usize) {
        self.data.reserve(times * self.dim);
        for _ in 0..times {
            self.elevate_in_place();
        }
    }
}

/// In-place de Casteljau reduction; the value ends up in `work[..dim]`.
pub(crate) fn de_casteljau_in_place(work: &mut [f64], dim: usize, t: f64) {
    let s = 1.0 - t;
    let n = work.len() / dim;
    for level in 1..n {
        for i in 0..n - level {
            for c in 0..dim {
                let a = work[i * dim + c];
                let b = work[(i + 1) * dim + c];
                work[i * dim + c] = s * a + t * b;
            }
        }
    }
}
