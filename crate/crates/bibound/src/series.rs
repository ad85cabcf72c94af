//! Truncated power series with complex coefficients.
//!
//! Everything downstream (operator kernels, class residuals, the brute-force
//! oracle) works on these series. A series carries its coefficients
//! `c_0 ... c_N` and nothing else; coefficients beyond the truncation order
//! are *undefined*, never assumed zero. Binary operations truncate to the
//! minimum order of the operands, except [`ComplexSeries::hadamard`] which
//! requires aligned indices and errors on a mismatch.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so series can be shared freely across threads.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Default truncation order. The bound formulas only need coefficients
/// through `z^3`; the headroom is for residual checks at higher order.
pub const DEFAULT_ORDER: usize = 10;

/// Absolute per-coefficient tolerance for series comparisons.
pub const COEFF_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum SeriesError {
    #[error("coefficient-wise product needs equal truncation orders (got {left} and {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("inner series of a composition must vanish at the origin (constant term {0})")]
    InnerConstantTerm(Complex64),
    #[error("series is not normalized: needs c0 = 0 and c1 = 1, got c0 = {c0}, c1 = {c1}")]
    NotNormalized { c0: Complex64, c1: Complex64 },
    #[error("multiplicative inverse needs a nonzero constant term")]
    ZeroConstantTerm,
    #[error("a series literal needs at least the constant and linear coefficients (got {0})")]
    TooShort(usize),
}

/// A truncated power series `c_0 + c_1 z + ... + c_N z^N`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSeries {
    coeffs: Vec<Complex64>,
}

impl ComplexSeries {
    /// Builds a series from `c_0 ..= c_N`. Literals must carry at least the
    /// constant and linear coefficients (order >= 1).
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self, SeriesError> {
        if coeffs.len() < 2 {
            return Err(SeriesError::TooShort(coeffs.len()));
        }
        Ok(Self { coeffs })
    }

    /// Internal constructor; intermediate results (derivatives, constants)
    /// may legitimately have order 0.
    pub(crate) fn from_raw(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one coefficient");
        Self { coeffs }
    }

    pub fn from_reals(coeffs: &[f64]) -> Result<Self, SeriesError> {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::from_raw(vec![Complex64::new(0.0, 0.0); order + 1])
    }

    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
        coeffs[0] = c;
        Self::from_raw(coeffs)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Complex64::new(1.0, 0.0), order)
    }

    /// The identity series `z`.
    pub fn identity(order: usize) -> Self {
        assert!(order >= 1);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
        coeffs[1] = Complex64::new(1.0, 0.0);
        Self::from_raw(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^k`. Panics beyond the truncation order: those
    /// coefficients are undefined, not zero.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order());
        Self::from_raw(self.coeffs[..=order].to_vec())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::from_raw((0..=n).map(|k| self.coeffs[k] + rhs.coeffs[k]).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::from_raw((0..=n).map(|k| self.coeffs[k] - rhs.coeffs[k]).collect())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::from_raw(self.coeffs.iter().map(|&a| c * a).collect())
    }

    /// Cauchy product truncated to the minimum operand order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![Complex64::new(0.0, 0.0); n + 1];
        for (j, &a) in self.coeffs.iter().take(n + 1).enumerate() {
            for (k, &b) in rhs.coeffs.iter().take(n + 1 - j).enumerate() {
                out[j + k] += a * b;
            }
        }
        Self::from_raw(out)
    }

    /// Coefficient-wise (Hadamard/convolution) product. Requires equal
    /// orders: the convolution pairs coefficients by index.
    pub fn hadamard(&self, rhs: &Self) -> Result<Self, SeriesError> {
        if self.order() != rhs.order() {
            return Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: rhs.order(),
            });
        }
        Ok(Self::from_raw(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(&a, &b)| a * b)
                .collect(),
        ))
    }

    /// Taylor coefficients of `self(inner)`. The inner series must vanish at
    /// the origin, which makes the truncated composition exact.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if inner.coeffs[0].norm() != 0.0 {
            return Err(SeriesError::InnerConstantTerm(inner.coeffs[0]));
        }
        let n = self.order().min(inner.order());
        let w = inner.truncate(n);
        // Horner evaluation in series arithmetic: only c_0..c_n of the outer
        // series can influence orders <= n because inner^j starts at z^j.
        let mut acc = Self::constant(self.coeffs[n], n);
        for j in (0..n).rev() {
            acc = acc.mul(&w);
            acc.coeffs[0] += self.coeffs[j];
        }
        Ok(acc)
    }

    /// Term-wise derivative; drops the order by one.
    pub fn derivative(&self) -> Self {
        assert!(self.order() >= 1, "derivative needs order >= 1");
        Self::from_raw(
            (1..=self.order())
                .map(|k| self.coeffs[k] * k as f64)
                .collect(),
        )
    }

    /// Multiplication by `z`. No information is lost, so the order grows by
    /// one.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::new(0.0, 0.0));
        coeffs.extend_from_slice(&self.coeffs);
        Self::from_raw(coeffs)
    }

    /// Division by `z` for a series with zero constant term.
    pub(crate) fn shift_down(&self) -> Self {
        assert!(self.coeffs[0].norm() == 0.0, "shift_down needs c0 = 0");
        assert!(self.order() >= 1);
        Self::from_raw(self.coeffs[1..].to_vec())
    }

    /// Multiplicative inverse `1/self`; requires a nonzero constant term.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        let c0 = self.coeffs[0];
        if c0.norm() == 0.0 {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let n = self.order();
        let mut inv = vec![Complex64::new(0.0, 0.0); n + 1];
        inv[0] = c0.inv();
        for m in 1..=n {
            let mut sum = Complex64::new(0.0, 0.0);
            for k in 1..=m {
                sum += self.coeffs[k] * inv[m - k];
            }
            inv[m] = -sum / c0;
        }
        Ok(Self::from_raw(inv))
    }

    /// Formal logarithm of a series with constant term 1.
    pub(crate) fn log_unit(&self) -> Self {
        assert!(
            (self.coeffs[0] - Complex64::new(1.0, 0.0)).norm() == 0.0,
            "log_unit needs c0 = 1"
        );
        let n = self.order();
        let mut h = self.clone();
        h.coeffs[0] = Complex64::new(0.0, 0.0);
        // log(1 + h) = sum_{m>=1} (-1)^{m+1} h^m / m
        let mut power = Self::one(n);
        let mut out = Self::zero(n);
        for m in 1..=n {
            power = power.mul(&h);
            let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
            out = out.add(&power.scale(Complex64::new(sign / m as f64, 0.0)));
        }
        out
    }

    /// Formal exponential of a series with zero constant term.
    pub(crate) fn exp_nilpotent(&self) -> Self {
        assert!(self.coeffs[0].norm() == 0.0, "exp_nilpotent needs c0 = 0");
        let n = self.order();
        let mut out = Self::one(n);
        let mut power = Self::one(n);
        let mut factorial = 1.0;
        for m in 1..=n {
            power = power.mul(self);
            factorial *= m as f64;
            out = out.add(&power.scale(Complex64::new(1.0 / factorial, 0.0)));
        }
        out
    }

    /// Polynomial evaluation of the truncation at a point.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Largest coefficient-wise absolute difference through the shared order.
    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        let n = self.order().min(rhs.order());
        (0..=n)
            .map(|k| (self.coeffs[k] - rhs.coeffs[k]).norm())
            .fold(0.0, f64::max)
    }
}

impl Serialize for ComplexSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[f64; 2]> = self.coeffs.iter().map(|c| [c.re, c.im]).collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ComplexSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs = Vec::<[f64; 2]>::deserialize(deserializer)?;
        let coeffs = pairs
            .into_iter()
            .map(|[re, im]| Complex64::new(re, im))
            .collect();
        ComplexSeries::new(coeffs).map_err(D::Error::custom)
    }
}

/// A series with `c_0 = 0` and `c_1 = 1` exactly: the normalization of the
/// analytic class on the unit disk. Compositional inversion and fractional
/// powers of `f/z` are only defined here.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedSeries(ComplexSeries);

impl NormalizedSeries {
    pub fn new(series: ComplexSeries) -> Result<Self, SeriesError> {
        let c0 = series.coeff(0);
        let c1 = series.coeff(1);
        if c0 != Complex64::new(0.0, 0.0) || c1 != Complex64::new(1.0, 0.0) {
            return Err(SeriesError::NotNormalized { c0, c1 });
        }
        Ok(Self(series))
    }

    /// `z + tail[0] z^2 + tail[1] z^3 + ...`, zero-padded to `order`.
    pub fn from_tail(order: usize, tail: &[Complex64]) -> Self {
        assert!(order >= 1 && tail.len() + 1 <= order);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
        coeffs[1] = Complex64::new(1.0, 0.0);
        coeffs[2..2 + tail.len()].copy_from_slice(tail);
        Self(ComplexSeries::from_raw(coeffs))
    }

    pub fn identity(order: usize) -> Self {
        Self(ComplexSeries::identity(order))
    }

    pub fn series(&self) -> &ComplexSeries {
        &self.0
    }

    pub fn into_series(self) -> ComplexSeries {
        self.0
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.0.coeff(k)
    }

    /// Compositional inverse `g` with `self(g(w)) = w` up to the truncation
    /// order. Normalization guarantees existence; the result is normalized.
    pub fn invert(&self) -> NormalizedSeries {
        let n = self.order();
        let mut g = ComplexSeries::identity(n);
        for m in 2..=n {
            // With g known below order m (and g_m still zero), the order-m
            // coefficient of self(g) is g_m plus terms in lower g's only.
            let h = self
                .0
                .compose(&g)
                .expect("inverse iterate has zero constant term");
            g.coeffs[m] = -h.coeff(m);
        }
        NormalizedSeries(g)
    }

    /// `(f/z)^t` as a formal series via `exp(t log(f/z))`. The result has
    /// order one less than `f`, constant term 1.
    pub fn fractional_power(&self, t: Complex64) -> ComplexSeries {
        if t == Complex64::new(0.0, 0.0) {
            return ComplexSeries::one(self.order() - 1);
        }
        let q = self.0.shift_down();
        if t == Complex64::new(1.0, 0.0) {
            return q;
        }
        q.log_unit().scale(t).exp_nilpotent()
    }
}

impl Serialize for NormalizedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NormalizedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let series = ComplexSeries::deserialize(deserializer)?;
        NormalizedSeries::new(series).map_err(D::Error::custom)
    }
}
