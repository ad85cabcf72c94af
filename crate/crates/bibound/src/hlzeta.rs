//! Hurwitz-Lerch zeta evaluation and the Srivastava-Attiya coefficient
//! multiplier built from it.
//!
//! The zeta function here is the series `Phi(z, s, a) = sum_{k>=0} z^k / (k+a)^s`
//! on `|z| < 1`. The associated operator acts on a normalized series by
//! multiplying the coefficient of `z^k` by `((1+b)/(k+b))^mu`. Two variants
//! are exposed: `Modulus` multiplies by `Theta_k = |((1+b)/(k+b))^mu|` (the
//! conventional definition, always a nonnegative real), while `Complex`
//! convolves with the kernel series itself. They agree whenever the ratio
//! power is a positive real, e.g. for real `mu` and real `b > -1`.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::series::{ComplexSeries, NormalizedSeries};

/// Distance from the excluded set `{0, -1, -2, ...}` below which a shift
/// parameter is rejected.
pub const SHIFT_TOL: f64 = 1e-12;

/// Hard cap on the number of series terms for zeta evaluation.
pub const MAX_TERMS: usize = 1_000_000;

#[derive(Debug, Error, PartialEq)]
pub enum ZetaError {
    #[error("shift parameter {0} is within {SHIFT_TOL} of a nonpositive integer")]
    ExcludedShift(Complex64),
    #[error("series form needs |z| < 1, got |z| = {0}")]
    ModulusOutOfRange(f64),
    #[error("tail bound {bound:e} still above tolerance {tol:e} after {terms} terms")]
    SlowConvergence { terms: usize, bound: f64, tol: f64 },
}

fn near_nonpositive_integer(v: Complex64) -> bool {
    if v.im.abs() > SHIFT_TOL {
        return false;
    }
    let r = v.re.round();
    r <= 0.0 && (v.re - r).abs() <= SHIFT_TOL
}

/// Evaluates `Phi(z, s, a) = sum_{k>=0} z^k / (k+a)^s` by direct summation,
/// stopping once a rigorous geometric tail bound drops below `tol`.
///
/// The tail after K terms is bounded by
/// `sup_{k>K} |(k+a)^{-s}| * |z|^{K+1} / (1-|z|)`; the supremum is handled
/// analytically for either sign of `Re(s)` (for negative real part the
/// polynomially growing factor is absorbed into a slower geometric ratio).
pub fn hlzeta_eval(
    z: Complex64,
    s: Complex64,
    a: Complex64,
    tol: f64,
) -> Result<Complex64, ZetaError> {
    if near_nonpositive_integer(a) {
        return Err(ZetaError::ExcludedShift(a));
    }
    let r = z.norm();
    if r >= 1.0 {
        return Err(ZetaError::ModulusOutOfRange(r));
    }

    let mut sum = Complex64::new(0.0, 0.0);
    let mut zk = Complex64::new(1.0, 0.0);
    let mut last_bound = f64::INFINITY;
    for k in 0..MAX_TERMS {
        let base = a + k as f64;
        sum += zk * base.powc(-s);
        if r == 0.0 {
            return Ok(sum);
        }
        let bound = tail_bound(r, s, a, k);
        last_bound = bound;
        if bound < tol {
            return Ok(sum);
        }
        zk *= z;
    }
    Err(ZetaError::SlowConvergence {
        terms: MAX_TERMS,
        bound: last_bound,
        tol,
    })
}

/// Upper bound on `|sum_{k>last} z^k (k+a)^{-s}|` for `|z| = r < 1`.
fn tail_bound(r: f64, s: Complex64, a: Complex64, last: usize) -> f64 {
    let first = (last + 1) as f64;
    // |(k+a)^{-s}| <= |k+a|^{-Re s} * exp(|Im s| * pi) since the principal
    // argument is confined to (-pi, pi].
    let phase_factor = (s.im.abs() * std::f64::consts::PI).exp();
    if s.re >= 0.0 {
        // |k+a| is increasing in k once k >= -Re(a).
        if first < -a.re {
            return f64::INFINITY;
        }
        let min_mod = (a + first).norm();
        if min_mod == 0.0 {
            return f64::INFINITY;
        }
        phase_factor * min_mod.powf(-s.re) * r.powf(first) / (1.0 - r)
    } else {
        // |k+a|^{m} <= (k + |a|)^{m} with m = -Re s > 0; absorb the
        // polynomial growth into a geometric ratio (1+r)/2 < 1 by bounding
        // (k+|a|)^m / beta^k with beta = (1+r)/(2r) > 1.
        let m = -s.re;
        let beta = (1.0 + r) / (2.0 * r);
        let ln_beta = beta.ln();
        let peak = (m / ln_beta - a.norm()).max(0.0);
        let amp = (peak + a.norm()).powf(m) / beta.powf(peak);
        let ratio = (1.0 + r) / 2.0;
        phase_factor * amp * ratio.powf(first) / (1.0 - ratio)
    }
}

/// The `(mu, b)` pair defining the coefficient multiplier. `b` must stay off
/// the nonpositive integers, which also keeps every ratio `(1+b)/(k+b)`
/// finite and nonzero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorSpec {
    mu: Complex64,
    b: Complex64,
}

impl OperatorSpec {
    pub fn new(mu: Complex64, b: Complex64) -> Result<Self, ZetaError> {
        if near_nonpositive_integer(b) {
            return Err(ZetaError::ExcludedShift(b));
        }
        Ok(Self { mu, b })
    }

    /// `mu = 0`: every coefficient multiplier is exactly 1.
    pub fn identity() -> Self {
        Self {
            mu: Complex64::new(0.0, 0.0),
            b: Complex64::new(1.0, 0.0),
        }
    }

    /// The `mu = 1`, `b = nu` specialization: coefficient `(nu+1)/(k+nu)`.
    pub fn libera_bernardi(nu: f64) -> Result<Self, ZetaError> {
        Self::new(Complex64::new(1.0, 0.0), Complex64::new(nu, 0.0))
    }

    /// The `mu = sigma`, `b = 1` specialization: coefficient `(2/(k+1))^sigma`.
    pub fn jung_kim_srivastava(sigma: f64) -> Result<Self, ZetaError> {
        Self::new(Complex64::new(sigma, 0.0), Complex64::new(1.0, 0.0))
    }

    pub fn mu(&self) -> Complex64 {
        self.mu
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    /// Principal-branch power of the coefficient ratio, `((1+b)/(k+b))^mu`.
    pub fn ratio_power(&self, k: usize) -> Complex64 {
        let ratio = (Complex64::new(1.0, 0.0) + self.b) / (self.b + k as f64);
        if self.mu == Complex64::new(0.0, 0.0) {
            return Complex64::new(1.0, 0.0);
        }
        ratio.powc(self.mu)
    }

    /// `Theta_k = |((1+b)/(k+b))^mu|`. Validation of `b` keeps the ratio
    /// nonzero, so the power is well defined for every `mu`.
    pub fn theta(&self, k: usize) -> f64 {
        debug_assert!(k >= 2);
        self.ratio_power(k).norm()
    }

    /// The multiplier values `Theta_2 ..= Theta_n`.
    pub fn theta_sequence(&self, n: usize) -> ThetaSequence {
        ThetaSequence {
            values: (2..=n).map(|k| self.theta(k)).collect(),
        }
    }
}

impl Serialize for OperatorSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw {
            mu: [f64; 2],
            b: [f64; 2],
        }
        Raw {
            mu: [self.mu.re, self.mu.im],
            b: [self.b.re, self.b.im],
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for OperatorSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            mu: [f64; 2],
            b: [f64; 2],
        }
        let raw = Raw::deserialize(deserializer)?;
        OperatorSpec::new(
            Complex64::new(raw.mu[0], raw.mu[1]),
            Complex64::new(raw.b[0], raw.b[1]),
        )
        .map_err(D::Error::custom)
    }
}

/// Multiplier values `Theta_2 ..= Theta_N` as nonnegative reals.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThetaSequence {
    values: Vec<f64>,
}

impl ThetaSequence {
    /// `Theta_k`; defined for `2 <= k <= N`.
    pub fn get(&self, k: usize) -> f64 {
        self.values[k - 2]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn max_index(&self) -> usize {
        self.values.len() + 1
    }
}

/// Which realization of the operator to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OperatorVariant {
    /// Multiply `a_k` by the nonnegative real `Theta_k` (the default).
    Modulus,
    /// Convolve with the kernel series (bare complex ratio powers).
    Complex,
}

impl Default for OperatorVariant {
    fn default() -> Self {
        OperatorVariant::Modulus
    }
}

/// Coefficients of the kernel `z + sum_{k>=2} ((1+b)/(k+b))^mu z^k`, i.e.
/// `(1+b)^mu [Phi(z, mu, b) - b^{-mu}]` expanded with principal-branch ratio
/// powers (no modulus taken).
pub fn kernel_series(spec: &OperatorSpec, order: usize) -> ComplexSeries {
    assert!(order >= 1);
    let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
    coeffs[1] = Complex64::new(1.0, 0.0);
    for (k, c) in coeffs.iter_mut().enumerate().skip(2) {
        *c = spec.ratio_power(k);
    }
    ComplexSeries::from_raw(coeffs)
}

/// Applies the multiplier operator to a normalized series. The unit linear
/// coefficient is preserved, so the result is again normalized.
pub fn apply_operator(
    spec: &OperatorSpec,
    f: &NormalizedSeries,
    variant: OperatorVariant,
) -> NormalizedSeries {
    let n = f.order();
    let transformed = match variant {
        OperatorVariant::Modulus => {
            let mut coeffs: Vec<Complex64> = f.series().coeffs().to_vec();
            for (k, c) in coeffs.iter_mut().enumerate().skip(2) {
                *c *= spec.theta(k);
            }
            ComplexSeries::from_raw(coeffs)
        }
        OperatorVariant::Complex => f
            .series()
            .hadamard(&kernel_series(spec, n))
            .expect("kernel built at matching order"),
    };
    NormalizedSeries::new(transformed).expect("operator preserves normalization")
}
