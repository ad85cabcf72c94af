//! Closed-form coefficient bounds for the two function-class families, plus
//! the named target-function presets.
//!
//! A [`ClassSpec`] pins down one class: the complex order `gamma`, the type
//! parameter `lambda`, the family kind (`B` for the Bazilevic-type classes,
//! `G` for the ratio-type classes), the coefficient-multiplier operator, the
//! target `phi` (through `B1`, `B2`), and the quasi-subordination multiplier
//! `psi` (through `C0`, `C1`). The second and third Taylor coefficients of
//! every class member are bounded by the closed forms evaluated here.
//!
//! For kind `G` the third-coefficient bound is computed in two forms: exactly
//! as conventionally printed (`|gamma|` in the last term) and in the form the
//! elimination argument actually yields (`|gamma|^2`, which is also what the
//! `lambda = 0` specialization of the `B` family gives). The two coincide
//! only for `|gamma| = 1`; both are reported rather than silently merging
//! them.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hlzeta::OperatorSpec;

/// Denominators whose modulus falls at or below this are reported as
/// degenerate instead of producing a huge meaningless number.
pub const DEGENERACY_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum BoundsError {
    #[error("target function needs B1 > 0, got {0}")]
    NonpositiveB1(f64),
    #[error("preset parameter out of range: {0}")]
    PresetParam(String),
    #[error("multiplier needs |C0| <= 1, got {0} (use the unchecked constructor to override)")]
    MultiplierTooLarge(f64),
    #[error("complex order gamma must be nonzero")]
    ZeroGamma,
    #[error("lambda = {lambda} is outside the admissible range for kind {kind:?}")]
    LambdaRange { kind: ClassKind, lambda: f64 },
    #[error("degenerate denominator (|D| = {0:e}); the closed form gives no information here")]
    Degenerate(f64),
}

/// Target function data: `phi(z) = 1 + B1 z + B2 z^2 + ...` with `B1 > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawTargetPhi", into = "RawTargetPhi")]
pub struct TargetPhi {
    b1: f64,
    b2: f64,
    b3: Option<f64>,
}

#[derive(Serialize, Deserialize)]
struct RawTargetPhi {
    b1: f64,
    b2: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    b3: Option<f64>,
}

impl TryFrom<RawTargetPhi> for TargetPhi {
    type Error = BoundsError;
    fn try_from(raw: RawTargetPhi) -> Result<Self, Self::Error> {
        TargetPhi::new(raw.b1, raw.b2, raw.b3)
    }
}

impl From<TargetPhi> for RawTargetPhi {
    fn from(phi: TargetPhi) -> Self {
        RawTargetPhi {
            b1: phi.b1,
            b2: phi.b2,
            b3: phi.b3,
        }
    }
}

impl TargetPhi {
    pub fn new(b1: f64, b2: f64, b3: Option<f64>) -> Result<Self, BoundsError> {
        if !(b1 > 0.0) || !b1.is_finite() || !b2.is_finite() {
            return Err(BoundsError::NonpositiveB1(b1));
        }
        Ok(Self { b1, b2, b3 })
    }

    pub fn b1(&self) -> f64 {
        self.b1
    }

    pub fn b2(&self) -> f64 {
        self.b2
    }

    pub fn b3(&self) -> Option<f64> {
        self.b3
    }
}

/// Named target presets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PhiPreset {
    /// `((1+z)/(1-z))^alpha`, `0 < alpha <= 1`.
    StronglyStarlike { alpha: f64 },
    /// `(1+Az)/(1+Bz)`, `-1 <= B < A < 1`.
    Janowski { a: f64, b: f64 },
    /// `(1+(1-2 beta)z)/(1-z)`, `0 <= beta < 1`.
    StarlikeOrder { beta: f64 },
    /// `(1+z)/(1-z)`.
    Koebe,
}

pub fn phi_preset(preset: PhiPreset) -> Result<TargetPhi, BoundsError> {
    match preset {
        PhiPreset::StronglyStarlike { alpha } => {
            if !(alpha > 0.0 && alpha <= 1.0) {
                return Err(BoundsError::PresetParam(format!(
                    "strongly-starlike needs 0 < alpha <= 1, got {alpha}"
                )));
            }
            TargetPhi::new(
                2.0 * alpha,
                2.0 * alpha * alpha,
                Some(2.0 * alpha / 3.0 + 4.0 * alpha.powi(3) / 3.0),
            )
        }
        PhiPreset::Janowski { a, b } => {
            // B < A strictly keeps B1 > 0; A = 1, B = -1 is the Koebe case.
            if !(-1.0 <= b && b < a && a <= 1.0) {
                return Err(BoundsError::PresetParam(format!(
                    "janowski needs -1 <= B < A <= 1, got A = {a}, B = {b}"
                )));
            }
            TargetPhi::new(a - b, -b * (a - b), Some(b * b * (a - b)))
        }
        PhiPreset::StarlikeOrder { beta } => {
            if !(0.0..1.0).contains(&beta) {
                return Err(BoundsError::PresetParam(format!(
                    "starlike-order needs 0 <= beta < 1, got {beta}"
                )));
            }
            let v = 2.0 * (1.0 - beta);
            TargetPhi::new(v, v, Some(v))
        }
        PhiPreset::Koebe => TargetPhi::new(2.0, 2.0, Some(2.0)),
    }
}

/// Quasi-subordination multiplier data: `psi(z) = C0 + C1 z + ...` with
/// `|psi| < 1` on the disk, enforced at the `|C0| <= 1` level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMultiplierPsi", into = "RawMultiplierPsi")]
pub struct MultiplierPsi {
    c0: Complex64,
    c1: Complex64,
    unchecked: bool,
}

#[derive(Serialize, Deserialize)]
struct RawMultiplierPsi {
    #[serde(with = "crate::cxserde")]
    c0: Complex64,
    #[serde(with = "crate::cxserde")]
    c1: Complex64,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    unchecked: bool,
}

impl TryFrom<RawMultiplierPsi> for MultiplierPsi {
    type Error = BoundsError;
    fn try_from(raw: RawMultiplierPsi) -> Result<Self, Self::Error> {
        if raw.unchecked {
            Ok(MultiplierPsi::new_unchecked(raw.c0, raw.c1))
        } else {
            MultiplierPsi::new(raw.c0, raw.c1)
        }
    }
}

impl From<MultiplierPsi> for RawMultiplierPsi {
    fn from(psi: MultiplierPsi) -> Self {
        RawMultiplierPsi {
            c0: psi.c0,
            c1: psi.c1,
            unchecked: psi.unchecked,
        }
    }
}

impl MultiplierPsi {
    pub fn new(c0: Complex64, c1: Complex64) -> Result<Self, BoundsError> {
        if c0.norm() > 1.0 + DEGENERACY_TOL {
            return Err(BoundsError::MultiplierTooLarge(c0.norm()));
        }
        Ok(Self {
            c0,
            c1,
            unchecked: false,
        })
    }

    /// Skips the `|C0| <= 1` validation.
    pub fn new_unchecked(c0: Complex64, c1: Complex64) -> Self {
        Self {
            c0,
            c1,
            unchecked: true,
        }
    }

    pub fn c0(&self) -> Complex64 {
        self.c0
    }

    pub fn c1(&self) -> Complex64 {
        self.c1
    }
}

/// Which family the class belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassKind {
    /// Bazilevic-type: `z^{1-lambda} F' / F^{1-lambda}`, `lambda >= 0`.
    B,
    /// Ratio-type: `z F' / ((1-lambda) F + lambda z F')`, `0 <= lambda < 1`.
    G,
}

/// Full identification of one function class.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawClassSpec", into = "RawClassSpec")]
pub struct ClassSpec {
    kind: ClassKind,
    gamma: Complex64,
    lambda: f64,
    op: OperatorSpec,
    phi: TargetPhi,
    psi: MultiplierPsi,
}

#[derive(Serialize, Deserialize)]
struct RawClassSpec {
    kind: ClassKind,
    #[serde(with = "crate::cxserde")]
    gamma: Complex64,
    lambda: f64,
    op: OperatorSpec,
    phi: TargetPhi,
    psi: MultiplierPsi,
}

impl TryFrom<RawClassSpec> for ClassSpec {
    type Error = BoundsError;
    fn try_from(raw: RawClassSpec) -> Result<Self, Self::Error> {
        ClassSpec::new(raw.kind, raw.gamma, raw.lambda, raw.op, raw.phi, raw.psi)
    }
}

impl From<ClassSpec> for RawClassSpec {
    fn from(spec: ClassSpec) -> Self {
        RawClassSpec {
            kind: spec.kind,
            gamma: spec.gamma,
            lambda: spec.lambda,
            op: spec.op,
            phi: spec.phi,
            psi: spec.psi,
        }
    }
}

impl ClassSpec {
    pub fn new(
        kind: ClassKind,
        gamma: Complex64,
        lambda: f64,
        op: OperatorSpec,
        phi: TargetPhi,
        psi: MultiplierPsi,
    ) -> Result<Self, BoundsError> {
        if gamma.norm() == 0.0 {
            return Err(BoundsError::ZeroGamma);
        }
        let lambda_ok = match kind {
            ClassKind::B => lambda >= 0.0,
            ClassKind::G => (0.0..1.0).contains(&lambda),
        };
        if !lambda_ok || !lambda.is_finite() {
            return Err(BoundsError::LambdaRange { kind, lambda });
        }
        Ok(Self {
            kind,
            gamma,
            lambda,
            op,
            phi,
            psi,
        })
    }

    pub fn kind(&self) -> ClassKind {
        self.kind
    }

    pub fn gamma(&self) -> Complex64 {
        self.gamma
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn op(&self) -> &OperatorSpec {
        &self.op
    }

    pub fn phi(&self) -> &TargetPhi {
        &self.phi
    }

    pub fn psi(&self) -> &MultiplierPsi {
        &self.psi
    }

    pub fn theta2(&self) -> f64 {
        self.op.theta(2)
    }

    pub fn theta3(&self) -> f64 {
        self.op.theta(3)
    }
}

/// Bound on `|a2|` for kind `B`.
pub fn bound_a2_b(spec: &ClassSpec) -> Result<f64, BoundsError> {
    debug_assert_eq!(spec.kind, ClassKind::B);
    let (th2, th3) = (spec.theta2(), spec.theta3());
    let (b1, b2) = (spec.phi.b1(), spec.phi.b2());
    let lam = spec.lambda;
    let gc0 = spec.gamma * spec.psi.c0();
    let shape = (lam - 1.0) * (lam + 2.0) * th2 * th2 + 2.0 * (lam + 2.0) * th3;
    let den = gc0 * b1 * b1 * shape - 2.0 * (b2 - b1) * (1.0 + lam).powi(2) * th2 * th2;
    let dn = den.norm();
    if dn <= DEGENERACY_TOL {
        return Err(BoundsError::Degenerate(dn));
    }
    Ok(spec.gamma.norm() * spec.psi.c0().norm() * b1 * (2.0 * b1).sqrt() / dn.sqrt())
}

/// Bound on `|a3|` for kind `B`.
pub fn bound_a3_b(spec: &ClassSpec) -> Result<f64, BoundsError> {
    debug_assert_eq!(spec.kind, ClassKind::B);
    let (th2, th3) = (spec.theta2(), spec.theta3());
    if th2 <= DEGENERACY_TOL || th3 <= DEGENERACY_TOL {
        return Err(BoundsError::Degenerate(th2.min(th3)));
    }
    let b1 = spec.phi.b1();
    let lam = spec.lambda;
    let g = spec.gamma.norm();
    let (c0, c1) = (spec.psi.c0().norm(), spec.psi.c1().norm());
    let t1 = g * c0 * b1 / ((lam + 2.0) * th3);
    let t2 = g * c1 * b1 / ((lam + 2.0) * th3);
    let t3 = (g * c0 * b1 / ((1.0 + lam) * th2)).powi(2);
    Ok(t1 + t2 + t3)
}

/// Bound on `|a2|` for kind `G`.
pub fn bound_a2_g(spec: &ClassSpec) -> Result<f64, BoundsError> {
    debug_assert_eq!(spec.kind, ClassKind::G);
    let (th2, th3) = (spec.theta2(), spec.theta3());
    let (b1, b2) = (spec.phi.b1(), spec.phi.b2());
    let lam = spec.lambda;
    let gc0 = spec.gamma * spec.psi.c0();
    let den = (gc0 * (lam * lam - 1.0) * b1 * b1 + (1.0 - lam).powi(2) * (b1 - b2)) * th2 * th2
        + gc0 * 2.0 * (1.0 - lam) * b1 * b1 * th3;
    let dn = den.norm();
    if dn <= DEGENERACY_TOL {
        return Err(BoundsError::Degenerate(dn));
    }
    Ok(spec.gamma.norm() * spec.psi.c0().norm() * b1 * b1.sqrt() / dn.sqrt())
}

/// Bound on `|a3|` for kind `G`, exactly as conventionally printed: the last
/// term carries `|gamma|` to the first power.
pub fn bound_a3_g(spec: &ClassSpec) -> Result<f64, BoundsError> {
    let (t1, t2, quad) = a3_g_terms(spec)?;
    Ok(t1 + t2 + spec.gamma.norm() * quad)
}

/// Bound on `|a3|` for kind `G` in the form the elimination argument yields:
/// the last term is a full square and carries `|gamma|^2`. At `lambda = 0`
/// this matches the `B`-family corollary; the printed form does not unless
/// `|gamma| = 1`.
pub fn bound_a3_g_derived(spec: &ClassSpec) -> Result<f64, BoundsError> {
    let (t1, t2, quad) = a3_g_terms(spec)?;
    Ok(t1 + t2 + spec.gamma.norm().powi(2) * quad)
}

fn a3_g_terms(spec: &ClassSpec) -> Result<(f64, f64, f64), BoundsError> {
    debug_assert_eq!(spec.kind, ClassKind::G);
    let (th2, th3) = (spec.theta2(), spec.theta3());
    let lam = spec.lambda;
    if th2 <= DEGENERACY_TOL || th3 <= DEGENERACY_TOL || lam >= 1.0 {
        return Err(BoundsError::Degenerate(th2.min(th3)));
    }
    let b1 = spec.phi.b1();
    let g = spec.gamma.norm();
    let (c0, c1) = (spec.psi.c0().norm(), spec.psi.c1().norm());
    let t1 = g * c1 * b1 / (2.0 * (1.0 - lam) * th3);
    let t2 = g * c0 * b1 / (2.0 * (1.0 - lam) * th3);
    let quad = (c0 * b1 / ((1.0 - lam) * th2)).powi(2);
    Ok((t1, t2, quad))
}

/// The four standard specializations of the closed-form bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Corollary {
    /// `lambda = 0`, general operator.
    LambdaZero,
    /// `lambda = 1`, general operator.
    LambdaOne,
    /// `lambda = 0`, identity operator.
    LambdaZeroIdentity,
    /// `lambda = 1`, identity operator.
    LambdaOneIdentity,
}

/// Evaluates one of the specialized bound pairs directly from its own printed
/// formula (not by delegating to the general forms, so the two routes can be
/// compared against each other).
pub fn corollary_bounds(
    which: Corollary,
    gamma: Complex64,
    op: &OperatorSpec,
    phi: &TargetPhi,
    psi: &MultiplierPsi,
) -> Result<BoundReport, BoundsError> {
    let (th2, th3) = match which {
        Corollary::LambdaZero | Corollary::LambdaOne => (op.theta(2), op.theta(3)),
        _ => (1.0, 1.0),
    };
    let (b1, b2) = (phi.b1(), phi.b2());
    let gc0 = gamma * psi.c0();
    let g = gamma.norm();
    let (c0, c1) = (psi.c0().norm(), psi.c1().norm());

    let den = match which {
        Corollary::LambdaZero => gc0 * b1 * b1 * (2.0 * th3 - th2 * th2) - (b2 - b1) * th2 * th2,
        Corollary::LambdaOne => gc0 * 3.0 * b1 * b1 * th3 - 4.0 * (b2 - b1) * th2 * th2,
        Corollary::LambdaZeroIdentity => gc0 * b1 * b1 - (b2 - b1),
        Corollary::LambdaOneIdentity => gc0 * 3.0 * b1 * b1 - 4.0 * (b2 - b1),
    };
    let dn = den.norm();
    let a2 = if dn <= DEGENERACY_TOL {
        None
    } else {
        Some(g * c0 * b1 * b1.sqrt() / dn.sqrt())
    };

    let a3 = if th2 <= DEGENERACY_TOL || th3 <= DEGENERACY_TOL {
        None
    } else {
        Some(match which {
            Corollary::LambdaZero => {
                g * c0 * b1 / (2.0 * th3) + g * c1 * b1 / (2.0 * th3) + (g * c0 * b1 / th2).powi(2)
            }
            Corollary::LambdaOne => {
                g * c0 * b1 / (3.0 * th3)
                    + g * c1 * b1 / (3.0 * th3)
                    + (g * c0 * b1 / (2.0 * th2)).powi(2)
            }
            Corollary::LambdaZeroIdentity => {
                g * c0 * b1 / 2.0 + g * c1 * b1 / 2.0 + (g * c0 * b1).powi(2)
            }
            Corollary::LambdaOneIdentity => {
                g * c0 * b1 / 3.0 + g * c1 * b1 / 3.0 + (g * c0 * b1 / 2.0).powi(2)
            }
        })
    };

    Ok(BoundReport {
        a2_bound: a2,
        a3_bound: a3,
        a3_bound_derived: None,
        theta2: th2,
        theta3: th3,
        degenerate: a2.is_none() || a3.is_none(),
    })
}

/// Computed bounds for one class, with the multiplier values used.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundReport {
    pub a2_bound: Option<f64>,
    pub a3_bound: Option<f64>,
    /// Only present for kind `G`: the elimination-consistent form of the
    /// `|a3|` bound (differs from `a3_bound` when `|gamma| != 1`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a3_bound_derived: Option<f64>,
    pub theta2: f64,
    pub theta3: f64,
    pub degenerate: bool,
}

/// Evaluates both bounds for a spec, flagging degeneracy instead of erroring.
pub fn bound_report(spec: &ClassSpec) -> BoundReport {
    let (a2, a3, a3d) = match spec.kind() {
        ClassKind::B => (bound_a2_b(spec).ok(), bound_a3_b(spec).ok(), None),
        ClassKind::G => (
            bound_a2_g(spec).ok(),
            bound_a3_g(spec).ok(),
            bound_a3_g_derived(spec).ok(),
        ),
    };
    BoundReport {
        a2_bound: a2,
        a3_bound: a3,
        a3_bound_derived: a3d,
        theta2: spec.theta2(),
        theta3: spec.theta3(),
        degenerate: a2.is_none() || a3.is_none(),
    }
}
