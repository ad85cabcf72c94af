//! Executable rebuild of the machinery behind the closed-form bounds:
//! Caratheodory sampling, quasi-subordination residuals, the class
//! membership residuals, the coefficient relations the bounds follow from,
//! and a relaxed-feasible brute-force maximizer that must reproduce every
//! closed form.
//!
//! The verification set is the relaxation the bound derivation actually
//! uses: independent coefficients `p1, p2, q2` in the closed polydisc of
//! radius 2 with `q1 = -p1`. The closed-form bounds are suprema over this
//! set, so a scan of it must reproduce them *exactly* (to rounding), which
//! turns the bound formulas into a decisive pass/fail target instead of a
//! one-sided check. Genuinely realizable members (Herglotz samples) can only
//! probe `<=`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bounds::{BoundsError, ClassKind, ClassSpec, DEGENERACY_TOL};
use crate::hlzeta::{apply_operator, OperatorVariant};
use crate::series::{ComplexSeries, NormalizedSeries, SeriesError};

/// Default number of Herglotz atoms per sample.
pub const DEFAULT_ATOMS: usize = 3;

/// Default phase resolution of the relaxed-feasible grid scan; the modulus
/// resolution is derived as `(grid + 1) / 2`.
pub const DEFAULT_GRID: usize = 17;

/// Randomized top-up points added to every grid scan.
pub const RELAX_RANDOM_POINTS: usize = 10_000;

const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("atom weights must be nonnegative and sum to 1 (sum = {0})")]
    BadWeights(f64),
    #[error("atom weight and angle lists have different lengths ({0} vs {1})")]
    AtomLengthMismatch(usize, usize),
    #[error("|{name}| = {value} exceeds the coefficient polydisc radius 2")]
    OutsidePolydisc { name: &'static str, value: f64 },
}

/// A finite Herglotz measure: weights summing to one placed at angles on the
/// unit circle. Generates genuine positive-real-part expansions via
/// `p_k = 2 sum_j w_j e^{i k theta_j}`, which satisfy `|p_k| <= 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct CaratheodoryAtoms {
    weights: Vec<f64>,
    angles: Vec<f64>,
}

impl CaratheodoryAtoms {
    pub fn new(weights: Vec<f64>, angles: Vec<f64>) -> Result<Self, OracleError> {
        if weights.len() != angles.len() {
            return Err(OracleError::AtomLengthMismatch(weights.len(), angles.len()));
        }
        let sum: f64 = weights.iter().sum();
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) || (sum - 1.0).abs() > 1e-12 {
            return Err(OracleError::BadWeights(sum));
        }
        let angles = angles.into_iter().map(|t| t.rem_euclid(TWO_PI)).collect();
        Ok(Self { weights, angles })
    }

    /// Draws atoms with uniformly random angles and normalized uniform
    /// weights.
    pub fn random<R: Rng>(count: usize, rng: &mut R) -> Self {
        assert!(count >= 1);
        let mut weights: Vec<f64> = (0..count).map(|_| rng.gen_range(1e-3..1.0)).collect();
        let sum: f64 = weights.iter().sum();
        for w in &mut weights {
            *w /= sum;
        }
        let angles = (0..count).map(|_| rng.gen_range(0.0..TWO_PI)).collect();
        Self::new(weights, angles).expect("normalized random atoms are valid")
    }

    /// Rotates every atom by pi. The generated expansion has each odd
    /// coefficient negated, which realizes `q1 = -p1` inside the genuine
    /// Caratheodory class.
    pub fn reflected(&self) -> Self {
        Self {
            weights: self.weights.clone(),
            angles: self
                .angles
                .iter()
                .map(|t| (t + std::f64::consts::PI).rem_euclid(TWO_PI))
                .collect(),
        }
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }
}

/// Expansion `1 + sum_k 2 (sum_j w_j e^{i k theta_j}) z^k` of the
/// positive-real-part function the atoms represent.
pub fn herglotz_sample(atoms: &CaratheodoryAtoms, order: usize) -> ComplexSeries {
    assert!(order >= 1);
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Complex64::new(1.0, 0.0));
    for k in 1..=order {
        let mut c = Complex64::new(0.0, 0.0);
        for (w, t) in atoms.weights.iter().zip(&atoms.angles) {
            c += *w * Complex64::from_polar(1.0, k as f64 * t);
        }
        coeffs.push(2.0 * c);
    }
    ComplexSeries::from_raw(coeffs)
}

/// The Schwarz function `u = (p - 1) / (p + 1)` of a positive-real-part
/// expansion with `p(0) = 1`; satisfies `u(0) = 0`, `u_1 = p_1/2`,
/// `u_2 = (p_2 - p_1^2/2)/2`.
pub fn schwarz_from_p(p: &ComplexSeries) -> ComplexSeries {
    assert!(
        (p.coeff(0) - Complex64::new(1.0, 0.0)).norm() < 1e-12,
        "needs p(0) = 1"
    );
    let one = ComplexSeries::one(p.order());
    let num = p.sub(&one);
    let den = p.add(&one);
    num.mul(&den.recip().expect("p + 1 has constant term 2"))
}

/// Largest coefficient modulus of `f - psi * (phi o w)` through the shared
/// order; zero certifies the expansion-level quasi-subordination relation.
pub fn quasi_sub_residual(
    f: &ComplexSeries,
    phi: &ComplexSeries,
    psi: &ComplexSeries,
    w: &ComplexSeries,
) -> Result<f64, SeriesError> {
    let rhs = psi.mul(&phi.compose(w)?);
    Ok(f.max_abs_diff(&rhs))
}

/// One point of the relaxed feasible set: `|p1|, |p2|, |q2| <= 2` with
/// `q1 = -p1` built in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelaxedPoint {
    pub p1: Complex64,
    pub p2: Complex64,
    pub q2: Complex64,
}

impl RelaxedPoint {
    pub fn new(p1: Complex64, p2: Complex64, q2: Complex64) -> Result<Self, OracleError> {
        for (name, v) in [("p1", p1), ("p2", p2), ("q2", q2)] {
            if v.norm() > 2.0 + 1e-12 {
                return Err(OracleError::OutsidePolydisc {
                    name,
                    value: v.norm(),
                });
            }
        }
        Ok(Self { p1, p2, q2 })
    }

    pub fn q1(&self) -> Complex64 {
        -self.p1
    }

    /// The point generated by a Herglotz sample together with its reflected
    /// partner: `q_k = (-1)^k p_k`, so `q2 = p2`.
    pub fn from_reflected_sample(p: &ComplexSeries) -> Result<Self, OracleError> {
        Self::new(p.coeff(1), p.coeff(2), p.coeff(2))
    }
}

fn phi_series(spec: &ClassSpec) -> ComplexSeries {
    ComplexSeries::from_raw(vec![
        Complex64::new(1.0, 0.0),
        Complex64::new(spec.phi().b1(), 0.0),
        Complex64::new(spec.phi().b2(), 0.0),
    ])
}

fn psi_series(spec: &ClassSpec) -> ComplexSeries {
    // C2 and beyond never reach orders <= 2 of psi * (phi o u - 1) because
    // the second factor vanishes at the origin.
    ComplexSeries::from_raw(vec![spec.psi().c0(), spec.psi().c1(), Complex64::new(0.0, 0.0)])
}

/// The transformed side `(1/gamma) (z^{1-lambda} F' / F^{1-lambda} - 1)` for
/// `F` the operator image of `f`, as a series. The `z` powers are balanced
/// through `F' * (F/z)^{lambda-1}`.
fn class_lhs_b(f: &NormalizedSeries, spec: &ClassSpec) -> ComplexSeries {
    let transformed = apply_operator(spec.op(), f, OperatorVariant::Modulus);
    let lam = Complex64::new(spec.lambda() - 1.0, 0.0);
    let ratio = transformed
        .series()
        .derivative()
        .mul(&transformed.fractional_power(lam));
    let one = ComplexSeries::one(ratio.order());
    ratio.sub(&one).scale(spec.gamma().inv())
}

/// The transformed side `(1/gamma) (z F' / ((1-lambda) F + lambda z F') - 1)`
/// for the ratio-type family.
fn class_lhs_g(f: &NormalizedSeries, spec: &ClassSpec) -> Result<ComplexSeries, SeriesError> {
    let transformed = apply_operator(spec.op(), f, OperatorVariant::Modulus);
    let fs = transformed.series();
    let deriv = fs.derivative();
    let lam = spec.lambda();
    let den = fs
        .scale(Complex64::new(1.0 - lam, 0.0))
        .add(&deriv.shift_up().scale(Complex64::new(lam, 0.0)));
    // z F' / den = F' * (den/z)^{-1}; den/z has constant term 1 up to
    // rounding, so the multiplicative inverse is well defined.
    let ratio = deriv.mul(&den.shift_down().recip()?);
    let one = ComplexSeries::one(ratio.order());
    Ok(ratio.sub(&one).scale(spec.gamma().inv()))
}

/// Residual of the class membership relation for kind `B` through order 2:
/// the transformed side against `psi * (phi o u - 1)` for a Schwarz series
/// `u`. Zero (to rounding) certifies the coefficient relations.
pub fn class_residual_b(
    f: &NormalizedSeries,
    spec: &ClassSpec,
    u: &ComplexSeries,
) -> Result<f64, OracleError> {
    let lhs = class_lhs_b(f, spec);
    let phi = phi_series(spec);
    let one = ComplexSeries::one(2);
    let rhs = psi_series(spec).mul(&phi.compose(u)?.sub(&one));
    Ok(lhs.truncate(2).max_abs_diff(&rhs))
}

/// Residual of the class membership relation for kind `G` through order 2.
pub fn class_residual_g(
    f: &NormalizedSeries,
    spec: &ClassSpec,
    u: &ComplexSeries,
) -> Result<f64, OracleError> {
    let lhs = class_lhs_g(f, spec)?;
    let phi = phi_series(spec);
    let one = ComplexSeries::one(2);
    let rhs = psi_series(spec).mul(&phi.compose(u)?.sub(&one));
    Ok(lhs.truncate(2).max_abs_diff(&rhs))
}

/// Shared right-hand side of the order-2 coefficient relation:
/// `gamma [ C1 B1 p1 / 2 + C0 B1 (p2 - p1^2/2) / 2 + C0 B2 p1^2 / 4 ]`.
fn order2_rhs(spec: &ClassSpec, p1: Complex64, p2: Complex64) -> Complex64 {
    let b1 = spec.phi().b1();
    let b2 = spec.phi().b2();
    let c0 = spec.psi().c0();
    let c1 = spec.psi().c1();
    spec.gamma()
        * (0.5 * c1 * b1 * p1 + 0.5 * c0 * b1 * (p2 - 0.5 * p1 * p1) + 0.25 * c0 * b2 * p1 * p1)
}

/// Solves the direct-side coefficient relations of kind `B` for `(a2, a3)`
/// given the first two coefficients of `p`. The companion relations on the
/// inverse side are not imposed, so this is the construct-then-verify path.
pub fn solve_direct_b(
    spec: &ClassSpec,
    p1: Complex64,
    p2: Complex64,
) -> (Complex64, Complex64) {
    let (th2, th3) = (spec.theta2(), spec.theta3());
    let lam = spec.lambda();
    let b1 = spec.phi().b1();
    let a2 = spec.gamma() * spec.psi().c0() * b1 * p1 / (2.0 * (1.0 + lam) * th2);
    let a3 = (order2_rhs(spec, p1, p2)
        - 0.5 * (lam - 1.0) * (lam + 2.0) * th2 * th2 * a2 * a2)
        / ((lam + 2.0) * th3);
    (a2, a3)
}

/// Direct-side solve for kind `G`.
pub fn solve_direct_g(
    spec: &ClassSpec,
    p1: Complex64,
    p2: Complex64,
) -> (Complex64, Complex64) {
    let (th2, th3) = (spec.theta2(), spec.theta3());
    let lam = spec.lambda();
    let b1 = spec.phi().b1();
    let a2 = spec.gamma() * spec.psi().c0() * b1 * p1 / (2.0 * (1.0 - lam) * th2);
    let a3 = (order2_rhs(spec, p1, p2) - (lam * lam - 1.0) * th2 * th2 * a2 * a2)
        / (2.0 * (1.0 - lam) * th3);
    (a2, a3)
}

/// The eliminated forms for kind `B`: `a2^2` from the added pair of order-2
/// relations with the squared linear relation substituted, and `a3` from the
/// subtracted pair.
pub fn solve_proof_relations_b(
    point: &RelaxedPoint,
    spec: &ClassSpec,
) -> Result<(Complex64, Complex64), OracleError> {
    debug_assert_eq!(spec.kind(), ClassKind::B);
    let (th2, th3) = (spec.theta2(), spec.theta3());
    let lam = spec.lambda();
    let (b1, b2) = (spec.phi().b1(), spec.phi().b2());
    let gamma = spec.gamma();
    let (c0, c1) = (spec.psi().c0(), spec.psi().c1());

    let shape = (lam - 1.0) * (lam + 2.0) * th2 * th2 + 2.0 * (lam + 2.0) * th3;
    let den = 2.0 * gamma * c0 * b1 * b1 * shape
        - 4.0 * (b2 - b1) * (1.0 + lam).powi(2) * th2 * th2;
    if den.norm() <= 2.0 * DEGENERACY_TOL {
        return Err(BoundsError::Degenerate(den.norm()).into());
    }
    let gc0b = gamma * c0 * b1;
    let a2sq = gc0b * gc0b * b1 * (point.p2 + point.q2) / den;

    let q1 = point.q1();
    let p1 = point.p1;
    let a3 = gamma * c0 * b1 * (point.p2 - point.q2) / (4.0 * (lam + 2.0) * th3)
        + gamma * b1 * c1 * (p1 - q1) / (4.0 * (lam + 2.0) * th3)
        + gamma * gamma * c0 * c0 * b1 * b1 * (p1 * p1 + q1 * q1)
            / (8.0 * (1.0 + lam).powi(2) * th2 * th2);
    Ok((a2sq, a3))
}

/// The eliminated forms for kind `G`, derived by the same two-step
/// elimination with `(1 - lambda)` and `(lambda^2 - 1)` coefficients.
pub fn solve_proof_relations_g(
    point: &RelaxedPoint,
    spec: &ClassSpec,
) -> Result<(Complex64, Complex64), OracleError> {
    debug_assert_eq!(spec.kind(), ClassKind::G);
    let (th2, th3) = (spec.theta2(), spec.theta3());
    let lam = spec.lambda();
    let (b1, b2) = (spec.phi().b1(), spec.phi().b2());
    let gamma = spec.gamma();
    let (c0, c1) = (spec.psi().c0(), spec.psi().c1());

    let den = 4.0
        * (gamma * c0 * b1 * b1 * ((lam * lam - 1.0) * th2 * th2 + 2.0 * (1.0 - lam) * th3)
            + (1.0 - lam).powi(2) * (b1 - b2) * th2 * th2);
    if den.norm() <= 4.0 * DEGENERACY_TOL {
        return Err(BoundsError::Degenerate(den.norm()).into());
    }
    let gc0b = gamma * c0 * b1;
    let a2sq = gc0b * gc0b * b1 * (point.p2 + point.q2) / den;

    let q1 = point.q1();
    let p1 = point.p1;
    let a3 = gamma * gamma * c0 * c0 * b1 * b1 * (p1 * p1 + q1 * q1)
        / (8.0 * (1.0 - lam).powi(2) * th2 * th2)
        + gamma * c1 * b1 * (p1 - q1) / (8.0 * (1.0 - lam) * th3)
        + gamma * c0 * b1 * (point.p2 - point.q2) / (8.0 * (1.0 - lam) * th3);
    Ok((a2sq, a3))
}

/// Kind-dispatching eliminated solve.
pub fn solve_proof_relations(
    point: &RelaxedPoint,
    spec: &ClassSpec,
) -> Result<(Complex64, Complex64), OracleError> {
    match spec.kind() {
        ClassKind::B => solve_proof_relations_b(point, spec),
        ClassKind::G => solve_proof_relations_g(point, spec),
    }
}

fn polar_grid(phases: usize, moduli: usize) -> Vec<Complex64> {
    let mut points = Vec::with_capacity(phases * moduli);
    for i in 0..phases {
        let theta = TWO_PI * i as f64 / phases as f64;
        for j in 0..moduli {
            let r = 2.0 * j as f64 / (moduli - 1) as f64;
            points.push(Complex64::from_polar(r, theta));
        }
    }
    points
}

fn random_disc_point<R: Rng>(rng: &mut R) -> Complex64 {
    let r = 2.0 * rng.gen_range(0.0f64..1.0).sqrt();
    Complex64::from_polar(r, rng.gen_range(0.0..TWO_PI))
}

/// Maximum of `|a2|` over a grid-plus-random scan of the relaxed feasible
/// set, refined at the analytic extreme point `p2 = q2 = 2`. Must equal the
/// closed-form `|a2|` bound.
pub fn relaxed_max_a2(spec: &ClassSpec, grid: usize, seed: u64) -> Result<f64, OracleError> {
    let grid = grid.max(2);
    let moduli = grid / 2 + 1;
    let zero = Complex64::new(0.0, 0.0);
    let mut best: f64 = 0.0;
    let mut eval = |p2: Complex64, q2: Complex64| -> Result<(), OracleError> {
        let point = RelaxedPoint { p1: zero, p2, q2 };
        let (a2sq, _) = solve_proof_relations(&point, spec)?;
        best = best.max(a2sq.norm().sqrt());
        Ok(())
    };

    // analytic extreme: |p2 + q2| = 4
    let two = Complex64::new(2.0, 0.0);
    eval(two, two)?;

    let points = polar_grid(grid, moduli);
    for &p2 in &points {
        for &q2 in &points {
            eval(p2, q2)?;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RELAX_RANDOM_POINTS {
        eval(random_disc_point(&mut rng), random_disc_point(&mut rng))?;
    }
    Ok(best)
}

/// The three term coefficients of `a3` over the relaxation with
/// `q1 = -p1` substituted: `a3 = cp1 * p1 + cp1sq * p1^2 + cdiff * (p2 - q2)`.
fn a3_term_coefficients(spec: &ClassSpec) -> (Complex64, Complex64, Complex64) {
    let (th2, th3) = (spec.theta2(), spec.theta3());
    let lam = spec.lambda();
    let b1 = spec.phi().b1();
    let gamma = spec.gamma();
    let (c0, c1) = (spec.psi().c0(), spec.psi().c1());
    match spec.kind() {
        ClassKind::B => (
            gamma * c1 * b1 / (2.0 * (lam + 2.0) * th3),
            gamma * gamma * c0 * c0 * b1 * b1 / (4.0 * (1.0 + lam).powi(2) * th2 * th2),
            gamma * c0 * b1 / (4.0 * (lam + 2.0) * th3),
        ),
        ClassKind::G => (
            gamma * c1 * b1 / (4.0 * (1.0 - lam) * th3),
            gamma * gamma * c0 * c0 * b1 * b1 / (4.0 * (1.0 - lam).powi(2) * th2 * th2),
            gamma * c0 * b1 / (8.0 * (1.0 - lam) * th3),
        ),
    }
}

/// Maximum of `|a3|` over the relaxed feasible set: per-variable grids and a
/// random top-up, refined at the analytic extreme where the `p1`-terms and
/// the `p2 - q2` term align in phase. Must equal the closed-form `|a3|`
/// bound (for kind `G`, the elimination-consistent form).
pub fn relaxed_max_a3(spec: &ClassSpec, grid: usize, seed: u64) -> Result<f64, OracleError> {
    let grid = grid.max(2);
    let moduli = grid / 2 + 1;
    let (cp1, cp1sq, cdiff) = a3_term_coefficients(spec);

    // phase aligning p1 and p1^2 terms: arg(cp1) + t = arg(cp1sq) + 2t
    let phase = if cp1sq.norm() > 0.0 && cp1.norm() > 0.0 {
        cp1.arg() - cp1sq.arg()
    } else {
        0.0
    };
    let p1_star = Complex64::from_polar(2.0, phase);
    let p1_part = cp1 * p1_star + cp1sq * p1_star * p1_star;
    let target = if p1_part.norm() > 0.0 {
        p1_part.arg()
    } else {
        0.0
    };
    let beta = if cdiff.norm() > 0.0 {
        target - cdiff.arg()
    } else {
        0.0
    };
    let pq_star = Complex64::from_polar(2.0, beta);

    let mut best: f64 = 0.0;
    let mut eval = |point: RelaxedPoint| -> Result<(), OracleError> {
        let (_, a3) = solve_proof_relations(&point, spec)?;
        best = best.max(a3.norm());
        Ok(())
    };

    eval(RelaxedPoint {
        p1: p1_star,
        p2: pq_star,
        q2: -pq_star,
    })?;

    let points = polar_grid(grid, moduli);
    for &p1 in &points {
        eval(RelaxedPoint {
            p1,
            p2: pq_star,
            q2: -pq_star,
        })?;
    }
    for &p2 in &points {
        for &q2 in &points {
            eval(RelaxedPoint {
                p1: p1_star,
                p2,
                q2,
            })?;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    for _ in 0..RELAX_RANDOM_POINTS {
        eval(RelaxedPoint {
            p1: random_disc_point(&mut rng),
            p2: random_disc_point(&mut rng),
            q2: random_disc_point(&mut rng),
        })?;
    }
    Ok(best)
}

/// Stable per-sample seed derivation (SplitMix64 over base + index).
pub fn sample_seed(base: u64, index: u64) -> u64 {
    let mut x = base.wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// One verified sample: the realizable relaxed point, the `|a2|`, `|a3|`
/// values the coefficient relations give it, and the margins to the bounds.
#[derive(Debug, Clone, Copy)]
pub struct SampleRecord {
    pub seed: u64,
    pub p1: Complex64,
    pub p2: Complex64,
    pub q2: Complex64,
    pub abs_a2: f64,
    pub abs_a3: f64,
    pub bound_a2: f64,
    pub bound_a3: f64,
    pub margin_a2: f64,
    pub margin_a3: f64,
}

impl SampleRecord {
    pub const CSV_HEADER: &'static str =
        "seed,p1_re,p1_im,p2_re,p2_im,q2_re,q2_im,abs_a2,abs_a3,bound_a2,bound_a3,margin_a2,margin_a3";

    pub fn csv_row(&self) -> String {
        use crate::numfmt::fmt17;
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.seed,
            fmt17(self.p1.re),
            fmt17(self.p1.im),
            fmt17(self.p2.re),
            fmt17(self.p2.im),
            fmt17(self.q2.re),
            fmt17(self.q2.im),
            fmt17(self.abs_a2),
            fmt17(self.abs_a3),
            fmt17(self.bound_a2),
            fmt17(self.bound_a3),
            fmt17(self.margin_a2),
            fmt17(self.margin_a3)
        )
    }
}

/// Draws one realizable sample (Herglotz atoms, reflected partner) and
/// evaluates it against the given bounds.
pub fn sample_record(
    spec: &ClassSpec,
    bounds: (f64, f64),
    seed: u64,
    atom_count: usize,
) -> Result<SampleRecord, OracleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let atoms = CaratheodoryAtoms::random(atom_count, &mut rng);
    let p = herglotz_sample(&atoms, 2);
    let point = RelaxedPoint::from_reflected_sample(&p)?;
    let (a2sq, a3) = solve_proof_relations(&point, spec)?;
    let abs_a2 = a2sq.norm().sqrt();
    let abs_a3 = a3.norm();
    Ok(SampleRecord {
        seed,
        p1: point.p1,
        p2: point.p2,
        q2: point.q2,
        abs_a2,
        abs_a3,
        bound_a2: bounds.0,
        bound_a3: bounds.1,
        margin_a2: bounds.0 - abs_a2,
        margin_a3: bounds.1 - abs_a3,
    })
}

/// The sound closed-form bounds a sampling run measures margins against:
/// for kind `G` the `|a3|` comparison uses the elimination-consistent form
/// (the printed form is not an upper bound of the relaxation when
/// `|gamma| > 1`).
pub fn sound_bounds(spec: &ClassSpec) -> Result<(f64, f64), BoundsError> {
    match spec.kind() {
        ClassKind::B => Ok((
            crate::bounds::bound_a2_b(spec)?,
            crate::bounds::bound_a3_b(spec)?,
        )),
        ClassKind::G => Ok((
            crate::bounds::bound_a2_g(spec)?,
            crate::bounds::bound_a3_g_derived(spec)?,
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{phi_preset, MultiplierPsi, PhiPreset, TargetPhi};
    use crate::hlzeta::OperatorSpec;
    use rand::rngs::StdRng;
    use rand::SeedableRng as _;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn koebe_identity(kind: ClassKind, gamma: Complex64, lambda: f64) -> ClassSpec {
        ClassSpec::new(
            kind,
            gamma,
            lambda,
            OperatorSpec::identity(),
            phi_preset(PhiPreset::Koebe).unwrap(),
            MultiplierPsi::new(c(1.0, 0.0), c(0.0, 0.0)).unwrap(),
        )
        .unwrap()
    }

    fn mild_random_spec(rng: &mut StdRng, kind: ClassKind) -> ClassSpec {
        use rand::Rng as _;
        loop {
            let gamma = Complex64::from_polar(rng.gen_range(0.4..1.8), rng.gen_range(0.0..6.28));
            let lambda = match kind {
                ClassKind::B => rng.gen_range(0.0..1.8),
                ClassKind::G => rng.gen_range(0.0..0.8),
            };
            let op = match OperatorSpec::new(
                c(rng.gen_range(-1.0..1.5), 0.0),
                c(rng.gen_range(0.1..2.0), 0.0),
            ) {
                Ok(op) => op,
                Err(_) => continue,
            };
            let phi = TargetPhi::new(rng.gen_range(0.4..2.2), rng.gen_range(-1.5..1.5), None)
                .unwrap();
            let psi = MultiplierPsi::new(
                Complex64::from_polar(rng.gen_range(0.2..1.0), rng.gen_range(0.0..6.28)),
                Complex64::from_polar(rng.gen_range(0.0..0.9), rng.gen_range(0.0..6.28)),
            )
            .unwrap();
            let spec = ClassSpec::new(kind, gamma, lambda, op, phi, psi).unwrap();
            let nondegenerate = match kind {
                ClassKind::B => crate::bounds::bound_a2_b(&spec).map(|v| v < 50.0),
                ClassKind::G => crate::bounds::bound_a2_g(&spec).map(|v| v < 50.0),
            };
            if nondegenerate.unwrap_or(false) {
                return spec;
            }
        }
    }

    #[test]
    fn herglotz_single_atom_gives_all_twos() {
        let atoms = CaratheodoryAtoms::new(vec![1.0], vec![0.0]).unwrap();
        let p = herglotz_sample(&atoms, 6);
        assert_eq!(p.coeff(0), c(1.0, 0.0));
        for k in 1..=6 {
            assert!((p.coeff(k) - c(2.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn herglotz_two_opposite_atoms() {
        let atoms =
            CaratheodoryAtoms::new(vec![0.5, 0.5], vec![0.0, std::f64::consts::PI]).unwrap();
        let p = herglotz_sample(&atoms, 3);
        assert!(p.coeff(1).norm() < 1e-14);
        assert!((p.coeff(2) - c(2.0, 0.0)).norm() < 1e-13);
        assert!(p.coeff(3).norm() < 1e-13);
    }

    #[test]
    fn herglotz_respects_coefficient_bound() {
        let mut rng = StdRng::seed_from_u64(1234);
        for _ in 0..500 {
            let atoms = CaratheodoryAtoms::random(DEFAULT_ATOMS, &mut rng);
            let p = herglotz_sample(&atoms, 10);
            for k in 1..=10 {
                assert!(p.coeff(k).norm() <= 2.0 + 1e-12);
            }
        }
    }

    #[test]
    fn atoms_validation() {
        assert!(CaratheodoryAtoms::new(vec![0.5, 0.4], vec![0.0, 1.0]).is_err());
        assert!(CaratheodoryAtoms::new(vec![1.2, -0.2], vec![0.0, 1.0]).is_err());
        assert!(CaratheodoryAtoms::new(vec![0.5], vec![0.0, 1.0]).is_err());
        let a = CaratheodoryAtoms::new(vec![0.5, 0.5], vec![-1.0, 9.0]).unwrap();
        assert!(a.angles().iter().all(|&t| (0.0..TWO_PI).contains(&t)));
    }

    #[test]
    fn reflection_negates_odd_coefficients() {
        let mut rng = StdRng::seed_from_u64(7);
        let atoms = CaratheodoryAtoms::random(3, &mut rng);
        let p = herglotz_sample(&atoms, 6);
        let q = herglotz_sample(&atoms.reflected(), 6);
        for k in 1..=6 {
            let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
            assert!((q.coeff(k) - sign * p.coeff(k)).norm() < 1e-12, "k = {k}");
        }
    }

    #[test]
    fn schwarz_of_constant_is_zero() {
        let p = ComplexSeries::one(5);
        let u = schwarz_from_p(&p);
        assert!(u.max_abs_diff(&ComplexSeries::zero(5)) < 1e-14);
    }

    #[test]
    fn schwarz_of_half_plane_map_is_identity() {
        // p = (1+z)/(1-z) has all coefficients 2 beyond the constant
        let atoms = CaratheodoryAtoms::new(vec![1.0], vec![0.0]).unwrap();
        let p = herglotz_sample(&atoms, 8);
        let u = schwarz_from_p(&p);
        assert!(u.max_abs_diff(&ComplexSeries::identity(8)) < 1e-12);
    }

    #[test]
    fn schwarz_second_coefficient_formula() {
        let mut rng = StdRng::seed_from_u64(99);
        for _ in 0..50 {
            let atoms = CaratheodoryAtoms::random(4, &mut rng);
            let p = herglotz_sample(&atoms, 5);
            let u = schwarz_from_p(&p);
            let p1 = p.coeff(1);
            let p2 = p.coeff(2);
            assert!((u.coeff(1) - p1 / 2.0).norm() < 1e-13);
            assert!((u.coeff(2) - (p2 - p1 * p1 / 2.0) / 2.0).norm() < 1e-13);
        }
    }

    /// Pointwise-exact `u(z) = (p(z)-1)/(p(z)+1)` from the atoms themselves.
    fn schwarz_exact(atoms: &CaratheodoryAtoms, z: Complex64) -> Complex64 {
        let mut p = Complex64::new(0.0, 0.0);
        for (w, t) in atoms.weights().iter().zip(atoms.angles()) {
            let x = Complex64::from_polar(1.0, *t);
            p += *w * (1.0 + x * z) / (1.0 - x * z);
        }
        (p - 1.0) / (p + 1.0)
    }

    #[test]
    fn schwarz_samples_stay_inside_disk_on_grid() {
        // The sampled functions are genuinely Schwarz: |u| < 1 on a 64x64
        // polar grid of radius 0.95 (exact rational evaluation). The order-10
        // truncation tracks the exact values within the tail bound
        // r^11/(1-r), which is only informative away from the boundary; a
        // truncation by itself can overshoot 1 near radius 0.95.
        let mut rng = StdRng::seed_from_u64(2024);
        for _ in 0..25 {
            let atoms = CaratheodoryAtoms::random(DEFAULT_ATOMS, &mut rng);
            let u = schwarz_from_p(&herglotz_sample(&atoms, 10));
            for i in 1..=64 {
                let r = 0.95 * i as f64 / 64.0;
                for j in 0..64 {
                    let z = Complex64::from_polar(r, TWO_PI * j as f64 / 64.0);
                    let exact = schwarz_exact(&atoms, z);
                    assert!(exact.norm() < 1.0, "|u| >= 1 at {z}");
                    if r <= 0.6 {
                        let tail = r.powi(11) / (1.0 - r);
                        assert!(
                            (u.eval(z) - exact).norm() <= tail + 1e-12,
                            "truncation off by more than the tail bound at {z}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn quasi_sub_residual_vanishes_by_construction() {
        let mut rng = StdRng::seed_from_u64(5);
        use rand::Rng as _;
        for _ in 0..20 {
            let rand_series = |rng: &mut StdRng, first_zero: bool| {
                let mut coeffs: Vec<Complex64> = (0..7)
                    .map(|_| c(rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5)))
                    .collect();
                if first_zero {
                    coeffs[0] = c(0.0, 0.0);
                }
                ComplexSeries::from_raw(coeffs)
            };
            let phi = rand_series(&mut rng, false);
            let psi = rand_series(&mut rng, false);
            let w = rand_series(&mut rng, true);
            let f = psi.mul(&phi.compose(&w).unwrap());
            assert!(quasi_sub_residual(&f, &phi, &psi, &w).unwrap() < 1e-12);
        }
    }

    #[test]
    fn quasi_sub_reduces_to_series_equality() {
        // psi = 1, w = z: residual is the max coefficient gap
        let phi = ComplexSeries::from_reals(&[1.0, 2.0, 2.0]).unwrap();
        let f = ComplexSeries::from_reals(&[1.0, 2.0, 1.5]).unwrap();
        let one = ComplexSeries::one(2);
        let z = ComplexSeries::identity(2);
        let r = quasi_sub_residual(&f, &phi, &one, &z).unwrap();
        assert!((r - 0.5).abs() < 1e-14);
    }

    #[test]
    fn quasi_sub_residual_is_linear_in_perturbation() {
        let phi = ComplexSeries::from_reals(&[1.0, 2.0, 2.0, 1.0]).unwrap();
        let psi = ComplexSeries::from_reals(&[0.9, 0.1, 0.0, 0.0]).unwrap();
        let w = ComplexSeries::from_reals(&[0.0, 0.8, 0.1, 0.0]).unwrap();
        let mut f = psi.mul(&phi.compose(&w).unwrap());
        let eps = 3.5e-4;
        let bump = ComplexSeries::from_raw(vec![c(0.0, 0.0), c(0.0, 0.0), c(eps, 0.0), c(0.0, 0.0)]);
        f = f.add(&bump);
        let r = quasi_sub_residual(&f, &phi, &psi, &w).unwrap();
        assert!((r - eps).abs() < 1e-15);
    }

    #[test]
    fn residual_b_round_trip() {
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..20 {
            let spec = mild_random_spec(&mut rng, ClassKind::B);
            let atoms = CaratheodoryAtoms::random(3, &mut rng);
            let p = herglotz_sample(&atoms, 10);
            let u = schwarz_from_p(&p);
            let (a2, a3) = solve_direct_b(&spec, p.coeff(1), p.coeff(2));
            let f = NormalizedSeries::from_tail(10, &[a2, a3]);
            let res = class_residual_b(&f, &spec, &u).unwrap();
            assert!(res < 1e-10, "residual {res}");
        }
    }

    #[test]
    fn residual_b_zero_schwarz_measures_lhs() {
        let spec = koebe_identity(ClassKind::B, c(2.0, 1.0), 0.5);
        let u = ComplexSeries::zero(5);
        let f = NormalizedSeries::from_tail(10, &[c(0.2, 0.1), c(0.05, 0.0)]);
        let lhs = class_lhs_b(&f, &spec);
        let expect = (0..=2).map(|k| lhs.coeff(k).norm()).fold(0.0, f64::max);
        let res = class_residual_b(&f, &spec, &u).unwrap();
        assert!((res - expect).abs() < 1e-14);
        // and the residual vanishes iff the transformed coefficients do
        let trivial = NormalizedSeries::identity(10);
        assert!(class_residual_b(&trivial, &spec, &u).unwrap() < 1e-14);
    }

    #[test]
    fn residual_b_lambda_one_matches_derivative_form() {
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..10 {
            let base = mild_random_spec(&mut rng, ClassKind::B);
            let spec = ClassSpec::new(
                ClassKind::B,
                base.gamma(),
                1.0,
                *base.op(),
                *base.phi(),
                *base.psi(),
            )
            .unwrap();
            let f = NormalizedSeries::from_tail(10, &[c(0.3, -0.1), c(0.1, 0.2)]);
            let u = schwarz_from_p(&herglotz_sample(
                &CaratheodoryAtoms::random(3, &mut rng),
                10,
            ));
            // generic path
            let generic = class_residual_b(&f, &spec, &u).unwrap();
            // direct path: (1/gamma)((J f)' - 1)
            let transformed = apply_operator(spec.op(), &f, OperatorVariant::Modulus);
            let one = ComplexSeries::one(9);
            let lhs = transformed
                .series()
                .derivative()
                .sub(&one)
                .scale(spec.gamma().inv());
            let phi = phi_series(&spec);
            let rhs = psi_series(&spec).mul(&phi.compose(&u).unwrap().sub(&ComplexSeries::one(2)));
            let direct = lhs.truncate(2).max_abs_diff(&rhs);
            assert!((generic - direct).abs() < 1e-12);
        }
    }

    #[test]
    fn residual_g_round_trip() {
        let mut rng = StdRng::seed_from_u64(43);
        for _ in 0..20 {
            let spec = mild_random_spec(&mut rng, ClassKind::G);
            let atoms = CaratheodoryAtoms::random(3, &mut rng);
            let p = herglotz_sample(&atoms, 10);
            let u = schwarz_from_p(&p);
            let (a2, a3) = solve_direct_g(&spec, p.coeff(1), p.coeff(2));
            let f = NormalizedSeries::from_tail(10, &[a2, a3]);
            let res = class_residual_g(&f, &spec, &u).unwrap();
            assert!(res < 1e-10, "residual {res}");
        }
    }

    #[test]
    fn residual_g_trivial_case() {
        let spec = koebe_identity(ClassKind::G, c(1.0, 0.0), 0.3);
        let f = NormalizedSeries::identity(10);
        let u = ComplexSeries::zero(5);
        assert!(class_residual_g(&f, &spec, &u).unwrap() < 1e-14);
    }

    #[test]
    fn residual_g_at_lambda_zero_matches_b() {
        let mut rng = StdRng::seed_from_u64(44);
        for _ in 0..10 {
            let base = mild_random_spec(&mut rng, ClassKind::G);
            let spec_g = ClassSpec::new(
                ClassKind::G,
                base.gamma(),
                0.0,
                *base.op(),
                *base.phi(),
                *base.psi(),
            )
            .unwrap();
            let spec_b = ClassSpec::new(
                ClassKind::B,
                base.gamma(),
                0.0,
                *base.op(),
                *base.phi(),
                *base.psi(),
            )
            .unwrap();
            let f = NormalizedSeries::from_tail(10, &[c(0.25, 0.05), c(-0.1, 0.15)]);
            let u = schwarz_from_p(&herglotz_sample(
                &CaratheodoryAtoms::random(3, &mut rng),
                10,
            ));
            let rg = class_residual_g(&f, &spec_g, &u).unwrap();
            let rb = class_residual_b(&f, &spec_b, &u).unwrap();
            assert!((rg - rb).abs() < 1e-12, "{rg} vs {rb}");
        }
    }

    #[test]
    fn solve_b_vanishing_numerator() {
        let spec = koebe_identity(ClassKind::B, c(1.0, 0.0), 0.0);
        let point = RelaxedPoint::new(c(1.0, 0.5), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        let (a2sq, _) = solve_proof_relations_b(&point, &spec).unwrap();
        assert_eq!(a2sq.norm(), 0.0);
    }

    #[test]
    fn solve_b_antisymmetric_second_coefficients() {
        // p1 = q1 = 0 and p2 = -q2 leaves only the first a3 term
        let spec = koebe_identity(ClassKind::B, c(1.0, 0.0), 0.25);
        let p2 = c(1.1, -0.4);
        let point = RelaxedPoint::new(c(0.0, 0.0), p2, -p2).unwrap();
        let (_, a3) = solve_proof_relations_b(&point, &spec).unwrap();
        let lam = spec.lambda();
        let expect = spec.gamma() * spec.psi().c0() * spec.phi().b1() * p2
            / (2.0 * (lam + 2.0) * spec.theta3());
        assert!((a3 - expect).norm() < 1e-14);
    }

    #[test]
    fn solve_b_extreme_point_attains_two() {
        let spec = koebe_identity(ClassKind::B, c(1.0, 0.0), 0.0);
        let point = RelaxedPoint::new(c(2.0, 0.0), c(2.0, 0.0), c(2.0, 0.0)).unwrap();
        let (a2sq, _) = solve_proof_relations_b(&point, &spec).unwrap();
        assert!((a2sq.norm() - 2.0).abs() < 1e-14);
    }

    #[test]
    fn solve_g_matches_b_at_lambda_zero() {
        let mut rng = StdRng::seed_from_u64(45);
        use rand::Rng as _;
        for _ in 0..20 {
            let base = mild_random_spec(&mut rng, ClassKind::G);
            let spec_g = ClassSpec::new(
                ClassKind::G,
                base.gamma(),
                0.0,
                *base.op(),
                *base.phi(),
                *base.psi(),
            )
            .unwrap();
            let spec_b = ClassSpec::new(
                ClassKind::B,
                base.gamma(),
                0.0,
                *base.op(),
                *base.phi(),
                *base.psi(),
            )
            .unwrap();
            let point = RelaxedPoint::new(
                Complex64::from_polar(rng.gen_range(0.0..2.0), rng.gen_range(0.0..TWO_PI)),
                Complex64::from_polar(rng.gen_range(0.0..2.0), rng.gen_range(0.0..TWO_PI)),
                Complex64::from_polar(rng.gen_range(0.0..2.0), rng.gen_range(0.0..TWO_PI)),
            )
            .unwrap();
            let (a2g, a3g) = solve_proof_relations_g(&point, &spec_g).unwrap();
            let (a2b, a3b) = solve_proof_relations_b(&point, &spec_b).unwrap();
            assert!((a2g - a2b).norm() < 1e-12 * a2b.norm().max(1.0));
            assert!((a3g - a3b).norm() < 1e-12 * a3b.norm().max(1.0));
        }
    }

    #[test]
    fn solve_g_vanishing_numerator() {
        let spec = koebe_identity(ClassKind::G, c(1.0, 0.0), 0.4);
        let point = RelaxedPoint::new(c(0.7, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        let (a2sq, _) = solve_proof_relations_g(&point, &spec).unwrap();
        assert_eq!(a2sq.norm(), 0.0);
    }

    #[test]
    fn relaxed_point_validation() {
        assert!(RelaxedPoint::new(c(2.1, 0.0), c(0.0, 0.0), c(0.0, 0.0)).is_err());
        assert!(RelaxedPoint::new(c(2.0, 0.0), c(-2.0, 0.0), c(0.0, 2.0)).is_ok());
    }

    #[test]
    fn relaxed_max_matches_koebe_values() {
        let spec = koebe_identity(ClassKind::B, c(1.0, 0.0), 0.0);
        let a2 = relaxed_max_a2(&spec, DEFAULT_GRID, 0).unwrap();
        assert!((a2 - 2.0f64.sqrt()).abs() < 1e-9);
        let a3 = relaxed_max_a3(&spec, DEFAULT_GRID, 0).unwrap();
        assert!((a3 - 5.0).abs() < 1e-9);

        let spec = koebe_identity(ClassKind::B, c(1.0, 0.0), 1.0);
        let a2 = relaxed_max_a2(&spec, DEFAULT_GRID, 0).unwrap();
        assert!((a2 - 2.0 / 6.0f64.sqrt()).abs() < 1e-9);
        let a3 = relaxed_max_a3(&spec, DEFAULT_GRID, 0).unwrap();
        assert!((a3 - 5.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn relaxed_max_zero_multiplier() {
        let spec = ClassSpec::new(
            ClassKind::B,
            c(1.0, 0.0),
            0.0,
            OperatorSpec::identity(),
            TargetPhi::new(2.0, 3.0, None).unwrap(),
            MultiplierPsi::new(c(0.0, 0.0), c(0.0, 0.0)).unwrap(),
        )
        .unwrap();
        assert_eq!(relaxed_max_a2(&spec, DEFAULT_GRID, 0).unwrap(), 0.0);
        assert_eq!(relaxed_max_a3(&spec, DEFAULT_GRID, 0).unwrap(), 0.0);
    }

    #[test]
    fn relaxed_max_equals_closed_forms_on_random_specs() {
        let mut rng = StdRng::seed_from_u64(2718);
        for kind in [ClassKind::B, ClassKind::G] {
            for _ in 0..10 {
                let spec = mild_random_spec(&mut rng, kind);
                let (bound_a2, bound_a3) = sound_bounds(&spec).unwrap();
                let got_a2 = relaxed_max_a2(&spec, DEFAULT_GRID, 1).unwrap();
                let got_a3 = relaxed_max_a3(&spec, DEFAULT_GRID, 1).unwrap();
                assert!(
                    (got_a2 - bound_a2).abs() < 1e-9 * bound_a2.max(1.0),
                    "{kind:?}: a2 {got_a2} vs {bound_a2}"
                );
                assert!(
                    (got_a3 - bound_a3).abs() < 1e-9 * bound_a3.max(1.0),
                    "{kind:?}: a3 {got_a3} vs {bound_a3}"
                );
            }
        }
    }

    #[test]
    fn sampling_never_exceeds_bound() {
        let mut rng = StdRng::seed_from_u64(31415);
        for kind in [ClassKind::B, ClassKind::G] {
            let spec = mild_random_spec(&mut rng, kind);
            let bounds = sound_bounds(&spec).unwrap();
            for i in 0..2000 {
                let rec = sample_record(&spec, bounds, sample_seed(9, i), DEFAULT_ATOMS).unwrap();
                assert!(rec.margin_a2 >= -1e-9, "a2 margin {}", rec.margin_a2);
                assert!(rec.margin_a3 >= -1e-9, "a3 margin {}", rec.margin_a3);
            }
        }
    }

    #[test]
    fn sample_records_are_seed_deterministic() {
        let spec = koebe_identity(ClassKind::B, c(1.0, 0.0), 0.0);
        let bounds = sound_bounds(&spec).unwrap();
        let a = sample_record(&spec, bounds, 777, DEFAULT_ATOMS).unwrap();
        let b = sample_record(&spec, bounds, 777, DEFAULT_ATOMS).unwrap();
        assert_eq!(a.csv_row(), b.csv_row());
        let c_ = sample_record(&spec, bounds, 778, DEFAULT_ATOMS).unwrap();
        assert_ne!(a.csv_row(), c_.csv_row());
    }
}
