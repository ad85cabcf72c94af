//! Tightness probing: how close do genuinely realizable class constructions
//! come to the closed-form bounds?
//!
//! The bounds are suprema over a relaxation, so realizable constructions can
//! only approach them from below; the gap quantifies how non-sharp a bound
//! is for a given parameter choice. The search runs a multistart
//! coordinate-wise pattern search over Herglotz atom weights and angles (the
//! inverse-side expansion is the reflected partner, which keeps the
//! construction inside the genuine class machinery). Derivative-free moves
//! are used throughout: the objective has modulus kinks and its maxima sit
//! on the boundary of the feasible set.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{bound_report, BoundReport, BoundsError, ClassSpec};
use crate::hlzeta::OperatorSpec;
use crate::oracle::{
    herglotz_sample, sample_seed, solve_proof_relations, CaratheodoryAtoms, OracleError,
    RelaxedPoint,
};

const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("search needs budget >= restarts >= 1 (got budget {budget}, restarts {restarts})")]
    BadConfig { budget: usize, restarts: usize },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error("sweep value {value} for axis {axis} is invalid: {reason}")]
    SweepValue {
        axis: String,
        value: f64,
        reason: String,
    },
}

/// Which coefficient modulus to maximize.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchTarget {
    A2,
    A3,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Total objective evaluations across all restarts.
    pub budget: usize,
    /// Independent restarts; they run concurrently and merge by max.
    pub restarts: usize,
    pub seed: u64,
    pub target: SearchTarget,
    /// Atoms per construction.
    pub atoms: usize,
}

impl SearchConfig {
    pub fn new(budget: usize, restarts: usize, seed: u64, target: SearchTarget) -> Self {
        Self {
            budget,
            restarts,
            seed,
            target,
            atoms: crate::oracle::DEFAULT_ATOMS,
        }
    }

    /// Defaults sized to finish in seconds at desk scale.
    pub fn default_for(target: SearchTarget, seed: u64) -> Self {
        Self::new(20_000, 8, seed, target)
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.budget < self.restarts || self.restarts < 1 || self.atoms < 1 {
            return Err(SearchError::BadConfig {
                budget: self.budget,
                restarts: self.restarts,
            });
        }
        Ok(())
    }
}

/// The atom parameters attaining the best value found.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AtomParams {
    pub weights: Vec<f64>,
    pub angles: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TightnessReport {
    pub best_value: f64,
    pub bound: f64,
    /// `best_value / bound`, in `[0, 1]` up to rounding.
    pub ratio: f64,
    pub argmax: AtomParams,
    pub evaluations: usize,
}

/// One row of the optional evaluation trace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRow {
    pub restart: usize,
    pub evaluation: usize,
    pub value: f64,
    pub best_so_far: f64,
}

impl TraceRow {
    pub const CSV_HEADER: &'static str = "restart,evaluation,value,best_so_far";

    pub fn csv_row(&self) -> String {
        use crate::numfmt::fmt17;
        format!(
            "{},{},{},{}",
            self.restart,
            self.evaluation,
            fmt17(self.value),
            fmt17(self.best_so_far)
        )
    }
}

/// Raw search coordinates: `atoms` weight knobs in [0, 1] followed by
/// `atoms` angles. Weights are normalized on evaluation.
fn decode(x: &[f64], atoms: usize) -> CaratheodoryAtoms {
    let raw = &x[..atoms];
    let sum: f64 = raw.iter().sum();
    let weights: Vec<f64> = if sum <= 1e-9 {
        vec![1.0 / atoms as f64; atoms]
    } else {
        raw.iter().map(|w| w / sum).collect()
    };
    let angles = x[atoms..].to_vec();
    CaratheodoryAtoms::new(weights, angles).expect("normalized decode is valid")
}

fn objective(spec: &ClassSpec, target: SearchTarget, atoms: &CaratheodoryAtoms) -> f64 {
    let p = herglotz_sample(atoms, 2);
    let point = match RelaxedPoint::from_reflected_sample(&p) {
        Ok(point) => point,
        Err(_) => return 0.0,
    };
    match solve_proof_relations(&point, spec) {
        Ok((a2sq, a3)) => match target {
            SearchTarget::A2 => a2sq.norm().sqrt(),
            SearchTarget::A3 => a3.norm(),
        },
        Err(_) => 0.0,
    }
}

struct RestartOutcome {
    best_value: f64,
    best_x: Vec<f64>,
    evaluations: usize,
    trace: Vec<TraceRow>,
}

/// Compass pattern search on one start point. Coordinate moves shrink by
/// half after a full sweep without improvement; best-so-far never decreases.
fn pattern_search(
    spec: &ClassSpec,
    target: SearchTarget,
    atoms: usize,
    restart: usize,
    seed: u64,
    budget: usize,
    want_trace: bool,
) -> RestartOutcome {
    let dims = 2 * atoms;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x: Vec<f64> = if restart == 0 {
        // deterministic aligned start: equal weights, common angle
        vec![1.0; atoms].into_iter().chain(vec![0.0; atoms]).collect()
    } else {
        let mut v: Vec<f64> = (0..atoms).map(|_| rng.gen_range(0.05..1.0)).collect();
        v.extend((0..atoms).map(|_| rng.gen_range(0.0..TWO_PI)));
        v
    };
    let mut steps: Vec<f64> = vec![0.25; atoms]
        .into_iter()
        .chain(vec![std::f64::consts::FRAC_PI_2; atoms])
        .collect();

    let mut trace = Vec::new();
    let mut evaluations = 0usize;
    let record = |value: f64, best: f64, evals: usize, trace: &mut Vec<TraceRow>| {
        if want_trace {
            trace.push(TraceRow {
                restart,
                evaluation: evals,
                value,
                best_so_far: best,
            });
        }
    };

    let mut best = objective(spec, target, &decode(&x, atoms));
    evaluations += 1;
    record(best, best, evaluations, &mut trace);

    'outer: while evaluations < budget {
        let mut improved = false;
        for d in 0..dims {
            for sign in [1.0f64, -1.0] {
                if evaluations >= budget {
                    break 'outer;
                }
                let mut cand = x.clone();
                cand[d] += sign * steps[d];
                if d < atoms {
                    cand[d] = cand[d].clamp(0.0, 1.0);
                }
                let value = objective(spec, target, &decode(&cand, atoms));
                evaluations += 1;
                if value > best {
                    best = value;
                    x = cand;
                    improved = true;
                    record(value, best, evaluations, &mut trace);
                    break;
                }
                record(value, best, evaluations, &mut trace);
            }
        }
        if !improved {
            for s in &mut steps {
                *s *= 0.5;
            }
            if steps.iter().all(|s| *s < 1e-8) {
                break;
            }
        }
    }

    RestartOutcome {
        best_value: best,
        best_x: x,
        evaluations,
        trace,
    }
}

fn search_bound(spec: &ClassSpec, target: SearchTarget) -> Result<f64, BoundsError> {
    let (a2, a3) = crate::oracle::sound_bounds(spec)?;
    Ok(match target {
        SearchTarget::A2 => a2,
        SearchTarget::A3 => a3,
    })
}

/// Multistart tightness search. Deterministic for a fixed config: restarts
/// derive independent seeds from the config seed and merge by maximum value
/// (ties broken by restart index).
pub fn tightness_search(spec: &ClassSpec, cfg: &SearchConfig) -> Result<TightnessReport, SearchError> {
    let (report, _) = tightness_search_traced(spec, cfg, false)?;
    Ok(report)
}

/// As [`tightness_search`], optionally collecting a per-evaluation trace
/// ordered by (restart, evaluation index).
pub fn tightness_search_traced(
    spec: &ClassSpec,
    cfg: &SearchConfig,
    want_trace: bool,
) -> Result<(TightnessReport, Vec<TraceRow>), SearchError> {
    cfg.validate()?;
    let bound = search_bound(spec, cfg.target)?;

    let per_restart = cfg.budget / cfg.restarts;
    let outcomes: Vec<RestartOutcome> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..cfg.restarts)
            .map(|r| {
                let spec = &spec;
                scope.spawn(move || {
                    pattern_search(
                        spec,
                        cfg.target,
                        cfg.atoms,
                        r,
                        sample_seed(cfg.seed, r as u64),
                        per_restart,
                        want_trace,
                    )
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });

    let mut best_idx = 0;
    for (i, o) in outcomes.iter().enumerate() {
        if o.best_value > outcomes[best_idx].best_value {
            best_idx = i;
        }
    }
    let evaluations = outcomes.iter().map(|o| o.evaluations).sum();
    let trace = outcomes.iter().flat_map(|o| o.trace.clone()).collect();
    let winner = &outcomes[best_idx];
    let argmax = decode(&winner.best_x, cfg.atoms);

    let best_value = winner.best_value;
    let ratio = if bound > 0.0 {
        best_value / bound
    } else {
        1.0
    };
    Ok((
        TightnessReport {
            best_value,
            bound,
            ratio,
            argmax: AtomParams {
                weights: argmax.weights().to_vec(),
                angles: argmax.angles().to_vec(),
            },
            evaluations,
        },
        trace,
    ))
}

/// Named spec parameter a sweep can vary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepAxis {
    Lambda,
    MuReal,
    BReal,
    B1,
    B2,
    /// Strongly-starlike preset exponent; replaces the whole target.
    Alpha,
}

impl std::fmt::Display for SweepAxis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            SweepAxis::Lambda => "lambda",
            SweepAxis::MuReal => "mu-real",
            SweepAxis::BReal => "b-real",
            SweepAxis::B1 => "b1",
            SweepAxis::B2 => "b2",
            SweepAxis::Alpha => "alpha",
        };
        write!(f, "{name}")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepPoint {
    pub value: f64,
    pub bound: BoundReport,
    pub tightness: TightnessReport,
}

fn instantiate(template: &ClassSpec, axis: SweepAxis, value: f64) -> Result<ClassSpec, String> {
    let mut lambda = template.lambda();
    let mut op = *template.op();
    let mut phi = *template.phi();
    let psi = *template.psi();
    match axis {
        SweepAxis::Lambda => lambda = value,
        SweepAxis::MuReal => {
            let mu = num_complex::Complex64::new(value, template.op().mu().im);
            op = OperatorSpec::new(mu, template.op().b()).map_err(|e| e.to_string())?;
        }
        SweepAxis::BReal => {
            let b = num_complex::Complex64::new(value, template.op().b().im);
            op = OperatorSpec::new(template.op().mu(), b).map_err(|e| e.to_string())?;
        }
        SweepAxis::B1 => {
            phi = crate::bounds::TargetPhi::new(value, template.phi().b2(), template.phi().b3())
                .map_err(|e| e.to_string())?;
        }
        SweepAxis::B2 => {
            phi = crate::bounds::TargetPhi::new(template.phi().b1(), value, template.phi().b3())
                .map_err(|e| e.to_string())?;
        }
        SweepAxis::Alpha => {
            phi = crate::bounds::phi_preset(crate::bounds::PhiPreset::StronglyStarlike {
                alpha: value,
            })
            .map_err(|e| e.to_string())?;
        }
    }
    ClassSpec::new(template.kind(), template.gamma(), lambda, op, phi, psi)
        .map_err(|e| e.to_string())
}

/// Evaluates bounds and tightness along one parameter axis, in input order.
/// Any invalid instantiation aborts with the offending value named.
pub fn parameter_sweep(
    template: &ClassSpec,
    axis: SweepAxis,
    values: &[f64],
    cfg: &SearchConfig,
) -> Result<Vec<SweepPoint>, SearchError> {
    cfg.validate()?;
    let mut out = Vec::with_capacity(values.len());
    for &value in values {
        let spec = instantiate(template, axis, value).map_err(|reason| {
            SearchError::SweepValue {
                axis: axis.to_string(),
                value,
                reason,
            }
        })?;
        let bound = bound_report(&spec);
        let tightness = tightness_search(&spec, cfg)?;
        out.push(SweepPoint {
            value,
            bound,
            tightness,
        });
    }
    Ok(out)
}
