//! Coefficient bounds for bi-univalent function classes built on the
//! Hurwitz-Lerch zeta (Srivastava-Attiya) coefficient multiplier, together
//! with the machinery to verify them numerically.
//!
//! The crate has three layers:
//!
//! - algebra: truncated complex power series ([`series`]) and the zeta-based
//!   coefficient multiplier with its named specializations ([`hlzeta`]);
//! - closed forms: the `|a2|`/`|a3|` bounds for the two class families and
//!   the target-function presets ([`bounds`]);
//! - verification: Caratheodory sampling, class-membership residuals, a
//!   relaxed-feasible brute-force maximizer that must reproduce every closed
//!   form ([`oracle`]), and a multistart tightness search over realizable
//!   constructions ([`search`]).
//!
//! Start with the runnable examples (`cargo run --example bounds_presets`,
//! `... --example oracle_equivalence`, and friends); the `bibound` binary
//! exposes the same operations as subcommands with JSON/CSV output
//! ([`cli`]).

pub mod bounds;
pub mod cli;
mod cxserde;
pub mod hlzeta;
pub mod numfmt;
pub mod oracle;
pub mod search;
pub mod series;

pub use bounds::{
    bound_a2_b, bound_a2_g, bound_a3_b, bound_a3_g, bound_a3_g_derived, bound_report,
    corollary_bounds, phi_preset, BoundReport, BoundsError, ClassKind, ClassSpec, Corollary,
    MultiplierPsi, PhiPreset, TargetPhi,
};
pub use hlzeta::{
    apply_operator, hlzeta_eval, kernel_series, OperatorSpec, OperatorVariant, ThetaSequence,
    ZetaError,
};
pub use oracle::{
    class_residual_b, class_residual_g, herglotz_sample, quasi_sub_residual, relaxed_max_a2,
    relaxed_max_a3, sample_record, schwarz_from_p, solve_direct_b, solve_direct_g,
    solve_proof_relations, solve_proof_relations_b, solve_proof_relations_g, sound_bounds,
    CaratheodoryAtoms, OracleError, RelaxedPoint, SampleRecord,
};
pub use search::{
    parameter_sweep, tightness_search, AtomParams, SearchConfig, SearchError, SearchTarget,
    SweepAxis, TightnessReport,
};
pub use series::{ComplexSeries, NormalizedSeries, SeriesError};
