//! Verification suites. Each suite exercises one family of claims — a
//! closed-form bound, its saturating construction, or a boundary example —
//! and returns a deterministic [`SuiteReport`](crate::report::SuiteReport)
//! whose cases cross-link the estimates to the bounds they test.

mod h01;
mod qubit;
mod qutrit;
mod riesz;
mod thm1;
mod unital;

pub use h01::suite_h01;
pub use qubit::suite_qubit;
pub use qutrit::suite_qutrit_probe;
pub use riesz::suite_riesz_thorin;
pub use thm1::suite_thm1;
pub use unital::suite_unital_equivalence;

use crate::norm::EstimatorConfig;

/// Estimator configuration used inside the suites: fewer restarts than the
/// library default, because every saturation case has a structured starting
/// point (the identity or the exact p = 2 witness) that does the heavy
/// lifting, and the bound cases only need a valid lower bound.
pub(crate) fn suite_config(seed: u64) -> EstimatorConfig {
    EstimatorConfig {
        restarts: 8,
        max_iters: 1200,
        tol: 1e-10,
        seed,
    }
}
