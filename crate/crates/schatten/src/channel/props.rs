//! Structural property checks: trace preservation, unitality, complete
//! positivity, and sampled positivity.

use crate::mat::{eye, hermitian_deviation, max_abs_diff, symmetrize, CMat};
use crate::sample::{random_unit_vector, rng_for_seed};
use crate::spectral::hermitian_eigensystem;

use super::SuperOp;

/// Default number of pure states probed by the positivity sampler.
pub const POSITIVITY_SAMPLE_DEFAULT: usize = 500;

/// Tolerance for the exact (non-sampled) structural flags.
const FLAG_TOL: f64 = 1e-10;
/// A sampled output eigenvalue below -1e-8 counts as a positivity violation.
const POSITIVITY_TOL: f64 = 1e-8;

/// Result of [`check_props`]: exact flags plus the sampled-positivity verdict
/// with its budget and worst observed violation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelProps {
    /// tr T(A) = tr A for all A, decided via T*(1) = 1.
    pub trace_preserving: bool,
    /// T(1) = 1.
    pub unital: bool,
    /// Choi matrix PSD within -1e-10.
    pub completely_positive: bool,
    /// No sampled pure state produced an output eigenvalue below -1e-8.
    pub positive_sampled: bool,
    /// Number of pure states sampled.
    pub samples: usize,
    /// Most negative output eigenvalue observed (0 when none were negative).
    pub worst_violation: f64,
}

/// Evaluates all structural flags of a map.
///
/// Positivity is probed on pure states only — positivity on all states
/// follows by convexity — with a local refinement pass around the worst
/// sampled state, so near-boundary maps are not certified by luck.
/// The implication CP => positive_sampled is asserted on every evaluation.
pub fn check_props(t: &SuperOp, samples: usize, seed: u64) -> ChannelProps {
    let n = t.dim_in();
    let r = t.dim_out();
    let trace_preserving =
        max_abs_diff(&t.adjoint().apply_identity(), &eye(n)) <= FLAG_TOL;
    let unital = r == n && max_abs_diff(&t.apply_identity(), &eye(r)) <= FLAG_TOL;
    // complete positivity requires a Hermitian Choi matrix (equivalently a
    // Hermiticity-preserving map) before its spectrum means anything
    let completely_positive =
        t.preserves_hermiticity() && t.choi_min_eigenvalue() >= -super::CP_TOL;

    let samples = samples.max(1);
    let mut rng = rng_for_seed(seed);
    let mut worst = f64::INFINITY;
    let mut worst_state = None;
    for _ in 0..samples {
        let psi = random_unit_vector(&mut rng, n);
        let lam = output_min_eigenvalue(t, &psi);
        if lam < worst {
            worst = lam;
            worst_state = Some(psi);
        }
    }
    // local refinement: random perturbations with a shrinking radius around
    // the worst state, chasing any nearby violation across the boundary
    if let Some(mut psi) = worst_state {
        let mut radius = 0.2;
        for _ in 0..150 {
            let mut probe = psi.clone();
            for i in 0..n {
                probe[i] += crate::sample::complex_gaussian(&mut rng) * crate::mat::cr(radius);
            }
            let nrm = probe.norm();
            if nrm < 1e-12 {
                continue;
            }
            probe /= crate::mat::cr(nrm);
            let lam = output_min_eigenvalue(t, &probe);
            if lam < worst {
                worst = lam;
                psi = probe;
            } else {
                radius *= 0.93;
            }
        }
    }

    let positive_sampled = worst >= -POSITIVITY_TOL;
    let worst_violation = if worst < 0.0 { worst } else { 0.0 };
    let props = ChannelProps {
        trace_preserving,
        unital,
        completely_positive,
        positive_sampled,
        samples,
        worst_violation,
    };
    assert!(
        !props.completely_positive || props.positive_sampled,
        "CP map failed sampled positivity (worst violation {worst_violation:.3e}); \
         representation conversion is inconsistent"
    );
    props
}

/// Minimum output eigenvalue for the pure state |psi><psi|; non-Hermitian
/// outputs are treated as hard violations scaled by their deviation.
fn output_min_eigenvalue(t: &SuperOp, psi: &crate::mat::CVec) -> f64 {
    let n = t.dim_in();
    let rho = CMat::from_fn(n, n, |i, j| psi[i] * psi[j].conj());
    let out = t.apply(&rho).expect("pure state has the input shape");
    let dev = hermitian_deviation(&out);
    if dev > POSITIVITY_TOL {
        return -dev;
    }
    let spec = hermitian_eigensystem(&symmetrize(&out)).expect("symmetrized output");
    *spec.eigenvalues.last().expect("nonempty")
}

/// Convenience: sampled positivity alone (used by preconditions that only
/// need a positivity verdict, e.g. the Russo-Dye fast path).
pub fn is_positive_sampled(t: &SuperOp, samples: usize, seed: u64) -> bool {
    check_props(t, samples, seed).positive_sampled
}
