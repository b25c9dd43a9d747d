//! Unital-equivalence suite. For a positive trace-preserving map on M_n the
//! following are equivalent, and the suite checks they are decided
//! consistently on every sample:
//!   (i)   ||T(1)||_p <= n^(1/p) at the grid exponents p > 1,
//!   (ii)  T(1) = 1,
//!   (iii) ||T||_{p->p} <= 1 at every grid p,
//!   (iv)  ||T||_{p->p} <= 1 at some grid p > 1.
//! Non-unital samples must additionally exhibit the inflation witness
//! ||T(1)||_p / n^(1/p) > 1 for some p > 1.

use crate::channel::generate::{
    make_identity, make_projector_measurement, make_random_cptp, make_random_unitary_mixture,
};
use crate::channel::SuperOp;
use crate::mat::{eye, max_abs_diff};
use crate::norm::{estimate_norm, optimal_projector_rank, NormDomain};
use crate::pexp::PExponent;
use crate::report::{CaseBuilder, SuiteReport};
use crate::sample::derived_seed;
use crate::spectral::schatten_norm;

use super::suite_config;

/// n^(1/p), the p-norm of the identity on M_n.
fn identity_norm(n: usize, p: PExponent) -> f64 {
    p.conjugate().dimension_power(n as f64)
}

pub fn suite_unital_equivalence(
    n: usize,
    p_grid: &[PExponent],
    samples: usize,
    seed: u64,
) -> SuiteReport {
    let mut report = SuiteReport::new("unital", seed);
    let cfg = suite_config(seed);

    let mut maps: Vec<SuperOp> = vec![make_identity(n)];
    if n >= 2 {
        maps.push(make_projector_measurement(n, optimal_projector_rank(n)).expect("rank in range"));
    }
    for k in 0..samples {
        maps.push(
            make_random_unitary_mixture(n, 3, derived_seed(seed, 2000 + k as u64))
                .expect("dimensions fit"),
        );
    }
    for k in 0..samples {
        maps.push(
            make_random_cptp(n, n, 2, derived_seed(seed, 3000 + k as u64)).expect("dimensions fit"),
        );
    }

    for t in &maps {
        let case = CaseBuilder::begin(format!("{} four-way consistency", t.label()), n);
        let t1 = t.apply_identity();

        // (i): the image of the identity stays inside the p-ball of radius
        // n^(1/p) at every grid p > 1
        let mut image_small = true;
        let mut inflation = 0.0f64;
        for &p in p_grid {
            if p.is_one() {
                continue;
            }
            let ratio = schatten_norm(&t1, p) / identity_norm(n, p);
            inflation = inflation.max(ratio);
            if ratio > 1.0 + 1e-9 {
                image_small = false;
            }
        }
        // (ii)
        let unital = max_abs_diff(&t1, &eye(n)) <= 1e-10;
        // (iii) and (iv) from the same estimates
        let mut contractive_all = true;
        let mut contractive_some = false;
        let mut max_lower = 0.0f64;
        for &p in p_grid {
            let est = estimate_norm(t, p, NormDomain::All, &cfg).expect("generated map");
            max_lower = max_lower.max(est.lower);
            let contractive = est.lower <= 1.0 + 1e-6;
            if !contractive {
                contractive_all = false;
            }
            if contractive && !p.is_one() {
                contractive_some = true;
            }
        }
        let consistent = image_small == unital
            && unital == contractive_all
            && contractive_all == contractive_some;
        report.push(
            case.p("grid")
                .domain(NormDomain::All)
                .finish(Some(max_lower), None, Some(1.0), consistent),
        );

        if !unital {
            let wit = CaseBuilder::begin(format!("{} inflation witness", t.label()), n)
                .p("grid")
                .domain(NormDomain::All);
            report.push(wit.finish(Some(inflation), None, Some(1.0), inflation > 1.0));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes_with_both_classes() {
        let grid = [PExponent::ONE, PExponent::TWO, PExponent::Infinity];
        let report = suite_unital_equivalence(3, &grid, 2, 11);
        assert!(report.passed());
        // the projector measurement is non-unital: its inflation witness
        // must be present and strictly above 1 (||T(1)||_2 = sqrt(5) over
        // sqrt(3))
        let wit = report
            .cases
            .iter()
            .find(|c| c.label.contains("projector_measurement") && c.label.contains("inflation"))
            .unwrap();
        assert!(wit.lower.unwrap() > (5.0f64 / 3.0).sqrt() - 1e-9);
    }

    #[test]
    fn identity_norm_edges() {
        assert!((identity_norm(3, PExponent::ONE) - 3.0).abs() < 1e-15);
        assert!((identity_norm(3, PExponent::Infinity) - 1.0).abs() < 1e-15);
        assert!((identity_norm(4, PExponent::TWO) - 2.0).abs() < 1e-15);
    }
}
