//! Traceless-hyperplane suite: positive trace-preserving maps restricted to
//! traceless Hermitian inputs obey the closed-form bound h01_bound(n, p),
//! the rank-(n+1)/2 projector measurement attains it, the bound coincides
//! with the saturation-ratio formula at the optimal rank, and the
//! independent spectrum oracle reproduces its p-th power.

use crate::channel::generate::{make_projector_measurement, make_random_cptp, make_transpose};
use crate::channel::SuperOp;
use crate::norm::{
    estimate_norm, h01_bound, h01_spectrum_oracle, optimal_projector_rank, saturation_ratio,
    NormDomain,
};
use crate::pexp::PExponent;
use crate::report::{CaseBuilder, SuiteReport};
use crate::sample::derived_seed;

use super::suite_config;

/// Random positive trace-preserving maps: alternately completely positive
/// (Stinespring samples) and positive-but-not-CP (the same composed with the
/// transpose).
fn random_positive_tp(n: usize, k: usize, seed: u64) -> SuperOp {
    let cptp = make_random_cptp(n, n, 2, derived_seed(seed, 4000 + k as u64)).expect("fits");
    if k.is_multiple_of(2) {
        cptp
    } else {
        let label = format!("transpose∘{}", cptp.label());
        make_transpose(n)
            .compose(&cptp)
            .expect("matching dims")
            .with_label(&label)
    }
}

const RANDOM_MAPS_PER_N: usize = 12;

pub fn suite_h01(n_list: &[usize], p_grid: &[PExponent], seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("h01", seed);
    let cfg = suite_config(seed);
    let domain = NormDomain::TracelessHermitian;
    for &n in n_list {
        let d = optimal_projector_rank(n);
        // the algebraic identity: the saturation ratio at the optimal rank
        // is exactly the closed-form bound
        for &p in p_grid {
            let bound = h01_bound(n, p).expect("n >= 2");
            let ratio = saturation_ratio(n, d, p).expect("rank in range");
            let case = CaseBuilder::begin(format!("saturation_ratio(d={d}) identity"), n).p(p);
            report.push(case.finish(Some(ratio), None, Some(bound), (ratio - bound).abs() <= 1e-12));
        }
        // attainment by the projector measurement at the optimal rank
        let saturator = make_projector_measurement(n, d).expect("rank in range");
        for &p in p_grid {
            let bound = h01_bound(n, p).expect("n >= 2");
            let est = estimate_norm(&saturator, p, domain, &cfg).expect("generated map");
            let case = CaseBuilder::begin(format!("{} attains", saturator.label()), n)
                .p(p)
                .domain(domain);
            let pass = (est.lower - bound).abs() <= 1e-5;
            report.push(case.finish(Some(est.lower), est.upper.value(), Some(bound), pass));
        }
        // random positive TP maps stay below the bound
        for k in 0..RANDOM_MAPS_PER_N {
            let t = random_positive_tp(n, k, seed);
            for &p in p_grid {
                let bound = h01_bound(n, p).expect("n >= 2");
                let est = estimate_norm(&t, p, domain, &cfg).expect("generated map");
                let case = CaseBuilder::begin(format!("{} within bound", t.label()), n)
                    .p(p)
                    .domain(domain);
                report.push(case.finish(
                    Some(est.lower),
                    est.upper.value(),
                    Some(bound),
                    est.lower <= bound + 1e-6,
                ));
            }
        }
        // the spectrum oracle reproduces bound^p at the finite grid
        // exponents above 1
        for &p in p_grid {
            let Some(pf) = p.as_finite() else { continue };
            if pf <= 1.0 {
                continue;
            }
            let bound = h01_bound(n, p).expect("n >= 2");
            let oracle = h01_spectrum_oracle(n, p).expect("finite p > 1");
            let case = CaseBuilder::begin("spectrum oracle matches", n).p(p);
            report.push(case.finish(
                Some(oracle),
                None,
                Some(bound.powf(pf)),
                (oracle - bound.powf(pf)).abs() <= 1e-6,
            ));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes_and_attains_odd_bound() {
        let grid = [PExponent::ONE, PExponent::TWO, PExponent::Infinity];
        let report = suite_h01(&[3], &grid, 5);
        assert!(report.passed(), "failing cases: {:?}", report
            .cases
            .iter()
            .filter(|c| !c.pass)
            .map(|c| &c.label)
            .collect::<Vec<_>>());
        let attain = report
            .cases
            .iter()
            .find(|c| c.label.contains("attains") && c.p == "2")
            .unwrap();
        assert!((attain.lower.unwrap() - (4.0f64 / 3.0).sqrt()).abs() < 1e-5);
    }
}
