//! Qubit suite: positive trace-preserving qubit maps are contractive on the
//! whole traceless hyperplane — Hermitian or not — at every p, and their
//! Bloch matrix R has largest singular value at most 1. Anchors the p = 2
//! case against the Bloch isometry, under which the traceless-Hermitian
//! 2->2 norm is exactly sigma_max(R).

use nalgebra::{Matrix3, Vector3};

use crate::channel::bloch::{bloch_of, channel_of, random_positive_tp_qubit, sigma_max, BlochRep};
use crate::channel::generate::make_identity;
use crate::norm::{estimate_norm, NormDomain};
use crate::pexp::PExponent;
use crate::report::{CaseBuilder, SuiteReport};
use crate::sample::derived_seed;

use super::suite_config;

const TRACELESS_DOMAINS: [NormDomain; 2] =
    [NormDomain::TracelessHermitian, NormDomain::TracelessAll];

pub fn suite_qubit(samples: usize, p_grid: &[PExponent], seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("qubit", seed);
    let cfg = suite_config(seed);

    // anchor: the identity map sits exactly at 1 on the traceless hyperplane
    let id = make_identity(2);
    let est = estimate_norm(&id, PExponent::TWO, NormDomain::TracelessHermitian, &cfg)
        .expect("identity map");
    report.push(
        CaseBuilder::begin("identity anchor", 2)
            .p(PExponent::TWO)
            .domain(NormDomain::TracelessHermitian)
            .finish(Some(est.lower), est.upper.value(), Some(1.0), (est.lower - 1.0).abs() <= 1e-9),
    );

    // anchor: under the Bloch isometry the traceless-Hermitian 2->2 norm is
    // sigma_max(R); R = diag(0.9, 0.5, 0.1) with a small shift pins 0.9
    let anchor = channel_of(&BlochRep {
        r: Vector3::new(0.05, 0.0, 0.0),
        big_r: Matrix3::from_diagonal(&Vector3::new(0.9, 0.5, 0.1)),
    })
    .with_label("bloch diag(0.9,0.5,0.1)");
    let est = estimate_norm(&anchor, PExponent::TWO, NormDomain::TracelessHermitian, &cfg)
        .expect("bloch map");
    report.push(
        CaseBuilder::begin(format!("{} anchor", anchor.label()), 2)
            .p(PExponent::TWO)
            .domain(NormDomain::TracelessHermitian)
            .finish(Some(est.lower), est.upper.value(), Some(0.9), (est.lower - 0.9).abs() <= 1e-6),
    );

    for k in 0..samples {
        let t = random_positive_tp_qubit(derived_seed(seed, 100 + k as u64));
        let b = bloch_of(&t).expect("qubit map");
        let smax = sigma_max(&b);
        report.push(
            CaseBuilder::begin(format!("{} sigma_max(R)", t.label()), 2)
                .finish(Some(smax), None, Some(1.0), smax <= 1.0 + 1e-12),
        );
        for domain in TRACELESS_DOMAINS {
            // one aggregated record per domain: the worst estimate across
            // the exponent grid must stay contractive
            let mut worst = f64::NEG_INFINITY;
            let case = CaseBuilder::begin(format!("{} contractive", t.label()), 2)
                .p("grid")
                .domain(domain);
            for &p in p_grid {
                let est = estimate_norm(&t, p, domain, &cfg).expect("qubit map");
                worst = worst.max(est.lower);
            }
            report.push(case.finish(Some(worst), None, Some(1.0), worst <= 1.0 + 1e-6));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let grid = [PExponent::ONE, PExponent::TWO, PExponent::Infinity];
        let report = suite_qubit(3, &grid, 7);
        assert!(report.passed(), "failing cases: {:?}", report
            .cases
            .iter()
            .filter(|c| !c.pass)
            .map(|c| &c.label)
            .collect::<Vec<_>>());
        let anchor = report
            .cases
            .iter()
            .find(|c| c.label.contains("diag(0.9,0.5,0.1)"))
            .unwrap();
        assert!((anchor.lower.unwrap() - 0.9).abs() <= 1e-6);
        // identity + bloch anchors, then 3 records per sample
        assert_eq!(report.cases.len(), 2 + 3 * 3);
    }
}
