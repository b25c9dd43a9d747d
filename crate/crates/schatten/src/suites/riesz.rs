//! Interpolation suite: the estimated p->p norm of every sampled channel
//! stays below the Riesz-Thorin bound ||T||_1^(1/p) ||T||_inf^(1-1/p),
//! whose endpoints are computed by independent routes (rank-one reduction
//! at p = 1, Russo-Dye at p = infinity).

use crate::channel::generate::make_random_cptp;
use crate::norm::{estimate_norm, riesz_thorin_bound, NormDomain};
use crate::pexp::PExponent;
use crate::report::{CaseBuilder, SuiteReport};
use crate::sample::derived_seed;

use super::suite_config;

pub fn suite_riesz_thorin(
    n_list: &[usize],
    p_grid: &[PExponent],
    samples: usize,
    seed: u64,
) -> SuiteReport {
    let mut report = SuiteReport::new("riesz_thorin", seed);
    let cfg = suite_config(seed);
    for &n in n_list {
        for k in 0..samples {
            let t = make_random_cptp(n, n, 2, derived_seed(seed, n as u64 * 5000 + k as u64))
                .expect("n fits");
            for &p in p_grid {
                let bound = riesz_thorin_bound(&t, p);
                let est = estimate_norm(&t, p, NormDomain::All, &cfg).expect("generated map");
                let case = CaseBuilder::begin(format!("{} interpolates", t.label()), n)
                    .p(p)
                    .domain(NormDomain::All);
                report.push(case.finish(
                    Some(est.lower),
                    est.upper.value(),
                    Some(bound),
                    est.lower <= bound + 1e-8,
                ));
            }
        }
    }
    report
}
