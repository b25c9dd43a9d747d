//! Cross-validation sweep: ascent estimator vs brute-force search on a mixed
//! set of channels, every exponent in the default grid, every domain.
//!
//! This is the long-running consistency harness (several minutes at the
//! default budget). `BRUTE_BUDGET` controls the brute-force sample budget;
//! lower it (e.g. `BRUTE_BUDGET=100`) for a quick pass. Prints a line for
//! every sandwich violation (brute force above the estimate), certificate
//! violation (anything above a certified upper bound), or estimator/oracle
//! gap beyond 1e-4 — a clean run prints only the trailing summary.

use schatten::channel::bloch::random_positive_tp_qubit;
use schatten::channel::generate::*;
use schatten::channel::SuperOp;
use schatten::norm::{brute_force_norm, estimate_norm, EstimatorConfig, NormDomain};
use schatten::pexp::PExponent;

fn main() {
    let budget: usize = std::env::var("BRUTE_BUDGET")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(600);
    let cfg = EstimatorConfig::default();

    let mut cases: Vec<SuperOp> = Vec::new();
    for seed in 0..4u64 {
        cases.push(make_random_cptp(2, 2, 2, seed).unwrap());
    }
    for seed in 0..3u64 {
        cases.push(random_positive_tp_qubit(seed));
    }
    for seed in 0..3u64 {
        cases.push(make_random_cptp(3, 3, 2, 100 + seed).unwrap());
    }
    cases.push(make_projector_measurement(3, 2).unwrap());
    cases.push(make_projector_measurement(3, 1).unwrap());
    cases.push(make_depolarizing(3, 0.3).unwrap());
    cases.push(make_qutrit_counterexample());
    cases.push(make_trace_channel(2));
    cases.push(make_trace_channel(3));
    cases.push(make_transpose(2));
    cases.push(make_random_unitary_mixture(3, 3, 7).unwrap());

    let mut worst_gap = 0.0f64;
    let mut worst_label = String::new();
    let mut sandwich_bad = 0usize;
    let mut cert_bad = 0usize;
    let t0 = std::time::Instant::now();
    for t in &cases {
        for p in PExponent::default_grid() {
            for domain in NormDomain::ALL_DOMAINS {
                let est = estimate_norm(t, p, domain, &cfg).unwrap();
                let brute = brute_force_norm(t, p, domain, budget).unwrap();
                let gap = (est.lower - brute).abs();
                let tag = format!(
                    "{} p={} {}: est={:.9} brute={:.9} gap={:.2e}",
                    t.label(),
                    p,
                    domain,
                    est.lower,
                    brute,
                    gap
                );
                if brute > est.lower + 1e-9 {
                    sandwich_bad += 1;
                    println!("SANDWICH  {tag}");
                } else if gap > 1e-4 {
                    println!("GAP       {tag}");
                }
                if let Some(ub) = est.upper.value() {
                    if brute > ub + 1e-9 || est.lower > ub + 1e-9 {
                        cert_bad += 1;
                        println!("CERT      {tag} upper={ub:.9}");
                    }
                }
                if gap > worst_gap {
                    worst_gap = gap;
                    worst_label = tag;
                }
            }
        }
    }
    println!("---");
    println!("cases: {} x 5 p x 4 domains in {:.1?}", cases.len(), t0.elapsed());
    println!("worst gap: {worst_label}");
    println!("sandwich violations: {sandwich_bad}, certificate violations: {cert_bad}");
}
