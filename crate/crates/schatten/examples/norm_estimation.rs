//! Anatomy of a norm estimate: the ascent estimator returns a
//! witness-backed lower bound plus a certified upper bound (dimension
//! bound, interpolation, exact p = 2 value, or the Russo-Dye endpoint —
//! whichever applies and is tightest), and an independent brute-force
//! search cross-checks it from below.

use schatten::channel::generate::{make_qutrit_counterexample, make_random_cptp};
use schatten::norm::{
    brute_force_norm, estimate_norm, exact_norm_p2, norm_1_rank_one, russo_dye_inf_norm,
    EstimatorConfig, NormDomain,
};
use schatten::pexp::PExponent;

fn main() {
    let cfg = EstimatorConfig::default();
    let t = make_random_cptp(3, 3, 2, 5).unwrap();

    println!("channel: {}", t.label());
    println!("exact endpoints and special cases:");
    println!("  ||T||_1-1  (rank-one reduction) = {:.9}", norm_1_rank_one(&t));
    println!("  ||T||_2-2  (largest singular value) = {:.9}", exact_norm_p2(&t));
    println!("  ||T||_inf-inf (Russo-Dye, = ||T(1)||_inf) = {:.9}", russo_dye_inf_norm(&t));

    println!("\nestimates with certificates, domain = all:");
    for p in PExponent::default_grid() {
        let est = estimate_norm(&t, p, NormDomain::All, &cfg).unwrap();
        let upper = match (est.upper.value(), est.upper.method()) {
            (Some(u), Some(m)) => format!("{u:.9} via {m}"),
            _ => "none".to_string(),
        };
        println!(
            "  p = {p:>3}: lower {:.9} ({})  upper {upper}",
            est.lower, est.method
        );
    }

    println!("\nindependent brute-force cross-check on a harder case:");
    let probe = make_qutrit_counterexample();
    for domain in NormDomain::ALL_DOMAINS {
        let p = PExponent::finite(1.5).unwrap();
        let est = estimate_norm(&probe, p, domain, &cfg).unwrap();
        let brute = brute_force_norm(&probe, p, domain, 400).unwrap();
        println!(
            "  {} p = 1.5 {domain}: estimate {:.9}  brute force {:.9}  gap {:.1e}",
            probe.label(),
            est.lower,
            brute,
            (est.lower - brute).abs()
        );
    }
}
