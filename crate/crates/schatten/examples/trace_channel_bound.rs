//! The dimension bound: every positive trace-preserving map M_n -> M_r has
//! induced p->p norm at most n^(1 - 1/p), the trace channel
//! A |-> tr(A)|0><0| attains it, and at p = 1 the norm of every such map is
//! exactly 1.

use schatten::channel::generate::{make_random_cptp, make_trace_channel};
use schatten::norm::{estimate_norm, theorem1_bound, EstimatorConfig, NormDomain};
use schatten::pexp::PExponent;

fn main() {
    let cfg = EstimatorConfig::default();

    println!("trace channel saturation, ||T||_p-p vs n^(1-1/p):");
    for n in [2usize, 3, 4] {
        let t = make_trace_channel(n);
        for p in PExponent::default_grid() {
            let est = estimate_norm(&t, p, NormDomain::All, &cfg).unwrap();
            let bound = theorem1_bound(n, p);
            println!(
                "  n = {n}, p = {p:>3}: estimate {:.7}  bound {:.7}  gap {:.1e}",
                est.lower,
                bound,
                (est.lower - bound).abs()
            );
        }
    }

    println!("\nrandom CPTP maps stay below the bound (and sit at exactly 1 for p = 1):");
    for seed in 0..4u64 {
        let t = make_random_cptp(3, 3, 2, seed).unwrap();
        print!("  {}:", t.label());
        for p in PExponent::default_grid() {
            let est = estimate_norm(&t, p, NormDomain::All, &cfg).unwrap();
            print!("  {:.4} <= {:.4}", est.lower, theorem1_bound(3, p));
        }
        println!();
    }
}
