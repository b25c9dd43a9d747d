//! Verification suites as a library: each suite replays a family of claims
//! against the norm estimator and returns a [`SuiteReport`] that serializes
//! to JSON or CSV. The same reports back the `verify` subcommand of the CLI,
//! where the seed, grid, and sample counts are flags.

use schatten::pexp::PExponent;
use schatten::suites::{suite_qutrit_probe, suite_thm1};

fn main() {
    let grid = PExponent::default_grid();

    // A small dimension-bound sweep: random positive trace-preserving maps on
    // M_2 checked against n^(1 - 1/p) across the default exponent grid.
    let thm1 = suite_thm1(&[2], &grid, 4, 42);
    println!(
        "suite {}: {} cases, {} failed",
        thm1.suite,
        thm1.cases.len(),
        thm1.cases.iter().filter(|case| !case.pass).count()
    );
    for case in thm1.cases.iter().take(6) {
        println!(
            "  [{}] {} (n = {}, p = {}): value {:.7} vs bound {:.7}",
            if case.pass { "pass" } else { "FAIL" },
            case.label,
            case.n,
            case.p,
            case.lower.unwrap_or(f64::NAN),
            case.bound.unwrap_or(f64::NAN)
        );
    }
    println!("  ... plus {} more cases", thm1.cases.len().saturating_sub(6));

    // The qutrit probe is a fixed scripted scan, so its report is tiny.
    let qutrit = suite_qutrit_probe(&grid, 42);
    println!("\nsuite {} as CSV:", qutrit.suite);
    for line in qutrit.to_csv().lines() {
        println!("  {line}");
    }

    // Reports are deterministic in the seed: strip wall-clock timings and the
    // serialized bytes repeat exactly.
    let mut a = suite_qutrit_probe(&grid, 42);
    let mut b = suite_qutrit_probe(&grid, 42);
    a.strip_timing();
    b.strip_timing();
    println!(
        "\nsame seed twice -> identical JSON: {}",
        if a.to_json() == b.to_json() { "yes" } else { "NO" }
    );
    println!(
        "overall verdict: thm1 {}, qutrit probe {}",
        if thm1.passed() { "pass" } else { "FAIL" },
        if qutrit.passed() { "pass" } else { "FAIL" }
    );
}
