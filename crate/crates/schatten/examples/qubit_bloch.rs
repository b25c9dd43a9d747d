//! Qubit maps in the Bloch picture: a trace-preserving map on M_2 is an
//! affine map w |-> r + Rw on Bloch vectors, positivity keeps the image of
//! the unit ball inside it, and on the traceless hyperplane the p = 2 norm
//! is exactly sigma_max(R) — so every positive trace-preserving qubit map
//! is contractive there, at every exponent, Hermitian inputs or not.

use nalgebra::{Matrix3, Vector3};
use schatten::channel::bloch::{
    bloch_of, channel_of, random_positive_tp_qubit, sigma_max, BlochRep,
};
use schatten::norm::{estimate_norm, EstimatorConfig, NormDomain};
use schatten::pexp::PExponent;

fn main() {
    let cfg = EstimatorConfig::default();

    // a hand-built map: shrink the Bloch ball anisotropically, shift
    // slightly along x
    let b = BlochRep {
        r: Vector3::new(0.05, 0.0, 0.0),
        big_r: Matrix3::from_diagonal(&Vector3::new(0.9, 0.5, 0.1)),
    };
    let t = channel_of(&b).with_label("diag(0.9,0.5,0.1) + shift");
    println!("{}: sigma_max(R) = {:.4}", t.label(), sigma_max(&b));
    let est = estimate_norm(&t, PExponent::TWO, NormDomain::TracelessHermitian, &cfg).unwrap();
    println!(
        "  traceless p = 2 estimate: {:.7} (the Bloch isometry makes this sigma_max(R))",
        est.lower
    );

    // round trip through the Bloch data
    let back = channel_of(&bloch_of(&t).unwrap());
    println!(
        "  channel -> Bloch -> channel deviation: {:.2e}",
        schatten::mat::max_abs_diff(t.natural_rep(), back.natural_rep())
    );

    // random positive trace-preserving qubit maps: sigma_max(R) <= 1 and
    // the traceless estimates never leave [0, 1]
    println!("\nrandom positive TP qubit maps:");
    for seed in 0..5u64 {
        let t = random_positive_tp_qubit(seed);
        let smax = sigma_max(&bloch_of(&t).unwrap());
        let mut worst = 0.0f64;
        for p in PExponent::default_grid() {
            for domain in [NormDomain::TracelessHermitian, NormDomain::TracelessAll] {
                worst = worst.max(estimate_norm(&t, p, domain, &cfg).unwrap().lower);
            }
        }
        println!(
            "  seed {seed}: sigma_max(R) = {smax:.4}, worst traceless estimate = {worst:.6}"
        );
    }
}
