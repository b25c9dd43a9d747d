//! Unital maps are exactly the contractive ones. For positive
//! trace-preserving T on M_n the following agree: T(1) = 1; the image of
//! the identity is small (||T(1)||_p <= n^(1/p)); ||T||_p-p <= 1 at every
//! p; and at some p > 1. A non-unital map breaks all four at once, with the
//! identity itself as the expanding witness.

use schatten::channel::generate::{make_projector_measurement, make_random_unitary_mixture};
use schatten::channel::{check_props, SuperOp};
use schatten::norm::{estimate_norm, EstimatorConfig, NormDomain};
use schatten::pexp::PExponent;
use schatten::spectral::schatten_norm;

fn describe(t: &SuperOp) {
    let cfg = EstimatorConfig::default();
    let n = t.dim_in();
    let unital = check_props(t, 100, 1).unital;
    println!("{} (unital: {unital})", t.label());
    for p in PExponent::default_grid() {
        let est = estimate_norm(t, p, NormDomain::All, &cfg).unwrap();
        let image_ratio =
            schatten_norm(&t.apply_identity(), p) / p.conjugate().dimension_power(n as f64);
        println!(
            "  p = {p:>3}: ||T||_p-p = {:.6}  ||T(1)||_p / n^(1/p) = {:.6}",
            est.lower, image_ratio
        );
    }
}

fn main() {
    // a convex mixture of unitary conjugations is unital: contractive at
    // every exponent
    describe(&make_random_unitary_mixture(3, 3, 7).unwrap());
    println!();
    // the rank-2 projector measurement on M_3 is not: T(1) = diag(2, 1, 0),
    // and ||T(1)||_2 = sqrt(5) > sqrt(3), so the identity witness already
    // certifies expansion at p = 2
    describe(&make_projector_measurement(3, 2).unwrap());
}
