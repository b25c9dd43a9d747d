//! Where qubit contractivity stops: the qutrit measurement map
//! T(A) = (A_00 + A_11)|0><0| + A_22|1><1| is positive and trace
//! preserving, contractive on traceless Hermitian inputs exactly at p = 1
//! and p = infinity, and expanding at every exponent in between. The
//! explicit diag(1, w, w^2) witness built from cubic roots of unity lands
//! exactly on the boundary at p = infinity.

use schatten::channel::generate::make_qutrit_counterexample;
use schatten::mat::{c, cr, CMat};
use schatten::norm::{estimate_norm, h01_bound, EstimatorConfig, NormDomain};
use schatten::pexp::PExponent;
use schatten::spectral::schatten_norm;

fn main() {
    let cfg = EstimatorConfig::default();
    let t = make_qutrit_counterexample();

    println!("{} on the traceless Hermitian hyperplane:", t.label());
    for p in PExponent::default_grid() {
        let est = estimate_norm(&t, p, NormDomain::TracelessHermitian, &cfg).unwrap();
        let verdict = if est.lower <= 1.0 + 1e-9 { "contractive" } else { "expands" };
        println!(
            "  p = {p:>3}: {:.7} ({verdict}; hyperplane bound {:.7})",
            est.lower,
            h01_bound(3, p).unwrap()
        );
    }

    // the explicit non-Hermitian witness: traceless, all singular values 1
    let w = c(-0.5, 3f64.sqrt() / 2.0);
    let a = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![cr(1.0), w, w * w]));
    let image = t.apply(&a).unwrap();
    let ratio = schatten_norm(&image, PExponent::Infinity) / schatten_norm(&a, PExponent::Infinity);
    println!("\ncubic-roots witness A = diag(1, w, w^2):");
    println!("  T(A) = diag(1 + w, w^2, 0); |1 + w| = |w^2| = 1");
    println!("  ||T(A)||_inf / ||A||_inf = {ratio:.12}");
    println!("  the witness touches the boundary; it does not cross it");

    // searching the whole non-Hermitian traceless domain finds nothing
    // better at p = infinity
    let est = estimate_norm(&t, PExponent::Infinity, NormDomain::TracelessAll, &cfg).unwrap();
    println!(
        "  best ratio over all traceless inputs at p = inf: {:.9}",
        est.lower
    );
}
