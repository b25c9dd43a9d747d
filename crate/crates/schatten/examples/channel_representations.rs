//! One map, three faces: a qubit amplitude-damping channel built from Kraus
//! operators, converted through its natural and Choi representations, with
//! the structural property flags and the complementary channel.

use schatten::channel::generate::make_depolarizing;
use schatten::channel::{check_props, complementary_channel, split_unital_part, SuperOp};
use schatten::mat::{c, cr, CMat};
use schatten::sample::{sample, SampleKind};
use schatten::spectral::schatten_norm;
use schatten::PExponent;

fn main() {
    // amplitude damping with decay probability 0.3
    let gamma: f64 = 0.3;
    let k0 = CMat::from_row_slice(2, 2, &[cr(1.0), cr(0.0), cr(0.0), cr((1.0 - gamma).sqrt())]);
    let k1 = CMat::from_row_slice(2, 2, &[cr(0.0), cr(gamma.sqrt()), cr(0.0), cr(0.0)]);
    let t = SuperOp::from_kraus(vec![k0, k1], "amplitude_damping(0.3)").unwrap();

    println!("channel: {} ({} -> {})", t.label(), t.dim_in(), t.dim_out());
    let props = check_props(&t, 200, 1);
    println!("  trace preserving: {}", props.trace_preserving);
    println!("  unital:           {}", props.unital);
    println!("  completely positive: {}", props.completely_positive);
    println!("  positive (sampled):  {}", props.positive_sampled);
    println!("  representation coherence: {:.2e}", t.representation_coherence());

    // all three representations act identically on a random input
    let x = sample(SampleKind::Ginibre, 2, 5);
    let y = t.apply(&x).unwrap();
    for rep in [
        schatten::channel::Representation::Natural,
        schatten::channel::Representation::Kraus,
        schatten::channel::Representation::Choi,
    ] {
        let other = t.convert(rep).unwrap().apply(&x).unwrap();
        println!(
            "  action via {rep:?}: max deviation {:.2e}",
            schatten::mat::max_abs_diff(&y, &other)
        );
    }

    // the adjoint pairs against the channel under the Hilbert-Schmidt inner
    // product: <T(X), Y> = <X, T*(Y)>
    let z = sample(SampleKind::Ginibre, 2, 6);
    let lhs = schatten::mat::hs_inner(&y, &z);
    let rhs = schatten::mat::hs_inner(&x, &t.adjoint().apply(&z).unwrap());
    println!("  adjoint pairing deviation: {:.2e}", (lhs - rhs).norm());

    // the complementary channel: what the environment sees
    let comp = complementary_channel(&t).unwrap();
    println!(
        "\ncomplementary channel: {} -> {} (Kraus rank {})",
        comp.dim_in(),
        comp.dim_out(),
        t.kraus_ops().map(|k| k.len()).unwrap_or(0)
    );
    let rho = sample(SampleKind::PureState, 2, 9);
    println!(
        "  trace of T^C(rho): {:.6} (trace preserving on states)",
        schatten::mat::trace(&comp.apply(&rho).unwrap()).re
    );

    // splitting off the trace part: T(A) = N tr(A) + T1(A) with T1 unital-free
    let dep = make_depolarizing(3, 0.6).unwrap();
    let (n_mat, t1) = split_unital_part(&dep).unwrap();
    println!("\nsplit of {}:", dep.label());
    println!(
        "  ||N||_2 = {:.6}, reconstruction deviation {:.2e}",
        schatten_norm(&n_mat, PExponent::TWO),
        {
            let x = sample(SampleKind::Hermitian, 3, 11);
            let direct = dep.apply(&x).unwrap();
            let split = &n_mat * c(schatten::mat::trace(&x).re, schatten::mat::trace(&x).im)
                + t1.apply(&x).unwrap();
            schatten::mat::max_abs_diff(&direct, &split)
        }
    );
}
