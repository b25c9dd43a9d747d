//! Schatten p-norms on dense complex matrices: the norm family, its
//! monotonicity in p, the Hoelder pairing with the conjugate exponent, and
//! the cubic-roots-of-unity diagonal whose singular values are all 1.

use schatten::mat::{c, cr, hs_inner, CMat};
use schatten::pexp::PExponent;
use schatten::sample::{sample, SampleKind};
use schatten::spectral::{schatten_norm, singular_values};

fn main() {
    // a fixed 3x3 example: the diagonal of cubic roots of unity
    let w = c(-0.5, 3f64.sqrt() / 2.0);
    let a = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![cr(1.0), w, w * w]));
    println!("A = diag(1, w, w^2) with w = exp(2 pi i/3)");
    println!("  singular values: {:?}", singular_values(&a));
    for p in PExponent::default_grid() {
        println!("  ||A||_{p} = {:.6}", schatten_norm(&a, p));
    }
    println!("  (so ||A||_p = 3^(1/p): every singular value is 1)");

    // norms decrease in p on any matrix
    let g = sample(SampleKind::Ginibre, 4, 7);
    println!("\nrandom 4x4 Ginibre sample, ||.||_p against p:");
    let mut prev = f64::INFINITY;
    for pf in [1.0, 1.5, 2.0, 3.0, 6.0, 12.0, 48.0] {
        let p = PExponent::finite(pf).unwrap();
        let v = schatten_norm(&g, p);
        println!("  p = {pf:>4}: {v:.6}  (monotone: {})", v <= prev + 1e-12);
        prev = v;
    }
    println!("  p =  inf: {:.6}", schatten_norm(&g, PExponent::Infinity));

    // Hoelder: |tr(A* B)| <= ||A||_p ||B||_q, 1/p + 1/q = 1
    let b = sample(SampleKind::Ginibre, 4, 8);
    println!("\nHoelder pairing |tr(A* B)| <= ||A||_p ||B||_p*:");
    for pf in [1.0, 1.5, 2.0, 4.0] {
        let p = PExponent::finite(pf).unwrap();
        let q = p.conjugate();
        let lhs = hs_inner(&g, &b).norm();
        let rhs = schatten_norm(&g, p) * schatten_norm(&b, q);
        println!("  p = {p}, p* = {q}: {lhs:.6} <= {rhs:.6}");
    }
}
