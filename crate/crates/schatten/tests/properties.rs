//! Property-based invariants: norm axioms, duality pairings, representation
//! coherence, domain projections, and the estimator/oracle sandwich, all
//! over randomized inputs.

use proptest::prelude::*;

use schatten::channel::bloch::{bloch_of, channel_of, random_positive_tp_qubit};
use schatten::channel::generate::{make_random_cptp, make_random_unitary_mixture};
use schatten::channel::Representation;
use schatten::mat::{c, dagger, hs_inner, max_abs_diff, trace, CMat};
use schatten::norm::{
    brute_force_norm, domain_deviation, estimate_norm, h01_bound, project_to_domain,
    riesz_thorin_bound, theorem1_bound, EstimatorConfig, NormDomain,
};
use schatten::pexp::PExponent;
use schatten::sample::{derived_seed, haar_unitary_with, rng_for_seed, sample, SampleKind};
use schatten::spectral::schatten_norm;

/// Square complex matrix with entries in the unit box, n in 2..=4.
fn arb_mat() -> impl Strategy<Value = CMat> {
    (2usize..=4)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec((-1.0..1.0f64, -1.0..1.0f64), n * n),
            )
        })
        .prop_map(|(n, entries)| {
            CMat::from_fn(n, n, |i, j| {
                let (re, im) = entries[i * n + j];
                c(re, im)
            })
        })
}

/// Matched pair of same-size matrices.
fn arb_mat_pair() -> impl Strategy<Value = (CMat, CMat)> {
    (2usize..=4)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 2 * n * n),
            )
        })
        .prop_map(|(n, e)| {
            let build = |off: usize| {
                CMat::from_fn(n, n, |i, j| {
                    let (re, im) = e[off + i * n + j];
                    c(re, im)
                })
            };
            (build(0), build(n * n))
        })
}

fn arb_p() -> impl Strategy<Value = PExponent> {
    prop_oneof![
        (1.0..16.0f64).prop_map(|x| PExponent::finite(x).unwrap()),
        Just(PExponent::ONE),
        Just(PExponent::TWO),
        Just(PExponent::Infinity),
    ]
}

fn arb_domain() -> impl Strategy<Value = NormDomain> {
    (0usize..4).prop_map(|i| NormDomain::ALL_DOMAINS[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Schatten norms decrease in p.
    #[test]
    fn schatten_monotone_in_p(a in arb_mat(), lo in 1.0..12.0f64, delta in 0.0..12.0f64) {
        let p = PExponent::finite(lo).unwrap();
        let q = PExponent::finite(lo + delta).unwrap();
        let np = schatten_norm(&a, p);
        let nq = schatten_norm(&a, q);
        let ninf = schatten_norm(&a, PExponent::Infinity);
        prop_assert!(np >= nq - 1e-10 * np.max(1.0), "p={lo}: {np} < {nq}");
        prop_assert!(nq >= ninf - 1e-10 * nq.max(1.0));
    }

    /// Triangle inequality and absolute homogeneity.
    #[test]
    fn schatten_norm_axioms((a, b) in arb_mat_pair(), p in arb_p(), s in -3.0..3.0f64) {
        let na = schatten_norm(&a, p);
        let nb = schatten_norm(&b, p);
        let nsum = schatten_norm(&(&a + &b), p);
        prop_assert!(nsum <= na + nb + 1e-10 * (na + nb).max(1.0));
        let nscaled = schatten_norm(&(&a * c(s, 0.0)), p);
        prop_assert!((nscaled - s.abs() * na).abs() <= 1e-10 * na.max(1.0));
    }

    /// Unitary invariance ||U A V||_p = ||A||_p.
    #[test]
    fn schatten_unitary_invariance(a in arb_mat(), p in arb_p(), seed in any::<u64>()) {
        let n = a.nrows();
        let mut rng = rng_for_seed(seed);
        let u = haar_unitary_with(&mut rng, n);
        let v = haar_unitary_with(&mut rng, n);
        let lhs = schatten_norm(&(&u * &a * &v), p);
        let rhs = schatten_norm(&a, p);
        prop_assert!((lhs - rhs).abs() <= 1e-9 * rhs.max(1.0), "{lhs} vs {rhs}");
    }

    /// Hoelder: |tr(A* B)| <= ||A||_p ||B||_q with 1/p + 1/q = 1.
    #[test]
    fn hoelder_pairing((a, b) in arb_mat_pair(), p in arb_p()) {
        let q = p.conjugate();
        let lhs = hs_inner(&a, &b).norm();
        let rhs = schatten_norm(&a, p) * schatten_norm(&b, q);
        prop_assert!(lhs <= rhs + 1e-9 * rhs.max(1.0), "{lhs} vs {rhs}");
    }

    /// The closed-form bounds order correctly: the traceless-hyperplane
    /// bound sits between 1 and the dimension bound, the dimension bound is
    /// monotone in p, and so is the hyperplane bound for even n (for odd n
    /// it peaks at an interior exponent and falls back to (n-1)/2).
    #[test]
    fn bounds_are_ordered(n in 2usize..=8, lo in 1.0..8.0f64, delta in 0.0..8.0f64) {
        let p = PExponent::finite(lo).unwrap();
        let q = PExponent::finite(lo + delta).unwrap();
        prop_assert!(h01_bound(n, p).unwrap() <= theorem1_bound(n, p) + 1e-12);
        prop_assert!(h01_bound(n, p).unwrap() >= 1.0 - 1e-12);
        prop_assert!(theorem1_bound(n, p) <= theorem1_bound(n, q) + 1e-12);
        if n % 2 == 0 {
            prop_assert!(h01_bound(n, p).unwrap() <= h01_bound(n, q).unwrap() + 1e-12);
        }
        prop_assert!(h01_bound(n, PExponent::Infinity).unwrap() <= theorem1_bound(n, PExponent::Infinity) + 1e-12);
    }

    /// Exponent parsing round-trips through Display.
    #[test]
    fn pexp_display_roundtrip(pf in 1.0..64.0f64) {
        let p = PExponent::finite(pf).unwrap();
        let back: PExponent = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
        let inf: PExponent = PExponent::Infinity.to_string().parse().unwrap();
        prop_assert_eq!(inf, PExponent::Infinity);
    }

    /// Domain projection lands inside the domain with unit norm.
    #[test]
    fn projection_lands_in_domain(a in arb_mat(), domain in arb_domain(), p in arb_p()) {
        if let Some(m) = project_to_domain(&a, domain, p) {
            prop_assert!(domain_deviation(&m, domain) <= 1e-10);
            let nrm = schatten_norm(&m, p);
            prop_assert!((nrm - 1.0).abs() <= 1e-10, "norm {nrm}");
        }
    }

    /// The three representations act identically.
    #[test]
    fn representations_cohere(n in 2usize..=3, seed in any::<u64>()) {
        let t = make_random_cptp(n, n, 2, seed).unwrap();
        prop_assert!(t.representation_coherence() <= 1e-9);
        let x = sample(SampleKind::Ginibre, n, derived_seed(seed, 2));
        let base = t.apply(&x).unwrap();
        for rep in [Representation::Natural, Representation::Kraus, Representation::Choi] {
            let other = t.convert(rep).unwrap().apply(&x).unwrap();
            prop_assert!(max_abs_diff(&base, &other) <= 1e-9);
        }
    }

    /// Adjoint duality: <T(A), B> = <A, T*(B)>.
    #[test]
    fn adjoint_duality((a, b) in arb_mat_pair(), seed in any::<u64>()) {
        let n = a.nrows();
        let t = make_random_unitary_mixture(n, 2, seed).unwrap();
        let lhs = hs_inner(&t.apply(&a).unwrap(), &b);
        let rhs = hs_inner(&a, &t.adjoint().apply(&b).unwrap());
        prop_assert!((lhs - rhs).norm() <= 1e-9);
    }

    /// Trace preservation of generated channels on arbitrary inputs.
    #[test]
    fn generated_channels_preserve_trace(a in arb_mat(), seed in any::<u64>()) {
        let n = a.nrows();
        let t = make_random_cptp(n, n, 3, seed).unwrap();
        let d = trace(&t.apply(&a).unwrap()) - trace(&a);
        prop_assert!(d.norm() <= 1e-10);
    }

    /// Bloch representation round-trips for qubit maps.
    #[test]
    fn bloch_roundtrip(seed in any::<u64>()) {
        let t = random_positive_tp_qubit(seed);
        let b = bloch_of(&t).unwrap();
        let back = channel_of(&b);
        prop_assert!(max_abs_diff(t.natural_rep(), back.natural_rep()) <= 1e-10);
    }

    /// Hermitian samples pair real against Hermitian outputs of
    /// Hermiticity-preserving maps.
    #[test]
    fn hermitian_stays_hermitian(n in 2usize..=4, seed in any::<u64>()) {
        let t = make_random_cptp(n, n, 2, seed).unwrap();
        let h = sample(SampleKind::TracelessHermitian, n, derived_seed(seed, 1));
        let out = t.apply(&h).unwrap();
        prop_assert!(max_abs_diff(&out, &dagger(&out)) <= 1e-10);
        prop_assert!(trace(&out).norm() <= 1e-10);
    }
}

proptest! {
    // estimator-backed properties run far fewer cases: each case is a full
    // multi-restart optimization
    #![proptest_config(ProptestConfig::with_cases(8))]

    /// Larger domains can only increase the induced norm.
    #[test]
    fn domain_monotonicity(seed in any::<u64>(), pi in 0usize..5) {
        let p = PExponent::default_grid()[pi];
        let t = make_random_cptp(3, 3, 2, seed).unwrap();
        let cfg = EstimatorConfig { restarts: 6, max_iters: 800, tol: 1e-10, seed: 5 };
        let th = estimate_norm(&t, p, NormDomain::TracelessHermitian, &cfg).unwrap().lower;
        let h = estimate_norm(&t, p, NormDomain::Hermitian, &cfg).unwrap().lower;
        let all = estimate_norm(&t, p, NormDomain::All, &cfg).unwrap().lower;
        prop_assert!(th <= h + 1e-9, "traceless_hermitian {th} above hermitian {h}");
        prop_assert!(h <= all + 1e-9, "hermitian {h} above all {all}");
    }

    /// Brute force never beats the estimator by more than noise, and never
    /// crosses a certificate; the estimator respects the interpolation bound.
    #[test]
    fn sandwich_and_interpolation(seed in any::<u64>(), pi in 0usize..5, domain in arb_domain()) {
        let p = PExponent::default_grid()[pi];
        let t = make_random_cptp(2, 2, 2, seed).unwrap();
        let cfg = EstimatorConfig { restarts: 6, max_iters: 800, tol: 1e-10, seed: 5 };
        let est = estimate_norm(&t, p, domain, &cfg).unwrap();
        let brute = brute_force_norm(&t, p, domain, 200).unwrap();
        prop_assert!(brute <= est.lower + 1e-9, "brute {brute} above estimate {}", est.lower);
        if let Some(u) = est.upper.value() {
            prop_assert!(est.lower <= u + 1e-9);
            prop_assert!(brute <= u + 1e-9);
        }
        if domain == NormDomain::All {
            prop_assert!(est.lower <= riesz_thorin_bound(&t, p) + 1e-8);
        }
    }
}
