//! Seeded random matrix ensembles: Ginibre, Haar unitaries, pure states,
//! and (traceless) Hermitian samples.
//!
//! Every sampler is a pure function of its seed (ChaCha8 stream), so test
//! suites and reports are reproducible bit-for-bit across runs and across
//! thread schedules.

use nalgebra::DVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::mat::{c, cr, dagger, symmetrize, trace, CMat, CVec};

/// The matrix ensembles exposed by [`sample`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleKind {
    /// i.i.d. standard complex Gaussian entries.
    Ginibre,
    /// Haar-distributed unitary (QR of a Ginibre sample, phases fixed).
    HaarUnitary,
    /// Rank-one unit-trace projector |psi><psi|.
    PureState,
    /// Hermitian matrix (Hermitian part of a Ginibre sample).
    Hermitian,
    /// Hermitian matrix projected onto the traceless hyperplane.
    TracelessHermitian,
}

impl std::str::FromStr for SampleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ginibre" => Ok(SampleKind::Ginibre),
            "haar_unitary" => Ok(SampleKind::HaarUnitary),
            "pure_state" => Ok(SampleKind::PureState),
            "hermitian" => Ok(SampleKind::Hermitian),
            "traceless_hermitian" => Ok(SampleKind::TracelessHermitian),
            _ => Err(Error::InvalidArgument(format!("unknown sample kind {s:?}"))),
        }
    }
}

/// Deterministic RNG for a given seed.
pub fn rng_for_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derives a stream-separated seed for an indexed subtask (restart, sample),
/// keeping parallel workers deterministic regardless of scheduling.
pub fn derived_seed(seed: u64, index: u64) -> u64 {
    // SplitMix64 step: well-distributed, cheap, and stable across platforms.
    let mut z = seed
        .wrapping_add(0x9e3779b97f4a7c15u64.wrapping_mul(index.wrapping_add(1)));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// One standard complex Gaussian draw.
pub fn complex_gaussian(rng: &mut impl Rng) -> num_complex::Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    c(re, im)
}

/// rows x cols Ginibre matrix from an existing RNG.
pub fn ginibre_with(rng: &mut impl Rng, rows: usize, cols: usize) -> CMat {
    CMat::from_fn(rows, cols, |_, _| complex_gaussian(rng))
}

/// Haar-random isometry: the first `cols` columns of a Haar unitary on
/// `rows` dimensions, via QR of a Ginibre sample with the diagonal phases of
/// R absorbed into Q (the standard correction making the distribution Haar).
pub fn haar_isometry_with(rng: &mut impl Rng, rows: usize, cols: usize) -> CMat {
    assert!(rows >= cols, "isometry needs rows >= cols");
    let g = ginibre_with(rng, rows, cols);
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..cols {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / cr(d.norm()) } else { cr(1.0) };
        for i in 0..rows {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// Haar unitary from an existing RNG.
pub fn haar_unitary_with(rng: &mut impl Rng, n: usize) -> CMat {
    haar_isometry_with(rng, n, n)
}

/// Haar-random unit vector.
pub fn random_unit_vector(rng: &mut impl Rng, n: usize) -> CVec {
    loop {
        let v = CVec::from_fn(n, |_, _| complex_gaussian(rng));
        let nrm = v.norm();
        if nrm > 1e-8 {
            return v / cr(nrm);
        }
    }
}

/// Seeded sample from one of the standard ensembles.
pub fn sample(kind: SampleKind, n: usize, seed: u64) -> CMat {
    let mut rng = rng_for_seed(seed);
    sample_with(&mut rng, kind, n)
}

/// Same as [`sample`] but drawing from an existing RNG stream.
pub fn sample_with(rng: &mut impl Rng, kind: SampleKind, n: usize) -> CMat {
    match kind {
        SampleKind::Ginibre => ginibre_with(rng, n, n),
        SampleKind::HaarUnitary => haar_unitary_with(rng, n),
        SampleKind::PureState => {
            let v = random_unit_vector(rng, n);
            let m = CMat::from_fn(n, 1, |i, _| v[i]);
            &m * dagger(&m)
        }
        SampleKind::Hermitian => symmetrize(&ginibre_with(rng, n, n)),
        SampleKind::TracelessHermitian => {
            let h = symmetrize(&ginibre_with(rng, n, n));
            let t = trace(&h) / cr(n as f64);
            &h - CMat::identity(n, n) * t
        }
    }
}

/// Random probability vector (flat Dirichlet) of the given length.
pub fn random_probabilities(rng: &mut impl Rng, k: usize) -> Vec<f64> {
    let mut w: Vec<f64> = (0..k).map(|_| -(rng.random::<f64>().max(1e-300)).ln()).collect();
    let s: f64 = w.iter().sum();
    for x in &mut w {
        *x /= s;
    }
    w
}

/// Random point on the real unit sphere in `dim` dimensions.
pub fn random_real_unit(rng: &mut impl Rng, dim: usize) -> DVector<f64> {
    loop {
        let v = DVector::<f64>::from_fn(dim, |_, _| rng.sample(StandardNormal));
        let nrm = v.norm();
        if nrm > 1e-8 {
            return v / nrm;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::{eye, max_abs_diff};

    #[test]
    fn haar_unitary_is_unitary() {
        let u = sample(SampleKind::HaarUnitary, 3, 7);
        let gram = dagger(&u) * &u;
        assert!(max_abs_diff(&gram, &eye(3)) < 1e-10);
    }

    #[test]
    fn pure_state_is_rank_one_projector() {
        let rho = sample(SampleKind::PureState, 2, 1);
        let spec = crate::spectral::hermitian_eigensystem(&rho).unwrap();
        assert!((spec.eigenvalues[0] - 1.0).abs() < 1e-12);
        assert!(spec.eigenvalues[1].abs() < 1e-12);
    }

    #[test]
    fn traceless_sample_is_traceless() {
        let a = sample(SampleKind::TracelessHermitian, 4, 9);
        assert!(trace(&a).norm() < 1e-12 * 4.0);
        assert!(crate::mat::hermitian_deviation(&a) < 1e-12);
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample(SampleKind::Ginibre, 3, 123);
        let b = sample(SampleKind::Ginibre, 3, 123);
        assert_eq!(max_abs_diff(&a, &b), 0.0);
        let c = sample(SampleKind::Ginibre, 3, 124);
        assert!(max_abs_diff(&a, &c) > 1e-6);
    }

    #[test]
    fn derived_seeds_differ() {
        let s: std::collections::HashSet<u64> = (0..100).map(|i| derived_seed(42, i)).collect();
        assert_eq!(s.len(), 100);
    }

    #[test]
    fn probabilities_sum_to_one() {
        let mut rng = rng_for_seed(5);
        let w = random_probabilities(&mut rng, 4);
        assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(w.iter().all(|&x| x >= 0.0));
    }
}
