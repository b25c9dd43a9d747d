//! The affine Bloch representation of qubit maps.
//!
//! A trace- and Hermiticity-preserving map on M_2 acts on Bloch vectors as
//! w |-> r + R w; the map is positive exactly when the image of the unit
//! ball stays inside it, max_{|w|=1} |r + R w| <= 1.

use nalgebra::{Matrix3, Vector3};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::mat::{c, cr, eye, trace, CMat};
use crate::sample::rng_for_seed;

use super::SuperOp;

/// (r, R) with T(1 + w.sigma) = 1 + (r + R w).sigma.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochRep {
    pub r: Vector3<f64>,
    pub big_r: Matrix3<f64>,
}

/// The Pauli basis (sigma_x, sigma_y, sigma_z).
pub fn paulis() -> [CMat; 3] {
    [
        CMat::from_row_slice(2, 2, &[cr(0.0), cr(1.0), cr(1.0), cr(0.0)]),
        CMat::from_row_slice(2, 2, &[cr(0.0), c(0.0, -1.0), c(0.0, 1.0), cr(0.0)]),
        CMat::from_row_slice(2, 2, &[cr(1.0), cr(0.0), cr(0.0), cr(-1.0)]),
    ]
}

/// Extracts (r, R) from a qubit map: r_i = tr(sigma_i T(1))/2,
/// R_ij = tr(sigma_i T(sigma_j))/2.
pub fn bloch_of(t: &SuperOp) -> Result<BlochRep> {
    if t.dim_in() != 2 || t.dim_out() != 2 {
        return Err(Error::DimensionMismatch {
            expected: "2x2 qubit map".into(),
            got: format!("M_{} -> M_{}", t.dim_in(), t.dim_out()),
        });
    }
    if !t.preserves_hermiticity() {
        return Err(Error::NotHermiticityPreserving);
    }
    let dev = crate::mat::max_abs_diff(&t.adjoint().apply_identity(), &eye(2));
    if dev > 1e-10 {
        return Err(Error::NotTracePreserving { deviation: dev });
    }
    let sig = paulis();
    let ti = t.apply_identity();
    let mut r = Vector3::zeros();
    let mut big_r = Matrix3::zeros();
    for i in 0..3 {
        r[i] = (trace(&(&sig[i] * &ti)) * cr(0.5)).re;
        for j in 0..3 {
            let tj = t.apply(&sig[j])?;
            big_r[(i, j)] = (trace(&(&sig[i] * &tj)) * cr(0.5)).re;
        }
    }
    Ok(BlochRep { r, big_r })
}

/// Builds the qubit map with the given Bloch data:
/// T(A) = tr(A)/2 (1 + r.sigma) + sum_i (R a)_i sigma_i, a_j = tr(sigma_j A)/2.
pub fn channel_of(b: &BlochRep) -> SuperOp {
    let sig = paulis();
    let mut fixed = eye(2);
    for i in 0..3 {
        fixed += &sig[i] * cr(b.r[i]);
    }
    let mut natural = CMat::zeros(4, 4);
    for k in 0..2 {
        for l in 0..2 {
            let e = crate::mat::basis_matrix(2, k, l);
            let a0 = trace(&e) * cr(0.5);
            let mut out = &fixed * a0;
            for i in 0..3 {
                let mut coeff = c(0.0, 0.0);
                for j in 0..3 {
                    let aj = trace(&(&sig[j] * &e)) * cr(0.5);
                    coeff += cr(b.big_r[(i, j)]) * aj;
                }
                out += &sig[i] * coeff;
            }
            let col = crate::mat::vec_of_mat(&out);
            for row in 0..4 {
                natural[(row, k + l * 2)] = col[row];
            }
        }
    }
    SuperOp::from_natural(2, 2, natural, "bloch").expect("4x4 natural rep")
}

/// max_{|w|=1} |r + R w|, estimated by dense sphere sampling plus a local
/// pattern-search refinement. The map is positive iff this is <= 1.
pub fn positivity_radius(b: &BlochRep, samples: usize, seed: u64) -> f64 {
    let mut rng = rng_for_seed(seed);
    let objective = |w: &Vector3<f64>| (b.r + b.big_r * w).norm();
    let mut best_w = Vector3::new(1.0, 0.0, 0.0);
    let mut best = objective(&best_w);
    for _ in 0..samples.max(8) {
        let w = random_sphere_point(&mut rng);
        let v = objective(&w);
        if v > best {
            best = v;
            best_w = w;
        }
    }
    // refinement on the sphere: shrink a local probe radius around the best w
    let mut radius = 0.5;
    while radius > 1e-9 {
        let mut improved = false;
        for _ in 0..24 {
            let d = random_sphere_point(&mut rng);
            let w = (best_w + d * radius).normalize();
            let v = objective(&w);
            if v > best + 1e-15 {
                best = v;
                best_w = w;
                improved = true;
            }
        }
        if !improved {
            radius *= 0.5;
        }
    }
    best
}

/// Largest singular value of R.
pub fn sigma_max(b: &BlochRep) -> f64 {
    b.big_r.svd(false, false).singular_values.max()
}

/// Whether the Bloch map is positive (image of the unit ball inside it).
pub fn is_positive(b: &BlochRep, samples: usize, seed: u64) -> bool {
    positivity_radius(b, samples, seed) <= 1.0 + 1e-9
}

fn random_sphere_point(rng: &mut impl Rng) -> Vector3<f64> {
    loop {
        let v = Vector3::new(
            rng.sample::<f64, _>(StandardNormal),
            rng.sample::<f64, _>(StandardNormal),
            rng.sample::<f64, _>(StandardNormal),
        );
        let n = v.norm();
        if n > 1e-9 {
            return v / n;
        }
    }
}

/// Samples a random positive trace-preserving qubit map through the
/// sufficient condition |r| + sigma_max(R) <= 1 (then
/// |r + R w| <= |r| + sigma_max(R) <= 1 for every unit w).
pub fn random_positive_tp_qubit(seed: u64) -> SuperOp {
    let mut rng = rng_for_seed(seed);
    let mut big_r = Matrix3::zeros();
    for i in 0..3 {
        for j in 0..3 {
            big_r[(i, j)] = rng.sample(StandardNormal);
        }
    }
    let smax = big_r.svd(false, false).singular_values.max();
    let s_target: f64 = rng.random();
    big_r *= s_target / smax;
    let dir = random_sphere_point(&mut rng);
    let len: f64 = rng.random::<f64>() * (1.0 - s_target);
    let b = BlochRep {
        r: dir * len,
        big_r,
    };
    channel_of(&b).with_label(&format!("random_positive_tp_qubit(seed={seed})"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::generate::{make_depolarizing, make_identity};
    use approx::assert_relative_eq;

    #[test]
    fn identity_bloch_data() {
        let b = bloch_of(&make_identity(2)).unwrap();
        assert!(b.r.norm() < 1e-12);
        assert!((b.big_r - Matrix3::identity()).norm() < 1e-12);
    }

    #[test]
    fn depolarizing_bloch_data() {
        let b = bloch_of(&make_depolarizing(2, 0.3).unwrap()).unwrap();
        assert!(b.r.norm() < 1e-12);
        assert!((b.big_r - Matrix3::identity() * 0.3).norm() < 1e-12);
    }

    #[test]
    fn roundtrip_reproduces_bloch_data() {
        let b = BlochRep {
            r: Vector3::new(0.2, -0.1, 0.05),
            big_r: Matrix3::new(0.5, 0.1, 0.0, -0.2, 0.4, 0.1, 0.0, 0.0, 0.3),
        };
        let t = channel_of(&b);
        let back = bloch_of(&t).unwrap();
        assert!((back.r - b.r).norm() < 1e-10);
        assert!((back.big_r - b.big_r).norm() < 1e-10);
    }

    #[test]
    fn constant_map_is_positive() {
        let b = BlochRep {
            r: Vector3::new(0.5, 0.0, 0.0),
            big_r: Matrix3::zeros(),
        };
        assert_relative_eq!(positivity_radius(&b, 500, 3), 0.5, epsilon = 1e-9);
        assert!(is_positive(&b, 500, 3));
    }

    #[test]
    fn inflating_map_is_not_positive() {
        let b = BlochRep {
            r: Vector3::zeros(),
            big_r: Matrix3::identity() * 2.0,
        };
        assert_relative_eq!(positivity_radius(&b, 500, 3), 2.0, epsilon = 1e-9);
        assert!(!is_positive(&b, 500, 3));
    }

    #[test]
    fn random_qubit_maps_are_positive() {
        for seed in 0..20 {
            let t = random_positive_tp_qubit(seed);
            let b = bloch_of(&t).unwrap();
            assert!(sigma_max(&b) <= 1.0 + 1e-12);
            assert!(positivity_radius(&b, 300, seed + 1) <= 1.0 + 1e-9);
            let props = crate::channel::check_props(&t, 100, seed + 2);
            assert!(props.trace_preserving);
            assert!(props.positive_sampled);
        }
    }
}
