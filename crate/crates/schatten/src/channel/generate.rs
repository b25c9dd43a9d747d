//! The channel zoo: every concrete map the verification suites exercise.

use crate::error::{Error, Result};
use crate::mat::{cr, eye, vec_of_mat, CMat};
use crate::sample::{haar_isometry_with, haar_unitary_with, rng_for_seed};

use super::SuperOp;

/// The identity channel on M_n.
pub fn make_identity(n: usize) -> SuperOp {
    SuperOp::from_kraus(vec![eye(n)], &format!("identity({n})")).expect("identity Kraus")
}

/// The trace channel M_n -> M_1, A |-> [tr A]. Saturates the dimension
/// bound n^(1-1/p) at every p.
pub fn make_trace_channel(n: usize) -> SuperOp {
    let ks: Vec<CMat> = (0..n)
        .map(|i| {
            let mut k = CMat::zeros(1, n);
            k[(0, i)] = cr(1.0);
            k
        })
        .collect();
    SuperOp::from_kraus(ks, &format!("trace({n})")).expect("trace-channel Kraus")
}

/// Two-outcome projective measurement written into M_n:
/// T(A) = |0><0| tr(P A) + |1><1| tr((1-P) A), with P the projector onto the
/// first d basis vectors. The optimal-d member of this family saturates the
/// traceless-hyperplane bound.
pub fn make_projector_measurement(n: usize, d: usize) -> Result<SuperOp> {
    if d < 1 || d >= n {
        return Err(Error::ProjectorDimension { d, max: n - 1 });
    }
    let ks: Vec<CMat> = (0..n)
        .map(|i| {
            let mut k = CMat::zeros(n, n);
            let row = if i < d { 0 } else { 1 };
            k[(row, i)] = cr(1.0);
            k
        })
        .collect();
    SuperOp::from_kraus(ks, &format!("projector_measurement({n},{d})"))}

/// The qutrit map T(A) = (A_00 + A_11)|0><0| + A_22 |1><1| used as the
/// boundary probe: contractive on the traceless Hermitian hyperplane exactly
/// at p = 1 and p = infinity.
pub fn make_qutrit_counterexample() -> SuperOp {
    make_projector_measurement(3, 2)
        .expect("(3,2) is in range")
        .with_label("qutrit_counterexample")
}

/// Depolarizing family T(rho) = mu rho + (1-mu) tr(rho) 1/n; completely
/// positive exactly for mu in [-1/(n^2-1), 1] under this parameterization.
/// Out-of-range mu still constructs (the CP flag just comes back false).
pub fn make_depolarizing(n: usize, mu: f64) -> Result<SuperOp> {
    if n < 1 {
        return Err(Error::InvalidArgument("depolarizing needs n >= 1".into()));
    }
    let dim = n * n;
    let vi = vec_of_mat(&eye(n));
    let mut natural = CMat::identity(dim, dim) * cr(mu);
    let w = cr((1.0 - mu) / n as f64);
    for row in 0..dim {
        for col in 0..dim {
            natural[(row, col)] += w * vi[row] * vi[col].conj();
        }
    }
    SuperOp::from_natural(n, n, natural, &format!("depolarizing({n},{mu})"))
}

/// The transpose map A |-> A^T: positive, trace-preserving, unital, and the
/// canonical example of a map that is not completely positive.
pub fn make_transpose(n: usize) -> SuperOp {
    let mut natural = CMat::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            // vec(A^T)[i + j n] = vec(A)[j + i n]
            natural[(i + j * n, j + i * n)] = cr(1.0);
        }
    }
    SuperOp::from_natural(n, n, natural, &format!("transpose({n})")).expect("swap matrix shape")
}

/// Haar-random CPTP map via a Stinespring isometry V: C^n -> C^r (x) C^env,
/// K_i the environment blocks of V. Requires r * env_dim >= n so an isometry
/// exists.
pub fn make_random_cptp(n: usize, r: usize, env_dim: usize, seed: u64) -> Result<SuperOp> {
    if env_dim < 1 {
        return Err(Error::InvalidArgument("env_dim must be >= 1".into()));
    }
    if r * env_dim < n {
        return Err(Error::InvalidArgument(format!(
            "no isometry C^{n} -> C^{r} (x) C^{env_dim}: output space too small"
        )));
    }
    let mut rng = rng_for_seed(seed);
    let v = haar_isometry_with(&mut rng, r * env_dim, n);
    let ks: Vec<CMat> = (0..env_dim)
        .map(|i| CMat::from_fn(r, n, |a, m| v[(a * env_dim + i, m)]))
        .collect();
    SuperOp::from_kraus(ks, &format!("random_cptp({n},{r},env={env_dim},seed={seed})"))
}

/// Convex mixture of unitary conjugations: the standard source of random
/// *unital* CPTP maps. Probabilities must be nonnegative and sum to 1.
pub fn make_unitary_mixture(probabilities: &[f64], unitaries: &[CMat]) -> Result<SuperOp> {
    if probabilities.len() != unitaries.len() || probabilities.is_empty() {
        return Err(Error::InvalidProbabilities {
            reason: format!(
                "{} probabilities vs {} unitaries",
                probabilities.len(),
                unitaries.len()
            ),
        });
    }
    if probabilities.iter().any(|&p| p < 0.0) {
        return Err(Error::InvalidProbabilities {
            reason: "negative entry".into(),
        });
    }
    let total: f64 = probabilities.iter().sum();
    if (total - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidProbabilities {
            reason: format!("sum = {total}, expected 1"),
        });
    }
    let n = unitaries[0].nrows();
    if unitaries.iter().any(|u| u.shape() != (n, n)) {
        return Err(Error::DimensionMismatch {
            expected: format!("{n}x{n} unitaries"),
            got: "mixed shapes".into(),
        });
    }
    let ks: Vec<CMat> = probabilities
        .iter()
        .zip(unitaries)
        .map(|(&p, u)| u * cr(p.sqrt()))
        .collect();
    SuperOp::from_kraus(ks, &format!("unitary_mixture(k={})", probabilities.len()))
}

/// Seeded random mixture of `k` Haar unitaries with Dirichlet-flat weights.
pub fn make_random_unitary_mixture(n: usize, k: usize, seed: u64) -> Result<SuperOp> {
    if k < 1 {
        return Err(Error::InvalidProbabilities {
            reason: "mixture needs at least one unitary".into(),
        });
    }
    let mut rng = rng_for_seed(seed);
    let probs = crate::sample::random_probabilities(&mut rng, k);
    let us: Vec<CMat> = (0..k).map(|_| haar_unitary_with(&mut rng, n)).collect();
    make_unitary_mixture(&probs, &us)
        .map(|t| t.with_label(&format!("unitary_mixture({n},k={k},seed={seed})")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::max_abs_diff;

    #[test]
    fn depolarizing_endpoints() {
        let id_like = make_depolarizing(2, 1.0).unwrap();
        assert!(max_abs_diff(id_like.natural_rep(), make_identity(2).natural_rep()) < 1e-14);
        let fully = make_depolarizing(2, 0.0).unwrap();
        let rho = crate::sample::sample(crate::sample::SampleKind::PureState, 2, 9);
        let out = fully.apply(&rho).unwrap();
        assert!(max_abs_diff(&out, &(eye(2) * cr(0.5))) < 1e-12);
    }

    #[test]
    fn transpose_acts_as_transpose() {
        let t = make_transpose(3);
        let a = crate::sample::sample(crate::sample::SampleKind::Ginibre, 3, 2);
        let out = t.apply(&a).unwrap();
        assert!(max_abs_diff(&out, &a.transpose()) < 1e-14);
    }

    #[test]
    fn projector_measurement_rejects_bad_d() {
        assert!(make_projector_measurement(3, 0).is_err());
        assert!(make_projector_measurement(3, 3).is_err());
        assert!(make_projector_measurement(3, 2).is_ok());
    }

    #[test]
    fn random_cptp_needs_room() {
        assert!(make_random_cptp(4, 1, 2, 0).is_err());
        assert!(make_random_cptp(3, 3, 1, 0).is_ok());
    }

    #[test]
    fn mixture_validates_probabilities() {
        let u = eye(2);
        assert!(make_unitary_mixture(&[0.6, 0.6], &[u.clone(), u.clone()]).is_err());
        assert!(make_unitary_mixture(&[-0.5, 1.5], &[u.clone(), u.clone()]).is_err());
        assert!(make_unitary_mixture(&[0.5, 0.5], &[u.clone(), u]).is_ok());
    }
}
