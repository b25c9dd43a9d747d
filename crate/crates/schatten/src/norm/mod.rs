//! Induced p->p norms over restricted input domains: closed-form bounds,
//! exact special cases, the ascent estimator, and the brute-force oracle.

pub mod basis;
mod bounds;
mod brute;
mod estimate;
mod oracle;

pub use bounds::{
    exact_norm_p2, h01_bound, norm_1_rank_one, optimal_projector_rank, riesz_thorin_bound,
    russo_dye_checked, russo_dye_inf_norm, saturation_ratio, theorem1_bound,
};
pub use brute::brute_force_norm;
pub use estimate::estimate_norm;
pub use oracle::h01_spectrum_oracle;

use crate::error::{Error, Result};
use crate::mat::{symmetrize, trace, CMat};
use crate::pexp::PExponent;
use crate::spectral::schatten_norm;

/// The input domain over which the induced norm is taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormDomain {
    /// All of M_n.
    All,
    /// Hermitian matrices.
    Hermitian,
    /// The traceless hyperplane of Hermitian matrices (differences of
    /// density matrices live here).
    TracelessHermitian,
    /// Traceless but not necessarily Hermitian matrices.
    TracelessAll,
}

impl NormDomain {
    pub fn is_hermitian(self) -> bool {
        matches!(self, NormDomain::Hermitian | NormDomain::TracelessHermitian)
    }

    pub fn is_traceless(self) -> bool {
        matches!(self, NormDomain::TracelessHermitian | NormDomain::TracelessAll)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            NormDomain::All => "all",
            NormDomain::Hermitian => "hermitian",
            NormDomain::TracelessHermitian => "traceless_hermitian",
            NormDomain::TracelessAll => "traceless_all",
        }
    }

    pub const ALL_DOMAINS: [NormDomain; 4] = [
        NormDomain::All,
        NormDomain::Hermitian,
        NormDomain::TracelessHermitian,
        NormDomain::TracelessAll,
    ];
}

impl std::fmt::Display for NormDomain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for NormDomain {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(NormDomain::All),
            "hermitian" => Ok(NormDomain::Hermitian),
            "traceless_hermitian" => Ok(NormDomain::TracelessHermitian),
            "traceless_all" => Ok(NormDomain::TracelessAll),
            _ => Err(Error::InvalidArgument(format!(
                "unknown domain {s:?}; expected all|hermitian|traceless_hermitian|traceless_all"
            ))),
        }
    }
}

/// Configuration of the multi-restart ascent estimator.
#[derive(Debug, Clone, Copy)]
pub struct EstimatorConfig {
    /// Number of random restarts (a deterministic identity start is added
    /// for free on non-traceless domains).
    pub restarts: usize,
    /// Iteration cap per restart.
    pub max_iters: usize,
    /// Relative improvement below which a step counts as converged.
    pub tol: f64,
    /// Seed for the restart streams.
    pub seed: u64,
}

impl Default for EstimatorConfig {
    fn default() -> Self {
        EstimatorConfig {
            restarts: 32,
            max_iters: 2000,
            tol: 1e-9,
            seed: 42,
        }
    }
}

impl EstimatorConfig {
    pub fn with_seed(seed: u64) -> Self {
        EstimatorConfig {
            seed,
            ..Default::default()
        }
    }
}

/// A certified upper bound, or the explicit absence of one. Never a float
/// sentinel: the no-certificate state is its own variant.
#[derive(Debug, Clone, PartialEq)]
pub enum UpperBound {
    Certified { value: f64, method: &'static str },
    NoCertificate,
}

impl UpperBound {
    pub fn value(&self) -> Option<f64> {
        match self {
            UpperBound::Certified { value, .. } => Some(*value),
            UpperBound::NoCertificate => None,
        }
    }

    pub fn method(&self) -> Option<&'static str> {
        match self {
            UpperBound::Certified { method, .. } => Some(method),
            UpperBound::NoCertificate => None,
        }
    }

    /// Keeps the smaller of two certified bounds.
    fn tighten(self, value: f64, method: &'static str) -> UpperBound {
        match self {
            UpperBound::NoCertificate => UpperBound::Certified { value, method },
            UpperBound::Certified { value: old, .. } if value < old => {
                UpperBound::Certified { value, method }
            }
            keep => keep,
        }
    }
}

/// Result of [`estimate_norm`]: a witness-backed lower bound and a certified
/// upper bound.
#[derive(Debug, Clone)]
pub struct NormEstimate {
    /// Best witness value ||T(A*)||_p with ||A*||_p = 1.
    pub lower: f64,
    /// The maximizing input A*.
    pub witness: CMat,
    /// Certified upper bound (explicit no-certificate state when none applies).
    pub upper: UpperBound,
    /// Which ascent path produced the witness.
    pub method: String,
    /// Whether the best restart converged before its iteration cap.
    pub converged: bool,
    /// Iterations consumed by the best restart.
    pub iterations: usize,
}

/// Exact projection of a candidate into a domain followed by p-normalization.
///
/// Returns None for candidates that collapse to zero (e.g. multiples of the
/// identity in a traceless domain). Every witness the estimator evaluates
/// passes through here, so no out-of-domain value can ever be reported.
pub fn project_to_domain(a: &CMat, domain: NormDomain, p: PExponent) -> Option<CMat> {
    let n = a.nrows();
    let mut m = a.clone();
    if domain.is_hermitian() {
        m = symmetrize(&m);
    }
    if domain.is_traceless() {
        let t = trace(&m) / crate::mat::cr(n as f64);
        m -= CMat::identity(n, n) * t;
    }
    let nrm = schatten_norm(&m, p);
    if nrm < 1e-14 {
        return None;
    }
    Some(m / crate::mat::cr(nrm))
}

/// How far a matrix sits from the domain: max of the Hermiticity deviation
/// and |tr| (both zero for members).
pub fn domain_deviation(a: &CMat, domain: NormDomain) -> f64 {
    let mut dev: f64 = 0.0;
    if domain.is_hermitian() {
        dev = dev.max(crate::mat::hermitian_deviation(a));
    }
    if domain.is_traceless() {
        dev = dev.max(trace(a).norm());
    }
    dev
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::{cr, eye};

    #[test]
    fn domain_projection_basics() {
        let a = eye(3) * cr(2.0);
        assert!(project_to_domain(&a, NormDomain::TracelessHermitian, PExponent::TWO).is_none());
        let b = crate::sample::sample(crate::sample::SampleKind::Ginibre, 3, 1);
        let proj = project_to_domain(&b, NormDomain::TracelessHermitian, PExponent::TWO).unwrap();
        assert!(domain_deviation(&proj, NormDomain::TracelessHermitian) < 1e-12);
        assert!((crate::spectral::schatten_norm(&proj, PExponent::TWO) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn upper_bound_tighten_keeps_smaller() {
        let u = UpperBound::NoCertificate
            .tighten(2.0, "a")
            .tighten(3.0, "b")
            .tighten(1.5, "c");
        assert_eq!(u.value(), Some(1.5));
        assert_eq!(u.method(), Some("c"));
    }

    #[test]
    fn domain_parsing() {
        assert_eq!("all".parse::<NormDomain>().unwrap(), NormDomain::All);
        assert_eq!(
            "traceless_hermitian".parse::<NormDomain>().unwrap(),
            NormDomain::TracelessHermitian
        );
        assert!("bogus".parse::<NormDomain>().is_err());
    }
}
