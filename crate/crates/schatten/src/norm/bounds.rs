//! Closed-form bounds and exact special cases for induced p->p norms.

use crate::channel::{is_positive_sampled, SuperOp};
use crate::error::{Error, Result};
use crate::mat::{CMat, CVec};
use crate::pexp::PExponent;
use crate::sample::{derived_seed, random_unit_vector, rng_for_seed};
use crate::spectral::{schatten_norm, singular_values};

/// The dimension bound n^(1 - 1/p) on ||T||_{p-p} for positive
/// trace-preserving T: M_n -> M_r; attained by the trace channel.
pub fn theorem1_bound(n: usize, p: PExponent) -> f64 {
    p.dimension_power(n as f64)
}

/// The optimal bound on the traceless Hermitian hyperplane:
/// even n: (n/2)^(1 - 1/p); odd n, finite p:
/// (2^(2-p) / ((n-1)^(1-p) + (n+1)^(1-p)))^(1/p); p = infinity by the
/// analytic limit: n/2 (even) and (n-1)/2 (odd).
///
/// The odd branch is evaluated in log space: for large p the individual
/// powers underflow long before the bound itself leaves modest magnitudes.
pub fn h01_bound(n: usize, p: PExponent) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "traceless-hyperplane bound needs n >= 2, got {n}"
        )));
    }
    let even = n.is_multiple_of(2);
    Ok(match p {
        PExponent::Infinity => {
            if even {
                n as f64 / 2.0
            } else {
                (n as f64 - 1.0) / 2.0
            }
        }
        PExponent::Finite(p) => {
            if even {
                (n as f64 / 2.0).powf(1.0 - 1.0 / p)
            } else {
                let nf = n as f64;
                // ln bound = [ (2-p) ln 2 + (p-1) ln(n-1) - ln(1 + ((n+1)/(n-1))^(1-p)) ] / p
                let ln_val = ((2.0 - p) * std::f64::consts::LN_2
                    + (p - 1.0) * (nf - 1.0).ln()
                    - (((nf + 1.0) / (nf - 1.0)).powf(1.0 - p)).ln_1p())
                    / p;
                ln_val.exp()
            }
        }
    })
}

/// Ratio achieved on the traceless hyperplane by the projector-measurement
/// channel with projector rank d, witness A = P - d/(n-d) (1-P):
/// (2 / (d^(1-p) + (n-d)^(1-p)))^(1/p), again in log space; at p = infinity
/// the limit is min(d, n-d).
///
/// At d = n/2 (even n) or d = (n+1)/2 (odd n) this equals `h01_bound`
/// exactly — the bound is optimal.
pub fn saturation_ratio(n: usize, d: usize, p: PExponent) -> Result<f64> {
    if d < 1 || d >= n {
        return Err(Error::ProjectorDimension { d, max: n - 1 });
    }
    let df = d as f64;
    let gf = (n - d) as f64;
    Ok(match p {
        PExponent::Infinity => df.min(gf),
        PExponent::Finite(p) => {
            // ln ratio = [ln 2 - ln(d^(1-p) + (n-d)^(1-p))] / p, with the sum
            // folded as max-term + log1p of the underflow-safe remainder.
            let a = (1.0 - p) * df.ln();
            let b = (1.0 - p) * gf.ln();
            let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
            let ln_sum = hi + (lo - hi).exp().ln_1p();
            ((std::f64::consts::LN_2 - ln_sum) / p).exp()
        }
    })
}

/// The projector rank maximizing `saturation_ratio` at fixed n: n/2 for even
/// n and (n+1)/2 for odd n (both are (n+1)/2 in integer division).
pub fn optimal_projector_rank(n: usize) -> usize {
    n.div_ceil(2)
}

/// ||T(1)||_infinity — equal to ||T||_{infinity-infinity} for positive maps
/// (Russo-Dye). The value is returned unconditionally; use
/// [`russo_dye_checked`] to also learn whether positivity was verified.
pub fn russo_dye_inf_norm(t: &SuperOp) -> f64 {
    schatten_norm(&t.apply_identity(), PExponent::Infinity)
}

/// [`russo_dye_inf_norm`] plus a sampled-positivity verdict; the returned
/// flag is false when the Russo-Dye identity is not justified for this map.
pub fn russo_dye_checked(t: &SuperOp, samples: usize, seed: u64) -> (f64, bool) {
    (russo_dye_inf_norm(t), is_positive_sampled(t, samples, seed))
}

/// ||T||_{1-1} via the rank-one reduction: the extreme points of the trace
/// norm ball are the rank-one matrices |psi><phi|, so
/// ||T||_{1-1} = max_{unit psi, phi} ||T(|psi><phi|)||_1.
///
/// Computed by alternating maximization: given the current pair, linearize
/// through G = T*(polar direction of the output), whose maximizing pair for
/// Re <psi| G |phi> is the top singular pair of G — an exact, monotone step
/// (the new trace norm is at least sigma_1(G), which is at least the old
/// value). Multi-started from seeded random sphere pairs; equals
/// ||T*||_{infinity-infinity} by duality.
pub fn norm_1_rank_one(t: &SuperOp) -> f64 {
    let n = t.dim_in();
    let adj = t.adjoint();
    let mut best = 0.0f64;
    const RESTARTS: u64 = 8;
    const ITERS: usize = 600;
    for restart in 0..RESTARTS {
        let mut rng = rng_for_seed(derived_seed(0x517a77e4, restart));
        let mut psi = random_unit_vector(&mut rng, n);
        let mut phi = random_unit_vector(&mut rng, n);
        let mut val = rank_one_value(t, &psi, &phi);
        for _ in 0..ITERS {
            let out = t.apply(&outer(&psi, &phi)).expect("rank-one input shape");
            let svd = out.svd(true, true);
            let u = svd.u.as_ref().expect("svd u");
            let vt = svd.v_t.as_ref().expect("svd vt");
            // polar direction U V* is the trace-norm duality mapping of the output
            let d = u * vt;
            let g = adj.apply(&d).expect("adjoint output shape");
            let gsvd = g.svd(true, true);
            let gu = gsvd.u.as_ref().expect("svd u");
            let gvt = gsvd.v_t.as_ref().expect("svd vt");
            let top = gsvd.singular_values.argmax().0;
            psi = gu.column(top).into_owned();
            phi = gvt.row(top).adjoint();
            let next = rank_one_value(t, &psi, &phi);
            if next <= val * (1.0 + 1e-15) {
                val = val.max(next);
                break;
            }
            val = next;
        }
        best = best.max(val);
    }
    best
}

fn outer(psi: &CVec, phi: &CVec) -> CMat {
    CMat::from_fn(psi.len(), phi.len(), |i, j| psi[i] * phi[j].conj())
}

fn rank_one_value(t: &SuperOp, psi: &CVec, phi: &CVec) -> f64 {
    schatten_norm(&t.apply(&outer(psi, phi)).expect("shape"), PExponent::ONE)
}

/// Exact ||T||_{2-2}: the largest singular value of the natural
/// representation, i.e. the operator norm of T on the Hilbert-Schmidt space.
pub fn exact_norm_p2(t: &SuperOp) -> f64 {
    singular_values(t.natural_rep())[0]
}

/// Interpolation bound ||T||_{p-p} <= ||T||_{1-1}^(1/p) ||T||_{inf-inf}^(1-1/p).
///
/// The 1-1 endpoint comes from the rank-one reduction; the inf-inf endpoint
/// is ||T(1)||_inf for (sampled-)positive maps and the duality evaluation
/// ||T*||_{1-1} otherwise.
pub fn riesz_thorin_bound(t: &SuperOp, p: PExponent) -> f64 {
    let n11 = norm_1_rank_one(t);
    let ninf = if is_positive_sampled(t, 120, 0x5271) {
        russo_dye_inf_norm(t)
    } else {
        norm_1_rank_one(&t.adjoint())
    };
    match p {
        PExponent::Infinity => ninf,
        PExponent::Finite(p) if p == 1.0 => n11,
        PExponent::Finite(p) => n11.powf(1.0 / p) * ninf.powf(1.0 - 1.0 / p),
    }
}
