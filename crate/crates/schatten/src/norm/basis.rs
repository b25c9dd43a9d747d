//! Orthonormal coordinate bases for the restricted domains, used by the
//! exact p = 2 reduction and the brute-force search.

use crate::mat::{c, cr, CMat};

/// Orthonormal (Hilbert-Schmidt) basis of Hermitian n x n matrices:
/// the diagonal units, then symmetric and antisymmetric off-diagonal pairs.
pub fn hermitian_basis(n: usize) -> Vec<CMat> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        let mut m = CMat::zeros(n, n);
        m[(i, i)] = cr(1.0);
        out.push(m);
    }
    let s = std::f64::consts::FRAC_1_SQRT_2;
    for i in 0..n {
        for j in (i + 1)..n {
            let mut m = CMat::zeros(n, n);
            m[(i, j)] = cr(s);
            m[(j, i)] = cr(s);
            out.push(m);
            let mut m = CMat::zeros(n, n);
            m[(i, j)] = c(0.0, -s);
            m[(j, i)] = c(0.0, s);
            out.push(m);
        }
    }
    out
}

/// Orthonormal basis of traceless Hermitian n x n matrices (n^2 - 1
/// elements): the off-diagonal pairs plus the diagonal ladder
/// diag(1, ..., 1, -k, 0, ..., 0) / sqrt(k(k+1)).
pub fn traceless_hermitian_basis(n: usize) -> Vec<CMat> {
    let mut out = Vec::with_capacity(n * n - 1);
    for k in 1..n {
        let norm = 1.0 / ((k * (k + 1)) as f64).sqrt();
        let mut m = CMat::zeros(n, n);
        for i in 0..k {
            m[(i, i)] = cr(norm);
        }
        m[(k, k)] = cr(-(k as f64) * norm);
        out.push(m);
    }
    let s = std::f64::consts::FRAC_1_SQRT_2;
    for i in 0..n {
        for j in (i + 1)..n {
            let mut m = CMat::zeros(n, n);
            m[(i, j)] = cr(s);
            m[(j, i)] = cr(s);
            out.push(m);
            let mut m = CMat::zeros(n, n);
            m[(i, j)] = c(0.0, -s);
            m[(j, i)] = c(0.0, s);
            out.push(m);
        }
    }
    out
}

/// The real-coordinate basis for a domain: each matrix in the list may be
/// combined with *real* coefficients. Hermitian domains use their Hermitian
/// bases directly; the complex domains add i-times each basis element so
/// real combinations span the complex space.
pub fn real_coordinate_basis(domain: super::NormDomain, n: usize) -> Vec<CMat> {
    use super::NormDomain::*;
    let herm = match domain {
        All | Hermitian => hermitian_basis(n),
        TracelessAll | TracelessHermitian => traceless_hermitian_basis(n),
    };
    match domain {
        Hermitian | TracelessHermitian => herm,
        All | TracelessAll => {
            let mut out = Vec::with_capacity(2 * herm.len());
            for b in &herm {
                out.push(b * c(0.0, 1.0));
            }
            out.splice(0..0, herm);
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::{hs_inner, trace};
    use crate::norm::NormDomain;

    fn check_orthonormal(basis: &[CMat]) {
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let g = hs_inner(a, b);
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!(
                    (g.re - expect).abs() < 1e-12 && g.im.abs() < 1e-12,
                    "gram[{i},{j}] = {g}"
                );
            }
        }
    }

    #[test]
    fn hermitian_basis_is_orthonormal() {
        for n in 2..=4 {
            let b = hermitian_basis(n);
            assert_eq!(b.len(), n * n);
            check_orthonormal(&b);
            for m in &b {
                assert!(crate::mat::hermitian_deviation(m) < 1e-15);
            }
        }
    }

    #[test]
    fn traceless_basis_is_orthonormal_and_traceless() {
        for n in 2..=4 {
            let b = traceless_hermitian_basis(n);
            assert_eq!(b.len(), n * n - 1);
            check_orthonormal(&b);
            for m in &b {
                assert!(trace(m).norm() < 1e-12);
                assert!(crate::mat::hermitian_deviation(m) < 1e-15);
            }
        }
    }

    #[test]
    fn real_coordinate_basis_sizes() {
        assert_eq!(real_coordinate_basis(NormDomain::All, 3).len(), 18);
        assert_eq!(real_coordinate_basis(NormDomain::Hermitian, 3).len(), 9);
        assert_eq!(
            real_coordinate_basis(NormDomain::TracelessHermitian, 3).len(),
            8
        );
        let b = real_coordinate_basis(NormDomain::TracelessAll, 3);
        assert_eq!(b.len(), 16);
        // real-orthonormal: Re<a, b> = delta (the complex part may be nonzero
        // for the (h, i h) pairs)
        for (i, a) in b.iter().enumerate() {
            for (j, m) in b.iter().enumerate() {
                let g = hs_inner(a, m).re;
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((g - expect).abs() < 1e-12, "re-gram[{i},{j}] = {g}");
            }
        }
    }
}
