//! Spectral decompositions and Schatten norms.
//!
//! Everything downstream — duality mappings, positive-part splittings, the
//! closed-form p = 2 norm — reduces to Hermitian eigensystems and singular
//! value decompositions of small dense matrices.

use nalgebra::SymmetricEigen;

use crate::error::Result;
use crate::mat::{ensure_hermitian, eye, trace, CMat};
use crate::pexp::PExponent;

/// Eigendecomposition of a Hermitian matrix with eigenvalues sorted
/// descending and eigenvectors as the matching unitary columns.
#[derive(Debug, Clone)]
pub struct HermitianSpectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: CMat,
}

impl HermitianSpectrum {
    /// U diag(f(lambda)) U* for an arbitrary real function of the spectrum.
    pub fn apply_scalar(&self, f: impl Fn(f64) -> f64) -> CMat {
        let n = self.eigenvalues.len();
        let mut scaled = self.eigenvectors.clone();
        for (k, &lam) in self.eigenvalues.iter().enumerate() {
            let w = crate::mat::cr(f(lam));
            for i in 0..n {
                scaled[(i, k)] *= w;
            }
        }
        &scaled * self.eigenvectors.adjoint()
    }

    /// Reconstructs the original matrix (identity function).
    pub fn reconstruct(&self) -> CMat {
        self.apply_scalar(|x| x)
    }
}

/// Hermitian eigendecomposition with a deterministic descending eigenvalue
/// order. The input is checked for Hermiticity and symmetrized exactly first.
pub fn hermitian_eigensystem(a: &CMat) -> Result<HermitianSpectrum> {
    let h = ensure_hermitian(a)?;
    let eig = SymmetricEigen::new(h);
    let n = eig.eigenvalues.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].partial_cmp(&eig.eigenvalues[i]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut eigenvectors = CMat::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        eigenvectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    Ok(HermitianSpectrum {
        eigenvalues,
        eigenvectors,
    })
}

/// Singular values of an arbitrary matrix, sorted descending.
pub fn singular_values(a: &CMat) -> Vec<f64> {
    let mut s: Vec<f64> = a.clone().svd(false, false).singular_values.iter().copied().collect();
    s.sort_by(|x, y| y.partial_cmp(x).unwrap());
    s
}

/// Schatten p-norm (sum_i sigma_i^p)^(1/p), with the p = infinity branch
/// returning the largest singular value.
///
/// Finite p is evaluated in scaled form sigma_max * (sum (sigma/sigma_max)^p)^(1/p)
/// so that large exponents (used by the estimator's continuation phase)
/// cannot underflow to zero.
pub fn schatten_norm(a: &CMat, p: PExponent) -> f64 {
    let sv = singular_values(a);
    schatten_of_singular_values(&sv, p)
}

/// Schatten p-norm from precomputed singular values (descending or not).
pub fn schatten_of_singular_values(sv: &[f64], p: PExponent) -> f64 {
    let top = sv.iter().copied().fold(0.0, f64::max);
    if top == 0.0 {
        return 0.0;
    }
    match p {
        PExponent::Infinity => top,
        PExponent::Finite(p) if p == 1.0 => sv.iter().sum(),
        PExponent::Finite(p) => {
            let sum: f64 = sv.iter().map(|&s| (s / top).powf(p)).sum();
            top * sum.powf(1.0 / p)
        }
    }
}

/// Jordan decomposition A = A_+ - A_- of a Hermitian matrix into orthogonal
/// positive semi-definite parts.
pub fn positive_part_decomposition(a: &CMat) -> Result<(CMat, CMat)> {
    let spec = hermitian_eigensystem(a)?;
    let plus = spec.apply_scalar(|x| x.max(0.0));
    let minus = spec.apply_scalar(|x| (-x).max(0.0));
    Ok((plus, minus))
}

/// Orthogonal projection onto the traceless hyperplane: A - (tr A / n) 1.
pub fn traceless_project(a: &CMat) -> Result<CMat> {
    let h = ensure_hermitian(a)?;
    let n = h.nrows();
    let t = trace(&h) / crate::mat::cr(n as f64);
    Ok(&h - eye(n) * t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::{c, cr, max_abs_diff};
    use approx::assert_relative_eq;

    #[test]
    fn eigensystem_sorted_and_reconstructs() {
        let a = CMat::from_row_slice(
            3,
            3,
            &[
                cr(2.0), c(0.0, 1.0), cr(0.5),
                c(0.0, -1.0), cr(-1.0), cr(0.0),
                cr(0.5), cr(0.0), cr(0.7),
            ],
        );
        let spec = hermitian_eigensystem(&a).unwrap();
        assert!(spec.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
        let back = spec.reconstruct();
        assert!(max_abs_diff(&a, &back) < 1e-10);
        // eigenvectors unitary
        let u = &spec.eigenvectors;
        let gram = u.adjoint() * u;
        assert!(max_abs_diff(&gram, &crate::mat::eye(3)) < 1e-10);
    }

    #[test]
    fn singular_values_of_sign_matrix() {
        let a = CMat::from_row_slice(2, 2, &[cr(3.0), cr(0.0), cr(0.0), cr(-4.0)]);
        let sv = singular_values(&a);
        assert_relative_eq!(sv[0], 4.0, epsilon = 1e-12);
        assert_relative_eq!(sv[1], 3.0, epsilon = 1e-12);
    }

    #[test]
    fn schatten_endpoints() {
        let a = CMat::from_row_slice(2, 2, &[cr(3.0), cr(0.0), cr(0.0), cr(-4.0)]);
        assert_relative_eq!(schatten_norm(&a, PExponent::ONE), 7.0, epsilon = 1e-12);
        assert_relative_eq!(schatten_norm(&a, PExponent::Infinity), 4.0, epsilon = 1e-12);
        assert_relative_eq!(schatten_norm(&a, PExponent::TWO), 5.0, epsilon = 1e-12);
        let id3 = crate::mat::eye(3);
        assert_relative_eq!(schatten_norm(&id3, PExponent::TWO), 3f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn schatten_large_p_no_underflow() {
        let a = CMat::from_row_slice(2, 2, &[cr(1e-3), cr(0.0), cr(0.0), cr(5e-4)]);
        let p = PExponent::finite(128.0).unwrap();
        let v = schatten_norm(&a, p);
        assert!((1e-3..1.001e-3).contains(&v), "v = {v}");
    }

    #[test]
    fn cubic_roots_diag_has_unit_inf_norm() {
        let w = c((2.0 * std::f64::consts::PI / 3.0).cos(), (2.0 * std::f64::consts::PI / 3.0).sin());
        let a = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![cr(1.0), w, w * w]));
        assert_relative_eq!(schatten_norm(&a, PExponent::Infinity), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn jordan_split() {
        let a = CMat::from_row_slice(2, 2, &[cr(2.0), cr(0.0), cr(0.0), cr(-3.0)]);
        let (pl, mi) = positive_part_decomposition(&a).unwrap();
        assert_relative_eq!(pl[(0, 0)].re, 2.0, epsilon = 1e-12);
        assert_relative_eq!(mi[(1, 1)].re, 3.0, epsilon = 1e-12);
        // orthogonality
        assert!(max_abs_diff(&(&pl * &mi), &crate::mat::zeros(2, 2)) < 1e-10);
    }

    #[test]
    fn traceless_projection() {
        let a = CMat::from_row_slice(2, 2, &[cr(2.0), cr(0.0), cr(0.0), cr(0.0)]);
        let t = traceless_project(&a).unwrap();
        assert_relative_eq!(t[(0, 0)].re, 1.0, epsilon = 1e-14);
        assert_relative_eq!(t[(1, 1)].re, -1.0, epsilon = 1e-14);
        let again = traceless_project(&t).unwrap();
        assert!(max_abs_diff(&t, &again) < 1e-14);
    }
}
