//! Dense complex matrices and the small algebra used everywhere else:
//! adjoints, Hermiticity checks, column-stacking, Kronecker products, and
//! Hilbert-Schmidt pairings.
//!
//! Matrices are `nalgebra::DMatrix<Complex64>` throughout. nalgebra stores
//! entries column-major, which makes the column-stacking isomorphism
//! vec(A) a zero-copy reinterpretation of the entry buffer.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense complex matrix, the element type of all maps and witnesses.
pub type CMat = DMatrix<Complex64>;
/// Dense complex vector (column-stacked matrices, pure states).
pub type CVec = DVector<Complex64>;

/// Relative tolerance below which a matrix counts as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// n x n identity.
pub fn eye(n: usize) -> CMat {
    CMat::identity(n, n)
}

/// n x n zero matrix.
pub fn zeros(rows: usize, cols: usize) -> CMat {
    CMat::zeros(rows, cols)
}

/// Complex scalar shorthand.
pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Real scalar as a complex entry.
pub fn cr(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Matrix unit E_ij (1 in row i, column j, zero elsewhere).
pub fn basis_matrix(n: usize, i: usize, j: usize) -> CMat {
    let mut e = CMat::zeros(n, n);
    e[(i, j)] = cr(1.0);
    e
}

/// Conjugate transpose.
pub fn dagger(a: &CMat) -> CMat {
    a.adjoint()
}

/// Trace of a square matrix.
pub fn trace(a: &CMat) -> Complex64 {
    a.diagonal().iter().sum()
}

/// Largest entrywise deviation from Hermiticity, max_ij |A_ij - conj(A_ji)|.
pub fn hermitian_deviation(a: &CMat) -> f64 {
    if a.nrows() != a.ncols() {
        return f64::INFINITY;
    }
    let mut dev: f64 = 0.0;
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            dev = dev.max((a[(i, j)] - a[(j, i)].conj()).norm());
        }
    }
    dev
}

/// Largest entry modulus.
pub fn max_abs(a: &CMat) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest entrywise difference |A_ij - B_ij|.
pub fn max_abs_diff(a: &CMat, b: &CMat) -> f64 {
    debug_assert_eq!(a.shape(), b.shape());
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// (A + A*)/2, the Hermitian part.
pub fn symmetrize(a: &CMat) -> CMat {
    (a + a.adjoint()) * cr(0.5)
}

/// Checks Hermiticity within `HERMITIAN_TOL` relative to the matrix scale and
/// returns the exactly symmetrized matrix, so downstream eigensolvers see
/// exact Hermitian data.
pub fn ensure_hermitian(a: &CMat) -> Result<CMat> {
    if a.nrows() != a.ncols() {
        return Err(Error::NotSquare {
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    let dev = hermitian_deviation(a);
    if dev > HERMITIAN_TOL * (1.0 + max_abs(a)) {
        return Err(Error::NotHermitian { deviation: dev });
    }
    Ok(symmetrize(a))
}

/// Column-stacking vec(A): stacks the columns of A into a single vector.
pub fn vec_of_mat(a: &CMat) -> CVec {
    CVec::from_column_slice(a.as_slice())
}

/// Inverse of `vec_of_mat` for an r x c target shape.
pub fn mat_of_vec(v: &CVec, rows: usize, cols: usize) -> CMat {
    debug_assert_eq!(v.len(), rows * cols);
    CMat::from_column_slice(rows, cols, v.as_slice())
}

/// Kronecker product A (x) B.
pub fn kron(a: &CMat, b: &CMat) -> CMat {
    a.kronecker(b)
}

/// Hilbert-Schmidt inner product tr(A* B), conjugate-linear in A.
pub fn hs_inner(a: &CMat, b: &CMat) -> Complex64 {
    debug_assert_eq!(a.shape(), b.shape());
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

/// Entrywise conjugate (no transpose).
pub fn conj(a: &CMat) -> CMat {
    a.map(|z| z.conj())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn vec_unvec_roundtrip() {
        let a = CMat::from_row_slice(2, 3, &[cr(1.), cr(2.), cr(3.), cr(4.), cr(5.), cr(6.)]);
        let v = vec_of_mat(&a);
        // column stacking: first column first
        assert_relative_eq!(v[0].re, 1.0);
        assert_relative_eq!(v[1].re, 4.0);
        assert_relative_eq!(v[2].re, 2.0);
        let back = mat_of_vec(&v, 2, 3);
        assert_eq!(max_abs_diff(&a, &back), 0.0);
    }

    #[test]
    fn hermitian_check() {
        let h = CMat::from_row_slice(2, 2, &[cr(1.), c(0., 1.), c(0., -1.), cr(2.)]);
        assert!(ensure_hermitian(&h).is_ok());
        let nh = CMat::from_row_slice(2, 2, &[cr(1.), c(0., 1.), c(0., 1.), cr(2.)]);
        assert!(matches!(ensure_hermitian(&nh), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn kron_shape_and_block() {
        let a = CMat::from_row_slice(2, 2, &[cr(1.), cr(2.), cr(3.), cr(4.)]);
        let b = eye(2);
        let k = kron(&a, &b);
        assert_eq!(k.shape(), (4, 4));
        assert_relative_eq!(k[(0, 0)].re, 1.0);
        assert_relative_eq!(k[(0, 2)].re, 2.0);
        assert_relative_eq!(k[(2, 0)].re, 3.0);
        assert_relative_eq!(k[(1, 3)].re, 2.0);
    }

    #[test]
    fn hs_inner_is_trace_pairing() {
        let a = CMat::from_row_slice(2, 2, &[cr(1.), c(0., 2.), cr(0.), cr(1.)]);
        let b = CMat::from_row_slice(2, 2, &[cr(2.), cr(1.), c(1., 1.), cr(3.)]);
        let lhs = hs_inner(&a, &b);
        let rhs = trace(&(dagger(&a) * &b));
        assert_relative_eq!(lhs.re, rhs.re, epsilon = 1e-14);
        assert_relative_eq!(lhs.im, rhs.im, epsilon = 1e-14);
    }
}
