//! Linear maps T: M_n -> M_r between matrix spaces, carried in natural
//! (superoperator), Kraus, and Choi representations.
//!
//! Conventions, fixed once and tested everywhere:
//! * vec is column-stacking, so vec(T(A)) = natural * vec(A) and the natural
//!   representation of A |-> K A K* is conj(K) (x) K.
//! * The Choi matrix is sum_ij E_ij (x) T(E_ij) with the *input* factor
//!   first; complete positivity is equivalent to this matrix being PSD.
//! * Kraus operators extracted from the Choi eigendecomposition keep
//!   eigenvalues above 1e-10 (numerical-rank cutoff).

mod props;

pub mod bloch;
pub mod generate;

pub use props::{check_props, is_positive_sampled, ChannelProps, POSITIVITY_SAMPLE_DEFAULT};

use crate::error::{Error, Result};
use crate::mat::{
    basis_matrix, conj, cr, dagger, eye, kron, mat_of_vec, max_abs_diff, trace, vec_of_mat, CMat,
};
use crate::spectral::hermitian_eigensystem;

/// Eigenvalues of the Choi matrix below this cutoff are dropped when
/// extracting Kraus operators (numerical rank stability).
pub const KRAUS_CUTOFF: f64 = 1e-10;
/// A Choi matrix counts as PSD when its minimum eigenvalue is >= -1e-10.
pub const CP_TOL: f64 = 1e-10;

/// A linear map M_n -> M_r with its natural representation always present
/// and optional Kraus/Choi forms attached by [`SuperOp::convert`].
#[derive(Debug, Clone)]
pub struct SuperOp {
    dim_in: usize,
    dim_out: usize,
    natural: CMat,
    kraus: Option<Vec<CMat>>,
    choi: Option<CMat>,
    label: String,
}

/// Representation targets for [`SuperOp::convert`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    Natural,
    Kraus,
    Choi,
}

impl SuperOp {
    /// Wraps an r^2 x n^2 natural-representation matrix.
    pub fn from_natural(dim_in: usize, dim_out: usize, natural: CMat, label: &str) -> Result<Self> {
        let (rows, cols) = natural.shape();
        if rows != dim_out * dim_out || cols != dim_in * dim_in {
            return Err(Error::DimensionMismatch {
                expected: format!("{}x{}", dim_out * dim_out, dim_in * dim_in),
                got: format!("{rows}x{cols}"),
            });
        }
        Ok(SuperOp {
            dim_in,
            dim_out,
            natural,
            kraus: None,
            choi: None,
            label: label.to_string(),
        })
    }

    /// Builds the map A |-> sum_i K_i A K_i* from Kraus operators (all r x n).
    pub fn from_kraus(kraus: Vec<CMat>, label: &str) -> Result<Self> {
        if kraus.is_empty() {
            return Err(Error::InvalidArgument("empty Kraus set".into()));
        }
        let (r, n) = kraus[0].shape();
        if kraus.iter().any(|k| k.shape() != (r, n)) {
            return Err(Error::DimensionMismatch {
                expected: format!("{r}x{n} for every Kraus operator"),
                got: "mixed shapes".into(),
            });
        }
        let mut natural = CMat::zeros(r * r, n * n);
        for k in &kraus {
            natural += kron(&conj(k), k);
        }
        Ok(SuperOp {
            dim_in: n,
            dim_out: r,
            natural,
            kraus: Some(kraus),
            choi: None,
            label: label.to_string(),
        })
    }

    /// Builds a map from its Choi matrix (convention sum_ij E_ij (x) T(E_ij)).
    pub fn from_choi(dim_in: usize, dim_out: usize, choi: CMat, label: &str) -> Result<Self> {
        let side = dim_in * dim_out;
        if choi.shape() != (side, side) {
            return Err(Error::DimensionMismatch {
                expected: format!("{side}x{side}"),
                got: format!("{}x{}", choi.nrows(), choi.ncols()),
            });
        }
        let natural = natural_of_choi(&choi, dim_in, dim_out);
        Ok(SuperOp {
            dim_in,
            dim_out,
            natural,
            kraus: None,
            choi: Some(choi),
            label: label.to_string(),
        })
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = label.to_string();
        self
    }

    /// The r^2 x n^2 natural representation (canonical form, always present).
    pub fn natural_rep(&self) -> &CMat {
        &self.natural
    }

    /// Attached Kraus operators, if a conversion has been performed.
    pub fn kraus_ops(&self) -> Option<&[CMat]> {
        self.kraus.as_deref()
    }

    /// Attached Choi matrix, if computed.
    pub fn choi_matrix(&self) -> Option<&CMat> {
        self.choi.as_ref()
    }

    /// Evaluates T(A) through the natural representation.
    pub fn apply(&self, a: &CMat) -> Result<CMat> {
        if a.shape() != (self.dim_in, self.dim_in) {
            return Err(Error::DimensionMismatch {
                expected: format!("{0}x{0}", self.dim_in),
                got: format!("{}x{}", a.nrows(), a.ncols()),
            });
        }
        let out = &self.natural * vec_of_mat(a);
        Ok(mat_of_vec(&out, self.dim_out, self.dim_out))
    }

    /// The adjoint T* with respect to the Hilbert-Schmidt pairing:
    /// tr(B* T(A)) = tr(T*(B)* A). Its natural representation is the
    /// conjugate transpose of T's.
    pub fn adjoint(&self) -> SuperOp {
        let kraus = self
            .kraus
            .as_ref()
            .map(|ks| ks.iter().map(dagger).collect::<Vec<_>>());
        SuperOp {
            dim_in: self.dim_out,
            dim_out: self.dim_in,
            natural: dagger(&self.natural),
            kraus,
            choi: None,
            label: format!("adjoint({})", self.label),
        }
    }

    /// Composition self after inner: (self . inner)(A) = self(inner(A)).
    pub fn compose(&self, inner: &SuperOp) -> Result<SuperOp> {
        if self.dim_in != inner.dim_out {
            return Err(Error::DimensionMismatch {
                expected: format!("inner output dim {}", self.dim_in),
                got: format!("{}", inner.dim_out),
            });
        }
        Ok(SuperOp {
            dim_in: inner.dim_in,
            dim_out: self.dim_out,
            natural: &self.natural * &inner.natural,
            kraus: None,
            choi: None,
            label: format!("{} . {}", self.label, inner.label),
        })
    }

    /// Computes and caches the requested representation.
    ///
    /// Kraus extraction requires the Choi matrix to be PSD within -1e-10;
    /// non-CP maps (the transpose, say) are rejected with the offending
    /// eigenvalue in the error.
    pub fn convert(&self, target: Representation) -> Result<SuperOp> {
        let mut out = self.clone();
        match target {
            Representation::Natural => {}
            Representation::Choi => {
                if out.choi.is_none() {
                    out.choi = Some(choi_of_natural(&self.natural, self.dim_in, self.dim_out));
                }
            }
            Representation::Kraus => {
                if out.kraus.is_none() {
                    let choi = match &out.choi {
                        Some(c) => c.clone(),
                        None => choi_of_natural(&self.natural, self.dim_in, self.dim_out),
                    };
                    let ks = kraus_of_choi(&choi, self.dim_in, self.dim_out)?;
                    out.choi = Some(choi);
                    out.kraus = Some(ks);
                }
            }
        }
        Ok(out)
    }

    /// Largest disagreement between attached representations and the natural
    /// one, probed on the full matrix-unit basis of M_n.
    pub fn representation_coherence(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim_in {
            for j in 0..self.dim_in {
                let e = basis_matrix(self.dim_in, i, j);
                let reference = self.apply(&e).expect("basis apply");
                if let Some(ks) = &self.kraus {
                    let via: CMat = ks
                        .iter()
                        .map(|k| k * &e * dagger(k))
                        .fold(CMat::zeros(self.dim_out, self.dim_out), |acc, m| acc + m);
                    worst = worst.max(max_abs_diff(&reference, &via));
                }
                if let Some(choi) = &self.choi {
                    let via = apply_via_choi(choi, &e, self.dim_in, self.dim_out);
                    worst = worst.max(max_abs_diff(&reference, &via));
                }
            }
        }
        worst
    }

    /// T(1_n).
    pub fn apply_identity(&self) -> CMat {
        self.apply(&eye(self.dim_in)).expect("identity has the right shape")
    }

    /// True when T maps Hermitian inputs to Hermitian outputs (within
    /// tolerance on the matrix-unit basis). Required by Hermitian-domain
    /// optimization and the Bloch representation.
    pub fn preserves_hermiticity(&self) -> bool {
        let scale = 1.0 + crate::mat::max_abs(&self.natural);
        for i in 0..self.dim_in {
            for j in 0..=i {
                // Hermitian basis: E_ii, (E_ij + E_ji), i(E_ij - E_ji)
                let mut h1 = basis_matrix(self.dim_in, i, j);
                h1 += dagger(&basis_matrix(self.dim_in, i, j));
                let out1 = self.apply(&h1).expect("shape");
                if crate::mat::hermitian_deviation(&out1) > 1e-10 * scale {
                    return false;
                }
                if i != j {
                    let mut h2 = basis_matrix(self.dim_in, i, j);
                    h2 *= crate::mat::c(0.0, 1.0);
                    h2 += dagger(&(basis_matrix(self.dim_in, i, j) * crate::mat::c(0.0, 1.0)));
                    let out2 = self.apply(&h2).expect("shape");
                    if crate::mat::hermitian_deviation(&out2) > 1e-10 * scale {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Minimum eigenvalue of the Choi matrix (computing it if absent).
    pub fn choi_min_eigenvalue(&self) -> f64 {
        let choi = match &self.choi {
            Some(c) => c.clone(),
            None => choi_of_natural(&self.natural, self.dim_in, self.dim_out),
        };
        let herm = crate::mat::symmetrize(&choi);
        let spec = hermitian_eigensystem(&herm).expect("symmetrized Choi");
        *spec
            .eigenvalues
            .last()
            .expect("nonempty spectrum")
    }
}

/// Choi matrix sum_ij E_ij (x) T(E_ij) from the natural representation.
pub fn choi_of_natural(natural: &CMat, n: usize, r: usize) -> CMat {
    let mut choi = CMat::zeros(n * r, n * r);
    for i in 0..n {
        for j in 0..n {
            for a in 0..r {
                for b in 0..r {
                    // vec index of T(E_ij) entry (a, b) is a + b r; vec(E_ij) is i + j n.
                    choi[(i * r + a, j * r + b)] = natural[(a + b * r, i + j * n)];
                }
            }
        }
    }
    choi
}

/// Inverse of [`choi_of_natural`].
pub fn natural_of_choi(choi: &CMat, n: usize, r: usize) -> CMat {
    let mut natural = CMat::zeros(r * r, n * n);
    for i in 0..n {
        for j in 0..n {
            for a in 0..r {
                for b in 0..r {
                    natural[(a + b * r, i + j * n)] = choi[(i * r + a, j * r + b)];
                }
            }
        }
    }
    natural
}

/// Applies T through its Choi matrix: T(A)_ab = sum_ij A_ij C[(i,a),(j,b)].
fn apply_via_choi(choi: &CMat, a: &CMat, n: usize, r: usize) -> CMat {
    let mut out = CMat::zeros(r, r);
    for i in 0..n {
        for j in 0..n {
            let aij = a[(i, j)];
            if aij.norm() == 0.0 {
                continue;
            }
            for x in 0..r {
                for y in 0..r {
                    out[(x, y)] += aij * choi[(i * r + x, j * r + y)];
                }
            }
        }
    }
    out
}

/// Kraus operators from the eigendecomposition of a PSD Choi matrix.
/// Eigenvalue c with eigenvector v yields K[a, i] = sqrt(c) v[i r + a].
pub fn kraus_of_choi(choi: &CMat, n: usize, r: usize) -> Result<Vec<CMat>> {
    let herm = crate::mat::symmetrize(choi);
    let spec = hermitian_eigensystem(&herm)?;
    let min_eig = *spec.eigenvalues.last().expect("nonempty");
    if min_eig < -CP_TOL {
        return Err(Error::NotCompletelyPositive { min_eig });
    }
    let mut ks = Vec::new();
    for (idx, &lam) in spec.eigenvalues.iter().enumerate() {
        if lam <= KRAUS_CUTOFF {
            continue;
        }
        let root = lam.sqrt();
        let v = spec.eigenvectors.column(idx);
        let mut k = CMat::zeros(r, n);
        for i in 0..n {
            for a in 0..r {
                k[(a, i)] = v[i * r + a] * cr(root);
            }
        }
        ks.push(k);
    }
    if ks.is_empty() {
        // the zero map: keep a single zero Kraus operator so the set is nonempty
        ks.push(CMat::zeros(r, n));
    }
    Ok(ks)
}

/// Partial trace of a Choi matrix over the *output* factor; equals 1_n
/// exactly when the map is trace-preserving.
pub fn choi_partial_trace_output(choi: &CMat, n: usize, r: usize) -> CMat {
    let mut out = CMat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut s = crate::mat::cr(0.0);
            for a in 0..r {
                s += choi[(i * r + a, j * r + a)];
            }
            out[(i, j)] = s;
        }
    }
    out
}

/// The complementary channel T^C(rho)_ij = tr(K_i rho K_j*), the
/// environment's view of the Stinespring dilation. Output dimension equals
/// the number of Kraus operators.
pub fn complementary_channel(t: &SuperOp) -> Result<SuperOp> {
    let ks = t.kraus_ops().ok_or(Error::MissingKraus)?;
    let m = ks.len();
    let n = t.dim_in();
    let mut natural = CMat::zeros(m * m, n * n);
    for k in 0..n {
        for l in 0..n {
            let e = basis_matrix(n, k, l);
            let mut out = CMat::zeros(m, m);
            for (i, ki) in ks.iter().enumerate() {
                for (j, kj) in ks.iter().enumerate() {
                    out[(i, j)] = trace(&(ki * &e * dagger(kj)));
                }
            }
            let col = vec_of_mat(&out);
            for (row, z) in col.iter().enumerate() {
                natural[(row, k + l * n)] = *z;
            }
        }
    }
    SuperOp::from_natural(n, m, natural, &format!("complement({})", t.label()))
}

/// Splits a square trace-preserving map as T(A) = N tr(A) + T1(A) with T1
/// unital and trace-preserving; N = (T(1) - 1)/n is traceless.
///
/// The divisor is forced: T1(1) = T(1) - c N with c the divisor's companion
/// weight tr(1) = n, so unitality of T1 pins N = (T(1) - 1)/n exactly.
pub fn split_unital_part(t: &SuperOp) -> Result<(CMat, SuperOp)> {
    let n = t.dim_in();
    if t.dim_out() != n {
        return Err(Error::NotSquare {
            rows: t.dim_out(),
            cols: n,
        });
    }
    let props_dev = max_abs_diff(&t.adjoint().apply_identity(), &eye(n));
    if props_dev > 1e-10 {
        return Err(Error::NotTracePreserving { deviation: props_dev });
    }
    let n_mat = (t.apply_identity() - eye(n)) * cr(1.0 / n as f64);
    // T1 = T - N tr(.) : subtract the rank-one superoperator vec(N) vec(1)^T.
    let vn = vec_of_mat(&n_mat);
    let vi = vec_of_mat(&eye(n));
    let mut natural = t.natural_rep().clone();
    for row in 0..n * n {
        for col in 0..n * n {
            natural[(row, col)] -= vn[row] * vi[col].conj();
        }
    }
    let t1 = SuperOp {
        dim_in: n,
        dim_out: n,
        natural,
        kraus: None,
        choi: None,
        label: format!("unital_part({})", t.label()),
    };
    Ok((n_mat, t1))
}

#[cfg(test)]
mod tests {
    use super::generate::*;
    use super::*;
    use crate::mat::{c, eye, max_abs_diff};
    use crate::pexp::PExponent;
    use crate::spectral::schatten_norm;
    use approx::assert_relative_eq;

    #[test]
    fn identity_channel_applies() {
        let id = make_identity(3);
        let a = crate::sample::sample(crate::sample::SampleKind::Ginibre, 3, 1);
        let out = id.apply(&a).unwrap();
        assert!(max_abs_diff(&a, &out) < 1e-14);
    }

    #[test]
    fn trace_channel_on_identity() {
        let t = make_trace_channel(3);
        let out = t.apply(&eye(3)).unwrap();
        assert_eq!(out.shape(), (1, 1));
        assert_relative_eq!(out[(0, 0)].re, 3.0, epsilon = 1e-14);
        let traceless = crate::sample::sample(crate::sample::SampleKind::TracelessHermitian, 3, 4);
        let z = t.apply(&traceless).unwrap();
        assert!(z[(0, 0)].norm() < 1e-12);
    }

    #[test]
    fn adjoint_pairing_holds() {
        let t = make_random_cptp(3, 3, 2, 11).unwrap();
        let ts = t.adjoint();
        for s in 0..10u64 {
            let a = crate::sample::sample(crate::sample::SampleKind::Ginibre, 3, 100 + s);
            let b = crate::sample::sample(crate::sample::SampleKind::Ginibre, 3, 200 + s);
            let lhs = crate::mat::hs_inner(&b, &t.apply(&a).unwrap());
            let rhs = crate::mat::hs_inner(&ts.apply(&b).unwrap(), &a);
            assert!((lhs - rhs).norm() < 1e-10);
        }
        // adjoint of adjoint returns the original
        let back = ts.adjoint();
        assert!(max_abs_diff(t.natural_rep(), back.natural_rep()) < 1e-12);
    }

    #[test]
    fn trace_channel_adjoint_embeds_identity() {
        let t = make_trace_channel(3);
        let ts = t.adjoint();
        let scalar = CMat::from_row_slice(1, 1, &[c(2.0, 0.0)]);
        let out = ts.apply(&scalar).unwrap();
        assert!(max_abs_diff(&out, &(eye(3) * crate::mat::cr(2.0))) < 1e-14);
    }

    #[test]
    fn compose_natural_is_product() {
        let t = make_depolarizing(2, 0.5).unwrap();
        let s = make_transpose(2);
        let st = s.compose(&t).unwrap();
        let a = crate::sample::sample(crate::sample::SampleKind::Ginibre, 2, 3);
        let direct = s.apply(&t.apply(&a).unwrap()).unwrap();
        let via = st.apply(&a).unwrap();
        assert!(max_abs_diff(&direct, &via) < 1e-12);
        // (S.T)* = T*.S*
        let lhs = st.adjoint();
        let rhs = t.adjoint().compose(&s.adjoint()).unwrap();
        assert!(max_abs_diff(lhs.natural_rep(), rhs.natural_rep()) < 1e-10);
    }

    #[test]
    fn identity_choi_is_maximally_entangled_projector() {
        let id = make_identity(3).convert(Representation::Choi).unwrap();
        let choi = id.choi_matrix().unwrap();
        // rank one, trace n
        let spec = hermitian_eigensystem(choi).unwrap();
        assert_relative_eq!(spec.eigenvalues[0], 3.0, epsilon = 1e-10);
        for &lam in &spec.eigenvalues[1..] {
            assert!(lam.abs() < 1e-10);
        }
    }

    #[test]
    fn transpose_choi_is_swap_with_negative_eigenvalue() {
        let t = make_transpose(2).convert(Representation::Choi).unwrap();
        let choi = t.choi_matrix().unwrap();
        let mut eigs = hermitian_eigensystem(choi).unwrap().eigenvalues;
        eigs.sort_by(|a, b| b.partial_cmp(a).unwrap());
        assert_relative_eq!(eigs[0], 1.0, epsilon = 1e-10);
        assert_relative_eq!(eigs[1], 1.0, epsilon = 1e-10);
        assert_relative_eq!(eigs[2], 1.0, epsilon = 1e-10);
        assert_relative_eq!(eigs[3], -1.0, epsilon = 1e-10);
        assert!(t.convert(Representation::Kraus).is_err());
    }

    #[test]
    fn kraus_roundtrip_on_depolarizing() {
        let t = make_depolarizing(2, 1.0 / 3.0)
            .unwrap()
            .convert(Representation::Kraus)
            .unwrap();
        assert!(t.representation_coherence() < 1e-9);
        // Kraus rank equals Choi numerical rank
        let spec = hermitian_eigensystem(t.choi_matrix().unwrap()).unwrap();
        let rank = spec.eigenvalues.iter().filter(|&&l| l > KRAUS_CUTOFF).count();
        assert_eq!(t.kraus_ops().unwrap().len(), rank);
    }

    #[test]
    fn trace_channel_kraus_and_choi() {
        let t = make_trace_channel(3);
        let ks = t.kraus_ops().unwrap();
        assert_eq!(ks.len(), 3);
        let mut acc = CMat::zeros(3, 3);
        for k in ks {
            acc += dagger(k) * k;
        }
        assert!(max_abs_diff(&acc, &eye(3)) < 1e-12);
        let choi = choi_of_natural(t.natural_rep(), 3, 1);
        assert!(max_abs_diff(&choi, &eye(3)) < 1e-12);
    }

    #[test]
    fn complementary_of_unitary_is_trace_like() {
        let u = crate::sample::sample(crate::sample::SampleKind::HaarUnitary, 3, 2);
        let t = SuperOp::from_kraus(vec![u], "unitary").unwrap();
        let comp = complementary_channel(&t).unwrap();
        assert_eq!(comp.dim_out(), 1);
        let rho = crate::sample::sample(crate::sample::SampleKind::PureState, 3, 5);
        let out = comp.apply(&rho).unwrap();
        assert_relative_eq!(out[(0, 0)].re, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn split_unital_part_of_projector_measurement() {
        let t = make_projector_measurement(3, 2).unwrap();
        let (n_mat, t1) = split_unital_part(&t).unwrap();
        let expected = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![
            crate::mat::cr(1.0 / 3.0),
            crate::mat::cr(0.0),
            crate::mat::cr(-1.0 / 3.0),
        ]));
        assert!(max_abs_diff(&n_mat, &expected) < 1e-12);
        // T1 unital + TP
        assert!(max_abs_diff(&t1.apply_identity(), &eye(3)) < 1e-12);
        assert!(max_abs_diff(&t1.adjoint().apply_identity(), &eye(3)) < 1e-12);
        // T1 need not be positive: T1(|2><2|) has a negative eigenvalue
        let e22 = basis_matrix(3, 2, 2);
        let out = t1.apply(&e22).unwrap();
        let expected_out = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![
            crate::mat::cr(-1.0 / 3.0),
            crate::mat::cr(1.0),
            crate::mat::cr(1.0 / 3.0),
        ]));
        assert!(max_abs_diff(&out, &expected_out) < 1e-12);
        let min_eig = hermitian_eigensystem(&out).unwrap().eigenvalues[2];
        assert_relative_eq!(min_eig, -1.0 / 3.0, epsilon = 1e-12);
        // reconstruction T(A) = N tr(A) + T1(A)
        let a = crate::sample::sample(crate::sample::SampleKind::Ginibre, 3, 8);
        let lhs = t.apply(&a).unwrap();
        let rhs = &n_mat * trace(&a) + t1.apply(&a).unwrap();
        assert!(max_abs_diff(&lhs, &rhs) < 1e-12);
    }

    #[test]
    fn projector_measurement_examples() {
        let t = make_projector_measurement(3, 2).unwrap();
        // A = P - 2 (1 - P) -> diag(2, -2, 0) under T
        let a = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![
            crate::mat::cr(1.0),
            crate::mat::cr(1.0),
            crate::mat::cr(-2.0),
        ]));
        let out = t.apply(&a).unwrap();
        assert_relative_eq!(out[(0, 0)].re, 2.0, epsilon = 1e-12);
        assert_relative_eq!(out[(1, 1)].re, -2.0, epsilon = 1e-12);
        let ratio = schatten_norm(&out, PExponent::TWO) / schatten_norm(&a, PExponent::TWO);
        assert_relative_eq!(ratio, 2.0 / 3f64.sqrt(), epsilon = 1e-12);
        // T(1) = diag(2, 1, 0)
        let ti = t.apply_identity();
        assert_relative_eq!(ti[(0, 0)].re, 2.0, epsilon = 1e-12);
        assert_relative_eq!(ti[(1, 1)].re, 1.0, epsilon = 1e-12);
        assert_relative_eq!(ti[(2, 2)].re, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn qutrit_counterexample_action() {
        let t = make_qutrit_counterexample();
        let tau = 2.0 * std::f64::consts::PI / 3.0;
        let w = c(tau.cos(), tau.sin());
        let a = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![crate::mat::cr(1.0), w, w * w]));
        let out = t.apply(&a).unwrap();
        // T(A) = diag(1 + w, w^2, 0) and 1 + w = -w^2
        assert!((out[(0, 0)] + w * w).norm() < 1e-12);
        assert!((out[(1, 1)] - w * w).norm() < 1e-12);
        assert!(out[(2, 2)].norm() < 1e-12);
        assert!(trace(&out).norm() < 1e-12);
    }

    #[test]
    fn random_cptp_is_tp_and_cp() {
        let t = make_random_cptp(3, 3, 2, 5).unwrap();
        let acc = t
            .kraus_ops()
            .unwrap()
            .iter()
            .fold(CMat::zeros(3, 3), |a, k| a + dagger(k) * k);
        assert!(max_abs_diff(&acc, &eye(3)) < 1e-10);
        assert!(t.choi_min_eigenvalue() > -1e-10);
    }

    #[test]
    fn unitary_mixture_is_unital() {
        let mut rng = crate::sample::rng_for_seed(3);
        let u = crate::sample::haar_unitary_with(&mut rng, 3);
        let v = crate::sample::haar_unitary_with(&mut rng, 3);
        let t = make_unitary_mixture(&[0.5, 0.5], &[u, v]).unwrap();
        assert!(max_abs_diff(&t.apply_identity(), &eye(3)) < 1e-12);
        assert!(max_abs_diff(&t.adjoint().apply_identity(), &eye(3)) < 1e-10);
    }

    #[test]
    fn depolarizing_cp_range() {
        assert!(make_depolarizing(3, 0.25).unwrap().choi_min_eigenvalue() > -1e-10);
        let boundary = make_depolarizing(3, -1.0 / 8.0).unwrap();
        assert!(boundary.choi_min_eigenvalue() > -1e-9);
        let outside = make_depolarizing(3, -0.5).unwrap();
        assert!(outside.choi_min_eigenvalue() < -1e-6);
    }
}
