//! Channel-spec files: UTF-8 JSON descriptions of maps that parse into
//! [`SuperOp`]s. Complex scalars are two-element `[re, im]` arrays, matrices
//! are row-major nested arrays, and unknown fields are rejected. Specs
//! round-trip bit-exactly through [`ChannelSpecFile::to_json_string`] and
//! [`ChannelSpecFile::from_json`].

use serde::{Deserialize, Serialize};

use crate::channel::bloch::{channel_of, BlochRep};
use crate::channel::generate::{
    make_depolarizing, make_projector_measurement, make_qutrit_counterexample, make_random_cptp,
    make_trace_channel, make_transpose, make_unitary_mixture,
};
use crate::channel::SuperOp;
use crate::error::{Error, Result};
use crate::mat::{c, CMat};

/// A complex matrix as it appears on disk: rows of `[re, im]` pairs.
pub type SpecMatrix = Vec<Vec<[f64; 2]>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChannelKind {
    Kraus,
    Choi,
    Natural,
    Depolarizing,
    ProjectorMeasurement,
    Trace,
    Transpose,
    QutritCounterexample,
    Bloch,
    UnitaryMixture,
    RandomCptp,
}

impl ChannelKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ChannelKind::Kraus => "kraus",
            ChannelKind::Choi => "choi",
            ChannelKind::Natural => "natural",
            ChannelKind::Depolarizing => "depolarizing",
            ChannelKind::ProjectorMeasurement => "projector_measurement",
            ChannelKind::Trace => "trace",
            ChannelKind::Transpose => "transpose",
            ChannelKind::QutritCounterexample => "qutrit_counterexample",
            ChannelKind::Bloch => "bloch",
            ChannelKind::UnitaryMixture => "unitary_mixture",
            ChannelKind::RandomCptp => "random_cptp",
        }
    }
}

/// Kind-specific parameters. Every field is optional at the schema level;
/// [`ChannelSpecFile::to_channel`] enforces which fields each kind requires.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelParams {
    /// Kraus operators (kind `kraus`).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub operators: Option<Vec<SpecMatrix>>,
    /// Choi or natural matrix (kinds `choi`, `natural`).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub matrix: Option<SpecMatrix>,
    /// Mixing parameter (kind `depolarizing`).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mu: Option<f64>,
    /// Projector rank (kind `projector_measurement`).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<usize>,
    /// Bloch shift vector (kind `bloch`).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<[f64; 3]>,
    /// Bloch linear part, row-major (kind `bloch`).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub big_r: Option<[[f64; 3]; 3]>,
    /// Mixture weights (kind `unitary_mixture`).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub probabilities: Option<Vec<f64>>,
    /// Mixture unitaries (kind `unitary_mixture`).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub unitaries: Option<Vec<SpecMatrix>>,
    /// Output dimension (kind `random_cptp`).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dim_out: Option<usize>,
    /// Environment dimension (kind `random_cptp`).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub env_dim: Option<usize>,
    /// Sampling seed (kind `random_cptp`).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
}

impl ChannelParams {
    fn is_empty(&self) -> bool {
        self == &ChannelParams::default()
    }
}

/// The on-disk channel description: `{"kind": ..., "n": ..., "params": {...}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelSpecFile {
    pub kind: ChannelKind,
    /// Input dimension.
    pub n: usize,
    #[serde(skip_serializing_if = "ChannelParams::is_empty", default)]
    pub params: ChannelParams,
}

fn cmat_of_spec(m: &SpecMatrix, what: &str) -> Result<CMat> {
    let rows = m.len();
    if rows == 0 {
        return Err(Error::ChannelSpec(format!("{what}: matrix has no rows")));
    }
    let cols = m[0].len();
    if cols == 0 {
        return Err(Error::ChannelSpec(format!("{what}: matrix has no columns")));
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::ChannelSpec(format!(
                "{what}: row {i} has {} entries, expected {cols}",
                row.len()
            )));
        }
    }
    Ok(CMat::from_fn(rows, cols, |i, j| c(m[i][j][0], m[i][j][1])))
}

/// A matrix in on-disk form.
pub fn spec_of_cmat(a: &CMat) -> SpecMatrix {
    (0..a.nrows())
        .map(|i| (0..a.ncols()).map(|j| [a[(i, j)].re, a[(i, j)].im]).collect())
        .collect()
}

fn require<T>(field: Option<T>, kind: ChannelKind, name: &str) -> Result<T> {
    field.ok_or_else(|| {
        Error::ChannelSpec(format!(
            "kind '{}' requires params.{name}",
            kind.as_str()
        ))
    })
}

fn forbid_extras(spec: &ChannelSpecFile, allowed: &[&str]) -> Result<()> {
    let p = &spec.params;
    let present: Vec<(&str, bool)> = vec![
        ("operators", p.operators.is_some()),
        ("matrix", p.matrix.is_some()),
        ("mu", p.mu.is_some()),
        ("d", p.d.is_some()),
        ("r", p.r.is_some()),
        ("big_r", p.big_r.is_some()),
        ("probabilities", p.probabilities.is_some()),
        ("unitaries", p.unitaries.is_some()),
        ("dim_out", p.dim_out.is_some()),
        ("env_dim", p.env_dim.is_some()),
        ("seed", p.seed.is_some()),
    ];
    for (name, set) in present {
        if set && !allowed.contains(&name) {
            return Err(Error::ChannelSpec(format!(
                "kind '{}' does not accept params.{name}",
                spec.kind.as_str()
            )));
        }
    }
    Ok(())
}

impl ChannelSpecFile {
    /// Parses a spec from JSON text; syntax errors carry serde's line/column
    /// diagnostics, schema errors name the offending field.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::ChannelSpec(format!("{e}")))
    }

    /// Reads and parses a spec file.
    pub fn from_path(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }

    /// Serializes the spec; `from_json` recovers it bit-exactly.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("spec serializes");
        s.push('\n');
        s
    }

    /// Builds the described map.
    pub fn to_channel(&self) -> Result<SuperOp> {
        let n = self.n;
        if n == 0 {
            return Err(Error::ChannelSpec("n must be at least 1".into()));
        }
        let kind = self.kind;
        match kind {
            ChannelKind::Kraus => {
                forbid_extras(self, &["operators"])?;
                let ops = require(self.params.operators.as_ref(), kind, "operators")?;
                if ops.is_empty() {
                    return Err(Error::ChannelSpec("kraus: need at least one operator".into()));
                }
                let mut ks = Vec::with_capacity(ops.len());
                for (i, op) in ops.iter().enumerate() {
                    let k = cmat_of_spec(op, &format!("kraus operator {i}"))?;
                    if k.ncols() != n {
                        return Err(Error::ChannelSpec(format!(
                            "kraus operator {i}: {} columns, expected n = {n}",
                            k.ncols()
                        )));
                    }
                    ks.push(k);
                }
                SuperOp::from_kraus(ks, "kraus")
            }
            ChannelKind::Choi => {
                forbid_extras(self, &["matrix"])?;
                let m = cmat_of_spec(require(self.params.matrix.as_ref(), kind, "matrix")?, "choi")?;
                if m.nrows() != m.ncols() || m.nrows() % n != 0 {
                    return Err(Error::ChannelSpec(format!(
                        "choi: {}x{} matrix is not square with side divisible by n = {n}",
                        m.nrows(),
                        m.ncols()
                    )));
                }
                let r = m.nrows() / n;
                SuperOp::from_choi(n, r, m, "choi")
            }
            ChannelKind::Natural => {
                forbid_extras(self, &["matrix"])?;
                let m = cmat_of_spec(
                    require(self.params.matrix.as_ref(), kind, "matrix")?,
                    "natural",
                )?;
                if m.ncols() != n * n {
                    return Err(Error::ChannelSpec(format!(
                        "natural: {} columns, expected n^2 = {}",
                        m.ncols(),
                        n * n
                    )));
                }
                let r = (m.nrows() as f64).sqrt().round() as usize;
                if r * r != m.nrows() {
                    return Err(Error::ChannelSpec(format!(
                        "natural: {} rows is not a perfect square",
                        m.nrows()
                    )));
                }
                SuperOp::from_natural(n, r, m, "natural")
            }
            ChannelKind::Depolarizing => {
                forbid_extras(self, &["mu"])?;
                let mu = require(self.params.mu, kind, "mu")?;
                make_depolarizing(n, mu)
            }
            ChannelKind::ProjectorMeasurement => {
                forbid_extras(self, &["d"])?;
                let d = require(self.params.d, kind, "d")?;
                make_projector_measurement(n, d)
            }
            ChannelKind::Trace => {
                forbid_extras(self, &[])?;
                Ok(make_trace_channel(n))
            }
            ChannelKind::Transpose => {
                forbid_extras(self, &[])?;
                Ok(make_transpose(n))
            }
            ChannelKind::QutritCounterexample => {
                forbid_extras(self, &[])?;
                if n != 3 {
                    return Err(Error::ChannelSpec(format!(
                        "qutrit_counterexample requires n = 3, got {n}"
                    )));
                }
                Ok(make_qutrit_counterexample())
            }
            ChannelKind::Bloch => {
                forbid_extras(self, &["r", "big_r"])?;
                if n != 2 {
                    return Err(Error::ChannelSpec(format!("bloch requires n = 2, got {n}")));
                }
                let r = require(self.params.r, kind, "r")?;
                let big_r = require(self.params.big_r, kind, "big_r")?;
                let rep = BlochRep {
                    r: nalgebra::Vector3::new(r[0], r[1], r[2]),
                    big_r: nalgebra::Matrix3::from_fn(|i, j| big_r[i][j]),
                };
                Ok(channel_of(&rep))
            }
            ChannelKind::UnitaryMixture => {
                forbid_extras(self, &["probabilities", "unitaries"])?;
                let probs = require(self.params.probabilities.as_ref(), kind, "probabilities")?;
                let us = require(self.params.unitaries.as_ref(), kind, "unitaries")?;
                let mut mats = Vec::with_capacity(us.len());
                for (i, u) in us.iter().enumerate() {
                    let m = cmat_of_spec(u, &format!("unitary {i}"))?;
                    if m.nrows() != n || m.ncols() != n {
                        return Err(Error::ChannelSpec(format!(
                            "unitary {i}: {}x{}, expected {n}x{n}",
                            m.nrows(),
                            m.ncols()
                        )));
                    }
                    mats.push(m);
                }
                make_unitary_mixture(probs, &mats)
            }
            ChannelKind::RandomCptp => {
                forbid_extras(self, &["dim_out", "env_dim", "seed"])?;
                let dim_out = self.params.dim_out.unwrap_or(n);
                let env_dim = require(self.params.env_dim, kind, "env_dim")?;
                let seed = require(self.params.seed, kind, "seed")?;
                make_random_cptp(n, dim_out, env_dim, seed)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::max_abs_diff;

    #[test]
    fn generator_kinds_build_and_round_trip() {
        let texts = [
            r#"{"kind": "depolarizing", "n": 3, "params": {"mu": 0.25}}"#,
            r#"{"kind": "projector_measurement", "n": 3, "params": {"d": 2}}"#,
            r#"{"kind": "trace", "n": 2}"#,
            r#"{"kind": "transpose", "n": 2}"#,
            r#"{"kind": "qutrit_counterexample", "n": 3}"#,
            r#"{"kind": "random_cptp", "n": 2, "params": {"env_dim": 2, "seed": 7}}"#,
        ];
        for text in texts {
            let spec = ChannelSpecFile::from_json(text).unwrap();
            let t = spec.to_channel().unwrap();
            assert!(t.representation_coherence() < 1e-10, "incoherent: {text}");
            let back = ChannelSpecFile::from_json(&spec.to_json_string()).unwrap();
            assert_eq!(spec, back);
        }
    }

    #[test]
    fn kraus_spec_matches_direct_construction() {
        // amplitude damping with rational gamma = 1/4
        let spec = ChannelSpecFile {
            kind: ChannelKind::Kraus,
            n: 2,
            params: ChannelParams {
                operators: Some(vec![
                    vec![
                        vec![[1.0, 0.0], [0.0, 0.0]],
                        vec![[0.0, 0.0], [0.8660254037844386, 0.0]],
                    ],
                    vec![
                        vec![[0.0, 0.0], [0.5, 0.0]],
                        vec![[0.0, 0.0], [0.0, 0.0]],
                    ],
                ]),
                ..Default::default()
            },
        };
        let t = spec.to_channel().unwrap();
        assert!(t.preserves_hermiticity());
        assert!(t.choi_min_eigenvalue() > -1e-12);
        // bit-exact round trip through text
        let back = ChannelSpecFile::from_json(&spec.to_json_string()).unwrap();
        assert_eq!(spec, back);
        let t2 = back.to_channel().unwrap();
        assert_eq!(max_abs_diff(t.natural_rep(), t2.natural_rep()), 0.0);
    }

    #[test]
    fn bloch_spec_builds_qubit_channel() {
        let text = r#"{
            "kind": "bloch", "n": 2,
            "params": {"r": [0.05, 0.0, 0.0], "big_r": [[0.9, 0.0, 0.0], [0.0, 0.5, 0.0], [0.0, 0.0, 0.1]]}
        }"#;
        let t = ChannelSpecFile::from_json(text).unwrap().to_channel().unwrap();
        assert_eq!(t.dim_in(), 2);
        assert!(t.preserves_hermiticity());
        let b = crate::channel::bloch::bloch_of(&t).unwrap();
        assert!((b.big_r[(0, 0)] - 0.9).abs() < 1e-12);
        assert!((b.r[0] - 0.05).abs() < 1e-12);
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let top = r#"{"kind": "trace", "n": 2, "extra": 1}"#;
        assert!(ChannelSpecFile::from_json(top).is_err());
        let nested = r#"{"kind": "trace", "n": 2, "params": {"bogus": 1}}"#;
        assert!(ChannelSpecFile::from_json(nested).is_err());
        let misplaced = r#"{"kind": "trace", "n": 2, "params": {"mu": 0.5}}"#;
        let spec = ChannelSpecFile::from_json(misplaced).unwrap();
        let err = spec.to_channel().unwrap_err();
        assert!(format!("{err}").contains("does not accept params.mu"), "{err}");
    }

    #[test]
    fn missing_fields_name_the_field() {
        let text = r#"{"kind": "depolarizing", "n": 3}"#;
        let err = ChannelSpecFile::from_json(text).unwrap().to_channel().unwrap_err();
        assert!(format!("{err}").contains("requires params.mu"), "{err}");
    }

    #[test]
    fn arbitrary_doubles_round_trip_bit_exactly() {
        // Kraus entries of a random map exercise full-precision doubles, not
        // short decimals; serialization must stay correctly rounded.
        let src = make_random_cptp(3, 3, 2, 11).unwrap();
        let spec = ChannelSpecFile {
            kind: ChannelKind::Kraus,
            n: 3,
            params: ChannelParams {
                operators: Some(src.kraus_ops().unwrap().iter().map(spec_of_cmat).collect()),
                ..Default::default()
            },
        };
        let back = ChannelSpecFile::from_json(&spec.to_json_string()).unwrap();
        assert_eq!(spec, back);
        let t = back.to_channel().unwrap();
        assert_eq!(max_abs_diff(t.natural_rep(), src.natural_rep()), 0.0);
    }

    #[test]
    fn natural_and_choi_kinds_agree_with_source_map() {
        let src = make_random_cptp(2, 2, 2, 3).unwrap();
        let natural_spec = ChannelSpecFile {
            kind: ChannelKind::Natural,
            n: 2,
            params: ChannelParams {
                matrix: Some(spec_of_cmat(src.natural_rep())),
                ..Default::default()
            },
        };
        let t = natural_spec.to_channel().unwrap();
        assert!(max_abs_diff(t.natural_rep(), src.natural_rep()) < 1e-14);

        let choi = crate::channel::choi_of_natural(src.natural_rep(), 2, 2);
        let choi_spec = ChannelSpecFile {
            kind: ChannelKind::Choi,
            n: 2,
            params: ChannelParams {
                matrix: Some(spec_of_cmat(&choi)),
                ..Default::default()
            },
        };
        let t2 = choi_spec.to_channel().unwrap();
        assert!(max_abs_diff(t2.natural_rep(), src.natural_rep()) < 1e-12);
    }
}
