//! The exponent p of a Schatten norm, with p = infinity as an explicit value.
//!
//! Infinity is carried as a distinct enum variant rather than `f64::INFINITY`
//! so that every formula involving p branches explicitly and no float
//! sentinel can leak into exponent arithmetic by accident.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// An exponent p in [1, inf] for Schatten and induced p->p norms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PExponent {
    /// A finite exponent, guaranteed >= 1 by construction.
    Finite(f64),
    /// The operator-norm endpoint p = infinity.
    Infinity,
}

impl PExponent {
    /// Builds a finite exponent, rejecting p < 1 and non-finite floats.
    pub fn finite(p: f64) -> Result<Self, Error> {
        if !p.is_finite() || p < 1.0 {
            return Err(Error::InvalidExponent { p });
        }
        Ok(PExponent::Finite(p))
    }

    /// The trace-norm endpoint p = 1.
    pub const ONE: PExponent = PExponent::Finite(1.0);
    /// The Hilbert-Schmidt exponent p = 2.
    pub const TWO: PExponent = PExponent::Finite(2.0);

    pub fn is_infinite(self) -> bool {
        matches!(self, PExponent::Infinity)
    }

    pub fn is_one(self) -> bool {
        matches!(self, PExponent::Finite(p) if p == 1.0)
    }

    /// The finite value, or None at p = infinity.
    pub fn as_finite(self) -> Option<f64> {
        match self {
            PExponent::Finite(p) => Some(p),
            PExponent::Infinity => None,
        }
    }

    /// The Hoelder conjugate q with 1/p + 1/q = 1.
    ///
    /// p = 1 maps to infinity and vice versa; p = 2 is self-conjugate.
    pub fn conjugate(self) -> PExponent {
        match self {
            PExponent::Infinity => PExponent::Finite(1.0),
            PExponent::Finite(p) if p == 1.0 => PExponent::Infinity,
            PExponent::Finite(p) => PExponent::Finite(p / (p - 1.0)),
        }
    }

    /// Evaluates n^(1 - 1/p), the exponent pattern of the dimension bound and
    /// its relatives, with the p = infinity branch taken exactly.
    pub fn dimension_power(self, n: f64) -> f64 {
        match self {
            PExponent::Infinity => n,
            PExponent::Finite(p) => n.powf(1.0 - 1.0 / p),
        }
    }

    /// The standard grid {1, 1.5, 2, 3, inf} used by the verification suites.
    pub fn default_grid() -> Vec<PExponent> {
        vec![
            PExponent::Finite(1.0),
            PExponent::Finite(1.5),
            PExponent::Finite(2.0),
            PExponent::Finite(3.0),
            PExponent::Infinity,
        ]
    }
}

impl fmt::Display for PExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PExponent::Finite(p) => write!(f, "{p}"),
            PExponent::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for PExponent {
    type Err = Error;

    /// Parses decimal literals and the token `inf` (also `infinity`, `∞`).
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t.eq_ignore_ascii_case("infinity") || t == "∞" {
            return Ok(PExponent::Infinity);
        }
        let p: f64 = t
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("cannot parse p exponent from {s:?}")))?;
        PExponent::finite(p)
    }
}
