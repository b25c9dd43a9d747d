//! Schatten p-norms, positive/trace-preserving maps on matrix spaces, and
//! induced p->p norm estimation over restricted input domains.
//!
//! The crate has four layers:
//! * [`mat`], [`spectral`], [`sample`] — dense complex linear algebra,
//!   Schatten norms, spectral splittings, seeded random ensembles.
//! * [`channel`] — the [`channel::SuperOp`] map type with natural/Kraus/Choi
//!   representations, structural property checks, a generator zoo, and the
//!   Bloch picture of qubit maps.
//! * [`norm`] — closed-form bounds (dimension bound, traceless-hyperplane
//!   bound, interpolation, the Russo-Dye endpoint), exact special cases, a
//!   multi-restart ascent estimator with certified upper bounds, and an
//!   independent brute-force oracle.
//! * [`suites`], [`report`], [`channel_file`], [`cli`] — the verification
//!   suites that exercise every bound/saturation/counterexample, JSON/CSV
//!   reporting, channel-spec file ingestion, and the command-line front end.
//!
//! Start with the `examples/` directory for runnable tours of each layer.

pub mod channel;
pub mod channel_file;
pub mod cli;
pub mod error;
pub mod mat;
pub mod norm;
pub mod pexp;
pub mod report;
pub mod sample;
pub mod spectral;
pub mod suites;

pub use error::{Error, Result};
pub use mat::CMat;
pub use pexp::PExponent;
