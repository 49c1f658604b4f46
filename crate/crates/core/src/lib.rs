//! *-Ricci tensor of 3-dimensional real hypersurfaces in non-flat complex
//! space forms, and residual checks of its parallelism conditions.
//!
//! Everything is pointwise in the orthonormal frame `(e1, e2 = φe1, ξ)`:
//!
//! - [`frame`]: vectors, operators, `φ`, the wedge endomorphism.
//! - [`models`]: Hopf catalog models and non-Hopf frame data.
//! - [`curvature`]: Gauss curvature, `S*`, the structure Jacobi operator.
//! - [`conditions`]: vanishing, semi-parallel, pseudo-parallel and
//!   ξ-parallel residuals, plus the non-Hopf obstruction chains.
//! - [`classifier`]: radius scans, root solving and the verification suites
//!   behind the `star-ricci` binary.

pub mod classifier;
pub mod conditions;
pub mod curvature;
mod error;
pub mod frame;
pub mod models;
pub mod numfmt;

pub use error::{Error, Result};
