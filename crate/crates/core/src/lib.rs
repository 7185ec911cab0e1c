//! Numerical verification toolkit for matrix norm inequalities relating the
//! Heinz mean, the logarithmic mean and the generalized logarithmic mean.
//!
//! The crate is organized around five pieces:
//!
//! - [`means`]: the scalar means, evaluated stably in log-gap coordinates;
//! - [`posdef`]: positive-definite function testing via Gram matrices, the
//!   strong-dominance relation between means, and witness searches that
//!   certify failures outside the stated parameter ranges;
//! - [`matops`]: Hermitian matrix machinery — spectral decompositions,
//!   fractional powers, weighted cross-terms, the matrix integral mean in
//!   closed form plus a Simpson quadrature oracle, Schur products and the
//!   2×2 block embedding;
//! - [`norms`]: unitarily invariant norms from singular values (Schatten-p,
//!   Ky Fan-k, operator, trace, Frobenius);
//! - [`verify`]: the harness — randomized theorem checkers, dominance-region
//!   sweeps, and machine-readable JSON/CSV reports.

pub mod error;
pub mod means;
pub mod matops;
pub mod norms;
pub mod posdef;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use matops::{CMatrix, PositiveMatrix, SpectralDecomp, C64};
pub use means::MeanKind;
pub use norms::NormKind;
pub use posdef::{GramResult, KernelKind, WitnessResult};
pub use report::{InequalityReport, TheoremId};
pub use verify::{ReportDocument, ReportFormat, SweepConfig, SweepReport, TrialConfig};
