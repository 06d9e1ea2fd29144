//! Exact computer algebra for the invariant powers of the ambient Dirac
//! operator.
//!
//! * [`algebra`]: normal forms in the enveloping algebra of the superalgebra
//!   generated by `x`, `y`, `h`, with the identity suites.
//! * [`clifford`]: gamma matrices of any signature acting on polynomial
//!   spinors, the flat model of `x`, `y`, `h`.
//! * [`weighted`]: the filtered modules `s(p,q)[w]` over `Q(n, w)`.
//! * [`solvers`]: formal extension of cone spinors, the obstruction operators
//!   `L_k`, the direct operators `R_k` and their ratios.
//! * [`expr`]: expression parser and formatter used by the command line tool.

pub mod algebra;
pub mod clifford;
pub mod error;
pub mod expr;
pub mod report;
pub mod rng;
pub mod solvers;
pub mod symbolic;
pub mod weighted;

pub use algebra::{AlgebraElement, Gen, Monomial, Parity};
pub use error::{Error, Result};
pub use report::{Case, Report, Status, Summary};
pub use symbolic::SymScalar;

/// Exact rational coefficient.
pub type Scalar = num_rational::BigRational;

/// Version string stamped into reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
