//! Exact computer algebra for finite-dimensional Hopf algebroids.
//!
//! Everything is computed over the Gaussian rationals `Q(i)` with
//! arbitrary-precision arithmetic, so every verification below is a yes/no
//! answer, never an approximation. The crate provides:
//!
//! - [`scalar`], [`linalg`]: the exact linear-algebra substrate (spans,
//!   kernels, quotients, solves, Hermitian positivity),
//! - [`algebra`]: finite-dimensional unital algebras and *-algebras given by
//!   structure constants, plus group algebras with their Hopf structure,
//! - [`bimodule`]: balanced tensor products over a (possibly noncommutative)
//!   base and the two Takeuchi products,
//! - [`hopf`]: left/right bialgebroids, Hopf algebroids and Hopf *-algebroids
//!   together with verifiers for every axiom and derived identity,
//! - [`groupoid`], [`constructors`]: finite groupoids and the three example
//!   families (convolution, enveloping, Connes-Moscovici algebroids),
//! - [`actions`]: modules, module algebras, invariants and conjugates,
//! - [`calculus`], [`finite_forms`]: graded algebras, covariant differential
//!   calculi, invariant forms, and the bialgebroid acting on universal
//!   one-forms over a finite set,
//! - [`kahler`]: bigradings, Lefschetz/Hodge operators, metrics and
//!   Laplacians on finite-dimensional calculi,
//! - [`fixtures`]: shipped example and corruption fixtures.

pub mod actions;
pub mod algebra;
pub mod bimodule;
pub mod calculus;
pub mod constructors;
pub mod error;
pub mod finite_forms;
pub mod fixtures;
pub mod groupoid;
pub mod hopf;
pub mod kahler;
pub mod linalg;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use linalg::{FinSpace, LinMap, SMat, SVec, Subspace};
pub use report::{CheckItem, CheckReport};
pub use scalar::Scalar;
