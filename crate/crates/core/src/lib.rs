//! Solvers for quadratic congruences `ax^2 + bx + c = 0 (mod n)`.
//!
//! The crate provides three routes to the solution set of a quadratic
//! congruence (the general form over modulus `4|a|n`, the exact closed
//! formula for `gcd(2a, n) = 1`, and the intermediate-form candidate over
//! modulus `n`), a complete modular square-root solver assembled from the
//! prime-power cases, and a classifier that decides, with a justifying
//! branch, whether the intermediate form produces exactly the true
//! solution set.

pub mod error;
pub mod intmath;
pub mod iqf;
pub mod quadsolve;
pub mod sqrtmod;

mod solution_set;

pub use error::{Error, Result};
pub use intmath::{FactoredInteger, Multiplicity};
pub use iqf::{Branch, IqfParameters, IqfVerdict};
pub use quadsolve::{CongruenceInstance, Discriminant};
pub use solution_set::SolutionSet;
