//! Exact-arithmetic toolkit for the polynomial family `(x^k + c)^m - a*x^n`.
//!
//! The crate decides, with exact integer arithmetic throughout:
//!
//! - the discriminant of a family member, both by a closed form and by a
//!   resultant oracle ([`family`]);
//! - whether a member is monogenic, per prime, via a seven-case classifier
//!   and via the Dedekind index criterion ([`monogeneity`], [`dedekind`]);
//! - how monogeneity transfers through a composition `f(g(x))`
//!   ([`composition`]);
//! - ramification and residue data above a prime through phi-adic Newton
//!   polygons, and divisibility of the field index ([`newton`]);
//! - certificate-based Galois-group verdicts ([`galois`]);
//! - density estimates and exhaustive enumeration of monogenic members of
//!   binomial subfamilies ([`counting`]).
//!
//! Every public operation is pure and deterministic: randomized steps
//! (equal-degree splitting, Pollard rho) run off a fixed seed carried in
//! [`arith::Budget`], so identical inputs reproduce identical outputs.
//!
//! The `examples/` directory has one runnable walkthrough per capability;
//! the `monogen` binary exposes the same operations as subcommands emitting
//! line-oriented JSON.

pub mod arith;
pub mod composition;
pub mod counting;
pub mod dedekind;
pub mod error;
pub mod family;
pub mod galois;
pub mod monogeneity;
pub mod newton;
pub mod poly;
pub mod report;

pub use arith::{Budget, FactoredInteger, Valuation};
pub use error::Error;
pub use family::FamilyParams;
pub use poly::IntPoly;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
