//! Exact polynomial arithmetic over Z, F_p and F_p[x]/(phi).

pub(crate) mod field;
mod ext;
mod int;
mod irreducible;
mod modp;
mod resultant;

pub use ext::{factor_ext, ExtFactorization, ExtFieldPoly};
pub use int::{gauss_valuation, IntPoly};
pub use irreducible::{eisenstein_shift_witness, int_gcd, irreducible_over_q, Irreducibility};
pub use modp::{factor_mod_p, ModFactorization, ModPoly};
pub use resultant::{discriminant_any, discriminant_monic, resultant};

pub(crate) use irreducible::divides_over_z;
pub(crate) use irreducible::eisenstein_prime;
