//! Polynomials over F_p and their complete factorization.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::field::{self, FieldOps, PrimeField};
use super::int::IntPoly;
use crate::arith::{is_prime_biguint, Budget};
use crate::error::Error;
use crate::Result;

/// Seed of the equal-degree splitting RNG used when no budget is supplied.
pub(crate) fn default_seed() -> u64 {
    Budget::default().seed
}

/// A dense polynomial over F_p, residues reduced into `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModPoly {
    p: BigUint,
    coeffs: Vec<BigUint>,
}

impl ModPoly {
    /// Reduce residues mod a prime `p`.
    pub fn new(p: BigUint, coeffs: Vec<BigUint>) -> Result<Self> {
        if !is_prime_biguint(&p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        let field = PrimeField::new(p.clone());
        let mut coeffs: Vec<BigUint> = coeffs.into_iter().map(|c| c % &p).collect();
        field::trim(&field, &mut coeffs);
        Ok(ModPoly { p, coeffs })
    }

    /// Reduce an integer polynomial mod p.
    pub fn from_int(f: &IntPoly, p: &BigUint) -> Result<Self> {
        if !is_prime_biguint(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        Ok(Self::from_int_unchecked(f, p))
    }

    pub(crate) fn from_int_unchecked(f: &IntPoly, p: &BigUint) -> Self {
        let field = PrimeField::new(p.clone());
        let mut coeffs: Vec<BigUint> = f
            .coeffs()
            .iter()
            .map(|c| field::embed_int(p, c))
            .collect();
        field::trim(&field, &mut coeffs);
        ModPoly {
            p: p.clone(),
            coeffs,
        }
    }

    pub(crate) fn from_raw(p: BigUint, coeffs: Vec<BigUint>) -> Self {
        ModPoly { p, coeffs }
    }

    pub fn modulus(&self) -> &BigUint {
        &self.p
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub(crate) fn field(&self) -> PrimeField {
        PrimeField::new(self.p.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        field::deg(&self.coeffs)
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    fn wrap(&self, coeffs: Vec<BigUint>) -> ModPoly {
        ModPoly {
            p: self.p.clone(),
            coeffs,
        }
    }

    fn check_same(&self, other: &ModPoly) {
        assert_eq!(self.p, other.p, "mixed moduli");
    }

    pub fn add(&self, other: &ModPoly) -> ModPoly {
        self.check_same(other);
        self.wrap(field::add(&self.field(), &self.coeffs, &other.coeffs))
    }

    pub fn sub(&self, other: &ModPoly) -> ModPoly {
        self.check_same(other);
        self.wrap(field::sub(&self.field(), &self.coeffs, &other.coeffs))
    }

    pub fn mul(&self, other: &ModPoly) -> ModPoly {
        self.check_same(other);
        self.wrap(field::mul(&self.field(), &self.coeffs, &other.coeffs))
    }

    pub fn divrem(&self, other: &ModPoly) -> (ModPoly, ModPoly) {
        self.check_same(other);
        let (q, r) = field::divrem(&self.field(), &self.coeffs, &other.coeffs);
        (self.wrap(q), self.wrap(r))
    }

    pub fn gcd(&self, other: &ModPoly) -> ModPoly {
        self.check_same(other);
        self.wrap(field::gcd(&self.field(), &self.coeffs, &other.coeffs))
    }

    pub fn derivative(&self) -> ModPoly {
        self.wrap(field::derivative(&self.field(), &self.coeffs))
    }

    pub fn eval(&self, x: &BigUint) -> BigUint {
        field::eval(&self.field(), &self.coeffs, &(x % &self.p))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigUint {
        self.eval(&field::embed_int(&self.p, x))
    }

    pub fn monic(&self) -> (BigUint, ModPoly) {
        let (u, m) = field::monic(&self.field(), &self.coeffs);
        (u, self.wrap(m))
    }

    pub fn pow_mod(&self, e: &BigUint, m: &ModPoly) -> ModPoly {
        self.check_same(m);
        self.wrap(field::pow_mod(&self.field(), &self.coeffs, e, &m.coeffs))
    }

    pub fn is_irreducible(&self) -> bool {
        field::is_irreducible(&self.field(), &self.coeffs)
    }

    /// Roots in F_p, ascending.
    pub fn roots(&self) -> Vec<BigUint> {
        field::roots(&self.field(), &self.coeffs, default_seed())
    }

    /// Lift to Z[x] with coefficients in `[0, p)`.
    pub fn lift(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| BigInt::from(c.clone())).collect())
    }

    /// True when `other` divides `self` over F_p.
    pub fn divisible_by(&self, other: &ModPoly) -> bool {
        self.divrem(other).1.is_zero()
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{c}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Complete factorization over F_p: `unit * prod factors[i]^exp[i]`
/// reconstructs the input; factors are monic irreducible, sorted by degree
/// then lexicographically on the coefficient sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModFactorization {
    pub unit: BigUint,
    pub factors: Vec<(ModPoly, u64)>,
}

impl ModFactorization {
    /// Reassemble the factored polynomial.
    pub fn product(&self, p: &BigUint) -> ModPoly {
        let field = PrimeField::new(p.clone());
        let mut acc = field::constant(&field, self.unit.clone());
        for (g, e) in &self.factors {
            for _ in 0..*e {
                acc = field::mul(&field, &acc, g.coeffs());
            }
        }
        ModPoly::from_raw(p.clone(), acc)
    }

    /// Factors with multiplicity at least 2.
    pub fn repeated(&self) -> impl Iterator<Item = &(ModPoly, u64)> {
        self.factors.iter().filter(|(_, e)| *e >= 2)
    }
}

impl fmt::Display for ModFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.unit.is_one() {
            write!(f, "{} * ", self.unit)?;
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(g, e)| {
                if *e == 1 {
                    format!("({g})")
                } else {
                    format!("({g})^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// Complete factorization into monic irreducibles over F_p, deterministic
/// for the fixed equal-degree-splitting seed.
pub fn factor_mod_p(f: &ModPoly) -> Result<ModFactorization> {
    factor_mod_p_seeded(f, default_seed())
}

pub fn factor_mod_p_seeded(f: &ModPoly, seed: u64) -> Result<ModFactorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("factor_mod_p"));
    }
    let field = f.field();
    let (unit, factors) = field::factor(&field, f.coeffs(), seed);
    Ok(ModFactorization {
        unit,
        factors: factors
            .into_iter()
            .map(|(g, e)| (f.wrap(g), e))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn mp(modulus: u64, cs: &[i64]) -> ModPoly {
        ModPoly::from_int(&IntPoly::from_i64(cs), &p(modulus)).unwrap()
    }

    #[test]
    fn non_prime_modulus_rejected() {
        assert!(ModPoly::from_int(&IntPoly::x(), &p(6)).is_err());
    }

    #[test]
    fn factor_spec_examples() {
        // x^4 - 1 over F_2 -> (x+1)^4
        let f = mp(2, &[-1, 0, 0, 0, 1]);
        let fac = factor_mod_p(&f).unwrap();
        assert_eq!(fac.to_string(), "(x + 1)^4");
        assert_eq!(fac.product(&p(2)), f);

        // x^6 - x^2 over F_5 -> x^2 (x-1)(x-2)(x-3)(x-4)
        let f = mp(5, &[0, 0, -1, 0, 0, 0, 1]);
        let fac = factor_mod_p(&f).unwrap();
        assert_eq!(fac.factors.len(), 5);
        assert_eq!(fac.product(&p(5)), f);
        assert_eq!(fac.repeated().count(), 1);

        // x^2 + 1 over F_5 -> (x-2)(x-3) = (x+3)(x+2)
        let f = mp(5, &[1, 0, 1]);
        let fac = factor_mod_p(&f).unwrap();
        assert_eq!(fac.to_string(), "(x + 2) * (x + 3)");
    }

    #[test]
    fn zero_rejected() {
        let f = mp(5, &[0]);
        assert!(factor_mod_p(&f).is_err());
    }

    #[test]
    fn deterministic_output() {
        let f = mp(101, &[3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 1]);
        let a = factor_mod_p(&f).unwrap();
        let b = factor_mod_p(&f).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.product(&p(101)), f);
    }

    #[test]
    fn roots_and_eval() {
        let f = mp(7, &[-6, 0, 1]); // x^2 - 6 = (x-... roots of 6 mod 7
        let r = f.roots();
        for root in &r {
            assert!(f.eval(root).is_zero());
        }
        // 6 is a QR mod 7? 1,4,2,2,4,1 -> squares are {1,2,4}; 6 is not.
        assert!(r.is_empty());
        let g = mp(7, &[-2, 0, 1]); // x^2 - 2: roots 3, 4
        assert_eq!(g.roots(), vec![BigUint::from(3u32), BigUint::from(4u32)]);
    }
}
