//! Ground truth for index divisibility: the Dedekind criterion.
//!
//! For monic irreducible f and a prime p, factor f mod p as
//! `prod g_i^(e_i)`, lift the g_i with coefficients in [0, p), form
//! `M = (f - prod g_i^(e_i)) / p` exactly over Z, and test whether some
//! repeated factor divides M mod p. Every closed-form monogeneity condition
//! in this crate is validated against this routine.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{is_prime_biguint, FactoredInteger};
use crate::error::Error;
use crate::family::discriminant_oracle;
use crate::poly::{factor_mod_p, IntPoly, ModFactorization, ModPoly};
use crate::Result;

/// Outcome of the criterion at one prime.
#[derive(Debug, Clone)]
pub struct DedekindReport {
    pub p: BigUint,
    pub factorization: ModFactorization,
    /// The reduced M(x) = (f - prod lifts) / p mod p.
    pub m_bar: ModPoly,
    pub divides_index: bool,
    /// First repeated factor dividing M, when the index is divisible.
    pub offending_factor: Option<ModPoly>,
}

/// Dedekind criterion at p. `f` must be monic (and irreducible over Q for
/// the number-theoretic reading; that precondition is the caller's).
pub fn dedekind_divides_index(f: &IntPoly, p: &BigUint) -> Result<DedekindReport> {
    if !is_prime_biguint(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if !f.is_monic() {
        return Err(Error::NotMonic(f.to_string()));
    }
    let fp = ModPoly::from_int(f, p)?;
    let factorization = factor_mod_p(&fp)?;
    assert!(factorization.unit.is_one(), "monic input keeps unit 1");

    // Lift each factor with coefficients in [0, p) and multiply over Z.
    let mut prod = IntPoly::one();
    for (g, e) in &factorization.factors {
        let lift = g.lift();
        for _ in 0..*e {
            prod = &prod * &lift;
        }
    }
    let diff = f - &prod;
    // Every coefficient must be divisible by p before the exact division.
    let p_int = BigInt::from(p.clone());
    for c in diff.coeffs() {
        assert!((c % &p_int).is_zero(), "f - prod(lifts) must vanish mod p");
    }
    let m = diff.div_exact_scalar(&p_int);
    let m_bar = ModPoly::from_int_unchecked(&m, p);

    let mut divides_index = false;
    let mut offending_factor = None;
    for (g, _) in factorization.repeated() {
        if m_bar.divisible_by(g) {
            divides_index = true;
            offending_factor = Some(g.clone());
            break;
        }
    }
    Ok(DedekindReport {
        p: p.clone(),
        factorization,
        m_bar,
        divides_index,
        offending_factor,
    })
}

/// Per-prime index verdicts over the known primes of the discriminant.
#[derive(Debug, Clone)]
pub struct IndexSupport {
    /// prime -> does it divide [Z_K : Z[theta]]?
    pub verdicts: BTreeMap<BigUint, bool>,
    /// False when the discriminant kept an unfactored composite cofactor,
    /// whose primes are unclassified.
    pub complete: bool,
}

/// Runs the criterion over every known prime of the factored discriminant.
/// Primes dividing it only to the first power are reported `false` without
/// running the criterion (the index squares into the discriminant); the
/// passed factorization is recomputed against the oracle and rejected on
/// mismatch.
pub fn index_prime_support(f: &IntPoly, disc: &FactoredInteger) -> Result<IndexSupport> {
    let oracle = discriminant_oracle(f)?;
    if disc.value() != oracle {
        return Err(Error::DiscMismatch(format!(
            "claimed {} but oracle gives {oracle}",
            disc.value()
        )));
    }
    let mut verdicts = BTreeMap::new();
    for (p, e) in &disc.factors {
        if *e < 2 {
            verdicts.insert(p.clone(), false);
        } else {
            let report = dedekind_divides_index(f, p)?;
            verdicts.insert(p.clone(), report.divides_index);
        }
    }
    Ok(IndexSupport {
        verdicts,
        complete: disc.is_complete(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{factor_integer, Budget};

    fn bu(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn x2_minus_5_at_2_divides() {
        // f = x^2 - 5: mod 2 it is (x+1)^2; M = (x^2-5-(x+1)^2)/2 = -x-3,
        // so M mod 2 = x + 1, divisible by the repeated factor.
        let f = IntPoly::from_i64(&[-5, 0, 1]);
        let r = dedekind_divides_index(&f, &bu(2)).unwrap();
        assert!(r.divides_index);
        assert_eq!(
            r.m_bar,
            ModPoly::from_int(&IntPoly::from_i64(&[1, 1]), &bu(2)).unwrap()
        );
        assert_eq!(r.offending_factor.unwrap().to_string(), "x + 1");
    }

    #[test]
    fn x2_plus_1_at_2_does_not_divide() {
        // f = x^2 + 1: mod 2 it is (x+1)^2; M = (x^2+1-(x+1)^2)/2 = -x,
        // and x + 1 does not divide x.
        let f = IntPoly::from_i64(&[1, 0, 1]);
        let r = dedekind_divides_index(&f, &bu(2)).unwrap();
        assert!(!r.divides_index);
        assert_eq!(r.m_bar.to_string(), "x");
    }

    #[test]
    fn x3_minus_2_at_5_squarefree_case() {
        // 5 does not divide disc(x^3 - 2) = -108, so the criterion must
        // come back false.
        let f = IntPoly::from_i64(&[-2, 0, 0, 1]);
        let r = dedekind_divides_index(&f, &bu(5)).unwrap();
        assert!(!r.divides_index);
        assert!(r.factorization.repeated().next().is_none());
    }

    #[test]
    fn rejects_bad_inputs() {
        let f = IntPoly::from_i64(&[1, 0, 2]);
        assert!(dedekind_divides_index(&f, &bu(2)).is_err()); // not monic
        let g = IntPoly::from_i64(&[1, 0, 1]);
        assert!(dedekind_divides_index(&g, &bu(4)).is_err()); // not prime
    }

    #[test]
    fn index_support_examples() {
        let b = Budget::default();

        // x^2 - 5: disc 20 = 2^2 * 5 -> {2: true, 5: false}.
        let f = IntPoly::from_i64(&[-5, 0, 1]);
        let disc = factor_integer(&BigInt::from(20), &b);
        let s = index_prime_support(&f, &disc).unwrap();
        assert!(s.complete);
        assert_eq!(s.verdicts.get(&bu(2)), Some(&true));
        assert_eq!(s.verdicts.get(&bu(5)), Some(&false));

        // x^2 + 1: disc -4 -> {2: false}.
        let f = IntPoly::from_i64(&[1, 0, 1]);
        let disc = factor_integer(&BigInt::from(-4), &b);
        let s = index_prime_support(&f, &disc).unwrap();
        assert_eq!(s.verdicts.get(&bu(2)), Some(&false));

        // x^4 + 2x^2 - 2x + 1: disc 592 = 2^4 * 37 -> {2: false, 37: false}.
        let f = IntPoly::from_i64(&[1, -2, 2, 0, 1]);
        let disc = factor_integer(&BigInt::from(592), &b);
        let s = index_prime_support(&f, &disc).unwrap();
        assert_eq!(s.verdicts.get(&bu(2)), Some(&false));
        assert_eq!(s.verdicts.get(&bu(37)), Some(&false));

        // Mismatched discriminant rejected.
        let wrong = factor_integer(&BigInt::from(593), &b);
        assert!(index_prime_support(&f, &wrong).is_err());
    }
}
