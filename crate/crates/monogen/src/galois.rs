//! Certificate-based Galois-group verdicts for the family.
//!
//! The route to the full symmetric group: a prime-length Newton-polygon
//! edge pins a large prime inside the group (so it contains A_d), and an
//! odd-valuation prime in the discriminant rules out the square case. No
//! permutation is ever enumerated; the verdict is exactly as strong as its
//! certificate.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Serialize;

use crate::arith::{factor_integer, is_prime_biguint, is_prime_u64, vp_u64, Budget};
use crate::error::Error;
use crate::family::FamilyParams;
use crate::newton::newton_polygon;
use crate::poly::{irreducible_over_q, IntPoly, Irreducibility};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GroupVerdict {
    SymmetricGroup,
    ContainsAlternating,
    Inconclusive,
}

/// The clause-by-clause certificate backing a verdict.
#[derive(Debug, Clone, Serialize)]
pub struct GaloisCertificate {
    /// q = km - n, its primality, and the window d/2 < q < d - 2.
    pub q: u64,
    pub q_prime: bool,
    pub q_in_window: bool,
    /// Witness p with p | c, p | a, p^2 not dividing a, plus the verified
    /// polygon edge of length q at p.
    #[serde(serialize_with = "crate::report::ser_opt_biguint")]
    pub p_witness: Option<BigUint>,
    pub edge_verified: bool,
    /// k(m - 1) and its parity.
    pub parity_value: u64,
    pub parity_odd: bool,
    /// Witness l with v_l(a) odd, l coprime to kmc, plus the checks
    /// l does not divide C - E and v_l(disc) odd.
    #[serde(serialize_with = "crate::report::ser_opt_biguint")]
    pub ell_witness: Option<BigUint>,
    pub v_ell_a: Option<u64>,
    pub ell_coprime_cme: bool,
    pub v_ell_disc_odd: bool,
    /// Square-discriminant certificate (only meaningful when complete).
    pub disc_is_certified_square: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GaloisVerdict {
    pub degree: u64,
    pub verdict: GroupVerdict,
    pub certificate: GaloisCertificate,
}

/// Confirm that the coefficient Newton polygon of f at p has a lower edge
/// exactly from (n, 1) to (km, 0), so of length km - n and slope
/// -1/(km - n). Preconditions: p | c, p | a, p^2 not dividing a, and
/// km - n prime.
pub fn newton_edge_check(params: &FamilyParams, p: &BigUint) -> Result<bool> {
    if !is_prime_biguint(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let p_int = BigInt::from(p.clone());
    if !(&params.c % &p_int).is_zero() || !(&params.a % &p_int).is_zero() {
        return Err(Error::Precondition(format!("{p} must divide both a and c")));
    }
    if vp_u64(&params.a, p) != 1 {
        return Err(Error::Precondition(format!("{p}^2 must not divide a")));
    }
    let q = (params.degree() - params.n) as u64;
    if !is_prime_u64(q) {
        return Err(Error::Precondition(format!("km - n = {q} must be prime")));
    }
    let f = params.build_poly();
    let npd = newton_polygon(&f, &IntPoly::x(), p)?;
    let Some(last) = npd.principal.last() else {
        return Ok(false);
    };
    Ok(last.start == (params.n as usize, 1)
        && last.end == (params.degree() as usize, 0)
        && last.h == 1
        && last.e == q)
}

/// Run the four-clause certificate battery.
pub fn galois_group_check(params: &FamilyParams, budget: &Budget) -> Result<GaloisVerdict> {
    let f = params.build_poly();
    match irreducible_over_q(&f, budget)? {
        Irreducibility::Irreducible => {}
        Irreducibility::Reducible(w) => return Err(Error::Reducible(w.to_string())),
        Irreducibility::Unknown => return Err(Error::IrreducibilityUnknown),
    }
    let d = params.degree() as u64;
    let q = d - params.n as u64;

    // Clause 1: q prime in (d/2, d-2).
    let q_prime = is_prime_u64(q);
    let q_in_window = 2 * q > d && q + 2 < d;

    // Clause 2: p | c, p | a, p^2 not dividing a; then the edge itself.
    let fa = factor_integer(&params.a, budget);
    let fc = factor_integer(&params.c, budget);
    let mut p_witness = None;
    for (p, e) in &fa.factors {
        if *e == 1 && fc.factors.contains_key(p) {
            p_witness = Some(p.clone());
            break;
        }
    }
    let edge_verified = match (&p_witness, q_prime) {
        (Some(p), true) => newton_edge_check(params, p)?,
        _ => false,
    };

    // Clause 3: k(m-1) odd.
    let parity_value = params.k as u64 * (params.m as u64 - 1);
    let parity_odd = parity_value % 2 == 1;

    // Clause 4: l with v_l(a) odd, l coprime to kmc; verified against C - E
    // and the discriminant valuation directly.
    let kmc = BigInt::from(params.degree()) * &params.c;
    let cme = params.compute_cee().c_minus_e();
    let mut ell_witness = None;
    let mut v_ell_a = None;
    let mut ell_coprime_cme = false;
    let mut v_ell_disc_odd = false;
    for (l, e) in &fa.factors {
        if *e % 2 == 1 && !(&kmc % BigInt::from(l.clone())).is_zero() {
            let coprime = cme.is_zero() || vp_u64(&cme, l) == 0;
            let v_disc = params.disc_valuation(l);
            if coprime && v_disc % 2 == 1 {
                ell_witness = Some(l.clone());
                v_ell_a = Some(*e);
                ell_coprime_cme = true;
                v_ell_disc_odd = true;
                break;
            }
        }
    }

    // Certified-square check for the alternating branch: complete
    // factorization with every exponent even and positive sign.
    let disc = crate::monogeneity::factor_family_disc(params, budget);
    let disc_is_certified_square = disc.is_complete()
        && disc.sign > 0
        && disc.factors.values().all(|e| e % 2 == 0);

    let clause12 = q_prime && q_in_window && p_witness.is_some() && edge_verified;
    let verdict = if clause12 && parity_odd && ell_witness.is_some() {
        GroupVerdict::SymmetricGroup
    } else if clause12 && disc_is_certified_square {
        GroupVerdict::ContainsAlternating
    } else {
        GroupVerdict::Inconclusive
    };
    Ok(GaloisVerdict {
        degree: d,
        verdict,
        certificate: GaloisCertificate {
            q,
            q_prime,
            q_in_window,
            p_witness,
            edge_verified,
            parity_value,
            parity_odd,
            ell_witness,
            v_ell_a,
            ell_coprime_cme,
            v_ell_disc_odd,
            disc_is_certified_square,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bu(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn example3_symmetric_s30() {
        let b = Budget::default();
        let params = FamilyParams::from_i64(5, 6, 11, 21, 3).unwrap();
        let v = galois_group_check(&params, &b).unwrap();
        assert_eq!(v.degree, 30);
        assert_eq!(v.verdict, GroupVerdict::SymmetricGroup);
        let c = &v.certificate;
        assert_eq!(c.q, 19);
        assert!(c.q_prime && c.q_in_window);
        assert_eq!(c.p_witness, Some(bu(3)));
        assert!(c.edge_verified);
        assert_eq!(c.parity_value, 25);
        assert!(c.parity_odd);
        assert_eq!(c.ell_witness, Some(bu(7)));
        assert_eq!(c.v_ell_a, Some(1));
    }

    #[test]
    fn parity_broken_is_inconclusive() {
        // k(m-1) = 2*2 = 4 even.
        let b = Budget::default();
        let params = FamilyParams::from_i64(2, 3, 1, 10, 5).unwrap();
        let v = galois_group_check(&params, &b).unwrap();
        assert!(!v.certificate.parity_odd);
        assert_ne!(v.verdict, GroupVerdict::SymmetricGroup);
    }

    #[test]
    fn composite_q_is_inconclusive() {
        // km - n = 12 - 3 = 9 composite.
        let b = Budget::default();
        let params = FamilyParams::from_i64(3, 4, 3, 6, 10).unwrap();
        let v = galois_group_check(&params, &b).unwrap();
        assert!(!v.certificate.q_prime);
        assert_eq!(v.verdict, GroupVerdict::Inconclusive);
    }

    #[test]
    fn edge_check_examples() {
        let params = FamilyParams::from_i64(5, 6, 11, 21, 3).unwrap();
        assert!(newton_edge_check(&params, &bu(3)).unwrap());

        // Preconditions rejected: p^2 | a.
        let params = FamilyParams::from_i64(2, 2, 1, 4, 2).unwrap();
        assert!(newton_edge_check(&params, &bu(2)).is_err());

        // km - n composite rejected.
        let params = FamilyParams::from_i64(3, 4, 3, 6, 3).unwrap();
        assert!(newton_edge_check(&params, &bu(3)).is_err());
    }

    #[test]
    fn symmetric_verdict_implies_odd_disc_valuation() {
        let b = Budget::default();
        let params = FamilyParams::from_i64(5, 6, 11, 21, 3).unwrap();
        let v = galois_group_check(&params, &b).unwrap();
        if v.verdict == GroupVerdict::SymmetricGroup {
            let l = v.certificate.ell_witness.unwrap();
            let d = params.discriminant_closed();
            assert_eq!(vp_u64(&d, &l) % 2, 1);
        }
    }
}
