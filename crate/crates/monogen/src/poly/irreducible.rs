//! Irreducibility over Q at desk scale.
//!
//! Three tiers, cheapest first:
//!   1. Eisenstein at shifted arguments x -> x + t for small t;
//!   2. a factor-degree sieve: intersect attainable proper factor degrees
//!      across five primes of good reduction -- empty intersection proves
//!      irreducibility;
//!   3. exact Zassenhaus factorization (Hensel lift + subset recombination),
//!      which always decides unless the recombination budget runs out.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{self, FieldOps, PrimeField};
use super::int::IntPoly;
use super::modp::ModPoly;
use super::resultant::resultant;
use crate::arith::{factor_integer, small_primes, Budget};
use crate::error::Error;
use crate::Result;

/// Outcome of the irreducibility decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// A verified proper divisor.
    Reducible(IntPoly),
    /// Budget exhausted before a decision.
    Unknown,
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible)
    }
}

/// Decide irreducibility of a nonconstant primitive polynomial over Q.
pub fn irreducible_over_q(f: &IntPoly, budget: &Budget) -> Result<Irreducibility> {
    let n = match f.degree() {
        None | Some(0) => {
            return Err(Error::Precondition(
                "irreducibility needs a nonconstant polynomial".into(),
            ))
        }
        Some(n) => n,
    };
    if !f.content().magnitude().is_one() {
        return Err(Error::NotPrimitive);
    }
    if n == 1 {
        return Ok(Irreducibility::Irreducible);
    }
    if f.coeff(0).is_zero() {
        return Ok(Irreducibility::Reducible(IntPoly::x()));
    }
    // Repeated factors settle the question immediately.
    if resultant(f, &f.derivative())?.is_zero() {
        let g = int_gcd(f, &f.derivative());
        assert!(g.degree().unwrap_or(0) >= 1 && g.degree().unwrap() < n);
        assert!(divides_over_z(f, &g));
        return Ok(Irreducibility::Reducible(g));
    }

    if eisenstein_shift_witness(f, budget).is_some() {
        return Ok(Irreducibility::Irreducible);
    }

    match degree_sieve(f) {
        SieveOutcome::Irreducible => return Ok(Irreducibility::Irreducible),
        SieveOutcome::Candidates => {}
    }

    zassenhaus(f, budget)
}

/// Find `(t, q)` such that `f(x + t)` is q-Eisenstein, searching a small
/// shift window.
pub fn eisenstein_shift_witness(f: &IntPoly, budget: &Budget) -> Option<(BigInt, BigUint)> {
    for t in -4i64..=4 {
        let t = BigInt::from(t);
        if let Some(q) = eisenstein_prime(&f.shift_var(&t), budget) {
            return Some((t, q));
        }
    }
    None
}

/// A prime witnessing that `g` is Eisenstein, if any.
pub(crate) fn eisenstein_prime(g: &IntPoly, budget: &Budget) -> Option<BigUint> {
    let n = g.deg();
    let c0 = g.coeff(0);
    if c0.is_zero() {
        return None;
    }
    let mut low_content = BigInt::zero();
    for i in 0..n {
        low_content = low_content.gcd(&g.coeff(i));
    }
    if low_content.magnitude().is_one() || low_content.is_zero() {
        return None;
    }
    let lc = g.leading_coeff();
    let fac = factor_integer(&low_content, budget);
    for q in fac.primes() {
        let qi = BigInt::from(q.clone());
        if (&lc % &qi).is_zero() {
            continue;
        }
        if !(&c0 % (&qi * &qi)).is_zero() {
            return Some(q.clone());
        }
    }
    None
}

enum SieveOutcome {
    Irreducible,
    Candidates,
}

/// Intersect attainable proper factor degrees over the smallest five primes
/// of good reduction (p not dividing lc, f squarefree mod p).
fn degree_sieve(f: &IntPoly) -> SieveOutcome {
    let n = f.deg();
    let mut possible = vec![true; n]; // index d = proper factor degree 1..n-1
    possible[0] = true;
    let mut used = 0;
    for &p in small_primes() {
        if used >= 5 {
            break;
        }
        let p_big = BigUint::from(p);
        if (f.leading_coeff() % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = ModPoly::from_int_unchecked(f, &p_big);
        if fp.degree() != Some(n) {
            continue;
        }
        let d = fp.derivative();
        if d.is_zero() || fp.gcd(&d).degree() != Some(0) {
            continue; // bad reduction
        }
        used += 1;
        // Degrees of the irreducible factors mod p, with multiplicity, via
        // distinct-degree splitting only.
        let fld = PrimeField::new(p_big.clone());
        let mut degs = Vec::new();
        for (grp, dd) in field::distinct_degree(&fld, fp.coeffs()) {
            let count = field::deg(&grp).unwrap() / dd;
            for _ in 0..count {
                degs.push(dd);
            }
        }
        // Subset sums.
        let mut reachable = vec![false; n + 1];
        reachable[0] = true;
        for d in degs {
            for s in (0..=n - d).rev() {
                if reachable[s] {
                    reachable[s + d] = true;
                }
            }
        }
        for d in 1..n {
            if !reachable[d] {
                possible[d] = false;
            }
        }
        if !possible[1..].iter().any(|&b| b) {
            return SieveOutcome::Irreducible;
        }
    }
    SieveOutcome::Candidates
}

/// Zassenhaus: factor mod a good prime, Hensel-lift past the Mignotte bound,
/// recombine subsets. Returns `Unknown` only on recombination-budget
/// exhaustion.
fn zassenhaus(f: &IntPoly, budget: &Budget) -> Result<Irreducibility> {
    let monic = f.is_monic();
    if monic {
        return zassenhaus_monic(f, budget);
    }
    // Monicize: f1(x) = lc^(n-1) f(x/lc) is monic over Z; any proper factor
    // h of f1 maps to the primitive part of h(lc*x), a proper factor of f.
    let n = f.deg();
    let lc = f.leading_coeff();
    let mut coeffs = Vec::with_capacity(n + 1);
    for (i, c) in f.coeffs().iter().enumerate() {
        if i == n {
            coeffs.push(BigInt::one());
        } else {
            coeffs.push(c * lc.pow(u32::try_from(n - 1 - i).expect("degree fits u32")));
        }
    }
    let f1 = IntPoly::new(coeffs);
    assert!(f1.is_monic());
    match zassenhaus_monic(&f1, budget)? {
        Irreducibility::Irreducible => Ok(Irreducibility::Irreducible),
        Irreducibility::Unknown => Ok(Irreducibility::Unknown),
        Irreducibility::Reducible(h) => {
            // Map back: primitive part of h(lc * x).
            let scaled = h.compose(&IntPoly::new(vec![BigInt::zero(), lc.clone()]));
            let content = scaled.content();
            let w = scaled.div_exact_scalar(&content);
            assert!(divides_over_z(f, &w), "mapped witness must divide");
            Ok(Irreducibility::Reducible(w))
        }
    }
}

fn zassenhaus_monic(f: &IntPoly, budget: &Budget) -> Result<Irreducibility> {
    let n = f.deg();
    // Good prime: f squarefree mod p.
    let mut chosen: Option<BigUint> = None;
    for &p in small_primes() {
        let pb = BigUint::from(p);
        let fp = ModPoly::from_int_unchecked(f, &pb);
        if fp.degree() != Some(n) {
            continue;
        }
        let d = fp.derivative();
        if !d.is_zero() && fp.gcd(&d).degree() == Some(0) {
            chosen = Some(pb);
            break;
        }
    }
    let p = chosen.expect("squarefree polynomial has a good prime below 10^6");
    let fp = ModPoly::from_int_unchecked(f, &p);
    let fac = super::modp::factor_mod_p_seeded(&fp, budget.seed)?;
    let factors: Vec<ModPoly> = fac.factors.iter().map(|(g, _)| g.clone()).collect();
    assert!(fac.factors.iter().all(|(_, e)| *e == 1));
    let r = factors.len();
    if r == 1 {
        return Ok(Irreducibility::Irreducible);
    }

    // Lift to p^B beyond twice the Mignotte bound.
    let norm1: BigInt = f.coeffs().iter().map(|c| c.abs()).sum();
    let bound = (BigInt::one() << n) * norm1;
    let mut pe = BigInt::from(p.clone());
    let mut exp = 1u32;
    let two_bound = BigInt::from(2) * &bound + 1;
    while pe < two_bound {
        pe *= BigInt::from(p.clone());
        exp += 1;
    }
    let lifted = hensel_lift(f, &p, &factors, exp);

    // Subset recombination by cardinality.
    let mut tried: u64 = 0;
    let total_masks: u64 = 1u64 << r;
    for size in 1..=(r / 2) {
        let mut mask: u64 = (1u64 << size) - 1;
        while mask < total_masks {
            tried += 1;
            if tried > budget.recombine_cap {
                return Ok(Irreducibility::Unknown);
            }
            let mut candidate = IntPoly::one();
            for (i, g) in lifted.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    candidate = reduce_sym(&(&candidate * g), &pe);
                }
            }
            if divides_over_z(f, &candidate) {
                let d = candidate.degree().unwrap_or(0);
                if d >= 1 && d < n {
                    return Ok(Irreducibility::Reducible(candidate));
                }
            }
            mask = next_mask_same_popcount(mask);
        }
    }
    Ok(Irreducibility::Irreducible)
}

/// Gosper's hack: next integer with the same popcount.
fn next_mask_same_popcount(mask: u64) -> u64 {
    let c = mask & mask.wrapping_neg();
    let r = mask + c;
    if c == 0 || r == 0 {
        return u64::MAX; // terminates the scan
    }
    (((r ^ mask) >> 2) / c) | r
}

/// Coefficients into the symmetric range (-m/2, m/2].
fn reduce_sym(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m >> 1;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let mut r = c.mod_floor(m);
                if r > half {
                    r -= m;
                }
                r
            })
            .collect(),
    )
}

pub(crate) fn divides_over_z(f: &IntPoly, g: &IntPoly) -> bool {
    if g.is_zero() {
        return false;
    }
    if g.degree() == Some(0) {
        return true;
    }
    if g.is_monic() {
        return f.divrem_monic(g).1.is_zero();
    }
    // Pseudo-division test plus content check via rational division: g | f
    // over Q and primitive g over Z implies divisibility over Z.
    let r = f.pseudo_rem(g);
    r.is_zero()
}

/// Linear multifactor Hensel lift of a monic squarefree factorization from
/// mod p to mod p^exp. Returns monic lifts with product congruent to f.
fn hensel_lift(f: &IntPoly, p: &BigUint, factors: &[ModPoly], exp: u32) -> Vec<IntPoly> {
    let fld = PrimeField::new(p.clone());
    let gs: Vec<Vec<BigUint>> = factors.iter().map(|g| g.coeffs().to_vec()).collect();
    let sigmas = partial_fractions(&fld, &gs, &field::constant(&fld, fld.one()));

    let p_int = BigInt::from(p.clone());
    let mut cur: Vec<IntPoly> = factors.iter().map(|g| g.lift()).collect();
    let mut m = p_int.clone();
    for _ in 1..exp {
        let next = &m * &p_int;
        // E = (f - prod cur) / m, then reduced mod p.
        let mut prod = IntPoly::one();
        for g in &cur {
            prod = reduce_mod(&(&prod * g), &next);
        }
        let diff = reduce_mod(&(f - &prod), &next);
        let e_int = diff.div_exact_scalar(&m);
        let e_bar: Vec<BigUint> = {
            let mp = ModPoly::from_int_unchecked(&e_int, p);
            mp.coeffs().to_vec()
        };
        // Corrections: delta_i = sigma_i * E mod g_i.
        for (i, g) in cur.iter_mut().enumerate() {
            let prod_se = field::mul(&fld, &sigmas[i], &e_bar);
            let delta = field::rem(&fld, &prod_se, &gs[i]);
            let delta_int = IntPoly::new(delta.iter().map(|c| BigInt::from(c.clone())).collect());
            *g = reduce_mod(&(&*g + &delta_int.scale(&m)), &next);
        }
        m = next;
    }
    cur
}

fn reduce_mod(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// sigma_i with sum_i sigma_i * prod_{j != i} g_j = c over F_p,
/// deg sigma_i < deg g_i. Requires pairwise coprime monic g_i and
/// deg c < sum deg g_i.
fn partial_fractions(
    fld: &PrimeField,
    gs: &[Vec<BigUint>],
    c: &Vec<BigUint>,
) -> Vec<Vec<BigUint>> {
    if gs.len() == 1 {
        assert!(field::deg(c).map_or(true, |dc| dc < field::deg(&gs[0]).unwrap()));
        return vec![c.clone()];
    }
    let mut g2 = field::constant(fld, fld.one());
    for g in &gs[1..] {
        g2 = field::mul(fld, &g2, g);
    }
    let (d, _s, t) = field::ext_gcd(fld, &gs[0], &g2);
    assert_eq!(field::deg(&d), Some(0), "factors must be pairwise coprime");
    let dinv = fld.inv(&d[0]);
    let t = field::scale(fld, &t, &dinv);
    // sigma_0 = t*c mod g_0; remainder c2 = (c - sigma_0 * G2) / g_0.
    let sigma0 = field::rem(fld, &field::mul(fld, &t, c), &gs[0]);
    let num = field::sub(fld, c, &field::mul(fld, &sigma0, &g2));
    let (c2, rem) = field::divrem(fld, &num, &gs[0]);
    assert!(rem.is_empty(), "partial fraction division must be exact");
    let mut out = vec![sigma0];
    out.extend(partial_fractions(fld, &gs[1..], &c2));
    out
}

/// Gcd over Z[x] by the primitive PRS, contents included, sign-normalized
/// to a positive leading coefficient.
pub fn int_gcd(f: &IntPoly, g: &IntPoly) -> IntPoly {
    if f.is_zero() {
        return normalize_sign(g.clone());
    }
    if g.is_zero() {
        return normalize_sign(f.clone());
    }
    let content = f.content().gcd(&g.content());
    let mut a = primitive_part(f);
    let mut b = primitive_part(g);
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b);
        a = b;
        b = primitive_part(&r);
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
    }
    normalize_sign(primitive_part(&a).scale(&content))
}

fn primitive_part(f: &IntPoly) -> IntPoly {
    if f.is_zero() {
        return IntPoly::zero();
    }
    let c = f.content();
    f.div_exact_scalar(&c)
}

fn normalize_sign(f: IntPoly) -> IntPoly {
    if f.leading_coeff().is_negative() {
        -&f
    } else {
        f
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64(cs)
    }

    #[test]
    fn spec_examples() {
        let b = Budget::default();
        // (x^2+1)^2 - 2x: Eisenstein at 2 after x -> x + 1.
        let f = ip(&[1, 0, 1]).pow(2) - ip(&[0, 2]);
        assert_eq!(irreducible_over_q(&f, &b).unwrap(), Irreducibility::Irreducible);
        let shift = eisenstein_shift_witness(&f, &b);
        assert!(shift.is_some());

        // x^4 - 1 is divisible by x - 1.
        let f = ip(&[-1, 0, 0, 0, 1]);
        match irreducible_over_q(&f, &b).unwrap() {
            Irreducibility::Reducible(w) => {
                assert!(divides_over_z(&f, &w));
                assert!(w.deg() >= 1 && w.deg() < 4);
            }
            other => panic!("expected reducible, got {other:?}"),
        }
    }

    #[test]
    fn example3_degree30_by_sieve() {
        // (x^5+3)^6 - 21 x^11 must come out irreducible.
        let b = Budget::default();
        let f = ip(&[3, 0, 0, 0, 0, 1]).pow(6) - IntPoly::monomial(BigInt::from(21), 11);
        assert_eq!(f.degree(), Some(30));
        assert_eq!(irreducible_over_q(&f, &b).unwrap(), Irreducibility::Irreducible);
    }

    #[test]
    fn repeated_factor_detected() {
        let b = Budget::default();
        let f = ip(&[1, 1]).pow(2) * ip(&[3, 1]);
        match irreducible_over_q(&f, &b).unwrap() {
            Irreducibility::Reducible(w) => assert!(divides_over_z(&f, &w)),
            other => panic!("expected reducible, got {other:?}"),
        }
    }

    #[test]
    fn cyclotomic_like_product_split() {
        let b = Budget::default();
        // (x^2+x+1)(x^2+1): sieve cannot ruling out degree 2; Hensel must split.
        let f = ip(&[1, 1, 1]) * ip(&[1, 0, 1]);
        match irreducible_over_q(&f, &b).unwrap() {
            Irreducibility::Reducible(w) => {
                assert!(divides_over_z(&f, &w));
                assert_eq!(w.deg(), 2);
            }
            other => panic!("expected reducible, got {other:?}"),
        }
    }

    #[test]
    fn non_monic_primitive() {
        let b = Budget::default();
        let f = ip(&[1, 3, 2]); // (2x+1)(x+1)
        match irreducible_over_q(&f, &b).unwrap() {
            Irreducibility::Reducible(w) => assert!(divides_over_z(&f, &w)),
            other => panic!("expected reducible, got {other:?}"),
        }
        let g = ip(&[1, 1, 2]); // 2x^2+x+1, roots complex, irreducible
        assert_eq!(irreducible_over_q(&g, &b).unwrap(), Irreducibility::Irreducible);
    }

    #[test]
    fn rejects_bad_inputs() {
        let b = Budget::default();
        assert!(irreducible_over_q(&ip(&[5]), &b).is_err());
        assert!(irreducible_over_q(&ip(&[2, 0, 2]), &b).is_err());
    }

    #[test]
    fn quartic_that_needs_hensel() {
        let b = Budget::default();
        // x^4 + 1: factors mod every prime but irreducible over Q.
        let f = ip(&[1, 0, 0, 0, 1]);
        assert_eq!(irreducible_over_q(&f, &b).unwrap(), Irreducibility::Irreducible);
        // Swinnerton-Dyer-ish: (x^2-2)(x^2-3) splits everywhere locally too.
        let g = ip(&[-2, 0, 1]) * ip(&[-3, 0, 1]);
        match irreducible_over_q(&g, &b).unwrap() {
            Irreducibility::Reducible(w) => assert!(divides_over_z(&g, &w)),
            other => panic!("expected reducible, got {other:?}"),
        }
    }

    #[test]
    fn int_gcd_basics() {
        let f = ip(&[1, 1]).pow(2) * ip(&[-3, 1]);
        let g = ip(&[1, 1]) * ip(&[5, 1]);
        assert_eq!(int_gcd(&f, &g), ip(&[1, 1]));
        assert_eq!(int_gcd(&f, &IntPoly::zero()), f);
        let a = ip(&[2, 4]); // content 2
        let c = ip(&[4, 8, 4]);
        assert_eq!(int_gcd(&a, &c), ip(&[2]));
    }
}
