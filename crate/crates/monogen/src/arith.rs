//! Exact integer arithmetic: valuations, primality, budgeted factorization
//! and finite-field counting.
//!
//! Everything here is deterministic. The only randomized algorithm, Pollard
//! rho, runs Brent's cycle search with parameters derived from the fixed
//! seed in [`Budget`], so a given `(value, budget)` pair always produces the
//! same [`FactoredInteger`].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::Result;

/// Work limits shared by the budgeted operations.
///
/// `trial_bound` caps trial division, `rho_iters` caps the total number of
/// Pollard-rho iterations per `factor_integer` call, `recombine_cap` caps
/// the number of factor-subset candidates tried when factoring over the
/// integers, and `seed` drives every randomized step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    pub trial_bound: u64,
    pub rho_iters: u64,
    pub recombine_cap: u64,
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            trial_bound: 1_000_000,
            rho_iters: 1_000_000,
            recombine_cap: 1 << 20,
            seed: 0x6d6f_6e6f_6765_6e,
        }
    }
}

/// A p-adic valuation; `Infinite` is the conventional value at 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// The valuation as a u64, panicking on the infinite marker.
    pub fn unwrap(self) -> u64 {
        self.finite().expect("valuation of 0 is infinite")
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Exact p-adic valuation of `n`; the infinite marker if and only if `n = 0`.
pub fn vp(n: &BigInt, p: &BigUint) -> Result<Valuation> {
    if !is_prime_biguint(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if n.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let p = BigInt::from(p.clone());
    let mut m = n.abs();
    let mut v = 0u64;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return Ok(Valuation::Finite(v));
        }
        m = q;
        v += 1;
    }
}

/// Valuation as a plain u64; `n` must be nonzero and `p` prime.
pub(crate) fn vp_u64(n: &BigInt, p: &BigUint) -> u64 {
    assert!(!n.is_zero(), "vp_u64 on zero");
    vp(n, p).expect("prime modulus").unwrap()
}

// ---------------------------------------------------------------------------
// Primality
// ---------------------------------------------------------------------------

/// Primality verdict. `certified` is true below 2^64 (deterministic witness
/// set); above, the test is strong-probable-prime with 48 fixed bases, so a
/// composite escapes with probability at most 4^-48.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primality {
    Prime { certified: bool },
    Composite,
}

impl Primality {
    pub fn is_prime(self) -> bool {
        matches!(self, Primality::Prime { .. })
    }
}

/// Miller-Rabin on natural numbers. Deterministic and correct for inputs
/// below 2^64; probabilistic (flagged) above.
pub fn primality(n: &BigUint) -> Primality {
    let two = BigUint::from(2u32);
    if *n < two {
        return Primality::Composite;
    }
    if *n == two {
        return Primality::Prime { certified: true };
    }
    if n.is_even() {
        return Primality::Composite;
    }
    // Strip n-1 = d * 2^s.
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;

    let certified = n.bits() <= 64;
    // First 12 primes certify everything below 3.3 * 10^24 > 2^64; beyond
    // that, more fixed bases push the error bound down.
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    let extra: Vec<u64> = if certified {
        vec![]
    } else {
        (0..36).map(|i| 41 + 2 * i * i + i).collect()
    };

    'bases: for b in BASES.iter().copied().chain(extra) {
        let b = BigUint::from(b) % n;
        if b.is_zero() || b.is_one() {
            continue;
        }
        let mut x = b.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return Primality::Composite;
    }
    Primality::Prime { certified }
}

/// Convenience wrapper: primality of a signed integer (negatives, 0 and 1
/// are not prime).
pub fn is_prime(n: &BigInt) -> bool {
    if n.sign() != num_bigint::Sign::Plus {
        return false;
    }
    primality(n.magnitude()).is_prime()
}

pub(crate) fn is_prime_biguint(n: &BigUint) -> bool {
    primality(n).is_prime()
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    primality(&BigUint::from(n)).is_prime()
}

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

/// A (possibly partial) factorization `sign * cofactor * prod p^e`.
///
/// Every key in `factors` is prime; `cofactor` is 1 when the factorization
/// is complete, otherwise a composite remainder coprime to all keys whose
/// prime factors exceeded the budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    pub sign: i8,
    pub factors: BTreeMap<BigUint, u64>,
    pub cofactor: BigUint,
}

impl FactoredInteger {
    pub fn one() -> Self {
        FactoredInteger {
            sign: 1,
            factors: BTreeMap::new(),
            cofactor: BigUint::one(),
        }
    }

    /// Reconstruct the factored integer exactly.
    pub fn value(&self) -> BigInt {
        if self.sign == 0 {
            return BigInt::zero();
        }
        let mut v = BigInt::from(self.cofactor.clone());
        for (p, e) in &self.factors {
            v *= BigInt::from(p.clone()).pow(
                u32::try_from(*e).expect("exponent fits u32"),
            );
        }
        if self.sign < 0 {
            -v
        } else {
            v
        }
    }

    /// True when no composite part remains.
    pub fn is_complete(&self) -> bool {
        self.cofactor.is_one()
    }

    /// Exponent of `p` among the known factors.
    pub fn exponent_of(&self, p: &BigUint) -> u64 {
        self.factors.get(p).copied().unwrap_or(0)
    }

    /// Known prime divisors, ascending.
    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.keys()
    }

    /// Raise to the `e`-th power (exponents scale, cofactor is powered).
    pub fn pow(&self, e: u64) -> Self {
        if e == 0 {
            return FactoredInteger::one();
        }
        let mut out = self.clone();
        out.sign = if self.sign < 0 && e % 2 == 1 { -1 } else { self.sign.abs() };
        if self.sign == 0 {
            out.sign = 0;
        }
        for v in out.factors.values_mut() {
            *v *= e;
        }
        out.cofactor = self.cofactor.pow(u32::try_from(e).expect("exponent fits u32"));
        out
    }

    /// Exact product of two factorizations. Known primes of either side are
    /// pulled out of the other side's cofactor so the coprimality invariant
    /// survives the merge.
    pub fn mul(&self, other: &FactoredInteger) -> Self {
        if self.sign == 0 || other.sign == 0 {
            return FactoredInteger {
                sign: 0,
                factors: BTreeMap::new(),
                cofactor: BigUint::one(),
            };
        }
        let mut factors = self.factors.clone();
        for (p, e) in &other.factors {
            *factors.entry(p.clone()).or_insert(0) += e;
        }
        let mut cofactor = &self.cofactor * &other.cofactor;
        if !cofactor.is_one() {
            for (p, e) in factors.iter_mut() {
                while (&cofactor % p).is_zero() {
                    cofactor /= p;
                    *e += 1;
                }
            }
        }
        FactoredInteger {
            sign: self.sign * other.sign,
            factors,
            cofactor,
        }
    }

    /// Squarefree verdict, when it can be decided: `Some(false)` as soon as a
    /// known exponent is >= 2 or the cofactor is a perfect power, `Some(true)`
    /// when complete with all exponents 1, `None` otherwise.
    pub fn is_squarefree(&self) -> Option<bool> {
        if self.sign == 0 {
            return Some(false);
        }
        if self.factors.values().any(|e| *e >= 2) {
            return Some(false);
        }
        if self.cofactor.is_one() {
            return Some(true);
        }
        if is_perfect_power(&self.cofactor) {
            return Some(false);
        }
        None
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 0 {
            return write!(f, "0");
        }
        if self.sign < 0 {
            write!(f, "-")?;
        }
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        if !self.cofactor.is_one() {
            parts.push(format!("C{}", self.cofactor));
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{}", parts.join(" * "))
    }
}

/// Is `n > 1` a perfect power `m^k`, `k >= 2`?
fn is_perfect_power(n: &BigUint) -> bool {
    if n.is_one() {
        return false;
    }
    let bits = n.bits();
    for k in 2..=bits {
        let r = n.nth_root(u32::try_from(k).expect("root index fits u32"));
        if r.pow(u32::try_from(k).expect("root index fits u32")) == *n {
            return true;
        }
        if r <= BigUint::one() {
            break;
        }
    }
    false
}

/// Primes up to one million, shared by every trial-division pass.
pub(crate) fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve_primes(1_000_000))
}

/// Simple sieve of Eratosthenes.
pub(crate) fn sieve_primes(bound: u32) -> Vec<u32> {
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u32);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Factor `n` within `budget`: trial division by primes up to
/// `budget.trial_bound`, then Brent-rho capped at `budget.rho_iters`
/// iterations in total. Whatever remains unsplit is returned as the
/// composite `cofactor`. Deterministic for a fixed budget.
pub fn factor_integer(n: &BigInt, budget: &Budget) -> FactoredInteger {
    if n.is_zero() {
        return FactoredInteger {
            sign: 0,
            factors: BTreeMap::new(),
            cofactor: BigUint::one(),
        };
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.magnitude().clone();
    let mut factors: BTreeMap<BigUint, u64> = BTreeMap::new();

    for &p in small_primes() {
        if p as u64 > budget.trial_bound {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > m {
            break;
        }
        while (&m % &pb).is_zero() {
            m /= &pb;
            *factors.entry(pb.clone()).or_insert(0) += 1;
        }
        if m.is_one() {
            break;
        }
    }

    let mut cofactor = BigUint::one();
    if !m.is_one() {
        // All remaining prime factors exceed min(trial_bound, sqrt(m)).
        let mut stack = vec![m];
        let mut rho_left = budget.rho_iters;
        while let Some(v) = stack.pop() {
            if v.is_one() {
                continue;
            }
            if primality(&v).is_prime() {
                *factors.entry(v).or_insert(0) += 1;
                continue;
            }
            match brent_rho(&v, &mut rho_left, budget.seed) {
                Some(d) => {
                    let q = &v / &d;
                    stack.push(d);
                    stack.push(q);
                }
                None => cofactor *= &v,
            }
        }
    }

    FactoredInteger {
        sign,
        factors,
        cofactor,
    }
}

/// Brent's variant of Pollard rho. Returns a nontrivial divisor of the odd
/// composite `n`, or `None` once `*iters_left` runs out. The polynomial
/// constant walks a fixed schedule derived from `seed`, keeping runs
/// reproducible.
fn brent_rho(n: &BigUint, iters_left: &mut u64, seed: u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    if let Some(small) = n.to_u64() {
        return brent_rho_u64(small, iters_left, seed).map(BigUint::from);
    }
    let one = BigUint::one();
    for attempt in 0..64u64 {
        if *iters_left == 0 {
            return None;
        }
        let c = BigUint::from((seed.wrapping_mul(6364136223846793005).wrapping_add(attempt)) % 0xffff + 1);
        let mut y = BigUint::from(2u32) + BigUint::from(attempt);
        let mut r: u64 = 1;
        let mut q = one.clone();
        let mut g = one.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = (&y * &y + &c) % n;
            }
            let mut k = 0u64;
            while k < r && g.is_one() {
                ys = y.clone();
                let batch = 128.min(r - k);
                let steps = batch.min(*iters_left);
                for _ in 0..steps {
                    y = (&y * &y + &c) % n;
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (&q * &diff) % n;
                }
                *iters_left = iters_left.saturating_sub(steps);
                if steps < batch {
                    return None; // budget exhausted mid-batch
                }
                g = q.gcd(n);
                k += batch;
            }
            r *= 2;
            if *iters_left == 0 && g.is_one() {
                return None;
            }
        }
        if g == *n {
            // Backtrack one step at a time.
            loop {
                ys = (&ys * &ys + &c) % n;
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return Some(g);
        }
        // Cycle collapsed; retry with the next constant.
    }
    None
}

/// u64 fast path of Brent rho (u128 intermediates).
fn brent_rho_u64(n: u64, iters_left: &mut u64, seed: u64) -> Option<u64> {
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    for attempt in 0..64u64 {
        if *iters_left == 0 {
            return None;
        }
        let c = (seed.wrapping_mul(6364136223846793005).wrapping_add(attempt)) % (n - 2) + 1;
        let step = |v: u64| {
            let s = mulmod(v, v);
            let t = s + c;
            if t >= n || t < s {
                t.wrapping_sub(n)
            } else {
                t
            }
        };
        let mut y = 2u64.wrapping_add(attempt) % n;
        let mut r: u64 = 1;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0u64;
            while k < r && g == 1 {
                ys = y;
                let batch = 128.min(r - k);
                let steps = batch.min(*iters_left);
                for _ in 0..steps {
                    y = step(y);
                    q = mulmod(q, x.abs_diff(y).max(1));
                }
                *iters_left = iters_left.saturating_sub(steps);
                if steps < batch {
                    return None;
                }
                g = gcd_u64(q, n);
                k += batch;
            }
            r *= 2;
            if *iters_left == 0 && g == 1 {
                return None;
            }
        }
        if g == n {
            loop {
                ys = step(ys);
                g = gcd_u64(x.abs_diff(ys).max(1), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return Some(g);
        }
    }
    None
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

// ---------------------------------------------------------------------------
// Counting over finite fields
// ---------------------------------------------------------------------------

/// Number of monic irreducible polynomials of degree `f` over F_p:
/// `(1/f) * sum_{d | f} mu(d) p^{f/d}` (the necklace formula).
pub fn count_monic_irreducibles(p: &BigUint, f: u64) -> Result<BigUint> {
    if !is_prime_biguint(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if f == 0 {
        return Err(Error::Precondition("degree must be >= 1".into()));
    }
    let mut total = BigInt::zero();
    for d in 1..=f {
        if f % d != 0 {
            continue;
        }
        let mu = moebius_u64(d);
        if mu == 0 {
            continue;
        }
        let term = BigInt::from(p.clone()).pow(u32::try_from(f / d).expect("degree fits u32"));
        total += BigInt::from(mu) * term;
    }
    let (q, r) = total.div_rem(&BigInt::from(f));
    assert!(r.is_zero(), "necklace sum must be divisible by the degree");
    assert!(!q.is_negative());
    Ok(q.magnitude().clone())
}

/// Moebius function of a small integer.
pub(crate) fn moebius_u64(n: u64) -> i64 {
    assert!(n >= 1);
    let mut m = n;
    let mut parity = 0u64;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return 0;
            }
            parity += 1;
        }
        d += 1;
    }
    if m > 1 {
        parity += 1;
    }
    if parity % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Multiplicative inverse of `a` modulo `m` (gcd(a, m) must be 1).
pub(crate) fn inv_mod(a: &BigUint, m: &BigUint) -> BigUint {
    let a = BigInt::from(a % m);
    let m_int = BigInt::from(m.clone());
    let ext = a.extended_gcd(&m_int);
    assert!(ext.gcd.is_one(), "inverse of non-unit {a} mod {m_int}");
    let r = ext.x.mod_floor(&m_int);
    r.magnitude().clone()
}

/// Canonical residue of a signed integer modulo `m`.
pub(crate) fn mod_big(a: &BigInt, m: &BigUint) -> BigUint {
    let m_int = BigInt::from(m.clone());
    a.mod_floor(&m_int).magnitude().clone()
}

/// Radical of `n` (product of distinct primes).
pub fn radical(n: u64) -> u64 {
    assert!(n >= 1);
    let mut m = n;
    let mut out = 1u64;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            out *= d;
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out *= m;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn bu(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn vp_examples() {
        assert_eq!(vp(&bi(148), &bu(2)).unwrap(), Valuation::Finite(2));
        assert_eq!(vp(&bi(25), &bu(5)).unwrap(), Valuation::Finite(2));
        assert_eq!(vp(&bi(0), &bu(7)).unwrap(), Valuation::Infinite);
        assert!(vp(&bi(10), &bu(6)).is_err());
    }

    #[test]
    fn vp_consistency() {
        // n / p^vp(n,p) is an integer not divisible by p.
        for n in [-360i64, -17, 1, 2, 48, 148, 1024, 59049] {
            for p in [2u64, 3, 5, 7, 11] {
                let v = vp(&bi(n), &bu(p)).unwrap().unwrap();
                let q = bi(n) / bi(p as i64).pow(v as u32);
                assert!(!(&q % bi(p as i64)).is_zero());
            }
        }
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(&bi(19)));
        assert!(!is_prime(&bi(30)));
        assert!(is_prime(&bi(3041)));
        assert!(!is_prime(&bi(1)));
        assert!(!is_prime(&bi(-7)));
        assert!(is_prime(&bi(2)));
        // Strong pseudoprime to base 2 alone.
        assert!(!is_prime(&bi(2047)));
        // Large certified-probable prime: 2^89 - 1 (Mersenne).
        let m89: BigInt = (BigInt::one() << 89) - 1;
        match primality(m89.magnitude()) {
            Primality::Prime { certified } => assert!(!certified),
            Primality::Composite => panic!("2^89 - 1 is prime"),
        }
    }

    #[test]
    fn factor_examples() {
        let b = Budget::default();
        let f = factor_integer(&bi(148), &b);
        assert_eq!(f.to_string(), "2^2 * 37");
        assert_eq!(f.value(), bi(148));

        let f = factor_integer(&bi(331469), &b);
        assert_eq!(f.to_string(), "109 * 3041");

        let f = factor_integer(&bi(1), &b);
        assert!(f.factors.is_empty());
        assert!(f.is_complete());
        assert_eq!(f.value(), bi(1));

        let f = factor_integer(&bi(0), &b);
        assert_eq!(f.sign, 0);
        assert_eq!(f.value(), bi(0));

        let f = factor_integer(&bi(-106469), &b);
        assert_eq!(f.to_string(), "-11 * 9679");
        assert_eq!(f.value(), bi(-106469));
    }

    #[test]
    fn factor_reconstruction_random() {
        let b = Budget::default();
        let mut x: i64 = 987654321;
        for _ in 0..200 {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let n = x % 1_000_000_007;
            let f = factor_integer(&bi(n), &b);
            assert_eq!(f.value(), bi(n), "reconstruction of {n}");
            for p in f.primes() {
                assert!(is_prime_biguint(p));
            }
            assert!(f.is_complete(), "{n} fits the budget");
        }
    }

    #[test]
    fn factor_large_semiprime_within_budget() {
        let b = Budget::default();
        // 1e9+7 and 1e9+9 are prime; rho finds ~1e9 factors quickly.
        let n = bi(1_000_000_007) * bi(1_000_000_009);
        let f = factor_integer(&n, &b);
        assert!(f.is_complete());
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.value(), n);
    }

    #[test]
    fn factor_budget_exhaustion_isolates_cofactor() {
        // Two ~2^80 primes: far beyond a tiny rho budget.
        let p = (BigInt::one() << 82) + 61; // not prime necessarily; use known primes instead
        let _ = p;
        let p1 = BigInt::parse_bytes(b"1208925819614629174706189", 10).unwrap(); // 2^80 + 13, prime
        assert!(is_prime(&p1));
        let p2 = BigInt::parse_bytes(b"1208925819614629174706111", 10).unwrap();
        assert!(is_prime(&p2));
        let n = &p1 * &p2;
        let small = Budget {
            rho_iters: 500,
            ..Budget::default()
        };
        let f = factor_integer(&n, &small);
        assert!(!f.is_complete());
        assert_eq!(f.value(), n, "reconstruction holds even when partial");
        assert!(!primality(&f.cofactor).is_prime());
    }

    #[test]
    fn count_irreducibles_examples() {
        assert_eq!(count_monic_irreducibles(&bu(5), 1).unwrap(), bu(5));
        assert_eq!(count_monic_irreducibles(&bu(2), 2).unwrap(), bu(1));
        assert_eq!(count_monic_irreducibles(&bu(3), 2).unwrap(), bu(3));
        assert!(count_monic_irreducibles(&bu(4), 1).is_err());
    }

    #[test]
    fn gauss_identity() {
        // sum_{d | f} d * N_d = p^f for all p <= 31, f <= 6.
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            for f in 1u64..=6 {
                let mut total = BigUint::zero();
                for d in 1..=f {
                    if f % d == 0 {
                        total += BigUint::from(d) * count_monic_irreducibles(&bu(p), d).unwrap();
                    }
                }
                assert_eq!(total, bu(p).pow(f as u32), "p={p} f={f}");
                let nf = count_monic_irreducibles(&bu(p), f).unwrap();
                assert!(nf * bu(f) <= bu(p).pow(f as u32));
            }
        }
    }

    #[test]
    fn factored_integer_mul_and_pow() {
        let b = Budget::default();
        let f1 = factor_integer(&bi(-12), &b);
        let f2 = factor_integer(&bi(18), &b);
        let prod = f1.mul(&f2);
        assert_eq!(prod.value(), bi(-216));
        assert_eq!(prod.pow(2).value(), bi(216) * bi(216));
        assert_eq!(f1.pow(0).value(), bi(1));
    }

    #[test]
    fn squarefree_detection() {
        let b = Budget::default();
        assert_eq!(factor_integer(&bi(106469), &b).is_squarefree(), Some(true));
        assert_eq!(factor_integer(&bi(148), &b).is_squarefree(), Some(false));
        // Perfect square beyond the budget's reach still detected.
        let p1 = BigInt::parse_bytes(b"1208925819614629174706189", 10).unwrap();
        let sq = &p1 * &p1;
        let small = Budget {
            rho_iters: 100,
            ..Budget::default()
        };
        assert_eq!(factor_integer(&sq, &small).is_squarefree(), Some(false));
    }

    #[test]
    fn moebius_and_radical() {
        assert_eq!(moebius_u64(1), 1);
        assert_eq!(moebius_u64(6), 1);
        assert_eq!(moebius_u64(30), -1);
        assert_eq!(moebius_u64(12), 0);
        assert_eq!(radical(12), 6);
        assert_eq!(radical(1), 1);
        assert_eq!(radical(9), 3);
    }
}
