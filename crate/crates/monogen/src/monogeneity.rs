//! Per-prime monogeneity classification for `(x^k + c)^m - a*x^n`.
//!
//! A prime p dividing the discriminant falls into exactly one of seven
//! divisibility patterns against (c, a, k, m); each case carries an
//! explicit arithmetic test deciding whether p divides the index
//! `[Z_K : Z[theta]]`. The Dedekind criterion ([`crate::dedekind`]) is the
//! independent oracle these tests are validated against.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{factor_integer, is_prime_biguint, mod_big, vp_u64, Budget, FactoredInteger};
use crate::error::Error;
use crate::family::FamilyParams;
use crate::poly::{irreducible_over_q, IntPoly, Irreducibility, ModPoly};
use crate::Result;

/// The seven divisibility patterns. Case (iv) splits on m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseLabel {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    Ii,
    #[serde(rename = "iii")]
    Iii,
    #[serde(rename = "iv-a")]
    IvA,
    #[serde(rename = "iv-b")]
    IvB,
    #[serde(rename = "v")]
    V,
    #[serde(rename = "vi")]
    Vi,
    #[serde(rename = "vii")]
    Vii,
}

impl std::fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CaseLabel::I => "i",
            CaseLabel::Ii => "ii",
            CaseLabel::Iii => "iii",
            CaseLabel::IvA => "iv-a",
            CaseLabel::IvB => "iv-b",
            CaseLabel::V => "v",
            CaseLabel::Vi => "vi",
            CaseLabel::Vii => "vii",
        };
        write!(f, "{s}")
    }
}

/// Verdict at one prime: the matched case, whether the prime passes (does
/// not divide the index), and the named witness values that entered the
/// test. Residue-valued witnesses are canonical representatives mod p or
/// mod p^2 as noted by their key suffix.
#[derive(Debug, Clone, Serialize)]
pub struct PrimeVerdict {
    #[serde(serialize_with = "crate::report::ser_biguint")]
    pub p: BigUint,
    pub case_label: CaseLabel,
    pub passes: bool,
    pub witnesses: BTreeMap<String, String>,
}

/// Whole-polynomial verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonogeneityStatus {
    Monogenic,
    NotMonogenic { p: BigUint },
    /// The discriminant kept a composite cofactor; all known primes pass.
    Unknown { cofactor: BigUint },
}

#[derive(Debug, Clone)]
pub struct MonogeneityResult {
    pub status: MonogeneityStatus,
    pub per_prime: Vec<PrimeVerdict>,
    pub disc: FactoredInteger,
}

impl MonogeneityResult {
    pub fn is_monogenic(&self) -> bool {
        self.status == MonogeneityStatus::Monogenic
    }
}

/// The factored discriminant, assembled from its closed-form parts
/// `a^(k(m-1)) * c^(m(n-1)) * (C-E)^t` so only `C - E` ever needs serious
/// factoring work.
pub fn factor_family_disc(params: &FamilyParams, budget: &Budget) -> FactoredInteger {
    let fa = factor_integer(&params.a, budget).pow((params.k * (params.m - 1)) as u64);
    let fc = factor_integer(&params.c, budget).pow((params.m * (params.n - 1)) as u64);
    let fd = factor_integer(&params.compute_cee().c_minus_e(), budget).pow(params.t() as u64);
    let mut disc = fa.mul(&fc).mul(&fd);
    let closed = params.discriminant_closed();
    debug_assert_eq!(disc.value().abs(), closed.abs());
    disc.sign = match closed.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    };
    disc
}

/// Dispatch a prime divisor of the discriminant to its case and run the
/// case's test. Rejects p not dividing the discriminant.
pub fn classify_prime(params: &FamilyParams, p: &BigUint) -> Result<PrimeVerdict> {
    if !is_prime_biguint(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if params.disc_valuation(p) == 0 {
        return Err(Error::Precondition(format!(
            "{p} does not divide the discriminant of {params}"
        )));
    }
    let p_int = BigInt::from(p.clone());
    let div_c = (&params.c % &p_int).is_zero();
    let div_a = (&params.a % &p_int).is_zero();
    let div_k = (BigInt::from(params.k) % &p_int).is_zero();
    let div_m = (BigInt::from(params.m) % &p_int).is_zero();

    let mut w = BTreeMap::new();
    let (label, passes) = if div_c && div_a {
        // Case i: need m = 1 and p^2 not dividing c.
        let vc = vp_u64(&params.c, p);
        w.insert("v_p(c)".into(), vc.to_string());
        (CaseLabel::I, params.m == 1 && vc == 1)
    } else if div_c && params.n == 1 {
        case_ii(params, p, &mut w)
    } else if div_c {
        case_iii(params, p, &mut w)
    } else if div_a {
        if params.m >= 2 {
            let va = vp_u64(&params.a, p);
            w.insert("v_p(a)".into(), va.to_string());
            (CaseLabel::IvA, va == 1)
        } else {
            case_iv_b(params, p, &mut w)
        }
    } else if div_k {
        case_v(params, p, &mut w)
    } else if div_m {
        case_vi(params, p, &mut w)
    } else {
        // Case vii: p coprime to cakm; test p^2 | C - E.
        let diff = params.compute_cee().c_minus_e();
        let v = vp_u64(&diff, p);
        w.insert("v_p(C-E)".into(), v.to_string());
        (CaseLabel::Vii, v == 1)
    };
    Ok(PrimeVerdict {
        p: p.clone(),
        case_label: label,
        passes,
        witnesses: w,
    })
}

/// `x^(p^j) mod p^2` for signed x.
fn pow_pj_mod_p2(x: &BigInt, p: &BigUint, j: u64) -> BigUint {
    let p2 = p * p;
    let e = p.pow(u32::try_from(j).expect("exponent fits u32"));
    mod_big(x, &p2).modpow(&e, &p2)
}

/// Residue of `(x^(p^j) - x)/p` mod p, the Fermat-quotient-style witness.
fn fermat_quotient(x: &BigInt, p: &BigUint, j: u64) -> BigUint {
    let p2 = p * p;
    let num = {
        let a = pow_pj_mod_p2(x, p, j);
        let b = mod_big(x, &p2);
        if a >= b {
            a - b
        } else {
            a + &p2 - b
        }
    };
    let (q, r) = num.div_rem(p);
    assert!(r.is_zero(), "x^(p^j) = x mod p by Fermat");
    q
}

fn case_ii(
    params: &FamilyParams,
    p: &BigUint,
    w: &mut BTreeMap<String, String>,
) -> (CaseLabel, bool) {
    // p | c, p not dividing a, n = 1. Here p | km - 1 necessarily.
    let km_less_1 = BigInt::from(params.degree() - 1);
    let j = vp_u64(&km_less_1, p);
    assert!(j >= 1, "case ii forces p | km - 1");
    let c2 = (&params.c / BigInt::from(p.clone())).clone();
    let a1 = fermat_quotient(&params.a, p, j);
    w.insert("j".into(), j.to_string());
    w.insert("c2".into(), c2.to_string());
    w.insert("a1 mod p".into(), (&a1 % p).to_string());

    let c2_zero = (&c2 % BigInt::from(p.clone())).is_zero();
    let a1_zero = (&a1 % p).is_zero();
    if c2_zero && !a1_zero {
        return (CaseLabel::Ii, true);
    }
    // p must not divide c2 * [a^k a1^(km-1) - (-m a c2)^(km-1)].
    let km1 = params.degree() - 1;
    let term1 = mod_big(&params.a, p).modpow(&BigUint::from(params.k), p)
        * (&a1 % p).modpow(&BigUint::from(km1), p);
    let inner = mod_big(
        &(-BigInt::from(params.m) * &params.a * &c2),
        p,
    );
    let term2 = inner.modpow(&BigUint::from(km1), p);
    let bracket = mod_big(&(BigInt::from(term1) - BigInt::from(term2)), p);
    let product = mod_big(&(BigInt::from(bracket) * &c2), p);
    (CaseLabel::Ii, !product.is_zero())
}

fn case_iii(
    params: &FamilyParams,
    p: &BigUint,
    w: &mut BTreeMap<String, String>,
) -> (CaseLabel, bool) {
    // p | c, p not dividing a, n >= 2: requires m = 1 first.
    if params.m != 1 {
        w.insert("m".into(), params.m.to_string());
        return (CaseLabel::Iii, false);
    }
    // m = 1 forces k > n.
    let k_minus_n = BigInt::from(params.k) - BigInt::from(params.n);
    let ell = vp_u64(&k_minus_n, p);
    let c2 = &params.c / BigInt::from(p.clone());
    let a1 = fermat_quotient(&params.a, p, ell);
    w.insert("l".into(), ell.to_string());
    w.insert("c2".into(), c2.to_string());
    w.insert("a1 mod p".into(), (&a1 % p).to_string());

    let a1_zero = (&a1 % p).is_zero();
    let c2_zero = (&c2 % BigInt::from(p.clone())).is_zero();
    if a1_zero && !c2_zero {
        return (CaseLabel::Iii, true);
    }
    // p must not divide a1 c2^(n-1) [a^n1 a1^(k1-n1) - (-c2)^(k1-n1)].
    let n1 = params.n1();
    let k1 = params.k1();
    assert!(k1 > n1);
    let term1 = mod_big(&params.a, p).modpow(&BigUint::from(n1), p)
        * (&a1 % p).modpow(&BigUint::from(k1 - n1), p);
    let term2 = mod_big(&-&c2, p).modpow(&BigUint::from(k1 - n1), p);
    let bracket = mod_big(&(BigInt::from(term1) - BigInt::from(term2)), p);
    let c2_pow = mod_big(&c2, p).modpow(&BigUint::from(params.n - 1), p);
    let product = (&a1 % p) * c2_pow * bracket % p;
    (CaseLabel::Iii, !product.is_zero())
}

fn case_iv_b(
    params: &FamilyParams,
    p: &BigUint,
    w: &mut BTreeMap<String, String>,
) -> (CaseLabel, bool) {
    // p not dividing c, p | a, m = 1. Here p | k necessarily.
    let ell = vp_u64(&BigInt::from(params.k), p);
    assert!(ell >= 1, "case iv-b forces p | k");
    let a2 = -(&params.a / BigInt::from(p.clone()));
    // c1 = ((-c)^(p^l) + c)/p, mod p.
    let p2 = p * p;
    let neg_c_pow = pow_pj_mod_p2(&-&params.c, p, ell);
    let num = (neg_c_pow + mod_big(&params.c, &p2)) % &p2;
    let (c1, r) = num.div_rem(p);
    assert!(r.is_zero(), "(-c)^(p^l) = -c mod p");
    w.insert("l".into(), ell.to_string());
    w.insert("a2".into(), a2.to_string());
    w.insert("c1 mod p".into(), (&c1 % p).to_string());

    let a2_zero = (&a2 % BigInt::from(p.clone())).is_zero();
    let c1_zero = (&c1 % p).is_zero();
    if a2_zero && !c1_zero {
        return (CaseLabel::IvB, true);
    }
    // p must not divide a2 [a2^k1 (-c)^n1 - (-c1)^k1].
    let k1 = params.k1();
    let n1 = params.n1();
    let term1 = mod_big(&a2, p).modpow(&BigUint::from(k1), p)
        * mod_big(&-&params.c, p).modpow(&BigUint::from(n1), p);
    let term2 = mod_big(&-BigInt::from(&c1 % p), p).modpow(&BigUint::from(k1), p);
    let bracket = mod_big(&(BigInt::from(term1) - BigInt::from(term2)), p);
    let product = mod_big(&(BigInt::from(bracket) * &a2), p);
    (CaseLabel::IvB, !product.is_zero())
}

fn case_v(
    params: &FamilyParams,
    p: &BigUint,
    w: &mut BTreeMap<String, String>,
) -> (CaseLabel, bool) {
    // p coprime to ca, p | k; p | n follows from p | disc.
    let vn = vp_u64(&BigInt::from(params.n), p);
    assert!(vn >= 1, "case v forces p | n");
    let vk = vp_u64(&BigInt::from(params.k), p);
    let j = vk.min(vn);
    let p_u32: u32 = {
        use num_traits::ToPrimitive;
        p.to_u64()
            .and_then(|v| u32::try_from(v).ok())
            .expect("case v prime divides k, so it is small")
    };
    let pj = p_u32.pow(u32::try_from(j).expect("exponent fits u32"));
    let s_prime = params.k / pj;
    let s = params.n / pj;
    assert!(s_prime.gcd(&s) % p_u32 != 0);

    let a1 = fermat_quotient(&params.a, p, j);
    let t_poly = t_correction_poly(&params.c, pj, s_prime, p);
    w.insert("j".into(), j.to_string());
    w.insert("s".into(), s.to_string());
    w.insert("s'".into(), s_prime.to_string());
    w.insert("a1 mod p".into(), (&a1 % p).to_string());
    w.insert("t(x) mod p".into(), t_poly.to_string());

    // A(x) = a1 x^n - m t(x) (x^k + c)^(m-1) over F_p.
    let xk_c = ModPoly::from_int_unchecked(
        &(IntPoly::monomial(BigInt::one(), params.k as usize)
            + IntPoly::constant(params.c.clone())),
        p,
    );
    let mut pow = ModPoly::from_int_unchecked(&IntPoly::one(), p);
    for _ in 0..params.m - 1 {
        pow = pow.mul(&xk_c);
    }
    let a1_xn = ModPoly::from_int_unchecked(
        &IntPoly::monomial(BigInt::from(&a1 % p), params.n as usize),
        p,
    );
    let m_mod = ModPoly::from_int_unchecked(&IntPoly::constant(BigInt::from(params.m)), p);
    let a_poly = a1_xn.sub(&m_mod.mul(&t_poly).mul(&pow));

    // h(x) = (x^s' + c)^m - a x^s over F_p.
    let h = {
        let base = IntPoly::monomial(BigInt::one(), s_prime as usize)
            + IntPoly::constant(params.c.clone());
        let hp = base.pow(params.m) - IntPoly::monomial(params.a.clone(), s as usize);
        ModPoly::from_int_unchecked(&hp, p)
    };
    let g = if a_poly.is_zero() {
        h.clone()
    } else {
        a_poly.gcd(&h)
    };
    w.insert("gcd".into(), g.to_string());
    (CaseLabel::V, g.degree() == Some(0))
}

/// `t(x) = (sum_{i=0}^{p^j - 1} C(p^j, i) x^(s' i) c^(p^j - i) - c) / p`
/// reduced mod p; the correction in `(x^(s') + c)^(p^j) = x^k + c + p t(x)`.
fn t_correction_poly(c: &BigInt, pj: u32, s_prime: u32, p: &BigUint) -> ModPoly {
    let mut coeffs = vec![BigInt::zero(); ((pj - 1) * s_prime + 1) as usize];
    let mut binom = BigInt::one(); // C(pj, 0)
    for i in 0..pj {
        coeffs[(i * s_prime) as usize] += &binom * c.pow(pj - i);
        binom = binom * BigInt::from(pj - i) / BigInt::from(i + 1);
    }
    coeffs[0] -= c;
    let t_int = IntPoly::new(coeffs);
    let p_int = BigInt::from(p.clone());
    let t = IntPoly::new(
        t_int
            .coeffs()
            .iter()
            .map(|x| {
                let (q, r) = x.div_rem(&p_int);
                assert!(r.is_zero(), "binomial correction divisible by p");
                q
            })
            .collect(),
    );
    ModPoly::from_int_unchecked(&t, p)
}

fn case_vi(
    params: &FamilyParams,
    p: &BigUint,
    w: &mut BTreeMap<String, String>,
) -> (CaseLabel, bool) {
    // p coprime to cak, p | m: need p | n and p^2 not dividing a^p - a.
    let div_n = (BigInt::from(params.n) % BigInt::from(p.clone())).is_zero();
    let a1 = fermat_quotient(&params.a, p, 1);
    w.insert("p | n".into(), div_n.to_string());
    w.insert("a1 mod p".into(), (&a1 % p).to_string());
    (CaseLabel::Vi, div_n && !(&a1 % p).is_zero())
}

/// Decide monogeneity: verify irreducibility, factor the discriminant
/// within budget, classify every known prime (ascending), short-circuit on
/// the first failure.
pub fn is_monogenic(params: &FamilyParams, budget: &Budget) -> Result<MonogeneityResult> {
    let f = params.build_poly();
    match irreducible_over_q(&f, budget)? {
        Irreducibility::Irreducible => {}
        Irreducibility::Reducible(w) => return Err(Error::Reducible(w.to_string())),
        Irreducibility::Unknown => return Err(Error::IrreducibilityUnknown),
    }
    let disc = factor_family_disc(params, budget);
    let mut per_prime = Vec::new();
    for p in disc.factors.keys() {
        let verdict = classify_prime(params, p)?;
        let failed = !verdict.passes;
        per_prime.push(verdict);
        if failed {
            return Ok(MonogeneityResult {
                status: MonogeneityStatus::NotMonogenic { p: p.clone() },
                per_prime,
                disc,
            });
        }
    }
    let status = if disc.is_complete() {
        MonogeneityStatus::Monogenic
    } else {
        MonogeneityStatus::Unknown {
            cofactor: disc.cofactor.clone(),
        }
    };
    Ok(MonogeneityResult {
        status,
        per_prime,
        disc,
    })
}

/// The reduced test for the binomial subfamily `(x^(q^j) +/- 1)^m - a x^n`
/// with `q` exactly dividing `a` and `m >= 2`: irreducibility comes from a
/// q-Eisenstein shift (verified, not assumed), and only the three reachable
/// cases (iv-a), (vi), (vii) can occur, which is asserted.
pub fn binomial_family_check(
    q: &BigUint,
    j: u32,
    m: u32,
    n: u32,
    a: &BigInt,
    sign: i8,
    budget: &Budget,
) -> Result<MonogeneityResult> {
    if !is_prime_biguint(q) {
        return Err(Error::NotPrime(q.to_string()));
    }
    if j < 1 || m < 2 {
        return Err(Error::Precondition("need j >= 1 and m >= 2".into()));
    }
    if sign != 1 && sign != -1 {
        return Err(Error::Precondition("sign must be +1 or -1".into()));
    }
    let vq = vp_u64(a, q);
    if vq != 1 {
        return Err(Error::Precondition(format!(
            "q = {q} must exactly divide a = {a} (v_q(a) = {vq})"
        )));
    }
    use num_traits::ToPrimitive;
    let q_small = q
        .to_u64()
        .and_then(|v| u32::try_from(v).ok())
        .ok_or_else(|| Error::Precondition("q too large for a polynomial degree".into()))?;
    let k = q_small
        .checked_pow(j)
        .ok_or_else(|| Error::Precondition("q^j overflows".into()))?;
    let params = FamilyParams::new(k, m, n, a.clone(), BigInt::from(sign))?;

    // Irreducibility via the Eisenstein shift x -> x + t with t = 1 mod q
    // (c = -1) or t = -1 mod q (c = +1).
    let f = params.build_poly();
    let shifted_ok = eisenstein_at_small_shift(&f, q, sign, budget);
    assert!(
        shifted_ok,
        "the binomial subfamily must admit a q-Eisenstein shift"
    );

    let disc = factor_family_disc(params_ref(&params), budget);
    let mut per_prime = Vec::new();
    for p in disc.factors.keys() {
        let verdict = classify_prime(&params, p)?;
        assert!(
            matches!(
                verdict.case_label,
                CaseLabel::IvA | CaseLabel::Vi | CaseLabel::Vii
            ),
            "only cases iv-a, vi, vii are reachable for this subfamily (got {} at p={})",
            verdict.case_label,
            p
        );
        let failed = !verdict.passes;
        per_prime.push(verdict);
        if failed {
            return Ok(MonogeneityResult {
                status: MonogeneityStatus::NotMonogenic { p: p.clone() },
                per_prime,
                disc,
            });
        }
    }
    let status = if disc.is_complete() {
        MonogeneityStatus::Monogenic
    } else {
        MonogeneityStatus::Unknown {
            cofactor: disc.cofactor.clone(),
        }
    };
    Ok(MonogeneityResult {
        status,
        per_prime,
        disc,
    })
}

fn params_ref(p: &FamilyParams) -> &FamilyParams {
    p
}

fn eisenstein_at_small_shift(f: &IntPoly, q: &BigUint, sign: i8, budget: &Budget) -> bool {
    let q_int = BigInt::from(q.clone());
    let targets: Vec<BigInt> = if sign == -1 {
        vec![BigInt::one(), BigInt::one() + &q_int, BigInt::one() - &q_int]
    } else {
        vec![-BigInt::one(), &q_int - 1, -&q_int - 1]
    };
    for t in targets {
        if let Some(p) = crate::poly::eisenstein_prime(&f.shift_var(&t), budget) {
            if p == *q {
                return true;
            }
        }
    }
    false
}

// ---------------------------------------------------------------------------
// Repeated-root witnesses
// ---------------------------------------------------------------------------

/// The data tying `p | C - E` to repeated roots of f mod p: residues
/// `alpha1 = nc/(km-n)`, `alpha2 = a^-1 (kmc/(km-n))^m` mod p^2, Bezout pair
/// `k u1 + n u2 = t`, combined residue `alpha = alpha1^u1 alpha2^u2`, and,
/// when one exists in F_p, a root `beta` of `x^t - alpha`.
#[derive(Debug, Clone)]
pub struct RepeatedRootWitness {
    pub p: BigUint,
    pub alpha1: BigUint,
    pub alpha2: BigUint,
    pub u1: BigInt,
    pub u2: BigInt,
    pub alpha: BigUint,
    /// v_p(C - E); 0 means no repeated root of f exists mod p.
    pub vp_c_minus_e: u64,
    pub beta: Option<BigUint>,
}

/// Compute the witness data at a prime coprime to `a c k m (km - n)`.
pub fn repeated_root_witness(params: &FamilyParams, p: &BigUint) -> Result<RepeatedRootWitness> {
    if !is_prime_biguint(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let p_int = BigInt::from(p.clone());
    let guard = &params.a
        * &params.c
        * BigInt::from(params.k)
        * BigInt::from(params.m)
        * BigInt::from(params.degree() - params.n);
    if (&guard % &p_int).is_zero() {
        return Err(Error::Precondition(format!(
            "{p} must not divide a*c*k*m*(km-n)"
        )));
    }
    let p2 = p * p;
    let inv = |x: &BigInt| -> BigUint { crate::arith::inv_mod(&mod_big(x, &p2), &p2) };
    let km_n = BigInt::from(params.degree() - params.n);
    let alpha1 =
        mod_big(&(BigInt::from(params.n) * &params.c), &p2) * inv(&km_n) % &p2;
    let base = mod_big(&(BigInt::from(params.degree()) * &params.c), &p2) * inv(&km_n) % &p2;
    let alpha2 = base.modpow(&BigUint::from(params.m), &p2) * inv(&params.a) % &p2;

    let ext = BigInt::from(params.k).extended_gcd(&BigInt::from(params.n));
    assert_eq!(ext.gcd, BigInt::from(params.t()));
    let (u1, u2) = (ext.x, ext.y);
    let pow_signed = |base: &BigUint, e: &BigInt| -> BigUint {
        let mag = e.magnitude().clone();
        if e.is_negative() {
            crate::arith::inv_mod(base, &p2).modpow(&mag, &p2)
        } else {
            base.modpow(&mag, &p2)
        }
    };
    let alpha = pow_signed(&alpha1, &u1) * pow_signed(&alpha2, &u2) % &p2;

    let diff = params.compute_cee().c_minus_e();
    let vd = if diff.is_zero() {
        u64::MAX
    } else {
        vp_u64(&diff, p)
    };
    let beta = if vd >= 1 {
        // Roots of x^t - alpha over F_p (smallest, if any lands in F_p).
        let mut coeffs = vec![BigInt::zero(); params.t() as usize + 1];
        coeffs[0] = -BigInt::from(&alpha % p);
        coeffs[params.t() as usize] = BigInt::one();
        let poly = ModPoly::from_int_unchecked(&IntPoly::new(coeffs), p);
        poly.roots().into_iter().next()
    } else {
        None
    };
    Ok(RepeatedRootWitness {
        p: p.clone(),
        alpha1,
        alpha2,
        u1,
        u2,
        alpha,
        vp_c_minus_e: vd,
        beta,
    })
}

impl RepeatedRootWitness {
    /// `alpha2^k1 = alpha1^n1 mod p^i` for i = 1, 2 -- the middle leg of
    /// the equivalence chain.
    pub fn power_congruence_holds(&self, params: &FamilyParams, modulus_power: u32) -> bool {
        let p2 = &self.p * &self.p;
        let m = if modulus_power == 1 {
            self.p.clone()
        } else {
            p2.clone()
        };
        let lhs = (&self.alpha2 % &m).modpow(&BigUint::from(params.k1()), &m);
        let rhs = (&self.alpha1 % &m).modpow(&BigUint::from(params.n1()), &m);
        lhs == rhs
    }

    /// `(alpha^k1 + c)^m - a alpha^n1 mod p^2`.
    pub fn family_value_at_alpha_mod_p2(&self, params: &FamilyParams) -> BigUint {
        let p2 = &self.p * &self.p;
        let t1 = (self.alpha.modpow(&BigUint::from(params.k1()), &p2)
            + mod_big(&params.c, &p2))
            % &p2;
        let t2 = t1.modpow(&BigUint::from(params.m), &p2);
        let t3 = mod_big(&params.a, &p2) * self.alpha.modpow(&BigUint::from(params.n1()), &p2) % &p2;
        (t2 + &p2 - t3) % &p2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dedekind::dedekind_divides_index;

    fn bu(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn params(k: u32, m: u32, n: u32, a: i64, c: i64) -> FamilyParams {
        FamilyParams::from_i64(k, m, n, a, c).unwrap()
    }

    #[test]
    fn classify_examples() {
        // (2,2,1,2,1) at p = 2: case iv-a, passes (2 || a).
        let p = params(2, 2, 1, 2, 1);
        let v = classify_prime(&p, &bu(2)).unwrap();
        assert_eq!(v.case_label, CaseLabel::IvA);
        assert!(v.passes);

        // Same at p = 37: case vii, passes (37^2 does not divide 148).
        let v = classify_prime(&p, &bu(37)).unwrap();
        assert_eq!(v.case_label, CaseLabel::Vii);
        assert!(v.passes);

        // (1,6,2,6,25) at p = 5: case iii, fails because m = 6 != 1.
        let p = params(1, 6, 2, 6, 25);
        let v = classify_prime(&p, &bu(5)).unwrap();
        assert_eq!(v.case_label, CaseLabel::Iii);
        assert!(!v.passes);

        // p not dividing the discriminant is rejected.
        let p = params(2, 2, 1, 2, 1);
        assert!(classify_prime(&p, &bu(5)).is_err());
    }

    #[test]
    fn is_monogenic_examples() {
        let b = Budget::default();
        assert!(is_monogenic(&params(2, 2, 1, 2, 1), &b).unwrap().is_monogenic());
        assert!(is_monogenic(&params(2, 3, 5, 11, 1), &b).unwrap().is_monogenic());
        let r = is_monogenic(&params(1, 6, 2, 6, 25), &b).unwrap();
        assert_eq!(
            r.status,
            MonogeneityStatus::NotMonogenic { p: bu(5) }
        );
    }

    #[test]
    fn classifier_matches_dedekind_on_examples() {
        for (k, m, n, a, c) in [
            (2u32, 2u32, 1u32, 2i64, 1i64),
            (2, 3, 5, 11, 1),
            (3, 1, 2, 4, 7),
            (2, 2, 3, -3, -5),
            (4, 1, 2, 6, 3),
        ] {
            let pr = params(k, m, n, a, c);
            let f = pr.build_poly();
            let disc = factor_family_disc(&pr, &Budget::default());
            for p in disc.factors.keys() {
                let cls = classify_prime(&pr, p).unwrap();
                let ded = dedekind_divides_index(&f, p).unwrap();
                assert_eq!(
                    cls.passes, !ded.divides_index,
                    "mismatch at p={p} for ({k},{m},{n},{a},{c}) case {}",
                    cls.case_label
                );
            }
        }
    }

    #[test]
    fn binomial_check_rows() {
        let b = Budget::default();
        // Table row a=2, m=2: (x^2+1)^2 - 2x, monogenic.
        let r = binomial_family_check(&bu(2), 1, 2, 1, &BigInt::from(2), 1, &b).unwrap();
        assert!(r.is_monogenic());
        assert_eq!(r.disc.value().abs(), BigInt::from(592).abs() / 4 * 4);

        // a=2, m=5: |N| = 2^2 * 7 * 17 * 61 * 71 * 4099.
        let r = binomial_family_check(&bu(2), 1, 5, 1, &BigInt::from(2), 1, &b).unwrap();
        assert!(r.is_monogenic());
        let n_val = params(2, 5, 1, 2, 1).compute_cee().c_minus_e();
        let fac = factor_integer(&n_val, &b);
        assert_eq!(fac.to_string(), "2^2 * 7 * 17 * 61 * 71 * 4099");

        // q^2 | a rejected.
        assert!(binomial_family_check(&bu(2), 1, 2, 1, &BigInt::from(4), 1, &b).is_err());
    }

    #[test]
    fn repeated_root_witness_example1() {
        // (2,2,1,2,1) at p = 37: alpha1 = 25, alpha2 = 5 mod 37; beta = 5 is
        // a repeated root (676 - 10 = 18*37, 518 = 14*37).
        let pr = params(2, 2, 1, 2, 1);
        let w = repeated_root_witness(&pr, &bu(37)).unwrap();
        assert_eq!(&w.alpha1 % bu(37), bu(25));
        assert_eq!(&w.alpha2 % bu(37), bu(5));
        assert_eq!(BigInt::from(pr.k) * &w.u1 + BigInt::from(pr.n) * &w.u2, BigInt::from(pr.t()));
        assert_eq!(w.vp_c_minus_e, 1);
        let beta = w.beta.clone().unwrap();
        assert_eq!(&beta % bu(37), bu(5));
        let f = pr.build_poly();
        assert!((f.eval(&BigInt::from(beta.clone())) % BigInt::from(37)).is_zero());
        assert!((f.derivative().eval(&BigInt::from(beta)) % BigInt::from(37)).is_zero());
    }

    #[test]
    fn witness_no_repeated_root_when_coprime() {
        // p = 7 does not divide C - E = 148 for (2,2,1,2,1).
        let pr = params(2, 2, 1, 2, 1);
        let w = repeated_root_witness(&pr, &bu(7)).unwrap();
        assert_eq!(w.vp_c_minus_e, 0);
        assert!(w.beta.is_none());
        assert!(!w.power_congruence_holds(&pr, 1));
        // And f indeed has no repeated root mod 7.
        let f = ModPoly::from_int(&pr.build_poly(), &bu(7)).unwrap();
        assert_eq!(f.gcd(&f.derivative()).degree(), Some(0));
    }

    #[test]
    fn precondition_rejected() {
        let pr = params(2, 2, 1, 2, 1);
        assert!(repeated_root_witness(&pr, &bu(2)).is_err()); // 2 | a
        assert!(repeated_root_witness(&pr, &bu(3)).is_err()); // 3 | km - n
    }
}
