//! The parameter object for `f(x) = (x^k + c)^m - a*x^n`, the derived
//! integers C and E, and the discriminant (closed form and resultant
//! oracle).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::poly::{discriminant_monic, IntPoly};
use crate::Result;

/// Parameters `(k, m, n, a, c)` with `km > n >= 1`, `a != 0`, `c != 0`,
/// and the derived quantities `t = gcd(n, k)`, `n1 = n/t`, `k1 = k/t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub k: u32,
    pub m: u32,
    pub n: u32,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub a: BigInt,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub c: BigInt,
}

impl FamilyParams {
    pub fn new(k: u32, m: u32, n: u32, a: BigInt, c: BigInt) -> Result<Self> {
        if k == 0 || m == 0 || n == 0 {
            return Err(Error::InvalidParams("k, m, n must be positive".into()));
        }
        let km = (k as u64).checked_mul(m as u64).filter(|km| *km <= u32::MAX as u64);
        let Some(km) = km else {
            return Err(Error::InvalidParams("k*m overflows".into()));
        };
        if km <= n as u64 {
            return Err(Error::InvalidParams(format!("need k*m > n, got {km} <= {n}")));
        }
        if a.is_zero() || c.is_zero() {
            return Err(Error::InvalidParams("a and c must be nonzero".into()));
        }
        Ok(FamilyParams { k, m, n, a, c })
    }

    pub fn from_i64(k: u32, m: u32, n: u32, a: i64, c: i64) -> Result<Self> {
        FamilyParams::new(k, m, n, BigInt::from(a), BigInt::from(c))
    }

    /// Degree of the family polynomial.
    pub fn degree(&self) -> u32 {
        self.k * self.m
    }

    /// `t = gcd(n, k)`.
    pub fn t(&self) -> u32 {
        self.n.gcd(&self.k)
    }

    pub fn n1(&self) -> u32 {
        self.n / self.t()
    }

    pub fn k1(&self) -> u32 {
        self.k / self.t()
    }

    /// The expanded polynomial `(x^k + c)^m - a*x^n`: degree `km`, constant
    /// term `c^m`.
    pub fn build_poly(&self) -> IntPoly {
        let km = self.degree() as usize;
        let mut coeffs = vec![BigInt::zero(); km + 1];
        // Binomial expansion of (x^k + c)^m.
        let mut binom = BigInt::one();
        for i in 0..=self.m {
            // binom = C(m, i); coefficient of x^(k*i) is binom * c^(m-i).
            let cpow = self.c.pow(self.m - i);
            coeffs[(self.k as usize) * (i as usize)] += &binom * cpow;
            if i < self.m {
                binom = binom * BigInt::from(self.m - i) / BigInt::from(i + 1);
            }
        }
        coeffs[self.n as usize] -= &self.a;
        let f = IntPoly::new(coeffs);
        debug_assert_eq!(f.degree(), Some(km));
        debug_assert_eq!(f.coeff(0), self.c.pow(self.m));
        f
    }

    /// The pair `(C, E)` controlling the tame part of the discriminant.
    pub fn compute_cee(&self) -> CeePair {
        let k1m = self.k1() * self.m;
        let n1 = self.n1();
        assert!(k1m > n1);
        let km = BigInt::from(self.degree());
        let cee = km.pow(k1m) * self.c.pow(k1m - n1);
        let ee = self.a.pow(self.k1())
            * BigInt::from(self.n).pow(n1)
            * BigInt::from(self.degree() - self.n).pow(k1m - n1);
        CeePair { cee, ee }
    }

    /// Closed-form discriminant
    /// `(-1)^(C(km,2) + (km+n+t)(m-1)) a^(k(m-1)) c^(m(n-1)) (C-E)^t`.
    ///
    /// Valid as the discriminant only when the polynomial is irreducible;
    /// the formula itself is evaluated unconditionally.
    pub fn discriminant_closed(&self) -> BigInt {
        let km = self.degree() as u64;
        let t = self.t() as u64;
        let sign_exp = km * (km - 1) / 2 + (km + self.n as u64 + t) * (self.m as u64 - 1);
        let sign = if sign_exp % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        let diff = self.compute_cee().c_minus_e();
        sign * self.a.pow(self.k * (self.m - 1))
            * self.c.pow(self.m * (self.n - 1))
            * diff.pow(self.t())
    }

    /// Total exponent of `p` in the closed-form discriminant,
    /// `k(m-1) v_p(a) + m(n-1) v_p(c) + t v_p(C-E)`, computed without
    /// expanding the product.
    pub fn disc_valuation(&self, p: &BigUint) -> u64 {
        let va = crate::arith::vp_u64(&self.a, p);
        let vc = crate::arith::vp_u64(&self.c, p);
        let diff = self.compute_cee().c_minus_e();
        if diff.is_zero() {
            // Degenerate member with zero discriminant.
            return u64::MAX;
        }
        let vd = crate::arith::vp_u64(&diff, p);
        (self.k as u64) * (self.m as u64 - 1) * va
            + (self.m as u64) * (self.n as u64 - 1) * vc
            + (self.t() as u64) * vd
    }
}

impl std::fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(x^{} + ({}))^{} - ({})*x^{}",
            self.k, self.c, self.m, self.a, self.n
        )
    }
}

/// `C = (km)^(k1 m) c^(k1 m - n1)` and `E = a^k1 n^n1 (km-n)^(k1 m - n1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CeePair {
    pub cee: BigInt,
    pub ee: BigInt,
}

impl CeePair {
    pub fn c_minus_e(&self) -> BigInt {
        &self.cee - &self.ee
    }
}

/// Exact discriminant of a monic nonconstant polynomial by the resultant
/// route; the independent oracle against the closed form.
pub fn discriminant_oracle(f: &IntPoly) -> Result<BigInt> {
    discriminant_monic(f)
}
