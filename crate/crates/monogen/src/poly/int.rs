//! Dense polynomials with exact integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A dense univariate polynomial over Z, coefficients ascending by degree.
///
/// Canonical form: no stored leading zero; the zero polynomial is the empty
/// coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|c| BigInt::from(*c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn x() -> Self {
        IntPoly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn monomial(c: BigInt, n: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = c;
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree of a polynomial known to be nonzero.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// self * x^n.
    pub fn shift_up(&self, n: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Exact composition self(g).
    pub fn compose(&self, g: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * g + IntPoly::constant(c.clone());
        }
        acc
    }

    /// Taylor shift: self(x + t).
    pub fn shift_var(&self, t: &BigInt) -> IntPoly {
        self.compose(&IntPoly::new(vec![t.clone(), BigInt::one()]))
    }

    /// self^e by repeated squaring (exact).
    pub fn pow(&self, e: u32) -> IntPoly {
        let mut result = IntPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Exact division of every coefficient.
    pub fn div_exact_scalar(&self, d: &BigInt) -> IntPoly {
        assert!(!d.is_zero());
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(d);
                    assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        )
    }

    /// Division with remainder by a monic divisor: exact over Z.
    pub fn divrem_monic(&self, d: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(d.is_monic(), "divisor must be monic");
        let dd = d.deg();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (IntPoly::zero(), self.clone());
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = r[i].clone();
            if c.is_zero() {
                continue;
            }
            let shift = i - dd;
            q[shift] = c.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = dc * &c;
                r[shift + j] -= t;
            }
        }
        (IntPoly::new(q), IntPoly::new(r))
    }

    /// True when `d` divides `self` exactly over Z (d monic).
    pub fn divides_monic(&self, d: &IntPoly) -> bool {
        self.divrem_monic(d).1.is_zero()
    }

    /// Pseudo-remainder: returns r with lc(d)^(deg self - deg d + 1) * self =
    /// q*d + r.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.deg();
        let lc = d.leading_coeff();
        let mut r = self.clone();
        if r.degree().map_or(true, |dr| dr < dd) {
            // Convention: scale anyway so the PRS bookkeeping stays uniform.
            let e = self.degree().map_or(0, |dr| dr.saturating_sub(dd)) + 1;
            return r.scale(&lc.pow(u32::try_from(e).expect("degree fits u32")));
        }
        let mut steps = r.deg() - dd + 1;
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let c = r.leading_coeff();
            r = r.scale(&lc) - d.scale(&c).shift_up(dr - dd);
            steps -= 1;
        }
        if steps > 0 {
            r = r.scale(&lc.pow(u32::try_from(steps).expect("degree fits u32")));
        }
        r
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::new(out)
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::new(out)
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl Mul<IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        self * &rhs
    }
}

impl Add<IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        self + &rhs
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
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

/// v_p of the content: the Gauss valuation of the polynomial.
pub fn gauss_valuation(f: &IntPoly, p: &BigUint) -> Option<u64> {
    if f.is_zero() {
        return None;
    }
    let mut min: Option<u64> = None;
    for c in f.coeffs() {
        if c.is_zero() {
            continue;
        }
        let v = crate::arith::vp_u64(c, p);
        min = Some(min.map_or(v, |m| m.min(v)));
        if min == Some(0) {
            break;
        }
    }
    min
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let p = IntPoly::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(IntPoly::from_i64(&[0, 0]).is_zero());
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn compose_examples() {
        let f = IntPoly::from_i64(&[1, -2, 0, 2, 0, 1]);
        assert_eq!(f.compose(&IntPoly::x()), f);
        let sq = IntPoly::from_i64(&[0, 0, 1]);
        let xp1 = IntPoly::from_i64(&[1, 1]);
        assert_eq!(sq.compose(&xp1), IntPoly::from_i64(&[1, 2, 1]));
    }

    #[test]
    fn compose_evaluation_consistency() {
        // (x^2+1)^2 - 2x composed with x^3 + 37x + 37: degree 12, values agree.
        let f = (IntPoly::from_i64(&[1, 0, 1]).pow(2)) - IntPoly::from_i64(&[0, 2]);
        let g = IntPoly::from_i64(&[37, 37, 0, 1]);
        let t = f.compose(&g);
        assert_eq!(t.degree(), Some(12));
        for x in [-2i64, -1, 0, 1, 2] {
            let x = BigInt::from(x);
            assert_eq!(t.eval(&x), f.eval(&g.eval(&x)));
        }
    }

    #[test]
    fn divrem_monic_roundtrip() {
        let f = IntPoly::from_i64(&[2, -3, 0, 5, 1]);
        let d = IntPoly::from_i64(&[1, 2, 1]);
        let (q, r) = f.divrem_monic(&d);
        assert_eq!(&(&q * &d) + &r, f);
        assert!(r.degree().unwrap_or(0) < d.deg());
    }

    #[test]
    fn shift_var_binomial() {
        let f = IntPoly::from_i64(&[0, 0, 1]);
        let g = f.shift_var(&BigInt::from(-1));
        assert_eq!(g, IntPoly::from_i64(&[1, -2, 1]));
    }

    #[test]
    fn display_readable() {
        let f = IntPoly::from_i64(&[1, -2, 2, 0, 1]);
        assert_eq!(f.to_string(), "x^4 + 2*x^2 - 2*x + 1");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::from_i64(&[-3]).to_string(), "-3");
    }

    #[test]
    fn gauss_valuation_examples() {
        let f = IntPoly::from_i64(&[50, 20, 8]);
        assert_eq!(gauss_valuation(&f, &BigUint::from(2u32)), Some(1));
        assert_eq!(gauss_valuation(&f, &BigUint::from(5u32)), Some(0));
        assert_eq!(gauss_valuation(&IntPoly::zero(), &BigUint::from(2u32)), None);
    }
}
