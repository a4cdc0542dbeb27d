//! Exact resultants over Z via the subresultant polynomial remainder
//! sequence, plus polynomial discriminants built on them.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::int::IntPoly;
use crate::error::Error;
use crate::Result;

/// Resultant of two nonzero integer polynomials with the convention
/// `Res(f, g) = lc(f)^deg(g) * prod g(lambda_i)` over the roots of `f`.
///
/// Subresultant PRS (no modular reconstruction): coefficient growth stays
/// polynomial and the value is exact including sign.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial("resultant"));
    }
    Ok(resultant_inner(f.clone(), g.clone()))
}

fn resultant_inner(f: IntPoly, g: IntPoly) -> BigInt {
    let (mut a, mut b) = (f, g);
    let mut sign = BigInt::one();
    if a.deg() < b.deg() {
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.deg() == 0 {
        // Res(a, c) = c^deg(a); covers the constant-constant case (result 1).
        return sign * b.leading_coeff().pow(u32::try_from(a.deg()).expect("degree fits u32"));
    }

    // Contents split off so the PRS runs on primitive parts.
    let ca = a.content();
    let cb = b.content();
    let a0 = a.div_exact_scalar(&ca);
    let b0 = b.div_exact_scalar(&cb);
    let scale = ca.pow(u32::try_from(b.deg()).expect("degree fits u32"))
        * cb.pow(u32::try_from(a.deg()).expect("degree fits u32"));

    sign * scale * subresultant_prs(a0, b0)
}

/// Core subresultant walk; expects deg a >= deg b >= 1, both primitive.
fn subresultant_prs(mut a: IntPoly, mut b: IntPoly) -> BigInt {
    let mut s = BigInt::one();
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.deg();
        let db = b.deg();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            // A proper common factor forces resultant 0 unless b is now the
            // final constant (handled below before this point).
            return BigInt::zero();
        }
        let denom = &g * h.pow(u32::try_from(delta).expect("gap fits u32"));
        a = b;
        b = r.div_exact_scalar(&denom);
        g = a.leading_coeff();
        // h = h^(1-delta) * g^delta, always an exact integer.
        h = exact_power_quotient(&g, &h, delta);
        if b.deg() == 0 {
            // Final step: h^(1-deg a) * lc(b)^(deg a).
            let da = a.deg();
            let t = exact_power_quotient(&b.leading_coeff(), &h, da);
            return s * t;
        }
    }
}

/// `x^delta / y^(delta-1)`, exact by the subresultant theory (delta = 0
/// yields y itself).
fn exact_power_quotient(x: &BigInt, y: &BigInt, delta: usize) -> BigInt {
    if delta == 0 {
        return y.clone();
    }
    let num = x.pow(u32::try_from(delta).expect("gap fits u32"));
    if delta == 1 {
        return num;
    }
    let den = y.pow(u32::try_from(delta - 1).expect("gap fits u32"));
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "subresultant scaling must divide exactly");
    q
}

/// Discriminant of a monic nonconstant polynomial:
/// `(-1)^(n(n-1)/2) * Res(f, f')`.
pub fn discriminant_monic(f: &IntPoly) -> Result<BigInt> {
    if !f.is_monic() {
        return Err(Error::NotMonic(f.to_string()));
    }
    discriminant_any(f)
}

/// Discriminant of any nonconstant polynomial:
/// `(-1)^(n(n-1)/2) * Res(f, f') / lc(f)`.
pub fn discriminant_any(f: &IntPoly) -> Result<BigInt> {
    let n = match f.degree() {
        None | Some(0) => {
            return Err(Error::Precondition(
                "discriminant needs a nonconstant polynomial".into(),
            ))
        }
        Some(n) => n,
    };
    let df = f.derivative();
    if df.is_zero() {
        return Ok(BigInt::zero());
    }
    let r = resultant(f, &df)?;
    let lc = f.leading_coeff();
    let (q, rem) = num_integer::Integer::div_rem(&r, &lc);
    assert!(rem.is_zero(), "lc(f) divides Res(f, f')");
    let sign = if (n * (n - 1) / 2) % 2 == 1 {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    Ok(sign * q)
}

#[cfg(test)]
pub(crate) mod test_oracle {
    //! Independent resultant oracle: Sylvester determinant by fraction-free
    //! Bareiss elimination. Test-only; the production path is the PRS above.

    use super::*;

    pub fn sylvester_resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
        let n = f.deg();
        let m = g.deg();
        if n == 0 && m == 0 {
            return BigInt::one();
        }
        let size = n + m;
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        // m rows of f's coefficients (descending), then n rows of g's.
        for row in 0..m {
            for (k, c) in f.coeffs().iter().rev().enumerate() {
                mat[row][row + k] = c.clone();
            }
        }
        for row in 0..n {
            for (k, c) in g.coeffs().iter().rev().enumerate() {
                mat[m + row][row + k] = c.clone();
            }
        }
        bareiss_det(mat)
    }

    fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    let (q, r) = num_integer::Integer::div_rem(&num, &prev);
                    assert!(r.is_zero(), "Bareiss division is exact");
                    m[i][j] = q;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::test_oracle::sylvester_resultant;
    use super::*;
    use proptest::prelude::*;

    fn ip(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64(cs)
    }

    #[test]
    fn spec_examples() {
        // Res(x^2+1, x) = 1
        assert_eq!(resultant(&ip(&[1, 0, 1]), &ip(&[0, 1])).unwrap(), BigInt::from(1));
        // Res(x^2-5, 2x) = -20
        assert_eq!(
            resultant(&ip(&[-5, 0, 1]), &ip(&[0, 2])).unwrap(),
            BigInt::from(-20)
        );
        // Res(f, 1) = 1
        for f in [ip(&[1, 0, 1]), ip(&[2, 3, 0, 7]), ip(&[5])] {
            assert_eq!(resultant(&f, &ip(&[1])).unwrap(), BigInt::one());
        }
        assert!(resultant(&ip(&[]), &ip(&[1])).is_err());
    }

    #[test]
    fn matches_sylvester_on_fixed_cases() {
        let cases: Vec<(IntPoly, IntPoly)> = vec![
            (ip(&[-5, 0, 1]), ip(&[0, 2])),
            (ip(&[1, 2, 3, 4]), ip(&[5, -6, 7])),
            (ip(&[2, 0, 0, 1]), ip(&[-1, 1])),
            (ip(&[1, 1]), ip(&[1, 1])),        // common factor -> 0
            (ip(&[0, 1]), ip(&[0, 0, 0, 3])),  // shares root 0
            (ip(&[-2, 0, 4]), ip(&[6, -9, 3])),// non-primitive inputs
            (ip(&[7]), ip(&[1, 2, 3])),        // constant against cubic
            (ip(&[3]), ip(&[4])),              // two constants
            (ip(&[1, 0, -3, 0, 1]), ip(&[2, 0, 1, 5, 0, 1])),
        ];
        for (f, g) in cases {
            let prs = resultant(&f, &g).unwrap();
            let det = sylvester_resultant(&f, &g);
            assert_eq!(prs, det, "f={f} g={g}");
        }
    }

    #[test]
    fn discriminant_small() {
        assert_eq!(discriminant_monic(&ip(&[1, 0, 1])).unwrap(), BigInt::from(-4));
        assert_eq!(discriminant_monic(&ip(&[-5, 0, 1])).unwrap(), BigInt::from(20));
        assert_eq!(discriminant_monic(&ip(&[-2, 0, 0, 1])).unwrap(), BigInt::from(-108));
        assert!(discriminant_monic(&ip(&[1, 2])).is_err()); // not monic
        // Degree 1 has empty product: disc = 1.
        assert_eq!(discriminant_monic(&ip(&[4, 1])).unwrap(), BigInt::one());
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-9i64..=9, 1..=max_deg + 1)
            .prop_map(|cs| IntPoly::from_i64(&cs))
            .prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn prs_equals_sylvester(f in arb_poly(6), g in arb_poly(6)) {
            let prs = resultant(&f, &g).unwrap();
            let det = sylvester_resultant(&f, &g);
            prop_assert_eq!(prs, det);
        }

        #[test]
        fn swap_symmetry(f in arb_poly(6), g in arb_poly(6)) {
            let a = resultant(&f, &g).unwrap();
            let b = resultant(&g, &f).unwrap();
            let sign = if f.deg() % 2 == 1 && g.deg() % 2 == 1 { -1 } else { 1 };
            prop_assert_eq!(a, BigInt::from(sign) * b);
        }

        #[test]
        fn multiplicativity(f in arb_poly(4), g in arb_poly(3), h in arb_poly(3)) {
            let gh = &g * &h;
            prop_assume!(!gh.is_zero());
            let lhs = resultant(&f, &gh).unwrap();
            let rhs = resultant(&f, &g).unwrap() * resultant(&f, &h).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
