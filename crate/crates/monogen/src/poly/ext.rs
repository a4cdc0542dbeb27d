//! Polynomials over the residue field F_phi = F_p[x]/(phi) and their
//! factorization.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use super::field::{self, ExtField, FieldOps};
use super::modp::{default_seed, ModPoly};
use crate::error::Error;
use crate::Result;

/// A dense polynomial in `y` over `F_p[x]/(phi)`. Coefficients are residue
/// polynomials in `x` of degree below `deg phi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtFieldPoly {
    p: BigUint,
    phi: ModPoly,
    coeffs: Vec<ModPoly>,
}

impl ExtFieldPoly {
    /// `phi` must be monic and irreducible over F_p; coefficients are
    /// reduced mod `(p, phi)`.
    pub fn new(phi: ModPoly, coeffs: Vec<ModPoly>) -> Result<Self> {
        if !phi.is_monic() || !phi.is_irreducible() {
            return Err(Error::Precondition(format!(
                "phi = {phi} must be monic irreducible mod {}",
                phi.modulus()
            )));
        }
        let p = phi.modulus().clone();
        let mut reduced: Vec<ModPoly> = coeffs
            .into_iter()
            .map(|c| {
                assert_eq!(c.modulus(), &p, "coefficient field mismatch");
                c.divrem(&phi).1
            })
            .collect();
        while reduced.last().is_some_and(|c| c.is_zero()) {
            reduced.pop();
        }
        Ok(ExtFieldPoly {
            p,
            phi,
            coeffs: reduced,
        })
    }

    pub fn base_prime(&self) -> &BigUint {
        &self.p
    }

    pub fn phi(&self) -> &ModPoly {
        &self.phi
    }

    pub fn coeffs(&self) -> &[ModPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub(crate) fn ext_field(&self) -> ExtField {
        ExtField::new(self.p.clone(), self.phi.coeffs().to_vec())
    }

    pub(crate) fn raw_coeffs(&self) -> Vec<Vec<BigUint>> {
        self.coeffs.iter().map(|c| c.coeffs().to_vec()).collect()
    }

    pub(crate) fn from_raw(phi: &ModPoly, raw: Vec<Vec<BigUint>>) -> Self {
        let p = phi.modulus().clone();
        ExtFieldPoly {
            p: p.clone(),
            phi: phi.clone(),
            coeffs: raw
                .into_iter()
                .map(|c| ModPoly::from_raw(p.clone(), c))
                .collect(),
        }
    }

    pub fn is_irreducible(&self) -> bool {
        field::is_irreducible(&self.ext_field(), &self.raw_coeffs())
    }

    /// Monic gcd with another polynomial over the same field.
    pub fn gcd(&self, other: &ExtFieldPoly) -> ExtFieldPoly {
        assert_eq!(self.phi, other.phi, "mixed residue fields");
        let f = self.ext_field();
        let g = field::gcd(&f, &self.raw_coeffs(), &other.raw_coeffs());
        ExtFieldPoly::from_raw(&self.phi, g)
    }

    pub fn derivative(&self) -> ExtFieldPoly {
        let f = self.ext_field();
        ExtFieldPoly::from_raw(&self.phi, field::derivative(&f, &self.raw_coeffs()))
    }

    /// Squarefree over F_phi: gcd with the derivative is constant.
    pub fn is_squarefree(&self) -> bool {
        let d = self.derivative();
        if d.is_zero() {
            return self.degree() == Some(0);
        }
        self.gcd(&d).degree() == Some(0)
    }
}

impl fmt::Display for ExtFieldPoly {
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
            let cs = c.to_string();
            let simple = c.degree() == Some(0);
            match i {
                0 => write!(f, "({cs})")?,
                _ => {
                    if simple && cs == "1" {
                        // monic term
                    } else if simple {
                        write!(f, "{cs}*")?;
                    } else {
                        write!(f, "({cs})*")?;
                    }
                    if i == 1 {
                        write!(f, "y")?;
                    } else {
                        write!(f, "y^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Factorization over F_phi: unit element of the field and monic
/// irreducible factors with multiplicities, canonically ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtFactorization {
    pub unit: ModPoly,
    pub factors: Vec<(ExtFieldPoly, u64)>,
}

impl ExtFactorization {
    pub fn product(&self) -> ExtFieldPoly {
        let phi = self.unit_phi();
        let f = ExtField::new(phi.modulus().clone(), phi.coeffs().to_vec());
        let mut acc = field::constant(&f, self.unit.coeffs().to_vec());
        for (g, e) in &self.factors {
            for _ in 0..*e {
                acc = field::mul(&f, &acc, &g.raw_coeffs());
            }
        }
        ExtFieldPoly::from_raw(&phi, acc)
    }

    fn unit_phi(&self) -> ModPoly {
        self.factors
            .first()
            .map(|(g, _)| g.phi().clone())
            .expect("nonempty factorization")
    }
}

impl fmt::Display for ExtFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !(self.unit.degree() == Some(0) && self.unit.coeffs()[0].is_one()) {
            write!(f, "({}) * ", self.unit)?;
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

/// Complete factorization into monic irreducibles over `F_p[x]/(phi)`;
/// equal-degree splitting runs off the fixed default seed.
pub fn factor_ext(f: &ExtFieldPoly) -> Result<ExtFactorization> {
    factor_ext_seeded(f, default_seed())
}

pub fn factor_ext_seeded(f: &ExtFieldPoly, seed: u64) -> Result<ExtFactorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("factor_ext"));
    }
    let ext = f.ext_field();
    let (unit, factors) = field::factor(&ext, &f.raw_coeffs(), seed);
    Ok(ExtFactorization {
        unit: ModPoly::from_raw(f.p.clone(), unit),
        factors: factors
            .into_iter()
            .map(|(g, e)| (ExtFieldPoly::from_raw(&f.phi, g), e))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int::IntPoly;

    fn mp(p: u64, cs: &[i64]) -> ModPoly {
        ModPoly::from_int(&IntPoly::from_i64(cs), &BigUint::from(p)).unwrap()
    }

    #[test]
    fn residual_4y2_plus_1_over_f5() {
        // phi = x, so F_phi = F_5; 4y^2 + 1 has roots y = 1, 4 (brute force
        // below) and unit-normalizes to 4(y-1)(y-4) = 4(y+4)(y+1).
        let phi = mp(5, &[0, 1]);
        let f = ExtFieldPoly::new(
            phi.clone(),
            vec![mp(5, &[1]), mp(5, &[0]), mp(5, &[4])],
        )
        .unwrap();

        // Brute-force root check over F_5.
        let mut roots = Vec::new();
        for y in 0u64..5 {
            if (4 * y * y + 1) % 5 == 0 {
                roots.push(y);
            }
        }
        assert_eq!(roots, vec![1, 4]);

        let fac = factor_ext(&f).unwrap();
        assert_eq!(fac.unit, mp(5, &[4]));
        assert_eq!(fac.factors.len(), 2);
        let displayed: Vec<String> = fac.factors.iter().map(|(g, _)| g.to_string()).collect();
        assert_eq!(displayed, vec!["y + (1)", "y + (4)"]);
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn y2_plus_y_plus_1_over_f2_irreducible() {
        let phi = mp(2, &[0, 1]);
        let one = mp(2, &[1]);
        let f = ExtFieldPoly::new(phi, vec![one.clone(), one.clone(), one]).unwrap();
        assert!(f.is_irreducible());
        let fac = factor_ext(&f).unwrap();
        assert_eq!(fac.factors.len(), 1);
        assert_eq!(fac.factors[0].1, 1);
    }

    #[test]
    fn y2_minus_x_over_f9_splits() {
        // F_9 = F_3[x]/(x^2+1); x = (1+2x)^2, so y^2 - x splits.
        let phi = mp(3, &[1, 0, 1]);
        let x_elem = mp(3, &[0, 1]);
        let f = ExtFieldPoly::new(
            phi.clone(),
            vec![
                mp(3, &[0]).sub(&x_elem), // -x
                mp(3, &[0]),
                mp(3, &[1]),
            ],
        )
        .unwrap();
        let fac = factor_ext(&f).unwrap();
        assert_eq!(fac.factors.len(), 2, "x is a square in F_9");
        assert!(fac.factors.iter().all(|(g, e)| g.degree() == Some(1) && *e == 1));
        assert_eq!(fac.product(), f);

        // Sanity: over F_3[x]/(x^2+x+2) with generator class where x is a
        // non-square the same shape stays irreducible -- check via the
        // squarefree/irreducible predicates on a known non-square: y^2 - g
        // where g = x has order dividing 8; brute-force both ways instead.
        let mut square_roots = 0;
        for a in 0..3i64 {
            for b in 0..3i64 {
                let e = mp(3, &[a, b]);
                let sq = e.mul(&e).divrem(&phi).1;
                if sq == x_elem {
                    square_roots += 1;
                }
            }
        }
        assert_eq!(square_roots, 2);
    }

    #[test]
    fn reducible_phi_rejected() {
        let phi = mp(5, &[0, 0, 1]); // x^2, not irreducible
        assert!(ExtFieldPoly::new(phi, vec![mp(5, &[1])]).is_err());
    }
}
