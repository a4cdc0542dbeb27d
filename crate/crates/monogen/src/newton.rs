//! phi-adic Newton polygons: expansions, principal polygons, residual
//! polynomials, phi-indices, p-regularity, splitting types and field-index
//! divisibility.
//!
//! Conventions: expansion coefficients ascend (point i corresponds to a_i),
//! so the principal part consists of the negative-slope sides of the lower
//! convex hull. A side from (s, v_s) of slope -h/e (gcd(h, e) = 1) with
//! horizontal length l has degree d = l/e, and its residual polynomial has
//! degree d over the residue field F_phi.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{count_monic_irreducibles, is_prime_biguint, vp_u64, Budget};
use crate::error::Error;
use crate::family::FamilyParams;
use crate::poly::{
    factor_ext, factor_mod_p, gauss_valuation, irreducible_over_q, ExtFieldPoly, IntPoly,
    Irreducibility, ModPoly,
};
use crate::Result;

/// The unique expansion `g = sum a_i(x) phi(x)^i` with `deg a_i < deg phi`.
#[derive(Debug, Clone)]
pub struct PhiExpansion {
    pub p: BigUint,
    pub phi: IntPoly,
    pub coeffs: Vec<IntPoly>,
}

/// Successive division by a monic phi whose reduction mod p is irreducible.
pub fn phi_expansion(g: &IntPoly, phi: &IntPoly, p: &BigUint) -> Result<PhiExpansion> {
    if !is_prime_biguint(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if !phi.is_monic() {
        return Err(Error::NotMonic(phi.to_string()));
    }
    let phi_bar = ModPoly::from_int_unchecked(phi, p);
    if phi_bar.degree() != phi.degree() || !phi_bar.is_irreducible() {
        return Err(Error::Precondition(format!(
            "phi = {phi} must stay irreducible mod {p}"
        )));
    }
    let mut coeffs = Vec::new();
    let mut rest = g.clone();
    while !rest.is_zero() {
        let (q, r) = rest.divrem_monic(phi);
        coeffs.push(r);
        rest = q;
    }
    let out = PhiExpansion {
        p: p.clone(),
        phi: phi.clone(),
        coeffs,
    };
    debug_assert_eq!(&out.reconstruct(), g, "expansion must reconstruct");
    Ok(out)
}

impl PhiExpansion {
    pub fn reconstruct(&self) -> IntPoly {
        let mut acc = IntPoly::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &self.phi) + a;
        }
        acc
    }

    /// The finite points `(i, v_p(a_i))`, zero coefficients omitted.
    pub fn points(&self) -> Vec<(usize, u64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(i, a)| gauss_valuation(a, &self.p).map(|v| (i, v)))
            .collect()
    }
}

/// One side of the principal polygon: slope `-h/e` in lowest terms, running
/// from `start` to `end`, horizontal length `length`, degree
/// `degree = length / e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Side {
    pub start: (usize, u64),
    pub end: (usize, u64),
    pub h: u64,
    pub e: u64,
    pub length: usize,
    pub degree: usize,
}

#[derive(Debug, Clone)]
pub struct NewtonPolygonData {
    pub points: Vec<(usize, u64)>,
    /// Vertices of the lower convex hull, slopes strictly increasing.
    pub hull: Vec<(usize, u64)>,
    /// The negative-slope sides.
    pub principal: Vec<Side>,
}

impl NewtonPolygonData {
    /// Horizontal length of the principal part.
    pub fn principal_length(&self) -> usize {
        self.principal.iter().map(|s| s.length).sum()
    }
}

/// Polygon of `g` with respect to `phi` at `p`.
pub fn newton_polygon(g: &IntPoly, phi: &IntPoly, p: &BigUint) -> Result<NewtonPolygonData> {
    let exp = phi_expansion(g, phi, p)?;
    Ok(polygon_from_expansion(&exp))
}

pub fn polygon_from_expansion(exp: &PhiExpansion) -> NewtonPolygonData {
    let points = exp.points();
    let hull = lower_hull(&points);
    let principal = principal_sides(&hull);
    NewtonPolygonData {
        points,
        hull,
        principal,
    }
}

/// Monotone-chain lower hull over exact integer cross products.
fn lower_hull(points: &[(usize, u64)]) -> Vec<(usize, u64)> {
    let mut hull: Vec<(usize, u64)> = Vec::new();
    for &pt in points {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            // Pop b unless a -> b -> pt turns strictly left; collinear
            // interior points are dropped so hull entries are vertices.
            let cross = (b.0 as i128 - a.0 as i128) * (pt.1 as i128 - a.1 as i128)
                - (b.1 as i128 - a.1 as i128) * (pt.0 as i128 - a.0 as i128);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    hull
}

fn principal_sides(hull: &[(usize, u64)]) -> Vec<Side> {
    let mut out = Vec::new();
    for w in hull.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b.1 >= a.1 {
            break; // slopes increase; once nonnegative, stop
        }
        let rise = a.1 - b.1;
        let run = (b.0 - a.0) as u64;
        let g = rise.gcd(&run);
        out.push(Side {
            start: a,
            end: b,
            h: rise / g,
            e: run / g,
            length: run as usize,
            degree: g as usize,
        });
    }
    out
}

/// Residual polynomial of one side, with per-lattice-point provenance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffSource {
    OnSide,
    Above,
}

#[derive(Debug, Clone)]
pub struct ResidualData {
    pub side_index: usize,
    pub residual: ExtFieldPoly,
    pub sources: Vec<CoeffSource>,
}

/// Residual polynomials of every principal side: coefficient u of the side
/// starting at (s, v_s) reads `a_(s+ue)(x) / p^(v_s - uh) mod (p, phi)` on
/// the side and 0 strictly above it.
pub fn residual_polynomials(
    npd: &NewtonPolygonData,
    exp: &PhiExpansion,
) -> Result<Vec<ResidualData>> {
    let phi_bar = ModPoly::from_int_unchecked(&exp.phi, &exp.p);
    let p_int = BigInt::from(exp.p.clone());
    let mut out = Vec::new();
    for (si, side) in npd.principal.iter().enumerate() {
        let d = side.degree;
        let (s, vs) = side.start;
        let mut coeffs = Vec::with_capacity(d + 1);
        let mut sources = Vec::with_capacity(d + 1);
        for u in 0..=d {
            let abscissa = s + u * side.e as usize;
            let line_val = vs - (u as u64) * side.h;
            let a = exp.coeffs.get(abscissa).cloned().unwrap_or_else(IntPoly::zero);
            let v = gauss_valuation(&a, &exp.p);
            match v {
                Some(v) if v == line_val => {
                    let scaled = a.div_exact_scalar(
                        &p_int.pow(u32::try_from(v).expect("valuation fits u32")),
                    );
                    coeffs.push(ModPoly::from_int_unchecked(&scaled, &exp.p));
                    sources.push(CoeffSource::OnSide);
                }
                Some(v) => {
                    assert!(v > line_val, "point below its own hull side");
                    coeffs.push(ModPoly::from_int_unchecked(&IntPoly::zero(), &exp.p));
                    sources.push(CoeffSource::Above);
                }
                None => {
                    coeffs.push(ModPoly::from_int_unchecked(&IntPoly::zero(), &exp.p));
                    sources.push(CoeffSource::Above);
                }
            }
        }
        let residual = ExtFieldPoly::new(phi_bar.clone(), coeffs)?;
        assert_eq!(residual.degree(), Some(d), "endpoints sit on the side");
        assert_eq!(sources[0], CoeffSource::OnSide);
        out.push(ResidualData {
            side_index: si,
            residual,
            sources,
        });
    }
    Ok(out)
}

/// `deg(phi)` times the number of lattice points (x, y), x >= 1, y >= 1,
/// on or strictly below the principal polygon.
pub fn phi_index(npd: &NewtonPolygonData, phi: &IntPoly) -> u64 {
    let deg_phi = phi.deg() as u64;
    let mut count: u64 = 0;
    for side in &npd.principal {
        let (x0, y0) = (side.start.0 as i128, side.start.1 as i128);
        let (h, e) = (side.h as i128, side.e as i128);
        for x in side.start.0.max(1)..=side.end.0 {
            if x == side.start.0 && side.start.0 != 0 {
                continue; // shared vertex counted by the previous side
            }
            // Height of the side at abscissa x: y0 - (x - x0) h / e.
            let num = y0 * e - (x as i128 - x0) * h;
            let floor = num.div_euclid(e);
            if floor >= 1 {
                count += floor as u64;
            }
        }
    }
    deg_phi * count
}

/// Everything the pipeline learns about one irreducible factor of f mod p.
#[derive(Debug, Clone)]
pub struct PhiAnalysis {
    pub phi: ModPoly,
    pub multiplicity: u64,
    pub polygon: NewtonPolygonData,
    pub residuals: Vec<ResidualData>,
    pub index: u64,
    /// Squarefree flag per principal side.
    pub side_squarefree: Vec<bool>,
    pub regular: bool,
}

/// Per-prime regularity report across all of f's factors mod p.
#[derive(Debug, Clone)]
pub struct RegularityReport {
    pub p: BigUint,
    pub regular: bool,
    pub per_phi: Vec<PhiAnalysis>,
}

/// Run the full polygon pipeline at p for every irreducible factor of
/// f mod p. `f` must be monic.
pub fn analyze_at_prime(f: &IntPoly, p: &BigUint) -> Result<RegularityReport> {
    if !f.is_monic() {
        return Err(Error::NotMonic(f.to_string()));
    }
    if !is_prime_biguint(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let fp = ModPoly::from_int_unchecked(f, p);
    let fac = factor_mod_p(&fp)?;
    let mut per_phi = Vec::new();
    let mut regular = true;
    for (phi_bar, mult) in &fac.factors {
        let phi = phi_bar.lift();
        if phi == *f {
            // f equal to its own lift: trivial expansion, one unramified
            // prime; nothing below height zero.
            per_phi.push(PhiAnalysis {
                phi: phi_bar.clone(),
                multiplicity: *mult,
                polygon: NewtonPolygonData {
                    points: vec![(1, 0)],
                    hull: vec![(1, 0)],
                    principal: vec![],
                },
                residuals: vec![],
                index: 0,
                side_squarefree: vec![],
                regular: true,
            });
            continue;
        }
        let exp = phi_expansion(f, &phi, p)?;
        assert!(
            !exp.coeffs[0].is_zero(),
            "phi cannot divide an irreducible f over Z"
        );
        let polygon = polygon_from_expansion(&exp);
        assert_eq!(
            polygon.principal_length() as u64,
            *mult,
            "principal length equals the multiplicity of phi in f mod p"
        );
        let residuals = residual_polynomials(&polygon, &exp)?;
        let side_squarefree: Vec<bool> = residuals
            .iter()
            .map(|r| r.residual.is_squarefree())
            .collect();
        let phi_regular = side_squarefree.iter().all(|&b| b);
        regular &= phi_regular;
        let index = phi_index(&polygon, &phi);
        per_phi.push(PhiAnalysis {
            phi: phi_bar.clone(),
            multiplicity: *mult,
            polygon,
            residuals,
            index,
            side_squarefree,
            regular: phi_regular,
        });
    }
    Ok(RegularityReport {
        p: p.clone(),
        regular,
        per_phi,
    })
}

/// Is f p-regular (all residual polynomials squarefree over their residue
/// fields)?
pub fn is_p_regular(f: &IntPoly, p: &BigUint) -> Result<RegularityReport> {
    analyze_at_prime(f, p)
}

/// Ore's bound: `v_p([Z_K : Z[theta]]) >= sum ind_phi(f)`, with equality
/// under p-regularity. Returns (bound, exact).
pub fn ore_index_bound(f: &IntPoly, p: &BigUint) -> Result<(u64, bool)> {
    let report = analyze_at_prime(f, p)?;
    let bound = report.per_phi.iter().map(|a| a.index).sum();
    Ok((bound, report.regular))
}

/// Shape of `p Z_K`: the multiset of (ramification index, residue degree)
/// pairs, with the per-phi breakdown.
#[derive(Debug, Clone)]
pub struct SplittingType {
    pub p: BigUint,
    pub regular: bool,
    /// (e, f) pairs, sorted.
    pub primes: Vec<(u64, u64)>,
    pub per_phi: Vec<(ModPoly, Vec<(u64, u64)>)>,
}

impl SplittingType {
    /// `sum e*f` over all primes above p.
    pub fn ef_sum(&self) -> u64 {
        self.primes.iter().map(|(e, f)| e * f).sum()
    }
}

/// Splitting of p in Z_K via Ore's theorem; requires (and verifies)
/// p-regularity, refusing with `NotPRegular` otherwise.
pub fn splitting_type(f: &IntPoly, p: &BigUint) -> Result<SplittingType> {
    let report = analyze_at_prime(f, p)?;
    splitting_from_report(f, &report)
}

pub fn splitting_from_report(f: &IntPoly, report: &RegularityReport) -> Result<SplittingType> {
    let p = &report.p;
    if !report.regular {
        return Err(Error::NotPRegular(p.to_string()));
    }
    let mut primes = Vec::new();
    let mut per_phi = Vec::new();
    for analysis in &report.per_phi {
        let deg_phi = analysis.phi.deg() as u64;
        let mut local = Vec::new();
        if analysis.polygon.principal.is_empty() {
            // The f = phi corner: a single unramified prime.
            assert_eq!(analysis.multiplicity, 1);
            local.push((1, deg_phi));
        }
        for residual in &analysis.residuals {
            let side = &analysis.polygon.principal[residual.side_index];
            let fac = factor_ext(&residual.residual)?;
            for (psi, mult) in &fac.factors {
                assert_eq!(*mult, 1, "regular side has squarefree residual");
                let e = side.e;
                let fdeg = deg_phi * psi.degree().expect("irreducible factor") as u64;
                local.push((e, fdeg));
            }
        }
        local.sort_unstable();
        primes.extend(local.iter().copied());
        per_phi.push((analysis.phi.clone(), local));
    }
    primes.sort_unstable();
    let st = SplittingType {
        p: p.clone(),
        regular: true,
        primes,
        per_phi,
    };
    assert_eq!(
        st.ef_sum(),
        f.deg() as u64,
        "sum of e*f must equal the degree"
    );
    Ok(st)
}

/// Divisibility of the field index i(K) by p, read off the splitting type:
/// p divides i(K) iff for some residue degree f the number of primes with
/// that degree exceeds the number of monic irreducibles of degree f over
/// F_p.
#[derive(Debug, Clone)]
pub struct IndexReport {
    pub p: BigUint,
    pub divides: bool,
    /// Residue degree witnessing the excess, with (count, capacity).
    pub witness: Option<(u64, u64, BigUint)>,
    pub degree_counts: BTreeMap<u64, u64>,
}

pub fn index_divisibility(st: &SplittingType, p: &BigUint) -> Result<IndexReport> {
    if !st.regular {
        return Err(Error::NotPRegular(p.to_string()));
    }
    assert_eq!(&st.p, p, "splitting data belongs to a different prime");
    let mut degree_counts: BTreeMap<u64, u64> = BTreeMap::new();
    for (_, fdeg) in &st.primes {
        *degree_counts.entry(*fdeg).or_insert(0) += 1;
    }
    let mut witness = None;
    for (fdeg, count) in &degree_counts {
        let capacity = count_monic_irreducibles(p, *fdeg)?;
        if BigUint::from(*count) > capacity {
            witness = Some((*fdeg, *count, capacity));
            break;
        }
    }
    Ok(IndexReport {
        p: p.clone(),
        divides: witness.is_some(),
        witness,
        degree_counts,
    })
}

// ---------------------------------------------------------------------------
// The v_p(i(K)) = 1 criterion
// ---------------------------------------------------------------------------

/// Result of the sufficient-condition battery for `v_p(i(K)) = 1`.
#[derive(Debug, Clone)]
pub enum VpIndexOutcome {
    /// All hypotheses hold; the value 1 is claimed on the strength of the
    /// theorem, with the splitting-based divisibility check attached as an
    /// independent consistency witness.
    TheoremBacked {
        vp_index: u64,
        consistency: IndexReport,
        splitting: SplittingType,
    },
    HypothesesNotMet { failing: String },
}

/// Checks, for f = (x^k+c)^m - a x^(k+1) with p odd: (p-1) | (km-k-1),
/// p coprime to (km-k-1), a = 1 mod p, p | c, mk > k+1,
/// v_p(c) > (k+1) v_p(m), gcd(v_p(c) - v_p(m), k) = 1. Under all of them
/// (plus irreducibility) emits v_p(i(K)) = 1, cross-checked by the
/// splitting pipeline which must independently find p | i(K).
pub fn nonmonogeneity_vp_index(
    params: &FamilyParams,
    p: &BigUint,
    budget: &Budget,
) -> Result<VpIndexOutcome> {
    if !is_prime_biguint(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let fail = |s: String| Ok(VpIndexOutcome::HypothesesNotMet { failing: s });
    if p == &BigUint::from(2u32) {
        return fail("p must be odd".into());
    }
    if params.m <= 1 {
        return fail(format!("m = {} must exceed 1", params.m));
    }
    if params.n != params.k + 1 {
        return fail(format!("n = {} must equal k + 1 = {}", params.n, params.k + 1));
    }
    let kmk1 = (params.degree() - params.k - 1) as u64;
    if kmk1 == 0 {
        return fail("km - k - 1 must be positive".into());
    }
    use num_traits::ToPrimitive;
    let p_u64 = p.to_u64().unwrap_or(u64::MAX);
    if p_u64 == u64::MAX || kmk1 % (p_u64 - 1) != 0 {
        return fail(format!("p - 1 = {} must divide km - k - 1 = {kmk1}", p_u64 - 1));
    }
    if kmk1 % p_u64 == 0 {
        return fail(format!("p = {p} must not divide km - k - 1 = {kmk1}"));
    }
    if !((&params.a - BigInt::one()) % BigInt::from(p.clone())).is_zero() {
        return fail(format!("a = {} must be 1 mod {p}", params.a));
    }
    if !(&params.c % BigInt::from(p.clone())).is_zero() {
        return fail(format!("p = {p} must divide c = {}", params.c));
    }
    // mk > k + 1 is the family invariant km > n with n = k + 1.
    let vc = vp_u64(&params.c, p);
    let vm = vp_u64(&BigInt::from(params.m), p);
    if vc <= (params.k as u64 + 1) * vm {
        return fail(format!(
            "v_p(c) = {vc} must exceed (k+1) v_p(m) = {}",
            (params.k as u64 + 1) * vm
        ));
    }
    if (vc - vm).gcd(&(params.k as u64)) != 1 {
        return fail(format!(
            "gcd(v_p(c) - v_p(m), k) = gcd({}, {}) must be 1",
            vc - vm,
            params.k
        ));
    }

    let f = params.build_poly();
    match irreducible_over_q(&f, budget)? {
        Irreducibility::Irreducible => {}
        Irreducibility::Reducible(w) => return Err(Error::Reducible(w.to_string())),
        Irreducibility::Unknown => return Err(Error::IrreducibilityUnknown),
    }
    let splitting = splitting_type(&f, p)?;
    let consistency = index_divisibility(&splitting, p)?;
    assert!(
        consistency.divides,
        "hypotheses hold but the splitting pipeline does not see p | i(K)"
    );
    Ok(VpIndexOutcome::TheoremBacked {
        vp_index: 1,
        consistency,
        splitting,
    })
}
