//! The supersingular polynomial `ssₚ⁽⁵*⁾(X)` for the Fricke group of level 5,
//! its degree and the number of its linear factors over `Fₚ`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::classno::{field_class_number, is_prime};
use crate::error::{Error, Result};
use crate::factor::{roots, roots_in};
use crate::ff::{legendre, ExtField, FiniteField, FqElem, PrimeField};
use crate::hasse::build_ss;
use crate::modeq::{class_polys, BigBiPoly, BigPoly};
use crate::modpoly::ModPoly;
use crate::poly::{discriminant, resultant, Poly};

/// `R₅(X, Y) = X² − X(Y⁵−80Y⁴+1890Y³−12600Y²+7776Y+3456) + (Y²+216Y+144)³`,
/// outer variable `X`.
pub fn r5() -> BigBiPoly {
    let c0 = BigPoly::from_i64s(&[144, 216, 1]).pow(3);
    let c1 = BigPoly::from_i64s(&[3456, 7776, -12600, 1890, -80, 1]).neg();
    Poly::new(vec![c0, c1, BigPoly::constant(BigInt::from(1))])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrickeReport {
    pub p: u64,
    pub degree_found: u64,
    pub degree_formula: u64,
    pub linear_found: u64,
    pub linear_formula: u64,
    pub degree_matches: bool,
    pub linear_matches: bool,
    /// Agreement of the `R₅` construction with the z-parametrization.
    pub parametrization_agrees: bool,
}

impl FrickeReport {
    pub fn passes(&self) -> bool {
        self.degree_matches && self.linear_matches && self.parametrization_agrees
    }

    pub fn splits_completely(&self) -> bool {
        self.linear_found == self.degree_found
    }
}

fn check_prime(p: u64) -> Result<()> {
    if p <= 5 || !is_prime(p) {
        return Err(Error::BadPrime(p));
    }
    Ok(())
}

/// The supersingular `j` in `F_{p²}`, once each.
fn supersingular_js(p: u64) -> Result<(ExtField, Vec<FqElem>)> {
    let (e, rs) = roots_in(&build_ss(p)?, 2);
    Ok((e, rs.into_iter().map(|(r, _)| r).collect()))
}

fn lift(e: ExtField, c: &[i64]) -> ModPoly<ExtField> {
    ModPoly::new(e, c.iter().map(|&x| e.from_i64(x)).collect())
}

/// The distinct `j₅*` in `F_{p²}` with `R₅(j, j₅*) = 0` for supersingular `j`.
pub fn ss5star_roots(p: u64) -> Result<BTreeSet<FqElem>> {
    check_prime(p)?;
    let (e, js) = supersingular_js(p)?;
    let c0 = lift(e, &[144, 216, 1]).pow(3);
    let c1 = lift(e, &[3456, 7776, -12600, 1890, -80, 1]);
    let mut out = BTreeSet::new();
    for j in js {
        let f = c0.sub(&c1.scale(&j)).add(&ModPoly::constant(e, e.mul(&j, &j)));
        out.extend(roots(&f).into_iter().map(|(r, _)| r));
    }
    Ok(out)
}

/// The same set from `(j, j₅*) = (−(z²+12z+16)³/(z+11), −(z²+4)/(z+11))`.
pub fn ss5star_roots_via_z(p: u64) -> Result<BTreeSet<FqElem>> {
    check_prime(p)?;
    let (e, js) = supersingular_js(p)?;
    let cube = lift(e, &[16, 12, 1]).pow(3);
    // (z²+12z+16)³ = 125 at z = −11, so z = −11 never solves the equation below.
    assert!(!e.is_zero(&cube.eval(&e.from_i64(-11))));
    let lin = lift(e, &[11, 1]);
    let mut out = BTreeSet::new();
    for j in js {
        for (z, _) in roots(&cube.add(&lin.scale(&j))) {
            let num = e.neg(&e.add(&e.mul(&z, &z), &e.from_u64(4)));
            let den = e.inv(&e.add(&z, &e.from_u64(11))).expect("z ≠ −11");
            out.insert(e.mul(&num, &den));
        }
    }
    Ok(out)
}

/// `ssₚ⁽⁵*⁾(X) = ∏ (X − j₅*)` over the distinct roots; the coefficients must lie in `Fₚ`.
pub fn build_ss5star(p: u64) -> Result<ModPoly<PrimeField>> {
    let set = ss5star_roots(p)?;
    let (e, _) = supersingular_js(p)?;
    let prod = set.iter().fold(ModPoly::one(e), |acc, r| acc.mul(&ModPoly::new(e, vec![e.neg(r), e.one()])));
    let coeffs = prod
        .coeffs()
        .iter()
        .map(|c| e.to_base(c).ok_or(Error::CoefficientNotInPrimeField(p)))
        .collect::<Result<Vec<u64>>>()?;
    Ok(ModPoly::new(PrimeField::new(p), coeffs))
}

/// `¼(p − (−1/p)) + ½(1 − (−5/p))`.
pub fn degree_formula(p: u64) -> u64 {
    let m1 = legendre(-1, p) as i64;
    let m5 = legendre(-5, p) as i64;
    ((p as i64 - m1) / 4 + (1 - m5) / 2) as u64
}

/// The number of linear factors of `ssₚ⁽⁵*⁾` over `Fₚ` predicted from `h(−p)` and `h(−5p)`.
pub fn l5star_formula(p: u64) -> Result<u64> {
    check_prime(p)?;
    let h1 = field_class_number(-(p as i64))?.h as i64;
    let h5 = field_class_number(-5 * p as i64)?.h as i64;
    let c = 1 + legendre((p % 5) as i64, 5) as i64;
    let (num, den) = match p % 8 {
        1 | 5 => (c * h1 + h5, 4),
        3 => (2 * c * h1 + h5, 2),
        _ => (c * h1 + 2 * h5, 2),
    };
    if num % den != 0 {
        return Err(Error::IdentityFailure(format!("non-integral linear-factor count at p = {p}")));
    }
    Ok((num / den) as u64)
}

pub fn verify_fricke(p: u64) -> Result<FrickeReport> {
    let ss = build_ss5star(p)?;
    let degree_found = ss.degree() as u64;
    let linear_found = roots(&ss).len() as u64;
    let degree_formula = degree_formula(p);
    let linear_formula = l5star_formula(p)?;
    let parametrization_agrees = ss5star_roots(p)? == ss5star_roots_via_z(p)?;
    Ok(FrickeReport {
        p,
        degree_found,
        degree_formula,
        linear_found,
        linear_formula,
        degree_matches: degree_found == degree_formula,
        linear_matches: linear_found == linear_formula,
        parametrization_agrees,
    })
}

/// Primes in `[lo, hi]` (and `> 5`) where `ssₚ⁽⁵*⁾` is a product of linear factors.
pub fn split_primes(lo: u64, hi: u64) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for p in (lo.max(7)..=hi).filter(|&p| is_prime(p)) {
        if verify_fricke(p)?.splits_completely() {
            out.push(p);
        }
    }
    Ok(out)
}

fn expect_eq(name: &str, got: &BigPoly, want: &BigPoly) -> Result<()> {
    if got == want {
        Ok(())
    } else {
        Err(Error::IdentityFailure(format!("{name}: got {got}, expected {want}")))
    }
}

/// `(z²+12z+16)³ + j(z+11)` as a polynomial in `z` over `ℤ[j]`.
fn z_sextic() -> Poly<BigPoly> {
    let cube = BigPoly::from_i64s(&[16, 12, 1]).pow(3);
    let mut c: Vec<BigPoly> = cube.coeffs().iter().map(|a| BigPoly::constant(a.clone())).collect();
    let j = BigPoly::x();
    c[0] = c[0].add(&j.scale(&BigInt::from(11)));
    c[1] = c[1].add(&j);
    Poly::new(c)
}

/// The three exact identities behind the degree formula:
/// `disc_z((z²+12z+16)³+j(z+11)) = 3125 j⁴(j−1728)²`,
/// `Res_t(z²+4+t(z+11), t²−44t−16) = (z²+22z−4)²`,
/// `Res_z((z²+12z+16)³+j(z+11), z²+22z−4) = −5³H₋20(j)`.
pub fn section7_identities() -> Result<()> {
    let sextic = z_sextic();
    let disc = discriminant(&sextic);
    let want = BigPoly::monomial(BigInt::from(3125), 4).mul(&BigPoly::from_i64s(&[-1728, 1]).pow(2));
    expect_eq("disc_z", &disc, &want)?;

    let z = |c: &[i64]| BigPoly::from_i64s(c);
    let lin_t = Poly::new(vec![z(&[4, 0, 1]), z(&[11, 1])]);
    let quad_t = Poly::new(vec![z(&[-16]), z(&[-44]), z(&[1])]);
    let res_t = resultant(&lin_t, &quad_t)?;
    expect_eq("Res_t", &res_t, &z(&[-4, 22, 1]).pow(2))?;

    let h20 = class_polys().get(20).clone();
    let q = Poly::new(vec![z(&[-4]), z(&[22]), z(&[1])]);
    let res_z = resultant(&sextic, &q)?;
    expect_eq("Res_z", &res_z, &h20.scale(&BigInt::from(-125)))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classno::primes_in;
    use crate::tables::FRICKE_ROWS;

    #[test]
    fn table10_rows() {
        for (p, deg, lin) in FRICKE_ROWS {
            let r = verify_fricke(p).unwrap();
            assert_eq!((r.degree_found, r.linear_found), (deg, lin), "p={p}");
            assert!(r.passes(), "{r:?}");
        }
    }

    #[test]
    fn formula_examples() {
        assert_eq!(degree_formula(7), 2);
        assert_eq!(degree_formula(13), 4);
        assert_eq!(degree_formula(17), 5);
        assert_eq!(l5star_formula(7).unwrap(), 2);
        assert_eq!(l5star_formula(11).unwrap(), 4);
        assert_eq!(l5star_formula(13).unwrap(), 2);
        assert!(l5star_formula(5).is_err());
    }

    #[test]
    fn r5_vanishes_on_z_parametrization() {
        // (z+11)⁶ R₅(X(z), Y(z)) with X = −(z²+12z+16)³/(z+11), Y = −(z²+4)/(z+11).
        let xn = BigPoly::from_i64s(&[16, 12, 1]).pow(3).neg();
        let yn = BigPoly::from_i64s(&[4, 0, 1]).neg();
        let den = BigPoly::from_i64s(&[11, 1]);
        let r = r5();
        let mut acc = BigPoly::zero();
        for (i, ci) in r.coeffs().iter().enumerate() {
            // X^i c_i(Y) scaled by (z+11)^6: X^i contributes (z+11)^{-i}, c_i(Y) (z+11)^{-deg c_i}.
            let ci_y = ci.compose_rational(&yn, &den);
            let pad = 6 - i - ci.degree();
            acc = acc.add(&xn.pow(i as u64).mul(&ci_y).mul(&den.pow(pad as u64)));
        }
        assert!(acc.is_zero());
    }

    #[test]
    fn exact_identities() {
        section7_identities().unwrap();
    }

    #[test]
    fn degrees_and_parametrization_up_to_200() {
        for p in primes_in(7, 200) {
            let r = verify_fricke(p).unwrap();
            assert!(r.degree_matches && r.parametrization_agrees, "{r:?}");
        }
    }

    #[test]
    fn roots_closed_under_frobenius() {
        for p in primes_in(7, 150) {
            let (e, _) = supersingular_js(p).unwrap();
            let set = ss5star_roots(p).unwrap();
            assert!(set.iter().all(|r| set.contains(&e.frobenius(r))), "p={p}");
        }
    }

    #[test]
    fn split_primes_below_200() {
        assert_eq!(split_primes(7, 200).unwrap(), vec![7, 11, 19]);
    }
}
