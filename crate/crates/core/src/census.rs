//! Counting the special factors `g(x) = x⁴+ax³+(11a+2)x²−ax+1` and
//! `k(x) = x²+rx+s` (with `r = ε⁵(s−1)` or `r = ε̄⁵(s−1)`) of `Ĥ₅,ₗ` and
//! comparing with the class number `h(−5l)`.

use serde::{Deserialize, Serialize};

use crate::classno::h5;
use crate::error::Result;
use crate::factor::factor_ff;
use crate::ff::{golden_units, FiniteField, GoldenPair, PrimeField};
use crate::hasse::build_hasse;
use crate::modpoly::ModPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GShape {
    pub a: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KVariant {
    Eps,
    EpsBar,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KShape {
    pub r: u64,
    pub s: u64,
    pub variant: KVariant,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub l: u64,
    pub l_mod5: u64,
    pub l_mod8: u64,
    pub h: u64,
    pub found_count: u64,
    pub predicted_count: u64,
    /// Ascending coefficient vectors of the special factors found.
    pub factors: Vec<Vec<u64>>,
    pub squarefree: bool,
    #[serde(rename = "match")]
    pub matches: bool,
}

pub fn g_poly(f: PrimeField, a: u64) -> ModPoly<PrimeField> {
    let c2 = f.add(&f.mul(&11, &a), &2);
    ModPoly::new(f, vec![1, f.neg(&a), c2, a, 1])
}

/// The `a` for which `q = g_a`, if `q` has g-shape.
pub fn g_shape_of(q: &ModPoly<PrimeField>) -> Option<GShape> {
    let f = q.field();
    if q.degree() != 4 || !q.is_monic() {
        return None;
    }
    let a = q.coeff(3);
    (*q == g_poly(f, a)).then_some(GShape { a })
}

/// Which of the two relations `r = ε⁵(s−1)`, `r = ε̄⁵(s−1)` a quadratic satisfies.
pub fn k_shape_of(q: &ModPoly<PrimeField>, gp: &GoldenPair) -> Option<KShape> {
    let f = q.field();
    if q.degree() != 2 || !q.is_monic() {
        return None;
    }
    let (s, r) = (q.coeff(0), q.coeff(1));
    let sm1 = f.sub(&s, &1);
    let eps = r == f.mul(&gp.eps5, &sm1);
    let bar = r == f.mul(&gp.eps5bar, &sm1);
    let variant = match (eps, bar) {
        (true, true) => KVariant::Both,
        (true, false) => KVariant::Eps,
        (false, true) => KVariant::EpsBar,
        (false, false) => return None,
    };
    Some(KShape { r, s, variant })
}

fn hasse_factors(l: u64) -> Result<(Vec<(ModPoly<PrimeField>, u32)>, bool)> {
    let h = build_hasse(l)?;
    let fl = factor_ff(&h);
    let squarefree = fl.factors.iter().all(|(_, e)| *e == 1);
    Ok((fl.factors, squarefree))
}

/// Irreducible quartic factors of `Ĥ₅,ₗ` of g-shape (`l ≡ ±2 mod 5`).
pub fn find_g_factors(l: u64) -> Result<Vec<GShape>> {
    let (factors, _) = hasse_factors(l)?;
    Ok(factors.iter().filter_map(|(q, _)| g_shape_of(q)).collect())
}

/// Irreducible quadratic factors of `Ĥ₅,ₗ` of k-shape (`l ≡ ±1 mod 5`).
pub fn find_k_factors(l: u64) -> Result<Vec<KShape>> {
    let gp = golden_units(l)?;
    let (factors, _) = hasse_factors(l)?;
    Ok(factors.iter().filter_map(|(q, _)| k_shape_of(q, &gp)).collect())
}

/// The count predicted from `h = h(−5l)`.
pub fn predicted_count(l: u64, h: u64) -> u64 {
    let (q1, q3, q7) = match l % 5 {
        2 | 3 => (h / 4, h / 2 - 1, h - 1),
        4 => (h / 2, h - 3, 2 * h - 3),
        _ => (h / 2, h - 1, 2 * h - 1),
    };
    match l % 8 {
        1 | 5 => q1,
        3 => q3,
        _ => q7,
    }
}

pub fn census(l: u64) -> Result<CensusReport> {
    let (factors, squarefree) = hasse_factors(l)?;
    let special: Vec<Vec<u64>> = if matches!(l % 5, 2 | 3) {
        factors
            .iter()
            .filter(|(q, _)| g_shape_of(q).is_some())
            .map(|(q, _)| q.coeffs().to_vec())
            .collect()
    } else {
        let gp = golden_units(l)?;
        factors
            .iter()
            .filter(|(q, _)| k_shape_of(q, &gp).is_some())
            .map(|(q, _)| q.coeffs().to_vec())
            .collect()
    };
    let h = h5(l);
    let predicted = predicted_count(l, h);
    let found = special.len() as u64;
    Ok(CensusReport {
        l,
        l_mod5: l % 5,
        l_mod8: l % 8,
        h,
        found_count: found,
        predicted_count: predicted,
        factors: special,
        squarefree,
        matches: squarefree && found == predicted,
    })
}

/// `s⁻¹x²k(−1/x)`, the companion of `k(x) = x² + rx + s`.
pub fn companion(k: &KShape, f: PrimeField) -> ModPoly<PrimeField> {
    let si = f.inv(&k.s).expect("s ≠ 0");
    ModPoly::new(f, vec![si, f.neg(&f.mul(&k.r, &si)), 1])
}

/// Every k-factor's companion is again a k-factor, and each companion
/// product (for `k̄ ≠ k`) has g-shape.
pub fn pairing_holds(l: u64) -> Result<bool> {
    let f = PrimeField::new(l);
    let ks = find_k_factors(l)?;
    let polys: Vec<ModPoly<PrimeField>> =
        ks.iter().map(|k| ModPoly::new(f, vec![k.s, k.r, 1])).collect();
    for (k, q) in ks.iter().zip(&polys) {
        let kb = companion(k, f);
        if !polys.contains(&kb) {
            return Ok(false);
        }
        if kb != *q && g_shape_of(&q.mul(&kb)).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classno::primes_in;
    use crate::tables::CENSUS_ROWS;

    #[test]
    fn shapes() {
        let f = PrimeField::new(7);
        assert_eq!(g_poly(f, 4), ModPoly::from_i64s(f, &[1, 3, 4, 4, 1]));
        assert_eq!(g_shape_of(&g_poly(f, 4)), Some(GShape { a: 4 }));
        let gp = golden_units(11).unwrap();
        let f = PrimeField::new(11);
        assert_eq!(k_shape_of(&ModPoly::from_i64s(f, &[1, 0, 1]), &gp).unwrap().variant, KVariant::Both);
    }

    #[test]
    fn small_cases() {
        assert_eq!(find_g_factors(7).unwrap(), vec![GShape { a: 4 }]);
        assert_eq!(find_g_factors(13).unwrap().len(), 2);
        assert_eq!(find_k_factors(11).unwrap().len(), 3);
        assert_eq!(find_k_factors(19).unwrap().len(), 5);
        assert_eq!(predicted_count(7, 2), 1);
        assert_eq!(predicted_count(13, 8), 2);
        assert_eq!(predicted_count(11, 4), 3);
        let r = census(17).unwrap();
        assert_eq!((r.found_count, r.predicted_count, r.matches), (1, 1, true));
    }

    #[test]
    fn tables_up_to_150() {
        for &(l, n, h) in CENSUS_ROWS.iter().filter(|r| r.0 < 150) {
            let r = census(l).unwrap();
            assert_eq!(r.h, h, "l={l}");
            assert_eq!(r.found_count, n, "l={l}");
            assert!(r.matches, "l={l}");
        }
    }

    /// Independent count: scan every `a ∈ F_l` (resp. every `s`) and test
    /// divisibility and irreducibility directly.
    fn scan_count(l: u64) -> u64 {
        let f = PrimeField::new(l);
        let h = build_hasse(l).unwrap();
        if matches!(l % 5, 2 | 3) {
            (0..l).filter(|&a| {
                let g = g_poly(f, a);
                h.rem(&g).is_zero() && g.is_irreducible()
            }).count() as u64
        } else {
            let gp = golden_units(l).unwrap();
            let mut set = std::collections::BTreeSet::new();
            for s in 0..l {
                for e in [gp.eps5, gp.eps5bar] {
                    let r = f.mul(&e, &f.sub(&s, &1));
                    let k = ModPoly::new(f, vec![s, r, 1]);
                    if h.rem(&k).is_zero() && k.is_irreducible() {
                        set.insert((r, s));
                    }
                }
            }
            set.len() as u64
        }
    }

    #[test]
    fn scan_oracle_agrees() {
        for l in primes_in(7, 140) {
            assert_eq!(census(l).unwrap().found_count, scan_count(l), "l={l}");
        }
    }

    #[test]
    fn pairing_and_closure() {
        for l in primes_in(7, 200) {
            if matches!(l % 5, 1 | 4) {
                assert!(pairing_holds(l).unwrap(), "l={l}");
            } else {
                let f = PrimeField::new(l);
                for g in find_g_factors(l).unwrap() {
                    let q = g_poly(f, g.a);
                    // x⁴ g(−1/x) = g(x).
                    let rev = ModPoly::new(f, q.coeffs().iter().rev().enumerate()
                        .map(|(i, c)| if (4 - i) % 2 == 1 { f.neg(c) } else { *c }).collect());
                    assert_eq!(rev, q, "l={l}");
                }
            }
        }
    }

    use proptest::prelude::*;
    proptest! {
        #[test]
        fn predicted_count_is_consistent(idx in 0usize..200) {
            let primes = primes_in(7, 3000);
            let l = primes[idx % primes.len()];
            let h = h5(l);
            // h(−5l) is divisible by 2, by 4 when l ≡ 1 mod 4.
            prop_assert_eq!(h % 2, 0);
            if l % 4 == 1 {
                prop_assert_eq!(h % 4, 0);
            }
            let _ = predicted_count(l, h);
        }
    }
}
