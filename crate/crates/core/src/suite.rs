//! The exact characteristic-zero identities, grouped into a fast suite and a
//! heavy suite of resultant computations. Every check compares against the
//! published value.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bigint::parse_factored;
use crate::fricke::section7_identities;
use crate::icosa::{
    coset_rep, icosa_resultant_direct, printed_r_t_ta2, printed_r_tt, section6_ledger, verify_group_relations,
    MobiusMap, Variant,
};
use crate::modeq::{
    check_discy, class_polys, d1_d2_gcd, f_derivs, h20_root, phi5, phi5_diagonal_identity, phi5_resultant_form,
    q_d_discriminant, split_values_agree, table3_resultant, Sqrt5Int, CLASS_POLY_DISCRIMINANTS,
    COFACTOR_RESULTANTS, D1_D2_GCDS, H20_ROOT_DERIVATIVE, LINEAR_ROOT_SECOND_DERIVATIVES, Q_D_DISCRIMINANTS,
};
use crate::poly::discriminant;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    /// Empty when the check holds.
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, holds: bool, detail: impl FnOnce() -> String) -> Self {
        Self { name: name.into(), detail: if holds { String::new() } else { detail() }, holds }
    }

    fn from_result(name: impl Into<String>, r: crate::Result<()>) -> Self {
        match r {
            Ok(()) => Self::new(name, true, String::new),
            Err(e) => Self::new(name, false, || e.to_string()),
        }
    }

    fn int(name: impl Into<String>, got: &BigInt, printed: &str) -> Self {
        let want = parse_factored(printed);
        Self::new(name, *got == want, || format!("computed {got}, printed {printed} = {want}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Suite {
    Fast,
    Heavy,
    All,
}

pub fn run_suite(s: Suite) -> Vec<Check> {
    match s {
        Suite::Fast => fast_suite(),
        Suite::Heavy => heavy_suite(),
        Suite::All => fast_suite().into_iter().chain(heavy_suite()).collect(),
    }
}

/// Φ₅ identities, the derivative values at the rational and `H₋20` roots, the
/// second-derivative gcds, class-polynomial and `Q_d` discriminants, the split
/// values `a² − 44a − 16`, and the three Fricke-level identities.
pub fn fast_suite() -> Vec<Check> {
    let mut out = vec![
        Check::from_result("Phi5(x,x) = -H20 H4^2 H11^2 H16^2 H19^2", phi5_diagonal_identity()),
        Check::from_result("disc_y Phi5 = 5^5 x^4 (x-1728)^4 prod H_d^2", check_discy().map(|_| ())),
    ];
    for (d, t, s) in LINEAR_ROOT_SECOND_DERIVATIVES {
        let r = f_derivs(&BigInt::from(t));
        let root = class_polys().get(d).eval(&BigInt::from(t)).is_zero() && r.f.is_zero() && r.f1.is_zero();
        out.push(Check::new(format!("t = {t} is a double root of F (H{d})"), root, || {
            format!("F = {}, F' = {}", r.f, r.f1)
        }));
        out.push(Check::int(format!("F''({t})"), &r.f2, s));
    }
    let t = h20_root();
    let r = f_derivs(&t);
    let (a, b, n) = H20_ROOT_DERIVATIVE;
    let want = Sqrt5Int::new(parse_factored(a), parse_factored(b));
    out.push(Check::new("F'(632000+282880 sqrt5) = A + B sqrt5", r.f.is_zero() && r.f1 == want, || {
        format!("F = {:?}, F' = {:?}", r.f, r.f1)
    }));
    out.push(Check::int("A^2 - 5B^2 at the H20 root", &r.f1.norm(), n));
    for (d, s) in D1_D2_GCDS {
        out.push(Check::int(format!("gcd(D1, D2) for H{d}"), &d1_d2_gcd(d), s));
    }
    for (d, s) in CLASS_POLY_DISCRIMINANTS {
        out.push(Check::int(format!("disc(H{d})"), &discriminant(class_polys().get(d)), s));
    }
    for (d, s) in Q_D_DISCRIMINANTS {
        out.push(Check::int(format!("disc(Q{d})"), &q_d_discriminant(d), s));
    }
    for d in [11, 16, 19, 24, 36, 51, 64, 91, 99, 84, 96] {
        out.push(Check::new(format!("a^2 - 44a - 16 for g{d}"), split_values_agree(d), || {
            "differs from the printed factored value".into()
        }));
    }
    out.push(Check::from_result("Fricke identities (disc_z, Res_t, Res_z)", section7_identities()));
    out
}

/// `5¹⁵Φ₅` as a resultant, the cofactor resultants `R(d)`, the icosahedral
/// relations, the printed `R_{T,T}` and `R_{T,TA²}`, and the equality ledger
/// over all pairs of coset representatives.
pub fn heavy_suite() -> Vec<Check> {
    let five15 = BigInt::from(5).pow(15);
    let mut out = vec![Check::new(
        "5^15 Phi5 = Res_z definition",
        phi5_resultant_form() == phi5().map(|p| p.scale(&five15)),
        || "resultant form differs".into(),
    )];
    for (d, s) in COFACTOR_RESULTANTS {
        match table3_resultant(d) {
            Ok(r) => out.push(Check::int(format!("R({d})"), &r, s)),
            Err(e) => out.push(Check::new(format!("R({d})"), false, || e.to_string())),
        }
    }
    out.push(Check::from_result("icosahedral group relations and cosets", verify_group_relations()));
    let t = MobiusMap::t();
    out.push(Check::new(
        "R_{T,T} (direct elimination) printed factorization",
        icosa_resultant_direct(&t, &t, Variant::Eps) == printed_r_tt(),
        || "differs".into(),
    ));
    let ta2 = coset_rep(1, 2);
    out.push(Check::new(
        "R_{T,TA2} (direct elimination) printed factorization",
        icosa_resultant_direct(&t, &ta2, Variant::Eps) == printed_r_t_ta2(),
        || "differs".into(),
    ));
    for l in section6_ledger() {
        out.push(Check::new(l.claim, l.holds, || "differs".into()));
    }
    out
}
