//! The Hasse invariant `Ĥ₅,ₗ(b)` of the Tate normal form `E₅(b)`, the
//! supersingular polynomial `ssₚ(X)` and Deuring's count of supersingular
//! j-invariants in the prime field.

use serde::{Deserialize, Serialize};

use crate::classno::h1;
use crate::error::{Error, Result};
use crate::ff::{legendre, FiniteField, PrimeField};
use crate::modpoly::ModPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseParams {
    pub l: u64,
    /// `⌊l/12⌋`
    pub n: u64,
    /// `½(1 − (−3/l))`
    pub r: u64,
    /// `½(1 − (−4/l))`
    pub s: u64,
}

impl HasseParams {
    pub fn new(l: u64) -> Self {
        let r = ((1 - legendre(-3, l)) / 2) as u64;
        let s = ((1 - legendre(-4, l)) / 2) as u64;
        Self { l, n: l / 12, r, s }
    }

    pub fn hasse_degree(&self) -> usize {
        (12 * self.n + 4 * self.r + 6 * self.s) as usize
    }
}

fn check_prime(l: u64) -> Result<PrimeField> {
    if l <= 5 || !crate::classno::is_prime(l) {
        return Err(Error::BadPrime(l));
    }
    Ok(PrimeField::new(l))
}

/// `C(n, k) mod l` for `n < l`.
fn binom_mod(f: &PrimeField, n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..k {
        num = f.mul(&num, &(n - i));
        den = f.mul(&den, &(i + 1));
    }
    f.mul(&num, &f.inv(&den).expect("k < l"))
}

/// `Jₗ(t) = Σ_k C(2n+s, 2k+s) C(2n−2k, n−k) (−432)^{n−k} (t − 1728)^k mod l`.
pub fn build_jl(l: u64) -> Result<ModPoly<PrimeField>> {
    let f = check_prime(l)?;
    let HasseParams { n, s, .. } = HasseParams::new(l);
    let shift = ModPoly::from_i64s(f, &[-1728, 1]);
    let m432 = f.from_i64(-432);
    let mut acc = ModPoly::zero(f);
    let mut tk = ModPoly::one(f);
    for k in 0..=n {
        let c = f.mul(&binom_mod(&f, 2 * n + s, 2 * k + s), &binom_mod(&f, 2 * n - 2 * k, n - k));
        let c = f.mul(&c, &f.pow(&m432, (n - k) as u128));
        acc = acc.add(&tk.scale(&c));
        tk = tk.mul(&shift);
    }
    Ok(acc)
}

/// `c₄(b)³ / (b⁵(1 − 11b − b²))`, the j-invariant of `E₅(b)`, as (numerator, denominator).
pub fn j_of_b(f: PrimeField) -> (ModPoly<PrimeField>, ModPoly<PrimeField>) {
    let c4 = ModPoly::from_i64s(f, &[1, -12, 14, 12, 1]);
    let den = ModPoly::from_i64s(f, &[1, -11, -1]).shift(5);
    (c4.pow(3), den)
}

/// `c₄,₅(x)³ / (x(1 − 11x − x²)⁵)`.
pub fn j5_of_x(f: PrimeField) -> (ModPoly<PrimeField>, ModPoly<PrimeField>) {
    let c45 = ModPoly::from_i64s(f, &[1, 228, 494, -228, 1]);
    let den = ModPoly::from_i64s(f, &[1, -11, -1]).pow(5).shift(1);
    (c45.pow(3), den)
}

/// `Ĥ₅,ₗ` from the j-invariant of the Tate normal form.
pub fn build_hasse_tate(l: u64) -> Result<ModPoly<PrimeField>> {
    let f = check_prime(l)?;
    let p = HasseParams::new(l);
    let jl = build_jl(l)?;
    let (num, den) = j_of_b(f);
    let mut h = jl.compose_rational(&num, &den);
    if p.r == 1 {
        h = h.mul(&ModPoly::from_i64s(f, &[1, -12, 14, 12, 1]));
    }
    if p.s == 1 {
        h = h.mul(&ModPoly::from_i64s(f, &[1, 0, 1]).mul(&ModPoly::from_i64s(f, &[1, -18, 74, 18, 1])));
    }
    Ok(h)
}

/// `Ĥ₅,ₗ` from `c₄,₅`, `c₆,₅` and `j₅(x)`.
pub fn build_hasse_icosahedral(l: u64) -> Result<ModPoly<PrimeField>> {
    let f = check_prime(l)?;
    let p = HasseParams::new(l);
    let jl = build_jl(l)?;
    let (num, den) = j5_of_x(f);
    let mut h = jl.compose_rational(&num, &den);
    if p.r == 1 {
        h = h.mul(&ModPoly::from_i64s(f, &[1, 228, 494, -228, 1]));
    }
    if p.s == 1 {
        h = h.mul(&ModPoly::from_i64s(f, &[1, 0, 1]).mul(&ModPoly::from_i64s(f, &[1, -522, -10006, 522, 1])));
    }
    Ok(h)
}

/// `Ĥ₅,ₗ(x)` over `Fₗ`; both constructions are built and must agree.
pub fn build_hasse(l: u64) -> Result<ModPoly<PrimeField>> {
    let a = build_hasse_tate(l)?;
    let b = build_hasse_icosahedral(l)?;
    if a != b {
        return Err(Error::IdentityFailure(format!("the two Hasse invariant forms differ mod {l}")));
    }
    Ok(a)
}

/// `ssₚ(X) = X^{[p≡2 (3)]} (X − 1728)^{[p≡3 (4)]} Jₚ(X)`.
pub fn build_ss(p: u64) -> Result<ModPoly<PrimeField>> {
    let f = check_prime(p)?;
    let mut ss = build_jl(p)?;
    if p % 3 == 2 {
        ss = ss.shift(1);
    }
    if p % 4 == 3 {
        ss = ss.mul(&ModPoly::from_i64s(f, &[-1728, 1]));
    }
    Ok(ss)
}

/// Number of supersingular j-invariants lying in `Fₚ`.
pub fn deuring_l(p: u64) -> Result<u64> {
    check_prime(p)?;
    let h = h1(p);
    Ok(match p % 8 {
        1 | 5 => h / 2,
        3 => 2 * h,
        _ => h,
    })
}
