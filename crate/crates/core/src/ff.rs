//! Prime fields, explicit extensions of degree 2 and 4, Legendre symbols,
//! square roots and the golden units ε⁵, ε̄⁵.

use std::fmt::Debug;
use std::hash::Hash;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modpoly::ModPoly;

/// A finite field with `Copy` elements. The polynomial kernels have
/// schoolbook defaults that [`PrimeField`] overrides with lazy reduction.
pub trait FiniteField: Copy + Debug + PartialEq + Send + Sync {
    type Elem: Copy + PartialEq + Eq + Ord + Hash + Debug + Send + Sync;

    fn characteristic(&self) -> u64;
    fn degree(&self) -> u32;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn from_u64(&self, n: u64) -> Self::Elem;
    fn random<G: Rng>(&self, rng: &mut G) -> Self::Elem;
    /// Coordinates over the prime field, constant coordinate first.
    fn coords(&self, a: &Self::Elem) -> Vec<u64>;
    fn from_coords(&self, c: &[u64]) -> Self::Elem;

    fn order(&self) -> u128 {
        (self.characteristic() as u128).pow(self.degree())
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        let p = self.characteristic() as i64;
        self.from_u64(n.rem_euclid(p) as u64)
    }

    fn pow(&self, a: &Self::Elem, mut e: u128) -> Self::Elem {
        let mut base = *a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        (!self.is_zero(a)).then(|| self.pow(a, self.order() - 2))
    }

    fn poly_mul(&self, a: &[Self::Elem], b: &[Self::Elem]) -> Vec<Self::Elem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if self.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = self.add(&out[i + j], &self.mul(x, y));
            }
        }
        out
    }

    /// Reduces `a` in place modulo the monic polynomial `m` (length ≥ 2).
    fn poly_rem_monic(&self, a: &mut Vec<Self::Elem>, m: &[Self::Elem]) {
        let n = m.len() - 1;
        if a.len() <= n {
            return;
        }
        for i in (n..a.len()).rev() {
            let c = a[i];
            if self.is_zero(&c) {
                continue;
            }
            for j in 0..n {
                a[i - n + j] = self.sub(&a[i - n + j], &self.mul(&c, &m[j]));
            }
            a[i] = self.zero();
        }
        a.truncate(n);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2 && p < (1 << 61), "modulus out of range");
        Self { p }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    fn mulmod(&self, a: u64, b: u64) -> u64 {
        if self.p < (1 << 32) {
            a * b % self.p
        } else {
            ((a as u128 * b as u128) % self.p as u128) as u64
        }
    }

    /// How many products of two residues can be summed in a `u64`.
    #[inline]
    fn lazy_budget(&self) -> u64 {
        let sq = (self.p as u128 - 1) * (self.p as u128 - 1);
        if sq == 0 {
            return u64::MAX;
        }
        (u64::MAX as u128 / sq).min(u64::MAX as u128) as u64
    }
}

impl FiniteField for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn degree(&self) -> u32 {
        1
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mulmod(*a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn from_u64(&self, n: u64) -> u64 {
        n % self.p
    }
    fn random<G: Rng>(&self, rng: &mut G) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn coords(&self, a: &u64) -> Vec<u64> {
        vec![*a]
    }
    fn from_coords(&self, c: &[u64]) -> u64 {
        c.first().map_or(0, |&x| x % self.p)
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(t0.rem_euclid(self.p as i128) as u64)
    }

    fn poly_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let budget = self.lazy_budget();
        let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        if (short.len() as u64) >= budget {
            return schoolbook_reduced(self, a, b);
        }
        let mut acc = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in short.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (slot, &y) in acc[i..].iter_mut().zip(long) {
                *slot += x * y;
            }
        }
        acc.iter().map(|v| v % self.p).collect()
    }

    fn poly_rem_monic(&self, a: &mut Vec<u64>, m: &[u64]) {
        let n = m.len() - 1;
        if a.len() <= n {
            return;
        }
        let p = self.p;
        // Each slot receives at most n additions of a product below p².
        if (n as u64 + 1) >= self.lazy_budget() {
            let mut v = std::mem::take(a);
            let f = *self;
            generic_rem(&f, &mut v, m);
            *a = v;
            return;
        }
        let negm: Vec<u64> = m[..n].iter().map(|&c| if c == 0 { 0 } else { p - c }).collect();
        for i in (n..a.len()).rev() {
            let c = a[i] % p;
            a[i] = 0;
            if c == 0 {
                continue;
            }
            for (slot, &y) in a[i - n..i].iter_mut().zip(&negm) {
                *slot += c * y;
            }
        }
        a.truncate(n);
        for v in a.iter_mut() {
            *v %= p;
        }
    }
}

fn schoolbook_reduced(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    out
}

fn generic_rem(f: &PrimeField, a: &mut Vec<u64>, m: &[u64]) {
    let n = m.len() - 1;
    for i in (n..a.len()).rev() {
        let c = a[i];
        if c == 0 {
            continue;
        }
        for j in 0..n {
            a[i - n + j] = f.sub(&a[i - n + j], &f.mul(&c, &m[j]));
        }
        a[i] = 0;
    }
    a.truncate(n);
}

/// `F_{p^k}` for `k ≤ 4` as `F_p[y]/(m(y))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExtField {
    base: PrimeField,
    k: u32,
    /// Monic defining polynomial, constant term first; length `k + 1`.
    modulus: [u64; 5],
}

pub type FqElem = [u64; 4];

impl ExtField {
    pub fn base(&self) -> PrimeField {
        self.base
    }

    pub fn defining_poly(&self) -> Vec<u64> {
        self.modulus[..=self.k as usize].to_vec()
    }

    pub fn embed(&self, a: u64) -> FqElem {
        [a % self.base.p, 0, 0, 0]
    }

    /// The generator `y` of the extension.
    pub fn gen(&self) -> FqElem {
        if self.k == 1 {
            // F_p[y]/(y): y is 0; the generator is unused in degree 1.
            return [0, 0, 0, 0];
        }
        [0, 1, 0, 0]
    }

    /// The prime-field value, if `a` lies in `F_p`.
    pub fn to_base(&self, a: &FqElem) -> Option<u64> {
        a[1..].iter().all(|&c| c == 0).then_some(a[0])
    }

    pub fn frobenius(&self, a: &FqElem) -> FqElem {
        self.pow(a, self.base.p as u128)
    }
}

impl FiniteField for ExtField {
    type Elem = FqElem;

    fn characteristic(&self) -> u64 {
        self.base.p
    }
    fn degree(&self) -> u32 {
        self.k
    }
    fn zero(&self) -> FqElem {
        [0; 4]
    }
    fn one(&self) -> FqElem {
        [1, 0, 0, 0]
    }
    fn is_zero(&self, a: &FqElem) -> bool {
        *a == [0; 4]
    }
    fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        std::array::from_fn(|i| self.base.add(&a[i], &b[i]))
    }
    fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        std::array::from_fn(|i| self.base.sub(&a[i], &b[i]))
    }
    fn neg(&self, a: &FqElem) -> FqElem {
        std::array::from_fn(|i| self.base.neg(&a[i]))
    }
    fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let k = self.k as usize;
        let f = &self.base;
        let mut t = [0u64; 7];
        for i in 0..k {
            if a[i] == 0 {
                continue;
            }
            for j in 0..k {
                t[i + j] = f.add(&t[i + j], &f.mul(&a[i], &b[j]));
            }
        }
        for i in (k..2 * k - 1).rev() {
            let c = t[i];
            if c == 0 {
                continue;
            }
            for j in 0..k {
                t[i - k + j] = f.sub(&t[i - k + j], &f.mul(&c, &self.modulus[j]));
            }
            t[i] = 0;
        }
        [t[0], t[1], t[2], t[3]]
    }
    fn from_u64(&self, n: u64) -> FqElem {
        self.embed(n)
    }
    fn random<G: Rng>(&self, rng: &mut G) -> FqElem {
        let mut out = [0u64; 4];
        for c in out.iter_mut().take(self.k as usize) {
            *c = rng.gen_range(0..self.base.p);
        }
        out
    }
    fn coords(&self, a: &FqElem) -> Vec<u64> {
        a[..self.k as usize].to_vec()
    }
    fn from_coords(&self, c: &[u64]) -> FqElem {
        let mut out = [0u64; 4];
        for (slot, &x) in out.iter_mut().zip(c.iter().take(self.k as usize)) {
            *slot = x % self.base.p;
        }
        out
    }
}

/// Legendre symbol `(a/p)` for an odd prime `p`.
pub fn legendre(a: i64, p: u64) -> i32 {
    let f = PrimeField::new(p);
    let a = f.from_i64(a);
    if a == 0 {
        return 0;
    }
    if f.pow(&a, ((p - 1) / 2) as u128) == 1 {
        1
    } else {
        -1
    }
}

/// Kronecker symbol `(d/2)` for `d ≡ 0, 1 mod 4`.
pub fn kronecker_two(d: i64) -> i32 {
    match d.rem_euclid(8) {
        1 | 7 => 1,
        3 | 5 => -1,
        _ => 0,
    }
}

/// Square root mod `p` (Tonelli–Shanks); of the two roots, the smaller residue.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let f = PrimeField::new(p);
    let r = sqrt_ff(&f, &(a % p))?;
    Some(r.min(f.neg(&r)))
}

/// Square root in any finite field of odd order, if one exists.
pub fn sqrt_ff<F: FiniteField>(f: &F, a: &F::Elem) -> Option<F::Elem> {
    if f.is_zero(a) {
        return Some(f.zero());
    }
    let q = f.order();
    if f.pow(a, (q - 1) / 2) != f.one() {
        return None;
    }
    let mut s = 0u32;
    let mut t = q - 1;
    while t % 2 == 0 {
        t /= 2;
        s += 1;
    }
    let z = first_nonresidue(f);
    let mut m = s;
    let mut c = f.pow(&z, t);
    let mut x = f.pow(a, t.div_ceil(2));
    let mut b = f.pow(a, t);
    while b != f.one() {
        let mut i = 0u32;
        let mut bb = b;
        while bb != f.one() {
            bb = f.mul(&bb, &bb);
            i += 1;
        }
        let mut g = c;
        for _ in 0..m - i - 1 {
            g = f.mul(&g, &g);
        }
        x = f.mul(&x, &g);
        c = f.mul(&g, &g);
        b = f.mul(&b, &c);
        m = i;
    }
    Some(x)
}

/// The first quadratic non-residue in coordinate enumeration order.
fn first_nonresidue<F: FiniteField>(f: &F) -> F::Elem {
    let q = f.order();
    let p = f.characteristic() as u128;
    let k = f.degree() as usize;
    (1u128..q)
        .map(|mut n| {
            let digits: Vec<u64> = (0..k)
                .map(|_| {
                    let d = (n % p) as u64;
                    n /= p;
                    d
                })
                .collect();
            f.from_coords(&digits)
        })
        .find(|e| f.pow(e, (q - 1) / 2) != f.one())
        .expect("odd-order fields have non-residues")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenPair {
    pub eps5: u64,
    pub eps5bar: u64,
}

/// `ε⁵ = ((−1+√5)/2)⁵` and `ε̄⁵ = ((−1−√5)/2)⁵` in `F_l`, using the canonical √5.
pub fn golden_units(l: u64) -> Result<GoldenPair> {
    let f = PrimeField::new(l);
    let r5 = sqrt_mod(5 % l, l).ok_or(Error::NotSplit(l))?;
    let half = f.inv(&2).expect("l odd");
    let eps = f.mul(&f.sub(&r5, &1), &half);
    let epsbar = f.mul(&f.sub(&f.neg(&r5), &1), &half);
    Ok(GoldenPair {
        eps5: f.pow(&eps, 5),
        eps5bar: f.pow(&epsbar, 5),
    })
}

impl GoldenPair {
    pub fn holds(&self, l: u64) -> bool {
        let f = PrimeField::new(l);
        let on_curve = |x: u64| f.sub(&f.add(&f.mul(&x, &x), &f.mul(&11, &x)), &1) == 0;
        f.add(&self.eps5, &self.eps5bar) == f.from_i64(-11)
            && f.mul(&self.eps5, &self.eps5bar) == f.from_i64(-1)
            && on_curve(self.eps5)
            && on_curve(self.eps5bar)
    }
}

/// `F_{l^k}` with the lexicographically smallest monic irreducible defining
/// polynomial, coefficients compared from degree `k−1` down to the constant.
pub fn make_extension(l: u64, k: u32) -> ExtField {
    assert!(matches!(k, 1 | 2 | 4), "extension degree must be 1, 2 or 4");
    let base = PrimeField::new(l);
    if k == 1 {
        return ExtField { base, k, modulus: [0, 1, 0, 0, 0] };
    }
    let total = (l as u128).pow(k);
    for idx in 0..total {
        // idx enumerates (c_{k-1}, ..., c_0) with c_0 the fastest digit.
        let mut n = idx;
        let mut coeffs = vec![0u64; k as usize + 1];
        coeffs[k as usize] = 1;
        for slot in coeffs.iter_mut().take(k as usize) {
            *slot = (n % l as u128) as u64;
            n /= l as u128;
        }
        let poly = ModPoly::new(base, coeffs.clone());
        if poly.is_irreducible() {
            let mut modulus = [0u64; 5];
            modulus[..coeffs.len()].copy_from_slice(&coeffs);
            return ExtField { base, k, modulus };
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn is_square_naive(a: u64, p: u64) -> bool {
        (0..p).any(|x| x * x % p == a % p)
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(-1, 13), 1);
        assert_eq!(legendre(5, 7), -1);
        assert_eq!(legendre(-20, 19), -1);
        assert_eq!(legendre(5, 19), 1);
        assert_eq!(legendre(38, 19), 0);
        for p in [7u64, 11, 13, 19, 23, 97] {
            for a in 1..p {
                let want = if is_square_naive(a, p) { 1 } else { -1 };
                assert_eq!(legendre(a as i64, p), want);
            }
        }
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(sqrt_mod(0, 7), Some(0));
        assert_eq!(sqrt_mod(5, 11), Some(4));
        assert_eq!(sqrt_mod(5, 13), None);
        for p in (7u64..100).filter(|&p| crate::classno::is_prime(p)) {
            for a in 0..p {
                match sqrt_mod(a, p) {
                    Some(r) => {
                        assert_eq!(r * r % p, a);
                        assert!(r <= p - r || r == 0);
                    }
                    None => assert!(!is_square_naive(a, p)),
                }
            }
        }
    }

    #[test]
    fn golden_units_examples() {
        let g = golden_units(11).unwrap();
        assert_eq!(g, GoldenPair { eps5: 10, eps5bar: 1 });
        assert_eq!(golden_units(7), Err(Error::NotSplit(7)));
    }

    #[test]
    fn golden_pair_invariants_below_ten_thousand() {
        for l in (7u64..10_000).filter(|&l| crate::classno::is_prime(l)) {
            let split = l % 5 == 1 || l % 5 == 4;
            match golden_units(l) {
                Ok(g) => {
                    assert!(split);
                    assert!(g.holds(l), "l = {l}");
                }
                Err(e) => {
                    assert!(!split);
                    assert_eq!(e, Error::NotSplit(l));
                }
            }
        }
    }

    #[test]
    fn extensions() {
        assert_eq!(make_extension(7, 2).defining_poly(), vec![1, 0, 1]);
        assert_eq!(make_extension(13, 2).defining_poly(), vec![2, 0, 1]);
        // Brute-force oracle: first monic quadratic without roots.
        for p in [7u64, 11, 13, 17, 19, 23] {
            let mut want = None;
            'search: for b in 0..p {
                for c in 0..p {
                    if (0..p).all(|x| (x * x + b * x + c) % p != 0) {
                        want = Some(vec![c, b, 1]);
                        break 'search;
                    }
                }
            }
            assert_eq!(Some(make_extension(p, 2).defining_poly()), want);
        }
        // l ≡ ±2 mod 5: F_{l⁴} contains a primitive 5th root of unity.
        for l in [7u64, 13, 17] {
            let f = make_extension(l, 4);
            let q = f.order();
            assert_eq!((q - 1) % 5, 0);
            let mut found = false;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(l);
            use rand::SeedableRng;
            for _ in 0..20 {
                let z = f.pow(&f.random(&mut rng), (q - 1) / 5);
                if z != f.one() && !f.is_zero(&z) {
                    assert_eq!(f.pow(&z, 5), f.one());
                    found = true;
                    break;
                }
            }
            assert!(found);
        }
    }

    #[test]
    fn sqrt_in_extensions() {
        let f = make_extension(11, 2);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        use rand::SeedableRng;
        for _ in 0..50 {
            let a = f.random(&mut rng);
            let sq = f.mul(&a, &a);
            let r = sqrt_ff(&f, &sq).unwrap();
            assert_eq!(f.mul(&r, &r), sq);
        }
        // Every element of F_p is a square in F_{p²}.
        for a in 0..11 {
            assert!(sqrt_ff(&f, &f.embed(a)).is_some());
        }
    }

    proptest! {
        #[test]
        fn legendre_multiplicative(a in -1000i64..1000, b in -1000i64..1000, pi in 0usize..6) {
            let p = [7u64, 11, 13, 101, 379, 1009][pi];
            prop_assert_eq!(legendre(a, p) * legendre(b, p), legendre(a * b, p));
        }

        #[test]
        fn frobenius_fixes_everything(seed: u64, pi in 0usize..4, ki in 0usize..2) {
            let p = [7u64, 11, 31, 101][pi];
            let k = [2u32, 4][ki];
            let f = make_extension(p, k);
            let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
            let x = f.random(&mut rng);
            prop_assert_eq!(f.pow(&x, f.order()), x);
        }

        #[test]
        fn sqrt_mod_large(a in 0u64..1_000_000_007, pi in 0usize..3) {
            let p = [1_000_000_007u64, 998_244_353, 2_305_843_009_213_693_951][pi];
            let a = a % p;
            match sqrt_mod(a, p) {
                Some(r) => prop_assert_eq!((r as u128 * r as u128 % p as u128) as u64, a),
                None => prop_assert_eq!(legendre(a as i64, p), -1),
            }
        }
    }
}
