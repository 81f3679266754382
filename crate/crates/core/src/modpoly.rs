//! Dense polynomials over a finite field.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

use crate::bigint::mod_u64;
use crate::ff::{FiniteField, PrimeField};

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct ModPoly<F: FiniteField> {
    f: F,
    c: Vec<F::Elem>,
}

impl<F: FiniteField> ModPoly<F> {
    pub fn new(f: F, mut c: Vec<F::Elem>) -> Self {
        while c.last().is_some_and(|x| f.is_zero(x)) {
            c.pop();
        }
        Self { f, c }
    }

    pub fn zero(f: F) -> Self {
        Self { f, c: Vec::new() }
    }

    pub fn one(f: F) -> Self {
        Self::constant(f, f.one())
    }

    pub fn constant(f: F, a: F::Elem) -> Self {
        Self::new(f, vec![a])
    }

    pub fn x(f: F) -> Self {
        Self::monomial(f, f.one(), 1)
    }

    pub fn monomial(f: F, a: F::Elem, k: usize) -> Self {
        let mut c = vec![f.zero(); k + 1];
        c[k] = a;
        Self::new(f, c)
    }

    /// Coefficients from the constant term upward.
    pub fn from_i64s(f: F, c: &[i64]) -> Self {
        Self::new(f, c.iter().map(|&x| f.from_i64(x)).collect())
    }

    pub fn from_bigints(f: F, c: &[BigInt]) -> Self {
        let p = f.characteristic();
        Self::new(f, c.iter().map(|x| f.from_u64(mod_u64(x, p))).collect())
    }

    pub fn field(&self) -> F {
        self.f
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> F::Elem {
        self.c.get(i).copied().unwrap_or_else(|| self.f.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0] == self.f.one()
    }

    pub fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.deg().unwrap_or(0)
    }

    pub fn lc(&self) -> F::Elem {
        self.c.last().copied().unwrap_or_else(|| self.f.zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new(self.f, (0..n).map(|i| self.f.add(&self.coeff(i), &o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new(self.f, (0..n).map(|i| self.f.sub(&self.coeff(i), &o.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.f, self.c.iter().map(|x| self.f.neg(x)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.f, self.f.poly_mul(&self.c, &o.c))
    }

    pub fn scale(&self, a: &F::Elem) -> Self {
        Self::new(self.f, self.c.iter().map(|x| self.f.mul(x, a)).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![self.f.zero(); k];
        c.extend_from_slice(&self.c);
        Self { f: self.f, c }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.f);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let f = self.f;
        Self::new(
            f,
            self.c.iter().enumerate().skip(1).map(|(i, x)| f.mul(x, &f.from_u64(i as u64))).collect(),
        )
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let mut acc = self.f.zero();
        for a in self.c.iter().rev() {
            acc = self.f.add(&self.f.mul(&acc, x), a);
        }
        acc
    }

    pub fn monic(&self) -> Self {
        match self.f.inv(&self.lc()) {
            Some(i) => self.scale(&i),
            None => self.clone(),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == self.f.one()
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dn = d.deg().expect("division by the zero polynomial");
        let f = self.f;
        if self.c.len() <= dn {
            return (Self::zero(f), self.clone());
        }
        let inv = f.inv(&d.lc()).expect("nonzero leading coefficient");
        let mut r = self.c.clone();
        let mut q = vec![f.zero(); r.len() - dn];
        for i in (dn..r.len()).rev() {
            if f.is_zero(&r[i]) {
                continue;
            }
            let t = f.mul(&r[i], &inv);
            for j in 0..dn {
                r[i - dn + j] = f.sub(&r[i - dn + j], &f.mul(&t, &d.c[j]));
            }
            r[i] = f.zero();
            q[i - dn] = t;
        }
        r.truncate(dn);
        (Self::new(f, q), Self::new(f, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        if d.is_monic() && d.c.len() >= 2 {
            let mut c = self.c.clone();
            self.f.poly_rem_monic(&mut c, &d.c);
            return Self::new(self.f, c);
        }
        self.div_rem(d).1
    }

    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Largest `e` with `d^e | self`.
    pub fn valuation(&self, d: &Self) -> u32 {
        let mut e = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_exact(d) {
            cur = q;
            e += 1;
        }
        e
    }

    /// Monic gcd; `gcd(f, 0) = monic(f)`.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b.monic());
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn mul_mod(&self, o: &Self, m: &Self) -> Self {
        let mut c = self.f.poly_mul(&self.c, &o.c);
        self.f.poly_rem_monic(&mut c, &m.c);
        Self::new(self.f, c)
    }

    /// `self^e mod m` for monic `m`.
    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        debug_assert!(m.is_monic());
        let mut base = self.rem(m);
        let mut acc = Self::one(self.f).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, m);
            }
        }
        acc
    }

    /// `F(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero(self.f);
        for a in self.c.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(self.f, *a));
        }
        acc
    }

    /// `den^n · F(num/den)` with `n = deg F`.
    pub fn compose_rational(&self, num: &Self, den: &Self) -> Self {
        let n = match self.deg() {
            Some(n) => n,
            None => return self.clone(),
        };
        let mut den_pows = vec![Self::one(self.f)];
        for i in 1..=n {
            den_pows.push(den_pows[i - 1].mul(den));
        }
        let mut acc = Self::constant(self.f, self.c[n]);
        for i in (0..n).rev() {
            acc = acc.mul(num).add(&den_pows[n - i].scale(&self.c[i]));
        }
        acc
    }

    /// `Res(self, o)` by the Euclidean remainder sequence; agrees with the
    /// Sylvester determinant with the rows of `self` first.
    pub fn resultant(&self, o: &Self) -> F::Elem {
        let f = self.f;
        if self.is_zero() || o.is_zero() {
            return f.zero();
        }
        let (mut a, mut b) = (self.clone(), o.clone());
        let mut acc = f.one();
        loop {
            let (da, db) = (a.degree(), b.degree());
            if db == 0 {
                return f.mul(&acc, &f.pow(&b.lc(), da as u128));
            }
            let r = a.div_rem(&b).1;
            if r.is_zero() {
                return f.zero();
            }
            // Res(a, b) = (−1)^{da·db} lc(b)^{da − dr} Res(b, r).
            let dr = r.degree();
            let mut factor = f.pow(&b.lc(), (da - dr) as u128);
            if (da * db) % 2 == 1 {
                factor = f.neg(&factor);
            }
            acc = f.mul(&acc, &factor);
            a = b;
            b = r;
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == 0
    }

    /// Rabin's test over `F_q`.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.deg() {
            Some(0) | None => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let m = self.monic();
        let q = self.f.order();
        let x = Self::x(self.f);
        let mut frob = vec![x.rem(&m)];
        for i in 1..=n {
            let next = frob[i - 1].pow_mod(q, &m);
            frob.push(next);
        }
        if frob[n] != x.rem(&m) {
            return false;
        }
        prime_divisors(n).into_iter().all(|r| m.gcd(&frob[n / r].sub(&x)).degree() == 0)
    }

    /// Order used for canonical factor lists: degree, then coefficients
    /// from the top down.
    pub fn canonical_cmp(&self, o: &Self) -> Ordering {
        self.c.len().cmp(&o.c.len()).then_with(|| {
            for (a, b) in self.c.iter().rev().zip(o.c.iter().rev()) {
                let ord = self.f.coords(a).iter().rev().cmp(self.f.coords(b).iter().rev());
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            Ordering::Equal
        })
    }

    /// Applies a field map coefficientwise.
    pub fn map_into<G: FiniteField>(&self, g: G, m: impl Fn(&F::Elem) -> G::Elem) -> ModPoly<G> {
        ModPoly::new(g, self.c.iter().map(m).collect())
    }
}

impl ModPoly<PrimeField> {
    pub fn p(&self) -> u64 {
        self.f.p()
    }

    /// Coefficients as plain residues, constant term first.
    pub fn residues(&self) -> Vec<u64> {
        self.c.clone()
    }
}

pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl<F: FiniteField> fmt::Display for ModPoly<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if self.f.is_zero(a) {
                continue;
            }
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            let coords = self.f.coords(a);
            let s = if coords.len() == 1 {
                coords[0].to_string()
            } else {
                format!("({})", coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
            };
            let unit = *a == self.f.one();
            match i {
                0 => write!(out, "{s}")?,
                1 if unit => write!(out, "x")?,
                1 => write!(out, "{s}x")?,
                _ if unit => write!(out, "x^{i}")?,
                _ => write!(out, "{s}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::make_extension;
    use proptest::prelude::*;

    fn fp(p: u64, c: &[i64]) -> ModPoly<PrimeField> {
        ModPoly::from_i64s(PrimeField::new(p), c)
    }

    #[test]
    fn gcd_over_f7() {
        let a = fp(7, &[-1, 0, 1]);
        let b = fp(7, &[1, -2, 1]);
        assert_eq!(a.gcd(&b), fp(7, &[-1, 1]));
        assert_eq!(a.scale(&3).gcd(&ModPoly::zero(PrimeField::new(7))), a);
    }

    #[test]
    fn irreducibility() {
        assert!(fp(7, &[1, 0, 1]).is_irreducible());
        assert!(!fp(13, &[1, 0, 1]).is_irreducible());
        // x⁴ + 1 is reducible over every prime field.
        assert!(!fp(7, &[1, 0, 0, 0, 1]).is_irreducible());
        assert!(fp(7, &[1, 3, 4, 4, 1]).is_irreducible());
    }

    #[test]
    fn lazy_kernels_match_generic() {
        let f = PrimeField::new(1_000_003);
        let a = ModPoly::from_i64s(f, &(0..300).map(|i| i * 7919 + 13).collect::<Vec<_>>());
        let b = ModPoly::from_i64s(f, &(0..250).map(|i| i * 104729 - 5).collect::<Vec<_>>());
        let prod = a.mul(&b);
        let mut slow = vec![0u64; 549];
        for (i, x) in a.coeffs().iter().enumerate() {
            for (j, y) in b.coeffs().iter().enumerate() {
                slow[i + j] = (slow[i + j] + x * y % f.p()) % f.p();
            }
        }
        assert_eq!(prod.coeffs(), &slow[..]);
        let m = b.monic();
        let r = prod.rem(&m);
        assert_eq!(r, prod.div_rem(&m).1);
    }

    proptest! {
        #[test]
        fn resultant_matches_sylvester(f in prop::collection::vec(-50i64..50, 1..7),
                                       g in prop::collection::vec(-50i64..50, 1..7)) {
            let p = 101u64;
            let fz = crate::poly::Poly::<BigInt>::from_i64s(&f);
            let gz = crate::poly::Poly::<BigInt>::from_i64s(&g);
            let fm = ModPoly::from_bigints(PrimeField::new(p), fz.coeffs());
            let gm = ModPoly::from_bigints(PrimeField::new(p), gz.coeffs());
            prop_assume!(!fz.is_zero() && !gz.is_zero());
            prop_assume!(fm.degree() == fz.degree() && gm.degree() == gz.degree());
            let r = crate::poly::resultant(&fz, &gz).unwrap();
            prop_assert_eq!(fm.resultant(&gm), mod_u64(&r, p));
        }

        #[test]
        fn division_identity_over_extension(a in prop::collection::vec(0u64..11, 1..9),
                                            b in prop::collection::vec(0u64..11, 1..5)) {
            let e = make_extension(11, 2);
            let pa = ModPoly::new(e, a.chunks(2).map(|c| e.from_coords(c)).collect());
            let pb = ModPoly::new(e, b.chunks(2).map(|c| e.from_coords(c)).collect());
            prop_assume!(!pb.is_zero());
            let (q, r) = pa.div_rem(&pb);
            prop_assert_eq!(q.mul(&pb).add(&r), pa);
            prop_assert!(r.is_zero() || r.degree() < pb.degree());
        }
    }
}
