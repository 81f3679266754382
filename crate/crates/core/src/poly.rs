//! Dense univariate polynomials over exact rings, with bivariate polynomials
//! as `Poly<Poly<R>>` (outer variable first).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::ring::{Domain, Field, Ring};

/// Coefficients indexed by degree; never has a trailing zero.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly<R> {
    c: Vec<R>,
}

/// Bivariate polynomial: outer index is the first variable.
pub type BiPoly<R> = Poly<Poly<R>>;

impl<R: Ring> Poly<R> {
    pub fn new(mut c: Vec<R>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Self { c }
    }

    pub fn zero() -> Self {
        Self { c: Vec::new() }
    }

    pub fn constant(a: R) -> Self {
        Self::new(vec![a])
    }

    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn monomial(a: R, k: usize) -> Self {
        let mut c = vec![R::zero(); k + 1];
        c[k] = a;
        Self::new(c)
    }

    /// Coefficients listed from the constant term upward.
    pub fn from_i64s(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| R::from_i64(x)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.c
    }

    pub fn coeff(&self, i: usize) -> R {
        self.c.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.deg().unwrap_or(0)
    }

    pub fn lc(&self) -> R {
        self.c.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.c.iter().map(|x| x.neg()).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, a: &R) -> Self {
        Self::new(self.c.iter().map(|x| x.mul(a)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![R::zero(); k];
        c.extend(self.c.iter().cloned());
        Self { c }
    }

    pub fn pow(&self, e: u64) -> Self {
        Ring::pow(self, e)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x.mul(&R::from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul(x).add(a);
        }
        acc
    }

    /// Evaluates at a point of a ring `S` into which the coefficients embed.
    pub fn eval_in<S: Ring>(&self, x: &S, embed: impl Fn(&R) -> S) -> S {
        let mut acc = S::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul(x).add(&embed(a));
        }
        acc
    }

    /// `F(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(a.clone()));
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.c.iter().map(f).collect())
    }

    /// `den^n · F(num/den)` with `n = deg F`.
    pub fn compose_rational(&self, num: &Self, den: &Self) -> Self {
        let n = match self.deg() {
            Some(n) => n,
            None => return Self::zero(),
        };
        let mut den_pows = vec![Self::constant(R::one())];
        for i in 1..=n {
            den_pows.push(den_pows[i - 1].mul(den));
        }
        let mut acc = Self::constant(self.c[n].clone());
        for i in (0..n).rev() {
            acc = acc.mul(num).add(&den_pows[n - i].scale(&self.c[i]));
        }
        acc
    }

    /// `xⁿ f(−1/x)` for `n ≥ deg f`.
    pub fn skew_reverse(&self, n: usize) -> Self {
        let mut c = vec![R::zero(); n + 1];
        for (i, a) in self.c.iter().enumerate() {
            c[n - i] = if i % 2 == 1 { a.neg() } else { a.clone() };
        }
        Self::new(c)
    }
}

impl<R: Domain> Poly<R> {
    /// Quotient and remainder; each step divides by `lc(d)` exactly in `R`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dn = d.deg().ok_or(Error::DivisionByZeroPoly)?;
        let lc = d.lc();
        let mut r = self.c.clone();
        if r.len() <= dn {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![R::zero(); r.len() - dn];
        for i in (dn..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let t = r[i].div_exact(&lc).ok_or(Error::NotExact)?;
            for j in 0..=dn {
                r[i - dn + j] = r[i - dn + j].sub(&t.mul(&d.c[j]));
            }
            q[i - dn] = t;
        }
        r.truncate(dn);
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn div_exact_poly(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }

    /// Largest `e` with `d^e | self`, together with the cofactor.
    pub fn valuation(&self, d: &Self) -> (u32, Self) {
        let mut e = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_exact_poly(d) {
            cur = q;
            e += 1;
        }
        (e, cur)
    }
}

impl<R: Field> Poly<R> {
    pub fn monic(&self) -> Self {
        match self.lc().inv() {
            Some(i) => self.scale(&i),
            None => Self::zero(),
        }
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        Poly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Poly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Poly::mul(self, o)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn from_bigint(n: &BigInt) -> Self {
        Poly::constant(R::from_bigint(n))
    }
}

impl<R: Domain> Domain for Poly<R> {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.div_exact_poly(d)
    }
}

/// Fraction-free (Bareiss) determinant with row pivoting.
pub fn bareiss_det<R: Domain>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            for j in k + 1..n {
                let t = row[j].mul(&pivot_row[k]).sub(&row[k].mul(&pivot_row[j]));
                row[j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            row[k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Sylvester matrix with the rows of `f` first.
pub fn sylvester<R: Ring>(f: &Poly<R>, g: &Poly<R>) -> Vec<Vec<R>> {
    let m = f.degree();
    let n = g.degree();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![R::zero(); size];
        for k in 0..=m {
            row[i + k] = f.coeff(m - k);
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![R::zero(); size];
        for k in 0..=n {
            row[i + k] = g.coeff(n - k);
        }
        rows.push(row);
    }
    rows
}

/// `Res(f, g)` as the Sylvester determinant.
pub fn resultant<R: Domain>(f: &Poly<R>, g: &Poly<R>) -> Result<R> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(bareiss_det(sylvester(f, g)))
}

/// `(−1)^{n(n−1)/2} Res(f, f′) / lc(f)`.
pub fn discriminant<R: Domain>(f: &Poly<R>) -> R {
    let n = f.degree();
    assert!(n >= 1, "discriminant of a constant");
    let r = resultant(f, &f.derivative()).expect("nonzero");
    let r = r.div_exact(&f.lc()).expect("lc divides Res(f, f')");
    if (n * (n - 1) / 2) % 2 == 1 {
        r.neg()
    } else {
        r
    }
}

/// The `f̃` of degree `n/2` with `f(x) = x^{n/2} f̃(x − 1/x)`.
pub fn detilde<R: Ring>(f: &Poly<R>, n: usize) -> Result<Poly<R>> {
    let m = n / 2;
    // x^n f(−1/x) = (−1)^m f(x) for every f of the form x^m f̃(x − 1/x).
    let expected = if m % 2 == 0 { f.clone() } else { f.neg() };
    if n % 2 == 1 || f.degree() > n || f.skew_reverse(n) != expected {
        return Err(Error::NotSkewPalindromic(n));
    }
    let xx_minus_one = Poly::<R>::from_i64s(&[-1, 0, 1]);
    let mut rest = f.clone();
    let mut out = vec![R::zero(); m + 1];
    for k in (0..=m).rev() {
        let c = rest.coeff(m + k);
        if c.is_zero() {
            continue;
        }
        rest = rest.sub(&xx_minus_one.pow(k as u64).shift(m - k).scale(&c));
        out[k] = c;
    }
    if !rest.is_zero() {
        return Err(Error::NotSkewPalindromic(n));
    }
    Ok(Poly::new(out))
}

impl<R: Ring> BiPoly<R> {
    /// Exchanges the two variables.
    pub fn swap_vars(&self) -> Self {
        let inner = self.coeffs().iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
        let mut out = vec![vec![R::zero(); self.coeffs().len()]; inner];
        for (i, p) in self.coeffs().iter().enumerate() {
            for (j, a) in p.coeffs().iter().enumerate() {
                out[j][i] = a.clone();
            }
        }
        Poly::new(out.into_iter().map(Poly::new).collect())
    }

    /// Derivative in the inner variable.
    pub fn derivative_inner(&self) -> Self {
        self.map(|p| p.derivative())
    }

    /// `P(u, v)` at a point of `S`.
    pub fn eval2_in<S: Ring>(&self, u: &S, v: &S, embed: impl Fn(&R) -> S + Copy) -> S {
        let mut acc = S::zero();
        for p in self.coeffs().iter().rev() {
            acc = acc.mul(u).add(&p.eval_in(v, embed));
        }
        acc
    }

    /// Univariate polynomial in the inner variable after fixing the outer one.
    pub fn eval_outer(&self, u: &R) -> Poly<R> {
        let mut acc = Poly::zero();
        for p in self.coeffs().iter().rev() {
            acc = acc.scale(u).add(p);
        }
        acc
    }

    /// `P(a(t), b(t))` for univariate `a`, `b`.
    pub fn substitute(&self, a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
        let mut acc = Poly::zero();
        for p in self.coeffs().iter().rev() {
            acc = acc.mul(a).add(&p.compose(b));
        }
        acc
    }
}

/// Parses integer polynomials written like `x^4+12x^3-12x+1` in variable `var`.
pub fn parse_poly(s: &str, var: char) -> Poly<BigInt> {
    let s: String = s
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '·' && *c != '*')
        .map(|c| if c == '−' { '-' } else { c })
        .collect();
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for ch in s.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('^') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    if !cur.is_empty() {
        terms.push(cur);
    }
    let mut out: Vec<BigInt> = Vec::new();
    for t in terms {
        let (neg, body) = match t.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, t.strip_prefix('+').unwrap_or(&t)),
        };
        let (coef, exp) = match body.find(var) {
            Some(pos) => {
                let c = &body[..pos];
                let c: BigInt = if c.is_empty() { 1.into() } else { c.parse().expect("coefficient") };
                let rest = &body[pos + var.len_utf8()..];
                let e = match rest.strip_prefix('^') {
                    Some(e) => e.parse::<usize>().expect("exponent"),
                    None => {
                        assert!(rest.is_empty(), "bad term {t}");
                        1
                    }
                };
                (c, e)
            }
            None => (body.parse().expect("constant"), 0),
        };
        if out.len() <= exp {
            out.resize(exp + 1, 0.into());
        }
        let coef = if neg { -coef } else { coef };
        out[exp] += coef;
    }
    Poly::new(out)
}

pub fn to_rational(p: &Poly<BigInt>) -> Poly<BigRational> {
    p.map(|a| BigRational::from_integer(a.clone()))
}

impl<R: Ring + fmt::Display> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let s = a.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == "1";
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{mag}x")?,
                _ if unit => write!(f, "x^{i}")?,
                _ => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigint::parse_factored;
    use proptest::prelude::*;

    type Z = Poly<BigInt>;

    fn z(s: &str) -> Z {
        parse_poly(s, 'x')
    }

    #[test]
    fn parser_and_display() {
        let p = z("x^4+12x^3+14x^2-12x+1");
        assert_eq!(p.coeffs().len(), 5);
        assert_eq!(p.to_string(), "x^4 + 12x^3 + 14x^2 - 12x + 1");
        assert_eq!(z("−x+3").to_string(), "-x + 3");
    }

    #[test]
    fn resultant_sign_convention() {
        let r = resultant(&z("x-2"), &z("x-3")).unwrap();
        assert_eq!(r, BigInt::from(-1));
        assert!(matches!(resultant(&Z::zero(), &z("x")), Err(Error::ZeroInput)));
    }

    #[test]
    fn printed_resultant_in_t() {
        let a = parse_poly("-t^3+54t^2-648t", 't');
        let b = parse_poly("-11t^3+469t^2-3128t-8624", 't');
        assert_eq!(resultant(&a, &b).unwrap(), parse_factored("-2^17 7^3 11 13 19 43"));
    }

    #[test]
    fn resultant_over_polynomial_coefficients() {
        // Res_t(z²+4+t(z+11), t²−44t−16) = (z²+22z−4)².
        let f: BiPoly<BigInt> = Poly::new(vec![parse_poly("z^2+4", 'z'), parse_poly("z+11", 'z')]);
        let g: BiPoly<BigInt> = Poly::new(vec![
            Poly::constant((-16).into()),
            Poly::constant((-44).into()),
            Poly::constant(1.into()),
        ]);
        let r = resultant(&f, &g).unwrap();
        assert_eq!(r, parse_poly("z^2+22z-4", 'z').pow(2));
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant(&z("x^2+11x-1")), BigInt::from(125));
        let h24 = z("x^2-4834944x+14670139392");
        assert_eq!(discriminant(&h24), parse_factored("2^19 3^6 13^2 19^2"));
    }

    #[test]
    fn symbolic_discriminant_of_g() {
        // g(x) = x⁴ + a x³ + (11a+2) x² − a x + 1 over ℤ[a].
        let a = Poly::<BigInt>::x();
        let g: BiPoly<BigInt> = Poly::new(vec![
            Poly::one(),
            a.neg(),
            a.scale(&11.into()).add(&Poly::constant(2.into())),
            a.clone(),
            Poly::one(),
        ]);
        let want = parse_poly("a^2-44a-16", 'a').pow(2).mul(&parse_poly("125a^2", 'a'));
        assert_eq!(discriminant(&g), want);
    }

    #[test]
    fn compose_rational_examples() {
        let t = Z::x();
        assert_eq!(t.compose_rational(&z("x^2"), &z("x+1")), z("x^2"));
        let rat_t2 = Poly::<BigRational>::x().pow(2);
        let num = Poly::<BigRational>::x();
        let den = Poly::constant(BigRational::from_integer(2.into()));
        // den²·(x/2)² = x².
        assert_eq!(rat_t2.compose_rational(&num, &den), Poly::<BigRational>::x().pow(2));
    }

    #[test]
    fn detilde_examples() {
        assert_eq!(detilde(&z("x^4+12x^3+14x^2-12x+1"), 4).unwrap(), z("x^2+12x+16"));
        assert_eq!(detilde(&z("x^2+5x-1"), 2).unwrap(), z("x+5"));
        let f11 = z("x^8+32x^7+300x^6+32x^5-8026x^4-32x^3+300x^2-32x+1");
        assert_eq!(detilde(&f11, 8).unwrap(), z("x^4+32x^3+304x^2+128x-7424"));
        assert!(matches!(detilde(&z("x^2+x+1"), 2), Err(Error::NotSkewPalindromic(2))));
    }

    #[test]
    fn remainder_over_polynomial_ring() {
        let t = Poly::<BigInt>::x();
        let c = |n: i64| Poly::<BigInt>::constant(n.into());
        let f: BiPoly<BigInt> = z("x^4+32x^3+304x^2+128x-7424").map(|a| Poly::constant(a.clone()));
        let g: BiPoly<BigInt> = Poly::new(vec![t.scale(&11.into()).add(&c(4)), t.clone(), c(1)]);
        let r = f.rem(&g).unwrap();
        assert_eq!(r.coeff(1), parse_poly("-t^3+54t^2-648t", 't'));
        assert_eq!(r.coeff(0), parse_poly("-11t^3+469t^2-3128t-8624", 't'));
    }

    #[test]
    fn gcd_and_divmod_edge_cases() {
        let f = to_rational(&z("2x^2-2"));
        assert_eq!(f.gcd(&Poly::zero()), to_rational(&z("x^2-1")));
        assert!(matches!(f.div_rem(&Poly::zero()), Err(Error::DivisionByZeroPoly)));
    }

    fn small_poly() -> impl Strategy<Value = Z> {
        prop::collection::vec(-20i64..20, 1..6).prop_map(|c| Z::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn resultant_antisymmetry(f in small_poly(), g in small_poly()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let a = resultant(&f, &g).unwrap();
            let b = resultant(&g, &f).unwrap();
            let sign = if (f.degree() * g.degree()) % 2 == 1 { -1 } else { 1 };
            prop_assert_eq!(a, b * BigInt::from(sign));
        }

        #[test]
        fn resultant_vanishes_mod_p_iff_common_factor(f in small_poly(), g in small_poly(), pi in 0usize..4) {
            let p = [7u64, 11, 13, 17][pi];
            let fp = crate::modpoly::ModPoly::from_bigints(crate::ff::PrimeField::new(p), f.coeffs());
            let gp = crate::modpoly::ModPoly::from_bigints(crate::ff::PrimeField::new(p), g.coeffs());
            // Degrees must survive reduction for the Sylvester matrices to agree.
            prop_assume!(fp.degree() == f.degree() && gp.degree() == g.degree());
            prop_assume!(!f.is_zero() && !g.is_zero());
            let r = resultant(&f, &g).unwrap();
            let vanishes = crate::bigint::mod_u64(&r, p) == 0;
            prop_assert_eq!(vanishes, fp.gcd(&gp).degree() >= 1);
        }

        #[test]
        fn detilde_round_trip(c in prop::collection::vec(-30i64..30, 1..5)) {
            let ft = Z::from_i64s(&c);
            let m = ft.degree();
            // x^m f̃(x − 1/x) = Σ c_k x^{m−k}(x²−1)^k.
            let num = z("x^2-1");
            let den = z("x");
            let f = ft.compose_rational(&num, &den);
            prop_assert_eq!(detilde(&f, 2 * m).unwrap(), ft);
        }

        #[test]
        fn compose_rational_pointwise(fc in prop::collection::vec(-9i64..9, 1..5),
                                      nc in prop::collection::vec(-9i64..9, 1..4),
                                      dc in prop::collection::vec(-9i64..9, 1..4),
                                      x0 in -50i64..50) {
            let f = to_rational(&Z::from_i64s(&fc));
            let num = to_rational(&Z::from_i64s(&nc));
            let den = to_rational(&Z::from_i64s(&dc));
            prop_assume!(!den.is_zero() && !f.is_zero());
            let x = BigRational::from_integer(x0.into());
            let d = den.eval(&x);
            prop_assume!(!Ring::is_zero(&d));
            let lhs = f.compose_rational(&num, &den).eval(&x);
            let rhs = Ring::pow(&d, f.degree() as u64).mul(&f.eval(&num.eval(&x).div_exact(&d).unwrap()));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
