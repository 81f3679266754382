//! Factorization over finite fields: squarefree decomposition, distinct-degree
//! factorization and Cantor–Zassenhaus equal-degree splitting.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ff::{make_extension, ExtField, FiniteField, FqElem, PrimeField};
use crate::modpoly::ModPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct FactorList<F: FiniteField> {
    pub unit: F::Elem,
    /// Monic irreducible factors with multiplicities, canonically ordered.
    pub factors: Vec<(ModPoly<F>, u32)>,
}

impl<F: FiniteField> FactorList<F> {
    pub fn product(&self, f: F) -> ModPoly<F> {
        let mut acc = ModPoly::constant(f, self.unit);
        for (g, e) in &self.factors {
            acc = acc.mul(&g.pow(*e as u64));
        }
        acc
    }

    pub fn of_degree(&self, d: usize) -> impl Iterator<Item = &(ModPoly<F>, u32)> {
        self.factors.iter().filter(move |(g, _)| g.degree() == d)
    }

    pub fn total_degree(&self) -> usize {
        self.factors.iter().map(|(g, e)| g.degree() * *e as usize).sum()
    }
}

/// Seed derived from the characteristic and the coefficients.
fn seed_for<F: FiniteField>(f: &ModPoly<F>) -> u64 {
    let field = f.field();
    let mut h = field.characteristic() ^ 0x9e37_79b9_7f4a_7c15;
    for c in f.coeffs() {
        for x in field.coords(c) {
            h = splitmix(h ^ x);
        }
    }
    h
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Complete factorization of a nonzero polynomial.
pub fn factor_ff<F: FiniteField>(f: &ModPoly<F>) -> FactorList<F> {
    assert!(!f.is_zero(), "factor_ff(0)");
    let field = f.field();
    let unit = f.lc();
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(f));
    let mut factors = Vec::new();
    for (sq, mult) in squarefree_decomposition(&f.monic()) {
        for (block, d) in distinct_degree(&sq) {
            for g in equal_degree(&block, d, &mut rng) {
                factors.push((g, mult));
            }
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let _ = field;
    FactorList { unit, factors }
}

/// `(g_i, i)` with the `g_i` squarefree, pairwise coprime and `f = ∏ g_i^i`.
pub fn squarefree_decomposition<F: FiniteField>(f: &ModPoly<F>) -> Vec<(ModPoly<F>, u32)> {
    let field = f.field();
    let mut out = Vec::new();
    if f.degree() == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_exact(&c).expect("gcd divides");
    let mut i = 1u32;
    while w.degree() > 0 {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y).expect("gcd divides");
        if fac.degree() > 0 {
            out.push((fac.monic(), i));
        }
        c = c.div_exact(&y).expect("gcd divides");
        w = y;
        i += 1;
    }
    if c.degree() > 0 {
        let p = field.characteristic() as usize;
        let root = pth_root_poly(&c, p);
        for (g, e) in squarefree_decomposition(&root) {
            out.push((g, e * p as u32));
        }
    }
    out.sort_by(|a, b| a.1.cmp(&b.1));
    out
}

/// For `c(x) = Σ a_i x^{ip}`, returns `Σ a_i^{1/p} x^i`.
fn pth_root_poly<F: FiniteField>(c: &ModPoly<F>, p: usize) -> ModPoly<F> {
    let field = c.field();
    let exp = field.order() / p as u128;
    let coeffs = c
        .coeffs()
        .iter()
        .step_by(p)
        .map(|a| field.pow(a, exp))
        .collect();
    ModPoly::new(field, coeffs)
}

/// Splits a monic squarefree `f` into `(product of all degree-d factors, d)`.
pub fn distinct_degree<F: FiniteField>(f: &ModPoly<F>) -> Vec<(ModPoly<F>, usize)> {
    let field = f.field();
    let q = field.order();
    let x = ModPoly::x(field);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut d = 0;
    while rest.degree() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(q, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.degree() > 0 {
            rest = rest.div_exact(&g).expect("gcd divides");
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if rest.degree() > 0 {
        let d = rest.degree();
        out.push((rest, d));
    }
    out
}

/// Cantor–Zassenhaus splitting of a monic squarefree product of degree-`d` irreducibles.
pub fn equal_degree<F: FiniteField>(f: &ModPoly<F>, d: usize, rng: &mut ChaCha8Rng) -> Vec<ModPoly<F>> {
    let n = f.degree();
    if n == d {
        return vec![f.clone()];
    }
    let field = f.field();
    let q = field.order();
    loop {
        let a = ModPoly::new(field, (0..n).map(|_| field.random(rng)).collect());
        if a.degree() == 0 {
            continue;
        }
        // a^{(q^d − 1)/2} = (a · a^q ⋯ a^{q^{d−1}})^{(q−1)/2}.
        let mut norm = a.rem(f);
        let mut conj = norm.clone();
        for _ in 1..d {
            conj = conj.pow_mod(q, f);
            norm = norm.mul_mod(&conj, f);
        }
        let b = norm.pow_mod((q - 1) / 2, f);
        let g = f.gcd(&b.sub(&ModPoly::one(field)));
        if g.degree() > 0 && g.degree() < n {
            let h = f.div_exact(&g).expect("gcd divides").monic();
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h, d, rng));
            return out;
        }
    }
}

/// Roots in `F` of a polynomial over `F`, each once with its multiplicity.
pub fn roots<F: FiniteField>(f: &ModPoly<F>) -> Vec<(F::Elem, u32)> {
    let field = f.field();
    let q = field.order();
    let x = ModPoly::x(field);
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(f));
    let mut out = Vec::new();
    for (g, e) in squarefree_decomposition(&f.monic()) {
        let lin = g.gcd(&x.pow_mod(q, &g).sub(&x));
        if lin.degree() == 0 {
            continue;
        }
        for r in equal_degree(&lin, 1, &mut rng) {
            out.push((field.neg(&r.coeff(0)), e));
        }
    }
    out.sort_by(|a, b| field.coords(&a.0).cmp(&field.coords(&b.0)));
    out
}

/// Roots lying in `F_{l^k}` of a polynomial over `F_l`.
pub fn roots_in(f: &ModPoly<PrimeField>, k: u32) -> (ExtField, Vec<(FqElem, u32)>) {
    let e = make_extension(f.p(), k);
    let lifted = f.map_into(e, |&a| e.embed(a));
    (e, roots(&lifted))
}

/// Certificate that `g` of degree `d` is irreducible: `gcd(g, x^{q^j} − x) = 1`
/// for `j < d` and `g | x^{q^d} − x`.
pub fn irreducibility_certificate<F: FiniteField>(g: &ModPoly<F>) -> bool {
    let field = g.field();
    let d = g.degree();
    if d == 0 {
        return false;
    }
    let m = g.monic();
    let x = ModPoly::x(field);
    let mut h = x.rem(&m);
    for j in 1..=d {
        h = h.pow_mod(field.order(), &m);
        let trivial = m.gcd(&h.sub(&x)).degree() == 0;
        if j < d && !trivial {
            return false;
        }
        if j == d && h != x.rem(&m) {
            return false;
        }
    }
    true
}
