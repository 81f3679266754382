//! The icosahedral group `G₆₀ = ⟨S, T⟩` of Möbius maps over ℚ(ζ), the
//! resolvent and τ-covariance identities for `g(x)` and `k(x)`, the resultants
//! `R_{M₁,M₂}` and `R̄_{M₁,M₂}` with their factorizations, and the orbit
//! property of the roots of `G(x⁵, j)`.

use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cyclo::CycNum;
use crate::error::{Error, Result};
use crate::ff::{golden_units, make_extension, sqrt_ff, ExtField, FiniteField, FqElem};
use crate::poly::{bareiss_det, parse_poly, resultant, Poly};
use crate::quad::Quadratic;
use crate::ring::{rat, Field, Ring};

pub type CycPoly = Poly<CycNum>;
type Q5 = Quadratic<BigRational, 5>;

/// `x ↦ (ax + b)/(cx + d)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MobiusMap {
    pub a: CycNum,
    pub b: CycNum,
    pub c: CycNum,
    pub d: CycNum,
}

impl MobiusMap {
    pub fn new(a: CycNum, b: CycNum, c: CycNum, d: CycNum) -> Self {
        let m = Self { a, b, c, d };
        assert!(!m.det().is_zero(), "singular Möbius map");
        m
    }

    pub fn identity() -> Self {
        Self::new(CycNum::one(), CycNum::zero(), CycNum::zero(), CycNum::one())
    }

    /// `S(x) = ζx`.
    pub fn s() -> Self {
        Self::new(CycNum::zeta(), CycNum::zero(), CycNum::zero(), CycNum::one())
    }

    /// `T(x) = (−(1+√5)x + 2)/(2x + 1 + √5)`, with the matrix scaled by ½ so
    /// that the resultants carry the constants `5¹⁵`, `5¹⁵ε²⁵`.
    pub fn t() -> Self {
        let w = CycNum::one().add(&CycNum::sqrt5()).scale(&rat(1, 2));
        Self::new(w.neg(), CycNum::one(), CycNum::one(), w)
    }

    /// `U(x) = −1/x`.
    pub fn u() -> Self {
        Self::new(CycNum::zero(), CycNum::from_i64(-1), CycNum::one(), CycNum::zero())
    }

    /// `A(x) = ζ³((1+ζ)x + 1)/(x − 1 − ζ⁴)`.
    pub fn a_map() -> Self {
        let z3 = CycNum::zeta_pow(3);
        Self::new(
            z3.mul(&CycNum::one().add(&CycNum::zeta())),
            z3,
            CycNum::one(),
            CycNum::one().add(&CycNum::zeta_pow(4)).neg(),
        )
    }

    /// `T₂ = TU`.
    pub fn t2() -> Self {
        Self::t().compose(&Self::u())
    }

    pub fn det(&self) -> CycNum {
        self.a.mul(&self.d).sub(&self.b.mul(&self.c))
    }

    /// `self ∘ o` as a matrix product, without normalizing.
    pub fn compose(&self, o: &Self) -> Self {
        Self {
            a: self.a.mul(&o.a).add(&self.b.mul(&o.c)),
            b: self.a.mul(&o.b).add(&self.b.mul(&o.d)),
            c: self.c.mul(&o.a).add(&self.d.mul(&o.c)),
            d: self.c.mul(&o.b).add(&self.d.mul(&o.d)),
        }
    }

    /// The adjugate, which represents the inverse map.
    pub fn inverse(&self) -> Self {
        Self { a: self.d.clone(), b: self.b.neg(), c: self.c.neg(), d: self.a.clone() }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    /// Scaled so that the first nonzero entry of `(a, b, c, d)` is 1.
    pub fn normalized(&self) -> Self {
        let lead = [&self.a, &self.b, &self.c, &self.d]
            .into_iter()
            .find(|e| !e.is_zero())
            .expect("nonzero matrix")
            .inv()
            .expect("nonzero");
        Self {
            a: self.a.mul(&lead),
            b: self.b.mul(&lead),
            c: self.c.mul(&lead),
            d: self.d.mul(&lead),
        }
    }

    /// Equality as maps of the projective line.
    pub fn same_map(&self, o: &Self) -> bool {
        self.normalized() == o.normalized()
    }

    pub fn scale(&self, l: &CycNum) -> Self {
        Self { a: self.a.mul(l), b: self.b.mul(l), c: self.c.mul(l), d: self.d.mul(l) }
    }

    pub fn sigma(&self, k: u32) -> Self {
        Self { a: self.a.sigma(k), b: self.b.sigma(k), c: self.c.sigma(k), d: self.d.sigma(k) }
    }

    /// The entries reduced into a finite field under `ζ ↦ z`.
    pub fn reduce<F: FiniteField>(&self, f: &F, z: &F::Elem) -> Option<[F::Elem; 4]> {
        Some([self.a.reduce(f, z)?, self.b.reduce(f, z)?, self.c.reduce(f, z)?, self.d.reduce(f, z)?])
    }
}

/// All elements generated by `gens`, in normal form, by breadth-first closure.
pub fn closure(gens: &[MobiusMap]) -> Vec<MobiusMap> {
    let id = MobiusMap::identity().normalized();
    let mut seen: HashSet<MobiusMap> = HashSet::from([id.clone()]);
    let mut order = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        for g in gens {
            let n = m.compose(g).normalized();
            if seen.insert(n.clone()) {
                order.push(n.clone());
                queue.push_back(n);
            }
        }
    }
    order
}

/// `G₆₀ = ⟨S, T⟩`.
pub fn g60() -> &'static [MobiusMap] {
    static G: OnceLock<Vec<MobiusMap>> = OnceLock::new();
    G.get_or_init(|| closure(&[MobiusMap::s(), MobiusMap::t()]))
}

/// `ν = (1−ζ)(1+√5)/2`, with `ν² = ζ⁻² det A = ζ⁻⁴ det T`.
pub fn rep_scale() -> CycNum {
    CycNum::one().sub(&CycNum::zeta()).mul(&CycNum::eps_bar().neg())
}

/// `TⁱAᵏ` for `i < 2`, `k < 3`, scaled by `1`, `ν⁻¹` (`TA`), `−ν⁻¹` (`A²`) or
/// `(ν²φ)⁻¹` (`TA²`) with `φ = (1+√5)/2`. A Möbius map only fixes its matrix up
/// to `λ`, which moves `R_{M₁,M₂}` by `λ²⁵`; these scales give the stated
/// constants.
pub fn coset_rep(i: u32, k: u32) -> MobiusMap {
    assert!(i < 2 && k < 3, "coset representatives are TⁱAᵏ with i < 2, k < 3");
    let nu = rep_scale();
    let phi = CycNum::eps_bar().neg();
    let s = match (i, k) {
        (1, 1) => nu.clone(),
        (0, 2) => nu.neg(),
        (1, 2) => nu.pow(2).mul(&phi),
        _ => CycNum::one(),
    };
    let m = MobiusMap::t().pow(i).compose(&MobiusMap::a_map().pow(k));
    m.scale(&s.inv().expect("nonzero scale"))
}

/// Checks the relations and coset claims for `S, T, U, A`; the error names the
/// first relation that fails.
pub fn verify_group_relations() -> Result<()> {
    let (s, t, u, a) = (MobiusMap::s(), MobiusMap::t(), MobiusMap::u(), MobiusMap::a_map());
    let t2 = MobiusMap::t2();
    let id = MobiusMap::identity();
    let ai = a.inverse();
    let check = |name: &str, ok: bool| if ok { Ok(()) } else { Err(Error::RelationFailure(name.to_string())) };

    check("S^5 = 1", s.pow(5).same_map(&id))?;
    check("T^2 = 1", t.pow(2).same_map(&id))?;
    check("U^2 = 1", u.pow(2).same_map(&id))?;
    check("A^3 = 1", a.pow(3).same_map(&id))?;
    check("A = S T S^-2", a.same_map(&s.compose(&t).compose(&s.inverse().pow(2))))?;
    check("A^σ = A^-1 U", a.sigma(2).same_map(&ai.compose(&u)))?;
    check("A T A^-1 = U", a.compose(&t).compose(&ai).same_map(&u))?;
    check("A U A^-1 = TU", a.compose(&u).compose(&ai).same_map(&t2))?;
    check("TU = UT", t2.same_map(&u.compose(&t)))?;
    check("AU = UTA", a.compose(&u).same_map(&u.compose(&t).compose(&a)))?;
    check("AT = UA", a.compose(&t).same_map(&u.compose(&a)))?;
    check("A T2 = AUT", a.compose(&t2).same_map(&a.compose(&u).compose(&t)))?;
    check("AUT = TA", a.compose(&u).compose(&t).same_map(&t.compose(&a)))?;

    let g = g60();
    check("|<S,T>| = 60", g.len() == 60)?;
    let g10 = closure(&[s.clone(), u.clone()]);
    check("|<S,U>| = 10", g10.len() == 10)?;
    check("<S,U> inside <S,T>", g10.iter().all(|m| g.contains(m)))?;

    let h = closure(&[t.clone(), u.clone()]);
    let klein = h.len() == 4
        && [&id, &t, &u, &t2].iter().all(|m| h.contains(&m.normalized()))
        && h.iter().all(|m| m.pow(2).same_map(&id));
    check("H = {1, T, U, T2} is a Klein 4-group", klein)?;
    let a4 = closure(&[t.clone(), u.clone(), a.clone()]);
    let normal = h.iter().all(|m| h.contains(&a.compose(m).compose(&ai).normalized()));
    check("<H, A> has order 12 with H normal", a4.len() == 12 && normal)?;

    let mut left = HashSet::new();
    for i in 0..5 {
        for k in 0..3 {
            let rep = s.pow(i).compose(&a.pow(k));
            for m in &h {
                left.insert(rep.compose(m).normalized());
            }
        }
    }
    check("S^i A^k represent the left cosets of H", left.len() == 60)?;

    let mut right = HashSet::new();
    for i in 0..2 {
        for k in 0..3 {
            let rep = coset_rep(i, k);
            for m in &g10 {
                right.insert(m.compose(&rep).normalized());
            }
        }
    }
    check("T^i A^k represent the right cosets of G10", right.len() == 60)?;
    Ok(())
}

fn q5(a: i64, b: i64, d: i64) -> Q5 {
    Q5::new(rat(a, d), rat(b, d))
}

/// `g(x) = x⁴ + ax³ + (11a+2)x² − ax + 1` with `a` an indeterminate.
fn g_generic() -> Poly<Poly<Q5>> {
    let c = |k: i64, m: i64| Poly::<Q5>::from_i64s(&[k, m]);
    Poly::new(vec![c(1, 0), c(0, -1), c(2, 11), c(0, 1), c(1, 0)])
}

/// The three cubic-resolvent roots `Θ₁, Θ₂, Θ₃` as polynomials in `a`.
pub fn thetas() -> [Poly<Q5>; 3] {
    let eps5 = q5(-11, 5, 2);
    let epsb5 = q5(-11, -5, 2);
    let quarter = q5(1, 0, 4);
    let a = Poly::<Q5>::x();
    let t1 = Poly::new(vec![q5(-16, 0, 1), q5(-44, 0, 1), q5(1, 0, 1)]).scale(&quarter).neg();
    let t2 = a.mul(&Poly::new(vec![epsb5, quarter.clone()])).neg();
    let t3 = a.mul(&Poly::new(vec![eps5, quarter])).neg();
    [t1, t2, t3]
}

/// `Θ₂Θ₃ = (a²/16)(a²−44a−16) = −(a²/4)Θ₁`, and the `−Θᵢ` are the roots of
/// the cubic resolvent `z³ + 2pz² + (p²−4r)z − q²` of `g(y − a/4) = y⁴+py²+qy+r`.
pub fn resolvent_symbolic() -> bool {
    let [t1, t2, t3] = thetas();
    let a = Poly::<Q5>::x();
    let a2 = a.mul(&a);
    let disc = Poly::new(vec![q5(-16, 0, 1), q5(-44, 0, 1), q5(1, 0, 1)]);
    let prod = t2.mul(&t3);
    let ok_product = prod == a2.mul(&disc).scale(&q5(1, 0, 16)) && prod == a2.mul(&t1).scale(&q5(-1, 0, 4));

    let shift = Poly::new(vec![a.scale(&q5(-1, 0, 4)), Poly::constant(Q5::one())]);
    let dep = g_generic().compose(&shift);
    let (p, q, r) = (dep.coeff(2), dep.coeff(1), dep.coeff(0));
    let th = [t1.neg(), t2.neg(), t3.neg()];
    let e1 = th[0].add(&th[1]).add(&th[2]);
    let e2 = th[0].mul(&th[1]).add(&th[0].mul(&th[2])).add(&th[1].mul(&th[2]));
    let e3 = th[0].mul(&th[1]).mul(&th[2]);
    let ok_resolvent = dep.coeff(3).is_zero()
        && e1 == p.scale(&q5(-2, 0, 1))
        && e2 == p.mul(&p).sub(&r.scale(&q5(4, 0, 1)))
        && e3 == q.mul(&q);
    ok_product && ok_resolvent
}

/// Samples `a ∈ F_l` (starting with `a = 0`), rebuilds `ρ₁..ρ₄` in `F_{l²}` from
/// the formulas for the roots of `g`, and checks that they are roots, the four
/// pairings with `ε⁵` and `ε̄⁵`, and `ρ₃ = −1/ρ₁`, `ρ₄ = −1/ρ₂`. The sign of
/// `√−Θ₃` is fixed by `√−Θ₁·√−Θ₂·√−Θ₃ = q`, the linear coefficient of `g(y − a/4)`.
pub fn resolvent_identities(l: u64, trials: usize) -> Result<bool> {
    let gp = golden_units(l)?;
    let e = make_extension(l, 2);
    let eps5 = e.embed(gp.eps5);
    let epsb5 = e.embed(gp.eps5bar);
    let mut rng = ChaCha8Rng::seed_from_u64(l ^ 0x7265_736f);
    let quarter = e.inv(&e.from_u64(4)).expect("l odd");
    let half = e.inv(&e.from_u64(2)).expect("l odd");
    for trial in 0..trials {
        let a = if trial == 0 { e.zero() } else { e.embed(rand::Rng::gen_range(&mut rng, 0..l)) };
        let a4 = e.mul(&a, &quarter);
        let a2 = e.mul(&a, &a);
        let t1 = e.neg(&e.mul(&quarter, &e.sub(&e.sub(&a2, &e.mul(&e.from_u64(44), &a)), &e.from_u64(16))));
        let t2 = e.neg(&e.mul(&a, &e.add(&a4, &epsb5)));
        let t3 = e.neg(&e.mul(&a, &e.add(&a4, &eps5)));
        let g = |x: &FqElem| {
            let c2 = e.add(&e.mul(&e.from_u64(11), &a), &e.from_u64(2));
            let coeffs = [e.one(), e.neg(&a), c2, a, e.one()];
            coeffs.iter().rev().fold(e.zero(), |acc, c| e.add(&e.mul(&acc, x), c))
        };
        // q = g'(−a/4) is the linear coefficient of g(y − a/4).
        let q = {
            let x = e.neg(&a4);
            let c2 = e.add(&e.mul(&e.from_u64(11), &a), &e.from_u64(2));
            let d = [e.neg(&a), e.mul(&e.from_u64(2), &c2), e.mul(&e.from_u64(3), &a), e.from_u64(4)];
            d.iter().rev().fold(e.zero(), |acc, c| e.add(&e.mul(&acc, &x), c))
        };
        let s1 = sqrt_ff(&e, &e.neg(&t1)).expect("F_l elements are squares in F_{l^2}");
        let s2 = sqrt_ff(&e, &e.neg(&t2)).expect("F_l elements are squares in F_{l^2}");
        let s12 = e.mul(&s1, &s2);
        let s3 = match e.inv(&s12) {
            Some(inv) => e.mul(&q, &inv),
            None => sqrt_ff(&e, &e.neg(&t3)).expect("square"),
        };
        if e.mul(&s3, &s3) != e.neg(&t3) || e.mul(&s12, &s3) != q {
            return Ok(false);
        }
        let rho = |c1: i64, c2: i64, c3: i64| {
            let sum = [(c1, s1), (c2, s2), (c3, s3)]
                .iter()
                .fold(e.zero(), |acc, (c, s)| if *c > 0 { e.add(&acc, s) } else { e.sub(&acc, s) });
            e.add(&e.neg(&a4), &e.mul(&half, &sum))
        };
        let r1 = rho(-1, 1, 1);
        let r2 = rho(1, 1, -1);
        let r3 = rho(-1, -1, -1);
        let r4 = rho(1, -1, 1);
        if [r1, r2, r3, r4].iter().any(|r| !e.is_zero(&g(r))) {
            return Ok(false);
        }
        let pairing = |x: &FqElem, y: &FqElem, u: &FqElem| {
            e.neg(&e.add(x, y)) == e.mul(u, &e.sub(&e.mul(x, y), &e.one()))
        };
        let inv_neg = |x: &FqElem| e.neg(&e.inv(x).expect("g(0) = 1"));
        if !(pairing(&r1, &r4, &eps5)
            && pairing(&r2, &r3, &eps5)
            && pairing(&r1, &r2, &epsb5)
            && pairing(&r3, &r4, &epsb5)
            && r3 == inv_neg(&r1)
            && r4 == inv_neg(&r2))
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(ε⁵x+1)⁴ g(τ(x)) = 5³ε¹⁰ g(x)` in `a, x`; `(ε⁵x+1)² k(τ(x)) = 5√5 ε⁵ k(x)`
/// with `r = ε⁵(s−1)` in `s, x`; and `τ` fixes the roots of `x² + (11+5√5)x − 1`.
pub fn tau_covariance() -> bool {
    let eps5 = q5(-11, 5, 2);
    let lift = |c: Q5| Poly::constant(c);
    let num = Poly::new(vec![lift(eps5.clone()), lift(q5(-1, 0, 1))]);
    let den = Poly::new(vec![lift(Q5::one()), lift(eps5.clone())]);

    let g = g_generic();
    let eq7 = g.compose_rational(&num, &den) == g.scale(&lift(q5(125, 0, 1).mul(&eps5.mul(&eps5))));

    let s = Poly::<Q5>::x();
    let r = s.sub(&Poly::constant(Q5::one())).scale(&eps5);
    let k = Poly::new(vec![s, r, Poly::constant(Q5::one())]);
    let eq9 = k.compose_rational(&num, &den) == k.scale(&lift(q5(0, 5, 1).mul(&eps5)));

    // τ(x) = x  ⇔  ε⁵x² + 2x − ε⁵ = 0.
    let fixed = Poly::new(vec![eps5.neg(), q5(2, 0, 1), eps5.clone()]);
    let k0 = Poly::new(vec![q5(-1, 0, 1), q5(11, 5, 1), Q5::one()]);
    let fixed_points = fixed == k0.scale(&eps5);

    eq7 && eq9 && fixed_points
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Eps,
    EpsBar,
}

fn lin(m: &MobiusMap) -> (CycPoly, CycPoly) {
    (Poly::new(vec![m.b.clone(), m.a.clone()]), Poly::new(vec![m.d.clone(), m.c.clone()]))
}

fn golden(variant: Variant) -> (CycNum, CycNum) {
    let eps5 = CycNum::eps().pow(5);
    let u = match variant {
        Variant::Eps => eps5.clone(),
        Variant::EpsBar => CycNum::eps_bar().pow(5),
    };
    (eps5, u)
}

/// The two arguments of the resultant as polynomials in `y` over `ℚ(ζ)[x]`.
fn resultant_inputs(m1: &MobiusMap, m2: &MobiusMap, variant: Variant) -> (Poly<CycPoly>, Poly<CycPoly>) {
    let (eps5, u) = golden(variant);
    let x5 = Poly::monomial(CycNum::one(), 5);
    let mut f = vec![CycPoly::zero(); 6];
    f[0] = x5.sub(&Poly::constant(eps5.clone()));
    f[5] = x5.scale(&eps5).add(&Poly::constant(CycNum::one()));

    let (n1, d1) = lin(m1);
    let (n1, d1) = (n1.pow(5), d1.pow(5));
    let (n2, d2) = lin(m2);
    let (n2, d2) = (n2.pow(5), d2.pow(5));
    let g = (0..=5)
        .map(|k| {
            let (nk, dk) = (n2.coeff(k), d2.coeff(k));
            let t = n1.scale(&dk).add(&d1.scale(&nk));
            let v = d1.scale(&dk).sub(&n1.scale(&nk));
            t.sub(&v.scale(&u))
        })
        .collect();
    (Poly::new(f), Poly::new(g))
}

/// `Res_y(x⁵+y⁵−ε⁵(1−x⁵y⁵), (c₁x+d₁)⁵(c₂y+d₂)⁵(M₁(x)⁵+M₂(y)⁵−u(1−M₁(x)⁵M₂(y)⁵)))`
/// with `u = ε⁵` for `Variant::Eps` and `u = ε̄⁵` for `Variant::EpsBar`.
///
/// Evaluates the 10×10 Sylvester determinant at `x = 0, …, 75` and
/// interpolates; the `x`-degree is at most `5·5 + 10·5 = 75`.
pub fn icosa_resultant(m1: &MobiusMap, m2: &MobiusMap, variant: Variant) -> CycPoly {
    const DEGREE_BOUND: i64 = 75;
    let (f, g) = resultant_inputs(m1, m2, variant);
    let values: Vec<CycNum> = (0..=DEGREE_BOUND)
        .map(|x0| {
            let x0 = CycNum::from_i64(x0);
            let fy: Vec<CycNum> = (0..=5).map(|k| f.coeff(k).eval(&x0)).collect();
            let gy: Vec<CycNum> = (0..=5).map(|k| g.coeff(k).eval(&x0)).collect();
            bareiss_det(sylvester_fixed(&fy, &gy))
        })
        .collect();
    interpolate_at_naturals(&values)
}

/// The same resultant by fraction-free elimination over `ℚ(ζ)[x]`.
pub fn icosa_resultant_direct(m1: &MobiusMap, m2: &MobiusMap, variant: Variant) -> CycPoly {
    let (f, g) = resultant_inputs(m1, m2, variant);
    resultant(&f, &g).expect("nonzero inputs")
}

/// Sylvester matrix of two polynomials of formal degree `len − 1`, given by
/// ascending coefficient lists, with the rows of `f` first.
fn sylvester_fixed<R: Ring>(f: &[R], g: &[R]) -> Vec<Vec<R>> {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let mut rows = Vec::with_capacity(m + n);
    for (src, count, deg) in [(f, n, m), (g, m, n)] {
        for i in 0..count {
            let mut row = vec![R::zero(); m + n];
            for k in 0..=deg {
                row[i + k] = src[deg - k].clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// The polynomial of degree `< values.len()` taking `values[i]` at `x = i`
/// (Newton divided differences).
fn interpolate_at_naturals(values: &[CycNum]) -> CycPoly {
    let n = values.len();
    let mut coef = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            coef[i] = coef[i].sub(&coef[i - 1]).scale(&rat(1, level as i64));
        }
    }
    let mut acc = CycPoly::zero();
    for i in (0..n).rev() {
        // acc = acc·(x − i) + coef[i]
        let shifted = acc.shift(1).sub(&acc.scale(&CycNum::from_i64(i as i64)));
        acc = shifted.add(&CycPoly::constant(coef[i].clone()));
    }
    acc
}

/// `∏_{k=1}^{4} σ_k(P)`, which has rational coefficients.
pub fn norm_to_q(p: &CycPoly) -> Poly<BigRational> {
    let n = (1..=4).fold(CycPoly::constant(CycNum::one()), |acc, k| acc.mul(&p.map(|c| c.sigma(k))));
    n.map(|c| c.to_rational().expect("norm has rational coefficients"))
}

/// The printed factors of `R_{T,T}`: `x`, `x² + x − 1`, then `p₄, p₁₁, p₁₆, p₁₉, p₆₄, p₉₉, p₈₄`.
pub const R_TT_FACTORS: [&str; 9] = [
    "x",
    "x^2+x-1",
    "x^2+1",
    "x^4-x^3+x^2+x+1",
    "x^4-2x^3+2x+1",
    "x^4+x^3+3x^2-x+1",
    "x^8+4x^7+10x^6+8x^5+12x^4-8x^3+10x^2-4x+1",
    "x^8+7x^7+15x^6+15x^5+16x^4-15x^3+15x^2-7x+1",
    "x^16+2x^15-4x^14-12x^13+25x^12-18x^11+68x^10-112x^9+13x^8+112x^7+68x^6+18x^5+25x^4+12x^3-4x^2-2x+1",
];

/// The printed factors `p₄, p₂₄, p₃₆, p₅₁, p₉₁, p₉₆` of `R_{T,TA²}`.
pub const R_TTA2_FACTORS: [&str; 6] = [
    "x^2+1",
    "x^8-2x^7+x^6-4x^5+3x^4+4x^3+x^2+2x+1",
    "x^8+x^6-6x^5+9x^4+6x^3+x^2+1",
    "x^8+x^7+x^6-7x^5+12x^4+7x^3+x^2-x+1",
    "x^8+4x^7-x^6-14x^5+23x^4+14x^3-x^2-4x+1",
    "x^16+4x^15+29x^12-24x^11+86x^10-32x^9+105x^8+32x^7+86x^6+24x^5+29x^4-4x+1",
];

/// The two quartics of `N(R_{A,A})` that divide `x¹⁰ + 11x⁵ − 1`.
pub const R_AA_QUARTICS: [&str; 2] = ["x^4-3x^3+4x^2-2x+1", "x^4+2x^3+4x^2+3x+1"];

pub const FIRST_SET: [u32; 7] = [4, 11, 16, 19, 64, 99, 84];
pub const SECOND_SET: [u32; 6] = [4, 24, 36, 51, 91, 96];

/// `p_d` as read from the two printed factorizations.
pub fn p_d(d: u32) -> Poly<BigInt> {
    let s = match d {
        4 => R_TT_FACTORS[2],
        11 => R_TT_FACTORS[3],
        16 => R_TT_FACTORS[4],
        19 => R_TT_FACTORS[5],
        64 => R_TT_FACTORS[6],
        99 => R_TT_FACTORS[7],
        84 => R_TT_FACTORS[8],
        24 => R_TTA2_FACTORS[1],
        36 => R_TTA2_FACTORS[2],
        51 => R_TTA2_FACTORS[3],
        91 => R_TTA2_FACTORS[4],
        96 => R_TTA2_FACTORS[5],
        _ => panic!("no printed p_d for d = {d}"),
    };
    parse_poly(s, 'x')
}

/// `q_d(x) = ∏_{i=1}^{4} p_d(ζⁱx)`.
pub fn q_small(d: u32) -> Poly<BigInt> {
    let p = to_cyc(&p_d(d));
    let prod = (1..=4).fold(CycPoly::constant(CycNum::one()), |acc, i| {
        let zi = CycNum::zeta_pow(i);
        let twisted = Poly::new(p.coeffs().iter().enumerate().map(|(k, c)| c.mul(&zi.pow(k as u64))).collect());
        acc.mul(&twisted)
    });
    prod.map(|c| c.to_rational().expect("rational").to_integer())
}

pub fn to_cyc(p: &Poly<BigInt>) -> CycPoly {
    p.map(CycNum::from_bigint)
}

fn product_of(strs: &[&str]) -> Poly<BigInt> {
    strs.iter().fold(Poly::constant(BigInt::from(1)), |acc, s| acc.mul(&parse_poly(s, 'x')))
}

fn pow5(e: u32) -> BigInt {
    BigInt::from(5).pow(e)
}

/// `5¹⁵ x(x²+x−1) p₄p₁₁p₁₆p₁₉p₆₄p₉₉p₈₄` as printed.
pub fn printed_r_tt() -> CycPoly {
    to_cyc(&product_of(&R_TT_FACTORS).scale(&pow5(15)))
}

/// `5¹⁵ ε²⁵ p₄p₂₄p₃₆p₅₁p₉₁p₉₆` as printed.
pub fn printed_r_t_ta2() -> CycPoly {
    to_cyc(&product_of(&R_TTA2_FACTORS).scale(&pow5(15))).scale(&CycNum::eps().pow(25))
}

/// `−5¹⁵ ε̄²⁵ p₄p₂₄p₃₆p₅₁p₉₁p₉₆` as printed.
pub fn printed_rbar_tt() -> CycPoly {
    to_cyc(&product_of(&R_TTA2_FACTORS).scale(&pow5(15))).scale(&CycNum::eps_bar().pow(25).neg())
}

/// `5⁶⁰ x⁴ (quartic)(quartic) q₄q₁₁q₁₆q₁₉q₆₄q₈₄q₉₉` as printed.
pub fn printed_norm_r_aa() -> Poly<BigInt> {
    FIRST_SET
        .iter()
        .fold(product_of(&R_AA_QUARTICS).shift(4).scale(&pow5(60)), |acc, &d| acc.mul(&q_small(d)))
}

/// `5⁶⁰ q₄q₂₄q₃₆q₅₁q₉₁q₉₆` as printed.
pub fn printed_norm_r_a_ta2() -> Poly<BigInt> {
    SECOND_SET.iter().fold(Poly::constant(pow5(60)), |acc, &d| acc.mul(&q_small(d)))
}

/// Labels `T, A, TA, A2, TA2` for the coset representatives `TⁱAᵏ ≠ 1`.
pub const REPS: [(&str, u32, u32); 5] = [("T", 1, 0), ("A", 0, 1), ("TA", 1, 1), ("A2", 0, 2), ("TA2", 1, 2)];

fn rep(label: &str) -> MobiusMap {
    let (_, i, k) = REPS.iter().find(|r| r.0 == label).expect("known label");
    coset_rep(*i, *k)
}

/// All `R` and `R̄` for unordered pairs of coset representatives.
pub struct ResultantTable {
    pub entries: Vec<((&'static str, &'static str, Variant), CycPoly)>,
}

impl ResultantTable {
    pub fn get(&self, m1: &str, m2: &str, v: Variant) -> &CycPoly {
        &self.entries.iter().find(|((a, b, w), _)| *a == m1 && *b == m2 && *w == v).expect("computed pair").1
    }

    pub fn norm(&self, m1: &str, m2: &str, v: Variant) -> Poly<BigRational> {
        norm_to_q(self.get(m1, m2, v))
    }
}

/// Computes the 30 resultants in parallel; cached for the process.
pub fn resultant_table() -> &'static ResultantTable {
    static TABLE: OnceLock<ResultantTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut jobs = Vec::new();
        for (i, r1) in REPS.iter().enumerate() {
            for r2 in &REPS[i..] {
                for v in [Variant::Eps, Variant::EpsBar] {
                    jobs.push((r1.0, r2.0, v));
                }
            }
        }
        let entries = jobs
            .into_par_iter()
            .map(|(a, b, v)| ((a, b, v), icosa_resultant(&rep(a), &rep(b), v)))
            .collect();
        ResultantTable { entries }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerLine {
    pub claim: &'static str,
    pub holds: bool,
}

fn q_of(p: &Poly<BigInt>) -> Poly<BigRational> {
    p.map(|c| BigRational::from_integer(c.clone()))
}

/// The printed factorizations of `R_{T,T}`, `R_{T,TA²}`, `R̄_{T,T}` and the norms,
/// together with every stated coincidence among the remaining pairs.
pub fn section6_ledger() -> Vec<LedgerLine> {
    use Variant::{Eps, EpsBar};
    let t = resultant_table();
    let n_aa = q_of(&printed_norm_r_aa());
    let n_ata2 = q_of(&printed_norm_r_a_ta2());
    let r_tt = t.get("T", "T", Eps);
    let line = |claim, holds| LedgerLine { claim, holds };
    vec![
        line("R_{T,T} = 5^15 x(x^2+x-1) p4 p11 p16 p19 p64 p99 p84", *r_tt == printed_r_tt()),
        line("R_{T,A} = R_{T,T}", t.get("T", "A", Eps) == r_tt),
        line("R_{T,TA} = R_{T,T}", t.get("T", "TA", Eps) == r_tt),
        line("R_{T,A2} = R_{T,T}", t.get("T", "A2", Eps) == r_tt),
        line("R_{T,TA2} = 5^15 eps^25 p4 p24 p36 p51 p91 p96", *t.get("T", "TA2", Eps) == printed_r_t_ta2()),
        line("N(R_{A,A}) = 5^60 x^4 (quartics) q4 q11 q16 q19 q64 q84 q99", t.norm("A", "A", Eps) == n_aa),
        line("N(R_{A2,A2}) = N(R_{A,A})", t.norm("A2", "A2", Eps) == n_aa),
        line("N(R_{TA,TA}) = N(R_{A,A})", t.norm("TA", "TA", Eps) == n_aa),
        line("N(R_{TA2,TA2}) = N(R_{A,A})", t.norm("TA2", "TA2", Eps) == n_aa),
        line("N(R_{A,TA}) = N(R_{A,A})", t.norm("A", "TA", Eps) == n_aa),
        line("N(R_{A,A2}) = N(R_{A,A})", t.norm("A", "A2", Eps) == n_aa),
        line("N(R_{A2,TA}) = N(R_{A,A})", t.norm("TA", "A2", Eps) == n_aa),
        line("N(R_{A,TA2}) = 5^60 q4 q24 q36 q51 q91 q96", t.norm("A", "TA2", Eps) == n_ata2),
        line("N(R_{A2,TA2}) = N(R_{A,TA2})", t.norm("A2", "TA2", Eps) == n_ata2),
        line("N(R_{TA,TA2}) = N(R_{A,TA2})", t.norm("TA", "TA2", Eps) == n_ata2),
        line("Rbar_{T,T} = -5^15 epsbar^25 p4 p24 p36 p51 p91 p96", *t.get("T", "T", EpsBar) == printed_rbar_tt()),
        line("N(Rbar_{A,A}) = 5^60 q4 q24 q36 q51 q91 q96", t.norm("A", "A", EpsBar) == n_ata2),
        line("N(Rbar_{TA,TA}) = N(Rbar_{A,A})", t.norm("TA", "TA", EpsBar) == n_ata2),
        line("N(Rbar_{A2,A2}) = N(Rbar_{A,A})", t.norm("A2", "A2", EpsBar) == n_ata2),
        line("N(Rbar_{TA2,TA2}) = N(Rbar_{A,A})", t.norm("TA2", "TA2", EpsBar) == n_ata2),
        line("Rbar_{T,A} = Rbar_{T,T}", t.get("T", "A", EpsBar) == t.get("T", "T", EpsBar)),
        line("Rbar_{T,TA} = Rbar_{T,T}", t.get("T", "TA", EpsBar) == t.get("T", "T", EpsBar)),
        line("Rbar_{T,A2} = Rbar_{T,T}", t.get("T", "A2", EpsBar) == t.get("T", "T", EpsBar)),
        line("Rbar_{T,TA2} = -R_{T,T}", *t.get("T", "TA2", EpsBar) == r_tt.neg()),
        line("N(Rbar_{A,TA}) = N(Rbar_{A,A})", t.norm("A", "TA", EpsBar) == n_ata2),
        line("N(Rbar_{A,A2}) = N(Rbar_{A,A})", t.norm("A", "A2", EpsBar) == n_ata2),
        line("N(Rbar_{A2,TA}) = N(Rbar_{A,A})", t.norm("TA", "A2", EpsBar) == n_ata2),
        line("N(Rbar_{A,TA2}) = N(R_{A,A})", t.norm("A", "TA2", EpsBar) == n_aa),
        line("N(Rbar_{A2,TA2}) = N(R_{A,A})", t.norm("A2", "TA2", EpsBar) == n_aa),
        line("N(Rbar_{TA,TA2}) = N(R_{A,A})", t.norm("TA", "TA2", EpsBar) == n_aa),
    ]
}

/// `c₄,₅(x) = x⁴ − 228x³ + 494x² + 228x + 1`.
pub fn c45() -> Poly<BigInt> {
    Poly::from_i64s(&[1, 228, 494, -228, 1])
}

/// `j₅(−1/x) = j₅(x)` with `j₅ = c₄,₅³/(x(1−11x−x²)⁵)`, after clearing denominators.
pub fn j5_u_invariant() -> bool {
    let num = c45().pow(3);
    let den = Poly::from_i64s(&[1, -11, -1]).pow(5).shift(1);
    let minus_one = Poly::constant(BigInt::from(-1));
    // num(−1/x) = x^{−12}·N, den(−1/x) = x^{−11}·D.
    let n = num.compose_rational(&minus_one, &Poly::x());
    let d = den.compose_rational(&minus_one, &Poly::x());
    n.mul(&den) == d.shift(1).mul(&num)
}

/// `F_{l^k}` and a primitive 5th root of unity in it, for the least `k ≥ min_k`
/// with `5 | l^k − 1`.
pub fn field_with_zeta(l: u64, min_k: u32) -> (ExtField, FqElem) {
    let k = [1, 2, 4].into_iter().find(|&k| k >= min_k && (l as u128).pow(k) % 5 == 1).expect("l ≠ 5");
    let e = make_extension(l, k);
    let exp = (e.order() - 1) / 5;
    let z = (1..)
        .map(|n: u64| {
            let c: Vec<u64> = (0..k).map(|i| (n >> (8 * i)) & 0xff).map(|c| c % l).collect();
            e.pow(&e.from_coords(&c), exp)
        })
        .find(|z| *z != e.one() && !e.is_zero(z))
        .expect("F* has elements of order 5");
    (e, z)
}

/// For `trials` random `α` in a field containing ζ, with `j = j₅(α⁵)`, checks
/// `G(M(α)⁵, j) = 0` for all 60 `M ∈ G₆₀`, where
/// `G(x, j) = c₄,₅(x)³ − j x(1−11x−x²)⁵`. Works in `F_{l⁴}` so that poles of
/// the 60 maps are rare.
pub fn orbit_property(l: u64, trials: usize) -> bool {
    let (e, z) = field_with_zeta(l, 4);
    let maps: Vec<[FqElem; 4]> = g60().iter().map(|m| m.reduce(&e, &z).expect("integral entries")).collect();
    let c45 = |x: &FqElem| {
        [1i64, 228, 494, -228, 1].iter().rev().fold(e.zero(), |acc, &c| e.add(&e.mul(&acc, x), &e.from_i64(c)))
    };
    let tail = |x: &FqElem| {
        let t = e.sub(&e.sub(&e.one(), &e.mul(&e.from_u64(11), x)), &e.mul(x, x));
        e.mul(x, &e.pow(&t, 5))
    };
    let mut rng = ChaCha8Rng::seed_from_u64(l ^ 0x6f72_6269);
    let mut done = 0;
    let mut attempts = 0;
    while done < trials {
        attempts += 1;
        assert!(attempts < 100 * trials + 100, "too many degenerate samples");
        let alpha = e.random(&mut rng);
        let x5 = e.pow(&alpha, 5);
        let Some(den_inv) = e.inv(&tail(&x5)) else { continue };
        let j = e.mul(&e.pow(&c45(&x5), 3), &den_inv);
        let images: Option<Vec<FqElem>> = maps
            .iter()
            .map(|[a, b, c, d]| {
                let den = e.add(&e.mul(c, &alpha), d);
                e.inv(&den).map(|i| e.mul(&e.add(&e.mul(a, &alpha), b), &i))
            })
            .collect();
        let Some(images) = images else { continue };
        for y in images {
            let y5 = e.pow(&y, 5);
            let gv = e.sub(&e.pow(&c45(&y5), 3), &e.mul(&j, &tail(&y5)));
            if !e.is_zero(&gv) {
                return false;
            }
        }
        done += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_relations_hold() {
        verify_group_relations().unwrap();
        assert!(MobiusMap::u().pow(2).same_map(&MobiusMap::identity()));
    }

    #[test]
    fn normal_form_is_projective() {
        let a = MobiusMap::a_map();
        let scaled = MobiusMap {
            a: a.a.mul(&CycNum::zeta()),
            b: a.b.mul(&CycNum::zeta()),
            c: a.c.mul(&CycNum::zeta()),
            d: a.d.mul(&CycNum::zeta()),
        };
        assert!(scaled.same_map(&a));
        assert_eq!(a.normalized().a, CycNum::one());
        assert!(!a.same_map(&MobiusMap::t()));
    }

    #[test]
    fn g60_is_closed_under_inverse() {
        let g = g60();
        for m in g {
            assert!(g.contains(&m.inverse().normalized()));
        }
        let involutions = g.iter().filter(|m| m.pow(2).same_map(&MobiusMap::identity())).count();
        // A₅ has 15 involutions plus the identity.
        assert_eq!(involutions, 16);
    }

    #[test]
    fn resolvent_and_tau_identities() {
        assert!(resolvent_symbolic());
        assert!(tau_covariance());
        for l in [11, 19, 29, 31] {
            assert!(resolvent_identities(l, 100).unwrap(), "l={l}");
        }
        assert!(resolvent_identities(13, 1).is_err());
    }

    #[test]
    fn orbit_property_small_primes() {
        assert!(j5_u_invariant());
        for l in [31, 11, 13, 17] {
            assert!(orbit_property(l, 20), "l={l}");
        }
    }

    #[test]
    fn zeta_field_degrees() {
        assert_eq!(field_with_zeta(11, 1).0.degree(), 1);
        assert_eq!(field_with_zeta(19, 1).0.degree(), 2);
        assert_eq!(field_with_zeta(11, 2).0.degree(), 2);
        assert_eq!(field_with_zeta(13, 1).0.degree(), 4);
        let (e, z) = field_with_zeta(7, 1);
        assert_eq!(e.pow(&z, 5), e.one());
    }

    /// `p_d | Q_d(x⁵)` and `Q_d(x⁵) = p_d q_d` for each printed `p_d`.
    #[test]
    fn printed_p_d_divide_q_d() {
        for d in FIRST_SET.iter().chain(&SECOND_SET[1..]) {
            // Q₄ = x² + 1 is the k-shaped factor with r = 0, s = 1.
            let big_q = if *d == 4 { p_d(4) } else { crate::modeq::q_d(*d) };
            let q5 = Poly::new(
                (0..=5 * big_q.degree())
                    .map(|i| if i % 5 == 0 { big_q.coeff(i / 5) } else { BigInt::from(0) })
                    .collect(),
            );
            let p = p_d(*d);
            assert_eq!(p.degree(), big_q.degree(), "d={d}");
            assert_eq!(p.mul(&q_small(*d)), q5, "d={d}");
        }
    }

    #[test]
    fn r_tt_matches_printed() {
        let r = icosa_resultant(&MobiusMap::t(), &MobiusMap::t(), Variant::Eps);
        assert_eq!(r, printed_r_tt());
        assert_eq!(r, icosa_resultant_direct(&MobiusMap::t(), &MobiusMap::t(), Variant::Eps));
    }

    #[test]
    fn interpolation_matches_direct_elimination() {
        let (a, t) = (MobiusMap::a_map(), MobiusMap::t());
        let m = t.compose(&a);
        assert_eq!(icosa_resultant(&t, &m, Variant::EpsBar), icosa_resultant_direct(&t, &m, Variant::EpsBar));
    }

    #[test]
    fn rep_scale_is_a_square_root_of_the_determinants() {
        let n2 = rep_scale().pow(2);
        assert_eq!(n2.mul(&CycNum::zeta_pow(2)), MobiusMap::a_map().det());
        assert_eq!(n2.mul(&CycNum::zeta_pow(4)), MobiusMap::t().det());
    }

    #[test]
    fn section6_ledger_holds() {
        let lines = section6_ledger();
        assert_eq!(lines.len(), 30);
        let failed: Vec<_> = lines.iter().filter(|l| !l.holds).map(|l| l.claim).collect();
        assert!(failed.is_empty(), "{failed:?}");
    }
}
