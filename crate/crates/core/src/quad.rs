//! Quadratic extensions `B(√M)`, nestable for biquadratic fields.

use num_bigint::BigInt;

use crate::ring::{Domain, Field, Ring};

/// `a + b√M` with `a, b ∈ B`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Quadratic<B, const M: i64> {
    pub a: B,
    pub b: B,
}

impl<B: Ring, const M: i64> Quadratic<B, M> {
    pub fn new(a: B, b: B) -> Self {
        Self { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(B::from_i64(a), B::from_i64(b))
    }

    /// The element `√M`.
    pub fn root() -> Self {
        Self::new(B::zero(), B::one())
    }

    pub fn base(a: B) -> Self {
        Self::new(a, B::zero())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), self.b.neg())
    }

    /// `a² − M b²`.
    pub fn norm(&self) -> B {
        self.a.mul(&self.a).sub(&B::from_i64(M).mul(&self.b.mul(&self.b)))
    }

    /// The base-ring value when the `√M` part vanishes.
    pub fn to_base(&self) -> Option<B> {
        self.b.is_zero().then(|| self.a.clone())
    }

    /// Applies `f` to both coordinates (used to conjugate nested extensions).
    pub fn map(&self, f: impl Fn(&B) -> B) -> Self {
        Self::new(f(&self.a), f(&self.b))
    }
}

impl<B: Ring, const M: i64> Ring for Quadratic<B, M> {
    fn zero() -> Self {
        Self::new(B::zero(), B::zero())
    }
    fn one() -> Self {
        Self::new(B::one(), B::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        Self::new(self.a.add(&o.a), self.b.add(&o.b))
    }
    fn sub(&self, o: &Self) -> Self {
        Self::new(self.a.sub(&o.a), self.b.sub(&o.b))
    }
    fn mul(&self, o: &Self) -> Self {
        let m = B::from_i64(M);
        Self::new(
            self.a.mul(&o.a).add(&m.mul(&self.b.mul(&o.b))),
            self.a.mul(&o.b).add(&self.b.mul(&o.a)),
        )
    }
    fn neg(&self) -> Self {
        Self::new(self.a.neg(), self.b.neg())
    }
    fn from_bigint(n: &BigInt) -> Self {
        Self::base(B::from_bigint(n))
    }
}

impl<B: Domain, const M: i64> Domain for Quadratic<B, M> {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        let n = d.norm();
        if n.is_zero() {
            return None;
        }
        let t = self.mul(&d.conj());
        Some(Self::new(t.a.div_exact(&n)?, t.b.div_exact(&n)?))
    }
}

impl<B: Field, const M: i64> Field for Quadratic<B, M> {
    fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        let c = self.conj();
        Some(Self::new(c.a.mul(&n), c.b.mul(&n)))
    }
}
