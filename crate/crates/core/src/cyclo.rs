//! Exact arithmetic in the cyclotomic field ℚ(ζ), ζ a primitive 5th root of unity.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ff::FiniteField;
use crate::ring::{Domain, Field, Ring};

/// `c₀ + c₁ζ + c₂ζ² + c₃ζ³`, reduced with `ζ⁴ = −1−ζ−ζ²−ζ³`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CycNum {
    pub c: [BigRational; 4],
}

impl CycNum {
    pub fn new(c: [BigRational; 4]) -> Self {
        Self { c }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        Self::new(c.map(|x| BigRational::from_integer(x.into())))
    }

    pub fn rational(q: BigRational) -> Self {
        let z = q0();
        Self::new([q, z.clone(), z.clone(), z])
    }

    pub fn zeta() -> Self {
        Self::from_ints([0, 1, 0, 0])
    }

    /// `ζⁱ` for any integer `i`.
    pub fn zeta_pow(i: i64) -> Self {
        Self::from_power_coeffs(&{
            let mut v = vec![q0(); 5];
            v[i.rem_euclid(5) as usize] = q1();
            v
        })
    }

    /// `√5 = 1 + 2(ζ + ζ⁴)`.
    pub fn sqrt5() -> Self {
        Self::from_ints([1, 2, 0, 0]).add(&Self::zeta_pow(4).mul(&Self::from_ints([2, 0, 0, 0])))
    }

    /// `ε = (−1+√5)/2`.
    pub fn eps() -> Self {
        Self::sqrt5().sub(&Self::one()).scale(&BigRational::new(1.into(), 2.into()))
    }

    /// `ε̄ = (−1−√5)/2`.
    pub fn eps_bar() -> Self {
        Self::sqrt5().neg().sub(&Self::one()).scale(&BigRational::new(1.into(), 2.into()))
    }

    /// Reduces `Σ vᵢ ζⁱ` (any length) to the canonical basis.
    pub fn from_power_coeffs(v: &[BigRational]) -> Self {
        let mut t = [q0(), q0(), q0(), q0(), q0()];
        for (i, a) in v.iter().enumerate() {
            t[i % 5] += a;
        }
        let c4 = t[4].clone();
        Self::new([&t[0] - &c4, &t[1] - &c4, &t[2] - &c4, &t[3] - &c4])
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self::new(self.c.clone().map(|a| a * q))
    }

    /// The automorphism `ζ ↦ ζᵏ` for `k` prime to 5.
    pub fn sigma(&self, k: u32) -> Self {
        assert!(k % 5 != 0, "σ_k needs k prime to 5");
        let mut v = vec![q0(); 5];
        for (i, a) in self.c.iter().enumerate() {
            v[(i * k as usize) % 5] += a;
        }
        Self::from_power_coeffs(&v)
    }

    /// `N(x) = ∏_{k=1}^{4} σ_k(x)`.
    pub fn norm(&self) -> BigRational {
        let n = (1..=4).fold(Self::one(), |acc, k| acc.mul(&self.sigma(k)));
        n.to_rational().expect("norms are rational")
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.c[1..].iter().all(Zero::is_zero).then(|| self.c[0].clone())
    }

    /// The image under `ζ ↦ z` in a finite field; `None` if a denominator vanishes.
    pub fn reduce<F: FiniteField>(&self, f: &F, z: &F::Elem) -> Option<F::Elem> {
        let p = f.characteristic();
        let mut acc = f.zero();
        let mut zp = f.one();
        for a in &self.c {
            let n = residue(a.numer(), p);
            let d = residue(a.denom(), p);
            let d = f.inv(&f.from_u64(d))?;
            acc = f.add(&acc, &f.mul(&f.mul(&f.from_u64(n), &d), &zp));
            zp = f.mul(&zp, z);
        }
        Some(acc)
    }
}

fn q0() -> BigRational {
    <BigRational as Zero>::zero()
}

fn q1() -> BigRational {
    <BigRational as One>::one()
}

fn residue(n: &BigInt, p: u64) -> u64 {
    let r = n % BigInt::from(p);
    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
    r.try_into().expect("residue fits")
}

impl Ring for CycNum {
    fn zero() -> Self {
        Self::from_ints([0; 4])
    }
    fn one() -> Self {
        Self::from_ints([1, 0, 0, 0])
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
    fn add(&self, o: &Self) -> Self {
        Self::new([&self.c[0] + &o.c[0], &self.c[1] + &o.c[1], &self.c[2] + &o.c[2], &self.c[3] + &o.c[3]])
    }
    fn sub(&self, o: &Self) -> Self {
        Self::new([&self.c[0] - &o.c[0], &self.c[1] - &o.c[1], &self.c[2] - &o.c[2], &self.c[3] - &o.c[3]])
    }
    fn mul(&self, o: &Self) -> Self {
        let mut t = vec![q0(); 7];
        for (i, a) in self.c.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !Zero::is_zero(b) {
                    t[i + j] += a * b;
                }
            }
        }
        Self::from_power_coeffs(&t)
    }
    fn neg(&self) -> Self {
        Self::new(self.c.clone().map(|a| -a))
    }
    fn from_bigint(n: &BigInt) -> Self {
        Self::rational(BigRational::from_integer(n.clone()))
    }
}

impl Domain for CycNum {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        Some(self.mul(&d.inv()?))
    }
}

impl Field for CycNum {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let conj = (2..=4).fold(Self::one(), |acc, k| acc.mul(&self.sigma(k)));
        let n = self.mul(&conj).to_rational().expect("norms are rational");
        Some(conj.scale(&n.recip()))
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{q}");
        }
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, a)| !Zero::is_zero(*a))
            .map(|(i, a)| match i {
                0 => format!("{a}"),
                1 => format!("({a})ζ"),
                _ => format!("({a})ζ^{i}"),
            })
            .collect();
        write!(f, "({})", terms.join(" + "))
    }
}
