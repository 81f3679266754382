//! Arbitrary-precision integers, smooth factorization and the factored-constant notation.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use num_bigint::BigInt as Int;
pub use num_rational::BigRational as Rat;

pub const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntFactorization {
    pub unit: i8,
    /// `(prime, exponent)` with primes strictly increasing.
    pub factors: Vec<(BigInt, u32)>,
}

impl IntFactorization {
    pub fn value(&self) -> BigInt {
        let mut v = BigInt::from(self.unit);
        for (p, e) in &self.factors {
            v *= p.pow(*e);
        }
        v
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        let p = BigInt::from(p);
        self.factors.iter().find(|(q, _)| *q == p).map_or(0, |(_, e)| *e)
    }
}

impl fmt::Display for IntFactorization {
    /// Renders as `-2^17 7^3 11 13`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unit < 0 {
            write!(f, "-")?;
        }
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factors `n` by trial division up to `trial_bound`. A leftover cofactor
/// above `trial_bound²` is accepted only if it passes a strong probable-prime test.
pub fn factor_integer(n: &BigInt, trial_bound: u64) -> Result<IntFactorization> {
    assert!(!n.is_zero(), "factor_integer(0)");
    let unit = if n.sign() == Sign::Minus { -1 } else { 1 };
    let mut m: BigUint = n.magnitude().clone();
    let mut factors = Vec::new();
    let mut push = |m: &mut BigUint, d: u64| {
        let mut e = 0u32;
        loop {
            let (q, r) = m.div_rem(&BigUint::from(d));
            if !r.is_zero() {
                break;
            }
            *m = q;
            e += 1;
        }
        if e > 0 {
            factors.push((BigInt::from(d), e));
        }
    };
    push(&mut m, 2);
    let mut d = 3u64;
    while d <= trial_bound && !m.is_one() {
        if BigUint::from(d) * BigUint::from(d) > m {
            break;
        }
        if (&m % d).is_zero() {
            push(&mut m, d);
        }
        d += 2;
    }
    if !m.is_one() {
        let bound_sq = BigUint::from(trial_bound) * BigUint::from(trial_bound);
        if m > bound_sq && !is_probable_prime(&m) {
            return Err(Error::UnresolvedCofactor(m.to_string()));
        }
        factors.push((BigInt::from(m), 1));
    }
    Ok(IntFactorization { unit, factors })
}

/// Miller–Rabin with the first twelve prime bases.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let small = [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if *n < BigUint::from(2u32) {
        return false;
    }
    for &p in &small {
        if *n == BigUint::from(p) {
            return true;
        }
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'outer: for &a in &small {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

pub fn gcd_big(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// Parses the factored notation used for printed constants, e.g.
/// `"-2^17 7^3 11 13 19 43"` or `"2^90 3^18 5^3 11^9"`. Factors may be
/// separated by spaces or `·`.
pub fn parse_factored(s: &str) -> BigInt {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let mut v = BigInt::one();
    for tok in body.split(|c: char| c.is_whitespace() || c == '·' || c == '*') {
        if tok.is_empty() {
            continue;
        }
        let (base, exp) = match tok.split_once('^') {
            Some((b, e)) => (b, e.parse::<u32>().expect("exponent")),
            None => (tok, 1),
        };
        let base: BigInt = base.parse().expect("base");
        v *= base.pow(exp);
    }
    if neg {
        -v
    } else {
        v
    }
}

/// Parses a decimal integer literal.
pub fn int(s: &str) -> BigInt {
    s.parse().expect("integer literal")
}

pub fn to_i64(n: &BigInt) -> Option<i64> {
    n.to_i64()
}

/// `n mod p` in `[0, p)`.
pub fn mod_u64(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}
