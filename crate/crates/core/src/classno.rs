//! Primality for machine integers and class numbers of imaginary quadratic orders.

use crate::error::{Error, Result};

/// Deterministic Miller–Rabin for `n < 2^64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

/// Class number of the order of discriminant `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ClassNumberResult {
    pub disc: i64,
    pub h: u64,
    pub is_fundamental: bool,
}

/// Number of reduced primitive positive definite forms of discriminant `d < 0`.
pub fn class_number_disc(d: i64) -> Result<ClassNumberResult> {
    if d >= 0 || d.rem_euclid(4) > 1 {
        return Err(Error::BadDiscriminant(d));
    }
    let n = -d;
    let mut h = 0u64;
    let mut b = n.rem_euclid(2);
    while 3 * b * b <= n {
        let ac = (b * b + n) / 4;
        let mut a = b.max(1);
        while a * a <= ac {
            if ac % a == 0 {
                let c = ac / a;
                if gcd3(a, b, c) == 1 {
                    // (a, ±b, c) are distinct reduced forms unless b = 0, b = a or a = c.
                    h += if b == 0 || b == a || a == c { 1 } else { 2 };
                }
            }
            a += 1;
        }
        b += 2;
    }
    Ok(ClassNumberResult { disc: d, h, is_fundamental: is_fundamental(d) })
}

fn is_fundamental(d: i64) -> bool {
    let squarefree = |m: i64| (2..).take_while(|k: &i64| k * k <= m.abs()).all(|k| m % (k * k) != 0);
    match d.rem_euclid(4) {
        1 => squarefree(d),
        0 => matches!((d / 4).rem_euclid(4), 2 | 3) && squarefree(d / 4),
        _ => false,
    }
}

fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    use num_integer::Integer;
    a.gcd(&b).gcd(&c)
}

/// Class number of `ℚ(√m)` for squarefree `m < 0`.
pub fn field_class_number(m: i64) -> Result<ClassNumberResult> {
    if m >= 0 || !is_fundamental(if m.rem_euclid(4) == 1 { m } else { 4 * m }) {
        return Err(Error::BadDiscriminant(m));
    }
    class_number_disc(if m.rem_euclid(4) == 1 { m } else { 4 * m })
}

/// `h(−5l)`, the class number of `ℚ(√−5l)`.
pub fn h5(l: u64) -> u64 {
    field_class_number(-5 * l as i64).expect("−5l squarefree").h
}

/// `h(−p)`, the class number of `ℚ(√−p)`.
pub fn h1(p: u64) -> u64 {
    field_class_number(-(p as i64)).expect("−p squarefree").h
}

/// `𝗁(−20l) = h(−5l)` or `3h(−5l)` according as `−5l ≡ 1` or `5 (mod 8)`.
pub fn order_relation_check(l: u64) -> Result<bool> {
    if l % 4 != 3 || l <= 5 || !is_prime(l) {
        return Err(Error::BadPrime(l));
    }
    let h = h5(l);
    let h20 = class_number_disc(-20 * l as i64)?.h;
    let factor = if (-5 * l as i64).rem_euclid(8) == 1 { 1 } else { 3 };
    Ok(h20 == factor * h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(1_000_003));
        assert!(!is_prime(3_215_031_751));
        assert!(is_prime((1 << 61) - 1));
    }

    #[test]
    fn known_class_numbers() {
        let table = [(-3, 1), (-4, 1), (-7, 1), (-8, 1), (-15, 2), (-20, 2), (-23, 3), (-47, 5), (-71, 7), (-163, 1), (-164, 8), (-12, 1), (-16, 1), (-28, 1), (-100, 2)];
        for (d, h) in table {
            assert_eq!(class_number_disc(d).unwrap().h, h, "h({d})");
        }
        assert!(class_number_disc(-5).is_err());
        assert!(class_number_disc(7).is_err());
    }

    #[test]
    fn field_class_numbers() {
        assert_eq!(field_class_number(-35).unwrap(), ClassNumberResult { disc: -35, h: 2, is_fundamental: true });
        assert_eq!(field_class_number(-65).unwrap().disc, -260);
        assert_eq!(h5(13), 8);
        assert_eq!(h5(11), 4);
        assert_eq!(h5(3), 2);
        assert_eq!(h1(13), 2);
        assert_eq!(class_number_disc(-7580).unwrap().h, 48);
        assert_eq!(class_number_disc(-20).unwrap().h, 2);
        assert!(!class_number_disc(-12).unwrap().is_fundamental);
        assert!(field_class_number(-20).is_err());
    }

    /// Independent count via Dirichlet's class number formula for fundamental `d < −4`.
    fn dirichlet(d: i64) -> i64 {
        let n = -d;
        let s: i64 = (1..n).map(|a| a * kronecker(d, a)).sum();
        -s / n
    }

    fn kronecker(d: i64, n: i64) -> i64 {
        use num_integer::Integer;
        let mut res = 1;
        let mut m = n;
        while m % 2 == 0 {
            m /= 2;
            res *= match d.rem_euclid(8) {
                1 | 7 => 1,
                3 | 5 => -1,
                _ => 0,
            };
        }
        if m == 1 {
            return res;
        }
        if d.gcd(&m) != 1 {
            return 0;
        }
        // Jacobi symbol (d/m) for odd m.
        let mut a = d.rem_euclid(m);
        let mut j = 1;
        while a != 0 {
            while a % 2 == 0 {
                a /= 2;
                if matches!(m % 8, 3 | 5) {
                    j = -j;
                }
            }
            std::mem::swap(&mut a, &mut m);
            if a % 4 == 3 && m % 4 == 3 {
                j = -j;
            }
            a %= m;
        }
        res * if m == 1 { j } else { 0 }
    }

    #[test]
    fn matches_dirichlet_for_prime_discriminants() {
        for p in primes_in(7, 800).into_iter().filter(|p| p % 4 == 3) {
            assert_eq!(class_number_disc(-(p as i64)).unwrap().h as i64, dirichlet(-(p as i64)), "p={p}");
        }
        for l in primes_in(7, 300) {
            let d = -5 * l as i64;
            let disc = if d.rem_euclid(4) == 1 { d } else { 4 * d };
            assert_eq!(h5(l) as i64, dirichlet(disc), "l={l}");
        }
    }

    #[test]
    fn order_relation_up_to_1000() {
        for l in primes_in(7, 1000).into_iter().filter(|l| l % 4 == 3) {
            assert!(order_relation_check(l).unwrap(), "l={l}");
        }
        assert!(order_relation_check(13).is_err());
    }

    #[test]
    fn order_vs_maximal_order() {
        // h(−4p) = 3h(−p) for p ≡ 3 mod 8, h(−p) for p ≡ 7 mod 8 (p > 3).
        for p in primes_in(11, 2000).into_iter().filter(|p| p % 4 == 3) {
            let h = class_number_disc(-(p as i64)).unwrap().h;
            let h4 = class_number_disc(-4 * p as i64).unwrap().h;
            assert_eq!(h4, if p % 8 == 3 { 3 * h } else { h }, "p={p}");
        }
    }
}
