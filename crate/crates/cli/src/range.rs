use hasse5_core::classno::{is_prime, primes_in};

/// Parses `N`, `LO..HI` or `LO..=HI` (both ends inclusive) into the primes
/// `> 5` it contains. A single `N` must itself be such a prime.
pub fn parse_primes(s: &str) -> Result<Vec<u64>, String> {
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("not a number: {t:?}"));
    if let Some((lo, hi)) = s.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let (lo, hi) = (num(lo)?, num(hi)?);
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        let ps = primes_in(lo.max(7), hi);
        if ps.is_empty() {
            return Err(format!("no primes > 5 in {s}"));
        }
        return Ok(ps);
    }
    let p = num(s)?;
    if p <= 5 || !is_prime(p) {
        return Err(format!("{p} is not a prime > 5"));
    }
    Ok(vec![p])
}
