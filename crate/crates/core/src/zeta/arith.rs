use num::{BigInt, Integer, One, ToPrimitive};

use super::bernoulli;
use crate::error::{Error, Result};
use crate::exact::Rational;

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// `ζ(1 - 2k) = -B_{2k} / 2k`.
pub fn zeta_odd_negative(k: u64) -> Result<Rational> {
    if k == 0 {
        return Err(Error::InvalidArgument("zeta(1-2k) needs k >= 1".into()));
    }
    Ok(-bernoulli(2 * k as usize) / Rational::from(BigInt::from(2 * k)))
}

/// Primes `p` with `(p - 1) | 2k` and their product, after checking that
/// `B_{2k} + Σ 1/p` is an integer.
pub fn von_staudt_clausen(two_k: u64) -> Result<(u64, Vec<u64>)> {
    if two_k == 0 || two_k % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "von Staudt–Clausen needs a positive even index, got {two_k}"
        )));
    }
    let primes: Vec<u64> = (1..=two_k)
        .filter(|d| two_k.is_multiple_of(*d))
        .map(|d| d + 1)
        .filter(|&p| is_prime(p))
        .collect();
    let mut sum = bernoulli(two_k as usize);
    for &p in &primes {
        sum += Rational::new(BigInt::one(), BigInt::from(p));
    }
    if !sum.is_integer() {
        return Err(Error::Internal(format!(
            "B_{two_k} + Σ 1/p = {sum} is not an integer"
        )));
    }
    let denominator = primes.iter().product();
    Ok((denominator, primes))
}

fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// Order of `H¹_c(Z_p^×, Z_p(2k))` at an odd prime `p`: `1` unless
/// `2k = (p - 1) k_0`, in which case `p^(ν_p(k_0) + 1)`.
pub fn h1c_order_at_p(p: u64, k: u64) -> Result<u64> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!(
            "h1c order needs an odd prime, got {p}"
        )));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("h1c order needs k >= 1".into()));
    }
    if !(2 * k).is_multiple_of(p - 1) {
        return Ok(1);
    }
    let k0 = 2 * k / (p - 1);
    p.checked_pow(valuation(k0, p) + 1)
        .ok_or(Error::Overflow("h1c order"))
}

/// Order of the image of J in stem `4k - 1`: the denominator of
/// `½ζ(1 - 2k) = -B_{2k} / 4k`.
pub fn image_of_j_order(k: u64) -> Result<u64> {
    let z = zeta_odd_negative(k)?;
    let half = z / Rational::from(BigInt::from(2));
    half.denom()
        .to_u64()
        .ok_or(Error::Overflow("image of J order"))
}

/// Odd part of a positive integer.
pub(crate) fn odd_part(mut n: u64) -> u64 {
    while n > 0 && n.is_even() {
        n /= 2;
    }
    n
}
