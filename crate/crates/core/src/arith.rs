//! Small exact-arithmetic helpers: primes, factorials, binomials and p-adic
//! valuations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes in `[2, n]`, ascending.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| is_prime(k)).collect()
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero unless `n >= k >= 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Exponent of `p` in a nonzero integer.
///
/// # Panics
/// If `x` is zero.
pub fn valuation(p: u64, x: &BigInt) -> u32 {
    assert!(!x.is_zero(), "valuation of zero");
    let p = BigInt::from(p);
    let mut x = x.abs();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        x = q;
        v += 1;
    }
}

pub fn valuation_i64(p: u64, x: i64) -> u32 {
    valuation(p, &BigInt::from(x))
}

/// `v_p(num / den)`, which may be negative.
pub fn valuation_ratio(p: u64, num: i64, den: i64) -> i64 {
    valuation_i64(p, num) as i64 - valuation_i64(p, den) as i64
}

/// The `p`-part `p^{v_p(x)}` of a nonzero integer.
pub fn p_part(p: u64, x: &BigInt) -> BigInt {
    num_traits::pow(BigInt::from(p), valuation(p, x) as usize)
}

/// `m? = prod_p p^{floor(log_p m)}`, which equals `lcm(1, ..., m)`.
pub fn quasi_factorial(m: u64) -> BigInt {
    let mut acc = BigInt::one();
    for p in primes_up_to(m) {
        let mut q = p;
        while q * p <= m {
            q *= p;
        }
        acc *= q;
    }
    acc
}

pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

pub fn is_square_u128(n: u128) -> bool {
    let r = isqrt(n);
    r * r == n
}

/// Integer square root of a nonnegative big integer, if it is a perfect square.
pub fn exact_sqrt(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = x.sqrt();
    (&r * &r == *x).then_some(r)
}

/// Largest `h` with `h^2 | x` for a positive `x` small enough to factor by
/// trial division.
pub fn largest_square_divisor_root(x: u64) -> u64 {
    let mut x = x;
    let mut h = 1;
    let mut d = 2;
    while d * d <= x {
        while x.is_multiple_of(d * d) {
            x /= d * d;
            h *= d;
        }
        while x.is_multiple_of(d) {
            x /= d;
        }
        d += 1;
    }
    h
}

pub fn to_u64(x: &BigInt) -> Option<u64> {
    x.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quasi_factorial_of_four_is_twelve() {
        assert_eq!(quasi_factorial(4), BigInt::from(12));
        assert_eq!(quasi_factorial(1), BigInt::from(1));
        assert_eq!(quasi_factorial(9), BigInt::from(2520));
    }

    #[test]
    fn ratio_valuations_can_be_negative() {
        assert_eq!(valuation_ratio(2, 8, 3), 3);
        assert_eq!(valuation_ratio(2, 7, 2), -1);
        assert_eq!(valuation_ratio(2, 6, 1), 1);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
    }

    #[test]
    fn square_helpers() {
        assert!(is_square_u128(144));
        assert!(!is_square_u128(145));
        assert_eq!(largest_square_divisor_root(27), 3);
        assert_eq!(largest_square_divisor_root(5), 1);
        assert_eq!(exact_sqrt(&BigInt::from(49)), Some(BigInt::from(7)));
    }
}
