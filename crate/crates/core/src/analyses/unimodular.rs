use rayon::prelude::*;

use crate::arith::{is_prime, is_square_u128, isqrt, primes_up_to};
use crate::closed_forms::two_row_context;
use crate::error::{Error, Result};

/// Parity test at one prime: every multiplicity `mu(n, m, p; j)`, `j < m`,
/// of a simple module in the Jantzen sum must be even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalUnimodular {
    pub p: u64,
    pub mu: Vec<i64>,
    pub passes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularReport {
    pub n: u64,
    pub m: u64,
    pub local: Vec<LocalUnimodular>,
}

impl UnimodularReport {
    /// A unimodular lattice exists at every tested prime.
    pub fn exists(&self) -> bool {
        self.local.iter().all(|l| l.passes)
    }

    pub fn failing_primes(&self) -> Vec<u64> {
        self.local.iter().filter(|l| !l.passes).map(|l| l.p).collect()
    }
}

fn local(n: u64, m: u64, p: u64) -> Result<LocalUnimodular> {
    let ctx = two_row_context(n, m, p)?;
    let mu: Vec<i64> = ctx.mu[..m as usize].to_vec();
    let passes = mu.iter().all(|x| x % 2 == 0);
    Ok(LocalUnimodular { p, mu, passes })
}

/// Local test at `p`, or the global test over all primes `p <= n`.
pub fn unimodular_test(n: u64, m: u64, p: Option<u64>) -> Result<UnimodularReport> {
    if 2 * m > n {
        return Err(Error::OutOfRange(format!("two-row shape needs m <= n/2, got n={n}, m={m}")));
    }
    let local = match p {
        Some(p) if !is_prime(p) => return Err(Error::Domain(format!("{p} is not prime"))),
        Some(p) => vec![local(n, m, p)?],
        None => primes_up_to(n).into_iter().map(|p| local(n, m, p)).collect::<Result<_>>()?,
    };
    Ok(UnimodularReport { n, m, local })
}

/// All `(x, y, z)` with `1 <= x <= bound`, `2y^2 - x^2 = 1` and `3z^2 - x^2 = 2`.
pub fn pell_search(bound: u64) -> Vec<(u64, u64, u64)> {
    const CHUNK: u64 = 1 << 16;
    let chunks = bound.div_ceil(CHUNK);
    let mut out: Vec<(u64, u64, u64)> = (0..chunks)
        .into_par_iter()
        .flat_map_iter(|c| {
            let lo = c * CHUNK + 1;
            let hi = ((c + 1) * CHUNK).min(bound);
            (lo..=hi).filter_map(|x| {
                let sq = x as u128 * x as u128;
                let (a, b) = (sq + 1, sq + 2);
                if a % 2 != 0 || b % 3 != 0 || !is_square_u128(a / 2) || !is_square_u128(b / 3) {
                    return None;
                }
                Some((x, isqrt(a / 2) as u64, isqrt(b / 3) as u64))
            })
        })
        .collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pell_small_bound() {
        assert_eq!(pell_search(10_000), vec![(1, 1, 1)]);
        assert!(pell_search(0).is_empty());
    }

    #[test]
    fn global_failure_from_three() {
        for n in 6..=12 {
            for m in 3..=n / 2 {
                assert!(!unimodular_test(n, m, None).unwrap().exists(), "({},{m})", n - m);
            }
        }
    }

    #[test]
    fn balanced_shape_fails_at_three() {
        for m in 3..=6 {
            let r = unimodular_test(2 * m, m, Some(3)).unwrap();
            assert!(!r.exists());
        }
    }
}
