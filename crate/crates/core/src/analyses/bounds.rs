use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::factorial;
use crate::combinatorics::Partition;
use crate::error::Result;
use crate::jantzen::{duality_checks, DualityCheck};
use crate::oracle::brute;

/// `#{d_i coprime to p}`, the dimension of `D^lambda` over `F_p` (zero when
/// `lambda` is `p`-singular).
pub fn dim_simple(lambda: &Partition, p: u64) -> Result<usize> {
    Ok(brute(lambda)?.chain.count_coprime_to(p))
}

#[derive(Clone, Debug)]
pub struct DualityReport {
    pub lambda: Partition,
    pub transpose: Partition,
    /// `n! / n_lambda`.
    pub quotient: BigInt,
    /// First index `i` (1-based) with `d_i(lambda) d_{r+1-i}(lambda') != n!/n_lambda`.
    pub positional_counterexample: Option<usize>,
    pub det_product_holds: bool,
    pub layers: Vec<DualityCheck>,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.positional_counterexample.is_none() && self.det_product_holds && self.layers.iter().all(|c| c.holds())
    }
}

/// Compares the chains of `lambda` and its transpose, and their layer
/// profiles at each of `primes`.
pub fn duality_report(lambda: &Partition, primes: &[u64]) -> Result<DualityReport> {
    let transpose = lambda.transpose();
    let a = brute(lambda)?;
    let b = brute(&transpose)?;
    let r = a.rank();
    let quotient = factorial(lambda.n() as u64) / BigInt::from(r);
    let da = a.chain.divisors();
    let db = b.chain.divisors();
    let positional_counterexample = (0..r).find(|&i| &da[i] * &db[r - 1 - i] != quotient).map(|i| i + 1);
    let det_product_holds = (&a.det * &b.det).magnitude() == num_traits::pow(quotient.clone(), r).magnitude();
    let layers = primes.iter().map(|&p| duality_checks(lambda, &a.chain, &b.chain, p)).collect::<Result<_>>()?;
    Ok(DualityReport { lambda: lambda.clone(), transpose, quotient, positional_counterexample, det_product_holds, layers })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JamesBoundReport {
    pub lambda: Partition,
    /// `prod_i (lambda'_i - lambda'_{i+1})!`.
    pub factor: BigInt,
    pub first_divisor: BigInt,
    /// `prod_i ((lambda'_i - lambda'_{i+1})!)^i`.
    pub bound: BigInt,
}

impl JamesBoundReport {
    pub fn holds(&self) -> bool {
        self.first_divisor.is_multiple_of(&self.factor) && self.bound.is_multiple_of(&self.first_divisor)
    }
}

pub fn james_bound(lambda: &Partition) -> Result<JamesBoundReport> {
    let first = brute(lambda)?.chain.first().cloned().unwrap_or_else(|| BigInt::from(1));
    Ok(JamesBoundReport {
        lambda: lambda.clone(),
        factor: lambda.james_factor(),
        first_divisor: first,
        bound: lambda.james_upper_bound(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn simple_dimensions() {
        assert_eq!(dim_simple(&p("4,1"), 3).unwrap(), 4);
        assert_eq!(dim_simple(&p("2,2"), 2).unwrap(), 0);
        assert_eq!(dim_simple(&p("5"), 2).unwrap(), 1);
    }

    #[test]
    fn duality_small() {
        let r = duality_report(&p("3,1"), &[2, 3]).unwrap();
        assert!(r.holds());
        assert_eq!(r.quotient, BigInt::from(8));
        assert!(duality_report(&p("2,2"), &[2, 3]).unwrap().holds());
    }

    #[test]
    fn james_two_two_two() {
        let r = james_bound(&p("2,2,2")).unwrap();
        assert_eq!((r.factor.clone(), r.first_divisor.clone(), r.bound.clone()), (6.into(), 12.into(), 36.into()));
        assert!(r.holds());
        assert!(james_bound(&p("4")).unwrap().holds());
    }
}
