use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::{exact_sqrt, factorial, largest_square_divisor_root};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exact_linalg::DivisorChain;
use crate::oracle::brute;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricReport {
    pub lambda: Partition,
    pub rank: usize,
    /// Side of the Durfee square.
    pub s: usize,
    /// Product of the main-diagonal hook lengths.
    pub h: BigInt,
    /// `d_{r/2+1} / d_{r/2}`.
    pub m_jump: BigInt,
    /// Product of the hook lengths strictly above the diagonal.
    pub alpha: BigInt,
    /// First elementary divisor.
    pub gamma: BigInt,
    /// Largest `h` with `h^2 | H`.
    pub h_sq: BigInt,
    /// Whether `(-1)^{(n-s)/2} H` is a square in `Z`.
    pub signed_h_is_square: bool,
    pub h_over_m_square: bool,
    pub h_over_m_integer: bool,
    /// `gamma | alpha sqrt(H)` when `signed_h_is_square`, else `gamma | alpha h_sq`.
    pub gamma_divides: bool,
    /// `(n!/r) / m_jump = d_{r/2}^2`.
    pub middle_square: bool,
}

/// Report for a symmetric partition from its divisor chain.
pub fn symmetric_report_from_chain(lambda: &Partition, chain: &DivisorChain) -> Result<SymmetricReport> {
    if !lambda.is_symmetric() {
        return Err(Error::Domain(format!("{lambda} is not symmetric")));
    }
    if lambda.n() <= 1 {
        return Err(Error::Domain("the partition (1) has odd rank".into()));
    }
    let r = chain.len();
    if !r.is_multiple_of(2) {
        return Err(Error::Inconsistent(format!("symmetric {lambda} has odd rank {r}")));
    }
    let d = chain.divisors();
    let (lo, hi) = (&d[r / 2 - 1], &d[r / 2]);
    let m_jump = hi / lo;
    let s = (1..=lambda.len()).take_while(|&i| lambda.part(i) >= i).count();
    let h: BigInt = (1..=s).map(|i| BigInt::from(2 * lambda.part(i) - 2 * i + 1)).product();
    let alpha: BigInt = lambda
        .cells()
        .filter(|&(i, j)| j > i)
        .map(|(i, j)| BigInt::from(lambda.hook_length(i, j).expect("cell in diagram")))
        .product();
    let gamma = d[0].clone();
    let h_u64 = h.to_u64().ok_or_else(|| Error::OutOfRange("diagonal hook product too large".into()))?;
    let h_sq = BigInt::from(largest_square_divisor_root(h_u64));
    let sqrt_h = exact_sqrt(&h);
    let signed_h_is_square = ((lambda.n() - s) / 2).is_multiple_of(2) && sqrt_h.is_some();
    let gamma_divides = match (&sqrt_h, signed_h_is_square) {
        (Some(root), true) => (&alpha * root).is_multiple_of(&gamma),
        _ => (&alpha * &h_sq).is_multiple_of(&gamma),
    };
    let quotient = factorial(lambda.n() as u64) / BigInt::from(r);
    let middle_square = quotient.is_multiple_of(&m_jump) && &quotient / &m_jump == lo * lo;
    Ok(SymmetricReport {
        lambda: lambda.clone(),
        rank: r,
        s,
        h_over_m_square: exact_sqrt(&(&h * &m_jump)).is_some(),
        h_over_m_integer: h.is_multiple_of(&m_jump),
        h,
        m_jump,
        alpha,
        gamma,
        h_sq,
        signed_h_is_square,
        gamma_divides,
        middle_square,
    })
}

/// [`symmetric_report_from_chain`] on the brute-force chain.
pub fn symmetric_report(lambda: &Partition) -> Result<SymmetricReport> {
    if !lambda.is_symmetric() {
        return Err(Error::Domain(format!("{lambda} is not symmetric")));
    }
    symmetric_report_from_chain(lambda, &brute(lambda)?.chain)
}


#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn three_two_one() {
        let r = symmetric_report(&p("3,2,1")).unwrap();
        assert_eq!((r.h.clone(), r.m_jump.clone(), r.alpha.clone(), r.gamma.clone()), (5.into(), 5.into(), 3.into(), 1.into()));
        assert!(r.h_over_m_square && r.h_over_m_integer && r.gamma_divides && r.middle_square);
    }

    #[test]
    fn two_two_and_hook() {
        let r = symmetric_report(&p("2,2")).unwrap();
        assert_eq!((r.h.clone(), r.m_jump.clone()), (3.into(), 3.into()));
        let r = symmetric_report(&p("4,1,1,1")).unwrap();
        assert_eq!((r.alpha.clone(), r.gamma.clone()), (6.into(), 6.into()));
        assert!(r.gamma_divides);
        assert!(symmetric_report(&p("3,1")).is_err());
    }
}
