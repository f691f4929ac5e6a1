//! Primes larger than `n - lambda_1`: the Specht module is either simple or
//! has exactly two composition factors.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::arith::{is_prime, valuation_i64};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exact_linalg::GroupDecomposition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LargePrimeCase {
    Simple,
    Shifted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LargePrimeReport {
    pub lambda: Partition,
    pub p: u64,
    pub case: LargePrimeCase,
    /// First-row hook lengths `h_j = lambda_1 - j + lambda'_j`, `j in [1, lambda_2]`.
    pub first_row_hooks: Vec<usize>,
    /// The column `t` with `p | h_t`, when there is one.
    pub t: Option<usize>,
    pub s: Option<usize>,
    pub h_t: Option<usize>,
    pub shift: Option<Partition>,
    pub layer: u32,
    pub dim_shift: BigInt,
    pub strips: Vec<Partition>,
    pub p_part: GroupDecomposition,
}

pub fn large_prime_analyze(lambda: &Partition, p: u64) -> Result<LargePrimeReport> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let n = lambda.n();
    if lambda.len() <= 1 {
        return Err(Error::Domain(format!("{lambda} is a one-row partition")));
    }
    if p as usize <= n - lambda.part(1) {
        return Err(Error::Domain(format!("p={p} does not exceed n - lambda_1 = {}", n - lambda.part(1))));
    }
    let hooks: Vec<usize> = (1..=lambda.part(2)).map(|j| lambda.part(1) - j + lambda.col(j)).collect();
    let hit: Vec<usize> = (1..=hooks.len()).filter(|&j| hooks[j - 1].is_multiple_of(p as usize)).collect();
    let simple = |hooks| LargePrimeReport {
        lambda: lambda.clone(),
        p,
        case: LargePrimeCase::Simple,
        first_row_hooks: hooks,
        t: None,
        s: None,
        h_t: None,
        shift: None,
        layer: 0,
        dim_shift: BigInt::from(0),
        strips: Vec::new(),
        p_part: GroupDecomposition::from_summands(Vec::new()).expect("empty decomposition"),
    };
    let t = match hit.as_slice() {
        [] => return Ok(simple(hooks)),
        [t] => *t,
        _ => return Err(Error::Inconsistent(format!("{p} divides several first-row hooks {hooks:?} of {lambda}"))),
    };
    let h_t = hooks[t - 1];
    let s = lambda.col(t);
    let shift = lambda.carter_payne_shift(t)?;
    let layer = valuation_i64(p, h_t as i64);
    let strips: Vec<Partition> = (2..=s).map(|i| lambda.strip_skew_hook(i, t)).collect::<Result<_>>()?;
    let dim_shift: BigInt = strips
        .iter()
        .enumerate()
        .map(|(k, mu)| {
            let i = k + 2;
            if (s - i).is_multiple_of(2) { mu.dim_specht() } else { -mu.dim_specht() }
        })
        .sum();
    if dim_shift.is_negative() {
        return Err(Error::Inconsistent(format!("negative dimension {dim_shift} for the shift of {lambda}")));
    }
    let mult = dim_shift.to_usize().ok_or_else(|| Error::OutOfRange("dimension too large".into()))?;
    let p_part = GroupDecomposition::from_summands([(num_traits::pow(BigInt::from(p), layer as usize), mult)])?;
    Ok(LargePrimeReport {
        lambda: lambda.clone(),
        p,
        case: LargePrimeCase::Shifted,
        first_row_hooks: hooks,
        t: Some(t),
        s: Some(s),
        h_t: Some(h_t),
        shift: Some(shift),
        layer,
        dim_shift,
        strips,
        p_part,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_two() {
        let l: Partition = "3,2".parse().unwrap();
        let r = large_prime_analyze(&l, 3).unwrap();
        assert_eq!(r.case, LargePrimeCase::Shifted);
        assert_eq!((r.t, r.h_t, r.layer), (Some(2), Some(3), 1));
        assert_eq!(r.shift, Some("4,1".parse().unwrap()));
        assert_eq!(r.dim_shift, BigInt::from(4));
        assert_eq!(r.p_part.to_string(), "(Z/3)^4");
        assert_eq!(large_prime_analyze(&l, 5).unwrap().case, LargePrimeCase::Simple);
        assert!(large_prime_analyze(&l, 2).is_err());
        assert!(large_prime_analyze(&"5".parse().unwrap(), 7).is_err());
    }
}
