//! Two-row partitions `(n - m, m)`: decomposition numbers, Schaper
//! coefficients and the resulting p-parts of the elementary divisors.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{binomial, valuation_i64};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exact_linalg::GroupDecomposition;
use crate::jantzen::FormalSum;

fn digits(mut x: u64, p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while x > 0 {
        out.push(x % p);
        x /= p;
    }
    out
}

/// `f_p(s, t)`: 1 if `s + 1` contains `t` to base `p`, else 0.
///
/// For `t >= 1` this means `s + 1` has strictly more base-`p` digits than
/// `t` and every digit of `t` is either 0 or the matching digit of `s + 1`.
pub fn contains_base_p(s: i64, t: i64, p: u64) -> u8 {
    if s < 0 || t < 0 {
        return 0;
    }
    if t == 0 {
        return 1;
    }
    let sd = digits(s as u64 + 1, p);
    let td = digits(t as u64, p);
    let ok = sd.len() > td.len() && td.iter().zip(&sd).all(|(&ti, &si)| ti == 0 || ti == si);
    ok as u8
}

/// `F_2(k, m) = sum_{i >= 0} f_2(k, m - 2i)`.
pub fn f2_sum(k: i64, m: i64) -> u64 {
    (0..).map(|i| m - 2 * i).take_while(|&t| t >= 0).map(|t| contains_base_p(k, t, 2) as u64).sum()
}

/// The product expression for `F_2(k, m)`, defined when `k + 1` has more
/// binary digits than `m`.
pub fn f2_closed_form(k: u64, m: u64) -> Option<u64> {
    let a = digits(k + 1, 2);
    let b = digits(m, 2);
    let big_k = a.len() as i64 - 1;
    let big_m = b.len() as i64 - 1;
    if big_k <= big_m {
        return None;
    }
    if !(k * m).is_multiple_of(2) {
        return Some(0);
    }
    let a_at = |s: i64| a.get(s as usize).copied().unwrap_or(0);
    let b_at = |s: i64| b.get(s as usize).copied().unwrap_or(0);
    let t = (1..=big_m).filter(|&s| a_at(s) < b_at(s)).max().unwrap_or(0);
    let head: u32 = (1..=t).map(|u| a_at(u) as u32).sum();
    let mut tail = 1u64;
    for s in t + 1..=big_m {
        if a_at(s) * b_at(s) == 1 {
            let e: u32 = (t + 1..s).map(|u| a_at(u) as u32).sum();
            tail += 1 << e;
        }
    }
    Some((1u64 << head) * tail)
}

/// `rank S^{(n-m,m)} = C(n, m) (n - 2m + 1) / (n - m + 1)`.
pub fn two_row_rank(n: u64, m: u64) -> BigInt {
    let (n, m) = (n as i64, m as i64);
    binomial(n, m) * (n - 2 * m + 1) / (n - m + 1)
}

/// Tables attached to `(n - m, m)` at the prime `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoRowContext {
    pub n: u64,
    pub m: u64,
    pub p: u64,
    /// `f_p(n - 2j, i - j)` at row `i`, column `j`, for `0 <= i, j <= n/2`.
    pub f_table: Vec<Vec<i64>>,
    /// Inverse of `f_table`.
    pub b_table: Vec<Vec<i64>>,
    /// Schaper coefficients `v_p((n + 1 - m - i)/(m - i))` for `i < m`.
    pub schaper: Vec<i64>,
    /// `mu(n, m, p; j)` for `j <= m`.
    pub mu: Vec<i64>,
    /// `dim D^{(n-j,j)}` over `F_p` for `j <= n/2`.
    pub dims_d: Vec<BigInt>,
}

pub fn two_row_context(n: u64, m: u64, p: u64) -> Result<TwoRowContext> {
    if 2 * m > n {
        return Err(Error::OutOfRange(format!("two-row shape needs m <= n/2, got n={n}, m={m}")));
    }
    if !crate::arith::is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let half = (n / 2) as usize;
    let ni = n as i64;
    let f_table: Vec<Vec<i64>> = (0..=half)
        .map(|i| (0..=half).map(|j| contains_base_p(ni - 2 * j as i64, i as i64 - j as i64, p) as i64).collect())
        .collect();
    let mut b_table = vec![vec![0i64; half + 1]; half + 1];
    for i in 0..=half {
        b_table[i][i] = 1;
        for j in (0..i).rev() {
            b_table[i][j] = -(j..i).map(|k| f_table[i][k] * b_table[k][j]).sum::<i64>();
        }
    }
    let mi = m as i64;
    let schaper: Vec<i64> = (0..mi)
        .map(|i| valuation_i64(p, ni + 1 - mi - i) as i64 - valuation_i64(p, mi - i) as i64)
        .collect();
    let mu: Vec<i64> = (0..=mi)
        .map(|j| (j..mi).map(|i| schaper[i as usize] * contains_base_p(ni - 2 * j, i - j, p) as i64).sum())
        .collect();
    let dims_d: Vec<BigInt> = (0..=half)
        .map(|j| (0..=j).map(|l| BigInt::from(b_table[j][l]) * two_row_rank(n, l as u64)).sum())
        .collect();
    Ok(TwoRowContext { n, m, p, f_table, b_table, schaper, mu, dims_d })
}

/// The `p`-part of the divisor group: `sum_{j<m} (Z/p^{mu_j})^{dim D^{(n-j,j)}}`.
pub fn two_row_ediv(n: u64, m: u64, p: u64) -> Result<GroupDecomposition> {
    let ctx = two_row_context(n, m, p)?;
    let mut summands = Vec::new();
    for j in 0..m as usize {
        let mu = ctx.mu[j];
        if mu < 0 || ctx.dims_d[j].is_negative() {
            return Err(Error::Inconsistent(format!("negative exponent at j={j} for ({},{m}), p={p}", n - m)));
        }
        if mu == 0 || ctx.dims_d[j].is_zero() {
            continue;
        }
        let mult = ctx.dims_d[j].to_usize().ok_or_else(|| Error::OutOfRange("dimension too large".into()))?;
        summands.push((num_traits::pow(BigInt::from(p), mu as usize), mult));
    }
    GroupDecomposition::from_summands(summands)
}

/// The large-prime form `sum_{j<m} p-part of (Z/(n+1-m-j))^{rank S^{(n-j,j)}}`,
/// valid for `p > m`.
pub fn two_row_ediv_large_prime(n: u64, m: u64, p: u64) -> Result<GroupDecomposition> {
    if 2 * m > n {
        return Err(Error::OutOfRange(format!("two-row shape needs m <= n/2, got n={n}, m={m}")));
    }
    if p <= m {
        return Err(Error::Domain(format!("the large-prime form needs p > m, got p={p}, m={m}")));
    }
    let mut summands = Vec::new();
    for j in 0..m {
        let v = valuation_i64(p, (n + 1 - m - j) as i64);
        let mult = two_row_rank(n, j).to_usize().ok_or_else(|| Error::OutOfRange("dimension too large".into()))?;
        summands.push((num_traits::pow(BigInt::from(p), v as usize), mult));
    }
    GroupDecomposition::from_summands(summands)
}

/// `[S^{(n-m,m)}] = sum_j f_p(n-2j, m-j) [D^{(n-j,j)}]_{mu_j}` over `F_p`.
pub fn two_row_decomposition(n: u64, m: u64, p: u64) -> Result<FormalSum> {
    let ctx = two_row_context(n, m, p)?;
    let mut sum = FormalSum::new('D');
    for j in 0..=m {
        let f = contains_base_p(n as i64 - 2 * j as i64, (m - j) as i64, p) as i64;
        if f == 0 {
            continue;
        }
        let layer = u32::try_from(ctx.mu[j as usize])
            .map_err(|_| Error::Inconsistent(format!("negative layer at j={j}")))?;
        sum.add(f, Partition::two_row(n as usize, j as usize)?, Some(layer));
    }
    Ok(sum)
}
