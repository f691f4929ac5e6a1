//! Two-column partitions `(2^h, 1^{n-2h})` and the explicit bases for
//! `(2^2, 1^{n-4})`.

use num_bigint::BigInt;
use num_traits::One;

use super::lemfund::TrigonalBases;
use crate::arith::factorial;
use crate::combinatorics::{Partition, Tableau};
use crate::error::{Error, Result};
use crate::exact_linalg::GroupDecomposition;
use crate::specht_module::{expand_polytabloid, TabloidVector};

fn check_tuple(n: usize, xi: &[usize]) -> Result<()> {
    let mut seen = vec![false; n + 1];
    if 2 * xi.len() > n {
        return Err(Error::Domain(format!("second column {xi:?} is too long for n={n}")));
    }
    for &x in xi {
        if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
            return Err(Error::Domain(format!("{xi:?} is not a tuple of distinct entries in [1, {n}]")));
        }
    }
    Ok(())
}

/// Tableau with second column `xi` in the given order and first column the
/// increasing complement.
pub fn angle_tableau(n: usize, xi: &[usize]) -> Result<Tableau> {
    check_tuple(n, xi)?;
    let first: Vec<usize> = (1..=n).filter(|x| !xi.contains(x)).collect();
    if xi.is_empty() {
        return Tableau::from_columns(&[first]);
    }
    Tableau::from_columns(&[first, xi.to_vec()])
}

pub fn angle_polytabloid(n: usize, xi: &[usize]) -> Result<TabloidVector> {
    Ok(expand_polytabloid(&angle_tableau(n, xi)?))
}

/// `<xi> rho^+`: the sum of the polytabloids of all row-permuted tableaux.
pub fn angle_rho_plus(n: usize, xi: &[usize]) -> Result<TabloidVector> {
    let t = angle_tableau(n, xi)?;
    let h = xi.len();
    let mut out = TabloidVector::zero(t.shape().clone());
    for mask in 0u32..(1 << h) {
        let rows: Vec<Vec<usize>> = t
            .rows()
            .iter()
            .enumerate()
            .map(|(r, row)| if r < h && mask >> r & 1 == 1 { vec![row[1], row[0]] } else { row.clone() })
            .collect();
        out.add_scaled(&expand_polytabloid(&Tableau::new(rows)?), 1);
    }
    Ok(out)
}

/// `(<xi>, <eta>)` divided by `h! (n-2h)!`, for increasing `h`-subsets.
pub fn two_column_entry(n: usize, h: usize, xi: &[usize], eta: &[usize]) -> Result<BigInt> {
    for t in [xi, eta] {
        check_tuple(n, t)?;
        if t.len() != h || t.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain(format!("{t:?} is not an increasing {h}-subset of [1, {n}]")));
        }
    }
    let i = xi.iter().filter(|x| eta.contains(x)).count();
    let mag = factorial((h - i) as u64) * factorial((n - 2 * h + i) as u64) / factorial((n - 2 * h) as u64);
    let parity = h - i + xi.iter().sum::<usize>() + eta.iter().sum::<usize>();
    Ok(if parity.is_multiple_of(2) { mag } else { -mag })
}

fn check_n(n: usize) -> Result<()> {
    if n < 6 {
        return Err(Error::OutOfRange(format!("the (2^2,1^(n-4)) bases need n >= 6, got {n}")));
    }
    Ok(())
}

/// The pairs `(b, c)` with `2 <= b < c <= n-2`, `(b, c) != (2, 3)`, ordered
/// by `c` then `b`, both descending.
fn tail_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for c in (3..=n - 2).rev() {
        for b in (2..c).rev() {
            if (b, c) != (2, 3) {
                out.push((b, c));
            }
        }
    }
    out
}

pub fn two_column_22_group(n: usize) -> Result<GroupDecomposition> {
    check_n(n)?;
    let base = factorial((n - 4) as u64) * 2u32;
    let odd = n % 2 == 1;
    let two = |b: bool| if b { BigInt::from(2) } else { BigInt::one() };
    GroupDecomposition::from_summands([
        (two(odd) * &base, 1),
        (&base * (n - 1), n - 3),
        (two(!odd) * &base * (n - 1), 1),
        (&base * ((n - 1) * (n - 2)), (n * n - 5 * n + 2) / 2),
    ])
}

/// `(2(n-4)!)^{(n^2-3n)/2} (n-1)^{(n^2-3n-2)/2} (n-2)^{(n^2-5n+2)/2} 2`.
pub fn lem22_order(n: usize) -> Result<BigInt> {
    check_n(n)?;
    let base = factorial((n - 4) as u64) * 2u32;
    Ok(num_traits::pow(base, (n * n - 3 * n) / 2)
        * num_traits::pow(BigInt::from(n - 1), (n * n - 3 * n - 2) / 2)
        * num_traits::pow(BigInt::from(n - 2), (n * n - 5 * n + 2) / 2)
        * 2u32)
}

fn combo(n: usize, terms: &[(i64, &[usize], bool)]) -> Result<TabloidVector> {
    let mut out = TabloidVector::zero(Partition::two_column(n, 2)?);
    for &(c, xi, rho) in terms {
        let v = if rho { angle_rho_plus(n, xi)? } else { angle_polytabloid(n, xi)? };
        out.add_scaled(&v, c);
    }
    Ok(out)
}

/// Trigonalizing bases for `(2^2, 1^{n-4})`, `n >= 6`.
pub fn two_column_22_structure(n: usize) -> Result<(GroupDecomposition, TrigonalBases)> {
    let group = two_column_22_group(n)?;
    let sign = |e: usize| if e.is_multiple_of(2) { 1i64 } else { -1 };
    let ni = n as i64;
    let mut x = Vec::new();
    let mut y = Vec::new();
    let mut labels = Vec::new();

    for i in 1..=n - 2 {
        y.push(angle_polytabloid(n, &[n - i, n])?);
        if i == 1 {
            if n % 2 == 1 {
                x.push(combo(n, &[(1, &[3, 4], false)])?);
                labels.push("<3,4>".to_string());
            } else {
                x.push(combo(n, &[(1, &[3, n], false), ((ni - 2) / 2, &[3, 4], false)])?);
                labels.push(format!("<3,{n}> + {}<3,4>", (n - 2) / 2));
            }
        } else {
            x.push(combo(n, &[(sign(n - i), &[1, n - 1], false), (1, &[n - i, n - 1], false)])?);
            labels.push(format!("{}<1,{}> + <{},{}>", if sign(n - i) < 0 { "-" } else { "" }, n - 1, n - i, n - 1));
        }
    }
    for i in 1..=n - 3 {
        y.push(angle_polytabloid(n, &[n - 1 - i, n - 1])?);
        if i == 1 {
            let tail: [(i64, &[usize], bool); 3] =
                [(1, &[3, n], false), (sign(n), &[n - 1, n], false), (-(ni - 3), &[3, n - 1], false)];
            let head: (i64, &[usize], bool) = (1, &[n - 2, n - 1], true);
            let v = if n % 2 == 1 {
                let mut v = combo(n, &[(head.0 * (ni - 3) / 2, head.1, true)])?;
                v.add_scaled(&combo(n, &tail)?, -(ni - 1) / 2);
                v
            } else {
                let mut v = combo(n, &[head])?;
                v.add_scaled(&combo(n, &tail)?, 1);
                v
            };
            x.push(v);
            labels.push(format!("special <{},{}>rho+", n - 2, n - 1));
        } else {
            x.push(angle_rho_plus(n, &[n - 1 - i, n - 1])?);
            labels.push(format!("<{},{}>rho+", n - 1 - i, n - 1));
        }
    }
    for (b, c) in tail_pairs(n) {
        y.push(angle_polytabloid(n, &[b, c])?);
        x.push(angle_rho_plus(n, &[b, c])?);
        labels.push(format!("<{b},{c}>rho+"));
    }
    Ok((group, TrigonalBases { x, y, labels }))
}
