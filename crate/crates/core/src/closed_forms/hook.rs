//! Hook partitions `(n - l, 1^l)`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::lemfund::{polytabloid, TrigonalBases};
use super::two_row::f2_sum;
use crate::arith::{binomial, factorial, valuation, valuation_i64};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exact_linalg::GroupDecomposition;
use crate::jantzen::FormalSum;
use crate::specht_module::TabloidVector;

/// Group, order and (for a given prime) Jantzen layers of a hook.
#[derive(Clone, Debug)]
pub struct HookForms {
    pub group: GroupDecomposition,
    pub order: BigInt,
    pub layers: Option<FormalSum>,
}

fn check(n: usize, l: usize) -> Result<()> {
    if n < 2 || l >= n {
        return Err(Error::OutOfRange(format!("hook needs n >= 2 and 0 <= l < n, got n={n}, l={l}")));
    }
    Ok(())
}

fn count(x: BigInt) -> Result<usize> {
    x.to_usize().ok_or_else(|| Error::OutOfRange("multiplicity too large".into()))
}

/// `(Z/l!)^{C(n-2,l)} + (Z/n l!)^{C(n-2,l-1)}`.
pub fn hook_group(n: usize, l: usize) -> Result<GroupDecomposition> {
    check(n, l)?;
    let (ni, li) = (n as i64, l as i64);
    let lf = factorial(l as u64);
    GroupDecomposition::from_summands([
        (lf.clone(), count(binomial(ni - 2, li))?),
        (lf * n, count(binomial(ni - 2, li - 1))?),
    ])
}

/// `l!^{C(n-1,l)} n^{C(n-2,l-1)}`.
pub fn hook_order(n: usize, l: usize) -> Result<BigInt> {
    check(n, l)?;
    let (ni, li) = (n as i64, l as i64);
    let a = count(binomial(ni - 1, li))?;
    let b = count(binomial(ni - 2, li - 1))?;
    Ok(num_traits::pow(factorial(l as u64), a) * num_traits::pow(BigInt::from(n), b))
}

/// Polytabloid whose first column reads `b_0, ..., b_l` top to bottom; the
/// rest of the first row is increasing.
pub fn hook_polytabloid(n: usize, column: &[usize]) -> Result<TabloidVector> {
    let l = column.len().checked_sub(1).ok_or_else(|| Error::Domain("empty first column".into()))?;
    check(n, l)?;
    let mut seen = vec![false; n + 1];
    for &b in column {
        if b == 0 || b > n || std::mem::replace(&mut seen[b], true) {
            return Err(Error::Domain(format!("first column {column:?} is not a tuple of distinct entries in [1, {n}]")));
        }
    }
    let mut first = vec![column[0]];
    first.extend((1..=n).filter(|&x| !seen[x]));
    let mut rows = vec![first];
    rows.extend(column[1..].iter().map(|&b| vec![b]));
    Ok(polytabloid(rows))
}

pub(crate) fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Bases `x`, `y` whose pairing table is upper triangular with diagonal
/// `l!` on the first `C(n-2,l)` vectors and `n l!` on the rest.
///
/// `x` runs over `<n, b>` for `l`-subsets `b` of `[2, n-1]`, then over
/// `sum_{s in [1,n-1] \ d} <s, d, n>` for `(l-1)`-subsets `d`; the matching
/// `y` vectors are `<1, b>` and `<1, d, n>`.
pub fn hook_trigonal_basis(n: usize, l: usize) -> Result<TrigonalBases> {
    check(n, l)?;
    let inner: Vec<usize> = (2..n).collect();
    let (mut x, mut y, mut labels) = (Vec::new(), Vec::new(), Vec::new());
    for b in subsets(&inner, l) {
        let mut xc = vec![n];
        xc.extend(&b);
        let mut yc = vec![1];
        yc.extend(&b);
        x.push(hook_polytabloid(n, &xc)?);
        y.push(hook_polytabloid(n, &yc)?);
        labels.push(format!("<{}>", join(&xc)));
    }
    if l >= 1 {
        for d in subsets(&inner, l - 1) {
            let mut sum = TabloidVector::zero(Partition::hook(n, l)?);
            for s in (1..n).filter(|s| !d.contains(s)) {
                let mut c = vec![s];
                c.extend(&d);
                c.push(n);
                sum.add_scaled(&hook_polytabloid(n, &c)?, 1);
            }
            let mut yc = vec![1];
            yc.extend(&d);
            yc.push(n);
            x.push(sum);
            y.push(hook_polytabloid(n, &yc)?);
            labels.push(format!("sum_s <s,{}{}>", join(&d), if d.is_empty() { format!("{n}") } else { format!(",{n}") }));
        }
    }
    Ok(TrigonalBases { x, y, labels })
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Jantzen layers of the hook `(n - l, 1^l)` at `p` in terms of simple
/// modules.
pub fn hook_layers(n: usize, l: usize, p: u64) -> Result<FormalSum> {
    check(n, l)?;
    if !crate::arith::is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let lf = factorial(l as u64);
    let v_lf = valuation(p, &lf);
    let v_lfn = v_lf + valuation_i64(p, n as i64);
    let mut out = FormalSum::new('D');
    if p == 2 {
        let (top, k_of) = if 2 * l < n { (l, l) } else { (n - l - 1, n - l - 1) };
        for j in 0..=top {
            let mult = f2_sum(n as i64 - 2 * j as i64, (k_of - j) as i64);
            if mult == 0 {
                continue;
            }
            let layer = if (l + j) % 2 == 1 { v_lfn } else { v_lf };
            out.add(mult as i64, Partition::two_row(n, j)?, Some(layer));
        }
        return Ok(out);
    }
    let reg = |j: usize| -> Result<Partition> { Ok(Partition::hook(n, j)?.regularity(p as usize).regularized) };
    let pu = p as usize;
    if !n.is_multiple_of(pu) {
        out.add(1, reg(l)?, Some(v_lf));
    } else if l == 0 {
        out.add(1, Partition::row(n), Some(0));
    } else if l == n - 1 {
        out.add(1, reg(n - 1)?, Some(valuation(p, &factorial(n as u64))));
    } else {
        let cut = n - n / pu;
        let j = l + (l >= cut) as usize;
        let j2 = (l - 1) + (l > cut) as usize;
        out.add(1, reg(j)?, Some(v_lf));
        out.add(1, reg(j2)?, Some(v_lfn));
    }
    Ok(out)
}

/// Group and order, plus the layers when a prime is given.
pub fn hook_forms(n: usize, l: usize, p: Option<u64>) -> Result<HookForms> {
    let group = hook_group(n, l)?;
    let order = hook_order(n, l)?;
    if group.order() != order {
        return Err(Error::Inconsistent(format!("hook ({n},{l}): group order {} differs from {order}", group.order())));
    }
    let layers = p.map(|p| hook_layers(n, l, p)).transpose()?;
    Ok(HookForms { group, order, layers })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::lemfund::lemfund_verify;
    use crate::exact_linalg::{DivisorChain, IntMatrix};

    #[test]
    fn small_groups() {
        assert_eq!(hook_group(4, 2).unwrap().to_string(), "Z/2 + (Z/8)^2");
        assert_eq!(hook_group(5, 3).unwrap().to_string(), "Z/6 + (Z/30)^3");
        assert!(hook_group(6, 0).unwrap().is_trivial());
        assert_eq!(hook_order(5, 3).unwrap(), BigInt::from(6 * 30 * 30 * 30));
        assert!(hook_group(4, 4).is_err());
    }

    #[test]
    fn four_two_pairing_table() {
        let b = hook_trigonal_basis(4, 2).unwrap();
        let expected = IntMatrix::from_i64_rows(&[vec![2, -2, 2], vec![0, 8, 0], vec![0, 0, 8]]).unwrap();
        assert_eq!(b.pairing(), expected);
        let chain = lemfund_verify(&b.x, &b.y, &BigInt::from(128)).unwrap();
        assert_eq!(chain, DivisorChain::from_u64(&[2, 8, 8]).unwrap());
    }

    #[test]
    fn fourteen_eight_layers_at_two() {
        let s = hook_layers(14, 8, 2).unwrap();
        assert_eq!(
            s.to_string(),
            "3[D^(14)]_7 + 2[D^(13,1)]_8 + 2[D^(12,2)]_7 + [D^(11,3)]_8 + [D^(10,4)]_7 + [D^(9,5)]_8"
        );
    }
}
