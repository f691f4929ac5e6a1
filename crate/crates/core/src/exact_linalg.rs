//! Exact integer linear algebra: Smith normal form, rank over `F_p`,
//! kernels modulo `N` as canonical lattices, divisor chains and finite
//! abelian group decompositions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::valuation;
use crate::error::{Error, Result};

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Domain("ragged matrix rows".into()));
        }
        let n = rows.len();
        Ok(IntMatrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    /// Parses the interchange format: an array of arrays of decimal strings.
    pub fn from_decimal_strings(rows: &[Vec<String>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| {
                        s.trim().parse::<BigInt>().map_err(|_| Error::Parse {
                            text: s.clone(),
                            reason: "not a decimal integer".into(),
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }

    pub fn to_decimal_strings(&self) -> Vec<Vec<String>> {
        self.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let rows: Vec<Vec<BigInt>> = (0..self.rows)
            .into_par_iter()
            .map(|i| {
                (0..other.cols)
                    .map(|j| {
                        let mut acc = BigInt::zero();
                        for k in 0..self.cols {
                            let a = self.get(i, k);
                            if !a.is_zero() {
                                acc += a * other.get(k, j);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Ok(IntMatrix { rows: self.rows, cols: other.cols, data: rows.into_iter().flatten().collect() })
    }

    /// Divides every entry exactly by `d`; `None` if some entry is not a multiple.
    pub fn div_exact(&self, d: &BigInt) -> Option<IntMatrix> {
        let mut data = Vec::with_capacity(self.data.len());
        for x in &self.data {
            let (q, r) = x.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            data.push(q);
        }
        Some(IntMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> IntMatrix {
        let mut m = Self::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(row_perm[i], col_perm[j]).clone());
            }
        }
        m
    }
}

/// Elementary divisors `d_1 | d_2 | ... | d_r`, all positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DivisorChain {
    divisors: Vec<BigInt>,
}

impl DivisorChain {
    pub fn new(divisors: Vec<BigInt>) -> Result<Self> {
        if divisors.iter().any(|d| !d.is_positive()) {
            return Err(Error::Inconsistent("divisor chain entries must be positive".into()));
        }
        if divisors.windows(2).any(|w| !w[0].is_zero() && !(&w[1] % &w[0]).is_zero()) {
            return Err(Error::Inconsistent("divisor chain is not a divisibility chain".into()));
        }
        Ok(DivisorChain { divisors })
    }

    pub fn from_u64(divisors: &[u64]) -> Result<Self> {
        Self::new(divisors.iter().map(|&d| BigInt::from(d)).collect())
    }

    pub fn divisors(&self) -> &[BigInt] {
        &self.divisors
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }

    pub fn first(&self) -> Option<&BigInt> {
        self.divisors.first()
    }

    pub fn product(&self) -> BigInt {
        self.divisors.iter().product()
    }

    /// `v_p(d_i)` for each divisor, ascending.
    pub fn valuations(&self, p: u64) -> Vec<u32> {
        self.divisors.iter().map(|d| valuation(p, d)).collect()
    }

    pub fn count_coprime_to(&self, p: u64) -> usize {
        self.valuations(p).iter().filter(|&&v| v == 0).count()
    }

    /// Primes dividing the last divisor, ascending.
    pub fn primes(&self) -> Vec<u64> {
        let Some(last) = self.divisors.last() else { return Vec::new() };
        let mut x = last.clone();
        let mut out = Vec::new();
        let mut p = 2u64;
        while x > BigInt::one() {
            let bp = BigInt::from(p);
            if BigInt::from(p) * BigInt::from(p) > x {
                out.push(x.to_u64().expect("prime factor exceeds u64"));
                break;
            }
            if (&x % &bp).is_zero() {
                out.push(p);
                while (&x % &bp).is_zero() {
                    x /= &bp;
                }
            }
            p += 1;
        }
        out
    }

    pub fn group(&self) -> GroupDecomposition {
        assemble_group(self)
    }

    /// Compact `d^multiplicity` rendering, e.g. `1^4 3^4 15^4 45^4`.
    pub fn compact(&self) -> String {
        let mut out: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.divisors.len() {
            let j = (i..self.divisors.len()).find(|&j| self.divisors[j] != self.divisors[i]).unwrap_or(self.divisors.len());
            out.push(format!("{}^{}", self.divisors[i], j - i));
            i = j;
        }
        out.join(" ")
    }
}

impl fmt::Display for DivisorChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.compact())
    }
}

/// A finite abelian group `sum (Z/m)^k`, normalized: moduli at least 2,
/// distinct and ascending, multiplicities positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GroupDecomposition {
    summands: Vec<(BigInt, usize)>,
}

impl GroupDecomposition {
    /// Normalizes an arbitrary list of `(modulus, multiplicity)` pairs.
    pub fn from_summands<I: IntoIterator<Item = (BigInt, usize)>>(items: I) -> Result<Self> {
        let mut acc: BTreeMap<BigInt, usize> = BTreeMap::new();
        for (m, k) in items {
            if !m.is_positive() {
                return Err(Error::Domain(format!("modulus {m} must be positive")));
            }
            if m.is_one() || k == 0 {
                continue;
            }
            *acc.entry(m).or_default() += k;
        }
        Ok(GroupDecomposition { summands: acc.into_iter().collect() })
    }

    pub fn summands(&self) -> &[(BigInt, usize)] {
        &self.summands
    }

    pub fn is_trivial(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn order(&self) -> BigInt {
        self.summands.iter().map(|(m, k)| num_traits::pow(m.clone(), *k)).product()
    }

    /// Number of cyclic summands, counted with multiplicity.
    pub fn count(&self) -> usize {
        self.summands.iter().map(|(_, k)| k).sum()
    }

    /// Sorted `p`-adic valuations of all cyclic summands with nontrivial
    /// `p`-part; two groups are isomorphic iff these agree for every prime.
    pub fn p_valuations(&self, p: u64) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .summands
            .iter()
            .flat_map(|(m, k)| std::iter::repeat_n(valuation(p, m), *k))
            .filter(|&v| v > 0)
            .collect();
        out.sort_unstable();
        out
    }

    /// The `p`-primary component.
    pub fn p_part(&self, p: u64) -> GroupDecomposition {
        let bp = BigInt::from(p);
        Self::from_summands(self.summands.iter().map(|(m, k)| (num_traits::pow(bp.clone(), valuation(p, m) as usize), *k)))
            .expect("prime powers are positive")
    }

    /// Primes dividing some modulus.
    pub fn primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self
            .summands
            .iter()
            .flat_map(|(m, _)| DivisorChain { divisors: vec![m.clone()] }.primes())
            .collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    }

    /// Isomorphism test via primary decompositions.
    pub fn is_isomorphic(&self, other: &GroupDecomposition) -> bool {
        let mut ps = self.primes();
        ps.extend(other.primes());
        ps.sort_unstable();
        ps.dedup();
        ps.iter().all(|&p| self.p_valuations(p) == other.p_valuations(p))
    }

    /// Invariant factor chain of length `rank`, padded with ones.
    pub fn to_chain(&self, rank: usize) -> Result<DivisorChain> {
        let primes = self.primes();
        let per_prime: BTreeMap<u64, Vec<BigInt>> = primes
            .iter()
            .map(|&p| (p, self.p_valuations(p).iter().map(|&v| num_traits::pow(BigInt::from(p), v as usize)).collect()))
            .collect();
        merge_p_parts(&per_prime, rank)
    }
}

impl fmt::Display for GroupDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|(m, k)| if *k == 1 { format!("Z/{m}") } else { format!("(Z/{m})^{k}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Smith normal form data of an integer matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmithForm {
    /// Nonzero invariant factors.
    pub chain: DivisorChain,
    /// Number of zero invariant factors, `min(rows, cols) - rank`.
    pub zero_factors: usize,
    /// Signed determinant for square input.
    pub det: Option<BigInt>,
}

/// Smith normal form.
///
/// Square nonsingular matrices whose determinant factors over small primes
/// go through [`smith_normal_form_local`]; everything else is eliminated
/// directly over the integers.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    if m.is_square() && m.rows > 0 {
        if let Some(s) = smith_normal_form_local(m) {
            return s;
        }
    }
    smith_normal_form_direct(m)
}

/// Smith form from the exact determinant and one elimination per prime
/// divisor, carried out modulo a prime power. `None` if the matrix is
/// singular, the determinant has a prime factor above `2^16`, or a local
/// modulus would not fit in a machine word.
pub fn smith_normal_form_local(m: &IntMatrix) -> Option<SmithForm> {
    let det = determinant(m);
    if det.is_zero() {
        return None;
    }
    let mut rest = det.abs();
    let mut per_prime: BTreeMap<u64, Vec<BigInt>> = BTreeMap::new();
    let mut p = 2u64;
    while !rest.is_one() {
        if p > 1 << 16 {
            return None;
        }
        let bp = BigInt::from(p);
        let mut e = 0u32;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            e += 1;
        }
        if e > 0 {
            let vals = local_valuations(m, p, e)?;
            per_prime.insert(p, vals.into_iter().filter(|&v| v > 0).map(|v| num_traits::pow(bp.clone(), v as usize)).collect());
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let chain = merge_p_parts(&per_prime, m.rows).ok()?;
    debug_assert_eq!(chain.product(), det.abs());
    Some(SmithForm { chain, zero_factors: 0, det: Some(det) })
}

/// Valuations at `p` of the invariant factors of a nonsingular matrix whose
/// determinant has valuation `e`.
fn local_valuations(m: &IntMatrix, p: u64, e: u32) -> Option<Vec<u32>> {
    let mut k = (e + 1).min(4);
    loop {
        let q = p.checked_pow(k).filter(|&q| q < 1 << 62)?;
        if let Some(vals) = local_elimination(m, p, k, q) {
            if vals.iter().sum::<u32>() == e {
                return Some(vals);
            }
            return None;
        }
        if k > e {
            return None;
        }
        k = (2 * k).min(e + 1);
    }
}

/// Diagonalizes over `Z/p^k`. Returns the pivot valuations, or `None` if
/// some invariant factor vanishes modulo `p^k`.
fn local_elimination(m: &IntMatrix, p: u64, k: u32, q: u64) -> Option<Vec<u32>> {
    let bq = BigInt::from(q);
    let n = m.rows;
    let mut a: Vec<Vec<u64>> =
        (0..n).map(|i| m.row(i).iter().map(|x| x.mod_floor(&bq).to_u64().unwrap()).collect()).collect();
    let val = |x: u64| -> u32 {
        if x == 0 {
            return k;
        }
        let (mut x, mut v) = (x, 0);
        while x % p == 0 {
            x /= p;
            v += 1;
        }
        v
    };
    let mulmod = |x: u64, y: u64| -> u64 { ((x as u128 * y as u128) % q as u128) as u64 };
    let mut out = Vec::with_capacity(n);
    for t in 0..n {
        let mut best = (k, t, t);
        'search: for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                let v = val(x);
                if v < best.0 {
                    best = (v, i, j);
                    if v == 0 {
                        break 'search;
                    }
                }
            }
        }
        let (v, pi, pj) = best;
        if v >= k {
            return None;
        }
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let pv = p.pow(v);
        let unit = a[t][t] / pv;
        let inv = mod_inverse(unit, q);
        let pivot_row = a[t].clone();
        a[t + 1..].par_iter_mut().for_each(|row| {
            if row[t] == 0 {
                return;
            }
            let f = mulmod(row[t] / pv, inv);
            if f == 0 {
                return;
            }
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(t) {
                let sub = mulmod(f, y);
                *x = if *x >= sub { *x - sub } else { *x + q - sub };
            }
        });
        out.push(v);
    }
    Some(out)
}

/// Exact determinant by Chinese remaindering over word-sized primes, using
/// the Hadamard bound.
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut bits = 2.0f64;
    for i in 0..n {
        let norm2: f64 = m.row(i).iter().map(|x| x.to_f64().unwrap_or(f64::INFINITY).powi(2)).sum();
        if norm2 == 0.0 {
            return BigInt::zero();
        }
        bits += 0.5 * norm2.log2();
    }
    let count = (bits / 30.0).ceil() as usize + 1;
    let primes = word_primes(count);
    let residues: Vec<u64> = primes.par_iter().map(|&p| det_mod_prime(m, p)).collect();
    let mut x = BigInt::zero();
    let mut modulus = BigInt::one();
    for (&p, &r) in primes.iter().zip(&residues) {
        let bp = BigInt::from(p);
        let xm = x.mod_floor(&bp).to_u64().unwrap();
        let mm = modulus.mod_floor(&bp).to_u64().unwrap();
        let diff = (r + p - xm) % p;
        let t = (diff as u128 * mod_inverse(mm, p) as u128 % p as u128) as u64;
        x += &modulus * t;
        modulus *= p;
    }
    let half = &modulus >> 1;
    if x > half {
        x -= &modulus;
    }
    x
}

/// The `count` largest primes below `2^31`.
fn word_primes(count: usize) -> Vec<u64> {
    use std::sync::Mutex;
    static CACHE: Mutex<Vec<u64>> = Mutex::new(Vec::new());
    let mut cache = CACHE.lock().unwrap();
    let mut c = cache.last().map_or(1u64 << 31, |&p| p) - 1;
    while cache.len() < count {
        if crate::arith::is_prime(c) {
            cache.push(c);
        }
        c -= 1;
    }
    cache[..count].to_vec()
}

fn det_mod_prime(m: &IntMatrix, p: u64) -> u64 {
    let bp = BigInt::from(p);
    let n = m.rows;
    let mut a: Vec<Vec<u64>> =
        (0..n).map(|i| m.row(i).iter().map(|x| x.mod_floor(&bp).to_u64().unwrap()).collect()).collect();
    let mut det = 1u64;
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| a[r][c] != 0) else { return 0 };
        if r != c {
            a.swap(r, c);
            det = (p - det) % p;
        }
        det = det * a[c][c] % p;
        let inv = mod_inverse(a[c][c], p);
        let (top, bottom) = a.split_at_mut(c + 1);
        let pivot = &top[c];
        for row in bottom.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = row[c] * inv % p;
            for j in c..n {
                row[j] = (row[j] + p * p - f * pivot[j] % p) % p;
            }
        }
    }
    det
}

/// Smith normal form by elimination over the integers with a
/// minimal-magnitude pivot.
pub fn smith_normal_form_direct(m: &IntMatrix) -> SmithForm {
    let mut a: Vec<Vec<BigInt>> = m.to_rows();
    let (rows, cols) = (m.rows, m.cols);
    let mut negate = false;
    let mut diag: Vec<BigInt> = Vec::new();
    let mut k = 0;
    while k < rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&a, k) else { break };
        if pi != k {
            a.swap(pi, k);
            negate = !negate;
        }
        if pj != k {
            for row in a.iter_mut() {
                row.swap(pj, k);
            }
            negate = !negate;
        }
        // Clear column k below the pivot, then row k to the right.
        let pivot_row = a[k].clone();
        let pivot = pivot_row[k].clone();
        let col_leftover: bool = a[k + 1..]
            .par_iter_mut()
            .map(|row| {
                if row[k].is_zero() {
                    return false;
                }
                let q = row[k].div_floor(&pivot);
                if !q.is_zero() {
                    for j in k..cols {
                        if !pivot_row[j].is_zero() {
                            let t = &q * &pivot_row[j];
                            row[j] -= t;
                        }
                    }
                }
                !row[k].is_zero()
            })
            .reduce(|| false, |x, y| x || y);
        let mut row_leftover = false;
        for j in k + 1..cols {
            if !a[k][j].is_zero() {
                let q = a[k][j].div_floor(&pivot);
                let t = &q * &pivot;
                a[k][j] -= t;
                if !a[k][j].is_zero() {
                    row_leftover = true;
                }
                // Column k is zero below the pivot only once col_leftover is false;
                // replay the column operation on the rows below in that case.
                if col_leftover {
                    for row in a[k + 1..].iter_mut() {
                        if !row[k].is_zero() {
                            let t = &q * &row[k];
                            row[j] -= t;
                        }
                    }
                }
            }
        }
        if col_leftover || row_leftover {
            // A smaller remainder exists; the next round picks it as pivot.
            continue;
        }
        diag.push(pivot);
        k += 1;
    }
    let mut det = None;
    if rows == cols {
        let d = if diag.len() == rows {
            let p: BigInt = diag.iter().product();
            if negate { -p } else { p }
        } else {
            BigInt::zero()
        };
        det = Some(d);
    }
    let zero_factors = rows.min(cols) - diag.len();
    let mut divs: Vec<BigInt> = diag.into_iter().map(|d| d.abs()).collect();
    normalize_diagonal(&mut divs);
    SmithForm { chain: DivisorChain { divisors: divs }, zero_factors, det }
}

/// Position of a nonzero entry of least magnitude in the trailing block.
fn min_abs_entry(a: &[Vec<BigInt>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let mut best_val: Option<BigInt> = None;
    for (i, row) in a.iter().enumerate().skip(k) {
        for (j, x) in row.iter().enumerate().skip(k) {
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best_val.as_ref().is_none_or(|b| ax < *b) {
                let done = ax.is_one();
                best_val = Some(ax);
                best = Some((i, j));
                if done {
                    return best;
                }
            }
        }
    }
    best
}

/// Turns a list of positive diagonal entries into the divisibility chain
/// with the same Smith form.
fn normalize_diagonal(d: &mut [BigInt]) {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            if (&d[j] % &d[i]).is_zero() {
                continue;
            }
            let g = d[i].gcd(&d[j]);
            let l = &d[i] / &g * &d[j];
            d[i] = g;
            d[j] = l;
        }
    }
}

/// Rank over `F_p`.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let bp = BigInt::from(p);
    let mut a: Vec<Vec<u64>> = (0..m.rows)
        .map(|i| m.row(i).iter().map(|x| x.mod_floor(&bp).to_u64().unwrap()).collect())
        .collect();
    let p128 = p as u128;
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(pr) = (rank..m.rows).find(|&r| a[r][col] != 0) else { continue };
        a.swap(rank, pr);
        let inv = mod_inverse(a[rank][col], p);
        for x in a[rank].iter_mut() {
            *x = ((*x as u128 * inv as u128) % p128) as u64;
        }
        let pivot = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let f = row[col] as u128;
            for (x, &y) in row.iter_mut().zip(&pivot) {
                *x = ((*x as u128 + p128 * p128 - f * y as u128) % p128) as u64;
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let e = BigInt::from(a).extended_gcd(&BigInt::from(p));
    e.x.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

/// A full-rank sublattice of `Z^d` in Hermite normal form: upper triangular
/// rows, positive diagonal, entries above each pivot reduced into
/// `[0, pivot)`. Equal lattices have equal bases.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lattice {
    basis: Vec<Vec<BigInt>>,
}

impl Lattice {
    pub fn full(d: usize) -> Lattice {
        Lattice { basis: (0..d).map(|i| (0..d).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect() }
    }

    /// The lattice spanned by `generators` together with `modulus * Z^d`.
    pub fn from_generators_mod(generators: &[Vec<BigInt>], d: usize, modulus: &BigInt) -> Result<Lattice> {
        if !modulus.is_positive() {
            return Err(Error::Domain("lattice modulus must be positive".into()));
        }
        if generators.iter().any(|g| g.len() != d) {
            return Err(Error::Domain("generator length does not match dimension".into()));
        }
        Ok(Lattice { basis: hnf_mod(generators.to_vec(), d, modulus) })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.basis.clone()).expect("square basis")
    }

    /// `[Z^d : L]`.
    pub fn index(&self) -> BigInt {
        (0..self.dim()).map(|i| self.basis[i][i].clone()).product()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut v = v.to_vec();
        for i in 0..self.dim() {
            let (q, r) = v[i].div_rem(&self.basis[i][i]);
            if !r.is_zero() {
                return false;
            }
            for j in i..self.dim() {
                let t = &q * &self.basis[i][j];
                v[j] -= t;
            }
        }
        true
    }
}

/// Hermite normal form of a lattice known to contain `modulus * Z^d`.
/// All arithmetic is reduced modulo `modulus`.
fn hnf_mod(mut rows: Vec<Vec<BigInt>>, d: usize, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    for r in rows.iter_mut() {
        for x in r.iter_mut() {
            *x = x.mod_floor(modulus);
        }
    }
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let mut out: Vec<Vec<BigInt>> = Vec::with_capacity(d);
    for k in 0..d {
        let mut p: Vec<BigInt> = vec![BigInt::zero(); d];
        p[k] = modulus.clone();
        for r in rows.iter_mut() {
            if r[k].is_zero() {
                continue;
            }
            let e = p[k].extended_gcd(&r[k]);
            let (a, b) = (&p[k] / &e.gcd, &r[k] / &e.gcd);
            let new_p: Vec<BigInt> = (0..d).map(|j| (&e.x * &p[j] + &e.y * &r[j]).mod_floor(modulus)).collect();
            let new_r: Vec<BigInt> = (0..d).map(|j| (&b * &p[j] - &a * &r[j]).mod_floor(modulus)).collect();
            p = new_p;
            *r = new_r;
            // The gcd may equal the modulus, which reduces to zero.
            if p[k].is_zero() {
                p[k] = modulus.clone();
            }
        }
        let g = p[k].clone();
        let extra: Vec<BigInt> = p.iter().map(|x| (x * (modulus / &g)).mod_floor(modulus)).collect();
        rows.push(extra);
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
        out.push(p);
    }
    for j in 0..d {
        for i in 0..j {
            let q = out[i][j].div_floor(&out[j][j]);
            if !q.is_zero() {
                let pj = out[j].clone();
                for c in j..d {
                    let t = &q * &pj[c];
                    out[i][c] -= t;
                }
            }
        }
    }
    out
}

/// `{v in Z^c : M v = 0 mod N}` as a canonical lattice.
pub fn kernel_mod(m: &IntMatrix, modulus: &BigInt) -> Result<Lattice> {
    if !modulus.is_positive() {
        return Err(Error::Domain("kernel modulus must be positive".into()));
    }
    let (r, c) = (m.rows, m.cols);
    // Rows (M e_i | e_i); after HNF, the rows whose first r coordinates
    // vanish span the kernel in their last c coordinates.
    let gens: Vec<Vec<BigInt>> = (0..c)
        .map(|i| {
            let mut row: Vec<BigInt> = (0..r).map(|k| m.get(k, i).clone()).collect();
            row.extend((0..c).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let h = hnf_mod(gens, r + c, modulus);
    let basis: Vec<Vec<BigInt>> = h[r..].iter().map(|row| row[r..].to_vec()).collect();
    Ok(Lattice { basis })
}

/// Groups equal moduli of a chain and drops the ones.
pub fn assemble_group(chain: &DivisorChain) -> GroupDecomposition {
    GroupDecomposition::from_summands(chain.divisors.iter().map(|d| (d.clone(), 1))).expect("chain entries are positive")
}

/// Rebuilds the divisor chain of length `rank` from its prime-power parts.
pub fn merge_p_parts(per_prime: &BTreeMap<u64, Vec<BigInt>>, rank: usize) -> Result<DivisorChain> {
    let mut out = vec![BigInt::one(); rank];
    for (&p, powers) in per_prime {
        if powers.len() > rank {
            return Err(Error::Inconsistent(format!(
                "{} prime powers for p={p} exceed rank {rank}",
                powers.len()
            )));
        }
        let bp = BigInt::from(p);
        let mut vals = Vec::with_capacity(rank);
        for q in powers {
            if !q.is_positive() {
                return Err(Error::Inconsistent(format!("{q} is not a power of {p}")));
            }
            let v = valuation(p, q);
            if num_traits::pow(bp.clone(), v as usize) != *q {
                return Err(Error::Inconsistent(format!("{q} is not a power of {p}")));
            }
            vals.push(v);
        }
        vals.resize(rank, 0);
        vals.sort_unstable();
        for (slot, v) in out.iter_mut().zip(vals) {
            *slot *= num_traits::pow(bp.clone(), v as usize);
        }
    }
    DivisorChain::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn smith_of_small_examples() {
        let s = smith_normal_form(&mat(&[vec![4, 2], vec![2, 4]]));
        assert_eq!(s.chain, DivisorChain::from_u64(&[2, 6]).unwrap());
        assert_eq!(s.det, Some(BigInt::from(12)));
        let s = smith_normal_form(&mat(&[vec![0, 1], vec![1, 0]]));
        assert_eq!(s.det, Some(BigInt::from(-1)));
        let s = smith_normal_form(&mat(&[vec![2, 4], vec![1, 2]]));
        assert_eq!(s.zero_factors, 1);
        assert_eq!(s.det, Some(BigInt::zero()));
        let s = smith_normal_form(&mat(&[vec![2, 0, 0], vec![0, 3, 0]]));
        assert_eq!(s.chain, DivisorChain::from_u64(&[1, 6]).unwrap());
        assert_eq!(s.det, None);
    }

    #[test]
    fn rank_mod_p_examples() {
        let g = mat(&[vec![4, 2], vec![2, 4]]);
        assert_eq!(rank_mod_p(&g, 2), 0);
        assert_eq!(rank_mod_p(&g, 3), 1);
        assert_eq!(rank_mod_p(&IntMatrix::identity(4), 5), 4);
    }

    #[test]
    fn kernel_mod_examples() {
        let k = kernel_mod(&mat(&[vec![2]]), &BigInt::from(4)).unwrap();
        assert_eq!(k.basis(), &[big(&[2])]);
        let k = kernel_mod(&mat(&[vec![1, 2], vec![3, 4]]), &BigInt::one()).unwrap();
        assert_eq!(k, Lattice::full(2));
        let k = kernel_mod(&mat(&[vec![1, 1]]), &BigInt::from(3)).unwrap();
        assert_eq!(k.index(), BigInt::from(3));
        assert!(k.contains(&big(&[1, 2])));
        assert!(!k.contains(&big(&[1, 1])));
    }

    #[test]
    fn groups_and_merging() {
        let chain = DivisorChain::from_u64(&[1, 1, 1, 5]).unwrap();
        assert_eq!(assemble_group(&chain).summands(), &[(BigInt::from(5), 1)]);
        let mut per = BTreeMap::new();
        per.insert(2u64, big(&[2, 2]));
        per.insert(3u64, big(&[1, 3]));
        assert_eq!(merge_p_parts(&per, 2).unwrap(), DivisorChain::from_u64(&[2, 6]).unwrap());
        per.insert(5u64, big(&[5, 5, 5]));
        assert!(merge_p_parts(&per, 2).is_err());
        let mut bad = BTreeMap::new();
        bad.insert(2u64, big(&[6]));
        assert!(merge_p_parts(&bad, 2).is_err());
    }

    #[test]
    fn compact_rendering() {
        let c = DivisorChain::from_u64(&[1, 1, 3, 3, 15]).unwrap();
        assert_eq!(c.compact(), "1^2 3^2 15^1");
        assert_eq!(c.group().to_string(), "(Z/3)^2 + Z/15");
        assert_eq!(c.primes(), vec![3, 5]);
    }

    #[test]
    fn rejects_non_chains() {
        assert!(DivisorChain::from_u64(&[2, 3]).is_err());
        assert!(DivisorChain::from_u64(&[0]).is_err());
    }

    #[test]
    fn isomorphism_via_primary_parts() {
        let a = GroupDecomposition::from_summands(vec![(BigInt::from(6), 1)]).unwrap();
        let b = GroupDecomposition::from_summands(vec![(BigInt::from(2), 1), (BigInt::from(3), 1)]).unwrap();
        assert!(a.is_isomorphic(&b));
        assert_eq!(b.to_chain(2).unwrap(), DivisorChain::from_u64(&[1, 6]).unwrap());
    }
}
