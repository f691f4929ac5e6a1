//! Partitions, Young tableaux, tabloids, hook lengths and the diagram
//! surgeries used by the large-prime and hook analyses.
//!
//! Rows and columns are numbered from 1 in every public method that takes a
//! cell coordinate, matching the usual `(row, column)` convention for Young
//! diagrams. Slices returned by accessors are 0-based as usual.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::factorial;
use crate::error::{Error, Result};

/// A partition of `n`: weakly decreasing positive parts.
///
/// The derived ordering is lexicographic on the parts; [`Partition::all`]
/// lists partitions in decreasing (reverse lexicographic) order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zero parts; never fails.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The two-row partition `(n - m, m)`.
    pub fn two_row(n: usize, m: usize) -> Result<Self> {
        if 2 * m > n {
            return Err(Error::OutOfRange(format!("two-row partition needs m <= n/2, got n={n}, m={m}")));
        }
        Ok(Self::from_unsorted(vec![n - m, m]))
    }

    /// The hook partition `(n - l, 1^l)`.
    pub fn hook(n: usize, l: usize) -> Result<Self> {
        if n == 0 || l >= n {
            return Err(Error::OutOfRange(format!("hook partition needs 0 <= l < n, got n={n}, l={l}")));
        }
        let mut parts = vec![n - l];
        parts.extend(std::iter::repeat_n(1, l));
        Ok(Partition { parts })
    }

    /// The two-column partition `(2^h, 1^{n-2h})`.
    pub fn two_column(n: usize, h: usize) -> Result<Self> {
        if 2 * h > n {
            return Err(Error::OutOfRange(format!("two-column partition needs h <= n/2, got n={n}, h={h}")));
        }
        let mut parts = vec![2; h];
        parts.extend(std::iter::repeat_n(1, n - 2 * h));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `lambda_i`, 1-based, zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `lambda'_j`, the length of column `j` (1-based).
    pub fn col(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(1);
        Partition { parts: (1..=width).map(|j| self.col(j)).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.part(i)
    }

    /// Hook length of the cell `(i, j)`.
    pub fn hook_length(&self, i: usize, j: usize) -> Option<usize> {
        self.contains_cell(i, j).then(|| self.part(i) - j + self.col(j) - i + 1)
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    pub fn hook_data(&self) -> HookData {
        let cell_hooks: BTreeMap<_, _> =
            self.cells().map(|(i, j)| ((i, j), self.hook_length(i, j).unwrap())).collect();
        let first_row = (1..=self.part(2)).map(|j| self.part(1) - j + self.col(j)).collect();
        HookData { cell_hooks, first_row }
    }

    /// Rank of the Specht module, counted as the number of standard tableaux.
    pub fn dim_specht(&self) -> BigInt {
        let mut memo = HashMap::new();
        count_standard(&self.parts, &mut memo)
    }

    /// `n! / prod(hooks)`; must agree with [`Partition::dim_specht`].
    pub fn dim_by_hook_formula(&self) -> BigInt {
        let prod: BigInt = self.hook_data().cell_hooks.values().map(|&h| BigInt::from(h)).product();
        factorial(self.n() as u64) / prod
    }

    /// `prod_i (lambda'_i - lambda'_{i+1})!`.
    pub fn james_factor(&self) -> BigInt {
        self.column_multiplicities().iter().map(|&m| factorial(m as u64)).product()
    }

    /// `prod_i ((lambda'_i - lambda'_{i+1})!)^i`.
    pub fn james_upper_bound(&self) -> BigInt {
        self.column_multiplicities()
            .iter()
            .enumerate()
            .map(|(i, &m)| num_traits::pow(factorial(m as u64), i + 1))
            .product()
    }

    /// `lambda'_i - lambda'_{i+1}` for `i = 1..=lambda_1`, i.e. the number of
    /// parts equal to `i`.
    fn column_multiplicities(&self) -> Vec<usize> {
        let width = self.part(1);
        (1..=width).map(|i| self.col(i) - self.col(i + 1)).collect()
    }

    pub fn is_p_regular(&self, p: usize) -> bool {
        self.column_multiplicities().iter().all(|&m| m < p)
    }

    /// p-regularity and the ladder regularization of the diagram.
    pub fn regularity(&self, p: usize) -> Regularity {
        let is_regular = self.is_p_regular(p);
        let regularized = if is_regular { self.clone() } else { self.ladder_regularize(p) };
        Regularity { is_regular, regularized }
    }

    /// Moves every node as high as possible along its `p`-ladder
    /// `{(i, j) : i + (p - 1)(j - 1) = const}`.
    fn ladder_regularize(&self, p: usize) -> Partition {
        let step = p - 1;
        let mut ladder_sizes: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, j) in self.cells() {
            *ladder_sizes.entry(i + step * (j - 1)).or_default() += 1;
        }
        let mut rows: Vec<usize> = Vec::new();
        for (&ladder, &count) in &ladder_sizes {
            let first_row = (ladder - 1) % step + 1;
            for k in 0..count {
                let i = first_row + k * step;
                let j = (ladder - i) / step + 1;
                if rows.len() < i {
                    rows.resize(i, 0);
                }
                rows[i - 1] = rows[i - 1].max(j);
            }
        }
        let out = Partition::from_unsorted(rows.clone());
        debug_assert_eq!(out.n(), self.n(), "ladder regularization lost nodes");
        debug_assert_eq!(out.parts, rows, "ladder regularization produced a non-diagram");
        out
    }

    /// Carter–Payne box shift `mu[j]`: cut the last row meeting column `j` at
    /// column `j` and append the cut piece to the first row.
    pub fn carter_payne_shift(&self, j: usize) -> Result<Partition> {
        if j == 0 || j > self.part(2) {
            return Err(Error::OutOfRange(format!("column {j} is outside [1, {}] for {self}", self.part(2))));
        }
        let s = self.col(j);
        let mut parts = self.parts.clone();
        parts[0] = self.part(1) + self.part(s) - j + 1;
        parts[s - 1] = j - 1;
        Partition::new(parts.into_iter().filter(|&x| x > 0).collect())
    }

    /// First-column hook lengths `lambda_r + k - r` for `k` = number of parts.
    pub fn beta_numbers(&self) -> Vec<usize> {
        let k = self.len();
        self.parts.iter().enumerate().map(|(r, &l)| l + k - 1 - r).collect()
    }

    fn from_beta_numbers(mut beta: Vec<usize>) -> Partition {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let k = beta.len();
        Partition::from_unsorted(beta.iter().enumerate().map(|(r, &b)| b - (k - 1 - r)).collect())
    }

    /// Removes the rim hook belonging to the cell `(i, t)` and attaches the
    /// same number of nodes to the first row.
    pub fn strip_skew_hook(&self, i: usize, t: usize) -> Result<Partition> {
        let h = self
            .hook_length(i, t)
            .ok_or_else(|| Error::OutOfRange(format!("cell ({i},{t}) is not in the diagram of {self}")))?;
        let mut beta = self.beta_numbers();
        beta[i - 1] -= h;
        let mut rest = Partition::from_beta_numbers(beta);
        if rest.parts.is_empty() {
            rest.parts.push(h);
        } else {
            rest.parts[0] += h;
        }
        Ok(rest)
    }

    /// All partitions of `n` in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for k in (1..=rem.min(max)).rev() {
                cur.push(k);
                rec(rem - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

fn count_standard(shape: &[usize], memo: &mut HashMap<Vec<usize>, BigInt>) -> BigInt {
    if shape.iter().sum::<usize>() <= 1 {
        return BigInt::one();
    }
    if let Some(v) = memo.get(shape) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for r in 0..shape.len() {
        let below = shape.get(r + 1).copied().unwrap_or(0);
        if shape[r] > below {
            let mut smaller = shape.to_vec();
            smaller[r] -= 1;
            if smaller[r] == 0 {
                smaller.pop();
            }
            total += count_standard(&smaller, memo);
        }
    }
    memo.insert(shape.to_vec(), total.clone());
    total
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", text.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, each optionally raised to a repetition count:
    /// `"3,2,1"`, `"2^2,1^4"`. Surrounding parentheses are ignored.
    fn from_str(text: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse { text: text.to_string(), reason: reason.to_string() };
        let body = text.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if body.is_empty() {
            return Err(err("empty partition"));
        }
        let mut parts = Vec::new();
        for item in body.split(',') {
            let item = item.trim();
            let (base, exp) = match item.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (item, "1"),
            };
            let base: usize = base.parse().map_err(|_| err(&format!("bad part {item:?}")))?;
            let exp: usize = exp.parse().map_err(|_| err(&format!("bad exponent in {item:?}")))?;
            if base == 0 {
                return Err(Error::InvalidPartition(vec![0]));
            }
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookData {
    /// Hook length of every cell, keyed by 1-based `(row, column)`.
    pub cell_hooks: BTreeMap<(usize, usize), usize>,
    /// `h_j = lambda_1 - j + lambda'_j` for `j in [1, lambda_2]`; empty for `(n)`.
    pub first_row: Vec<usize>,
}

impl HookData {
    pub fn product(&self) -> BigInt {
        self.cell_hooks.values().map(|&h| BigInt::from(h)).product()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regularity {
    pub is_regular: bool,
    pub regularized: Partition,
}

/// A bijective filling of a Young diagram with `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())?;
        let n = shape.n();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Domain(format!("tableau entries must be a permutation of 1..={n}")));
            }
            seen[x] = true;
        }
        Ok(Tableau { shape, rows })
    }

    /// Builds a tableau from its columns, read top to bottom.
    pub fn from_columns(columns: &[Vec<usize>]) -> Result<Self> {
        let height = columns.first().map_or(0, |c| c.len());
        let rows = (0..height)
            .map(|r| columns.iter().filter(|c| c.len() > r).map(|c| c[r]).collect())
            .collect();
        Tableau::new(rows)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn column(&self, j: usize) -> Vec<usize> {
        self.rows.iter().take_while(|r| r.len() >= j).map(|r| r[j - 1]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        (1..=self.shape.part(1)).map(|j| self.column(j)).collect()
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        rows_ok && self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]))
    }

    /// Replaces every entry `x` by `perm(x)`.
    pub fn permuted(&self, perm: &Permutation) -> Tableau {
        let rows = self.rows.iter().map(|r| r.iter().map(|&x| perm.apply(x)).collect()).collect();
        Tableau { shape: self.shape.clone(), rows }
    }

    /// Standard tableaux of the given shape, sorted by row reading word.
    pub fn standard(shape: &Partition) -> Vec<Tableau> {
        fn rec(shape: &[usize], fill: &mut Vec<Vec<usize>>, next: usize, n: usize, out: &mut Vec<Vec<Vec<usize>>>) {
            if next > n {
                out.push(fill.clone());
                return;
            }
            for r in 0..shape.len() {
                let len = fill[r].len();
                let above_ok = r == 0 || fill[r - 1].len() > len;
                if len < shape[r] && above_ok {
                    fill[r].push(next);
                    rec(shape, fill, next + 1, n, out);
                    fill[r].pop();
                }
            }
        }
        let mut raw = Vec::new();
        let mut fill = vec![Vec::new(); shape.len()];
        rec(shape.parts(), &mut fill, 1, shape.n(), &mut raw);
        let mut out: Vec<Tableau> = raw.into_iter().map(|rows| Tableau { shape: shape.clone(), rows }).collect();
        out.sort_by_key(|t| t.reading_word());
        out
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

/// A tableau with unordered rows, stored as the row index (0-based) of each
/// entry `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tabloid {
    row_of: Box<[u8]>,
}

impl Tabloid {
    pub fn of_tableau(t: &Tableau) -> Tabloid {
        let mut row_of = vec![0u8; t.n()];
        for (r, row) in t.rows().iter().enumerate() {
            for &x in row {
                row_of[x - 1] = r as u8;
            }
        }
        Tabloid { row_of: row_of.into_boxed_slice() }
    }

    pub(crate) fn from_row_assignment(row_of: Vec<u8>) -> Tabloid {
        Tabloid { row_of: row_of.into_boxed_slice() }
    }

    pub fn n(&self) -> usize {
        self.row_of.len()
    }

    pub fn row_of(&self, x: usize) -> usize {
        self.row_of[x - 1] as usize
    }

    pub(crate) fn row_assignment(&self) -> &[u8] {
        &self.row_of
    }

    /// Rows as sorted entry lists; the canonical representative.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let height = self.row_of.iter().map(|&r| r as usize + 1).max().unwrap_or(0);
        let mut rows = vec![Vec::new(); height];
        for (x, &r) in self.row_of.iter().enumerate() {
            rows[r as usize].push(x + 1);
        }
        rows
    }

    /// The row-sorted tableau representing this tabloid.
    pub fn to_tableau(&self) -> Tableau {
        let rows = self.rows();
        let shape = Partition::from_unsorted(rows.iter().map(|r| r.len()).collect());
        Tableau { shape, rows }
    }

    pub fn apply(&self, perm: &Permutation) -> Tabloid {
        let mut row_of = vec![0u8; self.n()];
        for (x, &r) in self.row_of.iter().enumerate() {
            row_of[perm.apply(x + 1) - 1] = r;
        }
        Tabloid { row_of: row_of.into_boxed_slice() }
    }

    /// Total order extending the dominance order on tabloids: compare the
    /// row of the largest entry placed differently; the lower row wins.
    pub fn dominance_cmp(&self, other: &Tabloid) -> Ordering {
        self.row_of.iter().rev().cmp(other.row_of.iter().rev())
    }
}

impl PartialOrd for Tabloid {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tabloid {
    /// Lexicographic on the concatenation of the sorted rows.
    fn cmp(&self, other: &Self) -> Ordering {
        let a: Vec<usize> = self.rows().concat();
        let b: Vec<usize> = other.rows().concat();
        a.cmp(&b).then_with(|| self.row_of.cmp(&other.row_of))
    }
}

/// A permutation of `1..=n`, stored as its list of images.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (1..=n).collect() }
    }

    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n + 1];
        for &x in &image {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Domain(format!("{image:?} is not a permutation of 1..={n}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { image })
    }

    /// The transposition swapping `a` and `b` in `S_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut image: Vec<usize> = (1..=n).collect();
        image.swap(a - 1, b - 1);
        Permutation { image }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x - 1]
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parses_plain_and_exponent_forms() {
        assert_eq!(p("3,2,1").parts(), &[3, 2, 1]);
        assert_eq!(p("2^2,1^2").parts(), &[2, 2, 1, 1]);
        assert_eq!(p("(4, 1^3)").parts(), &[4, 1, 1, 1]);
        assert!(matches!("1,2".parse::<Partition>(), Err(Error::InvalidPartition(_))));
        assert!(matches!("3,x".parse::<Partition>(), Err(Error::Parse { .. })));
        assert!("".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
    }

    #[test]
    fn renders_without_exponents() {
        assert_eq!(p("2^2,1^2").to_string(), "2,2,1,1");
    }

    #[test]
    fn first_row_hooks() {
        assert_eq!(p("3,2").hook_data().first_row, vec![4, 3]);
        assert!(p("5").hook_data().first_row.is_empty());
        let hooks = p("2,2").hook_data();
        assert_eq!(hooks.cell_hooks.values().copied().collect::<Vec<_>>(), vec![3, 2, 2, 1]);
        assert_eq!(hooks.product() * p("2,2").dim_specht(), BigInt::from(24));
    }

    #[test]
    fn specht_dimensions() {
        assert_eq!(p("4,2").dim_specht(), BigInt::from(9));
        assert_eq!(p("1^5").dim_specht(), BigInt::from(1));
        assert_eq!(p("3,2,1").dim_specht(), BigInt::from(16));
    }

    #[test]
    fn regularity_examples() {
        assert!(!p("2,2").regularity(2).is_regular);
        assert!(p("3,2,1").regularity(2).is_regular);
        assert_eq!(p("1^3").regularity(3).regularized, p("2,1"));
        assert_eq!(p("1^4").regularity(2).regularized, p("4"));
        assert_eq!(p("2,2").regularity(2).regularized, p("3,1"));
    }

    #[test]
    fn carter_payne_examples() {
        assert_eq!(p("3,2").carter_payne_shift(2).unwrap(), p("4,1"));
        assert_eq!(p("2,2").carter_payne_shift(2).unwrap(), p("3,1"));
        assert_eq!(p("3,3,1,1").carter_payne_shift(1).unwrap(), p("4,3,1"));
        assert!(p("3,2").carter_payne_shift(3).is_err());
        assert!(p("3,2").carter_payne_shift(0).is_err());
    }

    #[test]
    fn skew_hook_examples() {
        assert_eq!(p("3,2").strip_skew_hook(2, 2).unwrap(), p("4,1"));
        assert_eq!(p("2,2,1").strip_skew_hook(2, 1).unwrap(), p("5"));
        assert!(p("2,2,1").strip_skew_hook(3, 2).is_err());
    }

    #[test]
    fn standard_tableaux_are_sorted_and_counted() {
        let ts = Tableau::standard(&p("3,2"));
        assert_eq!(ts.len(), 5);
        assert!(ts.iter().all(|t| t.is_standard()));
        assert!(ts.windows(2).all(|w| w[0].reading_word() < w[1].reading_word()));
    }

    #[test]
    fn tabloid_order_is_row_concatenation() {
        let a = Tabloid::of_tableau(&Tableau::new(vec![vec![1, 2], vec![3]]).unwrap());
        let b = Tabloid::of_tableau(&Tableau::new(vec![vec![1, 3], vec![2]]).unwrap());
        assert!(a < b);
        assert_eq!(b.rows(), vec![vec![1, 3], vec![2]]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(Partition::all(3), vec![p("3"), p("2,1"), p("1,1,1")]);
    }
}
