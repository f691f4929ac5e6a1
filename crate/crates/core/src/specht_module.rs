//! Specht modules inside the tabloid permutation module.
//!
//! Vectors of `M^lambda` are sparse maps from tabloids to integers. Standard
//! polytabloids give the basis of `S^lambda`; the Gram matrix is the matrix
//! of the permutation-module form restricted to that basis.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{factorial, quasi_factorial};
use crate::combinatorics::{Partition, Permutation, Tableau, Tabloid};
use crate::error::{Error, Result};
use crate::exact_linalg::{kernel_mod, smith_normal_form, IntMatrix, Lattice};

/// An element of `M^lambda`. Coefficients are machine integers with checked
/// arithmetic; every vector built here has small coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TabloidVector {
    shape: Partition,
    coeffs: HashMap<Tabloid, i64>,
}

impl TabloidVector {
    pub fn zero(shape: Partition) -> Self {
        TabloidVector { shape, coeffs: HashMap::new() }
    }

    pub fn from_tabloid(shape: Partition, t: Tabloid, c: i64) -> Self {
        let mut v = Self::zero(shape);
        v.add_term(t, c);
        v
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn coeffs(&self) -> &HashMap<Tabloid, i64> {
        &self.coeffs
    }

    pub fn coefficient(&self, t: &Tabloid) -> i64 {
        self.coeffs.get(t).copied().unwrap_or(0)
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in tabloid order.
    pub fn terms(&self) -> Vec<(Tabloid, i64)> {
        let mut out: Vec<_> = self.coeffs.iter().map(|(t, &c)| (t.clone(), c)).collect();
        out.sort();
        out
    }

    pub fn add_term(&mut self, t: Tabloid, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(t);
        match entry {
            std::collections::hash_map::Entry::Occupied(mut o) => {
                let s = o.get().checked_add(c).expect("tabloid coefficient overflow");
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &TabloidVector, c: i64) {
        for (t, &x) in &other.coeffs {
            self.add_term(t.clone(), x.checked_mul(c).expect("tabloid coefficient overflow"));
        }
    }

    pub fn scaled(&self, c: i64) -> TabloidVector {
        let mut out = Self::zero(self.shape.clone());
        out.add_scaled(self, c);
        out
    }

    /// The invariant form: tabloids are orthonormal.
    pub fn pair(&self, other: &TabloidVector) -> BigInt {
        let (small, large) = if self.coeffs.len() <= other.coeffs.len() { (self, other) } else { (other, self) };
        let mut acc: i128 = 0;
        for (t, &c) in &small.coeffs {
            if let Some(&d) = large.coeffs.get(t) {
                acc += c as i128 * d as i128;
            }
        }
        BigInt::from(acc)
    }

    /// Right action of a permutation on entries.
    pub fn act(&self, sigma: &Permutation) -> TabloidVector {
        let mut out = Self::zero(self.shape.clone());
        for (t, &c) in &self.coeffs {
            out.add_term(t.apply(sigma), c);
        }
        out
    }
}

/// All permutations of `0..m` as image lists, with signs.
fn signed_permutations(m: usize) -> Vec<(Vec<u8>, i64)> {
    fn rec(cur: &mut Vec<u8>, used: &mut [bool], sign: i64, out: &mut Vec<(Vec<u8>, i64)>) {
        let m = used.len();
        if cur.len() == m {
            out.push((cur.clone(), sign));
            return;
        }
        // Placing the k-th smallest unused value contributes k inversions.
        let mut k = 0;
        for v in 0..m {
            if used[v] {
                continue;
            }
            used[v] = true;
            cur.push(v as u8);
            rec(cur, used, if k % 2 == 0 { sign } else { -sign }, out);
            cur.pop();
            used[v] = false;
            k += 1;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(m), &mut vec![false; m], 1, &mut out);
    out
}

/// The polytabloid `sum_{sigma in C_t} sign(sigma) {t sigma}`.
pub fn expand_polytabloid(t: &Tableau) -> TabloidVector {
    let columns = t.columns();
    let perms: Vec<Vec<(Vec<u8>, i64)>> = {
        let mut cache: HashMap<usize, Vec<(Vec<u8>, i64)>> = HashMap::new();
        columns.iter().map(|c| cache.entry(c.len()).or_insert_with(|| signed_permutations(c.len())).clone()).collect()
    };
    let mut out = TabloidVector::zero(t.shape().clone());
    let mut row_of = vec![0u8; t.n()];
    fn rec(
        j: usize,
        columns: &[Vec<usize>],
        perms: &[Vec<(Vec<u8>, i64)>],
        row_of: &mut [u8],
        sign: i64,
        out: &mut TabloidVector,
    ) {
        if j == columns.len() {
            out.add_term(Tabloid::from_row_assignment(row_of.to_vec()), sign);
            return;
        }
        for (pi, s) in &perms[j] {
            for (i, &x) in columns[j].iter().enumerate() {
                row_of[x - 1] = pi[i];
            }
            rec(j + 1, columns, perms, row_of, sign * s, out);
        }
    }
    rec(0, &columns, &perms, &mut row_of, 1, &mut out);
    out
}

/// `sum_{sigma in R_t} <t> sigma`, where `R_t` is the row stabilizer.
pub fn row_symmetrize(t: &Tableau) -> TabloidVector {
    let rows = t.rows();
    let perms: Vec<Vec<(Vec<u8>, i64)>> = rows.iter().map(|r| signed_permutations(r.len())).collect();
    let base = expand_polytabloid(t);
    let n = t.n();
    let mut out = TabloidVector::zero(t.shape().clone());
    let mut image: Vec<usize> = (1..=n).collect();
    fn rec(
        i: usize,
        rows: &[Vec<usize>],
        perms: &[Vec<(Vec<u8>, i64)>],
        image: &mut Vec<usize>,
        base: &TabloidVector,
        out: &mut TabloidVector,
    ) {
        if i == rows.len() {
            let sigma = Permutation::from_images(image.clone()).expect("row permutation");
            out.add_scaled(&base.act(&sigma), 1);
            return;
        }
        for (pi, _) in &perms[i] {
            for (k, &x) in rows[i].iter().enumerate() {
                image[x - 1] = rows[i][pi[k] as usize];
            }
            rec(i + 1, rows, perms, image, base, out);
        }
    }
    rec(0, rows, &perms, &mut image, &base, &mut out);
    out
}

/// Standard polytabloids of a shape, in row-reading-word order.
#[derive(Clone, Debug)]
pub struct SpechtBasis {
    shape: Partition,
    tableaux: Vec<Tableau>,
    vectors: Vec<TabloidVector>,
    standard_index: HashMap<Tabloid, usize>,
}

impl SpechtBasis {
    pub fn new(shape: &Partition) -> SpechtBasis {
        let tableaux = Tableau::standard(shape);
        let vectors: Vec<TabloidVector> = tableaux.par_iter().map(expand_polytabloid).collect();
        let standard_index = tableaux.iter().enumerate().map(|(i, t)| (Tabloid::of_tableau(t), i)).collect();
        SpechtBasis { shape: shape.clone(), tableaux, vectors, standard_index }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn vectors(&self) -> &[TabloidVector] {
        &self.vectors
    }

    /// Every tabloid occurring in some basis vector, sorted.
    pub fn tabloid_index(&self) -> Vec<Tabloid> {
        let mut all: Vec<Tabloid> = self.vectors.iter().flat_map(|v| v.coeffs.keys().cloned()).collect();
        all.sort();
        all.dedup();
        all
    }

    /// `sum_i coords[i] * e_i`.
    pub fn combine(&self, coords: &[BigInt]) -> Result<TabloidVector> {
        let mut out = TabloidVector::zero(self.shape.clone());
        for (c, v) in coords.iter().zip(&self.vectors) {
            let c: i64 = c.try_into().map_err(|_| Error::Domain("coordinate too large".into()))?;
            out.add_scaled(v, c);
        }
        Ok(out)
    }

    /// Integer coordinates of `v` in the standard basis.
    ///
    /// Eliminates the dominance-maximal tabloid repeatedly; in `S^lambda` it
    /// is always the tabloid of a standard tableau with leading coefficient
    /// one in the corresponding polytabloid.
    pub fn straighten(&self, v: &TabloidVector) -> Result<Vec<BigInt>> {
        if v.shape != self.shape {
            return Err(Error::Domain(format!("vector of shape {} given to basis of shape {}", v.shape, self.shape)));
        }
        let key = |t: &Tabloid| -> Vec<u8> { t.row_assignment().iter().rev().copied().collect() };
        let mut work: BTreeMap<Vec<u8>, (Tabloid, i64)> =
            v.coeffs.iter().map(|(t, &c)| (key(t), (t.clone(), c))).collect();
        let mut coords = vec![0i64; self.len()];
        while let Some((_, (top, c))) = work.pop_last() {
            let Some(&idx) = self.standard_index.get(&top) else {
                return Err(Error::NotInSpan(format!(
                    "leading tabloid {:?} is not standard for shape {}",
                    top.rows(),
                    self.shape
                )));
            };
            coords[idx] = coords[idx].checked_add(c).expect("coordinate overflow");
            for (t, &x) in &self.vectors[idx].coeffs {
                if *t == top {
                    continue;
                }
                let k = key(t);
                let delta = x.checked_mul(c).expect("coordinate overflow");
                let remove = match work.get_mut(&k) {
                    Some(slot) => {
                        slot.1 -= delta;
                        slot.1 == 0
                    }
                    None => {
                        work.insert(k.clone(), (t.clone(), -delta));
                        false
                    }
                };
                if remove {
                    work.remove(&k);
                }
            }
        }
        Ok(coords.into_iter().map(BigInt::from).collect())
    }
}

/// The Gram matrix of a Specht module with its basis.
#[derive(Clone, Debug)]
pub struct GramContext {
    pub basis: SpechtBasis,
    pub gram: IntMatrix,
    pub james_factor: BigInt,
    pub gram_scaled: Option<IntMatrix>,
}

/// Pairing matrix `((x_i, y_j))_{i,j}`.
pub fn pairing_matrix(xs: &[TabloidVector], ys: &[TabloidVector]) -> IntMatrix {
    let rows: Vec<Vec<BigInt>> = xs.par_iter().map(|x| ys.iter().map(|y| x.pair(y)).collect()).collect();
    if rows.is_empty() {
        return IntMatrix::zeros(0, ys.len());
    }
    IntMatrix::from_rows(rows).expect("rectangular pairing matrix")
}

pub fn gram_matrix(shape: &Partition, scaled: bool) -> Result<GramContext> {
    let basis = SpechtBasis::new(shape);
    let gram = pairing_matrix(basis.vectors(), basis.vectors());
    let james_factor = shape.james_factor();
    let gram_scaled = if scaled {
        Some(gram.div_exact(&james_factor).ok_or_else(|| {
            Error::Internal(format!("James factor {james_factor} does not divide the Gram matrix of {shape}"))
        })?)
    } else {
        None
    };
    Ok(GramContext { basis, gram, james_factor, gram_scaled })
}

/// Sum of the 1-based positions of the entries of `zeta` within `column`.
pub fn position_sum(column: &[usize], zeta: &[usize]) -> Option<usize> {
    zeta.iter().map(|z| column.iter().position(|c| c == z).map(|i| i + 1)).sum()
}

fn subsequences(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// The shape `(2^{h-k}, 1^{n-2h+2k})` reached by moving `k` entries of the
/// second column of a `(2^h, 1^{n-2h})`-tableau to the first column.
pub fn moved_shape(n: usize, h: usize, k: usize) -> Result<Partition> {
    Partition::two_column(n, h - k)
}

/// `sum_zeta (-1)^{Sigma(zeta)} <a^zeta>` for `zeta` running over the
/// `k`-subsequences of the second column of `a`.
pub fn f_k(a: &Tableau, k: usize) -> Result<TabloidVector> {
    let cols = a.columns();
    if cols.len() != 2 || k > cols[1].len() {
        return Err(Error::Domain(format!("f_k needs a two-column tableau with at least {k} entries in column 2")));
    }
    let target = Partition::two_column(a.n(), cols[1].len() - k)?;
    let mut out = TabloidVector::zero(target);
    for zeta in subsequences(&cols[1], k) {
        let sign = if position_sum(&cols[1], &zeta).unwrap().is_multiple_of(2) { 1 } else { -1 };
        let mut first = cols[0].clone();
        first.extend(&zeta);
        let second: Vec<usize> = cols[1].iter().copied().filter(|x| !zeta.contains(x)).collect();
        let columns = if second.is_empty() { vec![first] } else { vec![first, second] };
        let t = Tableau::from_columns(&columns)?;
        out.add_scaled(&expand_polytabloid(&t), sign);
    }
    Ok(out)
}

/// Outcome of the kernel-intersection comparison for `(2^h, 1^{n-2h})`.
#[derive(Clone, Debug)]
pub struct ConM5Report {
    pub n: usize,
    pub h: usize,
    pub rank: usize,
    /// Index of the running intersection after each step `k = 1..=h`.
    pub intersection_indices: Vec<BigInt>,
    /// The coefficient `k?/gcd(k?, gamma_{k-1})` used at each step.
    pub coefficients: Vec<BigInt>,
    pub gram_kernel_index: BigInt,
    pub well_defined_checks: usize,
    pub holds: bool,
}

/// Compares the intersection of the kernels of the maps `s_k` with the
/// kernel of the Gram form modulo `n!/rank`.
pub fn conm5_check(n: usize, h: usize) -> Result<ConM5Report> {
    if h == 0 || 2 * h > n {
        return Err(Error::OutOfRange(format!("need 1 <= h <= n/2, got n={n}, h={h}")));
    }
    let shape = Partition::two_column(n, h)?;
    let ctx = gram_matrix(&shape, false)?;
    let d = ctx.basis.len();
    let b = n - 2 * h + 1;
    let mut lattice = Lattice::full(d);
    let mut total_modulus = BigInt::one();
    let mut intersection_indices = Vec::new();
    let mut coefficients = Vec::new();
    let mut well_defined_checks = 0;
    for k in 1..=h {
        let target = moved_shape(n, h, k)?;
        let target_basis = SpechtBasis::new(&target);
        let modulus = BigInt::from(b + k);
        let images: Vec<Vec<BigInt>> = ctx
            .basis
            .tableaux()
            .par_iter()
            .map(|t| target_basis.straighten(&f_k(t, k)?))
            .collect::<Result<_>>()?;
        well_defined_checks += check_well_defined(&ctx.basis, &target_basis, &images, k, &modulus)?;
        // Columns of f are the images of the standard basis vectors.
        let f = IntMatrix::from_rows(images)?.transpose();
        let basis = lattice.basis_matrix();
        let gamma = basis_gcd(&basis);
        let kq = quasi_factorial(k as u64);
        let coeff = &kq / kq.gcd(&gamma);
        let m = f.mul(&basis.transpose())?.scale(&coeff);
        let kernel = kernel_mod(&m, &modulus)?;
        let gens = kernel.basis_matrix().mul(&basis)?.to_rows();
        total_modulus *= &modulus;
        lattice = Lattice::from_generators_mod(&gens, d, &total_modulus)?;
        intersection_indices.push(lattice.index());
        coefficients.push(coeff);
    }
    let gram_modulus = factorial(n as u64) / BigInt::from(d);
    let gram_kernel = kernel_mod(&ctx.gram, &gram_modulus)?;
    Ok(ConM5Report {
        n,
        h,
        rank: d,
        intersection_indices,
        coefficients,
        gram_kernel_index: gram_kernel.index(),
        well_defined_checks,
        holds: gram_kernel == lattice,
    })
}

/// First elementary divisor of a basis matrix.
fn basis_gcd(m: &IntMatrix) -> BigInt {
    smith_normal_form(m).chain.first().cloned().unwrap_or_else(BigInt::zero)
}

/// Checks on a sample of non-standard tableaux that `k? f_k` respects the
/// relations among polytabloids modulo `b + k`. Returns the number of
/// tableaux checked.
fn check_well_defined(
    source: &SpechtBasis,
    target: &SpechtBasis,
    standard_images: &[Vec<BigInt>],
    k: usize,
    modulus: &BigInt,
) -> Result<usize> {
    let kq = quasi_factorial(k as u64);
    let mut checked = 0;
    for t in source.tableaux().iter().take(6) {
        // Swap the two entries of the top row to leave the standard set.
        let row = &t.rows()[0];
        let sigma = Permutation::transposition(t.n(), row[0], row[1]);
        let a = t.permuted(&sigma);
        let coords = source.straighten(&expand_polytabloid(&a))?;
        let direct = target.straighten(&f_k(&a, k)?)?;
        for (i, value) in direct.iter().enumerate() {
            let via_basis: BigInt = coords.iter().zip(standard_images).map(|(c, img)| c * &img[i]).sum();
            if !((value - via_basis) * &kq).mod_floor(modulus).is_zero() {
                return Err(Error::Inconsistent(format!(
                    "k? f_k is not well defined modulo {modulus} on tableau {a}"
                )));
            }
        }
        checked += 1;
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn tab(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn tabloid(rows: &[&[usize]]) -> Tabloid {
        Tabloid::of_tableau(&tab(rows))
    }

    #[test]
    fn polytabloid_of_two_one() {
        let v = expand_polytabloid(&tab(&[&[1, 2], &[3]]));
        assert_eq!(v.support_size(), 2);
        assert_eq!(v.coefficient(&tabloid(&[&[1, 2], &[3]])), 1);
        assert_eq!(v.coefficient(&tabloid(&[&[2, 3], &[1]])), -1);
    }

    #[test]
    fn polytabloid_of_a_column() {
        let v = expand_polytabloid(&tab(&[&[1], &[2], &[3]]));
        assert_eq!(v.support_size(), 6);
        assert_eq!(v.coeffs().values().sum::<i64>(), 0);
    }

    #[test]
    fn signed_permutations_have_correct_signs() {
        let perms = signed_permutations(3);
        assert_eq!(perms.len(), 6);
        for (pi, s) in perms {
            let inv = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| pi[i] > pi[j]).count();
            assert_eq!(s, if inv % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn gram_of_small_shapes() {
        let g = gram_matrix(&p("2,2"), false).unwrap();
        assert_eq!(g.gram, IntMatrix::from_i64_rows(&[vec![4, 2], vec![2, 4]]).unwrap());
        let g = gram_matrix(&p("4"), true).unwrap();
        assert_eq!(g.gram, IntMatrix::identity(1));
        assert_eq!(g.gram_scaled, Some(IntMatrix::identity(1)));
    }

    #[test]
    fn straighten_round_trips() {
        let basis = SpechtBasis::new(&p("3,2"));
        let v = expand_polytabloid(&tab(&[&[5, 1, 3], &[2, 4]]));
        let coords = basis.straighten(&v).unwrap();
        assert_eq!(basis.combine(&coords).unwrap(), v);
        let e2 = basis.straighten(&basis.vectors()[2]).unwrap();
        assert_eq!(e2, vec![0, 0, 1, 0, 0].into_iter().map(BigInt::from).collect::<Vec<_>>());
        let lone = TabloidVector::from_tabloid(p("3,2"), tabloid(&[&[1, 2, 3], &[4, 5]]), 1);
        assert!(matches!(basis.straighten(&lone), Err(Error::NotInSpan(_))));
    }

    #[test]
    fn position_sum_example() {
        assert_eq!(position_sum(&[3, 5, 6, 7, 9], &[5, 7, 9]), Some(2 + 4 + 5));
        assert_eq!(position_sum(&[3, 5], &[4]), None);
    }

    #[test]
    fn row_symmetrize_of_row_shape_is_scaled_tabloid() {
        let v = row_symmetrize(&tab(&[&[2, 1, 3]]));
        assert_eq!(v.support_size(), 1);
        assert_eq!(v.coeffs().values().copied().collect::<Vec<_>>(), vec![6]);
    }

    #[test]
    fn conm5_small_cases() {
        assert!(conm5_check(4, 1).unwrap().holds);
        assert!(conm5_check(4, 2).unwrap().holds);
        assert!(conm5_check(2, 2).is_err());
    }
}
