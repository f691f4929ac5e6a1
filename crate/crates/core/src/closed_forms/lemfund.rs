//! Reading elementary divisors off a trigonal pairing table.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::combinatorics::Tableau;
use crate::exact_linalg::{DivisorChain, IntMatrix};
use crate::specht_module::{pairing_matrix, TabloidVector};

/// Two bases `x`, `y` of a Specht lattice together with a printable name for
/// each vector.
#[derive(Clone, Debug)]
pub struct TrigonalBases {
    pub x: Vec<TabloidVector>,
    pub y: Vec<TabloidVector>,
    pub labels: Vec<String>,
}

impl TrigonalBases {
    /// `((x_i, y_j))_{i,j}`.
    pub fn pairing(&self) -> IntMatrix {
        pairing_matrix(&self.x, &self.y)
    }
}

/// The first failed condition and the entry that witnesses it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemFundViolation {
    /// 1 to 5 for conditions (i) to (v); 0 for a shape mismatch.
    pub condition: u8,
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for LemFundViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.condition {
            0 => write!(f, "pairing table is not square of the given rank"),
            1 => write!(f, "condition (i) fails: diagonal entry {} is zero", self.i + 1),
            2 => write!(f, "condition (ii) fails: entry ({}, {}) below the diagonal is nonzero", self.i + 1, self.j + 1),
            3 => write!(f, "condition (iii) fails: diagonal entry {} does not divide entry ({}, {})", self.i + 1, self.i + 1, self.j + 1),
            4 => write!(f, "condition (iv) fails: diagonal entry {} does not divide entry {}", self.i + 1, self.j + 1),
            _ => write!(f, "condition (v) fails: diagonal product differs from the determinant"),
        }
    }
}

impl std::error::Error for LemFundViolation {}

/// Checks conditions (i) to (v) on a pairing table and returns its diagonal
/// as the divisor chain.
pub fn lemfund_verify_matrix(g: &IntMatrix, det: &BigInt) -> Result<DivisorChain, LemFundViolation> {
    let r = g.rows();
    if !g.is_square() {
        return Err(LemFundViolation { condition: 0, i: 0, j: 0 });
    }
    for i in 0..r {
        if g.get(i, i).is_zero() {
            return Err(LemFundViolation { condition: 1, i, j: i });
        }
    }
    for i in 0..r {
        for j in 0..i {
            if !g.get(i, j).is_zero() {
                return Err(LemFundViolation { condition: 2, i, j });
            }
        }
    }
    for i in 0..r {
        let d = g.get(i, i);
        for j in i + 1..r {
            if !g.get(i, j).is_multiple_of(d) {
                return Err(LemFundViolation { condition: 3, i, j });
            }
        }
    }
    for i in 1..r {
        if !g.get(i, i).is_multiple_of(g.get(i - 1, i - 1)) {
            return Err(LemFundViolation { condition: 4, i: i - 1, j: i });
        }
    }
    let diag: Vec<BigInt> = (0..r).map(|i| g.get(i, i).abs()).collect();
    let prod: BigInt = diag.iter().product();
    if prod != det.abs() {
        return Err(LemFundViolation { condition: 5, i: 0, j: 0 });
    }
    DivisorChain::new(diag).map_err(|_| LemFundViolation { condition: 4, i: 0, j: 0 })
}

/// [`lemfund_verify_matrix`] on the table `((x_i, y_j))`.
pub fn lemfund_verify(x: &[TabloidVector], y: &[TabloidVector], det: &BigInt) -> Result<DivisorChain, LemFundViolation> {
    if x.len() != y.len() {
        return Err(LemFundViolation { condition: 0, i: x.len(), j: y.len() });
    }
    lemfund_verify_matrix(&pairing_matrix(x, y), det)
}

/// Polytabloid of the tableau with the given rows, used by the basis
/// builders of the sibling modules.
pub(crate) fn polytabloid(rows: Vec<Vec<usize>>) -> TabloidVector {
    let t = Tableau::new(rows).expect("well-formed tableau");
    crate::specht_module::expand_polytabloid(&t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_gives_ones() {
        let g = IntMatrix::identity(3);
        assert_eq!(lemfund_verify_matrix(&g, &BigInt::from(1)).unwrap(), DivisorChain::from_u64(&[1, 1, 1]).unwrap());
    }

    #[test]
    fn reports_conditions() {
        let bad = |rows: &[Vec<i64>], det: i64| {
            lemfund_verify_matrix(&IntMatrix::from_i64_rows(rows).unwrap(), &BigInt::from(det)).unwrap_err().condition
        };
        assert_eq!(bad(&[vec![0, 1], vec![0, 1]], 0), 1);
        assert_eq!(bad(&[vec![1, 0], vec![1, 1]], 1), 2);
        assert_eq!(bad(&[vec![2, 3], vec![0, 2]], 4), 3);
        assert_eq!(bad(&[vec![2, 2], vec![0, 3]], 6), 4);
        assert_eq!(bad(&[vec![2, 2], vec![0, 4]], 6), 5);
        let ok = IntMatrix::from_i64_rows(&[vec![2, -2, 2], vec![0, 8, 0], vec![0, 0, 8]]).unwrap();
        assert_eq!(lemfund_verify_matrix(&ok, &BigInt::from(-128)).unwrap(), DivisorChain::from_u64(&[2, 8, 8]).unwrap());
    }
}
