//! Schaper identities for four three- and four-row families, and the
//! rectangular scaling of divisor chains.

use std::fmt;
use std::str::FromStr;

use crate::arith::{is_prime, valuation_ratio};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::jantzen::FormalSum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchaperFamily {
    /// `(n-3, 2, 1)`, `n >= 6`.
    ThreeTwoOne,
    /// `(n-4, 2, 2)`, `n >= 8`.
    FourTwoTwo,
    /// `(n-4, 3, 1)`, `n >= 8`.
    FourThreeOne,
    /// `(n-4, 2, 1, 1)`, `n >= 8`.
    FourTwoOneOne,
}

impl SchaperFamily {
    pub const ALL: [SchaperFamily; 4] =
        [Self::ThreeTwoOne, Self::FourTwoTwo, Self::FourThreeOne, Self::FourTwoOneOne];

    pub fn min_n(self) -> usize {
        match self {
            Self::ThreeTwoOne => 6,
            _ => 8,
        }
    }

    fn tail(self) -> (usize, &'static [usize]) {
        match self {
            Self::ThreeTwoOne => (3, &[2, 1]),
            Self::FourTwoTwo => (4, &[2, 2]),
            Self::FourThreeOne => (4, &[3, 1]),
            Self::FourTwoOneOne => (4, &[2, 1, 1]),
        }
    }

    /// The family member of size `n`.
    pub fn head(self, n: usize) -> Result<Partition> {
        if n < self.min_n() {
            return Err(Error::OutOfRange(format!("family {self} needs n >= {}, got {n}", self.min_n())));
        }
        let (k, rest) = self.tail();
        let mut parts = vec![n - k];
        parts.extend_from_slice(rest);
        Partition::new(parts)
    }
}

impl fmt::Display for SchaperFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (k, rest) = self.tail();
        let rest: Vec<String> = rest.iter().map(|x| x.to_string()).collect();
        write!(f, "n-{k},{}", rest.join(","))
    }
}

impl FromStr for SchaperFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| !c.is_whitespace() && *c != '(' && *c != ')').collect();
        let mut tokens = key.split(',');
        let head = tokens.next().unwrap_or_default().to_string();
        let mut rest = Vec::new();
        for tok in tokens {
            let (base, reps) = tok.split_once('^').unwrap_or((tok, "1"));
            match (base.parse::<usize>(), reps.parse::<usize>()) {
                (Ok(b), Ok(r)) => rest.extend(std::iter::repeat_n(b, r)),
                _ => return Err(Error::Domain(format!("bad part {tok:?} in family {s:?}"))),
            }
        }
        Self::ALL
            .into_iter()
            .find(|f| {
                let (k, tail) = f.tail();
                head == format!("n-{k}") && rest == tail
            })
            .ok_or_else(|| {
                Error::Domain(format!("unknown family {s:?}; expected one of n-3,2,1 | n-4,2,2 | n-4,3,1 | n-4,2,1,1"))
            })
    }
}

fn lab(n: usize, k: usize, rest: &[usize]) -> Partition {
    let mut parts = vec![n - k];
    parts.extend_from_slice(rest);
    Partition::new(parts).expect("family labels are partitions in range")
}

/// The Schaper sum of the family member of size `n` at `p`, as a signed
/// combination of Specht classes.
pub fn schaper_family(family: SchaperFamily, n: usize, p: u64) -> Result<FormalSum> {
    family.head(n)?;
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let v = |a: usize, b: usize| valuation_ratio(p, a as i64, b as i64);
    let terms: Vec<(i64, Partition)> = match family {
        SchaperFamily::ThreeTwoOne => vec![
            (v(3, 1), lab(n, 3, &[3])),
            (v(n - 1, 1), lab(n, 2, &[2])),
            (-v(n - 1, 3), lab(n, 0, &[])),
            (v(n - 3, 1), lab(n, 2, &[1, 1])),
        ],
        SchaperFamily::FourTwoTwo => vec![
            (v(3, 2), lab(n, 4, &[4])),
            (v(n - 2, 2), lab(n, 2, &[2])),
            (-v(n - 2, 3), lab(n, 1, &[1])),
            (v(2, 1), lab(n, 4, &[3, 1])),
            (v(n - 3, 1), lab(n, 3, &[2, 1])),
            (-v(n - 3, 2), lab(n, 2, &[1, 1])),
        ],
        SchaperFamily::FourThreeOne => vec![
            (-v(n - 2, 4), lab(n, 0, &[])),
            (v(n - 2, 1), lab(n, 3, &[3])),
            (v(4, 1), lab(n, 4, &[4])),
            (v(n - 4, 2), lab(n, 2, &[1, 1])),
            (v(n - 5, 1), lab(n, 3, &[2, 1])),
        ],
        SchaperFamily::FourTwoOneOne => vec![
            (v(2, 1), lab(n, 4, &[2, 2])),
            (v(4, 1), lab(n, 4, &[3, 1])),
            (v(n - 1, 1), lab(n, 3, &[2, 1])),
            (-v(2, 1), lab(n, 4, &[4])),
            (-v(n - 1, 2), lab(n, 2, &[2])),
            (v(n - 1, 4), lab(n, 0, &[])),
            (v(n - 4, 1), lab(n, 3, &[1, 1, 1])),
        ],
    };
    let mut out = FormalSum::new('S');
    for (c, label) in terms {
        out.add(c, label, None);
    }
    Ok(out)
}

/// For a rectangle `mu` with `h` rows, the partition `nu` obtained by
/// removing the lower-right node and the factor `h` with
/// `chain(mu) = h * chain(nu)`.
pub fn rectangular_scale(mu: &Partition) -> Result<(Partition, usize)> {
    let h = mu.len();
    if h == 0 || mu.part(1) != mu.part(h) {
        return Err(Error::Domain(format!("{mu} is not a rectangle")));
    }
    let mut parts = mu.parts().to_vec();
    parts[h - 1] -= 1;
    let nu = Partition::new(parts.into_iter().filter(|&x| x > 0).collect())?;
    Ok((nu, h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!("(n-4,2^2)".parse::<SchaperFamily>().unwrap(), SchaperFamily::FourTwoTwo);
        assert_eq!("n-4,2,1^2".parse::<SchaperFamily>().unwrap(), SchaperFamily::FourTwoOneOne);
        assert_eq!("n-3,2,1".parse::<SchaperFamily>().unwrap(), SchaperFamily::ThreeTwoOne);
        for f in SchaperFamily::ALL {
            assert_eq!(f.to_string().parse::<SchaperFamily>().unwrap(), f);
        }
        assert!("n-5,5".parse::<SchaperFamily>().is_err());
    }

    #[test]
    fn eight_at_three() {
        let s = schaper_family(SchaperFamily::ThreeTwoOne, 8, 3).unwrap();
        assert_eq!(s.coefficient(&"5,3".parse().unwrap(), None), 1);
        assert_eq!(s.coefficient(&"8".parse().unwrap(), None), 1);
        assert_eq!(s.terms().len(), 2);
    }

    #[test]
    fn nine_at_five_vanishes() {
        assert!(schaper_family(SchaperFamily::FourTwoTwo, 9, 5).unwrap().is_zero());
        assert!(schaper_family(SchaperFamily::FourTwoTwo, 7, 5).is_err());
    }

    #[test]
    fn rectangles() {
        assert_eq!(rectangular_scale(&"2,2".parse().unwrap()).unwrap(), ("2,1".parse().unwrap(), 2));
        assert_eq!(rectangular_scale(&"1,1,1,1".parse().unwrap()).unwrap(), ("1,1,1".parse().unwrap(), 4));
        assert_eq!(rectangular_scale(&"2,2,2".parse().unwrap()).unwrap(), ("2,2,1".parse().unwrap(), 3));
        assert!(rectangular_scale(&"3,2".parse().unwrap()).is_err());
    }
}
