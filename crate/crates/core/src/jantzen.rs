//! Jantzen filtration arithmetic over the p-local integers: layer profiles
//! read off divisor chains, formal sums of module classes, and the forced
//! distribution of a simple constituent over layers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::arith::{factorial, valuation};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exact_linalg::DivisorChain;

/// Dimension of each nonzero layer of the Jantzen filtration at `prime`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JantzenProfile {
    pub prime: u64,
    pub layer_dims: BTreeMap<u32, usize>,
}

impl JantzenProfile {
    pub fn rank(&self) -> usize {
        self.layer_dims.values().sum()
    }

    /// `sum_i i * dim(layer i)`, the `p`-valuation of the determinant.
    pub fn weighted(&self) -> u64 {
        self.layer_dims.iter().map(|(&i, &d)| i as u64 * d as u64).sum()
    }

    pub fn dim(&self, layer: u32) -> usize {
        self.layer_dims.get(&layer).copied().unwrap_or(0)
    }

    pub fn top_layer(&self) -> Option<u32> {
        self.layer_dims.keys().next_back().copied()
    }

    /// The profile with layer `i` moved to `top - i`; `None` if some layer
    /// lies above `top`.
    pub fn mirrored(&self, top: u32) -> Option<JantzenProfile> {
        let mut out = BTreeMap::new();
        for (&i, &d) in &self.layer_dims {
            if i > top {
                return None;
            }
            out.insert(top - i, d);
        }
        Some(JantzenProfile { prime: self.prime, layer_dims: out })
    }
}

impl fmt::Display for JantzenProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.layer_dims.iter().map(|(i, d)| format!("{i}:{d}")).collect();
        write!(f, "p={} {{{}}}", self.prime, parts.join(", "))
    }
}

/// Counts divisors by `p`-valuation.
pub fn layers_from_divisors(chain: &DivisorChain, p: u64) -> JantzenProfile {
    let mut layer_dims = BTreeMap::new();
    for v in chain.valuations(p) {
        *layer_dims.entry(v).or_default() += 1;
    }
    JantzenProfile { prime: p, layer_dims }
}

/// One summand `coeff * [label]_layer` of a formal sum.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Term {
    pub coeff: i64,
    pub label: Partition,
    pub layer: Option<u32>,
}

/// Integer combination of module classes indexed by partitions, optionally
/// carrying a Jantzen layer. `kind` is the letter printed in front of the
/// label, `S` for Specht modules and `D` for simple modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSum {
    pub kind: char,
    terms: Vec<Term>,
}

impl FormalSum {
    pub fn new(kind: char) -> Self {
        FormalSum { kind, terms: Vec::new() }
    }

    pub fn add(&mut self, coeff: i64, label: Partition, layer: Option<u32>) {
        if coeff == 0 {
            return;
        }
        if let Some(t) = self.terms.iter_mut().find(|t| t.label == label && t.layer == layer) {
            t.coeff += coeff;
        } else {
            self.terms.push(Term { coeff, label, layer });
        }
        self.terms.retain(|t| t.coeff != 0);
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `sum coeff * dim S^label`.
    pub fn weighted_specht_dimension(&self) -> BigInt {
        self.terms.iter().map(|t| BigInt::from(t.coeff) * t.label.dim_specht()).sum()
    }

    /// Total multiplicity per layer.
    pub fn by_layer(&self) -> BTreeMap<Option<u32>, i64> {
        let mut out = BTreeMap::new();
        for t in &self.terms {
            *out.entry(t.layer).or_default() += t.coeff;
        }
        out
    }

    /// Coefficient of a `(label, layer)` pair.
    pub fn coefficient(&self, label: &Partition, layer: Option<u32>) -> i64 {
        self.terms.iter().find(|t| &t.label == label && t.layer == layer).map_or(0, |t| t.coeff)
    }

    /// Layer profile obtained by replacing each label with a dimension.
    pub fn profile_with<F>(&self, prime: u64, mut dim: F) -> Result<JantzenProfile>
    where
        F: FnMut(&Partition) -> Result<usize>,
    {
        let mut layer_dims: BTreeMap<u32, usize> = BTreeMap::new();
        for t in &self.terms {
            let layer = t.layer.ok_or_else(|| Error::Domain("profile needs layered terms".into()))?;
            if t.coeff < 0 {
                return Err(Error::Domain("profile needs nonnegative multiplicities".into()));
            }
            *layer_dims.entry(layer).or_default() += t.coeff as usize * dim(&t.label)?;
        }
        layer_dims.retain(|_, d| *d > 0);
        Ok(JantzenProfile { prime, layer_dims })
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let (sign, abs) = if t.coeff < 0 { ("-", -t.coeff) } else { ("+", t.coeff) };
            if i == 0 {
                if t.coeff < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if abs != 1 {
                write!(f, "{abs}")?;
            }
            write!(f, "[{}^({})]", self.kind, t.label)?;
            if let Some(l) = t.layer {
                write!(f, "_{l}")?;
            }
        }
        Ok(())
    }
}

/// Outcome of [`distribute_multiplicity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Distribution {
    /// Multiplicity of the simple module in each layer.
    Determined(BTreeMap<u32, u64>),
    Underdetermined,
}

/// Places `total` copies of a simple module over the filtration layers,
/// given their valuation-weighted count `weighted = sum_i i * theta_i` and
/// the knowledge that no copy sits below layer `forced_zero_below`.
pub fn distribute_multiplicity(total: u64, weighted: u64, forced_zero_below: u32) -> Result<Distribution> {
    let s = forced_zero_below as u64;
    if total > 0 && weighted < s * total {
        return Err(Error::Inconsistent(format!(
            "weighted count {weighted} is below {s} * {total} although layers below {s} are empty"
        )));
    }
    if total == 0 {
        return if weighted == 0 {
            Ok(Distribution::Determined(BTreeMap::new()))
        } else {
            Err(Error::Inconsistent(format!("weighted count {weighted} with zero multiplicity")))
        };
    }
    if total == 1 {
        return Ok(Distribution::Determined(BTreeMap::from([(weighted as u32, 1)])));
    }
    if s >= 1 && weighted <= s * total {
        return Ok(Distribution::Determined(BTreeMap::from([(forced_zero_below, total)])));
    }
    Ok(Distribution::Underdetermined)
}

/// Result of comparing the chains of a partition and its transpose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityCheck {
    pub prime: u64,
    /// `v_p(n!/n_lambda)`.
    pub top: u32,
    pub profile: JantzenProfile,
    pub transpose_profile: JantzenProfile,
    pub layers_bounded: bool,
    pub mirror_holds: bool,
    pub positional_products_hold: bool,
}

impl DualityCheck {
    pub fn holds(&self) -> bool {
        self.layers_bounded && self.mirror_holds && self.positional_products_hold
    }
}

/// Checks that layer `i` of `lambda` matches layer `v_p(n!/n_lambda) - i` of
/// the transpose, and that `d_i(lambda) * d_{r+1-i}(lambda') = n!/n_lambda`.
pub fn duality_checks(
    lambda: &Partition,
    chain: &DivisorChain,
    transpose_chain: &DivisorChain,
    p: u64,
) -> Result<DualityCheck> {
    if chain.len() != transpose_chain.len() {
        return Err(Error::Inconsistent("chains of a partition and its transpose differ in length".into()));
    }
    let quotient = factorial(lambda.n() as u64) / BigInt::from(chain.len());
    let top = valuation(p, &quotient);
    let profile = layers_from_divisors(chain, p);
    let transpose_profile = layers_from_divisors(transpose_chain, p);
    let layers_bounded = profile.top_layer().is_none_or(|t| t <= top);
    let mirror_holds = profile.mirrored(top).as_ref() == Some(&transpose_profile);
    let positional_products_hold = chain
        .divisors()
        .iter()
        .zip(transpose_chain.divisors().iter().rev())
        .all(|(a, b)| a * b == quotient);
    Ok(DualityCheck { prime: p, top, profile, transpose_profile, layers_bounded, mirror_holds, positional_products_hold })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(xs: &[u64]) -> DivisorChain {
        DivisorChain::from_u64(xs).unwrap()
    }

    #[test]
    fn profiles_from_chains() {
        assert_eq!(layers_from_divisors(&chain(&[2, 6]), 2).layer_dims, BTreeMap::from([(1, 2)]));
        assert_eq!(layers_from_divisors(&chain(&[2, 6]), 3).layer_dims, BTreeMap::from([(0, 1), (1, 1)]));
        assert_eq!(layers_from_divisors(&chain(&[1, 1, 1]), 5).layer_dims, BTreeMap::from([(0, 3)]));
    }

    #[test]
    fn distribution_cases() {
        assert_eq!(distribute_multiplicity(1, 3, 0).unwrap(), Distribution::Determined(BTreeMap::from([(3, 1)])));
        assert_eq!(distribute_multiplicity(2, 2, 1).unwrap(), Distribution::Determined(BTreeMap::from([(1, 2)])));
        assert_eq!(distribute_multiplicity(2, 3, 0).unwrap(), Distribution::Underdetermined);
        assert!(distribute_multiplicity(2, 1, 1).is_err());
    }

    #[test]
    fn duality_of_self_transpose_shapes() {
        let l: Partition = "2,1".parse().unwrap();
        let r = duality_checks(&l, &chain(&[1, 3]), &chain(&[1, 3]), 3).unwrap();
        assert!(r.holds());
        assert_eq!(r.top, 1);
        let l: Partition = "2,2".parse().unwrap();
        let r = duality_checks(&l, &chain(&[2, 6]), &chain(&[2, 6]), 2).unwrap();
        assert_eq!(r.top, 2);
        assert!(r.holds());
    }

    #[test]
    fn formal_sum_rendering_and_merging() {
        let mut s = FormalSum::new('D');
        s.add(3, "14".parse().unwrap(), Some(7));
        s.add(2, "13,1".parse().unwrap(), Some(8));
        s.add(-1, "12,2".parse().unwrap(), None);
        s.add(1, "12,2".parse().unwrap(), None);
        assert_eq!(s.to_string(), "3[D^(14)]_7 + 2[D^(13,1)]_8");
        assert_eq!(s.by_layer(), BTreeMap::from([(Some(7), 3), (Some(8), 2)]));
    }
}
