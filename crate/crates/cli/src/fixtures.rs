//! Known values embedded in the binary, checked by `verify fixtures`.

use num_bigint::BigInt;
use serde::Deserialize;
use specht::analyses::symmetric_report;
use specht::closed_forms::{hook_layers, hook_trigonal_basis, two_column_22_group};
use specht::exact_linalg::IntMatrix;
use specht::oracle::brute;
use specht::Partition;

const CORPUS: &str = include_str!("../fixtures/known.json");

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Expectation {
    Chain { partition: String, divisors: String },
    HookPairing { n: usize, l: usize, rows: Vec<Vec<i64>> },
    TwoColumnGroup { n: usize, group: String },
    HookLayers { n: usize, l: usize, p: u64, display: String },
    Symmetric {
        partition: String,
        #[serde(default)]
        alpha: Option<u64>,
        #[serde(default)]
        gamma: Option<u64>,
        #[serde(default)]
        m: Option<u64>,
        #[serde(default)]
        h: Option<u64>,
        #[serde(default)]
        first_half: Option<String>,
    },
    Reference { partition: String, display: String, note: String },
}

#[derive(Clone, Debug, Deserialize)]
pub struct Fixture {
    pub id: String,
    #[serde(flatten)]
    pub expect: Expectation,
}

impl Fixture {
    pub fn is_reference_only(&self) -> bool {
        matches!(self.expect, Expectation::Reference { .. })
    }
}

pub fn corpus() -> Vec<Fixture> {
    serde_json::from_str(CORPUS).expect("embedded fixture corpus parses")
}

/// `"1^4 3^4 15"` to `[(1, 4), (3, 4), (15, 1)]`.
pub fn parse_compact(text: &str) -> Result<Vec<(BigInt, usize)>, String> {
    text.split_whitespace()
        .map(|tok| {
            let (d, k) = tok.split_once('^').unwrap_or((tok, "1"));
            let d = d.parse::<BigInt>().map_err(|e| format!("bad divisor {d:?}: {e}"))?;
            let k = k.parse::<usize>().map_err(|e| format!("bad multiplicity {k:?}: {e}"))?;
            Ok((d, k))
        })
        .collect()
}

fn expand(groups: &[(BigInt, usize)]) -> Vec<BigInt> {
    groups.iter().flat_map(|(d, k)| std::iter::repeat_n(d.clone(), *k)).collect()
}

fn partition(text: &str) -> Result<Partition, String> {
    text.parse().map_err(|e: specht::Error| e.to_string())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Checks one fixture; reference-only fixtures are not checkable.
pub fn check(f: &Fixture) -> Result<(), String> {
    match &f.expect {
        Expectation::Chain { partition: p, divisors } => {
            let chain = brute(&partition(p)?).map_err(|e| e.to_string())?.chain.clone();
            let expected = expand(&parse_compact(divisors)?);
            ensure(chain.divisors() == expected.as_slice(), || format!("({p}) has chain {chain}, expected {divisors}"))
        }
        Expectation::HookPairing { n, l, rows } => {
            let got = hook_trigonal_basis(*n, *l).map_err(|e| e.to_string())?.pairing();
            let want = IntMatrix::from_i64_rows(rows).map_err(|e| e.to_string())?;
            ensure(got == want, || format!("hook ({n},{l}) pairing table is {:?}", got.to_decimal_strings()))
        }
        Expectation::TwoColumnGroup { n, group } => {
            let got = two_column_22_group(*n).map_err(|e| e.to_string())?;
            let chain = brute(&Partition::two_column(*n, 2).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?
                .chain
                .group();
            ensure(&got.to_string() == group && got.is_isomorphic(&chain), || {
                format!("n={n}: closed form {got}, brute force {chain}, expected {group}")
            })
        }
        Expectation::HookLayers { n, l, p, display } => {
            let got = hook_layers(*n, *l, *p).map_err(|e| e.to_string())?.to_string();
            ensure(&got == display, || format!("hook ({n},{l}) at p={p}: {got}"))
        }
        Expectation::Symmetric { partition: p, alpha, gamma, m, h, first_half } => {
            let lambda = partition(p)?;
            let r = symmetric_report(&lambda).map_err(|e| e.to_string())?;
            let pairs = [(alpha, &r.alpha, "alpha"), (gamma, &r.gamma, "gamma"), (m, &r.m_jump, "m"), (h, &r.h, "H")];
            for (want, got, name) in pairs {
                if let Some(w) = want {
                    ensure(&BigInt::from(*w) == got, || format!("({p}): {name} = {got}, expected {w}"))?;
                }
            }
            if let Some(text) = first_half {
                let groups = parse_compact(text)?;
                let chain = brute(&lambda).map_err(|e| e.to_string())?.chain.clone();
                let listed = expand(&groups);
                let d = chain.divisors();
                let (last, k) = groups.last().ok_or("empty divisor list")?;
                let head: usize = groups[..groups.len() - 1].iter().map(|g| g.1).sum();
                ensure(d.len() >= listed.len() && d[..listed.len()] == listed[..], || {
                    format!("({p}): chain {chain} does not start with {text}")
                })?;
                ensure(d.iter().filter(|x| *x == last).count() == *k, || format!("({p}): multiplicity of {last} is not {k}"))?;
                ensure(head == chain.len() / 2, || format!("({p}): listed prefix stops before the middle"))?;
            }
            Ok(())
        }
        Expectation::Reference { .. } => Err("reference-only fixture".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_parses_and_has_references() {
        let c = corpus();
        assert!(c.iter().filter(|f| f.is_reference_only()).count() >= 2);
        let mut ids: Vec<&str> = c.iter().map(|f| f.id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), c.len());
    }

    #[test]
    fn compact_parsing() {
        assert_eq!(parse_compact("2 6^3").unwrap(), vec![(BigInt::from(2), 1), (BigInt::from(6), 3)]);
        assert!(parse_compact("x").is_err());
    }
}
