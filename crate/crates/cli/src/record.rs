//! The serialized result of one brute-force computation.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use specht::arith::primes_up_to;
use specht::exact_linalg::DivisorChain;
use specht::oracle::BruteResult;
use specht::Partition;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Elementary divisors of one Gram matrix. Big integers are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub partition: String,
    pub rank: usize,
    pub elementary_divisors: Vec<String>,
    /// Prime (as text) to the valuations of the divisors, for primes `<= n`.
    pub p_parts: BTreeMap<String, Vec<u32>>,
    pub det: String,
    pub provenance: String,
    pub tool_version: String,
}

impl ResultRecord {
    pub fn from_brute(r: &BruteResult) -> Self {
        let n = r.partition.n() as u64;
        let p_parts = primes_up_to(n).into_iter().map(|p| (p.to_string(), r.chain.valuations(p))).collect();
        ResultRecord {
            partition: r.partition.to_string(),
            rank: r.chain.len(),
            elementary_divisors: r.chain.divisors().iter().map(|d| d.to_string()).collect(),
            p_parts,
            det: r.det.to_string(),
            provenance: "brute".into(),
            tool_version: TOOL_VERSION.into(),
        }
    }

    pub fn chain(&self) -> Result<DivisorChain, String> {
        let ds = self
            .elementary_divisors
            .iter()
            .map(|d| d.parse::<BigInt>().map_err(|e| format!("bad divisor {d:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        DivisorChain::new(ds).map_err(|e| e.to_string())
    }

    /// Checks the record against its own invariants.
    pub fn validate(&self) -> Result<(), String> {
        let lambda: Partition = self.partition.parse().map_err(|e: specht::Error| e.to_string())?;
        if lambda.to_string() != self.partition {
            return Err(format!("partition {:?} is not in canonical form", self.partition));
        }
        let chain = self.chain()?;
        if chain.len() != self.rank {
            return Err(format!("rank {} but {} divisors", self.rank, chain.len()));
        }
        let det: BigInt = self.det.parse().map_err(|e| format!("bad determinant: {e}"))?;
        if det != chain.product() {
            return Err(format!("determinant {det} differs from the divisor product {}", chain.product()));
        }
        for (p, vals) in &self.p_parts {
            let p: u64 = p.parse().map_err(|e| format!("bad prime {p:?}: {e}"))?;
            if *vals != chain.valuations(p) {
                return Err(format!("{p}-valuations do not match the divisors"));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use specht::oracle::brute;

    #[test]
    fn two_two_record() {
        let r = ResultRecord::from_brute(&brute(&"2,2".parse().unwrap()).unwrap());
        assert_eq!(r.elementary_divisors, vec!["2", "6"]);
        assert_eq!(r.det, "12");
        assert_eq!(r.p_parts["2"], vec![1, 1]);
        assert_eq!(r.p_parts["3"], vec![0, 1]);
        r.validate().unwrap();
        let back: ResultRecord = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn rejects_tampering() {
        let mut r = ResultRecord::from_brute(&brute(&"2,1".parse().unwrap()).unwrap());
        r.det = "4".into();
        assert!(r.validate().is_err());
    }
}
