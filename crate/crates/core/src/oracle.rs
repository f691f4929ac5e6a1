//! Brute-force divisor chains: build the Gram matrix, take its Smith form.
//! Results are memoised per partition for the lifetime of the process.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use crate::combinatorics::Partition;
use crate::error::Result;
use crate::exact_linalg::{rank_mod_p, smith_normal_form, DivisorChain, IntMatrix};
use crate::specht_module::gram_matrix;

/// Gram matrix, its divisor chain and signed determinant.
#[derive(Clone, Debug)]
pub struct BruteResult {
    pub partition: Partition,
    pub gram: IntMatrix,
    pub chain: DivisorChain,
    pub det: BigInt,
}

impl BruteResult {
    pub fn rank(&self) -> usize {
        self.chain.len()
    }

    pub fn rank_mod_p(&self, p: u64) -> usize {
        rank_mod_p(&self.gram, p)
    }
}

type Slot = Arc<OnceLock<Arc<BruteResult>>>;

fn cache() -> &'static Mutex<HashMap<Partition, Slot>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Slot>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Computes without touching the cache.
pub fn compute(lambda: &Partition) -> Result<BruteResult> {
    let ctx = gram_matrix(lambda, false)?;
    let smith = smith_normal_form(&ctx.gram);
    let det = smith.det.expect("Gram matrices are square");
    Ok(BruteResult { partition: lambda.clone(), gram: ctx.gram, chain: smith.chain, det })
}

/// Memoised [`compute`]. Concurrent callers for the same partition wait
/// for a single computation.
pub fn brute(lambda: &Partition) -> Result<Arc<BruteResult>> {
    let slot = {
        let mut map = cache().lock().expect("oracle cache poisoned");
        map.entry(lambda.clone()).or_default().clone()
    };
    if let Some(r) = slot.get() {
        return Ok(r.clone());
    }
    let r = Arc::new(compute(lambda)?);
    Ok(slot.get_or_init(|| r).clone())
}

pub fn brute_chain(lambda: &Partition) -> Result<DivisorChain> {
    Ok(brute(lambda)?.chain.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn memoises_small_chains() {
        let l: Partition = "2,2".parse().unwrap();
        let a = brute(&l).unwrap();
        let b = brute(&l).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(a.chain, DivisorChain::from_u64(&[2, 6]).unwrap());
        assert_eq!(a.det, BigInt::from(12));
        assert_eq!(a.rank_mod_p(3), 1);
    }
}
