use num_bigint::BigInt;
use rayon::prelude::*;
use specht::arith::{binomial, factorial};
use specht::closed_forms::{hook_forms, hook_trigonal_basis, lemfund_verify};
use specht::jantzen::layers_from_divisors;
use specht::oracle::brute;
use specht::Partition;

fn cases() -> Vec<(usize, usize)> {
    (2..=9).flat_map(|n| (0..n).map(move |l| (n, l))).collect()
}

#[test]
fn groups_and_orders_match_brute_force() {
    cases().into_par_iter().for_each(|(n, l)| {
        let r = brute(&Partition::hook(n, l).unwrap()).unwrap();
        let f = hook_forms(n, l, None).unwrap();
        assert!(f.group.is_isomorphic(&r.chain.group()), "hook ({n},{l}): {} vs {}", f.group, r.chain);
        assert_eq!(f.order, r.chain.product());
    });
}

#[test]
fn layer_profiles_match_brute_force() {
    let cases: Vec<(usize, usize, u64)> =
        cases().into_iter().flat_map(|(n, l)| [2, 3, 5].map(|p| (n, l, p))).collect();
    cases.into_par_iter().for_each(|(n, l, p)| {
        let lambda = Partition::hook(n, l).unwrap();
        let sum = hook_forms(n, l, Some(p)).unwrap().layers.unwrap();
        let profile = sum.profile_with(p, |mu| Ok(brute(mu)?.rank_mod_p(p))).unwrap();
        let expected = layers_from_divisors(&brute(&lambda).unwrap().chain, p);
        assert_eq!(profile, expected, "{lambda} at p={p}: {sum}");
    });
}

#[test]
fn trigonal_bases_give_the_chain() {
    cases().into_par_iter().filter(|&(n, _)| n <= 8).for_each(|(n, l)| {
        let r = brute(&Partition::hook(n, l).unwrap()).unwrap();
        let b = hook_trigonal_basis(n, l).unwrap();
        let chain = lemfund_verify(&b.x, &b.y, &r.det).unwrap_or_else(|e| panic!("hook ({n},{l}): {e}"));
        assert_eq!(chain, r.chain);
        let scale = factorial(l as u64);
        let first_block = binomial(n as i64 - 2, l as i64);
        let g = b.pairing();
        for i in 0..g.rows() {
            let expected = if BigInt::from(i) < first_block { BigInt::from(1) } else { BigInt::from(n) };
            assert_eq!(g.get(i, i) / &scale, expected, "hook ({n},{l}) diagonal {i}");
        }
    });
}
