use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use specht::arith::{primes_up_to, valuation};
use specht::closed_forms::{f2_closed_form, f2_sum};
use specht::combinatorics::Tableau;
use specht::exact_linalg::{
    determinant, merge_p_parts, rank_mod_p, smith_normal_form, smith_normal_form_direct, IntMatrix,
};
use specht::jantzen::layers_from_divisors;
use specht::Partition;

fn matrix(max: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max).prop_flat_map(|k| {
        prop::collection::vec(prop::collection::vec(-30i64..=30, k), k)
            .prop_map(|rows| IntMatrix::from_i64_rows(&rows).unwrap())
    })
}

fn partition(max_n: usize) -> impl Strategy<Value = Partition> {
    (1..=max_n).prop_flat_map(|n| {
        let all = Partition::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn smith_form_is_invariant(m in matrix(6), seed in any::<u64>()) {
        let k = m.rows();
        let mut rp: Vec<usize> = (0..k).collect();
        let mut cp: Vec<usize> = (0..k).collect();
        rp.rotate_left((seed % k as u64) as usize);
        cp.reverse();
        let base = smith_normal_form(&m);
        prop_assert_eq!(&smith_normal_form(&m.permute(&rp, &cp)).chain, &base.chain);
        prop_assert_eq!(&smith_normal_form(&m.transpose()).chain, &base.chain);
        prop_assert_eq!(&smith_normal_form_direct(&m).chain, &base.chain);
    }

    #[test]
    fn chain_product_is_the_determinant(m in matrix(6)) {
        let det = determinant(&m);
        let s = smith_normal_form(&m);
        if det.is_zero() {
            prop_assert!(s.zero_factors > 0);
        } else {
            prop_assert_eq!(s.chain.product(), det.abs());
        }
    }

    #[test]
    fn rank_mod_p_counts_units(m in matrix(6), pi in 0usize..4) {
        let p = [2u64, 3, 5, 7][pi];
        let s = smith_normal_form(&m);
        let units = s.chain.count_coprime_to(p);
        prop_assert_eq!(rank_mod_p(&m, p), units);
    }

    #[test]
    fn p_parts_merge_back(m in matrix(5)) {
        let s = smith_normal_form(&m);
        prop_assume!(s.zero_factors == 0);
        let mut parts = BTreeMap::new();
        for p in s.chain.primes() {
            let pb = BigInt::from(p);
            let powers: Vec<BigInt> = s.chain.valuations(p).into_iter().map(|v| num_traits::pow(pb.clone(), v as usize)).collect();
            parts.insert(p, powers);
        }
        prop_assert_eq!(merge_p_parts(&parts, s.chain.len()).unwrap(), s.chain.clone());
    }

    #[test]
    fn layer_profile_weights_the_determinant(m in matrix(5), pi in 0usize..3) {
        let p = [2u64, 3, 5][pi];
        let s = smith_normal_form(&m);
        prop_assume!(s.zero_factors == 0);
        let prof = layers_from_divisors(&s.chain, p);
        prop_assert_eq!(prof.weighted(), valuation(p, &s.chain.product()) as u64);
        prop_assert_eq!(prof.rank(), s.chain.len());
    }

    #[test]
    fn f2_product_form(k in 0u64..4096, m in 0u64..4096) {
        let m = m % (k + 1);
        if let Some(c) = f2_closed_form(k, m) {
            prop_assert_eq!(c, f2_sum(k as i64, m as i64));
        }
    }

    #[test]
    fn partition_invariants(lambda in partition(10)) {
        prop_assert_eq!(lambda.transpose().transpose(), lambda.clone());
        prop_assert_eq!(lambda.dim_specht(), lambda.dim_by_hook_formula());
        if lambda.n() <= 8 {
            prop_assert_eq!(BigInt::from(Tableau::standard(&lambda).len()), lambda.dim_specht());
        }
        for p in primes_up_to(11) {
            let r = lambda.regularity(p as usize);
            prop_assert_eq!(r.regularized.n(), lambda.n());
            prop_assert!(r.regularized.is_p_regular(p as usize));
            prop_assert_eq!(r.is_regular, r.regularized == lambda);
        }
        prop_assert!(lambda.james_upper_bound() >= lambda.james_factor());
        prop_assert!(!lambda.dim_specht().is_negative());
    }
}
