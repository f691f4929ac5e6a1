use num_bigint::BigInt;
use rayon::prelude::*;
use specht::closed_forms::{two_row_context, two_row_decomposition, two_row_ediv, two_row_ediv_large_prime};
use specht::jantzen::layers_from_divisors;
use specht::oracle::brute;
use specht::Partition;

const PRIMES: [u64; 4] = [2, 3, 5, 7];

fn cases() -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for n in 1..=10u64 {
        for m in 0..=n / 2 {
            for p in PRIMES {
                out.push((n, m, p));
            }
        }
    }
    out
}

#[test]
fn p_parts_match_brute_force() {
    cases().into_par_iter().for_each(|(n, m, p)| {
        let chain = brute(&Partition::two_row(n as usize, m as usize).unwrap()).unwrap().chain.clone();
        let expected = chain.group().p_part(p);
        let got = two_row_ediv(n, m, p).unwrap();
        assert!(got.is_isomorphic(&expected), "({},{m}) p={p}: {got} vs {expected}", n - m);
        if p > m {
            let large = two_row_ediv_large_prime(n, m, p).unwrap();
            assert!(large.is_isomorphic(&got), "({},{m}) p={p}: large-prime form {large} vs {got}", n - m);
        }
    });
}

#[test]
fn simple_dimensions_are_ranks_mod_p() {
    cases().into_par_iter().filter(|&(_, m, _)| m == 0).for_each(|(n, _, p)| {
        let ctx = two_row_context(n, 0, p).unwrap();
        for (j, d) in ctx.dims_d.iter().enumerate() {
            let r = brute(&Partition::two_row(n as usize, j).unwrap()).unwrap().rank_mod_p(p);
            assert_eq!(*d, BigInt::from(r), "dim D^({},{j}) at p={p}", n as usize - j);
        }
    });
}

#[test]
fn decomposition_layers_match_brute_profile() {
    cases().into_par_iter().for_each(|(n, m, p)| {
        let lambda = Partition::two_row(n as usize, m as usize).unwrap();
        let sum = two_row_decomposition(n, m, p).unwrap();
        let profile = sum.profile_with(p, |mu| Ok(brute(mu)?.rank_mod_p(p))).unwrap();
        let expected = layers_from_divisors(&brute(&lambda).unwrap().chain, p);
        assert_eq!(profile, expected, "{lambda} at p={p}: {sum}");
    });
}
