use num_bigint::BigInt;
use rayon::prelude::*;
use specht::arith::factorial;
use specht::closed_forms::{
    angle_polytabloid, lem22_order, lemfund_verify, two_column_22_structure, two_column_entry,
};
use specht::oracle::brute;
use specht::Partition;

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

#[test]
fn entries_match_scaled_pairings() {
    let cases: Vec<(usize, usize)> = (2..=9).flat_map(|n| (1..=3.min(n / 2)).map(move |h| (n, h))).collect();
    cases.into_par_iter().for_each(|(n, h)| {
        let tuples = subsets(n, h);
        let vecs: Vec<_> = tuples.iter().map(|t| angle_polytabloid(n, t).unwrap()).collect();
        let scale = factorial(h as u64) * factorial((n - 2 * h) as u64);
        for (a, va) in tuples.iter().zip(&vecs) {
            for (b, vb) in tuples.iter().zip(&vecs) {
                let direct = va.pair(vb);
                assert_eq!(&direct % &scale, BigInt::from(0));
                assert_eq!(two_column_entry(n, h, a, b).unwrap(), direct / &scale, "n={n} {a:?} {b:?}");
            }
        }
    });
}

#[test]
fn bases_trigonalize_for_six_to_nine() {
    (6..=9usize).into_par_iter().for_each(|n| {
        let r = brute(&Partition::two_column(n, 2).unwrap()).unwrap();
        let (group, bases) = two_column_22_structure(n).unwrap();
        assert!(group.is_isomorphic(&r.chain.group()), "n={n}: {group} vs {}", r.chain);
        let chain = lemfund_verify(&bases.x, &bases.y, &r.det).unwrap_or_else(|e| panic!("n={n}: {e}"));
        assert_eq!(chain, r.chain);
    });
}

#[test]
fn group_order_matches_product_formula() {
    for n in 6..=10 {
        let (group, _) = two_column_22_structure(n).unwrap();
        assert_eq!(group.order(), lem22_order(n).unwrap(), "n={n}");
    }
}
