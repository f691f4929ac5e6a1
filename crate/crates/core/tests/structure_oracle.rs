use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use specht::analyses::{dim_simple, duality_report, james_bound, symmetric_report};
use specht::arith::primes_up_to;
use specht::closed_forms::{large_prime_analyze, rectangular_scale, schaper_family, LargePrimeCase, SchaperFamily};
use specht::oracle::brute;
use specht::Partition;

#[test]
fn large_prime_predictions_match_brute_force() {
    let mut cases = Vec::new();
    for n in 2..=9 {
        for lambda in Partition::all(n) {
            if lambda.len() == 1 {
                continue;
            }
            for p in primes_up_to(n as u64) {
                if p as usize > n - lambda.part(1) {
                    cases.push((lambda.clone(), p));
                }
            }
        }
    }
    cases.into_par_iter().for_each(|(lambda, p)| {
        let report = large_prime_analyze(&lambda, p).unwrap();
        let actual = brute(&lambda).unwrap().chain.group().p_part(p);
        match report.case {
            LargePrimeCase::Simple => assert!(actual.is_trivial(), "{lambda} p={p}: {actual}"),
            LargePrimeCase::Shifted => {
                assert!(!report.dim_shift.is_negative());
                assert!(report.p_part.is_isomorphic(&actual), "{lambda} p={p}: {} vs {actual}", report.p_part);
            }
        }
    });
}

#[test]
fn duality_holds_up_to_seven() {
    let cases: Vec<Partition> = (1..=7).flat_map(Partition::all).collect();
    cases.into_par_iter().for_each(|lambda| {
        let r = duality_report(&lambda, &[2, 3, 5, 7]).unwrap();
        assert!(r.holds(), "{lambda}: {r:?}");
    });
}

#[test]
fn james_bound_and_simple_dimensions_up_to_eight() {
    let cases: Vec<Partition> = (1..=8).flat_map(Partition::all).collect();
    cases.into_par_iter().for_each(|lambda| {
        assert!(james_bound(&lambda).unwrap().holds(), "{lambda}");
        for p in [2u64, 3, 5, 7] {
            let d = dim_simple(&lambda, p).unwrap();
            assert_eq!(d > 0, lambda.is_p_regular(p as usize), "{lambda} p={p}");
        }
    });
}

#[test]
fn schaper_identities_up_to_nine() {
    let mut cases = Vec::new();
    for f in SchaperFamily::ALL {
        for n in f.min_n()..=9 {
            for p in [2u64, 3, 5, 7] {
                cases.push((f, n, p));
            }
        }
    }
    cases.into_par_iter().for_each(|(f, n, p)| {
        let head = f.head(n).unwrap();
        let sum = schaper_family(f, n, p).unwrap();
        let det = brute(&head).unwrap().det.clone();
        let v = specht::arith::valuation(p, &det);
        assert_eq!(sum.weighted_specht_dimension(), BigInt::from(v), "{head} p={p}: {sum}");
    });
}

#[test]
fn rectangles_scale_their_chains() {
    let mut shapes: Vec<Partition> = ["2,2", "2,2,2", "3,3"].iter().map(|s| s.parse().unwrap()).collect();
    shapes.extend((2..=7).map(Partition::column));
    for mu in shapes {
        let (nu, h) = rectangular_scale(&mu).unwrap();
        let a = brute(&mu).unwrap();
        let b = brute(&nu).unwrap();
        let scaled: Vec<BigInt> = b.chain.divisors().iter().map(|d| d * h).collect();
        assert_eq!(a.chain.divisors(), scaled.as_slice(), "{mu} vs {h}*{nu}");
    }
}

#[test]
fn symmetric_reports_up_to_nine() {
    let cases: Vec<Partition> = (2..=9).flat_map(Partition::all).filter(|l| l.is_symmetric()).collect();
    cases.into_par_iter().for_each(|lambda| {
        let r = symmetric_report(&lambda).unwrap();
        assert!(r.h_over_m_square, "{lambda}: H={} m={}", r.h, r.m_jump);
        assert!(r.middle_square, "{lambda}");
        assert!(r.gamma_divides, "{lambda}: gamma={} alpha={}", r.gamma, r.alpha);
    });
}
