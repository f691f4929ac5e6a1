//! Oracle-versus-closed-form suites behind `specht verify`.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;
use specht::analyses::{dim_simple, duality_report, james_bound, symmetric_report, unimodular_test};
use specht::arith::{factorial, primes_up_to, valuation};
use specht::closed_forms::{
    angle_polytabloid, hook_forms, large_prime_analyze, lemfund_verify, rectangular_scale, schaper_family,
    two_column_22_structure, two_column_entry, two_row_context, two_row_ediv, two_row_ediv_large_prime,
    LargePrimeCase, SchaperFamily,
};
use specht::jantzen::layers_from_divisors;
use specht::oracle::brute;
use specht::specht_module::conm5_check;
use specht::Partition;

use crate::fixtures;

pub const SUITES: [&str; 13] = [
    "two-row",
    "hook",
    "two-column",
    "large-prime",
    "duality",
    "conm5",
    "james",
    "dim-simple",
    "schaper",
    "rectangular",
    "symmetric",
    "unimodular",
    "fixtures",
];

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub max_n: usize,
    pub cases: usize,
    pub failures: Vec<String>,
    /// Lines printed for information only, never counted as failures.
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn default_max_n(suite: &str) -> usize {
    match suite {
        "two-row" => 10,
        "hook" | "two-column" | "large-prime" | "schaper" | "symmetric" => 9,
        "duality" => 7,
        "conm5" | "james" | "dim-simple" => 8,
        "unimodular" => 12,
        "rectangular" => 7,
        _ => 0,
    }
}

type Check = Box<dyn Fn() -> Result<(), String> + Send + Sync>;

fn run_checks(name: &str, max_n: usize, checks: Vec<Check>) -> SuiteReport {
    let start = Instant::now();
    let cases = checks.len();
    let mut failures: Vec<String> = checks.par_iter().filter_map(|c| c().err()).collect();
    failures.sort();
    SuiteReport { name: name.into(), max_n, cases, failures, notes: Vec::new(), elapsed: start.elapsed() }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn two_row(max_n: usize) -> Vec<Check> {
    let mut out: Vec<Check> = Vec::new();
    for n in 1..=max_n as u64 {
        for m in 0..=n / 2 {
            for p in [2u64, 3, 5, 7] {
                out.push(Box::new(move || {
                    let lambda = Partition::two_row(n as usize, m as usize).map_err(err)?;
                    let actual = brute(&lambda).map_err(err)?.chain.group().p_part(p);
                    let got = two_row_ediv(n, m, p).map_err(err)?;
                    if !got.is_isomorphic(&actual) {
                        return Err(format!("({lambda}) p={p}: closed form {got}, brute force {actual}"));
                    }
                    if p > m {
                        let large = two_row_ediv_large_prime(n, m, p).map_err(err)?;
                        if !large.is_isomorphic(&actual) {
                            return Err(format!("({lambda}) p={p}: large-prime form {large}, brute force {actual}"));
                        }
                    }
                    if m == 0 {
                        let ctx = two_row_context(n, 0, p).map_err(err)?;
                        for (j, d) in ctx.dims_d.iter().enumerate() {
                            let mu = Partition::two_row(n as usize, j).map_err(err)?;
                            let r = brute(&mu).map_err(err)?.rank_mod_p(p);
                            if *d != BigInt::from(r) {
                                return Err(format!("dim D^({mu}) at p={p}: closed form {d}, rank mod p {r}"));
                            }
                        }
                    }
                    Ok(())
                }));
            }
        }
    }
    out
}

fn hook(max_n: usize) -> Vec<Check> {
    let mut out: Vec<Check> = Vec::new();
    for n in 2..=max_n {
        for l in 0..n {
            out.push(Box::new(move || {
                let lambda = Partition::hook(n, l).map_err(err)?;
                let r = brute(&lambda).map_err(err)?;
                let f = hook_forms(n, l, None).map_err(err)?;
                if !f.group.is_isomorphic(&r.chain.group()) || f.order != r.chain.product() {
                    return Err(format!("({lambda}): closed form {} of order {}, brute force {}", f.group, f.order, r.chain));
                }
                for p in [2u64, 3, 5] {
                    let sum = hook_forms(n, l, Some(p)).map_err(err)?.layers.expect("layers requested");
                    let profile = sum.profile_with(p, |mu| Ok(brute(mu)?.rank_mod_p(p))).map_err(err)?;
                    let expected = layers_from_divisors(&r.chain, p);
                    if profile != expected {
                        return Err(format!("({lambda}) p={p}: layers {sum} give {profile}, brute force {expected}"));
                    }
                }
                Ok(())
            }));
        }
    }
    out
}

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

fn two_column(max_n: usize) -> Vec<Check> {
    let mut out: Vec<Check> = Vec::new();
    for n in 6..=max_n {
        out.push(Box::new(move || {
            let lambda = Partition::two_column(n, 2).map_err(err)?;
            let r = brute(&lambda).map_err(err)?;
            let (group, bases) = two_column_22_structure(n).map_err(err)?;
            if !group.is_isomorphic(&r.chain.group()) {
                return Err(format!("({lambda}): closed form {group}, brute force {}", r.chain));
            }
            let chain = lemfund_verify(&bases.x, &bases.y, &r.det).map_err(|e| format!("({lambda}): {e}"))?;
            if chain != r.chain {
                return Err(format!("({lambda}): trigonal diagonal {chain}, brute force {}", r.chain));
            }
            Ok(())
        }));
    }
    for n in 2..=max_n {
        for h in 1..=3.min(n / 2) {
            out.push(Box::new(move || {
                let tuples = subsets(n, h);
                let vecs: Vec<_> = tuples.iter().map(|t| angle_polytabloid(n, t)).collect::<Result<_, _>>().map_err(err)?;
                let scale = factorial(h as u64) * factorial((n - 2 * h) as u64);
                for (a, va) in tuples.iter().zip(&vecs) {
                    for (b, vb) in tuples.iter().zip(&vecs) {
                        let direct = va.pair(vb);
                        let formula = two_column_entry(n, h, a, b).map_err(err)?;
                        if formula * &scale != direct {
                            return Err(format!("n={n} h={h} {a:?} {b:?}: formula disagrees with pairing {direct}"));
                        }
                    }
                }
                Ok(())
            }));
        }
    }
    out
}

fn large_prime(max_n: usize) -> Vec<Check> {
    let mut out: Vec<Check> = Vec::new();
    for n in 2..=max_n {
        for lambda in Partition::all(n) {
            if lambda.len() == 1 {
                continue;
            }
            for p in primes_up_to(n as u64).into_iter().filter(|&p| p as usize > n - lambda.part(1)) {
                let lambda = lambda.clone();
                out.push(Box::new(move || {
                    let report = large_prime_analyze(&lambda, p).map_err(err)?;
                    let actual = brute(&lambda).map_err(err)?.chain.group().p_part(p);
                    let ok = match report.case {
                        LargePrimeCase::Simple => actual.is_trivial(),
                        LargePrimeCase::Shifted => report.p_part.is_isomorphic(&actual),
                    };
                    if ok {
                        Ok(())
                    } else {
                        Err(format!("({lambda}) p={p}: predicted {:?} {}, brute force {actual}", report.case, report.p_part))
                    }
                }));
            }
        }
    }
    out
}

fn duality(max_n: usize) -> Vec<Check> {
    (1..=max_n)
        .flat_map(Partition::all)
        .map(|lambda| -> Check {
            Box::new(move || {
                let r = duality_report(&lambda, &[2, 3, 5, 7]).map_err(err)?;
                if let Some(i) = r.positional_counterexample {
                    return Err(format!("({lambda}): product at position {i} is not {}", r.quotient));
                }
                if !r.det_product_holds {
                    return Err(format!("({lambda}): determinant product is not {}^rank", r.quotient));
                }
                if let Some(c) = r.layers.iter().find(|c| !c.holds()) {
                    return Err(format!("({lambda}) p={}: layer mirror fails ({} vs {})", c.prime, c.profile, c.transpose_profile));
                }
                Ok(())
            })
        })
        .collect()
}

fn conm5(max_n: usize) -> Vec<Check> {
    let mut out: Vec<Check> = Vec::new();
    for n in 2..=max_n {
        for h in 1..=n / 2 {
            out.push(Box::new(move || {
                let r = conm5_check(n, h).map_err(err)?;
                if r.holds {
                    Ok(())
                } else {
                    Err(format!("n={n} h={h}: intersection index {:?} vs {}", r.intersection_indices.last(), r.gram_kernel_index))
                }
            }));
        }
    }
    out
}

fn james(max_n: usize) -> Vec<Check> {
    (1..=max_n)
        .flat_map(Partition::all)
        .map(|lambda| -> Check {
            Box::new(move || {
                let r = james_bound(&lambda).map_err(err)?;
                if r.holds() {
                    Ok(())
                } else {
                    Err(format!("({lambda}): {} | {} | {} fails", r.factor, r.first_divisor, r.bound))
                }
            })
        })
        .collect()
}

fn dim_simple_suite(max_n: usize) -> Vec<Check> {
    let mut out: Vec<Check> = Vec::new();
    for lambda in (1..=max_n).flat_map(Partition::all) {
        for p in [2u64, 3, 5, 7] {
            let lambda = lambda.clone();
            out.push(Box::new(move || {
                let d = dim_simple(&lambda, p).map_err(err)?;
                let regular = lambda.is_p_regular(p as usize);
                if (d > 0) == regular {
                    Ok(())
                } else {
                    Err(format!("({lambda}) p={p}: dim D = {d} but regular = {regular}"))
                }
            }));
        }
    }
    out
}

fn schaper(max_n: usize) -> Vec<Check> {
    let mut out: Vec<Check> = Vec::new();
    for f in SchaperFamily::ALL {
        for n in f.min_n()..=max_n {
            for p in [2u64, 3, 5, 7] {
                out.push(Box::new(move || {
                    let head = f.head(n).map_err(err)?;
                    let sum = schaper_family(f, n, p).map_err(err)?;
                    let v = valuation(p, &brute(&head).map_err(err)?.det);
                    let w = sum.weighted_specht_dimension();
                    if w == BigInt::from(v) {
                        Ok(())
                    } else {
                        Err(format!("({head}) p={p}: {sum} weighs {w}, determinant valuation {v}"))
                    }
                }));
            }
        }
    }
    out
}

fn rectangular(max_k: usize) -> Vec<Check> {
    let mut shapes: Vec<Partition> =
        ["2,2", "2,2,2", "3,3"].iter().map(|s| s.parse().expect("literal partition")).collect();
    shapes.extend((2..=max_k).map(Partition::column));
    shapes
        .into_iter()
        .map(|mu| -> Check {
            Box::new(move || {
                let (nu, h) = rectangular_scale(&mu).map_err(err)?;
                let a = brute(&mu).map_err(err)?;
                let b = brute(&nu).map_err(err)?;
                let scaled: Vec<BigInt> = b.chain.divisors().iter().map(|d| d * h).collect();
                if a.chain.divisors() == scaled.as_slice() {
                    Ok(())
                } else {
                    Err(format!("({mu}): chain {} is not {h} times ({nu}) chain {}", a.chain, b.chain))
                }
            })
        })
        .collect()
}

fn symmetric(max_n: usize) -> (Vec<Check>, Vec<String>) {
    let shapes: Vec<Partition> = (2..=max_n).flat_map(Partition::all).filter(|l| l.is_symmetric()).collect();
    let notes = shapes
        .par_iter()
        .filter_map(|l| symmetric_report(l).ok())
        .map(|r| {
            let tag = if r.h_over_m_integer { "integral" } else { "NOT integral" };
            format!("({}) H={} m={} H/m {tag}", r.lambda, r.h, r.m_jump)
        })
        .collect();
    let checks = shapes
        .into_iter()
        .map(|lambda| -> Check {
            Box::new(move || {
                let r = symmetric_report(&lambda).map_err(err)?;
                if !r.h_over_m_square {
                    return Err(format!("({lambda}): H/m = {}/{} is not a rational square", r.h, r.m_jump));
                }
                if !r.middle_square {
                    return Err(format!("({lambda}): (n!/rank)/m is not the square of the middle divisor"));
                }
                if !r.gamma_divides {
                    return Err(format!("({lambda}): gamma {} does not divide the bound from alpha {}", r.gamma, r.alpha));
                }
                Ok(())
            })
        })
        .collect();
    (checks, notes)
}

fn unimodular(max_n: usize) -> Vec<Check> {
    let mut out: Vec<Check> = Vec::new();
    for n in 6..=max_n as u64 {
        for m in 3..=n / 2 {
            out.push(Box::new(move || {
                let r = unimodular_test(n, m, None).map_err(err)?;
                if r.exists() {
                    Err(format!("({},{m}): every prime passes the parity test", n - m))
                } else {
                    Ok(())
                }
            }));
        }
    }
    out
}

fn fixture_checks(include_reference: bool) -> (Vec<Check>, Vec<String>) {
    let mut notes = Vec::new();
    let mut checks: Vec<Check> = Vec::new();
    for f in fixtures::corpus() {
        if let fixtures::Expectation::Reference { partition, display, note } = &f.expect {
            if include_reference {
                notes.push(format!("{} ({partition}) {note}: {display}", f.id));
            }
            continue;
        }
        checks.push(Box::new(move || fixtures::check(&f).map_err(|e| format!("{}: {e}", f.id))));
    }
    (checks, notes)
}

/// Runs one suite; `None` for an unknown name.
pub fn run_suite(name: &str, max_n: Option<usize>, include_reference: bool) -> Option<SuiteReport> {
    let max = max_n.unwrap_or_else(|| default_max_n(name));
    let (checks, notes) = match name {
        "two-row" => (two_row(max), Vec::new()),
        "hook" => (hook(max), Vec::new()),
        "two-column" => (two_column(max), Vec::new()),
        "large-prime" => (large_prime(max), Vec::new()),
        "duality" => (duality(max), Vec::new()),
        "conm5" => (conm5(max), Vec::new()),
        "james" => (james(max), Vec::new()),
        "dim-simple" => (dim_simple_suite(max), Vec::new()),
        "schaper" => (schaper(max), Vec::new()),
        "rectangular" => (rectangular(max), Vec::new()),
        "symmetric" => symmetric(max),
        "unimodular" => (unimodular(max), Vec::new()),
        "fixtures" => fixture_checks(include_reference),
        _ => return None,
    };
    let mut report = run_checks(name, max, checks);
    report.notes = notes;
    Some(report)
}
