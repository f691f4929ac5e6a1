//! Acceptance criteria, one PASS/FAIL line each. Every criterion runs the
//! binary in a fresh process with an empty cache directory and is
//! timed against its limit.

use std::process::Command;
use std::time::{Duration, Instant};

struct Run {
    code: i32,
    stdout: String,
}

fn specht(cache: &std::path::Path, args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_specht"))
        .arg("--cache-dir")
        .arg(cache)
        .args(args)
        .output()
        .expect("binary runs");
    Run { code: out.status.code().unwrap_or(-1), stdout: String::from_utf8_lossy(&out.stdout).into_owned() }
}

fn field<'a>(stdout: &'a str, key: &str) -> Option<&'a str> {
    stdout.lines().find_map(|l| l.strip_prefix(key).filter(|rest| rest.starts_with(' ')).map(str::trim))
}

fn expect_field(run: &Run, key: &str, value: &str) -> Result<(), String> {
    match field(&run.stdout, key) {
        Some(v) if v == value => Ok(()),
        other => Err(format!("{key}: expected {value:?}, got {other:?}")),
    }
}

fn suites(cache: &std::path::Path, list: &[(&str, &str)]) -> Result<(), String> {
    for (suite, max_n) in list {
        let r = specht(cache, &["verify", suite, "--max-n", max_n]);
        if r.code != 0 {
            return Err(format!("verify {suite} exited {}:\n{}", r.code, r.stdout));
        }
    }
    Ok(())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    body: fn(&std::path::Path) -> Result<(), String>,
}

fn ediv_two_two(cache: &std::path::Path) -> Result<(), String> {
    let r = specht(cache, &["ediv", "2,2"]);
    expect_field(&r, "divisors", "2^1 6^1")
}

fn ediv_three_two_one(cache: &std::path::Path) -> Result<(), String> {
    let r = specht(cache, &["ediv", "3,2,1", "--prime", "3"]);
    expect_field(&r, "divisors", "1^4 3^4 15^4 45^4")?;
    expect_field(&r, "3-valuations", "[0,0,0,0,1,1,1,1,1,1,1,1,2,2,2,2]")
}

fn two_two_one_one(cache: &std::path::Path) -> Result<(), String> {
    let group = "Z/4 + (Z/20)^3 + Z/40 + (Z/80)^4";
    let r = specht(cache, &["ediv", "2^2,1^2"]);
    expect_field(&r, "divisors", "4^1 20^3 40^1 80^4")?;
    expect_field(&r, "group", group)?;
    let f = specht(cache, &["formula", "two-column", "--n", "6"]);
    if f.code != 0 {
        return Err(format!("formula two-column exited {}", f.code));
    }
    expect_field(&f, "group", group)?;
    expect_field(&f, "bases", "trigonal pair of size 9 verified")?;
    expect_field(&f, "chain", "4^1 20^3 40^1 80^4")
}

fn pell_and_unimodular(cache: &std::path::Path) -> Result<(), String> {
    let start = Instant::now();
    let r = specht(cache, &["pell", "--bound", "1000000"]);
    if r.stdout != "1 1 1\n" {
        return Err(format!("pell printed {:?}", r.stdout));
    }
    if start.elapsed() >= Duration::from_secs(60) {
        return Err(format!("pell took {:?}", start.elapsed()));
    }
    suites(cache, &[("unimodular", "12")])
}

fn conm5(cache: &std::path::Path) -> Result<(), String> {
    suites(cache, &[("conm5", "8")])?;
    let r = specht(cache, &["conm5", "--n", "8", "--h", "4"]);
    expect_field(&r, "result", "holds")
}

const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, name: "ediv 2,2", limit: Duration::from_secs(1), body: ediv_two_two },
    Criterion { id: 2, name: "ediv 3,2,1", limit: Duration::from_secs(10), body: ediv_three_two_one },
    Criterion { id: 3, name: "ediv 2^2,1^2 and two-column n=6", limit: Duration::from_secs(30), body: two_two_one_one },
    Criterion {
        id: 4,
        name: "two-row suite n <= 10",
        limit: Duration::from_secs(600),
        body: |c| suites(c, &[("two-row", "10")]),
    },
    Criterion { id: 5, name: "hook suite n <= 9", limit: Duration::from_secs(300), body: |c| suites(c, &[("hook", "9")]) },
    Criterion {
        id: 6,
        name: "large-prime suite n <= 9",
        limit: Duration::from_secs(600),
        body: |c| suites(c, &[("large-prime", "9")]),
    },
    Criterion {
        id: 7,
        name: "duality suite n <= 7",
        limit: Duration::from_secs(600),
        body: |c| suites(c, &[("duality", "7")]),
    },
    Criterion { id: 8, name: "conm5 n <= 8", limit: Duration::from_secs(900), body: conm5 },
    Criterion { id: 9, name: "pell 10^6 and unimodular n <= 12", limit: Duration::from_secs(120), body: pell_and_unimodular },
    Criterion {
        id: 10,
        name: "james, dim-simple, schaper, rectangular",
        limit: Duration::from_secs(600),
        body: |c| suites(c, &[("james", "8"), ("dim-simple", "8"), ("schaper", "9"), ("rectangular", "7")]),
    },
];

#[test]
fn acceptance_criteria() {
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let cache = tempfile::tempdir().expect("temp dir");
        let start = Instant::now();
        let result = (c.body)(cache.path());
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            if elapsed < c.limit {
                Ok(())
            } else {
                Err(format!("took {elapsed:.2?}, limit {:?}", c.limit))
            }
        });
        match &result {
            Ok(()) => println!("PASS {:>2} {} ({elapsed:.2?})", c.id, c.name),
            Err(e) => {
                println!("FAIL {:>2} {} ({elapsed:.2?}): {e}", c.id, c.name);
                failed.push(c.id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
