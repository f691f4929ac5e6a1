use std::fmt;
use std::io::{self, Write};

use specht::analyses::{pell_search, symmetric_report_from_chain, unimodular_test};
use specht::arith::is_prime;
use specht::closed_forms::{
    hook_forms, large_prime_analyze, lemfund_verify, schaper_family, two_column_22_structure, two_row_context,
    two_row_decomposition, two_row_ediv, SchaperFamily,
};
use specht::jantzen::layers_from_divisors;
use specht::oracle::brute;
use specht::specht_module::conm5_check;
use specht::Partition;

use crate::cache::Cache;
use crate::verify::{self, SuiteReport, SUITES};
use crate::{Cli, Command, Formula, EXIT_MISMATCH, EXIT_OK};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => crate::EXIT_USAGE,
            CliError::Failure(_) => EXIT_MISMATCH,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) | CliError::Failure(s) => write!(f, "{s}"),
        }
    }
}

impl From<specht::Error> for CliError {
    fn from(e: specht::Error) -> Self {
        use specht::Error as E;
        match e {
            E::Parse { .. } | E::InvalidPartition(_) | E::Domain(_) | E::OutOfRange(_) => CliError::Usage(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Failure(format!("output: {e}"))
    }
}

type Outcome = Result<i32, CliError>;

const KEY_WIDTH: usize = 16;

fn kv(out: &mut dyn Write, key: &str, value: impl fmt::Display) -> io::Result<()> {
    writeln!(out, "{key:<KEY_WIDTH$}{value}")
}

fn partition(text: &str) -> Result<Partition, CliError> {
    Ok(text.parse::<Partition>()?)
}

fn prime(p: u64) -> Result<u64, CliError> {
    if is_prime(p) {
        Ok(p)
    } else {
        Err(CliError::Usage(format!("{p} is not prime")))
    }
}

fn list<T: fmt::Display>(xs: &[T]) -> String {
    let items: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(","))
}

pub fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let cache = Cache::resolve(cli.cache_dir);
    match cli.command {
        Command::Ediv { partition: text, prime: p, json } => ediv(&cache, &text, p, json, out, err),
        Command::Formula { which } => formula(which, out),
        Command::Jantzen { partition: text, prime: p } => jantzen(&cache, &text, p, out, err),
        Command::Symmetric { partition: text } => symmetric(&cache, &text, out, err),
        Command::Unimodular { n, m, prime: p } => unimodular(n, m, p, out),
        Command::Pell { bound } => {
            for (x, y, z) in pell_search(bound) {
                writeln!(out, "{x} {y} {z}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Conm5 { n, h } => conm5(n, h, out),
        Command::Verify { suite, max_n, include_reference } => run_verify(&suite, max_n, include_reference, out),
    }
}

fn ediv(cache: &Cache, text: &str, p: Option<u64>, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let lambda = partition(text)?;
    let p = p.map(prime).transpose()?;
    let mut record = cache.get_or_compute(&lambda, err)?;
    let chain = record.chain().map_err(CliError::Failure)?;
    if json {
        if let Some(p) = p {
            record.p_parts.insert(p.to_string(), chain.valuations(p));
        }
        writeln!(out, "{}", record.to_json())?;
        return Ok(EXIT_OK);
    }
    kv(out, "partition", &record.partition)?;
    kv(out, "rank", record.rank)?;
    kv(out, "divisors", &chain)?;
    kv(out, "group", chain.group())?;
    kv(out, "det", &record.det)?;
    if let Some(p) = p {
        kv(out, &format!("{p}-valuations"), list(&chain.valuations(p)))?;
    }
    Ok(EXIT_OK)
}

fn jantzen(cache: &Cache, text: &str, p: u64, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let lambda = partition(text)?;
    let p = prime(p)?;
    let chain = cache.get_or_compute(&lambda, err)?.chain().map_err(CliError::Failure)?;
    let profile = layers_from_divisors(&chain, p);
    kv(out, "partition", &lambda)?;
    kv(out, "prime", p)?;
    kv(out, "weighted", profile.weighted())?;
    writeln!(out, "{:<8}dim", "layer")?;
    for (layer, dim) in &profile.layer_dims {
        writeln!(out, "{layer:<8}{dim}")?;
    }
    Ok(EXIT_OK)
}

fn symmetric(cache: &Cache, text: &str, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let lambda = partition(text)?;
    if !lambda.is_symmetric() {
        return Err(CliError::Usage(format!("{lambda} is not symmetric")));
    }
    let chain = cache.get_or_compute(&lambda, err)?.chain().map_err(CliError::Failure)?;
    let r = symmetric_report_from_chain(&lambda, &chain)?;
    kv(out, "partition", &r.lambda)?;
    kv(out, "rank", r.rank)?;
    kv(out, "durfee", r.s)?;
    kv(out, "H", &r.h)?;
    kv(out, "m", &r.m_jump)?;
    kv(out, "alpha", &r.alpha)?;
    kv(out, "gamma", &r.gamma)?;
    kv(out, "h_sq", &r.h_sq)?;
    kv(out, "signed H square", r.signed_h_is_square)?;
    kv(out, "H/m square", r.h_over_m_square)?;
    kv(out, "H/m integer", r.h_over_m_integer)?;
    kv(out, "gamma divides", r.gamma_divides)?;
    kv(out, "middle square", r.middle_square)?;
    Ok(EXIT_OK)
}

fn unimodular(n: u64, m: u64, p: Option<u64>, out: &mut dyn Write) -> Outcome {
    let r = unimodular_test(n, m, p)?;
    writeln!(out, "{:<8}{:<8}mu", "prime", "passes")?;
    for l in &r.local {
        writeln!(out, "{:<8}{:<8}{}", l.p, l.passes, list(&l.mu))?;
    }
    kv(out, "exists", r.exists())?;
    Ok(EXIT_OK)
}

fn conm5(n: usize, h: usize, out: &mut dyn Write) -> Outcome {
    let r = conm5_check(n, h)?;
    let indices: Vec<String> = r.intersection_indices.iter().map(|x| x.to_string()).collect();
    let coeffs: Vec<String> = r.coefficients.iter().map(|x| x.to_string()).collect();
    kv(out, "shape", Partition::two_column(n, h)?)?;
    kv(out, "rank", r.rank)?;
    kv(out, "coefficients", list(&coeffs))?;
    kv(out, "indices", list(&indices))?;
    kv(out, "gram kernel", &r.gram_kernel_index)?;
    kv(out, "checks", r.well_defined_checks)?;
    kv(out, "result", if r.holds { "holds" } else { "fails" })?;
    Ok(if r.holds { EXIT_OK } else { EXIT_MISMATCH })
}

fn formula(which: Formula, out: &mut dyn Write) -> Outcome {
    match which {
        Formula::TwoRow { n, m, prime: p } => {
            let p = prime(p)?;
            let ctx = two_row_context(n, m, p)?;
            kv(out, "shape", Partition::two_row(n as usize, m as usize)?)?;
            kv(out, "prime", p)?;
            kv(out, "schaper", list(&ctx.schaper))?;
            kv(out, "mu", list(&ctx.mu))?;
            let dims: Vec<String> = ctx.dims_d.iter().map(|d| d.to_string()).collect();
            kv(out, "dim D", list(&dims))?;
            kv(out, "decomposition", two_row_decomposition(n, m, p)?)?;
            kv(out, "p-part", two_row_ediv(n, m, p)?)?;
        }
        Formula::Hook { n, l, prime: p } => {
            let p = p.map(prime).transpose()?;
            let f = hook_forms(n, l, p)?;
            kv(out, "shape", Partition::hook(n, l)?)?;
            kv(out, "group", &f.group)?;
            kv(out, "order", &f.order)?;
            if let Some(layers) = &f.layers {
                kv(out, "layers", layers)?;
            }
        }
        Formula::TwoColumn { n } => {
            let (group, bases) = two_column_22_structure(n)?;
            let lambda = Partition::two_column(n, 2)?;
            kv(out, "shape", &lambda)?;
            kv(out, "group", &group)?;
            let det = brute(&lambda)?.det.clone();
            match lemfund_verify(&bases.x, &bases.y, &det) {
                Ok(chain) => {
                    let ok = chain.group().is_isomorphic(&group);
                    kv(out, "bases", format!("trigonal pair of size {} verified", bases.x.len()))?;
                    kv(out, "chain", &chain)?;
                    if !ok {
                        kv(out, "result", "chain from bases differs from the closed form")?;
                        return Ok(EXIT_MISMATCH);
                    }
                }
                Err(e) => {
                    kv(out, "bases", format!("not verified: {e}"))?;
                    return Ok(EXIT_MISMATCH);
                }
            }
        }
        Formula::LargePrime { partition: text, prime: p } => {
            let lambda = partition(&text)?;
            let r = large_prime_analyze(&lambda, prime(p)?)?;
            kv(out, "partition", &r.lambda)?;
            kv(out, "prime", r.p)?;
            kv(out, "case", format!("{:?}", r.case).to_lowercase())?;
            kv(out, "first-row hooks", list(&r.first_row_hooks))?;
            if let (Some(t), Some(s), Some(h), Some(shift)) = (r.t, r.s, r.h_t, &r.shift) {
                kv(out, "t", t)?;
                kv(out, "s", s)?;
                kv(out, "h_t", h)?;
                kv(out, "shift", shift)?;
                let strips: Vec<String> = r.strips.iter().map(|x| format!("({x})")).collect();
                kv(out, "strips", strips.join(" "))?;
                kv(out, "layer", r.layer)?;
                kv(out, "dim", &r.dim_shift)?;
            }
            kv(out, "p-part", &r.p_part)?;
        }
        Formula::SchaperFamily { family, n, prime: p } => {
            let f: SchaperFamily = family.parse()?;
            let p = prime(p)?;
            kv(out, "partition", f.head(n)?)?;
            kv(out, "prime", p)?;
            let sum = schaper_family(f, n, p)?;
            kv(out, "sum", &sum)?;
            kv(out, "weighted dim", sum.weighted_specht_dimension())?;
        }
    }
    Ok(EXIT_OK)
}

fn print_suite(r: &SuiteReport, out: &mut dyn Write) -> io::Result<()> {
    let status = if r.passed() { "ok" } else { "FAILED" };
    writeln!(
        out,
        "{:<13}max-n {:<4}{:>6} cases {:>4} mismatches {:>8.2}s  {status}",
        r.name,
        r.max_n,
        r.cases,
        r.failures.len(),
        r.elapsed.as_secs_f64()
    )?;
    for f in &r.failures {
        writeln!(out, "  mismatch: {f}")?;
    }
    for note in &r.notes {
        writeln!(out, "  note: {note}")?;
    }
    Ok(())
}

fn run_verify(suite: &str, max_n: Option<usize>, include_reference: bool, out: &mut dyn Write) -> Outcome {
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let mut ok = true;
    for name in names {
        let report = verify::run_suite(name, max_n, include_reference).ok_or_else(|| {
            CliError::Usage(format!("unknown suite {name:?}; expected one of {} or all", SUITES.join(", ")))
        })?;
        print_suite(&report, out)?;
        ok &= report.passed();
    }
    Ok(if ok { EXIT_OK } else { EXIT_MISMATCH })
}
