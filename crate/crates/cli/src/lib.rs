//! Frontend plumbing for the `hallmark` binary: group and table sources,
//! the versioned JSON report, the verification battery, and exit codes.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use hallmark_core::catalog::{CatalogEntry, Tag, EXTENDED_NAMES};
use hallmark_core::chartab::{self, CharacterTable};
use hallmark_core::criteria::{self, Agreement, BlockDegrees, TheoremReport};
use hallmark_core::error::Error;
use hallmark_core::group::{element_cap, PermutationGroup};
use hallmark_core::groupfile::GroupFile;
use hallmark_core::numtheory::{is_prime, prime_divisors_big};
use hallmark_core::structure::is_solvable;
use hallmark_core::subgroups::is_simple;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

pub const REPORT_SCHEMA: &str = "hallmark-report/1";

/// Groups up to this order get every `π` with `|π| <= 3` in the battery.
pub const SUITE_PI_ORDER_LIMIT: u64 = 100_000;

pub mod exit {
    pub const AGREE: i32 = 0;
    pub const DISAGREE: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const CAPACITY: i32 = 3;
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Capacity(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Capacity(_) => exit::CAPACITY,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Capacity(m) => write!(f, "capacity: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_capacity() {
            CliError::Capacity(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// A resolved `--group` argument.
pub struct GroupInput {
    pub label: String,
    /// Catalog entry, when the source was `catalog:NAME`.
    pub entry: Option<CatalogEntry>,
    pub group: PermutationGroup,
}

impl GroupInput {
    pub fn is_simple(&self) -> CliResult<bool> {
        match &self.entry {
            Some(e) => Ok(e.has_tag(Tag::Simple)),
            None => Ok(is_simple(&self.group)?),
        }
    }

    pub fn is_solvable(&self) -> bool {
        match &self.entry {
            Some(e) => e.has_tag(Tag::Solvable),
            None => is_solvable(&self.group),
        }
    }

    pub fn primes(&self) -> Vec<u64> {
        prime_divisors_big(self.group.order())
    }
}

/// `catalog:NAME` or a path to a group generator file. Extended catalog
/// entries are refused (capacity) unless `extended` is set.
pub fn resolve_group(src: &str, extended: bool) -> CliResult<GroupInput> {
    if let Some(name) = src.strip_prefix("catalog:") {
        if EXTENDED_NAMES.contains(&name) && !extended {
            return Err(CliError::Capacity(format!(
                "`{name}` is an extended catalog entry; rerun with --extended"
            )));
        }
        let entry = CatalogEntry::new(name)?;
        let group = entry.build()?;
        return Ok(GroupInput {
            label: src.to_string(),
            entry: Some(entry),
            group,
        });
    }
    let text = std::fs::read_to_string(src).map_err(|e| CliError::Usage(format!("reading {src}: {e}")))?;
    let file = GroupFile::parse(&text)?;
    Ok(GroupInput {
        label: src.to_string(),
        entry: None,
        group: file.build()?,
    })
}

/// A bundled table name, or a path to a table file.
pub fn resolve_table(src: &str) -> CliResult<(CharacterTable, Option<&'static str>)> {
    if Path::new(src).is_file() {
        let text = std::fs::read_to_string(src).map_err(|e| CliError::Usage(format!("reading {src}: {e}")))?;
        return Ok((CharacterTable::parse(&text)?, None));
    }
    let t = chartab::shipped_table(src)?;
    Ok((t, chartab::shipped_group(src)))
}

/// Parses `3,5,7`. Every entry must be prime.
pub fn parse_primes(s: &str) -> CliResult<Vec<u64>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let p: u64 = part
            .parse()
            .map_err(|_| CliError::Usage(format!("`{part}` is not a number")))?;
        if !is_prime(p) {
            return Err(CliError::Usage(format!("{p} is not prime")));
        }
        out.push(p);
    }
    out.sort_unstable();
    out.dedup();
    if out.is_empty() {
        return Err(CliError::Usage("empty prime list".into()));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Theorem {
    A,
    B,
    C,
    #[serde(rename = "t4.1")]
    T41,
    #[serde(rename = "t4.2")]
    T42,
    #[serde(rename = "t4.3")]
    T43,
    #[serde(rename = "simple2")]
    Simple2,
}

impl std::str::FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "A" | "a" => Theorem::A,
            "B" | "b" => Theorem::B,
            "C" | "c" => Theorem::C,
            "t4.1" => Theorem::T41,
            "t4.2" => Theorem::T42,
            "t4.3" => Theorem::T43,
            "simple2" => Theorem::Simple2,
            _ => return Err(format!("unknown theorem `{s}` (A, B, C, t4.1, t4.2, t4.3, simple2)")),
        })
    }
}

/// Every non-empty subset of `primes` with at most `max` elements, in
/// size-then-lexicographic order.
pub fn small_subsets(primes: &[u64], max: usize) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = (1u32..(1 << primes.len()))
        .filter(|m| m.count_ones() as usize <= max)
        .map(|mask| {
            primes
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect()
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

fn ordered_pairs(primes: &[u64]) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for &p in primes {
        for &q in primes {
            if p != q {
                out.push((p, q));
            }
        }
    }
    out
}

/// Principal-block degrees for the primes 3 and 5, when a bundled table
/// for the catalog group exists.
pub fn bundled_blocks(input: &GroupInput) -> CliResult<Option<BlockDegrees>> {
    let Some(entry) = &input.entry else { return Ok(None) };
    let Some(name) = chartab::shipped_names().find(|n| chartab::shipped_group(n) == Some(entry.name.as_str())) else {
        return Ok(None);
    };
    let t = chartab::shipped_table(name)?;
    let divisors = prime_divisors_big(&t.order);
    let primes: Vec<u64> = [3, 5].into_iter().filter(|p| divisors.contains(p)).collect();
    Ok(Some(chartab::principal_block_degrees(&t, &primes)?))
}

/// One theorem on one group, for every applicable prime set. `pi` narrows
/// the prime sets; without it all primes dividing `|G|` are used.
pub fn run_theorem(
    input: &GroupInput,
    theorem: Theorem,
    pi: Option<&[u64]>,
    blocks: Option<&BlockDegrees>,
) -> CliResult<Vec<TheoremReport>> {
    let g = &input.group;
    let divisors = input.primes();
    let primes: Vec<u64> = match pi {
        Some(pi) => pi.to_vec(),
        None => divisors.clone(),
    };
    let mut out = Vec::new();
    match theorem {
        Theorem::A => {
            if pi.is_some() && primes.len() != 2 {
                return Err(CliError::Usage("theorem A takes exactly two primes".into()));
            }
            for (i, &p) in primes.iter().enumerate() {
                for &q in &primes[i + 1..] {
                    out.push(criteria::verify_theorem_a(g, p, q)?);
                }
            }
        }
        Theorem::B | Theorem::C => {
            let sets = match pi {
                Some(pi) => vec![pi.to_vec()],
                None => small_subsets(&divisors, 3).into_iter().filter(|s| s.len() >= 2).collect(),
            };
            for s in sets {
                out.push(match theorem {
                    Theorem::B => criteria::verify_theorem_b(g, &s)?,
                    _ => criteria::verify_theorem_c(g, &s, blocks)?,
                });
            }
        }
        Theorem::T41 | Theorem::T42 => {
            if pi.is_some() && primes.len() != 2 {
                return Err(CliError::Usage(format!("{theorem:?} takes exactly two primes")));
            }
            for (p, q) in ordered_pairs(&primes) {
                out.push(match theorem {
                    Theorem::T41 => criteria::verify_p_solvable_normalization(g, p, q)?,
                    _ => criteria::verify_op_prime_characterization(g, p, q)?,
                });
            }
        }
        Theorem::T43 => {
            for &q in primes.iter().filter(|&&q| q != 2) {
                out.push(criteria::verify_q_solvability_from_odd_classes(g, q)?);
            }
        }
        Theorem::Simple2 => {
            for &r in primes.iter().filter(|&&r| r != 2) {
                out.push(criteria::verify_even_class_of_r_elements(g, r)?);
            }
        }
    }
    Ok(out)
}

/// Exit code for a batch of reports: any disagreement wins, then any
/// untested check.
pub fn exit_code(reports: &[&TheoremReport]) -> i32 {
    if reports.iter().any(|r| r.agreement == Agreement::Disagree) {
        exit::DISAGREE
    } else if reports.iter().any(|r| r.agreement == Agreement::Untested) {
        exit::CAPACITY
    } else {
        exit::AGREE
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub group: String,
    #[serde(flatten)]
    pub report: TheoremReport,
}

impl CheckResult {
    pub fn key(&self) -> String {
        format!("{}/{}/{:?}", self.group, self.report.theorem, self.report.primes)
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub checks: usize,
    pub agree: usize,
    pub disagree: usize,
    pub untested: usize,
    pub inapplicable: usize,
}

impl Summary {
    pub fn of<'a>(reports: impl IntoIterator<Item = &'a TheoremReport>) -> Summary {
        let mut s = Summary::default();
        for r in reports {
            s.checks += 1;
            match r.agreement {
                Agreement::Agree => s.agree += 1,
                Agreement::Disagree => s.disagree += 1,
                Agreement::Untested => s.untested += 1,
                Agreement::Inapplicable => s.inapplicable += 1,
            }
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Caps {
    pub elements: u64,
    pub extended: bool,
}

/// Wall-clock timings in milliseconds, keyed by check.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Timings {
    pub total_ms: u64,
    pub checks: BTreeMap<String, u64>,
}

/// The versioned report written to stdout by every subcommand.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub caps: Caps,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<Summary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl RunReport {
    pub fn new(command: &str, extended: bool) -> Self {
        RunReport {
            schema: REPORT_SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            inputs: BTreeMap::new(),
            caps: Caps {
                elements: element_cap(),
                extended,
            },
            results: Value::Null,
            summary: None,
            timings: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl Serialize) -> Self {
        self.inputs
            .insert(key.to_string(), serde_json::to_value(value).expect("serializable input"));
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("serializable result")
}

/// Runs `f` and returns its value with the elapsed milliseconds.
pub fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed().as_millis() as u64)
}

/// The battery run by `suite` on one catalog group.
pub fn battery_for(input: &GroupInput) -> CliResult<Vec<TheoremReport>> {
    let primes = input.primes();
    let order = input.group.order_u64().unwrap_or(u64::MAX);
    let blocks = bundled_blocks(input)?;
    let mut out = run_theorem(input, Theorem::A, None, None)?;
    if order <= SUITE_PI_ORDER_LIMIT {
        for s in small_subsets(&primes, 3).into_iter().filter(|s| s.len() >= 2) {
            out.push(criteria::verify_theorem_b(&input.group, &s)?);
            if blocks.is_some() {
                out.push(criteria::verify_theorem_c(&input.group, &s, blocks.as_ref())?);
            }
        }
    }
    if input.is_solvable() {
        out.extend(run_theorem(input, Theorem::T41, None, None)?);
        out.extend(run_theorem(input, Theorem::T42, None, None)?);
    }
    out.extend(run_theorem(input, Theorem::T43, None, None)?);
    if input.is_simple()? {
        out.extend(run_theorem(input, Theorem::Simple2, None, None)?);
    }
    Ok(out)
}

/// Runs [`battery_for`] over the given catalog names in parallel. Results
/// come back sorted by group name then check.
pub fn run_suite(names: &[&str], extended: bool) -> CliResult<(Vec<CheckResult>, Timings)> {
    let (per_group, total_ms) = timed(|| {
        names
            .par_iter()
            .map(|name| {
                let src = format!("catalog:{name}");
                let (res, ms) = timed(|| -> CliResult<Vec<TheoremReport>> {
                    let input = resolve_group(&src, extended)?;
                    battery_for(&input)
                });
                res.map(|reports| (src, reports, ms))
            })
            .collect::<CliResult<Vec<_>>>()
    });
    let mut results = Vec::new();
    let mut timings = Timings {
        total_ms,
        checks: BTreeMap::new(),
    };
    for (src, reports, ms) in per_group? {
        timings.checks.insert(src.clone(), ms);
        results.extend(reports.into_iter().map(|report| CheckResult {
            group: src.clone(),
            report,
        }));
    }
    results.sort_by_key(CheckResult::key);
    Ok((results, timings))
}
