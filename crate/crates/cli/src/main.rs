use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hallmark::*;
use hallmark_core::catalog::{default_catalog, extended_catalog, DEFAULT_NAMES, EXTENDED_NAMES};
use hallmark_core::chartab::{self, block_partition};
use hallmark_core::classes::class_table;
use hallmark_core::criteria::{self, Status};
use hallmark_core::lieorders::grid::{run_grid, Manifest};
use hallmark_core::lieorders::{verify_section2_divisibility, Family};
use hallmark_core::subgroups::{hall_subgroup, HallOutcome};
use serde_json::json;

#[derive(Parser)]
#[command(name = "hallmark", version, about = "Class-size and character-table criteria for Hall subgroups")]
struct Cli {
    /// Leave wall-clock timings out of the report.
    #[arg(long, global = true)]
    no_timings: bool,
    /// Allow extended catalog entries (J1).
    #[arg(long, global = true)]
    extended: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog.
    Catalog,
    /// Conjugacy classes of a group.
    Classes {
        #[arg(long)]
        group: String,
    },
    /// Search for a Hall π-subgroup.
    Hall {
        #[arg(long)]
        group: String,
        #[arg(long)]
        pi: String,
    },
    /// Criterion against oracle for one theorem.
    Check {
        #[arg(long)]
        theorem: Theorem,
        #[arg(long)]
        group: String,
        #[arg(long)]
        pi: Option<String>,
    },
    /// Table-only criterion B or C, against the group oracle when the
    /// table belongs to a catalog group.
    CtAnalyze {
        table: String,
        #[arg(long)]
        pi: String,
        #[arg(long, default_value = "C")]
        theorem: Theorem,
        /// Group for the oracle side when the table is a file.
        #[arg(long)]
        group: Option<String>,
    },
    /// p-block partition of a character table.
    CtBlocks {
        table: String,
        #[arg(short, long)]
        p: u64,
    },
    /// Class-size case analysis for SL_n(q) or SU_n(q).
    LieVerify {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        s: u64,
    },
    /// Run a parameter grid (the bundled one by default).
    LieGrid { manifest: Option<String> },
    /// Full verification battery over the catalog.
    Suite,
}

struct Output {
    report: RunReport,
    code: i32,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE as u8 } else { 0 });
        }
    };
    let (result, ms) = timed(|| run(&cli));
    match result {
        Ok(mut out) => {
            if !cli.no_timings {
                let t = out.report.timings.get_or_insert_with(Timings::default);
                t.total_ms = ms;
            } else {
                out.report.timings = None;
            }
            println!("{}", out.report.to_json());
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.code() as u8)
        }
    }
}

fn run(cli: &Cli) -> CliResult<Output> {
    let ext = cli.extended;
    match &cli.command {
        Command::Catalog => {
            let mut entries = default_catalog();
            if ext {
                entries.extend(extended_catalog());
            }
            let list: Vec<_> = entries
                .iter()
                .map(|e| {
                    json!({
                        "name": e.name,
                        "order": e.expected_order.to_string(),
                        "tags": e.tags.iter().map(|t| t.as_str()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let mut report = RunReport::new("catalog", ext);
            report.results = json!(list);
            Ok(Output { report, code: exit::AGREE })
        }
        Command::Classes { group } => {
            let input = resolve_group(group, ext)?;
            let t = class_table(&input.group)?;
            let mut report = RunReport::new("classes", ext).input("group", group);
            report.results = json!({
                "order": input.group.order().to_string(),
                "classes": to_value(t.classes()),
            });
            Ok(Output { report, code: exit::AGREE })
        }
        Command::Hall { group, pi } => {
            let pi = parse_primes(pi)?;
            let input = resolve_group(group, ext)?;
            let outcome = hall_subgroup(&input.group, &pi)?;
            let (value, code) = match &outcome {
                HallOutcome::Found { witness, strategy } => (
                    json!({
                        "outcome": "found",
                        "strategy": strategy,
                        "pi": witness.pi,
                        "order": witness.subgroup.order().to_string(),
                        "structure": witness.structure,
                        "generators": witness.subgroup.generators().iter().map(|g| g.cycle_notation()).collect::<Vec<_>>(),
                    }),
                    exit::AGREE,
                ),
                HallOutcome::ProvedAbsent => (json!({"outcome": "proved-absent"}), exit::AGREE),
                HallOutcome::NotFound { closures } => {
                    (json!({"outcome": "not-found", "closures": closures}), exit::CAPACITY)
                }
            };
            let mut report = RunReport::new("hall", ext).input("group", group).input("pi", &pi);
            report.results = value;
            Ok(Output { report, code })
        }
        Command::Check { theorem, group, pi } => {
            let pi = pi.as_deref().map(parse_primes).transpose()?;
            let input = resolve_group(group, ext)?;
            let blocks = if *theorem == Theorem::C {
                bundled_blocks(&input)?
            } else {
                None
            };
            let mut timings = Timings::default();
            let (reports, ms) = timed(|| run_theorem(&input, *theorem, pi.as_deref(), blocks.as_ref()));
            let reports = reports?;
            timings.checks.insert(format!("{theorem:?}"), ms);
            let refs: Vec<_> = reports.iter().collect();
            let code = exit_code(&refs);
            let results: Vec<CheckResult> = reports
                .into_iter()
                .map(|report| CheckResult {
                    group: input.label.clone(),
                    report,
                })
                .collect();
            let mut report = RunReport::new("check", ext)
                .input("theorem", theorem)
                .input("group", group)
                .input("pi", &pi);
            report.summary = Some(Summary::of(results.iter().map(|r| &r.report)));
            report.results = to_value(&results);
            report.timings = Some(timings);
            Ok(Output { report, code })
        }
        Command::CtAnalyze {
            table,
            pi,
            theorem,
            group,
        } => {
            let pi = parse_primes(pi)?;
            let (t, shipped) = resolve_table(table)?;
            let verdict = match theorem {
                Theorem::B => chartab::table_criterion_b(&t, &pi),
                Theorem::C => chartab::table_criterion_c(&t, &pi)?,
                _ => return Err(CliError::Usage("ct-analyze takes theorem B or C".into())),
            };
            let group_src = group.clone().or(shipped.map(|g| format!("catalog:{g}")));
            let mut code = if verdict.is_determined() { exit::AGREE } else { exit::CAPACITY };
            let mut value = json!({ "table": t.name, "criterion": verdict });
            if let Some(src) = &group_src {
                let input = resolve_group(src, ext)?;
                let blocks = chartab::principal_block_degrees(&t, &[3, 5])?;
                let rep = match theorem {
                    Theorem::B => criteria::verify_theorem_b(&input.group, &pi)?,
                    _ => criteria::verify_theorem_c(&input.group, &pi, Some(&blocks))?,
                };
                let oracle_status = rep.oracle.as_ref().map(|o| o.status);
                let agree = match oracle_status {
                    Some(Status::Undetermined) | None => None,
                    Some(s) => Some(s == verdict.status && rep.agree()),
                };
                code = match agree {
                    Some(true) => exit::AGREE,
                    Some(false) => exit::DISAGREE,
                    None => exit::CAPACITY,
                };
                value["oracle_group"] = json!(src);
                value["oracle"] = to_value(&rep.oracle);
                value["agree"] = json!(agree);
            }
            let mut report = RunReport::new("ct-analyze", ext)
                .input("table", table)
                .input("pi", &pi)
                .input("theorem", theorem);
            report.results = value;
            Ok(Output { report, code })
        }
        Command::CtBlocks { table, p } => {
            if !hallmark_core::numtheory::is_prime(*p) {
                return Err(CliError::Usage(format!("{p} is not prime")));
            }
            let (t, _) = resolve_table(table)?;
            let part = block_partition(&t, *p)?;
            let degrees: Vec<Vec<String>> = part
                .blocks
                .iter()
                .map(|b| b.iter().map(|&c| t.degree(c).to_string()).collect())
                .collect();
            let mut report = RunReport::new("ct-blocks", ext).input("table", table).input("p", p);
            report.results = json!({ "table": t.name, "partition": part, "degrees": degrees });
            Ok(Output { report, code: exit::AGREE })
        }
        Command::LieVerify { family, n, q, r, s } => {
            let rep = verify_section2_divisibility(*family, *n, *q, *r, *s)?;
            let code = if rep.consistent { exit::AGREE } else { exit::DISAGREE };
            let mut report = RunReport::new("lie-verify", ext)
                .input("family", family)
                .input("n", n)
                .input("q", q)
                .input("r", r)
                .input("s", s);
            report.results = to_value(&rep);
            Ok(Output { report, code })
        }
        Command::LieGrid { manifest } => {
            let m = match manifest {
                Some(path) => {
                    let text =
                        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("reading {path}: {e}")))?;
                    Manifest::parse(&text)?
                }
                None => Manifest::shipped(),
            };
            let (grid, ms) = timed(|| run_grid(&m));
            let grid = grid?;
            let code = if grid.passed { exit::AGREE } else { exit::DISAGREE };
            let mut report = RunReport::new("lie-grid", ext).input("manifest", manifest.as_deref().unwrap_or("bundled"));
            report.results = to_value(&grid);
            report.timings = Some(Timings {
                total_ms: 0,
                checks: BTreeMap::from([("grid".to_string(), ms)]),
            });
            Ok(Output { report, code })
        }
        Command::Suite => {
            let mut names: Vec<&str> = DEFAULT_NAMES.to_vec();
            if ext {
                names.extend(EXTENDED_NAMES);
            }
            let (results, timings) = run_suite(&names, ext)?;
            let refs: Vec<_> = results.iter().map(|r| &r.report).collect();
            let code = exit_code(&refs);
            let mut report = RunReport::new("suite", ext).input("groups", &names);
            report.summary = Some(Summary::of(refs.iter().copied()));
            report.results = to_value(&results);
            report.timings = Some(timings);
            Ok(Output { report, code })
        }
    }
}
