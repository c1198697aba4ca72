//! Acceptance battery. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any gating criterion fails. The extended J1 criterion runs
//! only with `HALLMARK_ACCEPTANCE_EXTENDED=1`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hallmark_core::catalog::{default_catalog, CatalogEntry, Tag};
use hallmark_core::chartab::{
    block_partition, principal_block_degrees, shipped_group, shipped_names, shipped_table, table_criterion_b,
    table_criterion_c,
};
use hallmark_core::classes::class_table;
use hallmark_core::criteria::{
    cross_divisibility_criterion, one_sided, verify_even_class_of_r_elements, verify_op_prime_characterization,
    verify_p_solvable_normalization, verify_q_solvability_from_odd_classes, verify_theorem_a, verify_theorem_b,
    verify_theorem_c, Agreement, TheoremReport,
};
use hallmark_core::lieorders::grid::{cross_check, run_grid, CrossCheckSpec, Manifest};
use hallmark_core::lieorders::{verify_section2_divisibility, Family};
use hallmark_core::numtheory::{p_part_big, prime_divisors_big};
use hallmark_core::subgroups::{exists_commuting_sylow_pair, hall_subgroup, HallOutcome, HallStructure};
use num_bigint::BigUint;
use num_traits::Zero;

const THEOREM_A_BUDGET: Duration = Duration::from_secs(600);
const GRID_BUDGET: Duration = Duration::from_secs(60);
const PI_ORDER_LIMIT: u64 = 100_000;

type Outcome = Result<String, String>;

fn subsets(primes: &[u64], max: usize) -> Vec<Vec<u64>> {
    (1u32..(1 << primes.len()))
        .filter(|m| m.count_ones() as usize <= max)
        .map(|mask| {
            primes
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect()
        })
        .collect()
}

fn primes_of(e: &CatalogEntry) -> Vec<u64> {
    prime_divisors_big(&e.expected_order)
}

/// Counts agreements; any disagreement or untested report is an error.
fn tally(label: &str, reports: &[TheoremReport]) -> Result<usize, String> {
    let mut agree = 0;
    for r in reports {
        match r.agreement {
            Agreement::Agree => agree += 1,
            Agreement::Inapplicable => {}
            other => return Err(format!("{label} {} {:?}: {other:?} {:?}", r.theorem, r.primes, r.note)),
        }
    }
    Ok(agree)
}

fn theorem_a_suite() -> Outcome {
    let start = Instant::now();
    let mut checks = 0;
    for e in default_catalog() {
        let g = e.build().map_err(|x| x.to_string())?;
        let primes = primes_of(&e);
        let mut reports = Vec::new();
        for (i, &p) in primes.iter().enumerate() {
            for &q in &primes[i + 1..] {
                reports.push(verify_theorem_a(&g, p, q).map_err(|x| x.to_string())?);
            }
        }
        checks += tally(&e.name, &reports)?;
    }
    let elapsed = start.elapsed();
    if elapsed > THEOREM_A_BUDGET {
        return Err(format!("{checks} pairs agree but took {elapsed:?}"));
    }
    Ok(format!("{checks} prime pairs agree in {:.1?}", elapsed))
}

fn semi_affine_profile() -> Outcome {
    let g = CatalogEntry::new("semiaffine_2_3").and_then(|e| e.build()).map_err(|x| x.to_string())?;
    let t = class_table(&g).map_err(|x| x.to_string())?;
    let sizes = |p: u64| -> Vec<u64> { t.p_elements(p).into_iter().map(|k| t.classes()[k].size).collect() };
    let (two, three) = (sizes(2), sizes(3));
    if two.is_empty() || two.iter().any(|&s| s != 7) {
        return Err(format!("2-element class sizes {two:?}, want all 7"));
    }
    if three.is_empty() || three.iter().any(|&s| s != 28) {
        return Err(format!("3-element class sizes {three:?}, want all 28"));
    }
    let classes = t.summaries();
    if !one_sided(&classes, 2, 3).holds() || one_sided(&classes, 3, 2).holds() {
        return Err("one-sided profile is not (holds, fails)".into());
    }
    let crit = cross_divisibility_criterion(&t, 2, 3).map_err(|x| x.to_string())?;
    let pair = exists_commuting_sylow_pair(&g, 2, 3).map_err(|x| x.to_string())?;
    if crit.holds() || pair.found {
        return Err("expected no commuting Sylow {2,3} pair and a failing criterion".into());
    }
    Ok(format!("2-classes {two:?}, 3-classes {three:?}, no commuting pair"))
}

fn psl2_31_hall() -> Outcome {
    let g = CatalogEntry::new("psl2_31").and_then(|e| e.build()).map_err(|x| x.to_string())?;
    let rep = verify_theorem_a(&g, 3, 5).map_err(|x| x.to_string())?;
    if !rep.agree() || !rep.criterion.as_ref().is_some_and(|c| c.holds()) {
        return Err(format!("theorem A report {:?}", rep.agreement));
    }
    let h = match hall_subgroup(&g, &[3, 5]).map_err(|x| x.to_string())? {
        HallOutcome::Found { witness, .. } => witness,
        other => return Err(format!("no Hall subgroup: {other:?}")),
    };
    if h.subgroup.order_u64() != 15 || h.structure != HallStructure::Abelian {
        return Err(format!("witness of order {} ({:?})", h.subgroup.order_u64(), h.structure));
    }
    let torus = verify_section2_divisibility(Family::GL, 2, 31, 3, 5).map_err(|x| x.to_string())?;
    if !(torus.hall_predicted && torus.torus_is_hall == Some(true) && torus.consistent) {
        return Err("torus of GL_2(31) does not carry the Hall {3,5}-subgroup".into());
    }
    Ok("criterion holds, abelian Hall witness of order 15, torus chain consistent".into())
}

fn simple_even_classes() -> Outcome {
    let mut checks = 0;
    let mut groups = 0;
    for e in default_catalog().into_iter().filter(|e| e.has_tag(Tag::Simple)) {
        let g = e.build().map_err(|x| x.to_string())?;
        let mut reports = Vec::new();
        for r in primes_of(&e).into_iter().filter(|&r| r != 2) {
            let rep = verify_even_class_of_r_elements(&g, r).map_err(|x| x.to_string())?;
            if !rep.criterion.as_ref().is_some_and(|c| c.holds()) {
                return Err(format!("{} not recognized as simple for r = {r}", e.name));
            }
            reports.push(rep);
        }
        checks += tally(&e.name, &reports)?;
        groups += 1;
    }
    Ok(format!("{checks} (group, r) checks over {groups} simple groups"))
}

fn theorem_b_suite() -> Outcome {
    let mut checks = 0;
    for e in default_catalog() {
        if e.expected_order > BigUint::from(PI_ORDER_LIMIT) {
            continue;
        }
        let g = e.build().map_err(|x| x.to_string())?;
        let reports = subsets(&primes_of(&e), 3)
            .into_iter()
            .map(|pi| verify_theorem_b(&g, &pi))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|x| x.to_string())?;
        checks += tally(&e.name, &reports)?;
    }
    let a5 = CatalogEntry::new("alt_5").and_then(|e| e.build()).map_err(|x| x.to_string())?;
    if !matches!(hall_subgroup(&a5, &[2, 5]), Ok(HallOutcome::ProvedAbsent)) {
        return Err("A5 {2,5}: absence not proved".into());
    }
    let rep = verify_theorem_b(&a5, &[2, 5]).map_err(|x| x.to_string())?;
    if rep.criterion.as_ref().is_some_and(|c| c.holds()) {
        return Err("A5 {2,5}: criterion holds".into());
    }
    Ok(format!("{checks} (group, π) checks agree; A5 {{2,5}} proved absent"))
}

fn theorem_c_suite() -> Outcome {
    let mut checks = 0;
    for name in shipped_names() {
        let t = shipped_table(name).map_err(|x| x.to_string())?;
        let g = CatalogEntry::new(shipped_group(name).unwrap())
            .and_then(|e| e.build())
            .map_err(|x| x.to_string())?;
        let primes = prime_divisors_big(&t.order);
        let blocks = principal_block_degrees(&t, &[3, 5]).map_err(|x| x.to_string())?;
        for pi in subsets(&primes, primes.len()) {
            let tc = table_criterion_c(&t, &pi).map_err(|x| x.to_string())?;
            let rep = verify_theorem_c(&g, &pi, Some(&blocks)).map_err(|x| x.to_string())?;
            let oracle = rep.oracle.as_ref().ok_or("no oracle")?;
            if !rep.agree() || tc.status != oracle.status {
                return Err(format!("{name} {pi:?}: table {:?}, oracle {:?}", tc.status, oracle.status));
            }
            checks += 1;
        }
        // defect zero: χ(1) carries the full p-part of |G|, so χ is alone
        for &p in &primes {
            let part = block_partition(&t, p).map_err(|x| x.to_string())?;
            let full = p_part_big(&t.order, p);
            for chi in 0..t.characters.len() {
                let defect_zero = (t.degree(chi) % &full).is_zero();
                let alone = part.blocks[part.block_of(chi).unwrap()].len() == 1;
                if defect_zero && !alone {
                    return Err(format!("{name} p = {p}: defect-zero character {chi} is not alone"));
                }
            }
        }
        // verdicts are stable under Galois conjugation of the table
        for k in [7i64, 11, 13, 29] {
            if num_integer::gcd(k as u64, t.exponent) != 1 {
                continue;
            }
            let c = t.galois_conjugate(k);
            for pi in subsets(&primes, 3) {
                let same_b = table_criterion_b(&c, &pi).status == table_criterion_b(&t, &pi).status;
                let same_c = table_criterion_c(&c, &pi).map(|v| v.status) == table_criterion_c(&t, &pi).map(|v| v.status);
                if !(same_b && same_c) {
                    return Err(format!("{name} {pi:?}: verdict changed under σ_{k}"));
                }
            }
        }
    }
    let a5 = shipped_table("a5").map_err(|x| x.to_string())?;
    let part = block_partition(&a5, 5).map_err(|x| x.to_string())?;
    let mut shape: Vec<Vec<String>> = part
        .blocks
        .iter()
        .map(|b| {
            let mut d: Vec<String> = b.iter().map(|&c| a5.degree(c).to_string()).collect();
            d.sort();
            d
        })
        .collect();
    shape.sort();
    if shape != vec![vec!["1", "3", "3", "4"], vec!["5"]] {
        return Err(format!("A5 5-blocks {shape:?}"));
    }
    Ok(format!("{checks} (table, π) checks agree; A5 5-blocks {{1,3,3,4 | 5}}; defect zero and Galois checks pass"))
}

fn section_four_suite() -> Outcome {
    let (mut solvable_checks, mut odd_checks) = (0, 0);
    for e in default_catalog() {
        let g = e.build().map_err(|x| x.to_string())?;
        let primes = primes_of(&e);
        let mut reports = Vec::new();
        if e.has_tag(Tag::Solvable) {
            for &p in &primes {
                for &q in primes.iter().filter(|&&q| q != p) {
                    reports.push(verify_p_solvable_normalization(&g, p, q).map_err(|x| x.to_string())?);
                    reports.push(verify_op_prime_characterization(&g, p, q).map_err(|x| x.to_string())?);
                }
            }
            solvable_checks += tally(&e.name, &reports)?;
            reports.clear();
        }
        for &q in primes.iter().filter(|&&q| q != 2) {
            reports.push(verify_q_solvability_from_odd_classes(&g, q).map_err(|x| x.to_string())?);
        }
        odd_checks += tally(&e.name, &reports)?;
    }
    Ok(format!(
        "{solvable_checks} normalization / O_p' checks on solvable groups, {odd_checks} odd-class checks"
    ))
}

fn lie_grid() -> Outcome {
    let start = Instant::now();
    let report = run_grid(&Manifest::shipped()).map_err(|x| x.to_string())?;
    let elapsed = start.elapsed();
    if !report.passed {
        return Err(format!(
            "{} expression failures, {} inconsistent replays",
            report.expression_failures.len(),
            report.inconsistent.len()
        ));
    }
    let c = cross_check(&CrossCheckSpec {
        group: "psl3_2".into(),
        n: 3,
        q: 2,
        r: 7,
    })
    .map_err(|x| x.to_string())?;
    if c.formula != "24" || c.group_class_sizes.iter().any(|&s| s != 24) || c.group_class_sizes.is_empty() {
        return Err(format!("PSL(3,2) order-7 classes {:?} vs formula {}", c.group_class_sizes, c.formula));
    }
    if elapsed > GRID_BUDGET {
        return Err(format!("grid took {elapsed:?}"));
    }
    Ok(format!(
        "{} expressions, {} replays; PSL(3,2) order-7 class size 24 = formula; {:.1?}",
        report.expressions_checked, report.replays, elapsed
    ))
}

fn j1_extended() -> Outcome {
    let start = Instant::now();
    let g = CatalogEntry::new("j1").and_then(|e| e.build()).map_err(|x| x.to_string())?;
    let rep = verify_theorem_a(&g, 3, 5).map_err(|x| x.to_string())?;
    if !rep.agree() || !rep.criterion.as_ref().is_some_and(|c| c.holds()) {
        return Err(format!("theorem A report {:?}", rep.agreement));
    }
    match hall_subgroup(&g, &[3, 5]).map_err(|x| x.to_string())? {
        HallOutcome::Found { witness, .. } if witness.subgroup.order_u64() == 15 => {}
        other => return Err(format!("no Hall subgroup of order 15: {other:?}")),
    }
    Ok(format!("criterion holds, Hall subgroup of order 15 found in {:.1?}", start.elapsed()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 theorem A equivalence over the default catalog", theorem_a_suite),
        ("2 semi-affine 2^3:7:3 one-sided profile", semi_affine_profile),
        ("3 PSL(2,31) abelian Hall {3,5}-subgroup", psl2_31_hall),
        ("4 simple groups have an even r-element class", simple_even_classes),
        ("5 theorem B equivalence for |π| <= 3", theorem_b_suite),
        ("6 theorem C on bundled tables", theorem_c_suite),
        ("7 solvability and normalization statements", section_four_suite),
        ("8 classical-group class-size grid", lie_grid),
    ];
    let mut failed = 0;
    for (label, f) in criteria {
        match f() {
            Ok(msg) => println!("ACCEPTANCE PASS {label}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("ACCEPTANCE FAIL {label}: {msg}");
            }
        }
    }
    let label = "9 J1 {3,5} (extended, non-gating)";
    if std::env::var("HALLMARK_ACCEPTANCE_EXTENDED").is_ok_and(|v| v == "1") {
        match j1_extended() {
            Ok(msg) => println!("ACCEPTANCE PASS {label}: {msg}"),
            Err(msg) => println!("ACCEPTANCE FAIL {label}: {msg}"),
        }
    } else {
        println!("ACCEPTANCE SKIP {label}: set HALLMARK_ACCEPTANCE_EXTENDED=1");
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
