//! The fixed parameter grid: every class-size expression whose case
//! constraints admit the parameters, every `(r, s)` replay for GL and GU,
//! brute-force order checks, and cross-checks against catalog groups.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::classsize::{class_size_clas, class_size_sl_case, class_size_su_case, ClasCase, ClassSizeExpression};
use super::classsize::{SlCase, SuCase};
use super::exceptional::{check_row, table_rows, RowCheck};
use super::verify::{verify_section2_divisibility, Section2Report};
use super::{ord_mod, ord_mod_neg, qm1, Family};
use crate::catalog::lookup;
use crate::classes::class_table;
use crate::error::{Error, Result};
use crate::numtheory::{is_prime, p_part_big};

pub const GRID_SCHEMA: &str = "hallmark-lie-grid/1";

pub const SHIPPED_MANIFEST: &str = include_str!("../../data/lie_grid.json");

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CrossCheckSpec {
    pub group: String,
    pub n: u32,
    pub q: u64,
    pub r: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Manifest {
    pub schema: String,
    pub q: Vec<u64>,
    pub max_rank: u32,
    pub max_prime: u64,
    pub verify_families: Vec<Family>,
    #[serde(default)]
    pub cross_checks: Vec<CrossCheckSpec>,
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Manifest> {
        let m: Manifest = serde_json::from_str(text).map_err(|e| Error::Malformed(format!("grid manifest: {e}")))?;
        if m.schema != GRID_SCHEMA {
            return Err(Error::Malformed(format!("grid manifest schema `{}`", m.schema)));
        }
        Ok(m)
    }

    pub fn shipped() -> Manifest {
        Manifest::parse(SHIPPED_MANIFEST).expect("shipped manifest parses")
    }

    fn odd_primes(&self) -> Vec<u64> {
        (3..=self.max_prime).filter(|&p| is_prime(p)).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheck {
    pub group: String,
    pub n: u32,
    pub q: u64,
    pub r: u64,
    pub element_order: u64,
    pub formula: String,
    pub group_class_sizes: Vec<u64>,
    pub agrees: bool,
}

/// Compares the Singer-type class size with the sizes of the classes of
/// elements of the same order in a permutation copy of the group.
pub fn cross_check(spec: &CrossCheckSpec) -> Result<CrossCheck> {
    let e = class_size_sl_case(spec.n, spec.q, spec.r, SlCase::A)?;
    let order_big = p_part_big(&qm1(spec.q, e.kappa), spec.r);
    let element_order: u64 = u64::try_from(&order_big).map_err(|_| Error::capacity("element order", &order_big, u64::MAX))?;
    let g = lookup(&spec.group)?;
    let t = class_table(&g)?;
    let sizes: Vec<u64> = t
        .classes()
        .iter()
        .filter(|c| c.element_order == element_order)
        .map(|c| c.size)
        .collect();
    let agrees = !sizes.is_empty() && sizes.iter().all(|&s| BigUint::from(s) == e.value);
    Ok(CrossCheck {
        group: spec.group.clone(),
        n: spec.n,
        q: spec.q,
        r: spec.r,
        element_order,
        formula: e.value.to_string(),
        group_class_sizes: sizes,
        agrees,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GridReport {
    pub expressions_checked: usize,
    /// Evaluated expressions per case tag.
    pub cases: BTreeMap<&'static str, usize>,
    pub expression_failures: Vec<ClassSizeExpression>,
    pub replays: usize,
    pub replays_vacuous: usize,
    pub hall_predicted: usize,
    pub inconsistent: Vec<Section2Report>,
    pub order_checks: usize,
    pub order_failures: Vec<(u64, u64)>,
    pub exceptional: Vec<RowCheck>,
    pub cross_checks: Vec<CrossCheck>,
    pub passed: bool,
}

fn brute_order(r: u64, a: u64) -> u64 {
    let mut x = a % r;
    let mut k = 1;
    while x != 1 {
        x = x * (a % r) % r;
        k += 1;
    }
    k
}

fn expressions_for(q: u64, n: u32, r: u64) -> Vec<ClassSizeExpression> {
    let mut out = Vec::new();
    for case in [SlCase::A, SlCase::B, SlCase::BDimension] {
        out.extend(class_size_sl_case(n, q, r, case).ok());
    }
    for case in [SuCase::A1, SuCase::A2, SuCase::A2Dimension, SuCase::B] {
        out.extend(class_size_su_case(n, q, r, case).ok());
    }
    for family in [Family::Sp, Family::SOodd, Family::SOplus, Family::SOminus] {
        for case in [ClasCase::A2, ClasCase::A3, ClasCase::B2, ClasCase::B3, ClasCase::B4] {
            out.extend(class_size_clas(family, n, q, r, case).ok());
        }
    }
    out
}

pub fn run_grid(m: &Manifest) -> Result<GridReport> {
    let primes = m.odd_primes();
    let mut points = Vec::new();
    for &q in &m.q {
        for n in 1..=m.max_rank {
            points.extend(primes.iter().filter(|&&r| q % r != 0).map(|&r| (q, n, r)));
        }
    }
    let exprs: Vec<ClassSizeExpression> = points
        .par_iter()
        .flat_map_iter(|&(q, n, r)| expressions_for(q, n, r))
        .collect();
    let mut cases = BTreeMap::new();
    for e in &exprs {
        *cases.entry(e.case).or_insert(0) += 1;
    }
    let expression_failures: Vec<ClassSizeExpression> = exprs.iter().filter(|e| !e.holds()).cloned().collect();

    let mut replay_points = Vec::new();
    for &family in &m.verify_families {
        for &q in &m.q {
            for n in 1..=m.max_rank {
                for (i, &r) in primes.iter().enumerate() {
                    for &s in &primes[i + 1..] {
                        if q % r != 0 && q % s != 0 {
                            replay_points.push((family, n, q, r, s));
                        }
                    }
                }
            }
        }
    }
    let replays: Vec<Section2Report> = replay_points
        .par_iter()
        .map(|&(f, n, q, r, s)| verify_section2_divisibility(f, n, q, r, s))
        .collect::<Result<_>>()?;

    let mut order_failures = Vec::new();
    let mut order_checks = 0;
    for &q in &m.q {
        for &r in primes.iter().chain(std::iter::once(&2)) {
            if q % r == 0 {
                continue;
            }
            order_checks += 2;
            if ord_mod(r, q)? != brute_order(r, q) || ord_mod_neg(r, q)? != brute_order(r, r - q % r) {
                order_failures.push((r, q));
            }
        }
    }

    let exceptional: Vec<RowCheck> = table_rows().iter().map(|row| check_row(row, &m.q)).collect();
    let cross_checks = m.cross_checks.iter().map(cross_check).collect::<Result<Vec<_>>>()?;

    let inconsistent: Vec<Section2Report> = replays.iter().filter(|r| !r.consistent).cloned().collect();
    let passed = expression_failures.is_empty()
        && inconsistent.is_empty()
        && order_failures.is_empty()
        && exceptional.iter().all(|c| c.tori_noncyclic_nonmaximal && c.centralizers_divide)
        && cross_checks.iter().all(|c| c.agrees);
    Ok(GridReport {
        expressions_checked: exprs.len(),
        cases,
        expression_failures,
        replays: replays.len(),
        replays_vacuous: replays.iter().filter(|r| r.vacuous).count(),
        hall_predicted: replays.iter().filter(|r| r.hall_predicted).count(),
        inconsistent,
        order_checks,
        order_failures,
        exceptional,
        cross_checks,
        passed,
    })
}
