//! Exceptional groups with non-maximal, non-cyclic Sylow tori, kept as data.
//!
//! Only order bookkeeping is checked: each listed `d` has `Φ_d` occurring at
//! least twice but fewer than rank-many times in the generic order, and the
//! listed centralizer orders divide the group order.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{qm1, qp1, qpow};
use crate::numtheory::divisors;

/// A factor `q^e - 1` (`sign = 1`) or `q^e + 1` (`sign = -1`), raised to
/// `power` (negative for a quotient).
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Factor {
    pub e: u64,
    pub sign: i8,
    pub power: i32,
}

const fn m(e: u64) -> Factor {
    Factor { e, sign: 1, power: 1 }
}

const fn p(e: u64) -> Factor {
    Factor { e, sign: -1, power: 1 }
}

const fn inv_m(e: u64) -> Factor {
    Factor { e, sign: 1, power: -1 }
}

/// Generic order `q^N Π factors`.
#[derive(Clone, Debug, Serialize)]
pub struct GenericOrder {
    pub name: &'static str,
    pub q_power: u64,
    pub factors: Vec<Factor>,
}

impl GenericOrder {
    pub fn phi_multiplicities(&self) -> BTreeMap<u64, i32> {
        let mut out = BTreeMap::new();
        for f in &self.factors {
            let ds: Vec<u64> = if f.sign > 0 {
                divisors(f.e)
            } else {
                divisors(2 * f.e).into_iter().filter(|d| f.e % d != 0).collect()
            };
            for d in ds {
                *out.entry(d).or_insert(0) += f.power;
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }

    pub fn evaluate(&self, q: u64) -> BigUint {
        let mut num = qpow(q, self.q_power);
        let mut den = BigUint::one();
        for f in &self.factors {
            let v = if f.sign > 0 { qm1(q, f.e) } else { qp1(q, f.e) };
            for _ in 0..f.power.unsigned_abs() {
                if f.power > 0 {
                    num *= &v;
                } else {
                    den *= &v;
                }
            }
        }
        debug_assert!((&num % &den).is_zero());
        num / den
    }
}

fn triality_d4() -> GenericOrder {
    // q^12 (q^8 + q^4 + 1)(q^6 - 1)(q^2 - 1), with q^8 + q^4 + 1 = (q^12 - 1)/(q^4 - 1)
    GenericOrder {
        name: "3D4",
        q_power: 12,
        factors: vec![m(12), inv_m(4), m(6), m(2)],
    }
}

fn e6() -> GenericOrder {
    GenericOrder {
        name: "E6",
        q_power: 36,
        factors: vec![m(12), m(9), m(8), m(6), m(5), m(2)],
    }
}

fn twisted_e6() -> GenericOrder {
    GenericOrder {
        name: "2E6",
        q_power: 36,
        factors: vec![m(12), p(9), m(8), m(6), p(5), m(2)],
    }
}

fn e7() -> GenericOrder {
    GenericOrder {
        name: "E7",
        q_power: 63,
        factors: vec![m(18), m(14), m(12), m(10), m(8), m(6), m(2)],
    }
}

fn twisted_d4() -> Vec<Factor> {
    vec![m(2), m(4), m(6), p(4)]
}

#[derive(Clone, Debug, Serialize)]
pub struct Centralizer {
    pub label: &'static str,
    pub q_power: u64,
    pub factors: Vec<Factor>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExceptionalRow {
    pub group: GenericOrder,
    pub rank: i32,
    pub d: Vec<u64>,
    pub centralizers: Vec<Centralizer>,
}

pub fn table_rows() -> Vec<ExceptionalRow> {
    let with = |extra: Vec<Factor>, mut base: Vec<Factor>| {
        base.extend(extra);
        base
    };
    vec![
        ExceptionalRow {
            group: triality_d4(),
            rank: 4,
            d: vec![1, 2],
            centralizers: vec![Centralizer {
                label: "(q-1).A1(q^3)",
                q_power: 3,
                factors: vec![m(1), m(6)],
            }],
        },
        ExceptionalRow {
            group: e6(),
            rank: 6,
            d: vec![2, 4, 6],
            centralizers: vec![
                Centralizer {
                    label: "(q^2-1).2D4(q)",
                    q_power: 12,
                    factors: with(vec![m(2)], twisted_d4()),
                },
                Centralizer {
                    label: "(q^2+1)(q-1).2A3(q)",
                    q_power: 6,
                    factors: vec![p(2), m(1), m(2), p(3), m(4)],
                },
            ],
        },
        ExceptionalRow {
            group: twisted_e6(),
            rank: 6,
            d: vec![1, 3, 4],
            centralizers: vec![
                Centralizer {
                    label: "(q^2-1).2D4(q)",
                    q_power: 12,
                    factors: with(vec![m(2)], twisted_d4()),
                },
                Centralizer {
                    label: "(q^2+1)(q+1).A3(q)",
                    q_power: 6,
                    factors: vec![p(2), p(1), m(2), m(3), m(4)],
                },
            ],
        },
        ExceptionalRow {
            group: e7(),
            rank: 7,
            d: vec![3, 4, 6],
            centralizers: vec![
                Centralizer {
                    label: "(q^3-1).3D4(q)",
                    q_power: 12,
                    factors: with(vec![m(3)], triality_d4().factors),
                },
                Centralizer {
                    label: "(q^3+1).3D4(q)",
                    q_power: 12,
                    factors: with(vec![p(3)], triality_d4().factors),
                },
            ],
        },
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct RowCheck {
    pub group: &'static str,
    /// `(d, multiplicity of Φ_d)`.
    pub multiplicities: Vec<(u64, i32)>,
    pub tori_noncyclic_nonmaximal: bool,
    pub centralizers_divide: bool,
}

pub fn check_row(row: &ExceptionalRow, qs: &[u64]) -> RowCheck {
    let mult = row.group.phi_multiplicities();
    let multiplicities: Vec<(u64, i32)> = row.d.iter().map(|d| (*d, *mult.get(d).unwrap_or(&0))).collect();
    let tori_noncyclic_nonmaximal = multiplicities.iter().all(|&(_, k)| k >= 2 && k < row.rank);
    let centralizers_divide = row.centralizers.iter().all(|c| {
        let g = GenericOrder {
            name: c.label,
            q_power: c.q_power,
            factors: c.factors.clone(),
        };
        let cm = g.phi_multiplicities();
        let poly_ok = c.q_power <= row.group.q_power
            && cm.iter().all(|(d, k)| mult.get(d).copied().unwrap_or(0) >= *k);
        poly_ok && qs.iter().all(|&q| (row.group.evaluate(q) % g.evaluate(q)).is_zero())
    });
    RowCheck {
        group: row.group.name,
        multiplicities,
        tori_noncyclic_nonmaximal,
        centralizers_divide,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_orders() {
        // |3D4(2)| = 211341312, |E6(2)| (simply connected, center trivial for q=2)
        assert_eq!(triality_d4().evaluate(2), BigUint::from(211_341_312u64));
        assert_eq!(
            e6().evaluate(2).to_string(),
            "214841575522005575270400"
        );
    }

    #[test]
    fn rows_are_consistent() {
        for row in table_rows() {
            let c = check_row(&row, &[2, 3, 4, 5]);
            assert!(c.tori_noncyclic_nonmaximal, "{c:?}");
            assert!(c.centralizers_divide, "{c:?}");
        }
    }
}
