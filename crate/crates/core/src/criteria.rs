//! Class-size criteria for nilpotent and abelian Hall subgroups, and the
//! harness that runs each criterion next to its subgroup oracle.
//!
//! Criteria read only class sizes and element orders ([`ClassInfo`]); the
//! oracles in [`crate::subgroups`] are the only consumers of group structure.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::classes::{class_table, p_element_classes, ClassTable};
use crate::error::{Error, Result};
use crate::group::{PermutationGroup, Subgroup};
use crate::numtheory::prime_divisors_big;
use crate::subgroups::{
    exists_commuting_sylow_pair, exists_normalizing_sylow_pair, is_q_solvable, is_simple, nilpotent_hall_indexed,
    op_prime_core, PairSearch,
};

/// Size and element order of one conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub size: BigUint,
    pub element_order: u64,
}

impl ClassTable {
    pub fn summaries(&self) -> Vec<ClassInfo> {
        self.classes()
            .iter()
            .map(|c| ClassInfo {
                size: BigUint::from(c.size),
                element_order: c.element_order,
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Criterion,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A class of `element_prime`-elements whose size is divisible by
    /// `dividing_prime`.
    Class {
        class: usize,
        element_order: u64,
        #[serde(serialize_with = "ser_big")]
        size: BigUint,
        element_prime: u64,
        dividing_prime: u64,
    },
    /// An irreducible character of the principal block with degree
    /// divisible by `prime`. `character` is its position in the block's
    /// degree list, not a row of the character table.
    BlockCharacter { prime: u64, character: usize, degree: u64 },
    MissingBlockData { prime: u64 },
    Subgroup {
        label: String,
        order: u64,
        generators: Vec<String>,
    },
    Note { text: String },
}

fn ser_big<S: serde::Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

impl Witness {
    pub fn subgroup(label: &str, h: &Subgroup) -> Witness {
        Witness::Subgroup {
            label: label.to_string(),
            order: h.order_u64(),
            generators: h.generators().iter().map(|g| g.cycle_notation()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub provenance: Provenance,
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    pub fn criterion(holds: bool, witnesses: Vec<Witness>) -> Self {
        Verdict {
            status: if holds { Status::Holds } else { Status::Fails },
            provenance: Provenance::Criterion,
            witnesses,
        }
    }

    pub fn oracle(holds: bool, witnesses: Vec<Witness>) -> Self {
        Verdict {
            status: if holds { Status::Holds } else { Status::Fails },
            provenance: Provenance::Oracle,
            witnesses,
        }
    }

    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn is_determined(&self) -> bool {
        self.status != Status::Undetermined
    }

    /// `(element prime, dividing prime)` for every offending class.
    pub fn offending_primes(&self) -> BTreeSet<(u64, u64)> {
        self.witnesses
            .iter()
            .filter_map(|w| match w {
                Witness::Class {
                    element_prime,
                    dividing_prime,
                    ..
                } => Some((*element_prime, *dividing_prime)),
                _ => None,
            })
            .collect()
    }
}

fn group_order(classes: &[ClassInfo]) -> BigUint {
    classes.iter().map(|c| &c.size).sum()
}

fn divides(p: u64, n: &BigUint) -> bool {
    (n % p).is_zero()
}

fn p_classes(classes: &[ClassInfo], p: u64) -> Vec<usize> {
    p_element_classes(classes.iter().map(|c| c.element_order), p)
}

/// Classes of `p`-elements whose size is divisible by `q`.
fn offenders(classes: &[ClassInfo], p: u64, q: u64) -> Vec<Witness> {
    p_classes(classes, p)
        .into_iter()
        .filter(|&k| divides(q, &classes[k].size))
        .map(|k| Witness::Class {
            class: k,
            element_order: classes[k].element_order,
            size: classes[k].size.clone(),
            element_prime: p,
            dividing_prime: q,
        })
        .collect()
}

/// No q-element class size is divisible by p and no p-element class size
/// is divisible by q.
pub fn cross_divisibility(classes: &[ClassInfo], p: u64, q: u64) -> Result<Verdict> {
    if p == q {
        return Err(Error::Precondition(format!("primes must differ, got {p} twice")));
    }
    let mut w = offenders(classes, p, q);
    w.extend(offenders(classes, q, p));
    Ok(Verdict::criterion(w.is_empty(), w))
}

pub fn cross_divisibility_criterion(t: &ClassTable, p: u64, q: u64) -> Result<Verdict> {
    cross_divisibility(&t.summaries(), p, q)
}

/// The one-sided half: no q-element class size is divisible by p.
pub fn one_sided(classes: &[ClassInfo], q_elements: u64, not_dividing: u64) -> Verdict {
    let w = offenders(classes, q_elements, not_dividing);
    Verdict::criterion(w.is_empty(), w)
}

/// Sorted primes of `pi` dividing the group order.
pub fn relevant_primes(classes: &[ClassInfo], pi: &[u64]) -> Vec<u64> {
    let primes = prime_divisors_big(&group_order(classes));
    let mut out: Vec<u64> = pi.iter().copied().filter(|p| primes.contains(p)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Pairwise cross-divisibility over `pi` restricted to primes dividing the
/// group order.
pub fn nilpotent_hall(classes: &[ClassInfo], pi: &[u64]) -> Verdict {
    let pi = relevant_primes(classes, pi);
    let mut w = Vec::new();
    for (i, &p) in pi.iter().enumerate() {
        for &q in &pi[i + 1..] {
            w.extend(offenders(classes, p, q));
            w.extend(offenders(classes, q, p));
        }
    }
    Verdict::criterion(w.is_empty(), w)
}

pub fn nilpotent_hall_criterion(t: &ClassTable, pi: &[u64]) -> Verdict {
    nilpotent_hall(&t.summaries(), pi)
}

/// Principal-block character degrees for each prime.
pub type BlockDegrees = BTreeMap<u64, Vec<u64>>;

/// (i) p-element class sizes are π'-numbers for p ∈ π; (ii) for p ∈ π ∩
/// {3, 5}, no principal p-block degree is divisible by p. Without block
/// data for such a p the verdict is undetermined.
pub fn abelian_hall(classes: &[ClassInfo], pi: &[u64], blocks: Option<&BlockDegrees>) -> Verdict {
    let pi = relevant_primes(classes, pi);
    let mut w = Vec::new();
    for &p in &pi {
        for &q in &pi {
            w.extend(offenders(classes, p, q));
        }
    }
    if !w.is_empty() {
        return Verdict::criterion(false, w);
    }
    let mut missing = Vec::new();
    for &p in pi.iter().filter(|&&p| p == 3 || p == 5) {
        match blocks.and_then(|b| b.get(&p)) {
            None => missing.push(Witness::MissingBlockData { prime: p }),
            Some(degrees) => w.extend(
                degrees
                    .iter()
                    .enumerate()
                    .filter(|&(_, &d)| d % p == 0)
                    .map(|(character, &degree)| Witness::BlockCharacter {
                        prime: p,
                        character,
                        degree,
                    }),
            ),
        }
    }
    if !w.is_empty() {
        return Verdict::criterion(false, w);
    }
    if !missing.is_empty() {
        return Verdict {
            status: Status::Undetermined,
            provenance: Provenance::Criterion,
            witnesses: missing,
        };
    }
    Verdict::criterion(true, w)
}

pub fn abelian_hall_criterion(t: &ClassTable, pi: &[u64], blocks: Option<&BlockDegrees>) -> Verdict {
    abelian_hall(&t.summaries(), pi, blocks)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportKind {
    Equivalence,
    Implication,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Agreement {
    Agree,
    Disagree,
    /// A cap was hit or the criterion could not be decided.
    Untested,
    /// The theorem's standing hypothesis does not hold for this group.
    Inapplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub theorem: &'static str,
    pub primes: Vec<u64>,
    pub kind: ReportKind,
    pub criterion: Option<Verdict>,
    pub oracle: Option<Verdict>,
    pub agreement: Agreement,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl TheoremReport {
    pub fn agree(&self) -> bool {
        self.agreement == Agreement::Agree
    }

    fn untested(theorem: &'static str, primes: Vec<u64>, kind: ReportKind, err: &Error) -> Self {
        TheoremReport {
            theorem,
            primes,
            kind,
            criterion: None,
            oracle: None,
            agreement: Agreement::Untested,
            note: Some(err.to_string()),
        }
    }

    fn compare(
        theorem: &'static str,
        primes: Vec<u64>,
        kind: ReportKind,
        criterion: Verdict,
        oracle: Verdict,
    ) -> Self {
        let agreement = if !criterion.is_determined() || !oracle.is_determined() {
            Agreement::Untested
        } else {
            let ok = match kind {
                ReportKind::Equivalence => criterion.holds() == oracle.holds(),
                ReportKind::Implication => !criterion.holds() || oracle.holds(),
            };
            if ok {
                Agreement::Agree
            } else {
                Agreement::Disagree
            }
        };
        TheoremReport {
            theorem,
            primes,
            kind,
            criterion: Some(criterion),
            oracle: Some(oracle),
            agreement,
            note: None,
        }
    }
}

/// Runs `body`; capacity errors become an untested report.
fn guarded(
    theorem: &'static str,
    primes: Vec<u64>,
    kind: ReportKind,
    body: impl FnOnce() -> Result<TheoremReport>,
) -> Result<TheoremReport> {
    match body() {
        Err(e) if e.is_capacity() => Ok(TheoremReport::untested(theorem, primes, kind, &e)),
        other => other,
    }
}

fn pair_verdict(search: &PairSearch) -> Verdict {
    let w = match &search.witness {
        Some((p, q)) => vec![Witness::subgroup("P", p), Witness::subgroup("Q", q)],
        None => vec![Witness::Note {
            text: format!("no pair among {} candidates", search.pairs_examined),
        }],
    };
    Verdict::oracle(search.found, w)
}

/// Cross-divisibility against the commuting Sylow pair search.
pub fn verify_theorem_a(g: &PermutationGroup, p: u64, q: u64) -> Result<TheoremReport> {
    guarded("A", vec![p, q], ReportKind::Equivalence, || {
        let t = class_table(g)?;
        let crit = cross_divisibility_criterion(&t, p, q)?;
        let oracle = pair_verdict(&exists_commuting_sylow_pair(g, p, q)?);
        Ok(TheoremReport::compare("A", vec![p, q], ReportKind::Equivalence, crit, oracle))
    })
}

/// Nilpotent Hall oracle. If a nilpotent Hall π-subgroup exists then every
/// π-subgroup lies in a conjugate of it, so all Hall π-subgroups are
/// conjugate; existence of a nilpotent one is therefore the same as
/// existence of pairwise commuting Sylow subgroups.
fn nilpotent_hall_oracle(g: &PermutationGroup, pi: &[u64]) -> Result<(Verdict, Option<Subgroup>, bool)> {
    let els = g.elements()?;
    match nilpotent_hall_indexed(g, pi)? {
        Some(h) => {
            let abelian = h.is_abelian(&els);
            let sub = h.to_subgroup(&els, g.degree());
            Ok((Verdict::oracle(true, vec![Witness::subgroup("H", &sub)]), Some(sub), abelian))
        }
        None => Ok((
            Verdict::oracle(
                false,
                vec![Witness::Note {
                    text: "no pairwise commuting family of Sylow subgroups".into(),
                }],
            ),
            None,
            false,
        )),
    }
}

pub fn verify_theorem_b(g: &PermutationGroup, pi: &[u64]) -> Result<TheoremReport> {
    let mut primes = pi.to_vec();
    primes.sort_unstable();
    guarded("B", primes.clone(), ReportKind::Equivalence, || {
        let t = class_table(g)?;
        let crit = nilpotent_hall_criterion(&t, pi);
        let (oracle, _, _) = nilpotent_hall_oracle(g, pi)?;
        Ok(TheoremReport::compare("B", primes, ReportKind::Equivalence, crit, oracle))
    })
}

/// Abelian Hall criterion against the group. An abelian Hall subgroup is
/// nilpotent, and Hall subgroups are all conjugate once a nilpotent one
/// exists, so the oracle asks whether the nilpotent one is abelian.
pub fn verify_theorem_c(
    g: &PermutationGroup,
    pi: &[u64],
    blocks: Option<&BlockDegrees>,
) -> Result<TheoremReport> {
    let mut primes = pi.to_vec();
    primes.sort_unstable();
    guarded("C", primes.clone(), ReportKind::Equivalence, || {
        let t = class_table(g)?;
        let crit = abelian_hall_criterion(&t, pi, blocks);
        let (nil, sub, abelian) = nilpotent_hall_oracle(g, pi)?;
        let oracle = match sub {
            Some(_) => Verdict::oracle(abelian, nil.witnesses),
            None => nil,
        };
        Ok(TheoremReport::compare("C", primes, ReportKind::Equivalence, crit, oracle))
    })
}

fn is_p_solvable(g: &PermutationGroup, p: u64) -> Result<bool> {
    is_q_solvable(g, p)
}

/// If q-element class sizes are prime to `p` and G is p- or q-solvable,
/// a Sylow p-subgroup normalizes some Sylow q-subgroup.
pub fn verify_p_solvable_normalization(g: &PermutationGroup, p: u64, q: u64) -> Result<TheoremReport> {
    guarded("t4.1", vec![p, q], ReportKind::Implication, || {
        if !is_p_solvable(g, p)? && !is_p_solvable(g, q)? {
            return Ok(TheoremReport {
                theorem: "t4.1",
                primes: vec![p, q],
                kind: ReportKind::Implication,
                criterion: None,
                oracle: None,
                agreement: Agreement::Inapplicable,
                note: Some(format!("group is neither {p}-solvable nor {q}-solvable")),
            });
        }
        let t = class_table(g)?;
        let crit = one_sided(&t.summaries(), q, p);
        let oracle = pair_verdict(&exists_normalizing_sylow_pair(g, p, q)?);
        Ok(TheoremReport::compare("t4.1", vec![p, q], ReportKind::Implication, crit, oracle))
    })
}

/// For p-solvable G: some Sylow p-subgroup normalizes some Sylow
/// q-subgroup iff `G / O_{p'}(G)` is a q'-group. The criterion side here
/// is the quotient condition.
pub fn verify_op_prime_characterization(g: &PermutationGroup, p: u64, q: u64) -> Result<TheoremReport> {
    guarded("t4.2", vec![p, q], ReportKind::Equivalence, || {
        if !is_p_solvable(g, p)? {
            return Ok(TheoremReport {
                theorem: "t4.2",
                primes: vec![p, q],
                kind: ReportKind::Equivalence,
                criterion: None,
                oracle: None,
                agreement: Agreement::Inapplicable,
                note: Some(format!("group is not {p}-solvable")),
            });
        }
        let core = op_prime_core(g, p)?;
        let index = g.order() / core.order();
        let crit = Verdict::criterion(
            !divides(q, &index),
            vec![
                Witness::subgroup("O_p'", &core),
                Witness::Note {
                    text: format!("index {index}"),
                },
            ],
        );
        let oracle = pair_verdict(&exists_normalizing_sylow_pair(g, p, q)?);
        Ok(TheoremReport::compare("t4.2", vec![p, q], ReportKind::Equivalence, crit, oracle))
    })
}

/// For odd q: if every q-element class has odd size then G is q-solvable
/// and a Sylow 2-subgroup normalizes some Sylow q-subgroup.
pub fn verify_q_solvability_from_odd_classes(g: &PermutationGroup, q: u64) -> Result<TheoremReport> {
    guarded("t4.3", vec![q], ReportKind::Implication, || {
        if q == 2 {
            return Err(Error::Precondition("q must be odd".into()));
        }
        let t = class_table(g)?;
        let crit = one_sided(&t.summaries(), q, 2);
        let solvable = is_q_solvable(g, q)?;
        let pair = exists_normalizing_sylow_pair(g, 2, q)?;
        let mut w = vec![Witness::Note {
            text: format!("{q}-solvable: {solvable}"),
        }];
        w.extend(pair_verdict(&pair).witnesses);
        let oracle = Verdict::oracle(solvable && pair.found, w);
        Ok(TheoremReport::compare("t4.3", vec![q], ReportKind::Implication, crit, oracle))
    })
}

/// For simple G and odd r dividing |G|: some r-element class has even
/// size. The oracle side also checks directly that every real class of
/// elements of order r has even size.
pub fn verify_even_class_of_r_elements(g: &PermutationGroup, r: u64) -> Result<TheoremReport> {
    guarded("simple2", vec![r], ReportKind::Implication, || {
        if r == 2 {
            return Err(Error::Precondition("r must be odd".into()));
        }
        let t = class_table(g)?;
        let simple = is_simple(g)?;
        let divides = t.group_order() % r == 0;
        let crit = Verdict::criterion(
            simple && divides,
            vec![Witness::Note {
                text: format!("simple: {simple}, {r} divides |G|: {divides}"),
            }],
        );
        let even: Vec<usize> = t
            .p_elements(r)
            .into_iter()
            .filter(|&k| t.classes()[k].size % 2 == 0)
            .collect();
        let real_odd: Vec<usize> = (0..t.len())
            .filter(|&k| t.classes()[k].element_order == r && t.is_real(k) && t.classes()[k].size % 2 == 1)
            .collect();
        let mut w: Vec<Witness> = even
            .iter()
            .take(1)
            .map(|&k| {
                let c = &t.classes()[k];
                Witness::Class {
                    class: k,
                    element_order: c.element_order,
                    size: BigUint::from(c.size),
                    element_prime: r,
                    dividing_prime: 2,
                }
            })
            .collect();
        if !real_odd.is_empty() {
            w.push(Witness::Note {
                text: format!("real classes of order {r} with odd size: {real_odd:?}"),
            });
        }
        let oracle = Verdict::oracle(!even.is_empty() && real_odd.is_empty(), w);
        Ok(TheoremReport::compare("simple2", vec![r], ReportKind::Implication, crit, oracle))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::lookup;

    fn table(name: &str) -> ClassTable {
        class_table(&lookup(name).unwrap()).unwrap()
    }

    #[test]
    fn cross_divisibility_examples() {
        let v = cross_divisibility_criterion(&table("psl2_31"), 3, 5).unwrap();
        assert!(v.holds());
        let t = table("psl2_31");
        for k in t.p_elements(3).into_iter().chain(t.p_elements(5)) {
            assert_eq!(t.classes()[k].size, 992);
        }
        let v = cross_divisibility_criterion(&table("alt_5"), 2, 5).unwrap();
        assert!(!v.holds());
        assert!(v.offending_primes().contains(&(2, 5)));

        let sa = table("semiaffine_2_3");
        let v = cross_divisibility_criterion(&sa, 3, 2).unwrap();
        assert_eq!(v.offending_primes(), BTreeSet::from([(3, 2)]));
        assert!(one_sided(&sa.summaries(), 2, 3).holds());
        assert!(cross_divisibility_criterion(&sa, 2, 2).is_err());
    }

    #[test]
    fn nilpotent_hall_examples() {
        assert!(nilpotent_hall_criterion(&table("psl2_31"), &[3, 5]).holds());
        assert!(!nilpotent_hall_criterion(&table("alt_5"), &[2, 3, 5]).holds());
        assert!(nilpotent_hall_criterion(&table("alt_5"), &[5, 7, 11]).holds());
    }

    #[test]
    fn abelian_hall_examples() {
        let a5 = table("alt_5");
        let v = abelian_hall_criterion(&a5, &[3, 5], None);
        assert_eq!(v.status, Status::Fails);
        assert!(v.offending_primes().contains(&(3, 5)));
        let v = abelian_hall_criterion(&a5, &[2, 5], None);
        assert!(v.offending_primes().contains(&(2, 5)));
        let v = abelian_hall_criterion(&table("psl2_31"), &[3, 5], None);
        assert_eq!(v.status, Status::Undetermined);
        assert_eq!(v.witnesses.len(), 2);
    }

    #[test]
    fn harness_examples() {
        let r = verify_theorem_a(&lookup("alt_5").unwrap(), 2, 5).unwrap();
        assert!(!r.criterion.as_ref().unwrap().holds() && !r.oracle.as_ref().unwrap().holds());
        assert!(r.agree());
        let r = verify_theorem_a(&lookup("psl2_31").unwrap(), 3, 5).unwrap();
        assert!(r.criterion.as_ref().unwrap().holds() && r.agree());
        let r = verify_q_solvability_from_odd_classes(&lookup("frobenius_7_3").unwrap(), 7).unwrap();
        assert!(r.criterion.as_ref().unwrap().holds());
        assert!(r.oracle.as_ref().unwrap().holds());
        assert!(r.agree());
    }

    #[test]
    fn capacity_becomes_untested() {
        let big = lookup("alt_8").unwrap();
        let err = big.enumerate(10).unwrap_err();
        assert!(err.is_capacity());
        let r = guarded("A", vec![2, 3], ReportKind::Equivalence, || Err(err)).unwrap();
        assert_eq!(r.agreement, Agreement::Untested);
    }

    #[test]
    fn even_r_classes_in_simple_groups() {
        let r = verify_even_class_of_r_elements(&lookup("alt_5").unwrap(), 5).unwrap();
        assert!(r.criterion.as_ref().unwrap().holds() && r.agree());
        // a solvable group: the criterion side fails, the implication is vacuous
        let r = verify_even_class_of_r_elements(&lookup("frobenius_7_3").unwrap(), 7).unwrap();
        assert!(!r.criterion.as_ref().unwrap().holds());
        assert!(r.agree());
        assert!(verify_even_class_of_r_elements(&lookup("alt_5").unwrap(), 2).is_err());
    }
}
