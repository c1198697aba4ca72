//! Subgroup searches in enumeration mode: Sylow and Hall subgroups, Sylow
//! pairs that commute or normalize, `O_{p'}`, minimal normal subgroups and
//! q-solvability.
//!
//! Subgroups of an enumerated group are handled as [`ElementSet`]s together
//! with a generating list of element indices; results are converted to
//! [`Subgroup`]s at the boundary.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::classes::class_table;
use crate::error::{Error, Result};
use crate::group::{ElementSet, Elements, PermutationGroup, Subgroup, DEFAULT_QUOTIENT_CAP};
use crate::numtheory::{p_part, prime_divisors_big, split_p};
use crate::perm::Permutation;
use crate::structure::{coset_action_quotient_capped, is_solvable_subgroup, normal_closure_unchecked};

/// Default bound on the number of conjugates collected by [`all_sylow`].
pub const DEFAULT_CONJUGATE_CAP: usize = 50_000;

/// Default bound on closures attempted by the Hall subgroup search.
pub const DEFAULT_HALL_BUDGET: usize = 2_000_000;

/// A subgroup of an enumerated group with the element indices that
/// generate it.
#[derive(Clone, Debug)]
pub struct IndexedSubgroup {
    pub set: ElementSet,
    pub gens: Vec<usize>,
}

impl IndexedSubgroup {
    pub fn trivial(els: &Elements) -> Self {
        IndexedSubgroup {
            set: ElementSet::with_identity(els),
            gens: Vec::new(),
        }
    }

    pub fn generated(els: &Elements, gens: Vec<usize>) -> Self {
        IndexedSubgroup {
            set: els.closure(&gens),
            gens,
        }
    }

    pub fn order(&self) -> usize {
        self.set.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.set.contains(i)
    }

    /// Whether conjugation by `g` maps this subgroup to itself.
    pub fn normalized_by(&self, els: &Elements, g: &Permutation) -> bool {
        self.gens.iter().all(|&s| self.set.contains(els.conj(s, g)))
    }

    /// Every generator of `self` commutes with every generator of `other`.
    pub fn commutes_with(&self, els: &Elements, other: &IndexedSubgroup) -> bool {
        self.gens
            .iter()
            .all(|&a| other.gens.iter().all(|&b| els.get(a).commutes_with(els.get(b))))
    }

    pub fn conjugate(&self, els: &Elements, g: &Permutation) -> IndexedSubgroup {
        IndexedSubgroup {
            set: self.set.conjugate(els, g),
            gens: self.gens.iter().map(|&s| els.conj(s, g)).collect(),
        }
    }

    pub fn to_subgroup(&self, els: &Elements, degree: usize) -> Subgroup {
        let gens = self.gens.iter().map(|&i| els.get(i).clone()).collect();
        Subgroup::generated(degree, gens)
    }

    pub fn is_abelian(&self, els: &Elements) -> bool {
        self.commutes_with(els, self)
    }

    /// Every Sylow subgroup is normal: for each prime the p-elements
    /// (with the identity) number exactly the p-part of the order.
    pub fn is_nilpotent(&self, els: &Elements) -> bool {
        let n = self.order() as u64;
        prime_divisors_big(&BigUint::from(n)).into_iter().all(|p| {
            let count = self
                .set
                .members()
                .iter()
                .filter(|&&m| split_p(els.element_order(m as usize), p).1 == 1)
                .count() as u64;
            count == p_part(n, p)
        })
    }
}

/// Grows `base` by `extra`, giving up once the closure exceeds `cap`.
fn closure_capped(
    els: &Elements,
    base: &IndexedSubgroup,
    extra: &[usize],
    cap: usize,
) -> Option<IndexedSubgroup> {
    let mut gens = base.gens.clone();
    gens.extend(extra.iter().copied().filter(|&g| !base.set.contains(g)));
    let gen_perms: Vec<Permutation> = gens.iter().map(|&g| els.get(g).clone()).collect();
    let mut set = base.set.clone();
    let mut queue: Vec<u32> = set.members().to_vec();
    let mut head = 0;
    while head < queue.len() {
        let x = els.get(queue[head] as usize).clone();
        head += 1;
        for s in &gen_perms {
            let y = els.idx(&x.then(s));
            if set.insert(y) {
                queue.push(y as u32);
                if set.len() > cap {
                    return None;
                }
            }
        }
    }
    Some(IndexedSubgroup { set, gens })
}

/// A Sylow subgroup together with the prime it belongs to.
#[derive(Clone, Debug)]
pub struct SylowWitness {
    pub p: u64,
    pub subgroup: Subgroup,
    pub conjugates: Option<Vec<Subgroup>>,
}

fn p_part_of_order(g: &PermutationGroup, p: u64) -> usize {
    p_part_big_usize(g.order(), p)
}

fn p_part_big_usize(n: &BigUint, p: u64) -> usize {
    crate::numtheory::p_part_big(n, p).to_usize().expect("enumerable")
}

fn is_p_element(els: &Elements, i: usize, p: u64) -> bool {
    split_p(els.element_order(i), p).1 == 1
}

/// A Sylow p-subgroup as element indices, built by climbing through
/// normalizers from a p-element of largest order. Ties go to the least
/// element index.
pub fn sylow_indexed(g: &PermutationGroup, p: u64) -> Result<IndexedSubgroup> {
    let els = g.elements()?;
    let target = p_part_of_order(g, p);
    if target == 1 {
        return Ok(IndexedSubgroup::trivial(&els));
    }
    let seed = (0..els.len())
        .filter(|&i| is_p_element(&els, i, p))
        .max_by_key(|&i| (els.element_order(i), std::cmp::Reverse(i)))
        .expect("a p-element exists");
    let mut s = IndexedSubgroup::generated(&els, vec![seed]);
    while s.order() < target {
        let g_next = (0..els.len())
            .find(|&i| !s.contains(i) && is_p_element(&els, i, p) && s.normalized_by(&els, els.get(i)))
            .expect("a p-subgroup below Sylow order has a p-element in its normalizer outside it");
        let mut gens = s.gens.clone();
        gens.push(g_next);
        s = IndexedSubgroup::generated(&els, gens);
    }
    Ok(s)
}

pub fn sylow(g: &PermutationGroup, p: u64) -> Result<SylowWitness> {
    let els = g.elements()?;
    let s = sylow_indexed(g, p)?;
    Ok(SylowWitness {
        p,
        subgroup: s.to_subgroup(&els, g.degree()),
        conjugates: None,
    })
}

/// All conjugates of `h` under `g`, sorted by their element index sets.
pub fn conjugacy_orbit(
    g: &PermutationGroup,
    h: &IndexedSubgroup,
    cap: usize,
) -> Result<Vec<IndexedSubgroup>> {
    let els = g.elements()?;
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    seen.insert(h.set.bits().to_vec());
    let mut orbit = vec![h.clone()];
    let mut head = 0;
    while head < orbit.len() {
        let cur = orbit[head].clone();
        head += 1;
        for x in g.generators() {
            let c = cur.conjugate(&els, x);
            if seen.insert(c.set.bits().to_vec()) {
                orbit.push(c);
                if orbit.len() > cap {
                    return Err(Error::capacity("conjugate subgroups", format!("> {cap}"), cap));
                }
            }
        }
    }
    orbit.sort_by_cached_key(|s| s.set.sorted_members());
    Ok(orbit)
}

pub fn all_sylow_indexed(g: &PermutationGroup, p: u64) -> Result<Vec<IndexedSubgroup>> {
    let s = sylow_indexed(g, p)?;
    conjugacy_orbit(g, &s, DEFAULT_CONJUGATE_CAP)
}

pub fn all_sylow(g: &PermutationGroup, p: u64) -> Result<Vec<Subgroup>> {
    let els = g.elements()?;
    Ok(all_sylow_indexed(g, p)?
        .iter()
        .map(|s| s.to_subgroup(&els, g.degree()))
        .collect())
}

/// Outcome of a Sylow pair search.
#[derive(Clone, Debug)]
pub struct PairSearch {
    pub found: bool,
    pub witness: Option<(Subgroup, Subgroup)>,
    pub pairs_examined: usize,
}

fn pair_search(
    g: &PermutationGroup,
    p: u64,
    q: u64,
    relation: impl Fn(&Elements, &IndexedSubgroup, &IndexedSubgroup) -> bool,
) -> Result<PairSearch> {
    let els = g.elements()?;
    // Pairs are permuted transitively in their first coordinate by
    // conjugation, so fixing the first Sylow p-subgroup loses nothing.
    let ps = all_sylow_indexed(g, p)?;
    let qs = all_sylow_indexed(g, q)?;
    let first = &ps[0];
    let mut examined = 0;
    for qq in &qs {
        examined += 1;
        if relation(&els, first, qq) {
            return Ok(PairSearch {
                found: true,
                witness: Some((first.to_subgroup(&els, g.degree()), qq.to_subgroup(&els, g.degree()))),
                pairs_examined: examined,
            });
        }
    }
    Ok(PairSearch {
        found: false,
        witness: None,
        pairs_examined: examined,
    })
}

/// Is there `P ∈ Syl_p`, `Q ∈ Syl_q` with `[P, Q] = 1`?
pub fn exists_commuting_sylow_pair(g: &PermutationGroup, p: u64, q: u64) -> Result<PairSearch> {
    pair_search(g, p, q, |els, a, b| a.commutes_with(els, b))
}

/// Is there `P ∈ Syl_p` normalizing some `Q ∈ Syl_q`?
pub fn exists_normalizing_sylow_pair(g: &PermutationGroup, p: u64, q: u64) -> Result<PairSearch> {
    pair_search(g, p, q, |els, a, b| a.gens.iter().all(|&x| b.normalized_by(els, els.get(x))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HallStructure {
    Abelian,
    NilpotentNonabelian,
    Neither,
}

#[derive(Clone, Debug)]
pub struct HallWitness {
    pub pi: Vec<u64>,
    pub subgroup: Subgroup,
    pub structure: HallStructure,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HallStrategy {
    SylowProduct,
    ExhaustiveSearch,
}

#[derive(Clone, Debug)]
pub enum HallOutcome {
    Found {
        witness: HallWitness,
        strategy: HallStrategy,
    },
    /// The exhaustive search finished without finding one.
    ProvedAbsent,
    /// The search budget ran out first.
    NotFound { closures: usize },
}

impl HallOutcome {
    pub fn witness(&self) -> Option<&HallWitness> {
        match self {
            HallOutcome::Found { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn is_decided(&self) -> bool {
        !matches!(self, HallOutcome::NotFound { .. })
    }
}

fn relevant_primes(g: &PermutationGroup, pi: &[u64]) -> Vec<u64> {
    let primes = prime_divisors_big(g.order());
    let mut out: Vec<u64> = pi.iter().copied().filter(|p| primes.contains(p)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn pi_part(g: &PermutationGroup, pi: &[u64]) -> usize {
    pi.iter().map(|&p| p_part_of_order(g, p)).product()
}

fn structure_of(els: &Elements, h: &IndexedSubgroup) -> HallStructure {
    if h.is_abelian(els) {
        HallStructure::Abelian
    } else if h.is_nilpotent(els) {
        HallStructure::NilpotentNonabelian
    } else {
        HallStructure::Neither
    }
}

fn witness(g: &PermutationGroup, els: &Elements, pi: &[u64], h: &IndexedSubgroup) -> HallWitness {
    HallWitness {
        pi: pi.to_vec(),
        subgroup: h.to_subgroup(els, g.degree()),
        structure: structure_of(els, h),
    }
}

/// Nilpotent Hall π-subgroup as a product of pairwise commuting Sylow
/// subgroups. The search is complete: `None` means no nilpotent Hall
/// π-subgroup exists.
pub fn nilpotent_hall_indexed(g: &PermutationGroup, pi: &[u64]) -> Result<Option<IndexedSubgroup>> {
    let els = g.elements()?;
    let pi = relevant_primes(g, pi);
    if pi.is_empty() {
        return Ok(Some(IndexedSubgroup::trivial(&els)));
    }
    let first = sylow_indexed(g, pi[0])?;
    let mut candidates = Vec::new();
    for &q in &pi[1..] {
        let list: Vec<IndexedSubgroup> = all_sylow_indexed(g, q)?
            .into_iter()
            .filter(|s| s.commutes_with(&els, &first))
            .collect();
        if list.is_empty() {
            return Ok(None);
        }
        candidates.push(list);
    }
    let mut chosen: Vec<&IndexedSubgroup> = Vec::new();
    fn extend<'a>(
        els: &Elements,
        candidates: &'a [Vec<IndexedSubgroup>],
        chosen: &mut Vec<&'a IndexedSubgroup>,
    ) -> bool {
        let level = chosen.len();
        if level == candidates.len() {
            return true;
        }
        for c in &candidates[level] {
            if chosen.iter().all(|d| d.commutes_with(els, c)) {
                chosen.push(c);
                if extend(els, candidates, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if !extend(&els, &candidates, &mut chosen) {
        return Ok(None);
    }
    let mut gens = first.gens.clone();
    for c in chosen {
        gens.extend(c.gens.iter().copied());
    }
    let h = IndexedSubgroup::generated(&els, gens);
    debug_assert_eq!(h.order(), pi_part(g, &pi));
    Ok(Some(h))
}

/// Product of Sylow subgroups `S_1 S_2 ...` where each partial product is
/// a subgroup of the right order. Bounded by `budget` closures.
fn sylow_product(
    g: &PermutationGroup,
    els: &Elements,
    pi: &[u64],
    budget: &mut usize,
) -> Result<Option<IndexedSubgroup>> {
    let first = sylow_indexed(g, pi[0])?;
    let mut lists = Vec::new();
    for &q in &pi[1..] {
        lists.push(all_sylow_indexed(g, q)?);
    }
    fn go(
        els: &Elements,
        cur: &IndexedSubgroup,
        lists: &[Vec<IndexedSubgroup>],
        budget: &mut usize,
    ) -> Option<IndexedSubgroup> {
        let Some((head, rest)) = lists.split_first() else {
            return Some(cur.clone());
        };
        for q in head {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            let target = cur.order() * q.order();
            if let Some(next) = closure_capped(els, cur, &q.gens, target) {
                if next.order() == target {
                    if let Some(done) = go(els, &next, rest, budget) {
                        return Some(done);
                    }
                }
            }
        }
        None
    }
    Ok(go(els, &first, &lists, budget))
}

/// Exhaustive search over subgroups containing a fixed Sylow subgroup and
/// generated by π-elements, pruned by order. `Ok(None)` is a proof of
/// absence; `Err(())` means the budget ran out.
fn exhaustive_hall(
    g: &PermutationGroup,
    els: &Elements,
    pi: &[u64],
    budget: &mut usize,
) -> Result<std::result::Result<Option<IndexedSubgroup>, ()>> {
    let target = pi_part(g, pi);
    // every Hall π-subgroup has a conjugate containing this Sylow subgroup
    let anchor_prime = *pi
        .iter()
        .max_by_key(|&&p| (p_part_of_order(g, p), p))
        .expect("nonempty");
    let anchor = sylow_indexed(g, anchor_prime)?;
    let pi_elements: Vec<usize> = (0..els.len())
        .filter(|&i| pi.iter().fold(els.element_order(i), |o, &p| split_p(o, p).1) == 1)
        .collect();
    let mut visited: HashSet<Vec<u64>> = HashSet::new();
    visited.insert(anchor.set.bits().to_vec());
    let mut stack = vec![anchor];
    while let Some(h) = stack.pop() {
        if h.order() == target {
            return Ok(Ok(Some(h)));
        }
        let mut tried = h.set.clone();
        for &x in &pi_elements {
            if tried.contains(x) {
                continue;
            }
            // <h, x> = <h, y x> for y in h: skip the rest of the coset
            for &m in h.set.members() {
                tried.insert(els.mul(m as usize, x));
            }
            if *budget == 0 {
                return Ok(Err(()));
            }
            *budget -= 1;
            if let Some(next) = closure_capped(els, &h, &[x], target) {
                if target.is_multiple_of(next.order()) && visited.insert(next.set.bits().to_vec()) {
                    stack.push(next);
                }
            }
        }
    }
    Ok(Ok(None))
}

pub fn hall_subgroup(g: &PermutationGroup, pi: &[u64]) -> Result<HallOutcome> {
    hall_subgroup_with_budget(g, pi, DEFAULT_HALL_BUDGET)
}

/// A Hall π-subgroup, trying (1) products of Sylow subgroups and then
/// (2) exhaustive search.
pub fn hall_subgroup_with_budget(g: &PermutationGroup, pi: &[u64], budget: usize) -> Result<HallOutcome> {
    let els = g.elements()?;
    let pi = relevant_primes(g, pi);
    if pi.len() <= 1 {
        let h = match pi.first() {
            Some(&p) => sylow_indexed(g, p)?,
            None => IndexedSubgroup::trivial(&els),
        };
        return Ok(HallOutcome::Found {
            witness: witness(g, &els, &pi, &h),
            strategy: HallStrategy::SylowProduct,
        });
    }
    if let Some(h) = nilpotent_hall_indexed(g, &pi)? {
        return Ok(HallOutcome::Found {
            witness: witness(g, &els, &pi, &h),
            strategy: HallStrategy::SylowProduct,
        });
    }
    let mut left = budget;
    if let Some(h) = sylow_product(g, &els, &pi, &mut left)? {
        return Ok(HallOutcome::Found {
            witness: witness(g, &els, &pi, &h),
            strategy: HallStrategy::SylowProduct,
        });
    }
    let mut left = budget;
    match exhaustive_hall(g, &els, &pi, &mut left)? {
        Ok(Some(h)) => Ok(HallOutcome::Found {
            witness: witness(g, &els, &pi, &h),
            strategy: HallStrategy::ExhaustiveSearch,
        }),
        Ok(None) => Ok(HallOutcome::ProvedAbsent),
        Err(()) => Ok(HallOutcome::NotFound { closures: budget }),
    }
}

pub fn is_abelian(s: &Subgroup) -> bool {
    s.is_abelian()
}

/// Every Sylow subgroup of `s` is normal.
pub fn is_nilpotent(s: &Subgroup) -> Result<bool> {
    let h = s.to_group();
    let els = h.elements()?;
    let all = IndexedSubgroup {
        set: els.closure(&(0..els.len()).collect::<Vec<_>>()),
        gens: h.generators().iter().map(|x| els.idx(x)).collect(),
    };
    Ok(all.is_nilpotent(&els))
}

fn divides_order(p: u64, n: &BigUint) -> bool {
    (n % p) == BigUint::from(0u32)
}

/// `O_{p'}(G)`: generated by the class representatives whose normal
/// closure has order prime to `p`.
pub fn op_prime_core(g: &PermutationGroup, p: u64) -> Result<Subgroup> {
    let t = class_table(g)?;
    let seeds: Vec<Permutation> = t
        .classes()
        .iter()
        .skip(1)
        .filter(|c| !divides_order(p, normal_closure_unchecked(g, std::slice::from_ref(&c.representative)).order()))
        .map(|c| c.representative.clone())
        .collect();
    let core = normal_closure_unchecked(g, &seeds);
    debug_assert!(!divides_order(p, core.order()));
    Ok(core)
}

/// Minimal normal subgroups, ordered by order and then by the least class
/// representative generating them.
pub fn minimal_normal_subgroups(g: &PermutationGroup) -> Result<Vec<Subgroup>> {
    let t = class_table(g)?;
    let closures: Vec<Subgroup> = t
        .classes()
        .iter()
        .skip(1)
        .map(|c| normal_closure_unchecked(g, std::slice::from_ref(&c.representative)))
        .collect();
    let mut out: Vec<Subgroup> = Vec::new();
    let mut by_order: BTreeMap<BigUint, Vec<&Subgroup>> = BTreeMap::new();
    for n in &closures {
        by_order.entry(n.order().clone()).or_default().push(n);
    }
    for group in by_order.values() {
        for n in group {
            let minimal = !closures
                .iter()
                .any(|m| m.order() < n.order() && n.contains_subgroup(m));
            if minimal && !out.iter().any(|o| o.same_as(n)) {
                out.push((*n).clone());
            }
        }
    }
    Ok(out)
}

/// Nontrivial with no proper nontrivial normal subgroup.
pub fn is_simple(g: &PermutationGroup) -> Result<bool> {
    if g.order() == &BigUint::from(1u32) {
        return Ok(false);
    }
    let m = minimal_normal_subgroups(g)?;
    Ok(m.len() == 1 && m[0].order() == g.order())
}

pub fn is_solvable(g: &PermutationGroup) -> bool {
    crate::structure::is_solvable(g)
}

/// Every composition factor is a q-group or has order prime to `q`.
pub fn is_q_solvable(g: &PermutationGroup, q: u64) -> Result<bool> {
    is_q_solvable_capped(g, q, DEFAULT_QUOTIENT_CAP)
}

pub fn is_q_solvable_capped(g: &PermutationGroup, q: u64, cap: u64) -> Result<bool> {
    let mut cur = g.clone();
    loop {
        if !divides_order(q, cur.order()) || cur.order().is_one() {
            return Ok(true);
        }
        let n = minimal_normal_subgroups(&cur)?
            .into_iter()
            .next()
            .expect("nontrivial group has a minimal normal subgroup");
        if !is_solvable_subgroup(&n) && divides_order(q, n.order()) {
            return Ok(false);
        }
        cur = coset_action_quotient_capped(&cur, &n, cap)?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::lookup;

    fn g(name: &str) -> PermutationGroup {
        lookup(name).unwrap()
    }

    #[test]
    fn sylow_orders() {
        assert_eq!(sylow(&g("alt_5"), 2).unwrap().subgroup.order_u64(), 4);
        assert_eq!(sylow(&g("alt_5"), 5).unwrap().subgroup.order_u64(), 5);
        assert_eq!(sylow(&g("psl2_31"), 3).unwrap().subgroup.order_u64(), 3);
        assert_eq!(sylow(&g("alt_5"), 7).unwrap().subgroup.order_u64(), 1);
        assert_eq!(sylow(&g("alt_8"), 2).unwrap().subgroup.order_u64(), 64);
    }

    #[test]
    fn sylow_counts() {
        assert_eq!(all_sylow(&g("alt_5"), 5).unwrap().len(), 6);
        assert_eq!(all_sylow(&g("alt_5"), 2).unwrap().len(), 5);
        assert_eq!(all_sylow(&g("cyclic_15"), 3).unwrap().len(), 1);
    }

    #[test]
    fn commuting_pairs() {
        let r = exists_commuting_sylow_pair(&g("psl2_31"), 3, 5).unwrap();
        assert!(r.found);
        let (p, q) = r.witness.unwrap();
        let mut gens = p.generators().to_vec();
        gens.extend(q.generators().iter().cloned());
        let h = Subgroup::generated(32, gens);
        assert_eq!(h.order_u64(), 15);
        assert!(h.is_abelian());
        assert!(!exists_commuting_sylow_pair(&g("alt_5"), 2, 5).unwrap().found);
        assert!(!exists_commuting_sylow_pair(&g("semiaffine_2_3"), 3, 2).unwrap().found);
    }

    #[test]
    fn normalizing_pairs() {
        let sa = g("semiaffine_2_3");
        assert!(exists_normalizing_sylow_pair(&sa, 3, 2).unwrap().found);
        // the normal translation subgroup would have to centralize a
        // Frobenius element, which fixes only GF(2)
        assert!(!exists_normalizing_sylow_pair(&sa, 2, 3).unwrap().found);
        assert!(!exists_normalizing_sylow_pair(&g("alt_5"), 5, 2).unwrap().found);
    }

    #[test]
    fn hall_examples() {
        let a5 = g("alt_5");
        match hall_subgroup(&a5, &[2, 3]).unwrap() {
            HallOutcome::Found { witness, .. } => {
                assert_eq!(witness.subgroup.order_u64(), 12);
                assert_eq!(witness.structure, HallStructure::Neither);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(hall_subgroup(&a5, &[2, 5]).unwrap(), HallOutcome::ProvedAbsent));
        match hall_subgroup(&g("psl2_31"), &[3, 5]).unwrap() {
            HallOutcome::Found { witness, .. } => {
                assert_eq!(witness.subgroup.order_u64(), 15);
                assert_eq!(witness.structure, HallStructure::Abelian);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            hall_subgroup_with_budget(&a5, &[2, 5], 1).unwrap(),
            HallOutcome::NotFound { .. }
        ));
    }

    #[test]
    fn nilpotency() {
        assert!(is_nilpotent(&g("cyclic_15").as_subgroup()).unwrap());
        let d4 = g("dihedral_4").as_subgroup();
        assert!(is_nilpotent(&d4).unwrap());
        assert!(!is_abelian(&d4));
        assert!(!is_nilpotent(&g("alt_4").as_subgroup()).unwrap());
    }

    #[test]
    fn cores() {
        assert!(op_prime_core(&g("alt_5"), 2).unwrap().is_trivial());
        assert_eq!(op_prime_core(&g("c3xc5"), 3).unwrap().order_u64(), 5);
        let sa = g("semiaffine_3_2");
        let core = op_prime_core(&sa, 2).unwrap();
        assert!(core.is_normal_in(&sa));
        assert_eq!(core.order_u64() % 2, 1);
    }

    #[test]
    fn minimal_normal_and_q_solvability() {
        let s4 = g("sym_4");
        let mins = minimal_normal_subgroups(&s4).unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order_u64(), 4);
        assert!(is_solvable(&s4));
        assert!(!is_q_solvable(&g("alt_5"), 5).unwrap());
        assert!(is_q_solvable(&g("a5xc7"), 7).unwrap());
        assert!(!is_q_solvable(&g("a5xc7"), 3).unwrap());
        assert!(is_q_solvable(&g("semiaffine_2_5"), 5).unwrap());
    }
}
