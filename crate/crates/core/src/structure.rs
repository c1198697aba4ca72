//! Structural primitives that work from generators alone: normal closures,
//! the action on cosets of a normal subgroup, and derived series.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::group::{PermutationGroup, Subgroup, DEFAULT_QUOTIENT_CAP};
use crate::perm::Permutation;

/// Smallest normal subgroup of `g` containing `seeds`.
pub fn normal_closure(g: &PermutationGroup, seeds: &[Permutation]) -> Result<Subgroup> {
    for (i, s) in seeds.iter().enumerate() {
        if !g.is_member(s)? {
            return Err(Error::Precondition(format!(
                "seed {i} ({s}) is not a member of the group"
            )));
        }
    }
    Ok(normal_closure_unchecked(g, seeds))
}

pub(crate) fn normal_closure_unchecked(g: &PermutationGroup, seeds: &[Permutation]) -> Subgroup {
    let mut gens: Vec<Permutation> = seeds.iter().filter(|s| !s.is_identity()).cloned().collect();
    let mut sub = Subgroup::generated(g.degree(), gens.clone());
    let mut head = 0;
    while head < gens.len() {
        let n = gens[head].clone();
        head += 1;
        for x in g.generators() {
            let c = n.conjugate_by(x);
            if !sub.contains(&c) {
                gens.push(c);
                sub = Subgroup::generated(g.degree(), gens.clone());
            }
        }
    }
    sub
}

/// The action of `g` on the right cosets of the normal subgroup `n`.
pub fn coset_action_quotient(g: &PermutationGroup, n: &Subgroup) -> Result<PermutationGroup> {
    coset_action_quotient_capped(g, n, DEFAULT_QUOTIENT_CAP)
}

pub fn coset_action_quotient_capped(
    g: &PermutationGroup,
    n: &Subgroup,
    cap: u64,
) -> Result<PermutationGroup> {
    if !n.is_normal_in(g) {
        return Err(Error::Precondition("subgroup is not normal".into()));
    }
    let index = g.order() / n.order();
    let index_u = index
        .to_u64()
        .filter(|&i| i <= cap)
        .ok_or_else(|| Error::capacity("quotient index", &index, cap))?;
    let chain = n.chain();
    let id = g.identity();
    let mut reps = vec![chain.canonical_coset_rep(&id)];
    let mut lookup: HashMap<Permutation, usize> = HashMap::new();
    lookup.insert(reps[0].clone(), 0);
    let mut images: Vec<Vec<usize>> = vec![Vec::new(); g.generators().len()];
    let mut head = 0;
    while head < reps.len() {
        let r = reps[head].clone();
        for (k, x) in g.generators().iter().enumerate() {
            let c = chain.canonical_coset_rep(&r.then(x));
            let next = reps.len();
            let j = *lookup.entry(c.clone()).or_insert_with(|| {
                reps.push(c);
                next
            });
            images[k].push(j);
        }
        head += 1;
    }
    debug_assert_eq!(reps.len() as u64, index_u);
    let degree = reps.len();
    let gens = images
        .into_iter()
        .map(Permutation::from_images)
        .collect::<Result<Vec<_>>>()?;
    PermutationGroup::new(degree, gens)
}

/// The commutator subgroup of `h` (given as a subgroup of a group of the
/// same degree), as the normal closure of generator commutators in `h`.
pub fn derived_subgroup(h: &Subgroup) -> Subgroup {
    let hg = h.to_group();
    let gens = h.generators();
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = a.inverse().then(&b.inverse()).then(a).then(b);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure_unchecked(&hg, &comms)
}

/// Derived series `G = G(0) > G(1) > ...`, stopping when it stabilizes.
pub fn derived_series(g: &PermutationGroup) -> Vec<Subgroup> {
    let mut series = vec![g.as_subgroup()];
    loop {
        let last = series.last().unwrap();
        let next = derived_subgroup(last);
        if next.order() == last.order() {
            break;
        }
        series.push(next);
    }
    series
}

pub fn is_solvable(g: &PermutationGroup) -> bool {
    derived_series(g)
        .last()
        .map(|s| s.order() == &BigUint::from(1u32))
        .unwrap_or(true)
}

pub fn is_solvable_subgroup(h: &Subgroup) -> bool {
    is_solvable(&h.to_group())
}
