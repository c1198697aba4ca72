//! Permutation groups, subgroups and the enumeration-mode element index.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::perm::{Permutation, MAX_DEGREE};
use crate::stabchain::StabChain;

/// Default cap on exhaustive element enumeration.
pub const DEFAULT_ELEMENT_CAP: u64 = 5_000_000;
/// Default cap on the number of cosets in a quotient action.
pub const DEFAULT_QUOTIENT_CAP: u64 = 10_000;

/// A finite group given by permutation generators.
///
/// Immutable once built. The element list is filled lazily by
/// [`PermutationGroup::enumerate`] and shared between threads.
#[derive(Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: BigUint,
    elements: OnceLock<Arc<Elements>>,
}

impl Clone for PermutationGroup {
    fn clone(&self) -> Self {
        let elements = OnceLock::new();
        if let Some(e) = self.elements.get() {
            let _ = elements.set(Arc::clone(e));
        }
        PermutationGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain: self.chain.clone(),
            order: self.order.clone(),
            elements,
        }
    }
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree > MAX_DEGREE {
            return Err(Error::capacity("degree", degree, MAX_DEGREE));
        }
        if degree == 0 && !generators.is_empty() {
            return Err(Error::Malformed(
                "degree 0 with a nonempty generating set".into(),
            ));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.degree() != degree {
                return Err(Error::Malformed(format!(
                    "generator {i} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let chain = StabChain::new(degree, &generators);
        let order = chain.order();
        Ok(PermutationGroup {
            degree,
            generators,
            chain,
            order,
            elements: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    /// Order as a machine integer; enumeration-mode code relies on this.
    pub fn order_u64(&self) -> Option<u64> {
        self.order.to_u64()
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.base()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn is_member(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::Malformed(format!(
                "permutation of degree {} tested against a group of degree {}",
                g.degree(),
                self.degree
            )));
        }
        Ok(self.chain.contains(g))
    }

    pub fn is_abelian(&self) -> bool {
        all_commute(&self.generators)
    }

    /// All elements in lexicographic order of image arrays.
    pub fn enumerate(&self, cap: u64) -> Result<Arc<Elements>> {
        if let Some(e) = self.elements.get() {
            return Ok(Arc::clone(e));
        }
        if self.order > BigUint::from(cap) {
            return Err(Error::capacity("group order", &self.order, cap));
        }
        let built = Arc::new(Elements::from_unsorted(self.chain.elements()));
        Ok(Arc::clone(self.elements.get_or_init(|| built)))
    }

    /// Enumerates with the configured default cap.
    pub fn elements(&self) -> Result<Arc<Elements>> {
        self.enumerate(element_cap())
    }

    /// The whole group viewed as a subgroup of itself.
    pub fn as_subgroup(&self) -> Subgroup {
        Subgroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain: self.chain.clone(),
            order: self.order.clone(),
        }
    }
}

/// Enumeration cap, overridable through `HALLMARK_CAP_ELEMENTS`.
pub fn element_cap() -> u64 {
    std::env::var("HALLMARK_CAP_ELEMENTS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ELEMENT_CAP)
}

pub(crate) fn all_commute(gens: &[Permutation]) -> bool {
    gens.iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
}

/// A subgroup of some ambient permutation group, with its own chain.
#[derive(Clone, Debug)]
pub struct Subgroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: BigUint,
}

impl Subgroup {
    /// Subgroup of `parent` generated by `gens`; every generator must lie in
    /// the parent.
    pub fn new(parent: &PermutationGroup, gens: Vec<Permutation>) -> Result<Self> {
        for (i, g) in gens.iter().enumerate() {
            if !parent.is_member(g)? {
                return Err(Error::Precondition(format!(
                    "subgroup generator {i} ({g}) is not in the parent group"
                )));
            }
        }
        Ok(Self::generated(parent.degree(), gens))
    }

    /// Subgroup generated by `gens` without a parent check.
    pub fn generated(degree: usize, gens: Vec<Permutation>) -> Self {
        let chain = StabChain::new(degree, &gens);
        let order = chain.order();
        Subgroup {
            degree,
            generators: gens,
            chain,
            order,
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::generated(degree, Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn order_u64(&self) -> u64 {
        self.order.to_u64().expect("subgroup order fits u64")
    }

    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    /// True iff every generator of `other` lies in this subgroup.
    pub fn contains_subgroup(&self, other: &Subgroup) -> bool {
        other.order <= self.order && other.generators.iter().all(|g| self.contains(g))
    }

    pub fn same_as(&self, other: &Subgroup) -> bool {
        self.order == other.order && self.contains_subgroup(other)
    }

    pub fn is_abelian(&self) -> bool {
        all_commute(&self.generators)
    }

    /// Normal in `g` by generator conjugation.
    pub fn is_normal_in(&self, g: &PermutationGroup) -> bool {
        g.generators().iter().all(|x| {
            self.generators
                .iter()
                .all(|n| self.contains(&n.conjugate_by(x)))
        })
    }

    /// Promotes to a standalone group.
    pub fn to_group(&self) -> PermutationGroup {
        PermutationGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain: self.chain.clone(),
            order: self.order.clone(),
            elements: OnceLock::new(),
        }
    }

    pub fn elements_sorted(&self) -> Vec<Permutation> {
        let mut els = self.chain.elements();
        els.sort_unstable();
        els
    }
}

/// Sorted element list of a group with O(1) index lookup.
#[derive(Debug)]
pub struct Elements {
    elems: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    orders: Vec<u32>,
}

impl Elements {
    pub fn from_unsorted(mut elems: Vec<Permutation>) -> Self {
        elems.sort_unstable();
        elems.dedup();
        let index = elems
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let orders = elems.iter().map(|p| p.order() as u32).collect();
        Elements {
            elems,
            index,
            orders,
        }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn as_slice(&self) -> &[Permutation] {
        &self.elems
    }

    #[inline]
    pub fn get(&self, i: usize) -> &Permutation {
        &self.elems[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    /// Index of an element known to be in the group.
    #[inline]
    pub fn idx(&self, p: &Permutation) -> usize {
        self.index[p] as usize
    }

    #[inline]
    pub fn element_order(&self, i: usize) -> u64 {
        self.orders[i] as u64
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.idx(&self.elems[i].then(&self.elems[j]))
    }

    pub fn inv(&self, i: usize) -> usize {
        self.idx(&self.elems[i].inverse())
    }

    /// Index of `x^g`.
    pub fn conj(&self, x: usize, g: &Permutation) -> usize {
        self.idx(&self.elems[x].conjugate_by(g))
    }

    /// Closure of a set of element indices under multiplication.
    pub fn closure(&self, gens: &[usize]) -> ElementSet {
        let mut set = ElementSet::with_identity(self);
        set.extend_by(self, gens);
        set
    }
}

/// A subgroup of an enumerated group as a bitset over element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: Vec<u64>,
    members: Vec<u32>,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            bits: vec![0; universe.div_ceil(64)],
            members: Vec::new(),
        }
    }

    pub fn with_identity(els: &Elements) -> Self {
        let mut s = Self::empty(els.len());
        // identity is the lexicographically least element
        s.insert(0);
        s
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) -> bool {
        if self.contains(i) {
            return false;
        }
        self.bits[i / 64] |= 1 << (i % 64);
        self.members.push(i as u32);
        true
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in insertion order.
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn sorted_members(&self) -> Vec<u32> {
        let mut m = self.members.clone();
        m.sort_unstable();
        m
    }

    /// Grows this subgroup to the subgroup generated by it and `gens`.
    pub fn extend_by(&mut self, els: &Elements, gens: &[usize]) {
        let mut all_gens: Vec<usize> = Vec::new();
        for &g in gens {
            if !self.contains(g) {
                all_gens.push(g);
            }
        }
        if all_gens.is_empty() {
            return;
        }
        // existing members also generate; right-multiplying by the full
        // generator list from every member reaches the closure
        let mut gen_perms: Vec<Permutation> = self
            .members
            .iter()
            .filter(|&&m| m != 0)
            .map(|&m| els.get(m as usize).clone())
            .collect();
        if gen_perms.len() > 16 {
            gen_perms.clear();
            gen_perms.extend(self.small_generating_set(els).into_iter().map(|i| els.get(i).clone()));
        }
        gen_perms.extend(all_gens.iter().map(|&g| els.get(g).clone()));
        let mut head = 0;
        let mut queue: Vec<u32> = self.members.clone();
        while head < queue.len() {
            let x = els.get(queue[head] as usize).clone();
            head += 1;
            for s in &gen_perms {
                let y = els.idx(&x.then(s));
                if self.insert(y) {
                    queue.push(y as u32);
                }
            }
        }
    }

    /// A generating set chosen greedily from members in ascending order.
    pub fn small_generating_set(&self, els: &Elements) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut sub = ElementSet::with_identity(els);
        for m in self.sorted_members() {
            let m = m as usize;
            if !sub.contains(m) {
                gens.push(m);
                sub = els.closure(&gens);
                if sub.len() == self.len() {
                    break;
                }
            }
        }
        gens
    }

    /// Conjugate subgroup `self^g`.
    pub fn conjugate(&self, els: &Elements, g: &Permutation) -> ElementSet {
        let mut out = ElementSet::empty(els.len());
        for &m in &self.members {
            out.insert(els.conj(m as usize, g));
        }
        out
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.bits
            .iter()
            .zip(other.bits.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn bits(&self) -> &[u64] {
        &self.bits
    }
}
