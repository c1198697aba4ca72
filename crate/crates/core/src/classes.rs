//! Conjugacy classes by exhaustive orbit computation, centralizer orders,
//! and the p-part / p'-part split of an element.

use std::sync::Arc;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Elements, PermutationGroup};
use crate::numtheory::{prime_divisors_big, split_p};
use crate::perm::Permutation;

#[derive(Clone, Debug, Serialize)]
pub struct ConjClass {
    #[serde(serialize_with = "ser_perm")]
    pub representative: Permutation,
    #[serde(skip)]
    pub rep_index: usize,
    pub size: u64,
    pub element_order: u64,
}

fn ser_perm<S: serde::Serializer>(p: &Permutation, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.cycle_notation())
}

#[derive(Clone, Debug)]
pub struct ClassTable {
    order: u64,
    classes: Vec<ConjClass>,
    class_of: Vec<u32>,
    elements: Arc<Elements>,
}

/// Partition `g` into conjugacy classes. Classes are listed by their
/// lexicographically least member, which is also the representative.
pub fn class_table(g: &PermutationGroup) -> Result<ClassTable> {
    let els = g.elements()?;
    let n = els.len();
    let mut class_of = vec![u32::MAX; n];
    let mut classes = Vec::new();
    let gens = g.generators();
    for start in 0..n {
        if class_of[start] != u32::MAX {
            continue;
        }
        let k = classes.len() as u32;
        class_of[start] = k;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for s in gens {
                let y = els.conj(x, s);
                if class_of[y] == u32::MAX {
                    class_of[y] = k;
                    orbit.push(y);
                }
            }
        }
        classes.push(ConjClass {
            representative: els.get(start).clone(),
            rep_index: start,
            size: orbit.len() as u64,
            element_order: els.element_order(start),
        });
    }
    Ok(ClassTable {
        order: n as u64,
        classes,
        class_of,
        elements: els,
    })
}

impl ClassTable {
    pub fn group_order(&self) -> u64 {
        self.order
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn elements(&self) -> &Arc<Elements> {
        &self.elements
    }

    /// Class index of an element index.
    pub fn class_of_index(&self, i: usize) -> usize {
        self.class_of[i] as usize
    }

    pub fn class_of(&self, x: &Permutation) -> Option<usize> {
        self.elements.index_of(x).map(|i| self.class_of_index(i))
    }

    pub fn centralizer_order(&self, k: usize) -> u64 {
        self.order / self.classes[k].size
    }

    /// Class containing `rep^p` for each class.
    pub fn power_map(&self, p: u64) -> Vec<usize> {
        self.classes
            .iter()
            .map(|c| self.class_of(&c.representative.pow(p)).expect("closed under powers"))
            .collect()
    }

    /// Class of inverses for each class.
    pub fn inverse_classes(&self) -> Vec<usize> {
        self.classes
            .iter()
            .map(|c| self.class_of(&c.representative.inverse()).expect("closed under inverses"))
            .collect()
    }

    pub fn is_real(&self, k: usize) -> bool {
        let c = &self.classes[k];
        self.class_of(&c.representative.inverse()) == Some(k)
    }

    pub fn primes(&self) -> Vec<u64> {
        prime_divisors_big(&BigUint::from(self.order))
    }

    /// Indices of classes of nontrivial p-elements.
    pub fn p_elements(&self, p: u64) -> Vec<usize> {
        p_element_classes(self.classes.iter().map(|c| c.element_order), p)
    }
}

/// Indices whose order is a positive power of `p`.
pub fn p_element_classes(orders: impl Iterator<Item = u64>, p: u64) -> Vec<usize> {
    orders
        .enumerate()
        .filter(|&(_, o)| o > 1 && split_p(o, p).1 == 1)
        .map(|(i, _)| i)
        .collect()
}

pub fn p_elements(t: &ClassTable, p: u64) -> Vec<usize> {
    t.p_elements(p)
}

/// `|C_G(x)|` by counting commuting elements.
pub fn centralizer_order(g: &PermutationGroup, x: &Permutation) -> Result<u64> {
    if !g.is_member(x)? {
        return Err(Error::Precondition(format!("{x} is not a member of the group")));
    }
    let els = g.elements()?;
    Ok(els.as_slice().iter().filter(|y| y.commutes_with(x)).count() as u64)
}

fn inverse_mod(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    (1..m).find(|&t| a % m * t % m == 1).expect("coprime")
}

/// Exponents `(e_p, e_p')` with `x^e_p` the p-part and `x^e_p'` the p'-part.
fn split_exponents(order: u64, p: u64) -> (u64, u64) {
    let (pa, m) = split_p(order, p);
    let e_p = m * inverse_mod(m, pa);
    let e_q = pa * inverse_mod(pa, m);
    (e_p % order, e_q % order)
}

pub fn p_part(x: &Permutation, p: u64) -> Permutation {
    let (e, _) = split_exponents(x.order(), p);
    x.pow(e)
}

pub fn p_prime_part(x: &Permutation, p: u64) -> Permutation {
    let (_, e) = split_exponents(x.order(), p);
    x.pow(e)
}
