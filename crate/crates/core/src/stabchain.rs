//! Deterministic Schreier-Sims.
//!
//! The chain is built over the full point sequence `0, 1, .., n-1` and levels
//! with a trivial basic orbit are pruned at the end, so the surviving base is
//! the sequence of smallest points moved by successive stabilizers. Every point
//! that is not a base point is fixed by the stabilizer of all smaller points,
//! which is what makes [`StabChain::canonical_coset_rep`] a greedy scan.

use num_bigint::BigUint;

use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    transversal: Vec<Option<Permutation>>,
    inverse: Vec<Option<Permutation>>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        let mut lvl = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
            inverse: vec![None; degree],
        };
        lvl.rebuild_orbit(degree);
        lvl
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.transversal.iter_mut().for_each(|t| *t = None);
        self.inverse.iter_mut().for_each(|t| *t = None);
        let id = Permutation::identity(degree);
        self.transversal[self.base] = Some(id.clone());
        self.inverse[self.base] = Some(id);
        self.orbit.clear();
        self.orbit.push(self.base);
        let mut head = 0;
        while head < self.orbit.len() {
            let beta = self.orbit[head];
            head += 1;
            for s in &self.gens {
                let gamma = s.apply(beta);
                if self.transversal[gamma].is_none() {
                    let u = self.transversal[beta].as_ref().unwrap().then(s);
                    self.inverse[gamma] = Some(u.inverse());
                    self.transversal[gamma] = Some(u);
                    self.orbit.push(gamma);
                }
            }
        }
    }
}

/// Base and strong generating set of a permutation group.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        if gens.is_empty() || degree == 0 {
            return StabChain {
                degree,
                levels: Vec::new(),
            };
        }
        let mut levels: Vec<Level> = (0..degree).map(|b| Level::new(degree, b)).collect();
        for g in gens {
            let stop = g.first_moved_point().unwrap();
            for lvl in levels.iter_mut().take(stop + 1) {
                lvl.gens.push(g.clone());
            }
        }
        for lvl in levels.iter_mut() {
            if !lvl.gens.is_empty() {
                lvl.rebuild_orbit(degree);
            }
        }

        let mut i = degree as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            match Self::find_failing_schreier_generator(&levels, iu) {
                Some((h, j)) => {
                    for lvl in levels.iter_mut().take(j + 1).skip(iu + 1) {
                        lvl.gens.push(h.clone());
                        lvl.rebuild_orbit(degree);
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }

        levels.retain(|l| l.orbit.len() > 1);
        StabChain { degree, levels }
    }

    /// Tests Schreier generators of level `i` against levels below it; returns
    /// the first residue that does not sift, and the level where it dropped out.
    fn find_failing_schreier_generator(levels: &[Level], i: usize) -> Option<(Permutation, usize)> {
        let lvl = &levels[i];
        for &beta in &lvl.orbit {
            let u_beta = lvl.transversal[beta].as_ref().unwrap();
            for s in &lvl.gens {
                let image = s.apply(beta);
                let schreier = u_beta
                    .then(s)
                    .then(lvl.inverse[image].as_ref().unwrap());
                if schreier.is_identity() {
                    continue;
                }
                let (h, j) = sift_from(levels, i + 1, schreier);
                if !h.is_identity() {
                    return Some((h, j.expect("nonidentity residue must drop out of a full base")));
                }
            }
        }
        None
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Strong generators (generators of the first level).
    pub fn strong_generators(&self) -> &[Permutation] {
        self.levels.first().map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = sift_from(&self.levels, 0, g.clone());
        j.is_none() && h.is_identity()
    }

    /// Lexicographically least element of the right coset `H g`, where `H` is
    /// the group of this chain.
    pub fn canonical_coset_rep(&self, g: &Permutation) -> Permutation {
        let mut x = g.clone();
        for lvl in &self.levels {
            let best = lvl
                .orbit
                .iter()
                .copied()
                .min_by_key(|&beta| x.apply(beta))
                .unwrap();
            if best != lvl.base {
                x = lvl.transversal[best].as_ref().unwrap().then(&x);
            }
        }
        x
    }

    /// Every element, unsorted.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut acc = vec![Permutation::identity(self.degree)];
        for lvl in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(acc.len() * lvl.orbit.len());
            for x in &acc {
                for &beta in &lvl.orbit {
                    next.push(x.then(lvl.transversal[beta].as_ref().unwrap()));
                }
            }
            acc = next;
        }
        acc
    }
}

/// Sifts `g` through `levels[start..]`; returns the residue and the index of
/// the level where it left the chain (`None` if it passed every level).
fn sift_from(levels: &[Level], start: usize, mut g: Permutation) -> (Permutation, Option<usize>) {
    for (j, lvl) in levels.iter().enumerate().skip(start) {
        let beta = g.apply(lvl.base);
        if beta == lvl.base {
            continue;
        }
        match &lvl.inverse[beta] {
            Some(inv) => g = g.then(inv),
            None => return (g, Some(j)),
        }
    }
    (g, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn cyc(n: usize, c: &[usize]) -> Permutation {
        Permutation::from_cycles(n, &[c]).unwrap()
    }

    #[test]
    fn small_orders() {
        let a5 = StabChain::new(5, &[cyc(5, &[0, 1, 2, 3, 4]), cyc(5, &[2, 3, 4])]);
        assert_eq!(a5.order(), BigUint::from(60u32));
        assert_eq!(a5.base(), vec![0, 1, 2]);
        let s4 = StabChain::new(4, &[cyc(4, &[0, 1]), cyc(4, &[0, 1, 2, 3])]);
        assert_eq!(s4.order(), BigUint::from(24u32));
        let triv = StabChain::new(3, &[]);
        assert_eq!(triv.order(), BigUint::from(1u32));
        assert!(triv.contains(&Permutation::identity(3)));
    }

    #[test]
    fn membership() {
        let a5 = StabChain::new(5, &[cyc(5, &[0, 1, 2, 3, 4]), cyc(5, &[2, 3, 4])]);
        assert!(!a5.contains(&cyc(5, &[0, 1])));
        assert!(a5.contains(&cyc(5, &[0, 1, 2])));
        assert!(a5.contains(&Permutation::identity(5)));
    }

    #[test]
    fn elements_are_distinct_and_complete() {
        let s4 = StabChain::new(4, &[cyc(4, &[0, 1]), cyc(4, &[0, 1, 2, 3])]);
        let els: HashSet<_> = s4.elements().into_iter().collect();
        assert_eq!(els.len(), 24);
    }

    #[test]
    fn coset_rep_is_least_in_coset() {
        // H = <(0 1 2)> inside S4
        let h = StabChain::new(4, &[cyc(4, &[0, 1, 2])]);
        let hs = h.elements();
        let s4 = StabChain::new(4, &[cyc(4, &[0, 1]), cyc(4, &[0, 1, 2, 3])]);
        for g in s4.elements() {
            let least = hs.iter().map(|x| x.then(&g)).min().unwrap();
            assert_eq!(h.canonical_coset_rep(&g), least);
        }
    }
}
