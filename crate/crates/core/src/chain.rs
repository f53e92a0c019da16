//! Deterministic Schreier-Sims stabilizer chains.
//!
//! The chain certifies the group order as the product of fundamental orbit
//! lengths, answers membership by sifting, and enumerates all elements in a
//! fixed order (identity first), which the conjugacy-class sweep relies on.

use num::bigint::BigUint;
use num::One;

use crate::perm::Perm;

#[derive(Clone, Debug)]
struct Level {
    base: u16,
    /// Strong generators assigned to this level (they fix all earlier base points).
    gens: Vec<Perm>,
    /// orbit[i] is a point, transversal[i] maps `base` to it; orbit[0] = base.
    orbit: Vec<u16>,
    transversal: Vec<Perm>,
    /// position of each point in `orbit`, or u32::MAX
    orbit_pos: Vec<u32>,
}

impl Level {
    fn new(base: u16, degree: usize) -> Self {
        Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: Vec::new(),
            orbit_pos: vec![u32::MAX; degree],
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Perm]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        for g in gens {
            chain.add_generator(g.clone());
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<u16> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> BigUint {
        let mut acc = BigUint::one();
        for l in &self.levels {
            acc *= BigUint::from(l.orbit.len());
        }
        acc
    }

    pub fn contains(&self, g: &Perm) -> bool {
        debug_assert_eq!(g.degree(), self.degree);
        let (_, residue) = self.strip(g.clone(), 0);
        residue.is_identity()
    }

    /// Sifts `g` through levels `from..`, returning the level reached and the residue.
    fn strip(&self, mut g: Perm, from: usize) -> (usize, Perm) {
        for lvl in from..self.levels.len() {
            let level = &self.levels[lvl];
            let image = g.apply(level.base);
            let pos = level.orbit_pos[image as usize];
            if pos == u32::MAX {
                return (lvl, g);
            }
            g = g.compose(&level.transversal[pos as usize].inverse());
        }
        (self.levels.len(), g)
    }

    fn add_generator(&mut self, g: Perm) {
        let (lvl, residue) = self.strip(g, 0);
        if residue.is_identity() {
            return;
        }
        self.install(lvl, residue);
        for l in (0..=lvl.min(self.levels.len() - 1)).rev() {
            self.close_level(l);
        }
    }

    /// Adds a residue as a strong generator at `lvl`, creating the level if needed.
    fn install(&mut self, lvl: usize, residue: Perm) {
        if lvl == self.levels.len() {
            let base = residue
                .first_moved()
                .expect("residue must move a point");
            self.levels.push(Level::new(base, self.degree));
        }
        self.levels[lvl].gens.push(residue);
    }

    /// Union of strong generators stored at levels `>= lvl`.
    fn gens_from(&self, lvl: usize) -> Vec<Perm> {
        self.levels[lvl..]
            .iter()
            .flat_map(|l| l.gens.iter().cloned())
            .collect()
    }

    fn recompute_orbit(&mut self, lvl: usize) {
        let gens = self.gens_from(lvl);
        let level = &mut self.levels[lvl];
        level.orbit.clear();
        level.transversal.clear();
        level.orbit_pos.iter_mut().for_each(|p| *p = u32::MAX);
        level.orbit.push(level.base);
        level.transversal.push(Perm::identity(self.degree));
        level.orbit_pos[level.base as usize] = 0;
        let mut i = 0usize;
        while i < level.orbit.len() {
            let point = level.orbit[i];
            for g in &gens {
                let image = g.apply(point);
                if level.orbit_pos[image as usize] == u32::MAX {
                    level.orbit_pos[image as usize] = level.orbit.len() as u32;
                    let rep = level.transversal[i].compose(g);
                    level.orbit.push(image);
                    level.transversal.push(rep);
                }
            }
            i += 1;
        }
    }

    /// Makes the chain strong below `lvl`: every Schreier generator of this level
    /// sifts to the identity through the deeper levels.
    fn close_level(&mut self, lvl: usize) {
        self.recompute_orbit(lvl);
        let mut oi = 0usize;
        'outer: while oi < self.levels[lvl].orbit.len() {
            let gens = self.gens_from(lvl);
            for g in &gens {
                let (point_rep, image) = {
                    let level = &self.levels[lvl];
                    (level.transversal[oi].clone(), g.apply(level.orbit[oi]))
                };
                let image_rep = {
                    let level = &self.levels[lvl];
                    let pos = level.orbit_pos[image as usize] as usize;
                    level.transversal[pos].clone()
                };
                let schreier = point_rep.compose(g).compose(&image_rep.inverse());
                let (j, residue) = self.strip(schreier, lvl + 1);
                if !residue.is_identity() {
                    self.install(j, residue);
                    for l in ((lvl + 1)..=j.min(self.levels.len() - 1)).rev() {
                        self.close_level(l);
                    }
                    // New strong generators at deeper levels never shrink what
                    // already sifted; restart this orbit point to stay simple.
                    continue 'outer;
                }
            }
            oi += 1;
        }
    }

    /// Coset representative count at each level.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Iterates over all group elements in a fixed mixed-radix order; the first
    /// element is the identity.
    pub fn elements(&self) -> ElementIter<'_> {
        ElementIter {
            chain: self,
            counters: vec![0; self.levels.len()],
            done: false,
        }
    }
}

pub struct ElementIter<'a> {
    chain: &'a StabChain,
    counters: Vec<usize>,
    done: bool,
}

impl<'a> Iterator for ElementIter<'a> {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        if self.done {
            return None;
        }
        let mut g = Perm::identity(self.chain.degree);
        // deepest level first, so g = u_deep * ... * u_0 with our composition
        for (lvl, &c) in self.counters.iter().enumerate().rev() {
            g = g.compose(&self.chain.levels[lvl].transversal[c]);
        }
        // increment mixed-radix counter, level 0 fastest
        let mut lvl = 0usize;
        loop {
            if lvl == self.counters.len() {
                self.done = true;
                break;
            }
            self.counters[lvl] += 1;
            if self.counters[lvl] < self.chain.levels[lvl].orbit.len() {
                break;
            }
            self.counters[lvl] = 0;
            lvl += 1;
        }
        Some(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;
    use std::collections::HashSet;

    fn sym_gens(n: usize) -> Vec<Perm> {
        if n < 2 {
            return vec![Perm::identity(n.max(1))];
        }
        let mut cycle: Vec<u16> = (1..n as u16).collect();
        cycle.push(0);
        vec![
            Perm::from_images({
                let mut v: Vec<u16> = (0..n as u16).collect();
                v.swap(0, 1);
                v
            })
            .unwrap(),
            Perm::from_images(cycle).unwrap(),
        ]
    }

    /// Independent order oracle: breadth-first closure of the generators.
    fn enumerate_all(gens: &[Perm]) -> HashSet<Perm> {
        let degree = gens[0].degree();
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut frontier = vec![Perm::identity(degree)];
        seen.insert(Perm::identity(degree));
        while let Some(g) = frontier.pop() {
            for h in gens {
                let gh = g.compose(h);
                if seen.insert(gh.clone()) {
                    frontier.push(gh);
                }
            }
        }
        seen
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 1..=7 {
            let gens = sym_gens(n);
            let chain = StabChain::new(gens[0].degree(), &gens);
            let expected = (1..=n as u64).product::<u64>();
            assert_eq!(chain.order(), BigUint::from(expected), "S_{n}");
        }
    }

    #[test]
    fn large_symmetric_order_is_exact() {
        let gens = sym_gens(20);
        let chain = StabChain::new(20, &gens);
        let expected: BigUint = (1..=20u64).map(BigUint::from).product();
        assert_eq!(chain.order(), expected);
    }

    #[test]
    fn chain_order_matches_enumeration_oracle() {
        // A4 from two generators
        let a = Perm::parse_cycles("(1 2 3)", 4).unwrap();
        let b = Perm::parse_cycles("(2 3 4)", 4).unwrap();
        let chain = StabChain::new(4, &[a.clone(), b.clone()]);
        let all = enumerate_all(&[a, b]);
        assert_eq!(chain.order(), BigUint::from(all.len()));
        assert_eq!(all.len(), 12);

        // dihedral of order 10
        let r = Perm::parse_cycles("(1 2 3 4 5)", 5).unwrap();
        let s = Perm::parse_cycles("(2 5)(3 4)", 5).unwrap();
        let chain = StabChain::new(5, &[r.clone(), s.clone()]);
        let all = enumerate_all(&[r, s]);
        assert_eq!(chain.order(), BigUint::from(all.len()));
        assert_eq!(all.len(), 10);
    }

    #[test]
    fn membership_and_enumeration() {
        let a = Perm::parse_cycles("(1 2 3)", 4).unwrap();
        let b = Perm::parse_cycles("(2 3 4)", 4).unwrap();
        let chain = StabChain::new(4, &[a.clone(), b.clone()]);
        let odd = Perm::parse_cycles("(1 2)", 4).unwrap();
        assert!(chain.contains(&a));
        assert!(chain.contains(&a.compose(&b)));
        assert!(!chain.contains(&odd));

        let listed: Vec<Perm> = chain.elements().collect();
        assert_eq!(listed.len(), 12);
        assert!(listed[0].is_identity());
        let set: HashSet<Perm> = listed.into_iter().collect();
        assert_eq!(set, enumerate_all(&[a, b]));
    }

    #[test]
    fn trivial_group() {
        let chain = StabChain::new(3, &[Perm::identity(3)]);
        assert_eq!(chain.order(), BigUint::one());
        let all: Vec<Perm> = chain.elements().collect();
        assert_eq!(all.len(), 1);
        assert!(all[0].is_identity());
    }
}
