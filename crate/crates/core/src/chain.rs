//! Base and strong generating sets via deterministic Schreier-Sims.
//!
//! Level `i` holds the base point `b_i` and the full generating set of the
//! `i`-th stabilizer subgroup (every generator fixes `b_0..b_{i-1}`). Orbits
//! and transversals are extended append-only, so an element that once sifts
//! to the identity keeps doing so; this lets each Schreier generator be
//! checked exactly once. Base points are the smallest point moved by the
//! residue that opens the level, so chains are reproducible.

use num_bigint::BigUint;
use num_traits::One;

use crate::perm::Permutation;

const UNSEEN: u32 = u32::MAX;

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    /// Generators of this level's stabilizer subgroup.
    gens: Vec<Permutation>,
    /// Fundamental orbit in discovery order; `orbit[0] == base`.
    orbit: Vec<usize>,
    /// `transversal[k]` maps `base` to `orbit[k]`.
    transversal: Vec<Permutation>,
    /// Point -> index into `orbit`, or `UNSEEN`.
    position: Vec<u32>,
    /// Schreier pairs `(orbit index, generator index)` inside this rectangle
    /// have been verified; entries are append-only, so they stay verified.
    processed: (usize, usize),
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal: vec![Permutation::identity(degree)],
            position: vec![UNSEEN; degree],
            processed: (0, 0),
        };
        level.position[base] = 0;
        level
    }

    fn transversal_to(&self, point: usize) -> Option<&Permutation> {
        let idx = self.position[point];
        (idx != UNSEEN).then(|| &self.transversal[idx as usize])
    }

    fn has_unprocessed(&self) -> bool {
        self.processed != (self.orbit.len(), self.gens.len())
    }
}

/// A verified base and strong generating set.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
    order: BigUint,
}

impl StabilizerChain {
    /// Runs deterministic Schreier-Sims over the generators. The result is
    /// verified: every Schreier generator of every level sifts to the
    /// identity, and so does every input generator.
    pub fn build(degree: usize, gens: &[Permutation]) -> StabilizerChain {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
            order: BigUint::one(),
        };
        for g in gens {
            assert_eq!(g.degree(), degree, "chain: generator degree mismatch");
            let (residue, lvl) = chain.strip_from(g.clone(), 0);
            if !residue.is_identity() {
                chain.place(residue, lvl);
            }
            chain.close();
        }
        for g in gens {
            assert!(
                chain.sift(g).is_identity(),
                "chain failed to absorb a generator"
            );
        }
        chain.order = chain
            .levels
            .iter()
            .map(|lv| BigUint::from(lv.orbit.len()))
            .product();
        chain
    }

    /// Adds a residue (which fixes the base points of all levels before
    /// `lvl`) as a strong generator of levels `0..=lvl`, appending a level
    /// if needed, and extends the affected orbits.
    fn place(&mut self, residue: Permutation, lvl: usize) {
        debug_assert!(!residue.is_identity());
        if lvl == self.levels.len() {
            let base = residue
                .smallest_moved()
                .expect("non-identity residue moves a point");
            self.levels.push(Level::new(self.degree, base));
        }
        for k in 0..=lvl {
            self.levels[k].gens.push(residue.clone());
            self.extend_orbit(k);
        }
    }

    /// Append-only orbit extension after a generator was added: sweep the
    /// existing points with the new generator, then close the new points
    /// under all generators.
    fn extend_orbit(&mut self, lvl: usize) {
        let level = &mut self.levels[lvl];
        let first_new = level.orbit.len();
        let fresh_gen = level.gens.len() - 1;
        for idx in 0..first_new {
            let g = &level.gens[fresh_gen];
            let gamma = g.apply(level.orbit[idx]);
            if level.position[gamma] == UNSEEN {
                level.position[gamma] = level.orbit.len() as u32;
                let u = level.transversal[idx].compose(g);
                level.orbit.push(gamma);
                level.transversal.push(u);
            }
        }
        let mut next = first_new;
        while next < level.orbit.len() {
            let beta = level.orbit[next];
            for g in 0..level.gens.len() {
                let g = &level.gens[g];
                let gamma = g.apply(beta);
                if level.position[gamma] == UNSEEN {
                    level.position[gamma] = level.orbit.len() as u32;
                    let u = level.transversal[next].compose(g);
                    level.orbit.push(gamma);
                    level.transversal.push(u);
                }
            }
            next += 1;
        }
    }

    /// Processes Schreier pairs until none are left anywhere. Each pair is
    /// visited once; residues are placed and open new pairs.
    fn close(&mut self) {
        loop {
            let Some(lvl) = (0..self.levels.len())
                .rev()
                .find(|&k| self.levels[k].has_unprocessed())
            else {
                return;
            };
            // Snapshot of the unprocessed region; the underlying arrays are
            // append-only, so indices stay valid while we place residues.
            let (done_orbit, done_gens) = self.levels[lvl].processed;
            let orbit_len = self.levels[lvl].orbit.len();
            let gens_len = self.levels[lvl].gens.len();
            for i in 0..orbit_len {
                for j in 0..gens_len {
                    if i < done_orbit && j < done_gens {
                        continue;
                    }
                    let level = &self.levels[lvl];
                    let beta = level.orbit[i];
                    let g = &level.gens[j];
                    let target = g.apply(beta);
                    let u_target = level
                        .transversal_to(target)
                        .expect("orbit closed under its generators");
                    let schreier = level.transversal[i]
                        .compose(g)
                        .compose(&u_target.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, at) = self.strip_from(schreier, lvl + 1);
                    if !residue.is_identity() {
                        self.place(residue, at);
                    }
                }
            }
            self.levels[lvl].processed = (orbit_len, gens_len);
        }
    }

    /// Strips `p` from `start` down. Returns the residue and the level at
    /// which stripping stopped (`levels.len()` if it survived every level).
    fn strip_from(&self, mut p: Permutation, start: usize) -> (Permutation, usize) {
        for (lvl, level) in self.levels.iter().enumerate().skip(start) {
            let image = p.apply(level.base);
            match level.transversal_to(image) {
                Some(u) => p = p.compose(&u.inverse()),
                None => return (p, lvl),
            }
        }
        (p, self.levels.len())
    }

    /// Sifts through the whole chain; members reduce to the identity.
    pub fn sift(&self, p: &Permutation) -> Permutation {
        self.strip_from(p.clone(), 0).0
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.sift(p).is_identity()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Product of the fundamental orbit lengths.
    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|lv| lv.base).collect()
    }

    /// Full element enumeration as products of transversal elements.
    /// The caller is responsible for checking the order first.
    pub fn enumerate(&self) -> Vec<Permutation> {
        let mut elems = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.orbit.len());
            for u in &level.transversal {
                for e in &elems {
                    next.push(e.compose(u));
                }
            }
            elems = next;
        }
        elems
    }

    /// Canonical representative of the right coset `N*g`, where `N` is the
    /// group of this chain: greedily minimises the images of the base
    /// points. Two elements get the same representative iff they lie in the
    /// same right coset.
    pub fn coset_representative(&self, g: &Permutation) -> Permutation {
        assert_eq!(g.degree(), self.degree, "coset rep: degree mismatch");
        let mut rep = g.clone();
        for level in &self.levels {
            let mut best_idx = 0;
            let mut best_val = usize::MAX;
            for (idx, &beta) in level.orbit.iter().enumerate() {
                let val = rep.apply(beta);
                if val < best_val {
                    best_val = val;
                    best_idx = idx;
                }
            }
            rep = level.transversal[best_idx].compose(&rep);
        }
        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, degree: usize) -> Permutation {
        Permutation::parse_cycles(s, degree).unwrap()
    }

    #[test]
    fn trivial_chain() {
        let chain = StabilizerChain::build(4, &[]);
        assert_eq!(*chain.order(), BigUint::one());
        assert!(chain.contains(&Permutation::identity(4)));
        assert!(!chain.contains(&p("(0 1)", 4)));
    }

    #[test]
    fn order_two() {
        let chain = StabilizerChain::build(2, &[p("(0 1)", 2)]);
        assert_eq!(*chain.order(), BigUint::from(2u32));
    }

    #[test]
    fn alternating_five_has_order_sixty() {
        let chain = StabilizerChain::build(5, &[p("(0 1 2 3 4)", 5), p("(0 1 2)", 5)]);
        assert_eq!(*chain.order(), BigUint::from(60u32));
        assert!(!chain.contains(&p("(0 1)", 5)));
        assert!(chain.contains(&p("(0 1)(2 3)", 5)));
    }

    #[test]
    fn symmetric_four() {
        let chain = StabilizerChain::build(4, &[p("(0 1)", 4), p("(0 1 2 3)", 4)]);
        assert_eq!(*chain.order(), BigUint::from(24u32));
        assert!(chain.contains(&p("(0 1 2 3)", 4)));
    }

    #[test]
    fn larger_groups() {
        // S6 and the 60^2 * 2 wreath-like order land exactly
        let s6 = StabilizerChain::build(6, &[p("(0 1)", 6), p("(0 1 2 3 4 5)", 6)]);
        assert_eq!(*s6.order(), BigUint::from(720u32));
        let m = StabilizerChain::build(
            10,
            &[
                p("(0 1 2 3 4)", 10),
                p("(0 1 2)", 10),
                p("(5 6 7 8 9)", 10),
                p("(5 6 7)", 10),
                p("(0 5)(1 6)(2 7)(3 8)(4 9)", 10),
            ],
        );
        assert_eq!(*m.order(), BigUint::from(7200u32));
    }

    #[test]
    fn every_strong_generator_fixes_earlier_base_points() {
        let chain = StabilizerChain::build(6, &[p("(0 1)", 6), p("(0 1 2 3 4 5)", 6)]);
        let base = chain.base();
        for (lvl, level) in chain.levels.iter().enumerate() {
            for g in &level.gens {
                for &b in &base[..lvl] {
                    assert_eq!(g.apply(b), b);
                }
            }
        }
    }

    #[test]
    fn enumeration_matches_order() {
        let chain = StabilizerChain::build(4, &[p("(0 1)", 4), p("(0 1 2 3)", 4)]);
        let elems = chain.enumerate();
        assert_eq!(elems.len(), 24);
        let mut sorted = elems.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 24);
        for e in &elems {
            assert!(chain.contains(e));
        }
    }

    #[test]
    fn coset_representatives_identify_cosets() {
        // N = A4 inside S4: two cosets.
        let n = StabilizerChain::build(4, &[p("(0 1 2)", 4), p("(1 2 3)", 4)]);
        assert_eq!(*n.order(), BigUint::from(12u32));
        let s4 = StabilizerChain::build(4, &[p("(0 1)", 4), p("(0 1 2 3)", 4)]);
        let mut reps: Vec<Permutation> = s4
            .enumerate()
            .iter()
            .map(|g| n.coset_representative(g))
            .collect();
        reps.sort();
        reps.dedup();
        assert_eq!(reps.len(), 2);
        // members of N share the identity coset representative
        let even = n.coset_representative(&Permutation::identity(4));
        assert_eq!(n.coset_representative(&p("(0 1 2)", 4)), even);
        assert_ne!(n.coset_representative(&p("(0 1)", 4)), even);
    }
}
