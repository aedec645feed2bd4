//! Brute-force oracles for the integration tests.
//!
//! Everything here works on explicit element sets built by multiplicative
//! closure of generators, independent of the stabilizer-chain machinery it
//! is used to check: membership is array search, subgroups are sorted
//! element lists, and the structural values are computed from the full
//! normal-subgroup lattice by definition.

#![allow(dead_code)]

use length_lab::group::PermGroup;
use length_lab::perm::Permutation;

/// A group given by its complete, sorted element list.
#[derive(Clone, Debug)]
pub struct BruteGroup {
    pub degree: usize,
    pub gens: Vec<Permutation>,
    pub elements: Vec<Permutation>,
}

impl BruteGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

/// Multiplicative closure of the generators, by brute force.
pub fn brute_closure(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let mut seen: std::collections::BTreeSet<Permutation> = Default::default();
    seen.insert(Permutation::identity(degree));
    let mut frontier: Vec<Permutation> = vec![Permutation::identity(degree)];
    while let Some(x) = frontier.pop() {
        for s in gens {
            let y = x.compose(s);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Builds the brute-force view of a group from its generators only.
pub fn brute_group(g: &PermGroup) -> BruteGroup {
    BruteGroup {
        degree: g.degree(),
        gens: g.generators().to_vec(),
        elements: brute_closure(g.degree(), g.generators()),
    }
}

/// Conjugacy classes by orbit closure under generator conjugation.
pub fn brute_classes(bg: &BruteGroup) -> Vec<Vec<Permutation>> {
    let mut visited = vec![false; bg.elements.len()];
    let mut classes = Vec::new();
    for start in 0..bg.elements.len() {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut members = vec![bg.elements[start].clone()];
        let mut at = 0;
        while at < members.len() {
            for s in &bg.gens {
                let c = members[at].conjugated_by(s);
                let idx = bg.elements.binary_search(&c).expect("closed under conjugation");
                if !visited[idx] {
                    visited[idx] = true;
                    members.push(c);
                }
            }
            at += 1;
        }
        members.sort();
        classes.push(members);
    }
    classes
}

/// Normal closure of one element as an element set.
pub fn brute_normal_closure(bg: &BruteGroup, x: &Permutation) -> Vec<Permutation> {
    let mut seeds = vec![x.clone()];
    loop {
        let closed = brute_closure(bg.degree, &seeds);
        let mut grew = false;
        let mut next = seeds.clone();
        for t in &closed {
            for s in &bg.gens {
                let c = t.conjugated_by(s);
                if closed.binary_search(&c).is_err() {
                    next.push(c);
                    grew = true;
                }
            }
        }
        if !grew {
            return closed;
        }
        next.sort();
        next.dedup();
        seeds = next;
    }
}

/// Join of two normal subgroups inside the ambient group.
fn join_sets(degree: usize, a: &[Permutation], b: &[Permutation]) -> Vec<Permutation> {
    let gens: Vec<Permutation> = a.iter().chain(b.iter()).cloned().collect();
    brute_closure(degree, &gens)
}

/// The full normal-subgroup lattice: all joins of normal closures of class
/// representatives, as sorted element lists ordered by (size, elements).
pub fn brute_normal_lattice(bg: &BruteGroup) -> Vec<Vec<Permutation>> {
    let classes = brute_classes(bg);
    let mut members: Vec<Vec<Permutation>> = vec![vec![Permutation::identity(bg.degree)]];
    let mut atoms = Vec::new();
    for class in &classes {
        let rep = &class[0];
        if rep.is_identity() {
            continue;
        }
        let closure = brute_normal_closure(bg, rep);
        if !members.contains(&closure) {
            members.push(closure.clone());
        }
        atoms.push(closure);
    }
    // close under pairwise joins
    loop {
        let mut added = false;
        let snapshot = members.clone();
        for m in &snapshot {
            for a in &atoms {
                let j = join_sets(bg.degree, m, a);
                if !members.contains(&j) {
                    members.push(j);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    members.sort_by(|x, y| (x.len(), x).cmp(&(y.len(), y)));
    members
}

/// Greedy small generating set of an element set.
pub fn brute_generating_set(degree: usize, set: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut span = vec![Permutation::identity(degree)];
    for e in set {
        if span.binary_search(e).is_err() {
            gens.push(e.clone());
            span = brute_closure(degree, &gens);
        }
    }
    gens
}

/// Subgroup generated by all commutators `[a, b]` over the two sets. When
/// both sets are normal, the commutator set is conjugation-closed, so the
/// multiplicative closure is the commutator subgroup itself.
fn brute_commutator_span(
    degree: usize,
    left: &[Permutation],
    right: &[Permutation],
) -> Vec<Permutation> {
    let mut comms: std::collections::BTreeSet<Permutation> = Default::default();
    for a in left {
        for b in right {
            comms.insert(a.commutator(b));
        }
    }
    let seeds: Vec<Permutation> = comms.into_iter().collect();
    brute_closure(degree, &seeds)
}

/// Set-based solubility: derived series over all element pairs.
pub fn brute_is_soluble(degree: usize, set: &[Permutation]) -> bool {
    let mut current = set.to_vec();
    loop {
        let next = brute_commutator_span(degree, &current, &current);
        if next.len() == current.len() {
            return current.len() == 1;
        }
        current = next;
    }
}

/// Set-based nilpotency: lower central series over all element pairs.
pub fn brute_is_nilpotent(degree: usize, set: &[Permutation]) -> bool {
    let mut current = set.to_vec();
    loop {
        let next = brute_commutator_span(degree, &current, set);
        if next.len() == current.len() {
            return current.len() == 1;
        }
        current = next;
    }
}

/// Largest soluble member of the normal lattice.
pub fn brute_radical(bg: &BruteGroup, lattice: &[Vec<Permutation>]) -> Vec<Permutation> {
    let soluble: Vec<&Vec<Permutation>> = lattice
        .iter()
        .filter(|m| brute_is_soluble(bg.degree, m))
        .collect();
    let best = soluble
        .iter()
        .max_by_key(|m| m.len())
        .expect("trivial subgroup is soluble");
    // the largest soluble normal subgroup contains every other one
    for m in &soluble {
        for e in m.iter() {
            assert!(best.binary_search(e).is_ok(), "soluble radical not unique");
        }
    }
    (*best).clone()
}

/// Largest nilpotent member of the normal lattice.
pub fn brute_fitting(bg: &BruteGroup, lattice: &[Vec<Permutation>]) -> Vec<Permutation> {
    let nilpotent: Vec<&Vec<Permutation>> = lattice
        .iter()
        .filter(|m| brute_is_nilpotent(bg.degree, m))
        .collect();
    let best = nilpotent
        .iter()
        .max_by_key(|m| m.len())
        .expect("trivial subgroup is nilpotent");
    for m in &nilpotent {
        for e in m.iter() {
            assert!(best.binary_search(e).is_ok(), "Fitting subgroup not unique");
        }
    }
    (*best).clone()
}

/// A maximal chain of the normal lattice: a chief series.
pub fn brute_chief_series(bg: &BruteGroup, lattice: &[Vec<Permutation>]) -> Vec<Vec<Permutation>> {
    let mut series = vec![vec![Permutation::identity(bg.degree)]];
    while series.last().unwrap().len() != bg.order() {
        let current = series.last().unwrap();
        let above: Vec<&Vec<Permutation>> = lattice
            .iter()
            .filter(|m| {
                m.len() > current.len() && current.iter().all(|e| m.binary_search(e).is_ok())
            })
            .collect();
        // inclusion-minimal member above the current term; the lattice is
        // ordered by size, so the first with no smaller member between works
        let next = above
            .iter()
            .find(|h| {
                !above.iter().any(|n| {
                    n.len() > current.len()
                        && n.len() < h.len()
                        && n.iter().all(|e| h.binary_search(e).is_ok())
                })
            })
            .expect("lattice has a member above a proper term");
        series.push((*next).clone());
    }
    series
}

/// Definitional generalized Fitting subgroup: all elements inducing inner
/// automorphisms on every chief factor, searched over the whole factor.
pub fn brute_fstar(bg: &BruteGroup, chief: &[Vec<Permutation>]) -> Vec<Permutation> {
    struct Factor {
        below: Vec<Permutation>,
        above: Vec<Permutation>,
        above_gens: Vec<Permutation>,
        abelian: bool,
    }
    let mut factors = Vec::new();
    for w in chief.windows(2) {
        let (below, above) = (w[0].clone(), w[1].clone());
        let above_gens = brute_generating_set(bg.degree, &above);
        let abelian = above_gens.iter().all(|a| {
            above_gens
                .iter()
                .all(|b| below.binary_search(&a.commutator(b)).is_ok())
        });
        factors.push(Factor {
            below,
            above,
            above_gens,
            abelian,
        });
    }
    let centralizes = |factor: &Factor, y: &Permutation| {
        factor
            .above_gens
            .iter()
            .all(|h| factor.below.binary_search(&y.commutator(h)).is_ok())
    };
    let mut members = Vec::new();
    'next_element: for g in &bg.elements {
        for factor in &factors {
            let ok = if factor.abelian {
                centralizes(factor, g)
            } else if factor.above.binary_search(g).is_ok() {
                true
            } else {
                factor
                    .above
                    .iter()
                    .any(|t| centralizes(factor, &g.compose(&t.inverse())))
            };
            if !ok {
                continue 'next_element;
            }
        }
        members.push(g.clone());
    }
    members
}

// ---------------------------------------------------------------------------
// Deterministic pseudo-randomness for the sampling-style invariants.
// ---------------------------------------------------------------------------

pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    /// Random word in the generators, of length 1..=20.
    pub fn random_word(&mut self, degree: usize, gens: &[Permutation]) -> Permutation {
        let mut acc = Permutation::identity(degree);
        if gens.is_empty() {
            return acc;
        }
        let len = 1 + self.below(20);
        for _ in 0..len {
            acc = acc.compose(&gens[self.below(gens.len())]);
        }
        acc
    }

    /// Uniformly random permutation of the given degree.
    pub fn random_permutation(&mut self, degree: usize) -> Permutation {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for i in (1..degree).rev() {
            let j = self.below(i + 1);
            images.swap(i, j);
        }
        Permutation::from_images(images).expect("shuffle is a bijection")
    }
}

/// Loads and elaborates the shipped standard corpus.
pub fn standard_corpus() -> Vec<length_lab::corpus::ElaboratedEntry> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpora/standard.corpus");
    let text = std::fs::read_to_string(path).expect("standard corpus present");
    length_lab::corpus::parse_corpus(&text)
        .expect("standard corpus parses")
        .iter()
        .map(|e| length_lab::corpus::elaborate(e).expect("standard corpus elaborates"))
        .collect()
}
