//! Subgroup-level algebra: normal closures, commutator subgroups, derived and
//! lower central series, conjugacy classes, centralizers.
//!
//! Everything here is exact. Conjugacy classes and centralizers enumerate the
//! element set and therefore honour the enumeration limit; the closure-based
//! operations only need membership tests and work at chain scale.

use num_bigint::BigUint;

use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::series::{FactorTag, SeriesKind, SeriesRecord};
use crate::Limits;

/// A subgroup of a fixed parent group, carrying its own chain.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: PermGroup,
    group: PermGroup,
}

impl Subgroup {
    /// Builds a subgroup after checking every generator lies in `parent`.
    pub fn new(parent: PermGroup, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if !parent.checked_contains(g)? {
                return Err(Error::invalid(format!(
                    "generator {g} is not an element of the parent group"
                )));
            }
        }
        let group = PermGroup::new(parent.degree(), generators)?;
        Ok(Subgroup { parent, group })
    }

    /// Wraps generators known to lie in `parent` (no membership test).
    pub(crate) fn from_group_unchecked(parent: PermGroup, group: PermGroup) -> Self {
        debug_assert_eq!(parent.degree(), group.degree());
        Subgroup { parent, group }
    }

    pub fn trivial(parent: PermGroup) -> Self {
        let group = PermGroup::trivial(parent.degree());
        Subgroup { parent, group }
    }

    /// The parent group as a subgroup of itself.
    pub fn whole(parent: PermGroup) -> Self {
        let group = parent.clone();
        Subgroup { parent, group }
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    /// The subgroup as a group in its own right.
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn generators(&self) -> &[Permutation] {
        self.group.generators()
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn order(&self) -> BigUint {
        self.group.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.group.is_trivial()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.group.contains(p)
    }

    pub fn contains_subgroup(&self, other: &Subgroup) -> bool {
        other.generators().iter().all(|g| self.group.contains(g))
    }

    /// Set equality of the underlying groups.
    pub fn same_elements(&self, other: &Subgroup) -> bool {
        self.group.equals(&other.group)
    }

    /// True when both handles refer to the same parent group value.
    pub fn shares_parent_with(&self, other: &Subgroup) -> bool {
        self.parent.same_handle(&other.parent) || self.parent.equals(&other.parent)
    }
}

/// Greedy span: adjoin elements that are not yet generated. Keeps generator
/// lists short when a subgroup is defined by an element filter.
pub(crate) fn span_of_elements<'a, I>(degree: usize, elems: I) -> PermGroup
where
    I: IntoIterator<Item = &'a Permutation>,
{
    let mut gens: Vec<Permutation> = Vec::new();
    let mut chain = StabilizerChain::build(degree, &gens);
    for e in elems {
        if !e.is_identity() && !chain.contains(e) {
            gens.push(e.clone());
            chain = StabilizerChain::build(degree, &gens);
        }
    }
    PermGroup::with_chain(degree, gens, chain)
}

/// Subgroup generated by the union of generator sets inside a common parent.
pub fn join(parent: &PermGroup, parts: &[&Subgroup]) -> Subgroup {
    let gens = parts.iter().flat_map(|s| s.generators().iter());
    let group = span_of_elements(parent.degree(), gens);
    Subgroup::from_group_unchecked(parent.clone(), group)
}

/// Smallest subgroup of `g` containing `seeds` and closed under conjugation
/// by `g`: conjugate, sift, adjoin until stable. The generating set is kept
/// reduced by greedy spanning, so the intermediate chains stay small.
pub fn normal_closure(g: &PermGroup, seeds: &[Permutation]) -> Result<Subgroup> {
    for s in seeds {
        if !g.checked_contains(s)? {
            return Err(Error::invalid(format!(
                "closure seed {s} is not an element of the group"
            )));
        }
    }
    let mut group = span_of_elements(g.degree(), seeds.iter());
    loop {
        let mut adjoined: Vec<Permutation> = Vec::new();
        for x in group.generators() {
            for s in g.generators() {
                let conj = x.conjugated_by(s);
                if !group.contains(&conj) && !adjoined.contains(&conj) {
                    adjoined.push(conj);
                }
            }
        }
        if adjoined.is_empty() {
            break;
        }
        group = span_of_elements(
            g.degree(),
            group.generators().iter().chain(adjoined.iter()),
        );
    }
    Ok(Subgroup::from_group_unchecked(g.clone(), group))
}

/// True iff every conjugate of each `n`-generator by each `g`-generator lies
/// in `n`.
pub fn is_normal(g: &PermGroup, n: &Subgroup) -> bool {
    n.generators()
        .iter()
        .all(|x| g.generators().iter().all(|s| n.contains(&x.conjugated_by(s))))
}

/// Normal closure in `<H, K>` of all commutators `[h, k]` over generator
/// pairs.
pub fn commutator_subgroup(h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    if !h.shares_parent_with(k) {
        return Err(Error::invalid("commutator subgroup: mismatched parents"));
    }
    let degree = h.degree();
    let ambient = span_of_elements(
        degree,
        h.generators().iter().chain(k.generators().iter()),
    );
    let mut comms: Vec<Permutation> = Vec::new();
    for a in h.generators() {
        for b in k.generators() {
            let c = a.commutator(b);
            if !c.is_identity() && !comms.contains(&c) {
                comms.push(c);
            }
        }
    }
    let closure = normal_closure(&ambient, &comms)?;
    Ok(Subgroup::from_group_unchecked(
        h.parent().clone(),
        closure.group().clone(),
    ))
}

/// Strictly descending chain `H >= H' >= H'' >= ...` until stable.
pub fn derived_series(h: &Subgroup) -> SeriesRecord {
    let mut terms = vec![h.clone()];
    loop {
        let current = terms.last().expect("nonempty");
        let next = commutator_subgroup(current, current)
            .expect("series terms share a parent");
        if next.order() == current.order() {
            break;
        }
        terms.push(next);
    }
    let tags = vec![FactorTag::Soluble; terms.len().saturating_sub(1)];
    SeriesRecord::new(h.parent().clone(), SeriesKind::Derived, terms, tags)
}

/// True iff the derived series reaches the trivial subgroup.
pub fn is_soluble(h: &Subgroup) -> bool {
    derived_series(h)
        .terms()
        .last()
        .expect("nonempty series")
        .is_trivial()
}

/// Chain `H >= [H,H] >= [[H,H],H] >= ...` until stable.
pub fn lower_central_series(h: &Subgroup) -> SeriesRecord {
    let mut terms = vec![h.clone()];
    loop {
        let current = terms.last().expect("nonempty");
        let next = commutator_subgroup(current, h).expect("series terms share a parent");
        if next.order() == current.order() {
            break;
        }
        terms.push(next);
    }
    let tags = vec![FactorTag::Nilpotent; terms.len().saturating_sub(1)];
    SeriesRecord::new(h.parent().clone(), SeriesKind::LowerCentral, terms, tags)
}

/// True iff the lower central series reaches the trivial subgroup.
pub fn is_nilpotent(h: &Subgroup) -> bool {
    lower_central_series(h)
        .terms()
        .last()
        .expect("nonempty series")
        .is_trivial()
}

/// One conjugacy class: its minimal element as representative, and its size.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub size: usize,
}

/// All conjugacy classes, ordered by minimal class element.
pub fn conjugacy_classes(g: &PermGroup, limits: &Limits) -> Result<Vec<ConjugacyClass>> {
    let elems = g.elements(limits.enumeration)?;
    let mut visited = vec![false; elems.len()];
    let mut classes = Vec::new();
    for start in 0..elems.len() {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut stack = vec![start];
        let mut size = 0;
        while let Some(at) = stack.pop() {
            size += 1;
            for s in g.generators() {
                let conj = elems[at].conjugated_by(s);
                let idx = elems
                    .binary_search(&conj)
                    .expect("conjugate of a member is a member");
                if !visited[idx] {
                    visited[idx] = true;
                    stack.push(idx);
                }
            }
        }
        classes.push(ConjugacyClass {
            representative: elems[start].clone(),
            size,
        });
    }
    Ok(classes)
}

/// Exactly one representative per conjugacy class.
pub fn conjugacy_class_representatives(
    g: &PermGroup,
    limits: &Limits,
) -> Result<Vec<Permutation>> {
    Ok(conjugacy_classes(g, limits)?
        .into_iter()
        .map(|c| c.representative)
        .collect())
}

/// `{g in G : gs = sg for all s in constraints}` by filtering the element
/// cache.
pub fn centralizer(
    g: &PermGroup,
    constraints: &[Permutation],
    limits: &Limits,
) -> Result<Subgroup> {
    for c in constraints {
        if c.degree() != g.degree() {
            return Err(Error::DegreeMismatch {
                left: g.degree(),
                right: c.degree(),
            });
        }
    }
    let elems = g.elements(limits.enumeration)?;
    let fixed = elems
        .iter()
        .filter(|e| constraints.iter().all(|c| e.compose(c) == c.compose(e)));
    let group = span_of_elements(g.degree(), fixed);
    Ok(Subgroup::from_group_unchecked(g.clone(), group))
}

/// Centralizer of the whole group in itself.
pub fn center(g: &PermGroup, limits: &Limits) -> Result<Subgroup> {
    centralizer(g, g.generators(), limits)
}

/// Elementwise intersection of two subgroups of a common parent
/// (enumeration-based; the smaller side is enumerated).
pub fn intersection(a: &Subgroup, b: &Subgroup, limits: &Limits) -> Result<Subgroup> {
    if !a.shares_parent_with(b) {
        return Err(Error::invalid("intersection: mismatched parents"));
    }
    let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    let elems = small.group().elements(limits.enumeration)?;
    let both = elems.iter().filter(|e| large.contains(e));
    let group = span_of_elements(a.degree(), both);
    Ok(Subgroup::from_group_unchecked(a.parent().clone(), group))
}
