//! Quotient groups realised as permutation groups on right cosets.
//!
//! For a normal subgroup `N` of `G`, the quotient acts on the right cosets of
//! `N`; the action is the regular action of `G/N`, so it is faithful and has
//! degree `[G:N]`. Cosets are identified by canonical representatives from
//! `N`'s stabilizer chain, so no element enumeration is needed. A trivial
//! kernel is special-cased: the quotient is then the base group itself.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::algebra::{is_normal, Subgroup};
use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::Limits;

#[derive(Clone, Debug)]
enum Repr {
    /// Trivial kernel: `rep` is the base group itself.
    Identity,
    /// Coset action: `reps[i]` is the canonical representative of coset `i`;
    /// coset 0 is the kernel itself.
    Cosets {
        reps: Vec<Permutation>,
        index_of: HashMap<Permutation, usize>,
    },
}

/// A computable quotient `G/N` with projection and preimage maps.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    base: PermGroup,
    kernel: Subgroup,
    rep: PermGroup,
    repr: Repr,
}

/// Builds `G/N`, checking normality and the quotient-degree limit.
pub fn quotient(g: &PermGroup, n: &Subgroup, limits: &Limits) -> Result<QuotientGroup> {
    for x in n.generators() {
        if !g.checked_contains(x)? {
            return Err(Error::invalid(format!(
                "kernel generator {x} is not an element of the group"
            )));
        }
    }
    if !is_normal(g, n) {
        return Err(Error::invalid("quotient by a non-normal subgroup"));
    }
    let index = g.order() / n.order();
    if n.is_trivial() {
        return Ok(QuotientGroup {
            base: g.clone(),
            kernel: Subgroup::trivial(g.clone()),
            rep: g.clone(),
            repr: Repr::Identity,
        });
    }
    let index: usize = index
        .to_usize()
        .filter(|&i| i <= limits.quotient)
        .ok_or(Error::Capacity {
            required: g.order() / n.order(),
            limit: limits.quotient,
        })?;

    let kernel_chain = n.group().chain();
    let mut reps = vec![kernel_chain.coset_representative(&Permutation::identity(g.degree()))];
    let mut index_of = HashMap::new();
    index_of.insert(reps[0].clone(), 0);
    let mut at = 0;
    while at < reps.len() {
        for s in g.generators() {
            let canon = kernel_chain.coset_representative(&reps[at].compose(s));
            if !index_of.contains_key(&canon) {
                index_of.insert(canon.clone(), reps.len());
                reps.push(canon);
            }
        }
        at += 1;
    }
    if reps.len() != index {
        return Err(Error::internal(format!(
            "coset enumeration found {} cosets, expected {index}",
            reps.len()
        )));
    }

    let mut images = Vec::new();
    for s in g.generators() {
        let perm = coset_permutation(&reps, &index_of, kernel_chain, s)?;
        if !perm.is_identity() {
            images.push(perm);
        }
    }
    let rep = PermGroup::new(index.max(1), images)?;
    if rep.order() != BigUint::from(index) {
        return Err(Error::internal(
            "coset action order does not match the index",
        ));
    }
    Ok(QuotientGroup {
        base: g.clone(),
        kernel: n.clone(),
        rep,
        repr: Repr::Cosets { reps, index_of },
    })
}

fn coset_permutation(
    reps: &[Permutation],
    index_of: &HashMap<Permutation, usize>,
    kernel_chain: &StabilizerChain,
    g: &Permutation,
) -> Result<Permutation> {
    let mut images = Vec::with_capacity(reps.len());
    for r in reps {
        let canon = kernel_chain.coset_representative(&r.compose(g));
        let idx = *index_of
            .get(&canon)
            .ok_or_else(|| Error::internal("coset space not closed under the group"))?;
        images.push(idx as u32);
    }
    Permutation::from_images(images)
}

impl QuotientGroup {
    pub fn base(&self) -> &PermGroup {
        &self.base
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    /// The quotient as a permutation group.
    pub fn rep(&self) -> &PermGroup {
        &self.rep
    }

    pub fn index(&self) -> BigUint {
        self.base.order() / self.kernel.order()
    }

    /// Image of a base-group element in the quotient representation.
    pub fn project(&self, g: &Permutation) -> Result<Permutation> {
        if !self.base.checked_contains(g)? {
            return Err(Error::invalid(format!(
                "{g} is not an element of the base group"
            )));
        }
        match &self.repr {
            Repr::Identity => Ok(g.clone()),
            Repr::Cosets { reps, index_of } => {
                coset_permutation(reps, index_of, self.kernel.group().chain(), g)
            }
        }
    }

    /// A base-group element projecting to `image`.
    pub fn lift(&self, image: &Permutation) -> Result<Permutation> {
        if !self.rep.checked_contains(image)? {
            return Err(Error::invalid(format!(
                "{image} is not an element of the quotient"
            )));
        }
        match &self.repr {
            Repr::Identity => Ok(image.clone()),
            // The coset action is regular, so the image of coset 0 determines
            // the element: its representative is one lift.
            Repr::Cosets { reps, .. } => Ok(reps[image.apply(0)].clone()),
        }
    }

    /// Full inverse image of a subgroup of the quotient: generated by the
    /// kernel plus one coset representative per generator.
    pub fn preimage(&self, hbar: &Subgroup) -> Result<Subgroup> {
        let mut gens: Vec<Permutation> = self
            .kernel
            .generators()
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        for h in hbar.generators() {
            let lifted = self.lift(h)?;
            if !lifted.is_identity() {
                gens.push(lifted);
            }
        }
        let group = PermGroup::new(self.base.degree(), gens)?;
        debug_assert_eq!(group.order(), hbar.order() * self.kernel.order());
        Ok(Subgroup::from_group_unchecked(self.base.clone(), group))
    }

    /// Image of a subgroup of the base: generated by the projections of its
    /// generators.
    pub fn image_of(&self, h: &Subgroup) -> Result<Subgroup> {
        let mut gens = Vec::new();
        for x in h.generators() {
            let img = self.project(x)?;
            if !img.is_identity() {
                gens.push(img);
            }
        }
        let group = PermGroup::new(self.rep.degree(), gens)?;
        Ok(Subgroup::from_group_unchecked(self.rep.clone(), group))
    }

    /// Image of a quotient element under the automorphism induced by
    /// conjugation with an ambient element `a` normalizing both the base
    /// group and the kernel.
    pub fn conjugated_image(&self, x: &Permutation, a: &Permutation) -> Result<Permutation> {
        let lifted = self.lift(x)?;
        let conj = lifted.conjugated_by(a);
        self.project(&conj)
    }
}
