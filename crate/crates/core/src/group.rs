//! Permutation group containers with lazily built chains and element caches.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A finite permutation group given by generators of a common degree.
///
/// Cloning is cheap and shares the lazily built stabilizer chain and element
/// cache; both are built at most once and are safe to read concurrently.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<Inner>,
}

struct Inner {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
    elements: OnceLock<Vec<Permutation>>,
}

impl PermGroup {
    /// Builds a group from generators acting on `degree` points.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::invalid("degree must be positive"));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        Ok(PermGroup {
            inner: Arc::new(Inner {
                degree,
                generators,
                chain: OnceLock::new(),
                elements: OnceLock::new(),
            }),
        })
    }

    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("positive degree")
    }

    /// Wraps generators together with an already-built chain for them.
    pub(crate) fn with_chain(
        degree: usize,
        generators: Vec<Permutation>,
        chain: StabilizerChain,
    ) -> Self {
        let inner = Inner {
            degree,
            generators,
            chain: OnceLock::new(),
            elements: OnceLock::new(),
        };
        let _ = inner.chain.set(chain);
        PermGroup {
            inner: Arc::new(inner),
        }
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    /// True when two handles share the same underlying group value.
    pub fn same_handle(&self, other: &PermGroup) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    /// The stabilizer chain, built on first use.
    pub fn chain(&self) -> &StabilizerChain {
        self.inner
            .chain
            .get_or_init(|| StabilizerChain::build(self.inner.degree, &self.inner.generators))
    }

    /// Group order: the product of the fundamental orbit lengths.
    pub fn order(&self) -> BigUint {
        self.chain().order().clone()
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.generators.iter().all(Permutation::is_identity)
    }

    /// True when the order fits within `limit`.
    pub fn order_within(&self, limit: usize) -> bool {
        self.order() <= BigUint::from(limit)
    }

    /// Membership via sifting. Panics on degree mismatch; use
    /// [`PermGroup::checked_contains`] at input boundaries.
    pub fn contains(&self, p: &Permutation) -> bool {
        assert_eq!(p.degree(), self.degree(), "contains: degree mismatch");
        self.chain().contains(p)
    }

    pub fn checked_contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: p.degree(),
            });
        }
        Ok(self.chain().contains(p))
    }

    pub fn contains_all(&self, perms: &[Permutation]) -> bool {
        perms.iter().all(|p| self.contains(p))
    }

    /// Set equality: equal orders plus one-way generator containment.
    pub fn equals(&self, other: &PermGroup) -> bool {
        if self.same_handle(other) {
            return true;
        }
        self.degree() == other.degree()
            && self.order() == other.order()
            && other.generators().iter().all(|g| self.contains(g))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree() && self.generators().iter().all(|g| other.contains(g))
    }

    /// Complete element set, sorted by image sequence and cached.
    ///
    /// Fails with a capacity error naming the required size when the order
    /// exceeds `limit`.
    pub fn elements(&self, limit: usize) -> Result<&[Permutation]> {
        let order = self.order();
        if order > BigUint::from(limit) {
            return Err(Error::Capacity {
                required: order,
                limit,
            });
        }
        let elems = self.inner.elements.get_or_init(|| {
            let mut elems = self.chain().enumerate();
            elems.sort_unstable();
            elems
        });
        debug_assert_eq!(BigUint::from(elems.len()), order);
        Ok(elems)
    }

    /// Order as `usize`, or a capacity error against `limit`.
    pub fn order_as_usize(&self, limit: usize) -> Result<usize> {
        let order = self.order();
        order
            .to_usize()
            .filter(|&n| n <= limit)
            .ok_or(Error::Capacity {
                required: order,
                limit,
            })
    }

    /// Orbit partition of the point set, each orbit ascending, orbits ordered
    /// by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut next = 0;
            while next < orbit.len() {
                let beta = orbit[next];
                for g in self.generators() {
                    let gamma = g.apply(beta);
                    if !seen[gamma] {
                        seen[gamma] = true;
                        orbit.push(gamma);
                    }
                }
                next += 1;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().enumerate().all(|(i, a)| {
            gens[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, {} gens)",
            self.degree(),
            self.generators().len()
        )
    }
}
