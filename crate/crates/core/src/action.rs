//! Coprime automorphism actions realised inside an ambient permutation
//! group, fixed-point subgroups, and the fixed-point inequality checkers.
//!
//! An action is a triple `(ambient, G, A)` with `A` normalizing `G`. The
//! semidirect witness `|ambient| = |G| |A|` forces `A` to meet `G` trivially,
//! so `|A|` is unambiguously the order of the induced automorphism group;
//! the coprime witness is `gcd(|G|, |A|) = 1`. Both witnesses are recorded
//! so that negative-control corpus entries can be carried without failing
//! construction.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::algebra::{
    is_normal, is_soluble, is_nilpotent, normal_closure, span_of_elements, Subgroup,
};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::quotient::quotient;
use crate::report::TheoremReport;
use crate::series::{
    alpha, bound_fstar_height, bound_nonsoluble_length, bound_soluble_height, fitting_series,
    fitting_height, generalized_fitting_series, generalized_fitting_subgroup, group_is_simple,
    h_star, is_prime, nonsoluble_length,
};
use crate::Limits;

/// A validated automorphism action `A` on `G` inside `<G, A>`.
#[derive(Clone, Debug)]
pub struct CoprimeAction {
    ambient: PermGroup,
    g_part: Subgroup,
    a_part: Subgroup,
    a_order: BigUint,
    coprime: bool,
    semidirect: bool,
}

impl CoprimeAction {
    /// Builds the action, checking containment and that `A` normalizes `G`.
    /// The coprimality and semidirect witnesses are computed but not
    /// enforced; see [`CoprimeAction::validated`].
    pub fn build(
        ambient: PermGroup,
        g_gens: Vec<Permutation>,
        a_gens: Vec<Permutation>,
    ) -> Result<CoprimeAction> {
        let g_part = Subgroup::new(ambient.clone(), g_gens)?;
        let a_part = Subgroup::new(ambient.clone(), a_gens)?;
        for x in g_part.generators() {
            for a in a_part.generators() {
                if !g_part.contains(&x.conjugated_by(a)) {
                    return Err(Error::invalid(
                        "the automorphism part does not normalize the acted-on group",
                    ));
                }
            }
        }
        let a_order = a_part.order();
        let semidirect = ambient.order() == g_part.order() * &a_order;
        let coprime = g_part.order().gcd(&a_order).is_one();
        Ok(CoprimeAction {
            ambient,
            g_part,
            a_part,
            a_order,
            coprime,
            semidirect,
        })
    }

    /// Enforces the witnesses: coprimality first, then the semidirect
    /// product condition.
    pub fn validated(self) -> Result<CoprimeAction> {
        if !self.coprime {
            return Err(Error::invalid(format!(
                "orders are not coprime: gcd(|G|, |A|) = {}",
                self.g_part.order().gcd(&self.a_order)
            )));
        }
        if !self.semidirect {
            return Err(Error::invalid(
                "ambient group is not a semidirect product: |ambient| != |G| |A|",
            ));
        }
        Ok(self)
    }

    /// Builds and enforces both witnesses.
    pub fn new(
        ambient: PermGroup,
        g_gens: Vec<Permutation>,
        a_gens: Vec<Permutation>,
    ) -> Result<CoprimeAction> {
        CoprimeAction::build(ambient, g_gens, a_gens)?.validated()
    }

    pub fn ambient(&self) -> &PermGroup {
        &self.ambient
    }

    /// The acted-on group `G` as a group in its own right.
    pub fn group(&self) -> &PermGroup {
        self.g_part.group()
    }

    pub fn g_part(&self) -> &Subgroup {
        &self.g_part
    }

    pub fn a_part(&self) -> &Subgroup {
        &self.a_part
    }

    pub fn a_order(&self) -> &BigUint {
        &self.a_order
    }

    pub fn is_coprime(&self) -> bool {
        self.coprime
    }

    pub fn is_semidirect(&self) -> bool {
        self.semidirect
    }

    pub fn a_is_trivial(&self) -> bool {
        self.a_order.is_one()
    }

    /// Number of prime factors of `|A|` with multiplicity.
    pub fn alpha(&self) -> Result<u64> {
        alpha(&self.a_order)
    }

    /// Fixed-point subgroup `C_G(A)`, as a subgroup of `G`.
    pub fn fixed_point_subgroup(&self, limits: &Limits) -> Result<Subgroup> {
        let elems = self.group().elements(limits.enumeration)?;
        let fixed = elems.iter().filter(|x| {
            self.a_part
                .generators()
                .iter()
                .all(|a| x.compose(a) == a.compose(x))
        });
        let group = span_of_elements(self.group().degree(), fixed);
        Ok(Subgroup::from_group_unchecked(self.group().clone(), group))
    }

    /// `[G, A]`: normal closure in `G` of all `g^-1 g^a`; always normal in
    /// `G` and `A`-invariant.
    pub fn commutator_with_action(&self) -> Result<Subgroup> {
        let seeds: Vec<Permutation> = self
            .g_part
            .generators()
            .iter()
            .flat_map(|x| {
                self.a_part
                    .generators()
                    .iter()
                    .map(move |a| x.commutator(a))
            })
            .filter(|c| !c.is_identity())
            .collect();
        normal_closure(self.group(), &seeds)
    }

    /// Is the subgroup of `G` invariant under every `A`-generator?
    pub fn leaves_invariant(&self, n: &Subgroup) -> bool {
        n.generators()
            .iter()
            .all(|x| self.a_part.generators().iter().all(|a| n.contains(&x.conjugated_by(a))))
    }
}

// Checker identifiers used in reports and `--only` filters.
pub const CHECK_FIXED_POINT_FSTAR: &str = "fixed-point-fstar";
pub const CHECK_FSTAR_HEIGHT_BOUND: &str = "fstar-height-bound";
pub const CHECK_LENGTH_BOUND: &str = "nonsoluble-length-bound";
pub const CHECK_LENGTH_STEP: &str = "nonsoluble-length-step";
pub const CHECK_THOMPSON: &str = "thompson";
pub const CHECK_WANG_CHEN: &str = "wang-chen";
pub const CHECK_COPRIME_QUOTIENT: &str = "coprime-quotient";

fn require_coprime(act: &CoprimeAction) -> Result<()> {
    if !act.is_coprime() || !act.is_semidirect() {
        return Err(Error::domain("checker requires a coprime semidirect action"));
    }
    Ok(())
}

fn to_u64(n: &BigUint) -> u64 {
    n.to_u64().unwrap_or(u64::MAX)
}

/// `F*(C_G(A))` lies in the generalized Fitting series of `G` within depth 9
/// when `|A|` is prime. Records the least depth as lhs.
pub fn check_fixed_point_fstar(act: &CoprimeAction, limits: &Limits) -> Result<TheoremReport> {
    require_coprime(act)?;
    if !is_prime(act.a_order()) {
        return Err(Error::domain("checker requires |A| prime"));
    }
    let c = act.fixed_point_subgroup(limits)?;
    let fstar_c = generalized_fitting_subgroup(c.group(), limits)?.fstar;
    let series = generalized_fitting_series(act.group(), limits)?;
    let mut depth = None;
    for (i, term) in series.terms().iter().enumerate().skip(1) {
        if fstar_c.generators().iter().all(|x| term.contains(x)) {
            depth = Some(i);
            break;
        }
    }
    let depth = depth.ok_or_else(|| {
        Error::internal("fixed-point generalized Fitting subgroup escaped the series")
    })? as u64;
    Ok(TheoremReport::inequality(CHECK_FIXED_POINT_FSTAR, depth, 9))
}

/// `h*(G) <= 9^a h*(C_G(A)) + (9^a - 1)/8` for soluble `A` of coprime order.
pub fn check_fstar_height_bound(act: &CoprimeAction, limits: &Limits) -> Result<TheoremReport> {
    require_coprime(act)?;
    if !is_soluble(act.a_part()) {
        return Err(Error::domain("checker requires a soluble automorphism group"));
    }
    let a = act.alpha()?;
    let c = act.fixed_point_subgroup(limits)?;
    let h_c = h_star(c.group(), limits)? as u64;
    let lhs = h_star(act.group(), limits)? as u64;
    let rhs = bound_fstar_height(a, h_c);
    Ok(TheoremReport::inequality(
        CHECK_FSTAR_HEIGHT_BOUND,
        lhs,
        to_u64(&rhs),
    ))
}

/// `lambda(G) <= 2^a (lambda(C_G(A)) + 1) - 1` for coprime `A`.
pub fn check_nonsoluble_length_bound(
    act: &CoprimeAction,
    limits: &Limits,
) -> Result<TheoremReport> {
    require_coprime(act)?;
    let a = act.alpha()?;
    let c = act.fixed_point_subgroup(limits)?;
    let l_c = nonsoluble_length(c.group(), limits)? as u64;
    let lhs = nonsoluble_length(act.group(), limits)? as u64;
    let rhs = bound_nonsoluble_length(a, l_c);
    Ok(TheoremReport::inequality(
        CHECK_LENGTH_BOUND,
        lhs,
        to_u64(&rhs),
    ))
}

/// For prime `|A| = <phi>` with `[G, phi] = G`:
/// `lambda(G) <= lambda(C_G(phi)) + 1`. An action with `[G, phi] != G` is
/// reported as hypothesis-not-met, not an error.
pub fn check_nonsoluble_length_step(
    act: &CoprimeAction,
    limits: &Limits,
) -> Result<TheoremReport> {
    require_coprime(act)?;
    if !is_prime(act.a_order()) {
        return Err(Error::domain("checker requires |A| prime"));
    }
    let commutator = act.commutator_with_action()?;
    if commutator.order() != act.group().order() {
        return Ok(TheoremReport::hypothesis_not_met(CHECK_LENGTH_STEP));
    }
    let c = act.fixed_point_subgroup(limits)?;
    let l_c = nonsoluble_length(c.group(), limits)? as u64;
    let lhs = nonsoluble_length(act.group(), limits)? as u64;
    Ok(TheoremReport::inequality(CHECK_LENGTH_STEP, lhs, l_c + 1))
}

/// Soluble case: `h(G) <= 5^a max(h(C_G(A)), 1)`, and for prime `|A|`
/// additionally `F(C_G(A)) <= F_4(G)`.
pub fn check_thompson(act: &CoprimeAction, limits: &Limits) -> Result<TheoremReport> {
    require_coprime(act)?;
    if !is_soluble(&Subgroup::whole(act.group().clone())) {
        return Err(Error::domain("checker requires a soluble group"));
    }
    let a = act.alpha()?;
    let c = act.fixed_point_subgroup(limits)?;
    let h_c = fitting_height(c.group(), limits)? as u64;
    let lhs = fitting_height(act.group(), limits)? as u64;
    let rhs = bound_soluble_height(a, h_c);
    let mut report = TheoremReport::inequality(CHECK_THOMPSON, lhs, to_u64(&rhs));
    if is_prime(act.a_order()) {
        let fitting_c = crate::series::fitting_subgroup(c.group(), limits)?;
        let series = fitting_series(act.group(), limits)?;
        let f4 = &series.terms()[series.length().min(4)];
        let contained = fitting_c.generators().iter().all(|x| f4.contains(x));
        report.pass = report.pass && contained;
    }
    Ok(report)
}

/// Fixed points in a nonabelian simple group under a nontrivial coprime
/// action are never nilpotent.
pub fn check_wang_chen(act: &CoprimeAction, limits: &Limits) -> Result<TheoremReport> {
    require_coprime(act)?;
    if act.a_is_trivial() {
        return Err(Error::domain("checker requires a nontrivial automorphism group"));
    }
    if act.group().is_abelian() || !group_is_simple(act.group(), limits)? {
        return Err(Error::domain("checker requires a nonabelian simple group"));
    }
    let c = act.fixed_point_subgroup(limits)?;
    let pass = !is_nilpotent(&c);
    Ok(TheoremReport::verdict(CHECK_WANG_CHEN, pass))
}

/// `C_{G/N}(A) = C_G(A) N / N` for an `A`-invariant normal subgroup `N`.
pub fn check_coprime_quotient(
    act: &CoprimeAction,
    n: &Subgroup,
    limits: &Limits,
) -> Result<TheoremReport> {
    require_coprime(act)?;
    if !is_normal(act.group(), n) {
        return Err(Error::invalid("subgroup is not normal in the acted-on group"));
    }
    if !act.leaves_invariant(n) {
        return Err(Error::invalid("subgroup is not invariant under the action"));
    }
    let q = quotient(act.group(), n, limits)?;

    // Left side: fixed points of the induced action on the quotient.
    let elems = q.rep().elements(limits.enumeration)?;
    let mut fixed: Vec<Permutation> = Vec::new();
    for x in elems {
        let is_fixed = act
            .a_part()
            .generators()
            .iter()
            .try_fold(true, |acc, a| -> Result<bool> {
                Ok(acc && q.conjugated_image(x, a)? == *x)
            })?;
        if is_fixed {
            fixed.push(x.clone());
        }
    }
    let lhs_group = span_of_elements(q.rep().degree(), fixed.iter());

    // Right side: image of C_G(A) in the quotient.
    let c = act.fixed_point_subgroup(limits)?;
    let rhs = q.image_of(&c)?;

    let equal = lhs_group.equals(rhs.group());
    Ok(TheoremReport::verdict(CHECK_COPRIME_QUOTIENT, equal))
}

/// `A`-invariant normal subgroups found by closing class representatives:
/// the trivial subgroup, the distinct invariant closures, and `G` itself.
pub fn sample_invariant_normal_subgroups(
    act: &CoprimeAction,
    limits: &Limits,
) -> Result<Vec<Subgroup>> {
    let g = act.group();
    let reps = crate::algebra::conjugacy_class_representatives(g, limits)?;
    let mut found: Vec<Subgroup> = vec![Subgroup::trivial(g.clone())];
    for x in reps.iter().filter(|x| !x.is_identity()) {
        let closure = normal_closure(g, std::slice::from_ref(x))?;
        if !act.leaves_invariant(&closure) {
            continue;
        }
        if !found
            .iter()
            .any(|k| k.order() == closure.order() && k.same_elements(&closure))
        {
            found.push(closure);
        }
    }
    if !found.iter().any(|k| k.order() == g.order()) {
        found.push(Subgroup::whole(g.clone()));
    }
    found.sort_by_key(Subgroup::order);
    Ok(found)
}

/// `G = [G, A] C_G(A)` for coprime prime-order actions.
pub fn commutator_centralizer_cover(act: &CoprimeAction, limits: &Limits) -> Result<bool> {
    let commutator = act.commutator_with_action()?;
    let c = act.fixed_point_subgroup(limits)?;
    let product = span_of_elements(
        act.group().degree(),
        commutator.generators().iter().chain(c.generators()),
    );
    Ok(product.order() == act.group().order())
}
