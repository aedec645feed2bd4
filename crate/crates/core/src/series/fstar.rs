//! Generalized Fitting subgroup, its `F(G)·E(G)` decomposition, the
//! generalized Fitting and upper nonsoluble series, and the component-action
//! kernel check.
//!
//! The primary algorithm for `F*(G)` is elementwise: `F*(G)` is the set of
//! elements inducing inner automorphisms on every chief factor, tested on
//! class representatives. The decomposition into Fitting subgroup, layer and
//! quasisimple components is derived afterwards and cross-checked against the
//! elementwise result.

use num_bigint::BigUint;
use num_traits::One;

use crate::algebra::{
    center, derived_series, is_normal, is_soluble, normal_closure,
    conjugacy_class_representatives, span_of_elements, Subgroup,
};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::quotient::quotient;
use crate::series::{
    chief_series, fitting_subgroup, minimal_normal_subgroups, soluble_radical, FactorTag,
    SeriesKind, SeriesRecord,
};
use crate::Limits;

/// `F*(G)` together with its derived decomposition.
#[derive(Clone, Debug)]
pub struct ComponentsReport {
    /// Fitting subgroup `F(G)`.
    pub fitting: Subgroup,
    /// Layer `E(G)`, computed as the perfect residual of `F*(G)`: since
    /// `F*(G) = F(G) E(G)` with `F(G)` nilpotent centralizing the perfect
    /// subgroup `E(G)`, the derived series of `F*(G)` terminates exactly at
    /// `E(G)`.
    pub layer: Subgroup,
    /// Generalized Fitting subgroup `F*(G) = F(G) E(G)`.
    pub fstar: Subgroup,
    /// Quasisimple components of the layer.
    pub components: Vec<Subgroup>,
    /// Centre of the layer.
    pub layer_center: Subgroup,
}

/// One chief factor `H/K` prepared for the inner-automorphism test.
struct ChiefFactor {
    below: Subgroup,
    above: Subgroup,
    abelian: bool,
    /// Coset representatives of `K` in `H` (nonabelian factors only).
    transversal: Vec<Permutation>,
}

fn prepare_chief_factors(g: &PermGroup, limits: &Limits) -> Result<Vec<ChiefFactor>> {
    let series = chief_series(g, limits)?;
    let mut factors = Vec::new();
    for pair in series.terms().windows(2) {
        let (below, above) = (pair[0].clone(), pair[1].clone());
        let abelian = above.generators().iter().enumerate().all(|(i, a)| {
            above.generators()[i..]
                .iter()
                .all(|b| below.contains(&a.commutator(b)))
        });
        let transversal = if abelian {
            Vec::new()
        } else {
            coset_transversal(&above, &below, limits)?
        };
        factors.push(ChiefFactor {
            below,
            above,
            abelian,
            transversal,
        });
    }
    Ok(factors)
}

/// Coset representatives of `k` in `h`, found by closing under the
/// generators with canonical-representative identification.
fn coset_transversal(h: &Subgroup, k: &Subgroup, limits: &Limits) -> Result<Vec<Permutation>> {
    let index = h.order() / k.order();
    if index > BigUint::from(limits.enumeration) {
        return Err(Error::Capacity {
            required: index,
            limit: limits.enumeration,
        });
    }
    if k.is_trivial() {
        return Ok(h.group().elements(limits.enumeration)?.to_vec());
    }
    let chain = k.group().chain();
    let identity = Permutation::identity(h.degree());
    let mut reps = vec![chain.coset_representative(&identity)];
    let mut seen: std::collections::HashSet<Permutation> = reps.iter().cloned().collect();
    let mut at = 0;
    while at < reps.len() {
        for s in h.generators() {
            let canon = chain.coset_representative(&reps[at].compose(s));
            if seen.insert(canon.clone()) {
                reps.push(canon);
            }
        }
        at += 1;
    }
    Ok(reps)
}

/// Does `x` induce an inner automorphism on the chief factor?
///
/// For an abelian factor inner automorphisms are trivial, so the test is
/// centralizing. For a nonabelian factor, search the transversal for `t`
/// with `x t^-1` centralizing `H/K`.
fn induces_inner(x: &Permutation, factor: &ChiefFactor) -> bool {
    let centralizes = |y: &Permutation| {
        factor
            .above
            .generators()
            .iter()
            .all(|h| factor.below.contains(&y.commutator(h)))
    };
    if factor.abelian {
        return centralizes(x);
    }
    // An element of H acts on H/K as conjugation by its own coset.
    if factor.above.contains(x) {
        return true;
    }
    factor
        .transversal
        .iter()
        .any(|t| centralizes(&x.compose(&t.inverse())))
}

/// Generalized Fitting subgroup via the chief-factor elementwise test, with
/// the `F·E` decomposition derived and cross-checked.
pub fn generalized_fitting_subgroup(g: &PermGroup, limits: &Limits) -> Result<ComponentsReport> {
    let factors = prepare_chief_factors(g, limits)?;
    let reps = conjugacy_class_representatives(g, limits)?;
    let passing: Vec<Permutation> = reps
        .into_iter()
        .filter(|x| !x.is_identity() && factors.iter().all(|f| induces_inner(x, f)))
        .collect();
    let fstar = normal_closure(g, &passing)?;

    let fitting = fitting_subgroup(g, limits)?;
    let layer_group = derived_series(&fstar).terms().last().expect("nonempty").group().clone();
    let layer = Subgroup::from_group_unchecked(g.clone(), layer_group);
    let layer_center = center(layer.group(), limits)?;

    let components = if layer.is_trivial() {
        Vec::new()
    } else {
        let z = Subgroup::from_group_unchecked(layer.group().clone(), layer_center.group().clone());
        let q = quotient(layer.group(), &z, limits)?;
        let mut comps = Vec::new();
        for min in minimal_normal_subgroups(q.rep(), limits)? {
            let pulled = q.preimage(&min)?;
            let residual = derived_series(&pulled)
                .terms()
                .last()
                .expect("nonempty")
                .group()
                .clone();
            comps.push(Subgroup::from_group_unchecked(g.clone(), residual));
        }
        comps
    };

    let report = ComponentsReport {
        fitting,
        layer,
        fstar,
        components,
        layer_center: Subgroup::from_group_unchecked(g.clone(), layer_center.group().clone()),
    };
    cross_check(g, &report, limits)?;
    Ok(report)
}

/// The decomposition must reproduce the elementwise result.
fn cross_check(g: &PermGroup, report: &ComponentsReport, limits: &Limits) -> Result<()> {
    let product = span_of_elements(
        g.degree(),
        report
            .fitting
            .generators()
            .iter()
            .chain(report.layer.generators()),
    );
    if !product.equals(report.fstar.group()) {
        return Err(Error::internal(
            "generalized Fitting subgroup differs from F(G) * E(G)",
        ));
    }
    for a in report.fitting.generators() {
        for b in report.layer.generators() {
            if !a.commutator(b).is_identity() {
                return Err(Error::internal("Fitting subgroup does not centralize the layer"));
            }
        }
    }
    for q in &report.components {
        let d = derived_series(q);
        if d.terms().last().expect("nonempty").order() != q.order() {
            return Err(Error::internal("component is not perfect"));
        }
        let zq = center(q.group(), limits)?;
        let quo = quotient(
            q.group(),
            &Subgroup::from_group_unchecked(q.group().clone(), zq.group().clone()),
            limits,
        )?;
        if quo.rep().is_abelian() || !group_is_simple(quo.rep(), limits)? {
            return Err(Error::internal(
                "component quotient by its centre is not nonabelian simple",
            ));
        }
    }
    Ok(())
}

/// Simplicity via minimal normal subgroups: the only one is the group itself.
pub fn group_is_simple(g: &PermGroup, limits: &Limits) -> Result<bool> {
    if g.order() == BigUint::one() {
        return Ok(false);
    }
    let mins = minimal_normal_subgroups(g, limits)?;
    Ok(mins.len() == 1 && mins[0].order() == g.order())
}

/// Ascending generalized Fitting series `1 < F*_1 < F*_2 < ... = G`.
pub fn generalized_fitting_series(g: &PermGroup, limits: &Limits) -> Result<SeriesRecord> {
    let mut terms = vec![Subgroup::trivial(g.clone())];
    let mut tags = Vec::new();
    while terms.last().expect("nonempty").order() != g.order() {
        let current = terms.last().expect("nonempty");
        let q = quotient(g, current, limits)?;
        let step = generalized_fitting_subgroup(q.rep(), limits)?.fstar;
        let lifted = q.preimage(&step)?;
        if lifted.order() <= current.order() {
            return Err(Error::internal(
                "generalized Fitting series failed to ascend on a nontrivial quotient",
            ));
        }
        terms.push(lifted);
        tags.push(FactorTag::Unclassified);
    }
    Ok(SeriesRecord::new(
        g.clone(),
        SeriesKind::GeneralizedFitting,
        terms,
        tags,
    ))
}

/// Generalized Fitting height: length of the generalized Fitting series.
pub fn h_star(g: &PermGroup, limits: &Limits) -> Result<usize> {
    Ok(generalized_fitting_series(g, limits)?.length())
}

/// The subnormal simple factors of a semisimple section `L/M`.
#[derive(Clone, Debug)]
pub struct SemisimpleFactors {
    /// Preimages in the parent: each maps onto one simple factor.
    pub factors: Vec<Subgroup>,
    /// Orders of the simple factors themselves.
    pub factor_orders: Vec<BigUint>,
}

/// Splits a semisimple factor `L/M` into its simple direct factors, returned
/// as preimage-generated subgroups of `g`. Fails with a domain error when the
/// factor is not a nontrivial direct product of nonabelian simple groups.
pub fn semisimple_factor_decomposition(
    g: &PermGroup,
    m: &Subgroup,
    l: &Subgroup,
    limits: &Limits,
) -> Result<SemisimpleFactors> {
    if !l.contains_subgroup(m) {
        return Err(Error::invalid("lower term is not contained in the upper term"));
    }
    if !is_normal(g, m) || !is_normal(g, l) {
        return Err(Error::invalid("series terms must be normal in the group"));
    }
    if l.order() == m.order() {
        return Err(Error::domain("trivial factor is not semisimple"));
    }

    if m.is_trivial() {
        let mins = minimal_normal_subgroups(l.group(), limits)?;
        let factors: Vec<Subgroup> = mins
            .iter()
            .map(|s| Subgroup::from_group_unchecked(g.clone(), s.group().clone()))
            .collect();
        let orders: Vec<BigUint> = factors.iter().map(Subgroup::order).collect();
        check_direct_product_of_simples(l.group(), &mins, &orders, limits)?;
        Ok(SemisimpleFactors {
            factors,
            factor_orders: orders,
        })
    } else {
        let m_in_l = Subgroup::from_group_unchecked(l.group().clone(), m.group().clone());
        let q = quotient(l.group(), &m_in_l, limits)?;
        let mins = minimal_normal_subgroups(q.rep(), limits)?;
        let orders: Vec<BigUint> = mins.iter().map(Subgroup::order).collect();
        check_direct_product_of_simples(q.rep(), &mins, &orders, limits)?;
        let mut factors = Vec::new();
        for min in &mins {
            let pre = q.preimage(min)?;
            factors.push(Subgroup::from_group_unchecked(g.clone(), pre.group().clone()));
        }
        Ok(SemisimpleFactors {
            factors,
            factor_orders: orders,
        })
    }
}

fn check_direct_product_of_simples(
    whole: &PermGroup,
    mins: &[Subgroup],
    orders: &[BigUint],
    limits: &Limits,
) -> Result<()> {
    if mins.is_empty() {
        return Err(Error::domain("factor has no minimal normal subgroups"));
    }
    for s in mins {
        if s.group().is_abelian() {
            return Err(Error::domain("factor has an abelian minimal normal subgroup"));
        }
        if !group_is_simple(s.group(), limits)? {
            return Err(Error::domain("minimal normal subgroup is not simple"));
        }
    }
    let product: BigUint = orders.iter().product();
    if product != whole.order() {
        return Err(Error::domain(
            "factor is not the direct product of its simple subnormal subgroups",
        ));
    }
    Ok(())
}

/// The upper nonsoluble series: alternating full inverse images of soluble
/// radicals and generalized Fitting subgroups of the successive quotients.
/// Every semisimple factor is verified to be a nontrivial direct product of
/// nonabelian simple groups.
pub fn upper_nonsoluble_series(g: &PermGroup, limits: &Limits) -> Result<SeriesRecord> {
    let mut terms = vec![Subgroup::trivial(g.clone())];
    let mut tags = Vec::new();
    loop {
        // M_k: full inverse image of the soluble radical of G / L_{k-1}.
        let current = terms.last().expect("nonempty").clone();
        let q = quotient(g, &current, limits)?;
        let rad = soluble_radical(q.rep(), limits)?;
        let m = q.preimage(&rad)?;
        terms.push(m.clone());
        tags.push(FactorTag::Soluble);
        if m.order() == g.order() {
            break;
        }
        // L_k: full inverse image of F*(G / M_k).
        let qm = quotient(g, &m, limits)?;
        let fs = generalized_fitting_subgroup(qm.rep(), limits)?.fstar;
        let l = qm.preimage(&fs)?;
        if l.order() <= m.order() {
            return Err(Error::internal(
                "upper nonsoluble series failed to ascend on a nontrivial quotient",
            ));
        }
        semisimple_factor_decomposition(g, &m, &l, limits)?;
        terms.push(l);
        tags.push(FactorTag::Semisimple);
    }
    Ok(SeriesRecord::new(
        g.clone(),
        SeriesKind::NonsolubleUpper,
        terms,
        tags,
    ))
}

/// Nonsoluble length: number of semisimple factors of the upper nonsoluble
/// series; 0 exactly for soluble groups.
pub fn nonsoluble_length(g: &PermGroup, limits: &Limits) -> Result<usize> {
    Ok(upper_nonsoluble_series(g, limits)?
        .factor_tags()
        .iter()
        .filter(|t| **t == FactorTag::Semisimple)
        .count())
}

/// Kernel of the action on the simple factors above the radical.
#[derive(Clone, Debug)]
pub struct ComponentActionReport {
    /// Full inverse image of `F*(G/S(G))`.
    pub layer_preimage: Subgroup,
    /// Kernel of the permutational action on the simple factors.
    pub kernel: Subgroup,
    /// Whether `kernel / layer_preimage` is soluble.
    pub kernel_mod_layer_soluble: bool,
}

/// Computes the kernel `K` of the action of `G` on the simple factors of
/// `F*(G/S(G))` and checks that `K/L` is soluble.
pub fn action_kernel_on_components(
    g: &PermGroup,
    limits: &Limits,
) -> Result<ComponentActionReport> {
    if is_soluble(&Subgroup::whole(g.clone())) {
        return Err(Error::domain(
            "component action requires a nonsoluble group",
        ));
    }
    let rad = soluble_radical(g, limits)?;
    let q = quotient(g, &rad, limits)?;
    let lbar = generalized_fitting_subgroup(q.rep(), limits)?.fstar;
    let factor_groups = minimal_normal_subgroups(lbar.group(), limits)?;

    // Kernel upstairs: elements normalizing every simple factor.
    let elems = q.rep().elements(limits.enumeration)?;
    let fixed = elems.iter().filter(|x| {
        factor_groups.iter().all(|f| {
            f.generators()
                .iter()
                .all(|s| f.contains(&s.conjugated_by(x)))
        })
    });
    let kbar_group = span_of_elements(q.rep().degree(), fixed);
    let kbar = Subgroup::from_group_unchecked(q.rep().clone(), kbar_group);

    let kernel = q.preimage(&kbar)?;
    let layer_preimage = q.preimage(&lbar)?;

    let l_in_k = Subgroup::from_group_unchecked(
        kernel.group().clone(),
        layer_preimage.group().clone(),
    );
    let quo = quotient(kernel.group(), &l_in_k, limits)?;
    let soluble = is_soluble(&Subgroup::whole(quo.rep().clone()));
    Ok(ComponentActionReport {
        layer_preimage,
        kernel,
        kernel_mod_layer_soluble: soluble,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    fn p(s: &str, degree: usize) -> Permutation {
        Permutation::parse_cycles(s, degree).unwrap()
    }

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(degree, gens.iter().map(|s| p(s, degree)).collect()).unwrap()
    }

    fn s5() -> PermGroup {
        group(5, &["(0 1)", "(0 1 2 3 4)"])
    }

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn fstar_of_s5_is_a5_with_one_component() {
        let report = generalized_fitting_subgroup(&s5(), &limits()).unwrap();
        assert_eq!(report.fstar.order(), 60u32.into());
        assert!(report.fitting.is_trivial());
        assert_eq!(report.layer.order(), 60u32.into());
        assert_eq!(report.components.len(), 1);
        assert_eq!(report.components[0].order(), 60u32.into());
        assert!(report.layer_center.is_trivial());
    }

    #[test]
    fn fstar_of_a_nilpotent_group_is_the_group_with_no_components() {
        let d8 = group(4, &["(0 1 2 3)", "(1 3)"]);
        let report = generalized_fitting_subgroup(&d8, &limits()).unwrap();
        assert_eq!(report.fstar.order(), 8u32.into());
        assert_eq!(report.fitting.order(), 8u32.into());
        assert!(report.layer.is_trivial());
        assert!(report.components.is_empty());
    }

    #[test]
    fn fstar_of_s4_is_v4() {
        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        let report = generalized_fitting_subgroup(&s4, &limits()).unwrap();
        assert_eq!(report.fstar.order(), 4u32.into());
        assert!(report.components.is_empty());
    }

    #[test]
    fn heights() {
        assert_eq!(h_star(&PermGroup::trivial(3), &limits()).unwrap(), 0);
        assert_eq!(h_star(&s5(), &limits()).unwrap(), 2);
        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        assert_eq!(h_star(&s4, &limits()).unwrap(), 3);
        let a5 = group(5, &["(0 1 2 3 4)", "(0 1 2)"]);
        assert_eq!(h_star(&a5, &limits()).unwrap(), 1);
    }

    #[test]
    fn gfitting_series_of_s5() {
        let series = generalized_fitting_series(&s5(), &limits()).unwrap();
        assert_eq!(
            series.term_orders(),
            vec![BigUint::from(1u32), 60u32.into(), 120u32.into()]
        );
    }

    #[test]
    fn lambda_values() {
        assert_eq!(nonsoluble_length(&s5(), &limits()).unwrap(), 1);
        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        assert_eq!(nonsoluble_length(&s4, &limits()).unwrap(), 0);
        assert_eq!(nonsoluble_length(&PermGroup::trivial(2), &limits()).unwrap(), 0);
    }

    #[test]
    fn upper_series_of_s5() {
        let series = upper_nonsoluble_series(&s5(), &limits()).unwrap();
        // 1 = M1 < L1 = A5 <= M2 = S5
        assert_eq!(
            series.term_orders(),
            vec![BigUint::from(1u32), 1u32.into(), 60u32.into(), 120u32.into()]
        );
        assert_eq!(
            series.factor_tags(),
            &[FactorTag::Soluble, FactorTag::Semisimple, FactorTag::Soluble]
        );
    }

    #[test]
    fn lambda_of_a5_wreath_c2() {
        let a5 = construct::alternating(5).unwrap();
        let c2 = construct::cyclic(2).unwrap();
        let w = construct::wreath_product(&a5, &c2);
        assert_eq!(w.order(), 7200u32.into());
        assert_eq!(nonsoluble_length(&w, &limits()).unwrap(), 1);
        assert_eq!(h_star(&w, &limits()).unwrap(), 2);
    }

    #[test]
    fn semisimple_decomposition_of_the_a5_layer() {
        let s5 = s5();
        let a5 = normal_closure(&s5, &[p("(0 1 2)", 5)]).unwrap();
        let dec = semisimple_factor_decomposition(
            &s5,
            &Subgroup::trivial(s5.clone()),
            &a5,
            &limits(),
        )
        .unwrap();
        assert_eq!(dec.factor_orders, vec![BigUint::from(60u32)]);
    }

    #[test]
    fn semisimple_decomposition_rejects_soluble_factors() {
        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        let v4 = normal_closure(&s4, &[p("(0 1)(2 3)", 4)]).unwrap();
        let err = semisimple_factor_decomposition(
            &s4,
            &Subgroup::trivial(s4.clone()),
            &v4,
            &limits(),
        );
        assert!(matches!(err, Err(Error::Domain(_))));
    }

    #[test]
    fn two_factors_inside_the_wreath_base() {
        let a5 = construct::alternating(5).unwrap();
        let c2 = construct::cyclic(2).unwrap();
        let w = construct::wreath_product(&a5, &c2);
        let base = Subgroup::new(
            w.clone(),
            vec![
                p("(0 1 2 3 4)", 10),
                p("(0 1 2)", 10),
                p("(5 6 7 8 9)", 10),
                p("(5 6 7)", 10),
            ],
        )
        .unwrap();
        let dec = semisimple_factor_decomposition(
            &w,
            &Subgroup::trivial(w.clone()),
            &base,
            &limits(),
        )
        .unwrap();
        assert_eq!(dec.factor_orders.len(), 2);
        assert!(dec.factor_orders.iter().all(|o| *o == BigUint::from(60u32)));
    }

    #[test]
    fn component_kernel_of_s5() {
        let report = action_kernel_on_components(&s5(), &limits()).unwrap();
        assert_eq!(report.kernel.order(), 120u32.into());
        assert_eq!(report.layer_preimage.order(), 60u32.into());
        assert!(report.kernel_mod_layer_soluble);
    }

    #[test]
    fn component_kernel_of_the_wreath_is_the_base() {
        let a5 = construct::alternating(5).unwrap();
        let c2 = construct::cyclic(2).unwrap();
        let w = construct::wreath_product(&a5, &c2);
        let report = action_kernel_on_components(&w, &limits()).unwrap();
        assert_eq!(report.kernel.order(), 3600u32.into());
        assert_eq!(report.layer_preimage.order(), 3600u32.into());
        assert!(report.kernel_mod_layer_soluble);
    }

    #[test]
    fn component_kernel_rejects_soluble_groups() {
        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        assert!(matches!(
            action_kernel_on_components(&s4, &limits()),
            Err(Error::Domain(_))
        ));
    }
}
