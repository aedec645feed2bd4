//! Structural series and the invariants built from them: soluble radical,
//! Fitting subgroup, chief series, generalized Fitting machinery, the upper
//! nonsoluble series, and certificate verification.

mod bounds;
mod certificate;
mod fstar;

pub use bounds::{
    alpha, bound_fstar_height, bound_nonsoluble_length, bound_soluble_height, factorize,
    is_prime,
};
pub use certificate::{
    parse_certificate, verify_series_certificate, CertificateLine, CertificateVerdict,
    FactorOutcome, FactorStatus,
};
pub use fstar::{
    action_kernel_on_components, generalized_fitting_series, generalized_fitting_subgroup,
    group_is_simple, h_star, nonsoluble_length, semisimple_factor_decomposition,
    upper_nonsoluble_series, ComponentActionReport, ComponentsReport, SemisimpleFactors,
};

use num_bigint::BigUint;

use crate::algebra::{
    conjugacy_class_representatives, is_nilpotent, is_normal, is_soluble, normal_closure,
    span_of_elements, Subgroup,
};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::quotient::quotient;
use crate::Limits;

/// Which series a [`SeriesRecord`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Fitting,
    GeneralizedFitting,
    NonsolubleUpper,
    Chief,
    Derived,
    LowerCentral,
}

impl SeriesKind {
    /// Derived and lower central series descend; the others ascend.
    pub fn is_ascending(self) -> bool {
        !matches!(self, SeriesKind::Derived | SeriesKind::LowerCentral)
    }

    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::Fitting => "fitting",
            SeriesKind::GeneralizedFitting => "generalized-fitting",
            SeriesKind::NonsolubleUpper => "nonsoluble-upper",
            SeriesKind::Chief => "chief",
            SeriesKind::Derived => "derived",
            SeriesKind::LowerCentral => "lower-central",
        }
    }
}

/// Classification of one factor of a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorTag {
    Soluble,
    Semisimple,
    Nilpotent,
    Unclassified,
}

impl FactorTag {
    pub fn name(self) -> &'static str {
        match self {
            FactorTag::Soluble => "soluble",
            FactorTag::Semisimple => "semisimple",
            FactorTag::Nilpotent => "nilpotent",
            FactorTag::Unclassified => "unclassified",
        }
    }
}

/// A chain of subgroups of a common parent with per-factor classification.
///
/// Terms run in computation order: ascending for fitting-type series (term 0
/// trivial), descending for derived and lower central series (term 0 the
/// group). `factor_tags[i]` classifies the factor between terms `i` and
/// `i + 1`.
#[derive(Debug, Clone)]
pub struct SeriesRecord {
    parent: PermGroup,
    kind: SeriesKind,
    terms: Vec<Subgroup>,
    factor_tags: Vec<FactorTag>,
}

impl SeriesRecord {
    pub(crate) fn new(
        parent: PermGroup,
        kind: SeriesKind,
        terms: Vec<Subgroup>,
        factor_tags: Vec<FactorTag>,
    ) -> Self {
        assert!(!terms.is_empty(), "a series has at least one term");
        assert_eq!(terms.len(), factor_tags.len() + 1);
        SeriesRecord {
            parent,
            kind,
            terms,
            factor_tags,
        }
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn terms(&self) -> &[Subgroup] {
        &self.terms
    }

    pub fn factor_tags(&self) -> &[FactorTag] {
        &self.factor_tags
    }

    /// Number of factors (terms minus one).
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn term_orders(&self) -> Vec<BigUint> {
        self.terms.iter().map(Subgroup::order).collect()
    }
}

/// Kind-aware test for the corpus groups: every term normal in the parent and
/// monotone in the direction of the kind (nonsoluble-upper allows repeats).
pub fn series_is_well_formed(record: &SeriesRecord) -> bool {
    let terms = record.terms();
    let normal = terms.iter().all(|t| is_normal(record.parent(), t));
    let monotone = terms.windows(2).all(|w| {
        let (a, b) = (&w[0], &w[1]);
        if record.kind().is_ascending() {
            b.contains_subgroup(a)
                && (record.kind() == SeriesKind::NonsolubleUpper || a.order() < b.order())
        } else {
            a.contains_subgroup(b)
        }
    });
    normal && monotone
}

/// Distinct normal closures of the nontrivial class representatives together
/// with a classification by `keep`.
fn classified_closures(
    g: &PermGroup,
    limits: &Limits,
    keep: impl Fn(&Subgroup) -> bool,
) -> Result<Vec<(Subgroup, bool)>> {
    let reps = conjugacy_class_representatives(g, limits)?;
    let mut seen: Vec<(Subgroup, bool)> = Vec::new();
    for x in reps.iter().filter(|x| !x.is_identity()) {
        let closure = normal_closure(g, std::slice::from_ref(x))?;
        let known = seen
            .iter()
            .any(|(c, _)| c.order() == closure.order() && c.same_elements(&closure));
        if !known {
            let kept = keep(&closure);
            seen.push((closure, kept));
        }
    }
    Ok(seen)
}

/// Largest soluble normal subgroup: generated by every class whose normal
/// closure is soluble.
pub fn soluble_radical(g: &PermGroup, limits: &Limits) -> Result<Subgroup> {
    let closures = classified_closures(g, limits, is_soluble)?;
    let gens = closures
        .iter()
        .filter(|(_, soluble)| *soluble)
        .flat_map(|(c, _)| c.generators().iter());
    let group = span_of_elements(g.degree(), gens);
    Ok(Subgroup::from_group_unchecked(g.clone(), group))
}

/// Largest nilpotent normal subgroup, via Baer's criterion: generated by
/// every class whose normal closure is nilpotent.
pub fn fitting_subgroup(g: &PermGroup, limits: &Limits) -> Result<Subgroup> {
    let closures = classified_closures(g, limits, is_nilpotent)?;
    let gens = closures
        .iter()
        .filter(|(_, nilpotent)| *nilpotent)
        .flat_map(|(c, _)| c.generators().iter());
    let group = span_of_elements(g.degree(), gens);
    Ok(Subgroup::from_group_unchecked(g.clone(), group))
}

/// Inclusion-minimal members of the set of normal closures of nontrivial
/// class representatives, ordered by ascending order.
pub fn minimal_normal_subgroups(g: &PermGroup, limits: &Limits) -> Result<Vec<Subgroup>> {
    let closures = classified_closures(g, limits, |_| true)?;
    let mut minimal: Vec<Subgroup> = Vec::new();
    for (candidate, _) in &closures {
        let dominated = closures
            .iter()
            .any(|(other, _)| other.order() < candidate.order() && candidate.contains_subgroup(other));
        if !dominated {
            minimal.push(candidate.clone());
        }
    }
    minimal.sort_by_key(Subgroup::order);
    Ok(minimal)
}

/// Chief series: repeatedly lift a minimal normal subgroup of the successive
/// quotients. Factors are tagged soluble (elementary abelian) or semisimple.
pub fn chief_series(g: &PermGroup, limits: &Limits) -> Result<SeriesRecord> {
    let mut terms = vec![Subgroup::trivial(g.clone())];
    let mut tags = Vec::new();
    while terms.last().expect("nonempty").order() != g.order() {
        let current = terms.last().expect("nonempty");
        let q = quotient(g, current, limits)?;
        let minimals = minimal_normal_subgroups(q.rep(), limits)?;
        let chosen = minimals
            .first()
            .ok_or_else(|| Error::internal("nontrivial group without minimal normal subgroup"))?;
        let tag = if chosen.group().is_abelian() {
            FactorTag::Soluble
        } else {
            FactorTag::Semisimple
        };
        let lifted = q.preimage(chosen)?;
        if lifted.order() <= current.order() {
            return Err(Error::internal("chief series failed to ascend"));
        }
        terms.push(lifted);
        tags.push(tag);
    }
    Ok(SeriesRecord::new(g.clone(), SeriesKind::Chief, terms, tags))
}

/// Ascending Fitting series of a soluble group, and its height.
pub fn fitting_series(g: &PermGroup, limits: &Limits) -> Result<SeriesRecord> {
    if !is_soluble(&Subgroup::whole(g.clone())) {
        return Err(Error::domain("Fitting series requires a soluble group"));
    }
    let mut terms = vec![Subgroup::trivial(g.clone())];
    let mut tags = Vec::new();
    while terms.last().expect("nonempty").order() != g.order() {
        let current = terms.last().expect("nonempty");
        let q = quotient(g, current, limits)?;
        let fit = fitting_subgroup(q.rep(), limits)?;
        let lifted = q.preimage(&fit)?;
        if lifted.order() <= current.order() {
            return Err(Error::internal(
                "Fitting series failed to ascend on a nontrivial quotient",
            ));
        }
        terms.push(lifted);
        tags.push(FactorTag::Nilpotent);
    }
    Ok(SeriesRecord::new(
        g.clone(),
        SeriesKind::Fitting,
        terms,
        tags,
    ))
}

/// Fitting height of a soluble group; 0 for the trivial group.
pub fn fitting_height(g: &PermGroup, limits: &Limits) -> Result<usize> {
    Ok(fitting_series(g, limits)?.length())
}
