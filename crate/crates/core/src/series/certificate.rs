//! Certificate-based verification of nonsoluble-length bounds for groups
//! beyond enumeration.
//!
//! A certificate lists an ascending chain of subgroups of `G` (the trivial
//! group is implicit at the bottom, the last term must be the whole group),
//! one per line, each tagged `soluble` or `semisimple` for the factor it
//! tops. The verifier checks normality and the factor tags where the limits
//! allow, reports `unverified` where they do not, and on success witnesses
//! `lambda(G) <= number of semisimple factors`.
//!
//! Line format: `TAG: GEN{, GEN}` with generators in cycle notation, e.g.
//! `semisimple: (0 1 2 3 4), (0 1 2)`. Blank lines and `#` comments are
//! ignored.

use num_bigint::BigUint;

use crate::algebra::{is_normal, is_soluble, Subgroup};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::quotient::quotient;
use crate::series::{
    generalized_fitting_subgroup, soluble_radical, FactorTag,
};
use crate::Limits;

/// One parsed certificate line: a series term and the tag of its factor.
#[derive(Clone, Debug)]
pub struct CertificateLine {
    pub tag: FactorTag,
    pub generators: Vec<Permutation>,
}

/// Verification status of one factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorStatus {
    /// The tag was checked exactly.
    Verified,
    /// The factor exceeds the enumeration or quotient limits; the tag was
    /// accepted as a claim, not checked.
    Unverified,
}

#[derive(Clone, Debug)]
pub struct FactorOutcome {
    pub tag: FactorTag,
    pub factor_order: BigUint,
    pub status: FactorStatus,
}

/// Successful verification: every term normal and ascending, every checkable
/// tag confirmed.
#[derive(Clone, Debug)]
pub struct CertificateVerdict {
    /// `lambda(G)` is at most this.
    pub witnessed_length: usize,
    pub factors: Vec<FactorOutcome>,
}

impl CertificateVerdict {
    pub fn all_verified(&self) -> bool {
        self.factors
            .iter()
            .all(|f| f.status == FactorStatus::Verified)
    }
}

/// Parses a certificate file against a fixed degree.
pub fn parse_certificate(text: &str, degree: usize) -> Result<Vec<CertificateLine>> {
    let mut lines = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (tag_text, rest) = line.split_once(':').ok_or(Error::Parse {
            line: lineno + 1,
            col: 1,
            msg: "expected `soluble:` or `semisimple:`".into(),
        })?;
        let tag = match tag_text.trim() {
            "soluble" => FactorTag::Soluble,
            "semisimple" => FactorTag::Semisimple,
            other => {
                return Err(Error::Parse {
                    line: lineno + 1,
                    col: 1,
                    msg: format!("unknown factor tag `{other}`"),
                })
            }
        };
        let mut generators = Vec::new();
        for part in rest.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let perm = Permutation::parse_cycles(part, degree).map_err(|e| Error::Parse {
                line: lineno + 1,
                col: raw.find(part).map_or(1, |c| c + 1),
                msg: e.to_string(),
            })?;
            generators.push(perm);
        }
        lines.push(CertificateLine { tag, generators });
    }
    Ok(lines)
}

/// Verifies a claimed alternating series and returns the witnessed bound.
pub fn verify_series_certificate(
    g: &PermGroup,
    lines: &[CertificateLine],
    limits: &Limits,
) -> Result<CertificateVerdict> {
    if lines.is_empty() {
        return Err(Error::Certificate {
            index: 0,
            msg: "certificate is empty".into(),
        });
    }
    let mut outcomes = Vec::new();
    let mut prev = Subgroup::trivial(g.clone());
    for (idx, line) in lines.iter().enumerate() {
        let index = idx + 1;
        for x in &line.generators {
            if !g.checked_contains(x).map_err(|e| Error::Certificate {
                index,
                msg: e.to_string(),
            })? {
                return Err(Error::Certificate {
                    index,
                    msg: format!("generator {x} is not an element of the group"),
                });
            }
        }
        let term_group = PermGroup::new(g.degree(), line.generators.clone())
            .map_err(|e| Error::Certificate {
                index,
                msg: e.to_string(),
            })?;
        let term = Subgroup::from_group_unchecked(g.clone(), term_group);
        if !term.contains_subgroup(&prev) {
            return Err(Error::Certificate {
                index,
                msg: "terms are not ascending".into(),
            });
        }
        if !is_normal(g, &term) {
            return Err(Error::Certificate {
                index,
                msg: "term is not normal in the group".into(),
            });
        }
        let factor_order = term.order() / prev.order();
        let status = check_factor(&prev, &term, line.tag, limits, index)?;
        outcomes.push(FactorOutcome {
            tag: line.tag,
            factor_order,
            status,
        });
        prev = term;
    }
    if !prev.group().equals(g) {
        return Err(Error::Certificate {
            index: lines.len(),
            msg: "series does not reach the whole group".into(),
        });
    }
    let witnessed = outcomes
        .iter()
        .filter(|o| o.tag == FactorTag::Semisimple)
        .count();
    Ok(CertificateVerdict {
        witnessed_length: witnessed,
        factors: outcomes,
    })
}

/// Realises the factor `term/prev` as a group when the limits allow.
fn factor_group(prev: &Subgroup, term: &Subgroup, limits: &Limits) -> Result<Option<PermGroup>> {
    if prev.is_trivial() {
        return Ok(Some(term.group().clone()));
    }
    let index = term.order() / prev.order();
    if index > BigUint::from(limits.quotient) {
        return Ok(None);
    }
    let prev_in_term = Subgroup::from_group_unchecked(term.group().clone(), prev.group().clone());
    let q = quotient(term.group(), &prev_in_term, limits)?;
    Ok(Some(q.rep().clone()))
}

fn check_factor(
    prev: &Subgroup,
    term: &Subgroup,
    tag: FactorTag,
    limits: &Limits,
    index: usize,
) -> Result<FactorStatus> {
    match tag {
        FactorTag::Soluble => {
            if prev.order() == term.order() {
                return Ok(FactorStatus::Verified); // trivial factor
            }
            match factor_group(prev, term, limits)? {
                Some(u) => {
                    if is_soluble(&Subgroup::whole(u)) {
                        Ok(FactorStatus::Verified)
                    } else {
                        Err(Error::Certificate {
                            index,
                            msg: "factor tagged soluble is not soluble".into(),
                        })
                    }
                }
                None => Ok(FactorStatus::Unverified),
            }
        }
        FactorTag::Semisimple => {
            if prev.order() == term.order() {
                return Err(Error::Certificate {
                    index,
                    msg: "semisimple factor must be nontrivial".into(),
                });
            }
            let Some(u) = factor_group(prev, term, limits)? else {
                return Ok(FactorStatus::Unverified);
            };
            if !u.order_within(limits.enumeration) {
                return Ok(FactorStatus::Unverified);
            }
            let radical = soluble_radical(&u, limits)?;
            if !radical.is_trivial() {
                return Err(Error::Certificate {
                    index,
                    msg: "factor tagged semisimple has a nontrivial soluble radical".into(),
                });
            }
            let fstar = generalized_fitting_subgroup(&u, limits)?.fstar;
            if fstar.order() != u.order() {
                return Err(Error::Certificate {
                    index,
                    msg: "factor tagged semisimple is not its own generalized Fitting subgroup"
                        .into(),
                });
            }
            Ok(FactorStatus::Verified)
        }
        _ => Err(Error::Certificate {
            index,
            msg: "certificate tags must be soluble or semisimple".into(),
        }),
    }
}
