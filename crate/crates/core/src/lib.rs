//! Finite permutation groups and their length-type structural invariants.
//!
//! The crate provides:
//!
//! - permutations, base-and-strong-generating-set machinery ([`perm`], [`chain`],
//!   [`group`]): order, membership, element enumeration;
//! - subgroup algebra ([`algebra`]): normal closures, commutator subgroups,
//!   derived and lower central series, conjugacy classes, centralizers;
//! - quotient groups as permutation groups on cosets ([`quotient`]);
//! - structural invariants ([`series`]): soluble radical, Fitting and
//!   generalized Fitting subgroups and series, chief series, generalized
//!   Fitting height, the upper nonsoluble series and nonsoluble length,
//!   and certificate-based verification for groups beyond enumeration;
//! - coprime automorphism actions and fixed-point inequality checkers
//!   ([`action`]);
//! - constructions of the group corpus ([`construct`], [`field`]): classical
//!   families, direct and wreath products, PSL2/AGL1/GL2 over small fields
//!   with Frobenius maps;
//! - a corpus DSL, verification runner and report formats ([`corpus`],
//!   [`suite`], [`report`]) backing the `length-lab` CLI.
//!
//! All group orders are arbitrary-precision; operations that must enumerate
//! elements or cosets take explicit [`Limits`] and fail with a capacity error
//! rather than guess.
//!
//! ```
//! use length_lab::{construct, series, Limits};
//!
//! let s5 = construct::symmetric(5)?;
//! let limits = Limits::default();
//! assert_eq!(s5.order(), 120u32.into());
//! assert_eq!(series::nonsoluble_length(&s5, &limits)?, 1);
//! assert_eq!(series::h_star(&s5, &limits)?, 2);
//! # Ok::<(), length_lab::Error>(())
//! ```

pub mod action;
pub mod algebra;
pub mod chain;
pub mod construct;
pub mod corpus;
pub mod error;
pub mod field;
pub mod group;
pub mod perm;
pub mod quotient;
pub mod report;
pub mod series;
pub mod suite;

pub use error::{Error, Result};

/// Enumeration and quotient-degree budgets for exact computations.
///
/// Groups whose order exceeds `enumeration` cannot be enumerated elementwise;
/// quotients whose index exceeds `quotient` cannot be realised as coset
/// actions. Every operation that depends on either budget takes `Limits`
/// explicitly and reports a capacity error when exceeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum group order for elementwise enumeration.
    pub enumeration: usize,
    /// Maximum subgroup index for coset actions.
    pub quotient: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration: 200_000,
            quotient: 20_000,
        }
    }
}

impl Limits {
    pub fn new(enumeration: usize, quotient: usize) -> Self {
        Limits {
            enumeration,
            quotient,
        }
    }
}
