//! Permutations of `{0..n-1}` stored as image sequences, with cycle notation.
//!
//! Composition is left-to-right: `p.compose(&q)` maps `i` to `q(p(i))`.
//! Cycle notation uses 0-based points, e.g. `"(0 1 2 3 4)(5 6)"`; the
//! identity is spelled `"()"`.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};

/// A bijection of `{0..degree-1}`.
///
/// ```
/// use length_lab::perm::Permutation;
///
/// let c = Permutation::parse_cycles("(0 1 2 3 4)(5 6)", 7)?;
/// assert_eq!(c.apply(4), 0);
/// assert_eq!(c.order(), 10u32.into());
/// assert_eq!(c.to_string(), "(0 1 2 3 4)(5 6)");
/// # Ok::<(), length_lab::Error>(())
/// ```
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// The identity on `degree` points.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image sequence, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            let Some(slot) = seen.get_mut(img as usize) else {
                return Err(Error::invalid(format!(
                    "image {img} out of range for degree {n}"
                )));
            };
            if *slot {
                return Err(Error::invalid(format!("image {img} repeated")));
            }
            *slot = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of a point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// Composite mapping `i -> other(self(i))`: apply `self` first, then `other`.
    ///
    /// Panics if the degrees differ; use [`Permutation::checked_compose`] at
    /// input boundaries.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "compose: degree mismatch");
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    /// Degree-checked composition.
    pub fn checked_compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose(other))
    }

    /// The unique `r` with `self.compose(&r) = identity`.
    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `self` raised to an integer power.
    pub fn pow(&self, exp: i64) -> Permutation {
        let mut base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Conjugate `h^-1 * self * h` (left-to-right application).
    pub fn conjugated_by(&self, h: &Permutation) -> Permutation {
        h.inverse().compose(self).compose(h)
    }

    /// Commutator `[self, other] = self^-1 other^-1 self other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    /// Multiplicative order (lcm of cycle lengths).
    pub fn order(&self) -> BigUint {
        let mut ord = BigUint::one();
        for cycle in self.cycles() {
            ord = ord.lcm(&BigUint::from(cycle.len()));
        }
        ord
    }

    /// Points moved by the permutation, ascending.
    pub fn moved_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i != v as usize)
            .map(|(i, _)| i)
            .collect()
    }

    /// Smallest moved point, if any.
    pub fn smallest_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &v)| i != v as usize)
            .map(|(i, _)| i)
    }

    /// Nontrivial cycles, each rotated to start at its smallest point and
    /// sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Parses cycle notation against a fixed degree.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        let cycles = scan_cycles(text)?;
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in &cycles {
            for window in 0..cycle.len() {
                let from = cycle[window];
                let to = cycle[(window + 1) % cycle.len()];
                if from >= degree {
                    return Err(Error::invalid(format!(
                        "point {from} out of range for degree {degree}"
                    )));
                }
                if touched[from] {
                    return Err(Error::invalid(format!(
                        "point {from} appears in two cycles"
                    )));
                }
                touched[from] = true;
                images[from] = to as u32;
            }
        }
        Permutation::from_images(images)
    }

    /// Parses cycle notation, inferring the degree as `max point + 1`
    /// (degree 1 for the identity).
    pub fn parse_cycles_auto(text: &str) -> Result<Permutation> {
        let cycles = scan_cycles(text)?;
        let degree = cycles
            .iter()
            .flatten()
            .copied()
            .max()
            .map_or(1, |m| m + 1);
        Self::parse_cycles(text, degree)
    }
}

/// Tokenizes `"(a b c)(d e)"` into point lists. `"()"` yields no cycles.
fn scan_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut digits = String::new();
    let flush =
        |digits: &mut String, current: &mut Option<Vec<usize>>| -> Result<()> {
            if digits.is_empty() {
                return Ok(());
            }
            let point: usize = digits
                .parse()
                .map_err(|_| Error::invalid(format!("bad point `{digits}`")))?;
            digits.clear();
            match current {
                Some(cycle) => cycle.push(point),
                None => return Err(Error::invalid("point outside parentheses")),
            }
            Ok(())
        };
    for ch in text.chars() {
        match ch {
            '(' => {
                if current.is_some() {
                    return Err(Error::invalid("nested parenthesis"));
                }
                current = Some(Vec::new());
            }
            ')' => {
                flush(&mut digits, &mut current)?;
                match current.take() {
                    Some(cycle) => {
                        if cycle.len() == 1 {
                            return Err(Error::invalid("cycle of length 1"));
                        }
                        if !cycle.is_empty() {
                            cycles.push(cycle);
                        }
                    }
                    None => return Err(Error::invalid("unmatched `)`")),
                }
            }
            c if c.is_ascii_digit() => digits.push(c),
            c if c.is_whitespace() => flush(&mut digits, &mut current)?,
            c => return Err(Error::invalid(format!("unexpected character `{c}`"))),
        }
    }
    if current.is_some() {
        return Err(Error::invalid("unclosed `(`"));
    }
    Ok(cycles)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, degree: usize) -> Permutation {
        Permutation::parse_cycles(s, degree).unwrap()
    }

    #[test]
    fn three_cycle_squared_is_its_inverse() {
        let c = p("(0 1 2)", 3);
        assert_eq!(c.compose(&c), p("(0 2 1)", 3));
        assert_eq!(c.compose(&c), c.inverse());
    }

    #[test]
    fn identity_laws() {
        let c = p("(0 1 2 3 4)(5 6)", 8);
        let id = Permutation::identity(8);
        assert_eq!(c.compose(&id), c);
        assert_eq!(id.compose(&c), c);
        assert_eq!(c.compose(&c.inverse()), id);
    }

    #[test]
    fn involution_is_self_inverse() {
        let v = p("(0 1)(2 3)", 4);
        assert_eq!(v.inverse(), v);
        assert_eq!(v.compose(&v), Permutation::identity(4));
    }

    #[test]
    fn compose_is_apply_left_then_right() {
        let a = p("(0 1)", 3);
        let b = p("(1 2)", 3);
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.compose(&b).apply(0), 2);
        assert_eq!(b.compose(&a).apply(0), 1);
    }

    #[test]
    fn degree_mismatch_is_an_input_error() {
        let a = p("(0 1)", 2);
        let b = p("(0 1)", 3);
        assert!(matches!(
            a.checked_compose(&b),
            Err(Error::DegreeMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
        assert!(Permutation::from_images(vec![1, 0]).is_ok());
    }

    #[test]
    fn parse_and_format() {
        let c = p("(0 1 2 3 4)(5 6)", 7);
        assert_eq!(c.to_string(), "(0 1 2 3 4)(5 6)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert_eq!(Permutation::parse_cycles("()", 4).unwrap(), Permutation::identity(4));
        // starting a cycle mid-way normalises on output
        assert_eq!(p("(2 0 1)", 3).to_string(), "(0 1 2)");
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(Permutation::parse_cycles("(0 1", 3).is_err());
        assert!(Permutation::parse_cycles("(0 1)(1 2)", 3).is_err());
        assert!(Permutation::parse_cycles("0 1", 3).is_err());
        assert!(Permutation::parse_cycles("(5)", 6).is_err());
        assert!(Permutation::parse_cycles("(0 9)", 3).is_err());
    }

    #[test]
    fn parse_auto_infers_degree() {
        let c = Permutation::parse_cycles_auto("(0 1 2)(5 6)").unwrap();
        assert_eq!(c.degree(), 7);
        assert_eq!(Permutation::parse_cycles_auto("()").unwrap().degree(), 1);
    }

    #[test]
    fn element_order() {
        assert_eq!(p("(0 1 2 3 4)(5 6)", 7).order(), BigUint::from(10u32));
        assert_eq!(Permutation::identity(5).order(), BigUint::one());
    }

    #[test]
    fn pow_matches_repeated_composition() {
        let c = p("(0 1 2 3 4)", 5);
        assert_eq!(c.pow(3), c.compose(&c).compose(&c));
        assert_eq!(c.pow(-1), c.inverse());
        assert_eq!(c.pow(0), Permutation::identity(5));
        assert_eq!(c.pow(5), Permutation::identity(5));
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let g = p("(0 1 2)", 4);
        let h = p("(2 3)", 4);
        assert_eq!(g.conjugated_by(&h), p("(0 1 3)", 4));
    }
}
