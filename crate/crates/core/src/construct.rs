//! Builders for the group corpus: classical families, direct and wreath
//! products, linear and projective groups over small fields, Frobenius maps,
//! and ambient extensions.
//!
//! Projective-line points are ordered with infinity first, then field
//! elements in lexicographic coefficient order; affine and vector points use
//! the same element order. Together with the pinned field polynomials this
//! makes every construction reproducible point-for-point.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Cyclic group of order `n` on `n` points.
pub fn cyclic(n: u64) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::invalid("cyclic group order must be positive"));
    }
    let n = n as usize;
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    let rotation = Permutation::from_images((0..n).map(|i| ((i + 1) % n) as u32).collect())?;
    PermGroup::new(n, vec![rotation])
}

/// Symmetric group on `n` points.
pub fn symmetric(n: u64) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::invalid("symmetric group degree must be positive"));
    }
    let n = n as usize;
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    let swap = Permutation::parse_cycles("(0 1)", n)?;
    if n == 2 {
        return PermGroup::new(n, vec![swap]);
    }
    let cycle = Permutation::from_images((0..n).map(|i| ((i + 1) % n) as u32).collect())?;
    PermGroup::new(n, vec![swap, cycle])
}

/// Alternating group on `n >= 3` points.
pub fn alternating(n: u64) -> Result<PermGroup> {
    if n < 3 {
        return Err(Error::invalid("alternating group needs at least 3 points"));
    }
    let n = n as usize;
    let three = Permutation::parse_cycles("(0 1 2)", n)?;
    if n == 3 {
        return PermGroup::new(n, vec![three]);
    }
    let cycle = if n % 2 == 1 {
        Permutation::from_images((0..n).map(|i| ((i + 1) % n) as u32).collect())?
    } else {
        // fix 0, cycle the odd-length tail
        let images: Vec<u32> = (0..n)
            .map(|i| match i {
                0 => 0,
                i if i == n - 1 => 1,
                i => i as u32 + 1,
            })
            .collect();
        Permutation::from_images(images)?
    };
    PermGroup::new(n, vec![three, cycle])
}

/// Dihedral group of order `order = 2n` acting on `n >= 3` points.
pub fn dihedral(order: u64) -> Result<PermGroup> {
    if order < 6 || !order.is_multiple_of(2) {
        return Err(Error::invalid(
            "dihedral order must be an even number of at least 6",
        ));
    }
    let n = (order / 2) as usize;
    let rotation = Permutation::from_images((0..n).map(|i| ((i + 1) % n) as u32).collect())?;
    let reflection = Permutation::from_images((0..n).map(|i| ((n - i) % n) as u32).collect())?;
    PermGroup::new(n, vec![rotation, reflection])
}

/// Direct product acting on the disjoint union of the point sets.
pub fn direct_product(g: &PermGroup, h: &PermGroup) -> PermGroup {
    let (dg, dh) = (g.degree(), h.degree());
    let degree = dg + dh;
    let mut gens = Vec::new();
    for x in g.generators() {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, img) in images.iter_mut().enumerate().take(dg) {
            *img = x.apply(i) as u32;
        }
        gens.push(Permutation::from_images(images).expect("embedding preserves bijectivity"));
    }
    for y in h.generators() {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for i in 0..dh {
            images[dg + i] = (dg + y.apply(i)) as u32;
        }
        gens.push(Permutation::from_images(images).expect("embedding preserves bijectivity"));
    }
    PermGroup::new(degree, gens).expect("positive degree")
}

/// Wreath product `S wr T` in its imprimitive action: one copy of `S` on
/// each of the `d` blocks, `T` permuting the blocks; order `|S|^d * |T|`.
///
/// ```
/// use length_lab::construct::{alternating, cyclic, wreath_product};
///
/// let w = wreath_product(&alternating(5)?, &cyclic(2)?);
/// assert_eq!(w.degree(), 10);
/// assert_eq!(w.order(), 7200u32.into());
/// # Ok::<(), length_lab::Error>(())
/// ```
pub fn wreath_product(s: &PermGroup, t: &PermGroup) -> PermGroup {
    let e = s.degree();
    let d = t.degree();
    let degree = d * e;
    let mut gens = Vec::new();
    for block in 0..d {
        for x in s.generators() {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for j in 0..e {
                images[block * e + j] = (block * e + x.apply(j)) as u32;
            }
            gens.push(Permutation::from_images(images).expect("block embedding"));
        }
    }
    for y in t.generators() {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for block in 0..d {
            for j in 0..e {
                images[block * e + j] = (y.apply(block) * e + j) as u32;
            }
        }
        gens.push(Permutation::from_images(images).expect("block permutation"));
    }
    PermGroup::new(degree, gens).expect("positive degree")
}

/// Targets that carry a natural Frobenius action on their point set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrobeniusTarget {
    /// Projective line: infinity first, then field elements.
    ProjectiveLine,
    /// Affine line: the field elements.
    AffineLine,
}

/// Projective line point of a field element, or of infinity for `None`.
fn projective_point(field: &FieldSpec, x: Option<u32>) -> usize {
    match x {
        None => 0,
        Some(e) => 1 + field.lex_rank(e) as usize,
    }
}

fn projective_element(field: &FieldSpec, point: usize) -> Option<u32> {
    (point != 0).then(|| field.element_of_rank(point as u32 - 1))
}

/// The Moebius action of an invertible matrix `[[a, b], [c, d]]` on the
/// projective line.
fn moebius(field: &FieldSpec, a: u32, b: u32, c: u32, d: u32) -> Result<Permutation> {
    let q = field.q() as usize;
    let images = (0..=q)
        .map(|point| {
            let image = match projective_element(field, point) {
                None => {
                    if c == 0 {
                        None
                    } else {
                        Some(field.mul(a, field.inv(c)))
                    }
                }
                Some(x) => {
                    let denom = field.add(field.mul(c, x), d);
                    if denom == 0 {
                        None
                    } else {
                        let numer = field.add(field.mul(a, x), b);
                        Some(field.mul(numer, field.inv(denom)))
                    }
                }
            };
            projective_point(field, image) as u32
        })
        .collect();
    Permutation::from_images(images)
}

/// `PSL(2, q)` on the projective line (`q + 1` points) from the standard
/// unipotent, torus and inversion generators.
pub fn psl2(field: &FieldSpec) -> Result<PermGroup> {
    let zeta = field.generator();
    let one = 1u32;
    let gens = vec![
        moebius(field, one, one, 0, one)?,                    // x -> x + 1
        moebius(field, zeta, 0, 0, field.inv(zeta))?,         // x -> zeta^2 x
        moebius(field, 0, field.neg(one), one, 0)?,           // x -> -1/x
    ];
    PermGroup::new(field.q() as usize + 1, gens)
}

/// `AGL(1, q) = {x -> ax + b, a != 0}` on the `q` affine points.
pub fn agl1(field: &FieldSpec) -> Result<PermGroup> {
    let q = field.q() as usize;
    let affine = |a: u32, b: u32| -> Result<Permutation> {
        let images = (0..q)
            .map(|point| {
                let x = field.element_of_rank(point as u32);
                field.lex_rank(field.add(field.mul(a, x), b))
            })
            .collect();
        Permutation::from_images(images)
    };
    let gens = vec![affine(1, 1)?, affine(field.generator(), 0)?];
    PermGroup::new(q, gens)
}

/// `GL(2, q)` acting on the `q^2 - 1` nonzero column vectors.
pub fn gl2_vectors(field: &FieldSpec) -> Result<PermGroup> {
    let q = field.q();
    let point_of = |u: u32, v: u32| -> usize {
        (field.lex_rank(u) * q + field.lex_rank(v)) as usize - 1
    };
    let degree = (q * q) as usize - 1;
    let matrix = |m: [[u32; 2]; 2]| -> Result<Permutation> {
        let mut images = vec![0u32; degree];
        for ru in 0..q {
            for rv in 0..q {
                if ru == 0 && rv == 0 {
                    continue;
                }
                let u = field.element_of_rank(ru);
                let v = field.element_of_rank(rv);
                let nu = field.add(field.mul(m[0][0], u), field.mul(m[0][1], v));
                let nv = field.add(field.mul(m[1][0], u), field.mul(m[1][1], v));
                images[(ru * q + rv) as usize - 1] = point_of(nu, nv) as u32;
            }
        }
        Permutation::from_images(images)
    };
    let zeta = field.generator();
    let gens = vec![
        matrix([[1, 1], [0, 1]])?,
        matrix([[1, 0], [1, 1]])?,
        matrix([[zeta, 0], [0, 1]])?,
    ];
    PermGroup::new(degree, gens)
}

/// The permutation induced by the field automorphism `x -> x^(p^e)` on the
/// point set of the target construction. Requires a non-prime field.
pub fn frobenius_automorphism(
    field: &FieldSpec,
    target: FrobeniusTarget,
    e: u32,
) -> Result<Permutation> {
    if field.f() <= 1 {
        return Err(Error::domain(
            "the Frobenius map of a prime field is trivial",
        ));
    }
    if e == 0 || e >= field.f() {
        return Err(Error::domain(format!(
            "Frobenius exponent must lie in 1..{}",
            field.f()
        )));
    }
    match target {
        FrobeniusTarget::ProjectiveLine => {
            let q = field.q() as usize;
            let images = (0..=q)
                .map(|point| {
                    let image =
                        projective_element(field, point).map(|x| field.frobenius_power(x, e));
                    projective_point(field, image) as u32
                })
                .collect();
            Permutation::from_images(images)
        }
        FrobeniusTarget::AffineLine => {
            let q = field.q() as usize;
            let images = (0..q)
                .map(|point| {
                    let x = field.element_of_rank(point as u32);
                    field.lex_rank(field.frobenius_power(x, e))
                })
                .collect();
            Permutation::from_images(images)
        }
    }
}

/// Ambient group `<G, phi>` for a permutation normalizing `G`.
pub fn extend_by(g: &PermGroup, phi: &Permutation) -> Result<PermGroup> {
    if phi.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            left: g.degree(),
            right: phi.degree(),
        });
    }
    for x in g.generators() {
        if !g.contains(&x.conjugated_by(phi)) {
            return Err(Error::invalid(
                "the extending permutation does not normalize the group",
            ));
        }
    }
    let mut gens = g.generators().to_vec();
    if !phi.is_identity() {
        gens.push(phi.clone());
    }
    PermGroup::new(g.degree(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{is_nilpotent, lower_central_series, Subgroup};
    use crate::Limits;

    #[test]
    fn classical_families() {
        assert_eq!(alternating(5).unwrap().order(), 60u32.into());
        assert_eq!(cyclic(1).unwrap().order(), 1u32.into());
        assert_eq!(cyclic(12).unwrap().order(), 12u32.into());
        assert_eq!(symmetric(4).unwrap().order(), 24u32.into());
        assert_eq!(symmetric(6).unwrap().order(), 720u32.into());
        assert_eq!(alternating(6).unwrap().order(), 360u32.into());
        let d8 = dihedral(8).unwrap();
        assert_eq!(d8.order(), 8u32.into());
        assert!(is_nilpotent(&Subgroup::whole(d8)));
        assert!(cyclic(0).is_err());
        assert!(alternating(2).is_err());
        assert!(dihedral(7).is_err());
        assert!(dihedral(4).is_err());
    }

    #[test]
    fn direct_products() {
        let a5 = alternating(5).unwrap();
        let prod = direct_product(&a5, &a5);
        assert_eq!(prod.order(), 3600u32.into());
        assert_eq!(prod.orbits().len(), 2);
        let c2 = cyclic(2).unwrap();
        assert_eq!(direct_product(&c2, &c2).order(), 4u32.into());
        assert_eq!(
            direct_product(&c2, &c2).orbits(),
            vec![vec![0, 1], vec![2, 3]]
        );
        let padded = direct_product(&a5, &PermGroup::trivial(1));
        assert_eq!(padded.order(), 60u32.into());
        assert_eq!(padded.degree(), 6);
    }

    #[test]
    fn wreath_products() {
        let c2 = cyclic(2).unwrap();
        let w = wreath_product(&c2, &c2);
        assert_eq!(w.order(), 8u32.into());
        // isomorphic to the dihedral group of order 8: same order,
        // nilpotency class and exponent
        let d8 = dihedral(8).unwrap();
        assert_eq!(
            lower_central_series(&Subgroup::whole(w.clone())).terms().len(),
            lower_central_series(&Subgroup::whole(d8.clone())).terms().len()
        );
        let exponent = |g: &PermGroup| -> u64 {
            g.elements(100)
                .unwrap()
                .iter()
                .map(|e| {
                    use num_traits::ToPrimitive;
                    e.order().to_u64().unwrap()
                })
                .fold(1u64, num_integer::lcm)
        };
        assert_eq!(exponent(&w), exponent(&d8));

        let a5 = alternating(5).unwrap();
        assert_eq!(wreath_product(&a5, &c2).order(), 7200u32.into());
        // wreath with the trivial top on one point is the bottom group
        let s = wreath_product(&a5, &PermGroup::trivial(1));
        assert!(s.equals(&a5));
    }

    #[test]
    fn wreath_order_law() {
        use num_bigint::BigUint;
        let c2 = cyclic(2).unwrap();
        let s3 = symmetric(3).unwrap();
        let a5 = alternating(5).unwrap();
        for (s, t) in [(&c2, &s3), (&s3, &c2), (&a5, &c2), (&c2, &a5)] {
            let w = wreath_product(s, t);
            let expected = s.order().pow(t.degree() as u32) * t.order();
            assert_eq!(w.order(), expected);
            assert_eq!(BigUint::from(w.degree()), (s.degree() * t.degree()).into());
        }
    }

    #[test]
    fn psl2_orders() {
        for (q, order) in [(5u64, 60u64), (7, 168), (8, 504)] {
            let f = FieldSpec::for_order(q).unwrap();
            let g = psl2(&f).unwrap();
            assert_eq!(g.degree(), q as usize + 1);
            assert_eq!(g.order(), order.into(), "|PSL2({q})|");
        }
    }

    #[test]
    fn psl2_32_order() {
        let f = FieldSpec::for_order(32).unwrap();
        let g = psl2(&f).unwrap();
        assert_eq!(g.degree(), 33);
        assert_eq!(g.order(), 32736u32.into());
    }

    #[test]
    fn agl1_and_gl2() {
        let f8 = FieldSpec::for_order(8).unwrap();
        assert_eq!(agl1(&f8).unwrap().order(), 56u32.into());
        let f5 = FieldSpec::for_order(5).unwrap();
        let gl = gl2_vectors(&f5).unwrap();
        assert_eq!(gl.degree(), 24);
        assert_eq!(gl.order(), 480u32.into()); // (25-1)(25-5)
    }

    #[test]
    fn frobenius_normalizes_its_targets() {
        let f32 = FieldSpec::for_order(32).unwrap();
        let g = psl2(&f32).unwrap();
        let phi = frobenius_automorphism(&f32, FrobeniusTarget::ProjectiveLine, 1).unwrap();
        assert_eq!(phi.order(), 5u32.into());
        for x in g.generators() {
            assert!(g.contains(&x.conjugated_by(&phi)));
        }

        let f8 = FieldSpec::for_order(8).unwrap();
        let a = agl1(&f8).unwrap();
        let psi = frobenius_automorphism(&f8, FrobeniusTarget::AffineLine, 1).unwrap();
        assert_eq!(psi.order(), 3u32.into());
        for x in a.generators() {
            assert!(a.contains(&x.conjugated_by(&psi)));
        }
        // fixed points of the Frobenius on the affine line: the prime field
        let fixed = (0..8).filter(|&pt| psi.apply(pt) == pt).count();
        assert_eq!(fixed, 2);
    }

    #[test]
    fn frobenius_of_a_prime_field_is_a_domain_error() {
        let f5 = FieldSpec::for_order(5).unwrap();
        assert!(matches!(
            frobenius_automorphism(&f5, FrobeniusTarget::AffineLine, 1),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn extensions() {
        let f32 = FieldSpec::for_order(32).unwrap();
        let g = psl2(&f32).unwrap();
        let phi = frobenius_automorphism(&f32, FrobeniusTarget::ProjectiveLine, 1).unwrap();
        let ambient = extend_by(&g, &phi).unwrap();
        assert_eq!(ambient.order(), 163_680u32.into()); // 5 * 32736

        let c5 = cyclic(5).unwrap();
        let refl = Permutation::parse_cycles("(1 4)(2 3)", 5).unwrap();
        let d10 = extend_by(&c5, &refl).unwrap();
        assert_eq!(d10.order(), 10u32.into());

        let id = Permutation::identity(5);
        assert!(extend_by(&c5, &id).unwrap().equals(&c5));

        // a permutation that does not normalize the group is rejected
        let bad = Permutation::parse_cycles("(2 3)", 5).unwrap();
        let a5 = alternating(5).unwrap();
        let c3 = PermGroup::new(5, vec![Permutation::parse_cycles("(0 1 2)", 5).unwrap()]).unwrap();
        assert!(extend_by(&c3, &bad).is_err());
        assert!(extend_by(&a5, &bad).is_ok()); // transpositions normalize A5
    }

    #[test]
    fn psl2_32_frobenius_fixed_points_inside_the_group() {
        let f32 = FieldSpec::for_order(32).unwrap();
        let g = psl2(&f32).unwrap();
        let phi = frobenius_automorphism(&f32, FrobeniusTarget::ProjectiveLine, 1).unwrap();
        let limits = Limits::default();
        let elems = g.elements(limits.enumeration).unwrap();
        let fixed: Vec<_> = elems
            .iter()
            .filter(|x| x.compose(&phi) == phi.compose(x))
            .collect();
        assert_eq!(fixed.len(), 6);
    }
}
