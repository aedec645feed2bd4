//! Small finite fields `GF(p^f)` with pinned defining polynomials.
//!
//! Elements are encoded as integers `0..q` whose base-`p` digits are the
//! polynomial coefficients (digit `i` is the coefficient of `x^i`).
//! Arithmetic goes through precomputed tables; the fields here are tiny.
//!
//! Point labelings of the constructions in [`crate::construct`] order field
//! elements lexicographically by coefficient sequence `(c_0, c_1, ...)`, so
//! the pinned polynomials make every corpus group bit-reproducible.

use crate::error::{Error, Result};

/// A concrete `GF(p^f)` with multiplication, inversion and Frobenius tables.
#[derive(Clone, Debug)]
pub struct FieldSpec {
    p: u32,
    f: u32,
    q: u32,
    /// Monic defining polynomial, `poly[i]` the coefficient of `x^i`,
    /// length `f + 1`.
    poly: Vec<u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    frob: Vec<u32>,
    generator: u32,
}

fn is_small_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Polynomial arithmetic over GF(p) on coefficient vectors.
fn poly_mul(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p).
fn poly_rem(p: u32, mut a: Vec<u32>, m: &[u32]) -> Vec<u32> {
    let deg_m = m.len() - 1;
    while a.len() > deg_m {
        let lead = *a.last().unwrap() % p;
        let shift = a.len() - 1 - deg_m;
        if lead != 0 {
            for (i, &mi) in m.iter().enumerate() {
                let idx = shift + i;
                a[idx] = (a[idx] + p * p - (lead * mi) % p) % p;
            }
        }
        a.pop();
    }
    a
}

fn digits(p: u32, f: u32, mut e: u32) -> Vec<u32> {
    let mut out = vec![0u32; f as usize];
    for d in out.iter_mut() {
        *d = e % p;
        e /= p;
    }
    out
}

fn undigits(p: u32, coeffs: &[u32]) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

impl FieldSpec {
    /// Builds the field, verifying that `poly` is monic of degree `f` and
    /// irreducible over GF(p) by an exhaustive divisor check.
    pub fn new(p: u32, f: u32, poly: Vec<u32>) -> Result<FieldSpec> {
        if !is_small_prime(p) {
            return Err(Error::Field(format!("{p} is not prime")));
        }
        if f == 0 || poly.len() != f as usize + 1 || poly[f as usize] != 1 {
            return Err(Error::Field(format!(
                "defining polynomial must be monic of degree {f}"
            )));
        }
        if poly.iter().any(|&c| c >= p) {
            return Err(Error::Field("polynomial coefficient out of range".into()));
        }
        if f > 1 && !irreducible(p, &poly) {
            return Err(Error::Field(format!(
                "defining polynomial is reducible over GF({p})"
            )));
        }
        let q = p.checked_pow(f).ok_or_else(|| Error::Field("field too large".into()))?;
        if q > 4096 {
            return Err(Error::Field(format!("field of order {q} is beyond scope")));
        }

        let mut mul = vec![0u32; (q * q) as usize];
        for a in 0..q {
            let da = digits(p, f, a);
            for b in a..q {
                let prod = poly_rem(p, poly_mul(p, &da, &digits(p, f, b)), &poly);
                let mut padded = prod;
                padded.resize(f as usize, 0);
                let val = undigits(p, &padded);
                mul[(a * q + b) as usize] = val;
                mul[(b * q + a) as usize] = val;
            }
        }
        let mut inv = vec![0u32; q as usize];
        for a in 1..q {
            for b in 1..q {
                if mul[(a * q + b) as usize] == 1 {
                    inv[a as usize] = b;
                    break;
                }
            }
            if inv[a as usize] == 0 {
                return Err(Error::Field(format!(
                    "element {a} has no inverse; polynomial is reducible"
                )));
            }
        }
        let mut frob = vec![0u32; q as usize];
        for a in 0..q {
            let mut acc = a;
            for _ in 1..p {
                acc = mul[(acc * q + a) as usize];
            }
            frob[a as usize] = acc;
        }
        let generator = (1..q)
            .find(|&a| multiplicative_order(&mul, q, a) == q - 1)
            .ok_or_else(|| Error::Field("no multiplicative generator found".into()))?;
        Ok(FieldSpec {
            p,
            f,
            q,
            poly,
            mul,
            inv,
            frob,
            generator,
        })
    }

    /// The field of order `q` with its pinned defining polynomial.
    pub fn for_order(q: u64) -> Result<FieldSpec> {
        let pinned: &[(u32, u32, &[u32])] = &[
            (2, 2, &[1, 1, 1]),          // x^2 + x + 1
            (2, 3, &[1, 1, 0, 1]),       // x^3 + x + 1
            (2, 4, &[1, 1, 0, 0, 1]),    // x^4 + x + 1
            (2, 5, &[1, 0, 1, 0, 0, 1]), // x^5 + x^2 + 1
            (3, 2, &[1, 0, 1]),          // x^2 + 1
            (3, 3, &[1, 2, 0, 1]),       // x^3 + 2x + 1
            (5, 2, &[1, 1, 1]),          // x^2 + x + 1
            (5, 3, &[1, 1, 0, 1]),       // x^3 + x + 1
            (7, 2, &[1, 0, 1]),          // x^2 + 1
        ];
        if q < 2 {
            return Err(Error::Field(format!("{q} is not a prime power")));
        }
        let q32 = u32::try_from(q).map_err(|_| Error::Field("field too large".into()))?;
        if is_small_prime(q32) {
            return FieldSpec::new(q32, 1, vec![0, 1]);
        }
        for &(p, f, poly) in pinned {
            if p.pow(f) == q32 {
                return FieldSpec::new(p, f, poly.to_vec());
            }
        }
        Err(Error::Field(format!(
            "no pinned defining polynomial for a field of order {q}"
        )))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn poly(&self) -> &[u32] {
        &self.poly
    }

    /// Smallest multiplicative generator in element encoding.
    pub fn generator(&self) -> u32 {
        self.generator
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (digits(self.p, self.f, a), digits(self.p, self.f, b));
        let sum: Vec<u32> = da
            .iter()
            .zip(&db)
            .map(|(x, y)| (x + y) % self.p)
            .collect();
        undigits(self.p, &sum)
    }

    pub fn neg(&self, a: u32) -> u32 {
        let da = digits(self.p, self.f, a);
        let neg: Vec<u32> = da.iter().map(|&x| (self.p - x) % self.p).collect();
        undigits(self.p, &neg)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert_ne!(a, 0, "zero has no inverse");
        self.inv[a as usize]
    }

    /// `a^(p^e)`.
    pub fn frobenius_power(&self, a: u32, e: u32) -> u32 {
        (0..e).fold(a, |acc, _| self.frob[acc as usize])
    }

    /// Rank of the element in lexicographic coefficient order
    /// `(c_0, c_1, ...)`, used for stable point labelings.
    pub fn lex_rank(&self, a: u32) -> u32 {
        digits(self.p, self.f, a)
            .iter()
            .fold(0, |acc, &c| acc * self.p + c)
    }

    /// Element with the given lexicographic rank.
    pub fn element_of_rank(&self, rank: u32) -> u32 {
        let mut coeffs = vec![0u32; self.f as usize];
        let mut r = rank;
        for i in (0..self.f as usize).rev() {
            coeffs[i] = r % self.p;
            r /= self.p;
        }
        undigits(self.p, &coeffs)
    }
}

fn multiplicative_order(mul: &[u32], q: u32, a: u32) -> u32 {
    let mut acc = a;
    let mut n = 1;
    while acc != 1 {
        acc = mul[(acc * q + a) as usize];
        n += 1;
    }
    n
}

/// Exhaustive irreducibility test: no monic divisor of degree `1..=f/2`.
fn irreducible(p: u32, poly: &[u32]) -> bool {
    let f = poly.len() - 1;
    for d in 1..=f / 2 {
        // iterate all monic polynomials of degree d
        let count = p.pow(d as u32);
        for enc in 0..count {
            let mut div: Vec<u32> = digits(p, d as u32, enc);
            div.push(1);
            let rem = poly_rem(p, poly.to_vec(), &div);
            if rem.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}
