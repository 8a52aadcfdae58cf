//! Torus knot classes, the signature recursion with its lattice-count
//! oracle, and Alexander polynomials of torus knots.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::gcd;
use crate::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Handedness {
    /// The positive torus knot `T(p,q)`; its signature is negative.
    Right,
    /// The mirror `T(-p,q)`.
    Left,
}

impl Handedness {
    pub fn flip(self) -> Self {
        match self {
            Handedness::Right => Handedness::Left,
            Handedness::Left => Handedness::Right,
        }
    }
}

/// A torus knot in canonical form: `p >= q`, `gcd(p, q) = 1`, and a
/// handedness. Unknots (`q <= 1`) are always right-handed; the canonical
/// unknot is `(1, 0)`, while `(n, 1)` is kept as a distinct unknotted curve
/// on the torus because the crosscap construction keeps pinching it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusKnotClass {
    p: i64,
    q: i64,
    hand: Handedness,
}

impl TorusKnotClass {
    pub fn unknot() -> Self {
        Self { p: 1, q: 0, hand: Handedness::Right }
    }

    /// Shorthand for `canonicalize(p, q, hand)`.
    pub fn new(p: i64, q: i64, hand: Handedness) -> Result<Self> {
        canonicalize(p, q, hand)
    }

    pub fn right(p: i64, q: i64) -> Result<Self> {
        canonicalize(p, q, Handedness::Right)
    }

    pub fn left(p: i64, q: i64) -> Result<Self> {
        canonicalize(p, q, Handedness::Left)
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn hand(&self) -> Handedness {
        self.hand
    }

    pub fn is_unknot(&self) -> bool {
        self.q <= 1
    }

    pub fn mirror(&self) -> Self {
        mirror(self)
    }
}

impl fmt::Display for TorusKnotClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hand {
            Handedness::Right => write!(f, "T({},{})", self.p, self.q),
            Handedness::Left => write!(f, "T(-{},{})", self.p, self.q),
        }
    }
}

/// Normalizes the curve class `(a, b)` on the torus.
///
/// `(a, b)` and `(-a, -b)` are the same knot, the two coordinates may be
/// swapped, and flipping exactly one sign mirrors the knot.
pub fn canonicalize(a: i64, b: i64, hand: Handedness) -> Result<TorusKnotClass> {
    if a == 0 && b == 0 {
        return Err(Error::ZeroClass);
    }
    if gcd(a, b) != 1 {
        return Err(Error::NotPrimitive(a, b));
    }
    let (hi, lo) = {
        let (x, y) = (a.abs(), b.abs());
        (x.max(y), x.min(y))
    };
    if hi == 1 || lo == 0 {
        return Ok(TorusKnotClass::unknot());
    }
    if lo == 1 {
        return Ok(TorusKnotClass { p: hi, q: 1, hand: Handedness::Right });
    }
    let hand = if (a < 0) != (b < 0) { hand.flip() } else { hand };
    Ok(TorusKnotClass { p: hi, q: lo, hand })
}

pub fn mirror(k: &TorusKnotClass) -> TorusKnotClass {
    if k.is_unknot() {
        *k
    } else {
        TorusKnotClass { hand: k.hand.flip(), ..*k }
    }
}

fn check_coprime(p: i64, q: i64) -> Result<()> {
    if p < 0 || q < 0 || gcd(p, q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    Ok(())
}

/// Memo table for [`sigma_rec`], keyed by `(max, min)`.
///
/// One table can be reused across many queries; entries are final values,
/// so sharing is only an optimisation.
#[derive(Debug, Default, Clone)]
pub struct SignatureMemo {
    cache: HashMap<(i64, i64), i64>,
}

impl SignatureMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.cache.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cache.is_empty()
    }

    /// `sigma(p, q) = signature of T(-p, q)`, a nonnegative even integer.
    ///
    /// The recursion is unrolled into a loop: each visited pair records an
    /// affine relation `sigma(pair) = sign * sigma(next) + offset`, and the
    /// chain is resolved backwards once a base case or cached value is hit.
    /// Runs of the `2q < p` case are applied in one jump of `p div 2q`
    /// steps.
    pub fn sigma(&mut self, p: i64, q: i64) -> Result<i64> {
        check_coprime(p, q)?;
        let mut chain: Vec<((i64, i64), i64, i64)> = Vec::new();
        let (mut a, mut b) = (p.max(q), p.min(q));
        let base = loop {
            if a < b {
                std::mem::swap(&mut a, &mut b);
            }
            if let Some(&v) = self.cache.get(&(a, b)) {
                break v;
            }
            if b <= 1 {
                break 0;
            }
            if b == 2 {
                break a - 1;
            }
            let odd = b & 1;
            if 2 * b < a {
                let steps = a / (2 * b);
                chain.push(((a, b), 1, steps * (b * b - odd)));
                a -= 2 * b * steps;
            } else {
                // q < p < 2q; p == 2q is impossible for coprime q >= 2
                chain.push(((a, b), -1, b * b - 2 + odd));
                a = 2 * b - a;
            }
        };
        let mut value = base;
        for (key, sign, offset) in chain.into_iter().rev() {
            value = sign * value + offset;
            self.cache.insert(key, value);
        }
        Ok(value)
    }
}

/// Signature recursion with a fresh memo table.
pub fn sigma_rec(p: i64, q: i64) -> Result<i64> {
    SignatureMemo::new().sigma(p, q)
}

/// Independent lattice-point count for `sigma(p, q)`:
/// `2 * #{(i, j) : 0 < i < p, 0 < j < q, pq < 2(iq + jp) < 3pq} - (p-1)(q-1)`.
pub fn sigma_lattice(p: i64, q: i64) -> Result<i64> {
    check_coprime(p, q)?;
    if p < 2 || q < 1 {
        return Err(Error::OutOfRange(format!("lattice count needs p >= 2, q >= 1, got ({p}, {q})")));
    }
    let pq = p * q;
    let mut inside = 0i64;
    for i in 1..p {
        for j in 1..q {
            let s = 2 * (i * q + j * p);
            if s == pq || s == 3 * pq {
                return Err(Error::Invariant(format!(
                    "lattice point ({i}, {j}) on the boundary for coprime ({p}, {q})"
                )));
            }
            if pq < s && s < 3 * pq {
                inside += 1;
            }
        }
    }
    Ok(2 * inside - (p - 1) * (q - 1))
}

/// Murasugi signature of `k`: negative for right-handed torus knots.
pub fn signature(k: &TorusKnotClass) -> Result<i64> {
    signature_with(&mut SignatureMemo::new(), k)
}

pub fn signature_with(memo: &mut SignatureMemo, k: &TorusKnotClass) -> Result<i64> {
    if k.is_unknot() {
        return Ok(0);
    }
    let s = memo.sigma(k.p, k.q)?;
    if s < 0 || s % 2 != 0 {
        return Err(Error::Invariant(format!("sigma({}, {}) = {s} is not a nonnegative even integer", k.p, k.q)));
    }
    Ok(match k.hand {
        Handedness::Right => -s,
        Handedness::Left => s,
    })
}

/// `(p-1)(q-1)/2`.
pub fn seifert_genus(p: i64, q: i64) -> Result<i64> {
    check_coprime(p, q)?;
    if p == 0 || q == 0 {
        return Ok(0);
    }
    Ok((p - 1) * (q - 1) / 2)
}

fn one_minus_t_pow(k: i64) -> Poly {
    Poly::from_terms([(0, 1), (k, -1)])
}

/// Symmetrized Alexander polynomial
/// `T^{-(p-1)(q-1)/2} (1-T)(1-T^{pq}) / ((1-T^p)(1-T^q))`.
pub fn alexander(p: i64, q: i64) -> Result<Poly> {
    check_coprime(p, q)?;
    let (p, q) = (p.max(q), p.min(q));
    if q <= 1 {
        return Ok(Poly::one());
    }
    let pq = p
        .checked_mul(q)
        .ok_or_else(|| Error::OutOfRange(format!("p*q overflows for ({p}, {q})")))?;
    let num = &one_minus_t_pow(1) * &one_minus_t_pow(pq);
    let den = &one_minus_t_pow(p) * &one_minus_t_pow(q);
    let quot = num.exact_div(&den)?;
    Ok(quot.shift(-seifert_genus(p, q)?))
}

/// Closed form for `T(2k, 2k-1)`: the block sum
/// `sum_{j=1}^{k-1} T^{j(2k-1)} - T^{j(2k-1)-(k-j)} + T^{-j(2k-1)} - T^{-j(2k-1)+(k-j)}`
/// plus the constant term 1.
pub fn alexander_family(k: i64) -> Result<Poly> {
    if k < 2 {
        return Err(Error::OutOfRange(format!("family index k = {k} must be at least 2")));
    }
    let w = 2 * k - 1;
    let terms = (1..k).flat_map(|j| {
        let e = j * w;
        [(e, 1), (e - (k - j), -1), (-e, 1), (-e + (k - j), -1)]
    });
    Ok(&Poly::from_terms(terms) + &Poly::one())
}
