//! Correction terms of surgeries on torus knots, plus the two closed-form
//! correction terms used by the obstruction: the alternating-knot formula
//! and the bottom correction term of a circle bundle.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::torus::{alexander, Handedness, TorusKnotClass};
use crate::Rational;

/// Torsion coefficient of the Alexander polynomial of `T(p, q)`.
pub fn t0(p: i64, q: i64) -> Result<i64> {
    alexander(p, q)?.torsion_coefficient()
}

/// `(d_{-1/2}, d_{1/2})` of zero surgery on the positive torus knot
/// `T(p, q)`: `(-1/2, 1/2 - 2 t0)`.
pub fn d_zero_surgery(p: i64, q: i64) -> Result<(Rational, Rational)> {
    let t = t0(p, q)?;
    let half = Rational::new(1, 2);
    Ok((-half, half - Rational::from_integer(2 * t)))
}

/// `(d(S^3_{-1}(K)), d(S^3_{+1}(K)))` for a torus knot `K`.
///
/// Zero-surgery values are shifted by `+1/2` and `-1/2` respectively for the
/// right-handed knot; the mirror swaps and negates the pair.
pub fn d_pm1(k: &TorusKnotClass) -> Result<(i64, i64)> {
    if k.is_unknot() {
        return Ok((0, 0));
    }
    d_pm1_from_t0(k, t0(k.p(), k.q())?)
}

/// [`d_pm1`] with the torsion coefficient of `k` already known.
pub fn d_pm1_from_t0(k: &TorusKnotClass, t0: i64) -> Result<(i64, i64)> {
    let half = Rational::new(1, 2);
    let (d_minus_half, d_plus_half) = (-half, half - Rational::from_integer(2 * t0));
    let half = Rational::new(1, 2);
    let d_minus1 = d_minus_half + half;
    let d_plus1 = d_plus_half - half;
    let as_even = |d: Rational| -> Result<i64> {
        if !d.is_integer() || d.to_integer().is_odd() {
            return Err(Error::Invariant(format!("correction term {d} of {k} is not an even integer")));
        }
        Ok(d.to_integer())
    };
    let right = (as_even(d_minus1)?, as_even(d_plus1)?);
    Ok(match k.hand() {
        Handedness::Right => right,
        Handedness::Left => (-right.1, -right.0),
    })
}

/// `d(S^3_{-1}(K)) = max(0, 2 * ceil(sigma / 4))` for alternating `K`.
pub fn d_minus1_alternating(sigma: i64) -> Result<i64> {
    if sigma.is_odd() {
        return Err(Error::OddSignature(sigma));
    }
    Ok((2 * Integer::div_ceil(&sigma, &4)).max(0))
}

/// Bottom correction term of the circle bundle of Euler number `-n` over a
/// genus-`g` surface: `1/4 - g^2/n - n/4`, valid for `n > 2g`.
pub fn d_b_circle_bundle(g: i64, n: i64) -> Result<Rational> {
    if g < 0 || n < 1 || n <= 2 * g {
        return Err(Error::OutOfRange(format!("circle bundle formula needs n > 2g >= 0, got g = {g}, n = {n}")));
    }
    Ok(Rational::new(1, 4) - Rational::new(g * g, n) - Rational::new(n, 4))
}
