//! Exact integer helpers shared by the signature recursion and the pinch
//! arithmetic. Everything here is generic over the integer type so the same
//! code runs on machine words and on big integers.

use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};

/// Extended Euclid: returns `(g, x, y)` with `g = gcd(|a|, |b|) >= 0` and
/// `a*x + b*y = g`. `gcd(0, 0) = 0`.
pub fn ext_gcd<T>(a: T, b: T) -> (T, T, T)
where
    T: Integer + Signed + Clone,
{
    let (mut old_r, mut r) = (a, b);
    let (mut old_x, mut x) = (T::one(), T::zero());
    let (mut old_y, mut y) = (T::zero(), T::one());
    while !r.is_zero() {
        let quot = old_r.div_floor(&r);
        let next_r = old_r - quot.clone() * r.clone();
        old_r = std::mem::replace(&mut r, next_r);
        let next_x = old_x - quot.clone() * x.clone();
        old_x = std::mem::replace(&mut x, next_x);
        let next_y = old_y - quot * y.clone();
        old_y = std::mem::replace(&mut y, next_y);
    }
    if old_r.is_negative() {
        (-old_r, -old_x, -old_y)
    } else {
        (old_r, old_x, old_y)
    }
}

/// Representative of `x` modulo `m` in `[0, m)`.
pub fn min_nonneg_rep<T>(x: T, m: T) -> T
where
    T: Integer + Clone,
{
    x.mod_floor(&m)
}

/// Inverse of `a` modulo `m`, reduced into `[0, m)`.
///
/// Everything is congruent modulo 1, so `mod_inverse(a, 1) = 0`.
pub fn mod_inverse<T>(a: T, m: T) -> Result<T>
where
    T: Integer + Signed + Clone + std::fmt::Display,
{
    if m < T::one() {
        return Err(Error::OutOfRange(format!("modulus {m} must be at least 1")));
    }
    if m.is_one() {
        return Ok(T::zero());
    }
    let (g, x, _) = ext_gcd(a.clone(), m.clone());
    if !g.is_one() {
        return Err(Error::NotInvertible(a.to_string(), m.to_string()));
    }
    Ok(min_nonneg_rep(x, m))
}

/// `gcd(|a|, |b|)` on plain machine integers.
pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    #[test]
    fn ext_gcd_examples() {
        assert_eq!(ext_gcd(3i64, 4), (1, -1, 1));
        assert_eq!(ext_gcd(0i64, 5), (5, 0, 1));
        assert_eq!(ext_gcd(0i64, 0), (0, 1, 0));
        let (g, x, y) = ext_gcd(240i64, 46);
        assert_eq!(g, 2);
        assert_eq!(240 * x + 46 * y, 2);
    }

    #[test]
    fn ext_gcd_negative_inputs() {
        let (g, x, y) = ext_gcd(-12i64, 18);
        assert_eq!(g, 6);
        assert_eq!(-12 * x + 18 * y, 6);
        let (g, x, _) = ext_gcd(-7i64, 0);
        assert_eq!((g, -7 * x), (7, 7));
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(3i64, 4), Ok(3));
        assert_eq!(mod_inverse(7i64, 1), Ok(0));
        assert_eq!(mod_inverse(2i64, 5), Ok(3));
        assert_eq!(mod_inverse(-1i64, 5), Ok(4));
        assert!(matches!(mod_inverse(4i64, 6), Err(Error::NotInvertible(..))));
        assert!(matches!(mod_inverse(4i64, 0), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn min_nonneg_rep_examples() {
        assert_eq!(min_nonneg_rep(-3i64, 7), 4);
        assert_eq!(min_nonneg_rep(14i64, 7), 0);
        assert_eq!(min_nonneg_rep(-1i64, 4), 3);
    }

    #[test]
    fn mod_inverse_exhaustive_small_moduli() {
        for m in 2i64..=1000 {
            for a in 1..m {
                match mod_inverse(a, m) {
                    Ok(inv) => {
                        assert!((0..m).contains(&inv));
                        assert_eq!(inv * a % m, 1, "a={a} m={m}");
                    }
                    Err(_) => assert_ne!(gcd(a, m), 1),
                }
            }
        }
    }

    #[test]
    fn generic_over_big_integers() {
        let a = BigInt::from(240);
        let b = BigInt::from(46);
        let (g, x, y) = ext_gcd(a.clone(), b.clone());
        assert_eq!(g, BigInt::from(2));
        assert_eq!(a * x + b * y, g);
        let big_m: BigInt = "1000000000000000000000007".parse().unwrap();
        let inv = mod_inverse(BigInt::from(3), big_m.clone()).unwrap();
        assert!((inv * BigInt::from(3) % &big_m) == BigInt::from(1));
        assert_eq!(ext_gcd(7i128, 3i128).0, 1);
    }

    proptest! {
        #[test]
        fn bezout_identity(a in -1_000_000_000i64..1_000_000_000, b in -1_000_000_000i64..1_000_000_000) {
            let (g, x, y) = ext_gcd(a, b);
            prop_assert!(g >= 0);
            prop_assert_eq!(g, gcd(a, b));
            prop_assert_eq!(a as i128 * x as i128 + b as i128 * y as i128, g as i128);
        }

        #[test]
        fn mod_one_is_zero(a in any::<i32>()) {
            prop_assert_eq!(mod_inverse(a as i64, 1), Ok(0));
        }
    }
}
