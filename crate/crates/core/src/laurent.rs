//! Sparse integer Laurent polynomials in one variable `T`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

use crate::error::{Error, Result};

/// Coefficient ring for [`LaurentPoly`]: any exact signed integer type.
pub trait Coeff: Integer + Signed + Clone + FromPrimitive + fmt::Debug {}

impl<T: Integer + Signed + Clone + FromPrimitive + fmt::Debug> Coeff for T {}

/// An exact Laurent polynomial `sum c_e T^e`.
///
/// Stored as a map from exponent to coefficient; zero coefficients are never
/// stored, so the zero polynomial is the empty map and equality is
/// structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    /// `coeff * T^exp`.
    pub fn monomial(coeff: C, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging
    /// repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(C::zero);
        *slot = slot.clone() + coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `T^exp`.
    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `T^by`.
    pub fn shift(&self, by: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + by, c.clone())).collect(),
        }
    }

    /// The polynomial with `T` replaced by `T^-1`.
    pub fn reflect(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Sum of the coefficients, i.e. the value at `T = 1`.
    pub fn eval_at_one(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.clone())
    }

    /// Exact quotient `self / den`.
    ///
    /// Both operands are shifted to ordinary polynomials with nonzero
    /// constant term, long division runs from the top degree, and the
    /// quotient is shifted back. A nonzero remainder (or a leading
    /// coefficient that does not divide) is reported as
    /// [`Error::InexactDivision`].
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        let (den_lo, den_hi) = match (den.min_exp(), den.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::InexactDivision("division by zero".into())),
        };
        let num_lo = match self.min_exp() {
            Some(lo) => lo,
            None => return Ok(Self::zero()),
        };
        let den_deg = den_hi - den_lo;
        let den_lead = den.terms[&den_hi].clone();
        let den_body: Vec<(i64, C)> = den
            .terms
            .iter()
            .map(|(e, c)| (e - den_lo, c.clone()))
            .collect();

        let mut rem: BTreeMap<i64, C> =
            self.terms.iter().map(|(e, c)| (e - num_lo, c.clone())).collect();
        let mut quot = Vec::new();
        while let Some((&top, lead)) = rem.iter().next_back() {
            if top < den_deg {
                break;
            }
            let (factor, r) = lead.div_rem(&den_lead);
            if !r.is_zero() {
                break;
            }
            let shift = top - den_deg;
            for (e, c) in &den_body {
                let slot = rem.entry(e + shift).or_insert_with(C::zero);
                *slot = slot.clone() - factor.clone() * c.clone();
                if slot.is_zero() {
                    rem.remove(&(e + shift));
                }
            }
            quot.push((shift, factor));
        }
        if !rem.is_empty() {
            let rem = Self { terms: rem }.shift(num_lo);
            return Err(Error::InexactDivision(format!("{rem:?}")));
        }
        let offset = num_lo - den_lo;
        Ok(Self { terms: quot.into_iter().rev().map(|(e, c)| (e + offset, c)).collect() })
    }

    /// Splits a symmetric polynomial as `a0 + sum_{j=1}^d a_j (T^j + T^-j)`
    /// and returns `(a0, [a_1, ..., a_d])`.
    pub fn symmetric_coeffs(&self) -> Result<(C, Vec<C>)> {
        if *self != self.reflect() {
            return Err(Error::NotSymmetric);
        }
        let top = self.max_exp().unwrap_or(0).max(0);
        let a = (1..=top).map(|j| self.coeff(j)).collect();
        Ok((self.coeff(0), a))
    }

    /// Torsion coefficient `sum_j j * a_j` of a symmetric polynomial.
    pub fn torsion_coefficient(&self) -> Result<C> {
        let (_, a) = self.symmetric_coeffs()?;
        Ok(a.into_iter().enumerate().fold(C::zero(), |acc, (i, aj)| {
            let j = C::from_usize(i + 1).expect("exponent fits in coefficient type");
            acc + j * aj
        }))
    }
}

impl<C: Coeff> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn add(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        self + &(-rhs)
    }
}

impl<C: Coeff> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr for LaurentPoly<C> {
            type Output = LaurentPoly<C>;

            fn $m(self, rhs: Self) -> LaurentPoly<C> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for LaurentPoly<C> {
    /// Decreasing exponents, e.g. `T^3 - T^2 + 1 - T^-2 + T^-3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            f.write_str("T")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl<C: fmt::Debug> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type P = LaurentPoly<i64>;

    fn p(terms: &[(i64, i64)]) -> P {
        P::from_terms(terms.iter().copied())
    }

    #[test]
    fn addition() {
        assert_eq!(p(&[(1, 1), (0, -1)]) + P::one(), p(&[(1, 1)]));
        assert_eq!(P::zero() + p(&[(-2, 1)]), p(&[(-2, 1)]));
        let x = p(&[(1, 1), (-1, 1)]);
        assert_eq!(&x + &x, p(&[(1, 2), (-1, 2)]));
    }

    #[test]
    fn multiplication() {
        assert_eq!(p(&[(0, 1), (1, -1)]) * p(&[(0, 1), (1, 1)]), p(&[(0, 1), (2, -1)]));
        assert_eq!(p(&[(-1, 1)]) * p(&[(1, 1)]), P::one());
        assert_eq!(
            p(&[(0, 1), (1, -1)]) * p(&[(0, 1), (12, -1)]),
            p(&[(0, 1), (1, -1), (12, -1), (13, 1)])
        );
    }

    #[test]
    fn cleanup_keeps_no_zero_coefficients() {
        let x = p(&[(3, 2), (3, -2), (0, 0)]);
        assert!(x.is_zero());
        assert_eq!(x.num_terms(), 0);
    }

    #[test]
    fn exact_division() {
        let one_minus = |k: i64| p(&[(0, 1), (k, -1)]);
        assert_eq!(one_minus(2).exact_div(&one_minus(1)), Ok(p(&[(0, 1), (1, 1)])));
        assert_eq!(
            one_minus(6).exact_div(&one_minus(2)),
            Ok(p(&[(0, 1), (2, 1), (4, 1)]))
        );
        assert!(matches!(
            p(&[(0, 1), (1, 1)]).exact_div(&one_minus(1)),
            Err(Error::InexactDivision(_))
        ));
        assert!(matches!(one_minus(1).exact_div(&P::zero()), Err(Error::InexactDivision(_))));
        // negative exponents on both sides
        let num = p(&[(-3, 1), (-1, -1)]);
        assert_eq!(num.exact_div(&p(&[(-2, 1)])), Ok(p(&[(-1, 1), (1, -1)])));
    }

    #[test]
    fn symmetric_coefficients() {
        assert_eq!(p(&[(1, 1), (0, -1), (-1, 1)]).symmetric_coeffs(), Ok((-1, vec![1])));
        assert_eq!(P::one().symmetric_coeffs(), Ok((1, vec![])));
        let d43 = p(&[(3, 1), (2, -1), (0, 1), (-2, -1), (-3, 1)]);
        assert_eq!(d43.symmetric_coeffs(), Ok((1, vec![0, -1, 1])));
        assert_eq!(p(&[(1, 1)]).symmetric_coeffs(), Err(Error::NotSymmetric));
        assert_eq!(p(&[(1, 1)]).torsion_coefficient(), Err(Error::NotSymmetric));
    }

    #[test]
    fn torsion_coefficient() {
        assert_eq!(p(&[(1, 1), (0, -1), (-1, 1)]).torsion_coefficient(), Ok(1));
        assert_eq!(P::one().torsion_coefficient(), Ok(0));
        let d35 = p(&[(4, 1), (3, -1), (1, 1), (0, -1), (-1, 1), (-3, -1), (-4, 1)]);
        assert_eq!(d35.torsion_coefficient(), Ok(2));
    }

    #[test]
    fn value_at_one() {
        assert_eq!(p(&[(0, 1), (1, -1)]).eval_at_one(), 0);
        assert_eq!(p(&[(1, 1), (0, -1), (-1, 1)]).eval_at_one(), 1);
        assert_eq!(p(&[(3, 1), (2, -1), (0, 1), (-2, -1), (-3, 1)]).eval_at_one(), 1);
    }

    #[test]
    fn rendering() {
        let d43 = p(&[(3, 1), (2, -1), (0, 1), (-2, -1), (-3, 1)]);
        assert_eq!(d43.to_string(), "T^3 - T^2 + 1 - T^-2 + T^-3");
        assert_eq!(p(&[(1, 2), (-1, 2)]).to_string(), "2T + 2T^-1");
        assert_eq!(p(&[(0, -1), (1, 1)]).to_string(), "T - 1");
        assert_eq!(p(&[(2, -3)]).to_string(), "-3T^2");
        assert_eq!(P::zero().to_string(), "0");
    }

    #[test]
    fn big_integer_coefficients() {
        type B = LaurentPoly<BigInt>;
        let x = B::from_terms([(0, BigInt::from(1)), (1, BigInt::from(-1))]);
        let y = B::from_terms([(0, BigInt::from(1)), (5, BigInt::from(-1))]);
        let prod = &x * &y;
        assert_eq!(prod.exact_div(&x), Ok(y));
    }

    fn small_poly() -> impl Strategy<Value = P> {
        prop::collection::vec((-6i64..6, -5i64..5), 0..6).prop_map(P::from_terms)
    }

    fn unit_extreme_divisor() -> impl Strategy<Value = P> {
        (
            -3i64..3,
            0i64..5,
            prop::bool::ANY,
            prop::bool::ANY,
            prop::collection::vec(-4i64..4, 0..5),
        )
            .prop_map(|(lo, extra, s_lo, s_hi, mid)| {
                let hi = lo + extra + mid.len() as i64;
                let mut terms = vec![(lo, if s_lo { 1 } else { -1 })];
                if hi != lo {
                    terms.push((hi, if s_hi { 1 } else { -1 }));
                    for (i, c) in mid.into_iter().enumerate() {
                        let e = lo + 1 + i as i64;
                        if e < hi {
                            terms.push((e, c));
                        }
                    }
                }
                P::from_terms(terms)
            })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn division_undoes_multiplication(a in small_poly(), d in unit_extreme_divisor()) {
            let prod = &a * &d;
            prop_assert_eq!(prod.exact_div(&d), Ok(a));
        }

        #[test]
        fn symmetric_split_reconstructs(half in prop::collection::vec(-4i64..4, 0..6), a0 in -4i64..4) {
            let mut terms = vec![(0, a0)];
            for (i, c) in half.iter().enumerate() {
                let j = i as i64 + 1;
                terms.push((j, *c));
                terms.push((-j, *c));
            }
            let poly = P::from_terms(terms);
            let (b0, b) = poly.symmetric_coeffs().unwrap();
            let rebuilt = b.iter().enumerate().fold(P::monomial(b0, 0), |acc, (i, c)| {
                let j = i as i64 + 1;
                &acc + &P::from_terms([(j, *c), (-j, *c)])
            });
            prop_assert_eq!(rebuilt, poly);
        }
    }
}
