//! Lower bounds on the nonorientable four-genus.
//!
//! A surface with normal Euler number `2n` bounding `K` has
//! `b1 >= |sigma(K) - n|` and `b1 >= n - 2 d(S^3_{-1}(K))`. Minimizing the
//! larger of the two over `n` gives the closed-form bound
//! `sigma/2 - d(S^3_{-1}(K))`, which [`gamma4_lower`] evaluates on both
//! chiralities.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::heegaard::{d_b_circle_bundle, d_pm1_from_t0, t0};
use crate::torus::{signature_with, SignatureMemo, TorusKnotClass};
use crate::Rational;

/// The two invariants every framed bound depends on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnotData {
    pub knot: TorusKnotClass,
    pub signature: i64,
    pub t0: i64,
    pub d_minus1: i64,
    pub d_plus1: i64,
}

impl KnotData {
    pub fn compute(knot: &TorusKnotClass) -> Result<Self> {
        Self::compute_with(&mut SignatureMemo::new(), knot)
    }

    pub fn compute_with(memo: &mut SignatureMemo, knot: &TorusKnotClass) -> Result<Self> {
        let signature = signature_with(memo, knot)?;
        let t0 = if knot.is_unknot() { 0 } else { t0(knot.p(), knot.q())? };
        let (d_minus1, d_plus1) = if knot.is_unknot() { (0, 0) } else { d_pm1_from_t0(knot, t0)? };
        Ok(Self { knot: *knot, signature, t0, d_minus1, d_plus1 })
    }

    /// Same data for the mirror image, without recomputing anything.
    pub fn mirror(&self) -> Result<Self> {
        Ok(Self {
            knot: self.knot.mirror(),
            signature: -self.signature,
            t0: self.t0,
            d_minus1: -self.d_plus1,
            d_plus1: -self.d_minus1,
        })
    }

    pub fn row(&self, n: i64) -> FramedRow {
        let sig_bound = (self.signature - n).abs();
        let d_bound = n - 2 * self.d_minus1;
        FramedRow { n, sig_bound, d_bound, combined: sig_bound.max(d_bound).max(0) }
    }

    /// `max(1, sigma/2 - d)`; the signature must be even.
    pub fn closed_form_bound(&self) -> Result<i64> {
        if self.signature.is_odd() {
            return Err(Error::Invariant(format!("odd signature {} for {}", self.signature, self.knot)));
        }
        Ok((self.signature / 2 - self.d_minus1).max(1))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FramedRow {
    /// Half the normal Euler number.
    pub n: i64,
    pub sig_bound: i64,
    pub d_bound: i64,
    pub combined: i64,
}

/// Framed lower bounds over a contiguous window of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramedProfile {
    pub knot: TorusKnotClass,
    pub rows: Vec<FramedRow>,
}

/// Lower bound for surfaces with normal Euler number `2n`.
pub fn framed_lower(k: &TorusKnotClass, n: i64) -> Result<i64> {
    Ok(KnotData::compute(k)?.row(n).combined)
}

pub fn framed_profile(k: &TorusKnotClass, n_lo: i64, n_hi: i64) -> Result<FramedProfile> {
    check_window(n_lo, n_hi)?;
    let data = KnotData::compute(k)?;
    Ok(FramedProfile { knot: *k, rows: (n_lo..=n_hi).map(|n| data.row(n)).collect() })
}

fn check_window(n_lo: i64, n_hi: i64) -> Result<()> {
    if n_lo > n_hi {
        return Err(Error::OutOfRange(format!("empty framing window [{n_lo}, {n_hi}]")));
    }
    Ok(())
}

/// Absolute lower bound on the nonorientable four-genus of `k`.
pub fn gamma4_lower(k: &TorusKnotClass) -> Result<i64> {
    gamma4_lower_with(&mut SignatureMemo::new(), k)
}

pub fn gamma4_lower_with(memo: &mut SignatureMemo, k: &TorusKnotClass) -> Result<i64> {
    let data = KnotData::compute_with(memo, k)?;
    gamma4_lower_from(&data)
}

pub fn gamma4_lower_from(data: &KnotData) -> Result<i64> {
    Ok(data.closed_form_bound()?.max(data.mirror()?.closed_form_bound()?))
}

/// Brute-force version of [`gamma4_lower`]: for each chirality, minimize the
/// framed bound over `n` in the window.
pub fn minmax_over_framings(k: &TorusKnotClass, n_lo: i64, n_hi: i64) -> Result<i64> {
    minmax_from(&KnotData::compute(k)?, n_lo, n_hi)
}

pub fn minmax_from(data: &KnotData, n_lo: i64, n_hi: i64) -> Result<i64> {
    check_window(n_lo, n_hi)?;
    let best = |d: &KnotData| -> i64 {
        let min = (n_lo..=n_hi).map(|n| d.row(n).combined).min().unwrap_or(0);
        min.max(1)
    };
    Ok(best(data).max(best(&data.mirror()?)))
}

/// Exact replay of the inequality chain that turns the correction-term
/// inequality for negative semi-definite cobordisms into
/// `e(F)/2 <= 2d + b1(F)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditRecord {
    /// Genus of the capped surface; `b1(F) = 2g + 1`.
    pub g: i64,
    /// The surface sits in homology class `(1, 2, m)`.
    pub m: i64,
    /// Self-intersection `4m - 1 = e(F) + 1`.
    pub n: i64,
    pub d: i64,
    /// Last coordinate of `PD(c1)` is `2a`.
    pub a: i64,
    /// The sign making `a` integral; first coordinate of `PD(c1)`.
    pub sign: i64,
    pub c1sq_direct: Rational,
    pub c1sq_reduced: Rational,
    /// `<c1, [Sigma]>`, which must equal `n - 2g`.
    pub pairing: i64,
    pub d_b: Rational,
    /// Both sides of the cobordism inequality with the unfavorable sign.
    pub prop_lhs: Rational,
    pub prop_rhs: Rational,
    pub eq2_lhs: Rational,
    pub eq2_rhs: Rational,
    pub consistent: bool,
}

// Intersection form of the trace of -1 surgery on K, stacked on S^2 x S^2.
const INTERSECTION_FORM: [[i64; 3]; 3] = [[-1, 0, 0], [0, 0, 1], [0, 1, 0]];

fn form(u: [i64; 3], v: [i64; 3]) -> i64 {
    (0..3)
        .map(|i| (0..3).map(|j| u[i] * INTERSECTION_FORM[i][j] * v[j]).sum::<i64>())
        .sum()
}

fn invariant(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Invariant(what()))
    }
}

pub fn obstruction_audit(g: i64, m: i64, d: i64) -> Result<AuditRecord> {
    if g < 0 || m < 1 || d < 0 {
        return Err(Error::OutOfRange(format!("audit needs g >= 0, m >= 1, d >= 0, got ({g}, {m}, {d})")));
    }
    let n = 4 * m - 1;
    if n <= 2 * g {
        return Err(Error::OutOfRange(format!("n = 4m - 1 = {n} must exceed 2g = {}", 2 * g)));
    }

    let integral: Vec<i64> = [1, -1]
        .into_iter()
        .filter(|s| (2 * (m - g) - 1 + s) % 4 == 0)
        .collect();
    invariant(integral.len() == 1, || format!("expected exactly one integral sign, got {integral:?}"))?;
    let sign = integral[0];
    let a = (2 * (m - g) - 1 + sign) / 4;

    let c1 = [sign, 2, 2 * a];
    let sigma = [1, 2, m];
    invariant(
        c1.iter().zip(INTERSECTION_FORM.iter().enumerate()).all(|(&c, (i, row))| (c - row[i]) % 2 == 0),
        || format!("{c1:?} is not characteristic"),
    )?;

    let pairing = form(c1, sigma);
    invariant(pairing == n - 2 * g, || format!("pairing {pairing} != n - 2g = {}", n - 2 * g))?;
    invariant(form(sigma, sigma) == n, || "[Sigma]^2 != n".into())?;

    let int = Rational::from_integer;
    let c1sq_restricted = int(form(c1, c1)) - Rational::new(pairing * pairing, n);
    let c1sq_direct = int(-1 + 8 * a) - Rational::new((n - 2 * g).pow(2), n);
    let c1sq_reduced = int(-2 + 2 * sign) - Rational::new(4 * g * g, n);
    invariant(c1sq_direct == c1sq_restricted, || format!("c1^2 {c1sq_direct} != {c1sq_restricted}"))?;
    invariant(c1sq_direct == c1sq_reduced, || format!("c1^2 {c1sq_direct} != {c1sq_reduced}"))?;

    // b2^- of the cobordism is 2; b1 of the circle bundle is 2g and of the
    // homology sphere 0.
    let d_b = d_b_circle_bundle(g, n)?;
    let unfavorable = int(-4) - Rational::new(4 * g * g, n);
    let prop_lhs = unfavorable + int(2);
    let prop_rhs = d_b * int(4) + int(4 * d) + int(2 * (2 * g));

    let eq2_lhs = Rational::new(n - 1, 2);
    let eq2_rhs = int(2 * d + 2 * g + 1);
    invariant(prop_rhs - prop_lhs == (eq2_rhs - eq2_lhs) * int(2), || {
        format!("cobordism inequality slack {} is not twice {}", prop_rhs - prop_lhs, eq2_rhs - eq2_lhs)
    })?;

    Ok(AuditRecord {
        g,
        m,
        n,
        d,
        a,
        sign,
        c1sq_direct,
        c1sq_reduced,
        pairing,
        d_b,
        prop_lhs,
        prop_rhs,
        eq2_lhs,
        eq2_rhs,
        consistent: eq2_lhs <= eq2_rhs,
    })
}
