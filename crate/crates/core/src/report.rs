//! Bound certificates for torus knots and their text, JSON and CSV forms.

use std::fmt::Write as _;

use serde::Serialize;

use crate::bounds::{gamma4_lower_from, AuditRecord, FramedProfile, KnotData};
use crate::error::{Error, Result};
use crate::numtheory::gcd;
use crate::pinch::{gamma3_upper, pinch_sequence, PinchMode, PinchSequence};
use crate::torus::{SignatureMemo, TorusKnotClass};
use crate::Rational;

/// Everything known about the nonorientable four-genus of `T(p, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub p: i64,
    pub q: i64,
    pub sigma_right: i64,
    pub sigma_left: i64,
    pub t0: i64,
    pub d_minus1_right: i64,
    pub d_minus1_left: i64,
    pub gamma4_lower: i64,
    pub gamma4_upper: i64,
    pub exact: bool,
    pub gamma3_upper: Option<i64>,
    pub pinch_trace: Vec<(i64, i64)>,
}

pub const CSV_HEADER: [&str; 11] = [
    "p",
    "q",
    "sigma_right",
    "sigma_left",
    "t0",
    "d_minus1_right",
    "d_minus1_left",
    "gamma4_lower",
    "gamma4_upper",
    "exact",
    "gamma3_upper",
];

pub fn report(p: i64, q: i64) -> Result<BoundReport> {
    report_with(&mut SignatureMemo::new(), p, q)
}

pub fn report_with(memo: &mut SignatureMemo, p: i64, q: i64) -> Result<BoundReport> {
    if p < 1 || q < 1 {
        return Err(Error::OutOfRange(format!("p and q must be positive, got ({p}, {q})")));
    }
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    if p.checked_mul(q).is_none() {
        return Err(Error::OutOfRange(format!("p*q overflows for ({p}, {q})")));
    }
    let (p, q) = (p.max(q), p.min(q));
    let knot = TorusKnotClass::right(p, q)?;
    let right = KnotData::compute_with(memo, &knot)?;
    let left = right.mirror()?;
    let lower = gamma4_lower_from(&right)?;
    let sequence = pinch_sequence(&knot, PinchMode::Gamma4)?;
    let upper = (sequence.len() as i64).max(1);
    let gamma3 = if (p * q) % 2 == 0 { Some(gamma3_upper(&knot)?) } else { None };

    if left.signature != -right.signature {
        return Err(Error::Invariant(format!("mirror signatures of {knot} disagree")));
    }
    if lower > upper {
        return Err(Error::Invariant(format!("lower bound {lower} exceeds construction {upper} for {knot}")));
    }
    Ok(BoundReport {
        p,
        q,
        sigma_right: right.signature,
        sigma_left: left.signature,
        t0: right.t0,
        d_minus1_right: right.d_minus1,
        d_minus1_left: left.d_minus1,
        gamma4_lower: lower,
        gamma4_upper: upper,
        exact: lower == upper,
        gamma3_upper: gamma3,
        pinch_trace: sequence.trace(),
    })
}

/// Reports for `T(2k, 2k-1)`, `k = 2..=k_max`.
pub fn family_table(k_max: i64) -> Result<Vec<BoundReport>> {
    if k_max < 2 {
        return Err(Error::OutOfRange(format!("kmax = {k_max} must be at least 2")));
    }
    let mut memo = SignatureMemo::new();
    (2..=k_max).map(|k| report_with(&mut memo, 2 * k, 2 * k - 1)).collect()
}

/// Reports for every coprime `2 <= q < p <= max`, ordered by `p` then `q`.
pub fn scan(max: i64) -> Result<Vec<BoundReport>> {
    let mut memo = SignatureMemo::new();
    let mut rows = Vec::new();
    for p in 3..=max {
        for q in 2..p {
            if gcd(p, q) == 1 {
                rows.push(report_with(&mut memo, p, q)?);
            }
        }
    }
    Ok(rows)
}

pub fn emit_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn csv_text<I, R>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).expect("write to memory");
    for row in rows {
        w.write_record(row).expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("ascii output")
}

pub fn emit_csv(table: &[BoundReport]) -> String {
    csv_text(
        &CSV_HEADER,
        table.iter().map(|r| {
            vec![
                r.p.to_string(),
                r.q.to_string(),
                r.sigma_right.to_string(),
                r.sigma_left.to_string(),
                r.t0.to_string(),
                r.d_minus1_right.to_string(),
                r.d_minus1_left.to_string(),
                r.gamma4_lower.to_string(),
                r.gamma4_upper.to_string(),
                r.exact.to_string(),
                r.gamma3_upper.map(|g| g.to_string()).unwrap_or_default(),
            ]
        }),
    )
}

pub fn profile_csv(profile: &FramedProfile) -> String {
    csv_text(
        &["n", "sig_bound", "d_bound", "combined"],
        profile.rows.iter().map(|r| {
            vec![r.n.to_string(), r.sig_bound.to_string(), r.d_bound.to_string(), r.combined.to_string()]
        }),
    )
}

fn trace_text(trace: &[(i64, i64)]) -> String {
    trace.iter().map(|(p, q)| format!("({p},{q})")).collect::<Vec<_>>().join(" -> ")
}

pub fn render_report(r: &BoundReport) -> String {
    let mut s = String::new();
    writeln!(s, "T({},{})", r.p, r.q).unwrap();
    writeln!(s, "  signature      right {}  left {}", r.sigma_right, r.sigma_left).unwrap();
    writeln!(s, "  t0             {}", r.t0).unwrap();
    writeln!(s, "  d(S^3_-1)      right {}  left {}", r.d_minus1_right, r.d_minus1_left).unwrap();
    writeln!(s, "  gamma4 lower   {}", r.gamma4_lower).unwrap();
    writeln!(s, "  gamma4 upper   {}{}", r.gamma4_upper, if r.exact { "  (exact)" } else { "" }).unwrap();
    match r.gamma3_upper {
        Some(g) => writeln!(s, "  gamma3 upper   {g}").unwrap(),
        None => writeln!(s, "  gamma3 upper   - (pq odd)").unwrap(),
    }
    writeln!(s, "  pinch trace    {}", trace_text(&r.pinch_trace)).unwrap();
    s
}

pub fn render_table(rows: &[BoundReport]) -> String {
    let cells: Vec<Vec<String>> = std::iter::once(CSV_HEADER.iter().map(|h| h.to_string()).collect())
        .chain(emit_csv(rows).lines().skip(1).map(|l| {
            l.split(',').map(|c| if c.is_empty() { "-".to_string() } else { c.to_string() }).collect()
        }))
        .collect();
    let widths: Vec<usize> =
        (0..CSV_HEADER.len()).map(|i| cells.iter().map(|row| row[i].len()).max().unwrap_or(0)).collect();
    let mut s = String::new();
    for row in &cells {
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        writeln!(s, "{}", line.join("  ")).unwrap();
    }
    s
}

pub fn exact_summary(rows: &[BoundReport]) -> String {
    let exact = rows.iter().filter(|r| r.exact).count();
    format!("exact: {exact} of {} knots have matching lower and upper bounds", rows.len())
}

pub fn render_pinch(seq: &PinchSequence) -> String {
    let mut s = String::new();
    for step in &seq.steps {
        let (r, t) = step.raw_to;
        writeln!(s, "({},{}) --t={},h={}--> ({},{})", step.from.p(), step.from.q(), step.t, step.h, r, t).unwrap();
    }
    let b1 = (seq.len() as i64).max(1);
    writeln!(s, "b1 = {b1}").unwrap();
    s
}

pub fn render_profile(profile: &FramedProfile) -> String {
    let mut s = String::new();
    writeln!(s, "{}", profile.knot).unwrap();
    writeln!(s, "{:>6}  {:>9}  {:>7}  {:>8}", "n", "sig_bound", "d_bound", "combined").unwrap();
    for r in &profile.rows {
        writeln!(s, "{:>6}  {:>9}  {:>7}  {:>8}", r.n, r.sig_bound, r.d_bound, r.combined).unwrap();
    }
    s
}

/// `num/den` in lowest terms, denominator always shown.
pub fn rational_text(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn render_audit(a: &AuditRecord) -> String {
    let mut s = String::new();
    writeln!(s, "g = {}  m = {}  n = {}  d = {}", a.g, a.m, a.n, a.d).unwrap();
    writeln!(s, "b1(F) = {}  e(F) = {}", 2 * a.g + 1, a.n - 1).unwrap();
    writeln!(s, "sign = {}  a = {}", if a.sign > 0 { "+" } else { "-" }, a.a).unwrap();
    writeln!(s, "c1^2 direct  = {}", rational_text(&a.c1sq_direct)).unwrap();
    writeln!(s, "c1^2 reduced = {}", rational_text(&a.c1sq_reduced)).unwrap();
    writeln!(s, "pairing = {}", a.pairing).unwrap();
    writeln!(s, "d_b = {}", rational_text(&a.d_b)).unwrap();
    writeln!(s, "cobordism inequality: {} <= {}", rational_text(&a.prop_lhs), rational_text(&a.prop_rhs)).unwrap();
    writeln!(s, "e(F)/2 <= 2d + b1(F): {} <= {}", rational_text(&a.eq2_lhs), rational_text(&a.eq2_rhs)).unwrap();
    writeln!(s, "consistent = {}", a.consistent).unwrap();
    s
}
