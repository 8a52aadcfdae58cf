//! Band moves between parallel strands of a torus knot.
//!
//! Joining two adjacent strands of `T(p, q)` on the torus by a band is a
//! punctured Möbius band cobordism to `T(p - 2t, q - 2h)` with
//! `t = -q^{-1} mod p` and `h = p^{-1} mod q`. Iterating down to an unknot
//! and capping with a disk gives a nonorientable surface in the four-ball
//! whose first Betti number is the number of moves. Continuing within the
//! torus until a coordinate vanishes gives a surface in the three-sphere
//! when `pq` is even.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::{gcd, min_nonneg_rep, mod_inverse};
use crate::torus::{canonicalize, TorusKnotClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PinchStep {
    pub from: TorusKnotClass,
    pub t: i64,
    pub h: i64,
    /// `(from.p - 2t, from.q - 2h)` before normalization.
    pub raw_to: (i64, i64),
    pub to: TorusKnotClass,
    /// Exactly one raw coordinate was negative.
    pub mirrored: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PinchMode {
    /// Stop at the first unknot and cap it off in the four-ball.
    Gamma4,
    /// Keep pinching until a coordinate is zero, staying inside the torus.
    Gamma3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PinchSequence {
    pub start: TorusKnotClass,
    pub steps: Vec<PinchStep>,
    pub mode: PinchMode,
    /// Raw class of the last step, or the start class if no step was taken.
    pub terminal: (i64, i64),
}

impl PinchSequence {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Canonical `(p, q)` of every class visited, starting with `start`.
    pub fn trace(&self) -> Vec<(i64, i64)> {
        std::iter::once(&self.start)
            .chain(self.steps.iter().map(|s| &s.to))
            .map(|k| (k.p(), k.q()))
            .collect()
    }
}

/// One band move on the right-handed `T(p, q)`, `p > q >= 1`.
pub fn pinch_step(p: i64, q: i64) -> Result<PinchStep> {
    if p <= q || q < 1 {
        return Err(Error::InvalidForm(format!("pinch needs p > q >= 1, got ({p}, {q})")));
    }
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    step_from(&TorusKnotClass::right(p, q)?)
}

fn step_from(from: &TorusKnotClass) -> Result<PinchStep> {
    let (p, q) = (from.p(), from.q());
    let t = min_nonneg_rep(-mod_inverse(q, p)?, p);
    let h = min_nonneg_rep(mod_inverse(p, q)?, q);
    let raw_to = (p - 2 * t, q - 2 * h);
    let (r, s) = raw_to;

    if (r - p) % 2 != 0 || (s - q) % 2 != 0 {
        return Err(Error::Invariant(format!("pinch ({p},{q}) -> ({r},{s}) changed parity")));
    }
    if gcd(r, s) != 1 {
        return Err(Error::Invariant(format!("pinch ({p},{q}) -> ({r},{s}) is not primitive")));
    }
    if r.abs().max(s.abs()) >= p {
        return Err(Error::Invariant(format!("pinch ({p},{q}) -> ({r},{s}) did not shrink")));
    }
    let to = canonicalize(r, s, from.hand())?;
    Ok(PinchStep { from: *from, t, h, raw_to, to, mirrored: (r < 0) != (s < 0) && r != 0 && s != 0 })
}

pub fn pinch_sequence(k: &TorusKnotClass, mode: PinchMode) -> Result<PinchSequence> {
    let mut steps = Vec::new();
    let terminal = walk(k, mode, |step| steps.push(*step))?;
    Ok(PinchSequence { start: *k, steps, mode, terminal })
}

/// Runs the pinch loop, handing each step to `visit`; returns the terminal
/// raw class. The loop is capped at `k.p()` steps.
fn walk(k: &TorusKnotClass, mode: PinchMode, mut visit: impl FnMut(&PinchStep)) -> Result<(i64, i64)> {
    if mode == PinchMode::Gamma3 && (k.p() * k.q()) % 2 != 0 {
        return Err(Error::ParityError(k.p(), k.q()));
    }
    let cap = k.p();
    let mut taken = 0i64;
    let mut current = *k;
    let mut terminal = (k.p(), k.q());
    loop {
        let done = match mode {
            PinchMode::Gamma4 => current.is_unknot(),
            PinchMode::Gamma3 => terminal.0 == 0 || terminal.1 == 0,
        };
        if done {
            return Ok(terminal);
        }
        if taken >= cap {
            return Err(Error::Invariant(format!("pinch sequence from {k} exceeded {cap} steps")));
        }
        let step = step_from(&current)?;
        if step.to.p() >= current.p() {
            return Err(Error::Invariant(format!("pinch sequence from {k} stopped shrinking at {current}")));
        }
        visit(&step);
        taken += 1;
        terminal = step.raw_to;
        current = step.to;
    }
}

fn count(k: &TorusKnotClass, mode: PinchMode) -> Result<i64> {
    let mut n = 0i64;
    walk(k, mode, |_| n += 1)?;
    Ok(n.max(1))
}

/// First Betti number of the pinch surface in the four-ball; the unknot
/// bounds a Möbius band, so the value is never below 1.
pub fn gamma4_upper(k: &TorusKnotClass) -> Result<i64> {
    count(k, PinchMode::Gamma4)
}

/// First Betti number of the pinch surface in the three-sphere (`pq` even).
pub fn gamma3_upper(k: &TorusKnotClass) -> Result<i64> {
    count(k, PinchMode::Gamma3)
}
