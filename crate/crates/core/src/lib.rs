//! Certified bounds on the nonorientable four-ball genus of torus knots.
//!
//! Lower bounds come from the signature and the correction term of
//! `-1` surgery; upper bounds come from explicit band-move surfaces on the
//! torus. All arithmetic is exact.
//!
//! The number-theory and Laurent polynomial layers are generic over the
//! integer type; the knot-level API is fixed to the aliases below.

pub mod bounds;
pub mod error;
pub mod heegaard;
pub mod laurent;
pub mod numtheory;
pub mod pinch;
pub mod report;
pub mod torus;

/// Integer Laurent polynomials over machine integers.
pub type Poly = laurent::LaurentPoly<i64>;
/// Exact rationals used for correction terms.
pub type Rational = num_rational::Ratio<i64>;

pub use bounds::{
    framed_lower, framed_profile, gamma4_lower, minmax_over_framings, obstruction_audit, AuditRecord,
    FramedProfile, FramedRow, KnotData,
};
pub use error::{Error, Result};
pub use heegaard::{d_b_circle_bundle, d_minus1_alternating, d_pm1, d_zero_surgery, t0};
pub use laurent::LaurentPoly;
pub use numtheory::{ext_gcd, min_nonneg_rep, mod_inverse};
pub use pinch::{gamma3_upper, gamma4_upper, pinch_sequence, pinch_step, PinchMode, PinchSequence, PinchStep};
pub use report::{emit_csv, emit_json, family_table, report, scan, BoundReport};
pub use torus::{
    alexander, alexander_family, canonicalize, mirror, seifert_genus, sigma_lattice, sigma_rec, signature,
    Handedness, SignatureMemo, TorusKnotClass,
};
