//! Exact arithmetic for essential-surface classes in 2-bridge knot exteriors.
//!
//! A 2-bridge knot `K(alpha, beta)` is determined by a pair of coprime
//! integers with `alpha` odd and `0 < beta < alpha`. Its essential surfaces
//! are governed by the signed continued-fraction expansions of `beta/alpha`
//! whose entries all have absolute value at least 2. This crate computes,
//! with arbitrary-precision rational arithmetic throughout:
//!
//! * the canonical all-positive and all-even expansions of `beta/alpha`,
//! * the complete set of strict (`|n_i| >= 2`) expansions,
//! * allowable sub-tuples of the positive expansion, their `c`-values,
//!   and calibrated integer boundary slopes,
//! * knot-level verdicts: genus, fiberedness, uniqueness of the slope-0
//!   class, and a verifier for the family `K(6g - 1, 2g)`.
//!
//! The crate is `no_std` (with `alloc`); all operations are pure functions
//! of immutable values and safe to use concurrently.

#![no_std]

extern crate alloc;

pub mod analysis;
pub mod enumerate;
pub mod expansion;
pub mod knot;
pub mod subtuple;

mod error;

pub use analysis::{
    analyze, genus, is_fibered, search_candidates, valid_knots, verify_family, Diagnostic,
    FamilyReport, KnotReport, SearchOutcome,
};
pub use enumerate::{brute_force_expansions, enumerate_expansions, ExpansionSet};
pub use error::{Error, Result};
pub use expansion::{even_expansion, positive_expansion, Expansion};
pub use knot::TwoBridgeKnot;
pub use subtuple::{
    allowable_subtuples, c_value, calibrate, calibration_trials, seifert_c0, slope,
    surface_classes, Calibration, CalibrationTrial, SubTuple, SurfaceClass,
};

/// Exact rational number; always stored in lowest terms with a positive
/// denominator. Re-exported so callers do not need to depend on
/// `num-rational` directly.
pub type Rational = num_rational::BigRational;

pub use num_bigint::BigInt;
