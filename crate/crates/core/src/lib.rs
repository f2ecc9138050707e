//! Exact combinatorics of critical values for Rankin-Selberg L-functions of
//! GL(n) x GL(n-1) over a number field.
//!
//! Everything here is exact integer or half-integer arithmetic: dominant
//! weights per field embedding with purity bookkeeping, the interlacing
//! branching law and its closed-form critical bounds, archimedean Langlands
//! parameters with a brute-force criticality scan, cuspidal-cohomology degree
//! numerology, symmetric-power weight and parameter transfers with the
//! symmetric-cube critical set, Hodge-type criticality classification, sign
//! recipes, and a symbolic period-monomial calculus. Closed forms and
//! independent scans are kept as separate code paths so they can cross-check
//! each other.

pub mod archimedean;
pub mod branching;
pub mod cohomology;
pub mod error;
pub mod halfint;
pub mod motivic;
pub mod numberfield;
pub mod sampling;
pub mod signs_periods;
pub mod symmetric;
pub mod weights;

pub use branching::{CriticalSet, PlaceKind};
pub use error::{Error, Result};
pub use halfint::HalfInt;
pub use numberfield::{FieldSignature, Place};
pub use weights::{PurityReport, TriState, Weight};
