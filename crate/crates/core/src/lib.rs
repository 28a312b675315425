//! Elliptic curve codes over small finite fields, analyzed exactly.
//!
//! The crate builds functional and residue evaluation codes on short
//! Weierstrass curves, computes minimum distance and covering radius by
//! exhaustive coset-leader tables, constructs and verifies deep holes with
//! their syndromes, and cross-checks everything against track/(n;k)-set
//! characterizations in PG(k-1, q). All results are exact integers; heavy
//! enumerations are guarded by explicit state budgets.

pub mod error;
pub mod field;

pub use error::{Error, ErrorCategory, Result};
pub use field::{Field, FieldElement};
