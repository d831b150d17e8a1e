//! Exact classification of linear complementary dual (LCD) codes over GF(2) and GF(3).
//!
//! A linear code C is LCD when it intersects its dual trivially, which happens
//! exactly when the Gram matrix G·Gᵀ of any generator matrix G is nonsingular.
//! This crate enumerates generator matrices in standard form, tests that
//! criterion with bit-packed field arithmetic, collapses the survivors into
//! equivalence classes with a from-scratch graph canonical-labeling engine, and
//! proves each classification complete against a closed-form mass formula.

pub mod canon;
pub mod classify;
pub mod code;
pub mod error;
pub mod field;
pub mod mass;
pub mod matrix;
pub mod oracle;

pub use canon::{are_equivalent, automorphism_order, build_graph, canonical_key, key_and_aut};
pub use canon::{AutInfo, CanonicalKey, ColoredGraph};
pub use classify::{ClassRecord, ClassificationResult, Classifier, Strategy};
pub use code::{LinearCode, WeightEnumerator};
pub use error::{Error, Result};
pub use field::{Field, FqVector};
pub use matrix::FqMatrix;
