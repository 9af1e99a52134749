//! Counting generalized (colored) compositions.
//!
//! A composition of `n` whose part of size `i` may take any of `b_i` colors
//! is a generalized composition; `c(n, b)` counts them. This crate provides
//! the weight-sequence families ([`bspec`]), several independent ways of
//! computing `c(n, b)` ([`engine`]), a brute-force enumerator ([`oracle`]),
//! auditors for the integer identities the closed forms rest on
//! ([`identities`]), and a cross-check against OEIS b-files ([`catalog`]).

pub mod bspec;
pub mod catalog;
pub mod engine;
pub mod error;
pub mod identities;
pub mod numbers;
pub mod oracle;

pub use bspec::{parse_spec, serialize_spec, validate, BSpec, ValidationReport};
pub use engine::{
    closed_form, closed_form_value, count_auto, count_fundamental, count_table, count_via_closed_form,
    count_via_oracle, count_via_recurrence, count_with, derive_recurrence, invert, ClosedForm, CountSeries,
    LinearRecurrence, Method,
};
pub use error::{Error, Result};
pub use oracle::{count_colored_compositions, enumerate_compositions, Composition, Oracle};
