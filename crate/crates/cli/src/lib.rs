//! Config parsing, scan dispatch and table output behind the `optomech` binary.

// `!(x > 0.0)` is used on purpose so NaN inputs fail validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod error;
pub mod modes;
pub mod table;
