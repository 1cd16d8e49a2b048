//! Colored Catalan, Schröder and Motzkin lattice paths.
//!
//! Every counting sequence is produced three independent ways:
//!
//! * [`families::closed_form_series`] expands the closed-form generating
//!   function with exact truncated power-series arithmetic,
//! * [`families::recurrence_series`] runs the first-return recurrence,
//! * [`enumeration::oracle_series`] enumerates every path and sums its color
//!   weight `m^(#down) · n^(#level)`.
//!
//! The [`cli`] module wires these into the `colored-paths` binary.

pub mod cli;
pub mod enumeration;
pub mod families;
pub mod series;

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

pub use series::{PowerSeries, Scalar, SeriesError};

/// Exact series coefficient.
pub type Coefficient = BigRational;

/// Exact truncated power series; the instantiation used for path counting.
pub type Series = PowerSeries<Coefficient>;

/// Floating-point series, for quick numerical inspection only.
pub type F64Series = PowerSeries<f64>;

/// Single-precision series.
pub type F32Series = PowerSeries<f32>;
