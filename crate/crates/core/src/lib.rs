//! Construction, order conditions, coefficient search and numerical
//! benchmarking of symmetric product formulae built from second-order
//! Trotter-Suzuki stages.
//!
//! The crate is `no_std` with `alloc`; the default `std` feature only adds
//! `std::error::Error` impls and lets the `parallel` feature pull in rayon.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod benchmark;
mod dd;
pub mod error;
pub mod fermions;
pub mod formulas;
pub mod linalg;
pub mod order_conditions;
mod qd;
pub mod real;
pub mod solver;
pub mod thresholds;
pub mod word_series;

pub use error::{Error, Result};
pub use real::{DoubleDouble, QuadDouble, Real, Tier};
