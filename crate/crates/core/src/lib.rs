//! Orlicz-function calculus and central Morrey–Orlicz norms, with the Riesz
//! potential and the centred Hardy–Littlewood maximal operator.
//!
//! The crate is `no_std` (it needs `alloc`). All transcendental functions go
//! through `libm`, so results are reproducible across targets that share the
//! same `libm` build.
//!
//! Module map:
//!
//! * [`orlicz`]: Young/Orlicz function evaluation, right-continuous
//!   inverse, convex conjugate, Δ₂ diagnostics.
//! * [`geometry`]: ball volumes, ball–ball intersections, radial reduction.
//! * [`function`]: the piecewise-radial / translated-indicator test class.
//! * [`morrey`]: modulars, Luxemburg norms, central and weak central norms.
//! * [`potential`]: maximal function, Riesz potential, Hedberg estimate.
//! * [`verify`]: boundedness conditions, constant ledger, presets, witness
//!   and embedding experiments.
#![no_std]
#![forbid(unsafe_code)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod error;
pub mod function;
pub mod geometry;
pub mod grid;
pub mod morrey;
pub mod orlicz;
pub mod potential;
pub mod quad;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use function::TestFunction;
pub use geometry::Ball;
pub use morrey::MorreyParams;
pub use orlicz::OrliczSpec;
pub use potential::OperatorParams;
