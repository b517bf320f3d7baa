//! Analytical linear-quadratic pursuit-evasion guidance about Keplerian
//! reference orbits.
//!
//! Relative motion is written in the true anomaly `f` with ρ-scaled
//! coordinates, which makes the Tschauner–Hempel equations solvable in closed
//! form for elliptic, parabolic and hyperbolic references. The game's
//! differential Riccati equation then has an explicit solution in terms of
//! the resulting transition matrices.

#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop, clippy::op_ref)]

extern crate alloc;

mod dd;
pub mod error;
pub mod game;
pub mod linalg;
pub mod orbit;
pub mod riccati;
pub mod sim;
pub mod stm;

pub use error::{Error, Result};
pub use linalg::{Mat6, Vec6};
pub use orbit::{PhysState, ReferenceOrbit, Regime, RelState};
