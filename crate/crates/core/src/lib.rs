//! Exact combinatorics of linear series on algebraic curves.
//!
//! The crate is `no_std` (it needs `alloc`). It covers:
//!
//! * [`numerology`]: Brill-Noether numbers, vanishing and ramification
//!   sequences, Serre-dual residuals, divisorial triples and the closed-form
//!   existence criteria on general pointed curves.
//! * [`schubert`]: the integral cohomology ring of a Grassmannian, with
//!   Littlewood-Richardson products and powers of the cusp class.
//! * [`curves`]: curves of compact type and per-component feasibility
//!   oracles.
//! * [`limit`]: an exhaustive search for limit linear series on a compact
//!   type curve, witness verification and Brill-Noether additivity audits.
//! * [`modspace`]: divisor classes on the moduli space of stable curves
//!   and slope computations, all in exact rationals.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod curves;
mod error;
pub mod limit;
pub mod modspace;
pub mod numerology;
pub mod schubert;

pub use error::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;
