//! Generalized (p-) trigonometric and hyperbolic functions and numerical
//! verification of their sharp exponential double inequalities.
//!
//! * [`numkit`]: quadrature, monotone inversion, finite differences and a
//!   sampled monotonicity checker.
//! * [`ptrig`]: `π_p`, `arcsin_p`, `sin_p`, … `sech_p` and their
//!   derivatives.
//! * [`bounds`]: best exponent constants, grid verification and endpoint
//!   sharpness of the double inequalities.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod bounds;
pub mod numkit;
pub mod ptrig;

pub use ptrig::{FnId, PParam};
