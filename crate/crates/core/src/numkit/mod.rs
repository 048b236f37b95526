//! General-purpose numerical kernels.
//!
//! Everything here works on plain `f64` closures: adaptive Gauss-Kronrod
//! quadrature, bracketed Newton inversion of monotone functions, central
//! differences and a sampled monotonicity checker.

mod diff;
mod inversion;
mod monotone;
mod quadrature;

pub use diff::finite_diff;
pub use inversion::{invert_monotone, try_invert_monotone, Inverter};
pub use monotone::{check_monotone, Direction, MonotoneReport};
pub use quadrature::{integrate, Quadrature};

use thiserror::Error;

/// Default absolute tolerance for quadrature.
pub const DEFAULT_ABS_TOL: f64 = 1e-13;
/// Default relative tolerance for monotone inversion.
pub const DEFAULT_REL_TOL: f64 = 1e-12;
/// Iteration cap for Newton/bisection.
pub const DEFAULT_MAX_ITER: usize = 200;
/// Maximum bisection depth of any quadrature panel.
pub const DEFAULT_MAX_DEPTH: u32 = 60;

/// A value together with how well it is known.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericResult {
    pub value: f64,
    /// Absolute error estimate, always finite and non-negative.
    pub err_estimate: f64,
    pub iterations: usize,
    pub converged: bool,
}

impl NumericResult {
    pub(crate) fn exact(value: f64) -> Self {
        Self {
            value,
            err_estimate: 0.0,
            iterations: 0,
            converged: true,
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum NumError {
    #[error("no convergence ({reason}): value {} with error estimate {:e} after {} iterations",
        partial.value, partial.err_estimate, partial.iterations)]
    NonConvergence {
        partial: NumericResult,
        reason: &'static str,
    },
    #[error("function value {value} at x = {x} is not finite")]
    Domain { x: f64, value: f64 },
    #[error("target {y} is not bracketed by f(lo) = {f_lo} and f(hi) = {f_hi}")]
    Bracket { y: f64, f_lo: f64, f_hi: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}
