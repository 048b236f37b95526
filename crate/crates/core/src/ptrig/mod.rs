//! The p-generalized circular and hyperbolic functions.
//!
//! `arcsin_p` and `arcsinh_p` are defined by their integrals and evaluated
//! by quadrature; `sin_p` and `sinh_p` are their inverses, and every other
//! function is built from those two. For `p = 2` everything reduces to the
//! classical functions.

mod circular;
mod derivative;
mod fnid;
mod hyperbolic;
mod kernels;
mod param;

pub use circular::{arcsin_p, circular_parts, cos_p, sec_p, sin_p, tan_p, CircularParts, POLE_GUARD};
pub use derivative::derivative;
pub use fnid::{evaluate, Evaluation, FnId};
pub use hyperbolic::{arcsinh_p, cosh_p, hyperbolic_parts, sech_p, sinh_p, tanh_p, HyperbolicParts, Y_MAX};
pub use param::{pi_p, PParam};

use crate::numkit::NumError;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("p must be a finite number greater than 1, got {0}")]
    Param(f64),
    #[error("{func} is not defined at x = {x}; valid domain: {domain}")]
    Domain {
        func: &'static str,
        x: f64,
        domain: String,
    },
    #[error("x = {x} lies within the pole guard band around {pole}")]
    Pole { x: f64, pole: f64 },
    #[error("|x| = {x} exceeds the hyperbolic range cap X_max = {x_max}")]
    Range { x: f64, x_max: f64 },
    #[error(transparent)]
    Numeric(#[from] NumError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
