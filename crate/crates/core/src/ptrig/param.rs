use super::hyperbolic::Y_MAX;
use super::kernels::{asin_integrand, asinh_integrand, asinh_log_integrand};
use super::{Error, Result};
use crate::numkit::{NumericResult, Quadrature, DEFAULT_ABS_TOL};
use std::f64::consts::PI;

/// Split point of the `arcsin_p` integral: `[0, ASIN_SPLIT]` is integrated
/// directly, the rest after the substitution `t = 1 - u^q`.
pub(crate) const ASIN_SPLIT: f64 = 0.5;

/// The generalization parameter `p`, validated to lie in `(1, ∞)`.
///
/// Construction also caches a few `p`-dependent quantities that every
/// evaluation needs: `π_p`, the conjugate exponent `q = p/(p-1)`, the
/// partial integral `arcsin_p(ASIN_SPLIT)`, `arcsinh_p(1)` and the
/// hyperbolic range cap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PParam {
    p: f64,
    q: f64,
    pi_p: f64,
    asin_split: NumericResult,
    asinh_one: NumericResult,
    x_max: f64,
}

impl PParam {
    pub fn new(p: f64) -> Result<Self> {
        if !(p.is_finite() && p > 1.0) {
            return Err(Error::Param(p));
        }
        let quad = Quadrature::default();
        let asin_split = quad.run(|t| asin_integrand(t, p), 0.0, ASIN_SPLIT)?;
        let asinh_one = quad.run(|t| asinh_integrand(t, p), 0.0, 1.0)?;
        let span = Y_MAX.ln();
        let tail =
            Quadrature::new(DEFAULT_ABS_TOL * (1.0 + span)).run(|s| asinh_log_integrand(s, p), 0.0, span)?;
        Ok(Self {
            p,
            q: p / (p - 1.0),
            pi_p: closed_form_pi_p(p),
            asin_split,
            asinh_one,
            x_max: asinh_one.value + tail.value,
        })
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.p
    }

    /// Conjugate exponent `p / (p - 1)`.
    #[inline]
    pub fn conjugate(&self) -> f64 {
        self.q
    }

    #[inline]
    pub fn pi_p(&self) -> f64 {
        self.pi_p
    }

    #[inline]
    pub fn half_pi_p(&self) -> f64 {
        0.5 * self.pi_p
    }

    /// Largest `|x|` accepted by the hyperbolic functions:
    /// `arcsinh_p(Y_MAX)`.
    #[inline]
    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub(crate) fn asin_split(&self) -> NumericResult {
        self.asin_split
    }

    pub(crate) fn asinh_one(&self) -> NumericResult {
        self.asinh_one
    }
}

impl TryFrom<f64> for PParam {
    type Error = Error;

    fn try_from(p: f64) -> Result<Self> {
        Self::new(p)
    }
}

fn closed_form_pi_p(p: f64) -> f64 {
    2.0 * PI / (p * (PI / p).sin())
}

/// `π_p = 2π / (p sin(π/p))`.
pub fn pi_p(p: &PParam) -> f64 {
    p.pi_p
}
