//! Exponential double inequalities `e^(c_low x^p) < target(x) < e^(c_up x^p)`
//! for the generalized functions: best constants, grid verification and
//! endpoint sharpness.
//!
//! | id  | target          | interval          | ratio `ln(target)/x^p` |
//! |-----|-----------------|-------------------|------------------------|
//! | 3.1 | `sin_p x / x`   | `(0, π_p/2)`      | decreasing             |
//! | 3.2 | `cos_p x`       | `(0, a)`          | decreasing             |
//! | 3.3 | `x / tan_p x`   | `(0, b)`          | decreasing             |
//! | 3.4 | `x / sinh_p x`  | `(0, c)`          | increasing             |
//! | 3.5 | `cosh_p x`      | `(0, d)`          | decreasing             |
//! | 3.6 | `tanh_p x / x`  | `(0, m)`          | increasing             |
//! | 3.7 | `x / tan_p x < tanh_p x / x` on `(0, b]` | | |

mod ratio;
mod sharpness;
mod verify;

pub use ratio::{aux_ratio_varsigma, aux_ratio_xi, log_target, ratio_fn, series_coefficients, target_ratio};
pub use sharpness::{sharpness, SharpnessReport, SharpnessStep, EPS_LADDER};
pub use verify::{verify, BoundReport, GridPoint, PointError, Side, Violation, VIOLATION_TOL};

use crate::numkit::Direction;
use crate::ptrig::{self, PParam};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    T3_1,
    T3_2,
    T3_3,
    T3_4,
    T3_5,
    T3_6,
    C3_7,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::T3_1,
        TheoremId::T3_2,
        TheoremId::T3_3,
        TheoremId::T3_4,
        TheoremId::T3_5,
        TheoremId::T3_6,
        TheoremId::C3_7,
    ];

    /// The six double inequalities (everything except 3.7).
    pub const BANDS: [TheoremId; 6] = [
        TheoremId::T3_1,
        TheoremId::T3_2,
        TheoremId::T3_3,
        TheoremId::T3_4,
        TheoremId::T3_5,
        TheoremId::T3_6,
    ];

    pub fn label(self) -> &'static str {
        match self {
            TheoremId::T3_1 => "3.1",
            TheoremId::T3_2 => "3.2",
            TheoremId::T3_3 => "3.3",
            TheoremId::T3_4 => "3.4",
            TheoremId::T3_5 => "3.5",
            TheoremId::T3_6 => "3.6",
            TheoremId::C3_7 => "3.7",
        }
    }

    /// Smallest `p` covered by the hypothesis. 3.2 and 3.5 are stated for
    /// `p >= 1`, but the functions themselves need `p > 1`.
    pub fn p_min(self) -> f64 {
        match self {
            TheoremId::T3_2 | TheoremId::T3_5 => 1.0,
            _ => 2.0,
        }
    }

    pub fn needs_endpoint(self) -> bool {
        !matches!(self, TheoremId::T3_1 | TheoremId::C3_7)
    }

    pub fn accepts_endpoint(self) -> bool {
        self != TheoremId::T3_1
    }

    pub fn is_hyperbolic(self) -> bool {
        matches!(self, TheoremId::T3_4 | TheoremId::T3_5 | TheoremId::T3_6)
    }

    /// `π_p/2` for the circular statements, `None` for the hyperbolic ones.
    pub fn endpoint_cap(self, p: &PParam) -> Option<f64> {
        if self.is_hyperbolic() {
            None
        } else {
            Some(p.half_pi_p())
        }
    }

    /// Direction of `ratio_fn` on the interval; `None` for 3.7.
    pub fn ratio_direction(self) -> Option<Direction> {
        match self {
            TheoremId::T3_4 | TheoremId::T3_6 => Some(Direction::Increasing),
            TheoremId::C3_7 => None,
            _ => Some(Direction::Decreasing),
        }
    }

    /// Human-readable middle term.
    pub fn target_name(self) -> &'static str {
        match self {
            TheoremId::T3_1 => "sin_p(x)/x",
            TheoremId::T3_2 => "cos_p(x)",
            TheoremId::T3_3 => "x/tan_p(x)",
            TheoremId::T3_4 => "x/sinh_p(x)",
            TheoremId::T3_5 => "cosh_p(x)",
            TheoremId::T3_6 => "tanh_p(x)/x",
            TheoremId::C3_7 => "exp(-x^p/(p+1))",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownTheorem(pub String);

impl fmt::Display for UnknownTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown theorem '{}', expected one of 3.1 .. 3.7", self.0)
    }
}

impl std::error::Error for UnknownTheorem {}

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    /// Accepts `3.1`, `T3_1`, `t3.1`, `C3_7` and similar spellings.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s
            .trim()
            .trim_start_matches(['T', 't', 'C', 'c'])
            .replace('_', ".");
        TheoremId::ALL
            .into_iter()
            .find(|t| t.label() == key)
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum BoundsError {
    #[error("{theorem} requires p >= {p_min}, got p = {p}")]
    Param { theorem: TheoremId, p: f64, p_min: f64 },
    #[error("{0}")]
    Endpoint(String),
    #[error("{0}")]
    Argument(String),
    #[error("{op} is not defined for {theorem}")]
    NotApplicable { theorem: TheoremId, op: &'static str },
    #[error(transparent)]
    Eval(#[from] ptrig::Error),
}

pub type Result<T, E = BoundsError> = std::result::Result<T, E>;

/// Exponent coefficients of the band `e^(lower x^p) < target < e^(upper x^p)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundConstants {
    pub lower_coeff: f64,
    pub upper_coeff: f64,
    pub endpoint: Option<f64>,
}

/// Checks the hypotheses on `p` and the endpoint; returns the right end of
/// the interval.
pub(crate) fn admissible(theorem: TheoremId, p: &PParam, endpoint: Option<f64>, force: bool) -> Result<f64> {
    if !force && p.value() < theorem.p_min() {
        return Err(BoundsError::Param {
            theorem,
            p: p.value(),
            p_min: theorem.p_min(),
        });
    }
    let half = p.half_pi_p();
    let e = match (endpoint, theorem) {
        (Some(_), TheoremId::T3_1) => {
            return Err(BoundsError::Endpoint(format!(
                "{theorem} holds on (0, π_p/2) and takes no endpoint"
            )))
        }
        (None, TheoremId::T3_1 | TheoremId::C3_7) => return Ok(half),
        (None, _) => {
            return Err(BoundsError::Endpoint(format!("{theorem} needs an endpoint")));
        }
        (Some(e), _) => e,
    };
    if !(e > 0.0 && e.is_finite()) {
        return Err(BoundsError::Endpoint(format!(
            "endpoint must be positive and finite, got {e}"
        )));
    }
    match theorem {
        TheoremId::T3_2 | TheoremId::T3_3 if e >= half => Err(BoundsError::Endpoint(format!(
            "{theorem} needs an endpoint below π_p/2 = {half}, got {e}"
        ))),
        TheoremId::C3_7 if e > half => Err(BoundsError::Endpoint(format!(
            "{theorem} needs an endpoint of at most π_p/2 = {half}, got {e}"
        ))),
        _ if theorem.is_hyperbolic() && e > p.x_max() => Err(BoundsError::Endpoint(format!(
            "endpoint {e} exceeds the hyperbolic range cap {}",
            p.x_max()
        ))),
        _ => Ok(e),
    }
}

/// The best constants, ordered by value.
///
/// The limit of `ratio_fn` at `0+` is a closed form; the one at the right
/// end is `ln(target(e))/e^p` (closed form for 3.1).
pub fn constants(
    theorem: TheoremId,
    p: &PParam,
    endpoint: Option<f64>,
    force: bool,
) -> Result<BoundConstants> {
    if theorem == TheoremId::C3_7 {
        return Err(BoundsError::NotApplicable {
            theorem,
            op: "constants",
        });
    }
    let end = admissible(theorem, p, endpoint, force)?;
    let at_zero = series_coefficients(theorem, p.value())
        .expect("band theorems have a series")
        .0;
    let at_end = end_constant(theorem, p, end)?;
    let (lower_coeff, upper_coeff) = if at_zero < at_end {
        (at_zero, at_end)
    } else {
        (at_end, at_zero)
    };
    debug_assert!(lower_coeff < upper_coeff);
    Ok(BoundConstants {
        lower_coeff,
        upper_coeff,
        endpoint,
    })
}

/// Limit of `ratio_fn` at the right end `end` of the interval.
pub(crate) fn end_constant(theorem: TheoremId, p: &PParam, end: f64) -> Result<f64> {
    if theorem == TheoremId::T3_1 {
        let half = p.half_pi_p();
        return Ok((1.0 / half).ln() / half.powf(p.value()));
    }
    ratio_fn(theorem, end, p)
}
