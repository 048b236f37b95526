use super::{
    admissible, constants, end_constant, ratio_fn, series_coefficients, BoundConstants, Result, TheoremId,
};
use crate::ptrig::PParam;
use rayon::prelude::*;

/// A margin only counts as a violation below `-VIOLATION_TOL (1 + |target|)`.
pub const VIOLATION_TOL: f64 = 1e-12;

// Closest approach to either end of the interval, relative to its length.
const EDGE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub x: f64,
    pub side: Side,
    pub margin: f64,
}

/// One grid row. `lower_margin = target - lower`, `upper_margin = upper - target`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub x: f64,
    pub lower: f64,
    pub target: f64,
    pub upper: f64,
    pub lower_margin: f64,
    pub upper_margin: f64,
}

impl GridPoint {
    /// Margins divided by the target.
    pub fn relative_margins(&self) -> (f64, f64) {
        (self.lower_margin / self.target, self.upper_margin / self.target)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointError {
    pub x: f64,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub theorem: TheoremId,
    pub p: f64,
    pub endpoint: Option<f64>,
    /// Right end of the sampled interval.
    pub right_end: f64,
    /// `None` for 3.7, whose bounds are functions rather than constants.
    pub constants: Option<BoundConstants>,
    /// False when `p` is below the hypothesis and the run was forced.
    pub certifying: bool,
    pub n_points: usize,
    pub min_lower_margin: f64,
    pub min_upper_margin: f64,
    pub violations: Vec<Violation>,
    /// `ratio_fn` at the grid point nearest `0`.
    pub empirical_limit_0: Option<f64>,
    /// `ratio_fn` at the grid point nearest the right end.
    pub empirical_limit_end: Option<f64>,
    /// Closed-form limits of `ratio_fn` at `0+` and at the right end.
    pub closed_limit_0: Option<f64>,
    pub closed_limit_end: Option<f64>,
    pub points: Vec<GridPoint>,
    pub errors: Vec<PointError>,
}

impl BoundReport {
    /// No violations and every point evaluated.
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.errors.is_empty()
    }
}

/// `n` points in `(0, r)`: a quarter log-spaced from `1e-6 r` up to `r/4`,
/// half uniform on `[r/4, 3r/4]`, a quarter with log-spaced distance to
/// `r` down to `1e-6 r`.
pub(crate) fn grid(r: f64, n: usize) -> Vec<f64> {
    let n_edge = n / 4;
    let n_mid = n - 2 * n_edge;
    let (lo, hi) = (EDGE.log10(), 0.25f64.log10());
    let lerp = |t: f64| 10f64.powf(lo + (hi - lo) * t);
    let mut xs = Vec::with_capacity(n);
    xs.extend((0..n_edge).map(|i| r * lerp(i as f64 / n_edge as f64)));
    xs.extend((0..n_mid).map(|i| {
        let t = if n_mid == 1 {
            0.5
        } else {
            i as f64 / (n_mid - 1) as f64
        };
        r * (0.25 + 0.5 * t)
    }));
    xs.extend((0..n_edge).map(|i| r - r * lerp(1.0 - (i + 1) as f64 / n_edge as f64)));
    xs
}

/// Samples the inequality on `n >= 10` interior points.
///
/// Each point is checked in log space: with `y = x^p` and the three
/// exponents `f_low <= f_mid <= f_up` (constants and `ratio_fn` for the
/// bands; `ratio_fn` of 3.3, `-1/(p+1)` and `ratio_fn` of 3.6 for 3.7, which
/// is verified through the chain `x/tan_p x < e^(-x^p/(p+1)) < tanh_p x/x`),
/// the margins are `target (1 - e^(-(f_mid - f_low) y))` and
/// `target (e^((f_up - f_mid) y) - 1)`. Points are evaluated in parallel;
/// the report does not depend on scheduling.
pub fn verify(
    theorem: TheoremId,
    p: &PParam,
    endpoint: Option<f64>,
    n: usize,
    force: bool,
) -> Result<BoundReport> {
    if n < 10 {
        return Err(super::BoundsError::Argument(format!(
            "verify needs at least 10 grid points, got {n}"
        )));
    }
    let r = admissible(theorem, p, endpoint, force)?;
    let consts = if theorem == TheoremId::C3_7 {
        None
    } else {
        Some(constants(theorem, p, endpoint, force)?)
    };
    let pv = p.value();
    let xs = grid(r, n);

    let eval = |x: f64| -> Result<(GridPoint, Option<f64>)> {
        let y = x.powf(pv);
        let (f_low, f_mid, f_up, ratio) = match consts {
            Some(c) => {
                let f = ratio_fn(theorem, x, p)?;
                (c.lower_coeff, f, c.upper_coeff, Some(f))
            }
            None => (
                ratio_fn(TheoremId::T3_3, x, p)?,
                -1.0 / (pv + 1.0),
                ratio_fn(TheoremId::T3_6, x, p)?,
                None,
            ),
        };
        let target = (f_mid * y).exp();
        Ok((
            GridPoint {
                x,
                lower: (f_low * y).exp(),
                target,
                upper: (f_up * y).exp(),
                lower_margin: -target * (-(f_mid - f_low) * y).exp_m1(),
                upper_margin: target * ((f_up - f_mid) * y).exp_m1(),
            },
            ratio,
        ))
    };
    let results: Vec<_> = xs.par_iter().map(|&x| (x, eval(x))).collect();

    let mut points = Vec::with_capacity(n);
    let mut ratios = Vec::with_capacity(n);
    let mut errors = Vec::new();
    for (x, r) in results {
        match r {
            Ok((pt, f)) => {
                points.push(pt);
                ratios.push(f);
            }
            Err(e) => errors.push(PointError {
                x,
                message: e.to_string(),
            }),
        }
    }

    let mut violations = Vec::new();
    let mut min_lower_margin = f64::INFINITY;
    let mut min_upper_margin = f64::INFINITY;
    for pt in &points {
        let tol = -VIOLATION_TOL * (1.0 + pt.target.abs());
        for (side, m) in [(Side::Lower, pt.lower_margin), (Side::Upper, pt.upper_margin)] {
            // NaN margins count against the claim.
            if !(m >= tol) {
                violations.push(Violation {
                    x: pt.x,
                    side,
                    margin: m,
                });
            }
        }
        min_lower_margin = min_lower_margin.min(pt.lower_margin);
        min_upper_margin = min_upper_margin.min(pt.upper_margin);
    }

    Ok(BoundReport {
        theorem,
        p: pv,
        endpoint,
        right_end: r,
        constants: consts,
        certifying: pv >= theorem.p_min(),
        n_points: n,
        min_lower_margin,
        min_upper_margin,
        violations,
        empirical_limit_0: ratios.first().copied().flatten(),
        empirical_limit_end: ratios.last().copied().flatten(),
        closed_limit_0: series_coefficients(theorem, pv).map(|c| c.0),
        closed_limit_end: match consts {
            Some(_) => Some(end_constant(theorem, p, r)?),
            None => None,
        },
        points,
        errors,
    })
}
