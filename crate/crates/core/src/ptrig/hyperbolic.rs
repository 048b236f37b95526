use super::kernels::{asinh_defect_integrand, asinh_integrand, asinh_log_integrand, pow_abs};
use super::param::PParam;
use super::{Error, Result};
use crate::numkit::{Inverter, NumError, NumericResult, Quadrature, DEFAULT_ABS_TOL};

/// Upper end of the `sinh_p` inversion bracket. `|x|` beyond
/// `arcsinh_p(Y_MAX)` is rejected.
pub const Y_MAX: f64 = 1e12;

// Up to this sinh_p value the excess sinh_p(x) - x comes from an integral.
const EXCESS_LIMIT: f64 = 2.0;

/// `arcsinh_p(x) = ∫_0^x (1 + t^p)^(-1/p) dt`, odd in `x`.
pub fn arcsinh_p(x: f64, p: &PParam) -> Result<NumericResult> {
    if !x.is_finite() {
        return Err(Error::Domain {
            func: "arcsinh_p",
            x,
            domain: "finite reals".into(),
        });
    }
    let r = arcsinh_abs(x.abs(), p)?;
    Ok(NumericResult {
        value: r.value.copysign(x),
        ..r
    })
}

fn arcsinh_abs(x: f64, p: &PParam) -> Result<NumericResult, NumError> {
    let pv = p.value();
    if x <= 1.0 {
        let lead = pow_abs(x, pv + 1.0) / (pv * (pv + 1.0));
        let e = Quadrature::new(DEFAULT_ABS_TOL * lead.min(1.0) + f64::MIN_POSITIVE).run(
            |t| asinh_defect_integrand(t, pv),
            0.0,
            x,
        )?;
        return Ok(NumericResult {
            value: x - e.value,
            ..e
        });
    }
    // Beyond 1 the integrand is ~1/t; integrate over s = ln t instead.
    let head = p.asinh_one();
    let tail = log_tail(x.ln(), p)?;
    Ok(NumericResult {
        value: head.value + tail.value,
        err_estimate: head.err_estimate + tail.err_estimate,
        iterations: tail.iterations,
        converged: tail.converged,
    })
}

fn log_tail(sigma: f64, p: &PParam) -> Result<NumericResult, NumError> {
    let pv = p.value();
    Quadrature::new(DEFAULT_ABS_TOL * (1.0 + sigma)).run(|s| asinh_log_integrand(s, pv), 0.0, sigma)
}

/// `sinh_p(y)` for `y >= 0`, with `ln sinh_p(y)` when it was the variable
/// actually solved for.
#[derive(Debug, Clone, Copy)]
struct Solved {
    s: f64,
    log_s: Option<f64>,
}

fn solve_sinh(y: f64, p: &PParam) -> Result<Solved, NumError> {
    let pv = p.value();
    if y == 0.0 {
        return Ok(Solved { s: 0.0, log_s: None });
    }
    let widen = 2f64.powf(1.0 / pv);
    let one = p.asinh_one().value;
    if y <= one {
        // On [0, 1] the integrand lies in [2^(-1/p), 1].
        let f = |s: f64| arcsinh_abs(s, p).map(|r| r.value);
        let df = |s: f64| asinh_integrand(s, pv);
        let guess = y * (1.0 + pow_abs(y, pv) / (pv * (pv + 1.0)));
        let s = Inverter::default()
            .with_guess(guess)
            .solve(&f, Some(&df), y, y, (y * widen).min(1.0))?
            .value;
        Ok(Solved { s, log_s: None })
    } else {
        let rest = y - one;
        let f = |sigma: f64| log_tail(sigma, p).map(|r| r.value);
        let df = |sigma: f64| asinh_log_integrand(sigma, pv);
        let sigma = Inverter::default()
            .solve(&f, Some(&df), rest, rest, rest * widen)?
            .value;
        Ok(Solved {
            s: sigma.exp(),
            log_s: Some(sigma),
        })
    }
}

fn range_check(x: f64, p: &PParam) -> Result<()> {
    if !x.is_finite() {
        return Err(Error::Domain {
            func: "sinh_p",
            x,
            domain: "finite reals".into(),
        });
    }
    if x.abs() > p.x_max() {
        return Err(Error::Range {
            x: x.abs(),
            x_max: p.x_max(),
        });
    }
    Ok(())
}

/// `cosh_p` from a solved `sinh_p`, overflow-free for large arguments.
fn cosh_of(sol: &Solved, pv: f64) -> f64 {
    match sol.log_s {
        Some(sigma) => sol.s * ((-pv * sigma).exp().ln_1p() / pv).exp(),
        None => (pow_abs(sol.s, pv).ln_1p() / pv).exp(),
    }
}

fn tanh_of(sol: &Solved, pv: f64) -> f64 {
    match sol.log_s {
        Some(sigma) => asinh_log_integrand(sigma, pv),
        None => sol.s / cosh_of(sol, pv),
    }
}

/// Inverse of `arcsinh_p`; odd, defined for `|x| <= X_max(p)`.
pub fn sinh_p(x: f64, p: &PParam) -> Result<f64> {
    range_check(x, p)?;
    Ok(solve_sinh(x.abs(), p)?.s.copysign(x))
}

/// `(1 + |sinh_p x|^p)^(1/p)`, even.
pub fn cosh_p(x: f64, p: &PParam) -> Result<f64> {
    range_check(x, p)?;
    Ok(cosh_of(&solve_sinh(x.abs(), p)?, p.value()))
}

/// `sinh_p / cosh_p`, odd with range `(-1, 1)`.
pub fn tanh_p(x: f64, p: &PParam) -> Result<f64> {
    range_check(x, p)?;
    Ok(tanh_of(&solve_sinh(x.abs(), p)?, p.value()).copysign(x))
}

/// `1 / cosh_p`, even with range `(0, 1]`.
pub fn sech_p(x: f64, p: &PParam) -> Result<f64> {
    range_check(x, p)?;
    Ok(1.0 / cosh_of(&solve_sinh(x.abs(), p)?, p.value()))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicParts {
    pub sinh: f64,
    pub cosh: f64,
    pub tanh: f64,
    /// `sinh_p(x) - x`, to full relative precision even for tiny `x`.
    pub excess: f64,
}

/// `sinh_p`, `cosh_p`, `tanh_p` and `sinh_p(x) - x` for `0 <= x <= X_max`.
///
/// Mirrors [`circular_parts`](super::circular_parts): with
/// `E(s) = s - arcsinh_p(s)` integrated directly, the excess is
/// `(1 - cosh)(s - x) + cosh E(s)`.
pub fn hyperbolic_parts(x: f64, p: &PParam) -> Result<HyperbolicParts> {
    if !(x >= 0.0) {
        return Err(Error::Domain {
            func: "hyperbolic_parts",
            x,
            domain: "[0, X_max]".into(),
        });
    }
    range_check(x, p)?;
    let pv = p.value();
    let sol = solve_sinh(x, p)?;
    let s = sol.s;
    let ch = cosh_of(&sol, pv);
    let excess = if s > 0.0 && s <= EXCESS_LIMIT {
        let lead = pow_abs(s, pv + 1.0) / (pv * (pv + 1.0));
        let e = Quadrature::new(DEFAULT_ABS_TOL * lead.min(1.0) + f64::MIN_POSITIVE)
            .run(|t| asinh_defect_integrand(t, pv), 0.0, s)?
            .value;
        let one_minus_ch = -(pow_abs(s, pv).ln_1p() / pv).exp_m1();
        one_minus_ch * (s - x) + ch * e
    } else {
        s - x
    };
    Ok(HyperbolicParts {
        sinh: s,
        cosh: ch,
        tanh: tanh_of(&sol, pv),
        excess,
    })
}
