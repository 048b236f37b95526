use super::kernels::{
    asin_defect_integrand, asin_integrand, asin_tail_integrand, cos_from_complement, pow_abs,
};
use super::param::{PParam, ASIN_SPLIT};
use super::{Error, Result};
use crate::numkit::{Inverter, NumError, NumericResult, Quadrature, DEFAULT_ABS_TOL};

/// Half-width of the band around `±π_p/2` (relative to `π_p`) in which
/// `tan_p` and `sec_p` report a pole instead of a value.
pub const POLE_GUARD: f64 = 1e-8;

// Newton on arcsin_p is abandoned this close to s = 1.
const FLAT_TOP: f64 = 1e-8;
// Above this sin_p value the defect x - sin_p(x) is formed directly.
const DEFECT_LIMIT: f64 = 0.9;

/// `arcsin_p(x) = ∫_0^x (1 - t^p)^(-1/p) dt` on `[-1, 1]`, odd in `x`.
pub fn arcsin_p(x: f64, p: &PParam) -> Result<NumericResult> {
    if !(x.abs() <= 1.0) {
        return Err(Error::Domain {
            func: "arcsin_p",
            x,
            domain: "[-1, 1]".into(),
        });
    }
    let r = arcsin_abs(x.abs(), p)?;
    Ok(NumericResult {
        value: r.value.copysign(x),
        ..r
    })
}

fn arcsin_abs(x: f64, p: &PParam) -> Result<NumericResult, NumError> {
    let pv = p.value();
    if x <= ASIN_SPLIT {
        // x + ∫ ((1 - t^p)^(-1/p) - 1), so that tiny x keep full relative precision.
        let lead = pow_abs(x, pv + 1.0) / (pv * (pv + 1.0));
        let d = Quadrature::new(DEFAULT_ABS_TOL * lead.min(1.0) + f64::MIN_POSITIVE).run(
            |t| asin_defect_integrand(t, pv),
            0.0,
            x,
        )?;
        return Ok(NumericResult {
            value: x + d.value,
            ..d
        });
    }
    // t = 1 - u^q turns the (1 - t)^(-1/p) end into a bounded integrand.
    let q = p.conjugate();
    let u_x = (1.0 - x).powf(1.0 / q);
    let u_split = (1.0 - ASIN_SPLIT).powf(1.0 / q);
    let tol = DEFAULT_ABS_TOL * (1.0 + q * (u_split - u_x));
    let tail = Quadrature::new(tol).run(|u| asin_tail_integrand(u, pv, q), u_x, u_split)?;
    let head = p.asin_split();
    Ok(NumericResult {
        value: head.value + tail.value,
        err_estimate: head.err_estimate + tail.err_estimate,
        iterations: tail.iterations,
        converged: tail.converged,
    })
}

/// `∫_0^u` of the substituted integrand; equals `π_p/2 - arcsin_p(1 - u^q)`.
fn complement_integral(u: f64, p: &PParam) -> Result<f64, NumError> {
    let (pv, q) = (p.value(), p.conjugate());
    let tol = DEFAULT_ABS_TOL * (1.0 + q * u);
    Quadrature::new(tol)
        .run(|v| asin_tail_integrand(v, pv, q), 0.0, u)
        .map(|r| r.value)
}

#[derive(Debug, Clone, Copy)]
struct Quadrant {
    sin: f64,
    cos: f64,
}

/// `sin_p` and `cos_p` on the first quadrant `[0, π_p/2]`.
///
/// The lower half inverts `arcsin_p` directly. The upper half inverts the
/// complementary integral `π_p/2 - arcsin_p(s)` in the variable
/// `u = (1 - s)^(1/q)`, which keeps `cos_p` accurate to full relative
/// precision as it approaches zero.
fn quadrant(a: f64, p: &PParam) -> Result<Quadrant, NumError> {
    let pv = p.value();
    let half = p.half_pi_p();
    if a <= 0.0 {
        return Ok(Quadrant { sin: 0.0, cos: 1.0 });
    }
    if a >= half {
        return Ok(Quadrant { sin: 1.0, cos: 0.0 });
    }
    if a <= 0.5 * half {
        let hi = a.min(1.0);
        let guess = a * (1.0 - pow_abs(a, pv) / (pv * (pv + 1.0)));
        let f = |s: f64| arcsin_abs(s, p).map(|r| r.value);
        let df = |s: f64| {
            if 1.0 - s < FLAT_TOP {
                f64::NAN
            } else {
                asin_integrand(s, pv)
            }
        };
        let s = Inverter::default()
            .with_guess(guess)
            .solve(&f, Some(&df), a, 0.0, hi)?
            .value;
        let cos = ((-pow_abs(s, pv)).ln_1p() / pv).exp();
        Ok(Quadrant { sin: s, cos })
    } else {
        let q = p.conjugate();
        let rest = half - a;
        let slope_lo = q * pv.powf(-1.0 / pv);
        let lo = 0.99 * rest / q;
        let hi = (1.01 * rest / slope_lo).min(1.0);
        let f = |u: f64| complement_integral(u, p);
        let df = |u: f64| asin_tail_integrand(u, pv, q);
        let u = Inverter::default()
            .with_guess(rest / slope_lo)
            .solve(&f, Some(&df), rest, lo, hi)?
            .value;
        let w = pow_abs(u, q);
        Ok(Quadrant {
            sin: 1.0 - w,
            cos: cos_from_complement(w, pv),
        })
    }
}

/// Position of `x` relative to the quadrant structure of `sin_p`.
#[derive(Debug, Clone, Copy)]
struct Reduced {
    /// `x` reduced into `[-π_p, π_p]`.
    r: f64,
    /// First-quadrant argument.
    a: f64,
    sin_sign: f64,
    cos_sign: f64,
}

fn reduce(x: f64, p: &PParam) -> Reduced {
    let period = 2.0 * p.pi_p();
    let r = x - period * (x / period).round();
    let abs = r.abs();
    let half = p.half_pi_p();
    let (a, cos_sign) = if abs > half {
        (p.pi_p() - abs, -1.0)
    } else {
        (abs, 1.0)
    };
    Reduced {
        r,
        a: a.max(0.0),
        sin_sign: if r < 0.0 { -1.0 } else { 1.0 },
        cos_sign,
    }
}

fn finite(func: &'static str, x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            func,
            x,
            domain: "finite reals".into(),
        })
    }
}

/// Inverse of `arcsin_p` on `[0, π_p/2]`, extended to the real line by
/// oddness, `sin_p(x) = sin_p(π_p - x)` and `2π_p` periodicity.
pub fn sin_p(x: f64, p: &PParam) -> Result<f64> {
    finite("sin_p", x)?;
    let red = reduce(x, p);
    Ok(red.sin_sign * quadrant(red.a, p)?.sin)
}

/// `(1 - sin_p^p)^(1/p)` on the first quadrant; elsewhere the derivative
/// of the extended `sin_p`, so even, positive on `(-π_p/2, π_p/2)` and
/// negative on the other half-period.
pub fn cos_p(x: f64, p: &PParam) -> Result<f64> {
    finite("cos_p", x)?;
    let red = reduce(x, p);
    Ok(red.cos_sign * quadrant(red.a, p)?.cos)
}

fn pole_check(red: &Reduced, x: f64, p: &PParam) -> Result<()> {
    let half = p.half_pi_p();
    if (red.r.abs() - half).abs() < POLE_GUARD * p.pi_p() {
        let pole = x - red.r + half.copysign(red.r);
        return Err(Error::Pole { x, pole });
    }
    Ok(())
}

/// `sin_p / cos_p`, defined off the poles `π_p/2 + kπ_p`.
pub fn tan_p(x: f64, p: &PParam) -> Result<f64> {
    finite("tan_p", x)?;
    let red = reduce(x, p);
    pole_check(&red, x, p)?;
    let q = quadrant(red.a, p)?;
    Ok(red.sin_sign * red.cos_sign * q.sin / q.cos)
}

/// `1 / cos_p` on the principal interval `(-π_p/2, π_p/2)`.
pub fn sec_p(x: f64, p: &PParam) -> Result<f64> {
    finite("sec_p", x)?;
    let half = p.half_pi_p();
    if (x.abs() - half).abs() < POLE_GUARD * p.pi_p() {
        return Err(Error::Pole {
            x,
            pole: half.copysign(x),
        });
    }
    if x.abs() > half {
        return Err(Error::Domain {
            func: "sec_p",
            x,
            domain: format!("(-π_p/2, π_p/2) = (-{half}, {half})"),
        });
    }
    Ok(1.0 / quadrant(x.abs(), p)?.cos)
}

/// First-quadrant values together with the defect `x - sin_p(x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircularParts {
    pub sin: f64,
    pub cos: f64,
    /// `x - sin_p(x)`, to full relative precision even for tiny `x`.
    pub defect: f64,
}

/// `sin_p`, `cos_p` and `x - sin_p(x)` for `x` in `[0, π_p/2]`.
///
/// With `s` the computed `sin_p(x)` and `D(s) = arcsin_p(s) - s` (an
/// integral with no cancellation), the defect is
/// `(1 - cos)(x - s) + cos D(s)`, which also absorbs the first-order
/// error of `s` itself.
pub fn circular_parts(x: f64, p: &PParam) -> Result<CircularParts> {
    let half = p.half_pi_p();
    if !(0.0..=half).contains(&x) {
        return Err(Error::Domain {
            func: "circular_parts",
            x,
            domain: format!("[0, π_p/2] = [0, {half}]"),
        });
    }
    let Quadrant { sin: s, cos: c } = quadrant(x, p)?;
    let defect = if s > 0.0 && s <= DEFECT_LIMIT {
        let pv = p.value();
        let lead = pow_abs(s, pv + 1.0) / (pv * (pv + 1.0));
        let d = Quadrature::new(DEFAULT_ABS_TOL * lead + f64::MIN_POSITIVE)
            .run(|t| asin_defect_integrand(t, pv), 0.0, s)?
            .value;
        let one_minus_c = -((-pow_abs(s, pv)).ln_1p() / pv).exp_m1();
        one_minus_c * (x - s) + c * d
    } else {
        x - s
    };
    Ok(CircularParts {
        sin: s,
        cos: c,
        defect,
    })
}
