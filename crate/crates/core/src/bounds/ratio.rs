use super::{BoundsError, Result, TheoremId};
use crate::ptrig::{circular_parts, hyperbolic_parts, Error, PParam};

/// Below this `x^p` the ratio comes from its two-term series.
const SERIES_LIMIT: f64 = 1e-8;

/// `(c0, c1)` with `ln(target)/x^p = c0 + c1 x^p + O(x^(2p))` at `0+`.
/// `None` for 3.7, which has no single target.
pub fn series_coefficients(theorem: TheoremId, p: f64) -> Option<(f64, f64)> {
    // sin_p x / x = 1 + a1 y + a2 y^2 + ..., sinh_p x / x = 1 - a1 y + a2 y^2 + ...
    let a1 = -1.0 / (p * (p + 1.0));
    let a2 = (1.0 + 2.0 * p - p * p) / (2.0 * p * p * (p + 1.0) * (2.0 * p + 1.0));
    let log_sin = a2 - a1 * a1 / 2.0;
    let log_cos = -(p - 1.0) / (2.0 * p * (p + 1.0));
    Some(match theorem {
        TheoremId::T3_1 => (a1, log_sin),
        TheoremId::T3_2 => (-1.0 / p, log_cos),
        TheoremId::T3_3 => (-1.0 / (p + 1.0), log_cos - log_sin),
        TheoremId::T3_4 => (a1, -log_sin),
        TheoremId::T3_5 => (1.0 / p, log_cos),
        TheoremId::T3_6 => (-1.0 / (p + 1.0), log_sin - log_cos),
        TheoremId::C3_7 => return None,
    })
}

fn not_applicable(theorem: TheoremId, op: &'static str) -> BoundsError {
    BoundsError::NotApplicable { theorem, op }
}

fn domain(func: &'static str, x: f64, domain: String) -> BoundsError {
    Error::Domain { func, x, domain }.into()
}

fn check_x(theorem: TheoremId, x: f64, p: &PParam) -> Result<()> {
    let half = p.half_pi_p();
    let ok = match theorem {
        TheoremId::T3_1 => x > 0.0 && x <= half,
        TheoremId::T3_2 | TheoremId::T3_3 => x > 0.0 && x < half,
        _ => x > 0.0 && x <= p.x_max(),
    };
    if ok {
        return Ok(());
    }
    let d = match theorem {
        TheoremId::T3_1 => format!("(0, π_p/2] = (0, {half}]"),
        TheoremId::T3_2 | TheoremId::T3_3 => format!("(0, π_p/2) = (0, {half})"),
        _ => format!("(0, X_max] = (0, {}]", p.x_max()),
    };
    Err(domain(theorem.target_name(), x, d))
}

/// `ln(target(x))`, accurate to full relative precision down to tiny `x`.
pub fn log_target(theorem: TheoremId, x: f64, p: &PParam) -> Result<f64> {
    if theorem == TheoremId::C3_7 {
        return Err(not_applicable(theorem, "log_target"));
    }
    check_x(theorem, x, p)?;
    let pv = p.value();
    let log_cos = |s: f64, c: f64| {
        let sp = s.powf(pv);
        if sp < 0.5 {
            (-sp).ln_1p() / pv
        } else {
            c.ln()
        }
    };
    let log_cosh = |s: f64, ch: f64| {
        let sp = s.powf(pv);
        if sp < 1.0 {
            sp.ln_1p() / pv
        } else {
            ch.ln()
        }
    };
    Ok(match theorem {
        TheoremId::T3_1 => (-circular_parts(x, p)?.defect / x).ln_1p(),
        TheoremId::T3_2 => {
            let c = circular_parts(x, p)?;
            log_cos(c.sin, c.cos)
        }
        TheoremId::T3_3 => {
            let c = circular_parts(x, p)?;
            log_cos(c.sin, c.cos) - (-c.defect / x).ln_1p()
        }
        TheoremId::T3_4 => -(hyperbolic_parts(x, p)?.excess / x).ln_1p(),
        TheoremId::T3_5 => {
            let h = hyperbolic_parts(x, p)?;
            log_cosh(h.sinh, h.cosh)
        }
        TheoremId::T3_6 => {
            let h = hyperbolic_parts(x, p)?;
            (h.excess / x).ln_1p() - log_cosh(h.sinh, h.cosh)
        }
        TheoremId::C3_7 => unreachable!(),
    })
}

/// The middle term of the double inequality.
pub fn target_ratio(theorem: TheoremId, x: f64, p: &PParam) -> Result<f64> {
    Ok(log_target(theorem, x, p)?.exp())
}

/// `ln(target(x)) / x^p`, the function whose monotonicity yields the band.
///
/// For `x^p < 1e-8` the two-term series is used; the truncation error there
/// is below `1e-16` relative.
pub fn ratio_fn(theorem: TheoremId, x: f64, p: &PParam) -> Result<f64> {
    let (c0, c1) =
        series_coefficients(theorem, p.value()).ok_or_else(|| not_applicable(theorem, "ratio_fn"))?;
    check_x(theorem, x, p)?;
    let y = x.powf(p.value());
    if y < SERIES_LIMIT {
        return Ok(c0 + c1 * y);
    }
    Ok(log_target(theorem, x, p)? / y)
}

/// `ξ(x) = x / tan_p(x)` on `(0, π_p/2)`.
pub fn aux_ratio_xi(x: f64, p: &PParam) -> Result<f64> {
    target_ratio(TheoremId::T3_3, x, p)
}

/// `ς(x) = x / tanh_p(x)` for `x > 0`.
pub fn aux_ratio_varsigma(x: f64, p: &PParam) -> Result<f64> {
    Ok((-log_target(TheoremId::T3_6, x, p)?).exp())
}
