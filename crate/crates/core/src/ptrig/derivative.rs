use super::circular::{circular_parts, tan_p};
use super::fnid::FnId;
use super::hyperbolic::hyperbolic_parts;
use super::kernels::{asin_integrand, asinh_integrand, pow_abs};
use super::param::PParam;
use super::{Error, Result};

/// Closed-form derivative of `func` at `x`.
///
/// Circular functions are covered on the first quadrant `[0, π_p/2]`
/// (`tan_p` on the whole branch `(-π_p/2, π_p/2)` via `1 + |tan_p|^p`),
/// hyperbolic ones on `x >= 0`.
pub fn derivative(func: FnId, x: f64, p: &PParam) -> Result<f64> {
    let pv = p.value();
    let half = p.half_pi_p();
    let domain_err = |domain: &str| Error::Domain {
        func: func.name(),
        x,
        domain: format!("derivative domain {domain}"),
    };
    let in_quadrant = (0.0..=half).contains(&x);
    let in_open_quadrant = (0.0..half).contains(&x);
    let value = match func {
        FnId::ArcSin => {
            if !(0.0..1.0).contains(&x) {
                return Err(domain_err("[0, 1)"));
            }
            asin_integrand(x, pv)
        }
        FnId::ArcSinh => {
            if !(x >= 0.0 && x.is_finite()) {
                return Err(domain_err("[0, ∞)"));
            }
            asinh_integrand(x, pv)
        }
        FnId::Sin | FnId::Cos => {
            if !in_quadrant {
                return Err(domain_err("[0, π_p/2]"));
            }
            let c = circular_parts(x, p)?;
            if func == FnId::Sin {
                c.cos
            } else {
                -pow_abs(c.cos, 2.0 - pv) * pow_abs(c.sin, pv - 1.0)
            }
        }
        FnId::Tan => {
            if !(x.abs() < half) {
                return Err(domain_err("(-π_p/2, π_p/2)"));
            }
            1.0 + pow_abs(tan_p(x, p)?, pv)
        }
        FnId::Sec => {
            if !in_open_quadrant {
                return Err(domain_err("[0, π_p/2)"));
            }
            let c = circular_parts(x, p)?;
            let t = c.sin / c.cos;
            pow_abs(t, pv - 1.0) / c.cos
        }
        FnId::Sinh | FnId::Cosh | FnId::Tanh | FnId::Sech => {
            if !(x >= 0.0) {
                return Err(domain_err("[0, X_max]"));
            }
            let h = hyperbolic_parts(x, p)?;
            match func {
                FnId::Sinh => h.cosh,
                FnId::Cosh => pow_abs(h.cosh, 2.0 - pv) * pow_abs(h.sinh, pv - 1.0),
                FnId::Tanh => pow_abs(1.0 / h.cosh, pv),
                _ => -pow_abs(h.tanh, pv - 1.0) / h.cosh,
            }
        }
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(domain_err("(derivative is unbounded here)"))
    }
}
