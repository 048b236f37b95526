//! Integrands in forms that keep full relative precision.

/// `|t|^e`, with the one-sided limit at the origin (0 for `e > 0`, `∞`
/// for `e < 0`).
#[inline]
pub(crate) fn pow_abs(t: f64, e: f64) -> f64 {
    let a = t.abs();
    if a != 0.0 {
        a.powf(e)
    } else if e > 0.0 {
        0.0
    } else if e == 0.0 {
        1.0
    } else {
        f64::INFINITY
    }
}

/// `(1 - t^p)^(-1/p)` for `0 <= t < 1`.
#[inline]
pub(crate) fn asin_integrand(t: f64, p: f64) -> f64 {
    (-(-pow_abs(t, p)).ln_1p() / p).exp()
}

/// `(1 - t^p)^(-1/p) - 1`, accurate when `t^p` is tiny.
#[inline]
pub(crate) fn asin_defect_integrand(t: f64, p: f64) -> f64 {
    (-(-pow_abs(t, p)).ln_1p() / p).exp_m1()
}

/// `(1 - (1 - w)^p) / (p w)`, tending to 1 as `w -> 0` and `1/p` at `w = 1`.
#[inline]
fn rho(w: f64, p: f64) -> f64 {
    if w == 0.0 {
        1.0
    } else {
        -(p * (-w).ln_1p()).exp_m1() / (p * w)
    }
}

/// The `arcsin_p` integrand after `t = 1 - u^q`, `q = p / (p - 1)`:
/// `q p^(-1/p) rho(u^q)^(-1/p)`. Bounded on `[0, 1]`, from `q p^(-1/p)` up
/// to `q`.
#[inline]
pub(crate) fn asin_tail_integrand(u: f64, p: f64, q: f64) -> f64 {
    let w = pow_abs(u, q);
    q * (-(p * rho(w, p)).ln() / p).exp()
}

/// `(1 - (1 - w)^p)^(1/p)`, the cosine recovered from `w = 1 - sin_p`.
#[inline]
pub(crate) fn cos_from_complement(w: f64, p: f64) -> f64 {
    ((-(p * (-w).ln_1p()).exp_m1()).ln() / p).exp()
}

/// `(1 + t^p)^(-1/p)`.
#[inline]
pub(crate) fn asinh_integrand(t: f64, p: f64) -> f64 {
    (-pow_abs(t, p).ln_1p() / p).exp()
}

/// `1 - (1 + t^p)^(-1/p)`, accurate when `t^p` is tiny.
#[inline]
pub(crate) fn asinh_defect_integrand(t: f64, p: f64) -> f64 {
    -(-pow_abs(t, p).ln_1p() / p).exp_m1()
}

/// The `arcsinh_p` integrand for `t > 1` after `t = e^s`:
/// `(1 + e^(-p s))^(-1/p)`.
#[inline]
pub(crate) fn asinh_log_integrand(s: f64, p: f64) -> f64 {
    (-(-p * s).exp().ln_1p() / p).exp()
}
