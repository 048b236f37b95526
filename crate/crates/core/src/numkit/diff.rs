use super::NumError;

/// Central difference `(f(x + h) - f(x - h)) / 2h`.
pub fn finite_diff<F>(f: F, x: f64, h: f64) -> Result<f64, NumError>
where
    F: Fn(f64) -> f64,
{
    if !(h > 0.0) || !x.is_finite() {
        return Err(NumError::InvalidArgument("finite_diff needs finite x and h > 0"));
    }
    let fp = f(x + h);
    if !fp.is_finite() {
        return Err(NumError::Domain { x: x + h, value: fp });
    }
    let fm = f(x - h);
    if !fm.is_finite() {
        return Err(NumError::Domain { x: x - h, value: fm });
    }
    Ok((fp - fm) / (2.0 * h))
}
