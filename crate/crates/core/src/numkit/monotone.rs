use super::NumError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl Direction {
    fn sign(self) -> f64 {
        match self {
            Direction::Increasing => 1.0,
            Direction::Decreasing => -1.0,
        }
    }
}

/// Outcome of sampling a function for a claimed monotone direction.
#[derive(Debug, Clone, PartialEq)]
pub struct MonotoneReport {
    pub direction: Direction,
    /// Every adjacent pair moved in the claimed direction (no ties).
    pub strict: bool,
    pub n_samples: usize,
    /// Adjacent pair `(x_i, x_{i+1}, Δ)` with the smallest signed step,
    /// `Δ = ±(f(x_{i+1}) - f(x_i))` oriented so that positive agrees with
    /// the claim.
    pub worst_pair: (f64, f64, f64),
    pub violated: bool,
}

/// Samples `n` points on the open interval `(a, b)`, endpoints excluded by
/// an offset of `(b - a) / 4n`, and checks the claimed direction pairwise.
///
/// A pair only counts against the claim if it moves backwards by more than
/// `10 ε max(|f_i|, |f_{i+1}|)`.
pub fn check_monotone<F>(
    f: F,
    a: f64,
    b: f64,
    n: usize,
    claimed: Direction,
) -> Result<MonotoneReport, NumError>
where
    F: Fn(f64) -> f64,
{
    if n < 2 || !(a < b) {
        return Err(NumError::InvalidArgument("check_monotone needs n >= 2 and a < b"));
    }
    let offset = (b - a) / (4.0 * n as f64);
    let lo = a + offset;
    let hi = b - offset;
    let step = (hi - lo) / (n - 1) as f64;
    let xs: Vec<f64> = (0..n)
        .map(|i| if i == n - 1 { hi } else { lo + step * i as f64 })
        .collect();
    let mut values = Vec::with_capacity(n);
    for &x in &xs {
        let v = f(x);
        if !v.is_finite() {
            return Err(NumError::Domain { x, value: v });
        }
        values.push(v);
    }

    let sign = claimed.sign();
    let mut strict = true;
    let mut violated = false;
    let mut worst = (xs[0], xs[1], f64::INFINITY);
    for i in 0..n - 1 {
        let delta = sign * (values[i + 1] - values[i]);
        if delta <= 0.0 {
            strict = false;
        }
        let slack = 10.0 * f64::EPSILON * values[i].abs().max(values[i + 1].abs());
        if delta < -slack {
            violated = true;
        }
        if delta < worst.2 {
            worst = (xs[i], xs[i + 1], delta);
        }
    }
    Ok(MonotoneReport {
        direction: claimed,
        strict,
        n_samples: n,
        worst_pair: worst,
        violated,
    })
}
