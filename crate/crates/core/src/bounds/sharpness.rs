use super::{admissible, end_constant, ratio_fn, series_coefficients, BoundsError, Result, TheoremId};
use crate::ptrig::PParam;

/// Distances, relative to the interval, at which the endpoint limits are probed.
pub const EPS_LADDER: [f64; 3] = [1e-2, 1e-3, 1e-4];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SharpnessStep {
    pub eps: f64,
    pub x_0: f64,
    pub limit_0: f64,
    pub x_end: f64,
    pub limit_end: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SharpnessReport {
    pub theorem: TheoremId,
    pub p: f64,
    pub endpoint: Option<f64>,
    pub right_end: f64,
    /// Closed-form limit of `ratio_fn` at `0+`.
    pub closed_0: f64,
    /// Closed-form limit at the right end.
    pub closed_end: f64,
    pub ladder: Vec<SharpnessStep>,
    /// Richardson extrapolation of the last two rungs, assuming an error of
    /// order `ε^p` at `0` and `ε` at the right end.
    pub extrapolated_0: f64,
    pub extrapolated_end: f64,
}

impl SharpnessReport {
    /// `(|limit_0 - closed_0|, |limit_end - closed_end|)` per rung.
    pub fn gaps(&self) -> Vec<(f64, f64)> {
        self.ladder
            .iter()
            .map(|s| {
                (
                    (s.limit_0 - self.closed_0).abs(),
                    (s.limit_end - self.closed_end).abs(),
                )
            })
            .collect()
    }

    /// Both gaps are non-increasing along the ladder.
    pub fn improves_monotonically(&self) -> bool {
        self.gaps()
            .windows(2)
            .all(|w| w[1].0 <= w[0].0 && w[1].1 <= w[0].1)
    }

    /// Gaps at the finest rung.
    pub fn final_gaps(&self) -> (f64, f64) {
        *self.gaps().last().expect("ladder is never empty")
    }
}

/// Evaluates `ratio_fn` at `x = ε min(1, R)` and `x = R (1 - ε)` for each
/// `ε` in [`EPS_LADDER`] and pairs the results with the closed-form limits.
pub fn sharpness(
    theorem: TheoremId,
    p: &PParam,
    endpoint: Option<f64>,
    force: bool,
) -> Result<SharpnessReport> {
    let (closed_0, _) = series_coefficients(theorem, p.value()).ok_or(BoundsError::NotApplicable {
        theorem,
        op: "sharpness",
    })?;
    let r = admissible(theorem, p, endpoint, force)?;
    let closed_end = end_constant(theorem, p, r)?;
    let ladder = EPS_LADDER
        .iter()
        .map(|&eps| {
            let x_0 = eps * r.min(1.0);
            let x_end = r * (1.0 - eps);
            Ok(SharpnessStep {
                eps,
                x_0,
                limit_0: ratio_fn(theorem, x_0, p)?,
                x_end,
                limit_end: ratio_fn(theorem, x_end, p)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let (a, b) = (ladder[ladder.len() - 2], ladder[ladder.len() - 1]);
    let k0 = (a.eps / b.eps).powf(p.value());
    let k1 = a.eps / b.eps;
    Ok(SharpnessReport {
        theorem,
        p: p.value(),
        endpoint,
        right_end: r,
        closed_0,
        closed_end,
        extrapolated_0: b.limit_0 + (b.limit_0 - a.limit_0) / (k0 - 1.0),
        extrapolated_end: b.limit_end + (b.limit_end - a.limit_end) / (k1 - 1.0),
        ladder,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(p: f64) -> PParam {
        PParam::new(p).unwrap()
    }

    #[test]
    fn classical_sinh_at_zero() {
        let s = sharpness(TheoremId::T3_4, &pp(2.0), Some(1.0), false).unwrap();
        assert_eq!(s.closed_0, -1.0 / 6.0);
        assert!((s.ladder[2].limit_0 + 1.0 / 6.0).abs() < 1e-8);
        assert!(s.improves_monotonically());
    }

    #[test]
    fn classical_tanh_at_end() {
        let s = sharpness(TheoremId::T3_6, &pp(2.0), Some(1.0), false).unwrap();
        assert!((s.closed_end - 1f64.tanh().ln()).abs() < 1e-14);
        assert!((s.ladder[2].limit_end - s.closed_end).abs() < 1e-4);
        assert!((s.extrapolated_end - s.closed_end).abs() < 1e-7);
    }

    #[test]
    fn cosine_near_quarter_period() {
        let p3 = pp(3.0);
        let a = 0.9 * p3.half_pi_p();
        let s = sharpness(TheoremId::T3_2, &p3, Some(a), false).unwrap();
        let direct = crate::ptrig::cos_p(a, &p3).unwrap().ln() / a.powi(3);
        assert!((s.closed_end - direct).abs() < 1e-13);
        assert!(s.final_gaps().1 <= 1e-3);
        assert!(s.improves_monotonically());
    }

    #[test]
    fn not_for_the_chain() {
        assert!(sharpness(TheoremId::C3_7, &pp(2.0), None, false).is_err());
    }
}
