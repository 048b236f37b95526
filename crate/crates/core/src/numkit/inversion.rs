use super::{NumError, NumericResult, DEFAULT_MAX_ITER, DEFAULT_REL_TOL};

/// Safeguarded Newton/bisection solver for `f(x) = y` with `f` strictly
/// monotone on a bracket.
///
/// The bracket is shrunk on every evaluation and never lost. A Newton step
/// is taken only when a derivative is supplied and the step lands strictly
/// inside the current bracket; otherwise the bracket is bisected.
#[derive(Debug, Clone, Copy)]
pub struct Inverter {
    pub rel_tol: f64,
    pub max_iter: usize,
    /// Starting point; the bracket midpoint when absent or outside it.
    pub guess: Option<f64>,
}

impl Default for Inverter {
    fn default() -> Self {
        Self {
            rel_tol: DEFAULT_REL_TOL,
            max_iter: DEFAULT_MAX_ITER,
            guess: None,
        }
    }
}

impl Inverter {
    pub fn with_guess(mut self, guess: f64) -> Self {
        self.guess = Some(guess);
        self
    }

    /// Solves `f(x) = y` on `[lo, hi]`. `err_estimate` of the result is the
    /// final residual `|f(x) - y|`; convergence means it is at most
    /// `rel_tol * (1 + |y|)`.
    ///
    /// A derivative returning a non-finite value (or zero) forces bisection
    /// for that step. When one is supplied, the accepted point always gets a
    /// final Newton correction, which matters when `|y|` is far below 1.
    pub fn solve(
        &self,
        f: &dyn Fn(f64) -> Result<f64, NumError>,
        df: Option<&dyn Fn(f64) -> f64>,
        y: f64,
        lo: f64,
        hi: f64,
    ) -> Result<NumericResult, NumError> {
        if !(lo <= hi) || !lo.is_finite() || !hi.is_finite() || !y.is_finite() {
            return Err(NumError::InvalidArgument(
                "inversion needs a finite bracket lo <= hi",
            ));
        }
        let tol = self.rel_tol * (1.0 + y.abs());
        let f_lo = f(lo)?;
        let f_hi = f(hi)?;
        let r_lo = f_lo - y;
        let r_hi = f_hi - y;
        let polished = |x: f64, r: f64| match df {
            Some(df) => polish(x, r, df, lo, hi),
            None => x,
        };
        if r_lo.abs() <= tol && r_lo.abs() <= r_hi.abs() {
            return Ok(done(polished(lo, r_lo), r_lo, 0, true));
        }
        if r_hi.abs() <= tol {
            return Ok(done(polished(hi, r_hi), r_hi, 0, true));
        }
        if r_lo.signum() == r_hi.signum() {
            return Err(NumError::Bracket { y, f_lo, f_hi });
        }
        // Orient so that residual < 0 on the `below` side.
        let increasing = r_lo < 0.0;
        let (mut a, mut b) = (lo, hi);

        let mut x = match self.guess {
            Some(g) if g > a && g < b => g,
            _ => 0.5 * (a + b),
        };
        let mut best = (x, f64::INFINITY);

        for it in 1..=self.max_iter {
            let r = f(x)? - y;
            if !r.is_finite() {
                return Err(NumError::Domain { x, value: r + y });
            }
            if r.abs() < best.1 {
                best = (x, r.abs());
            }
            if r.abs() <= tol {
                let x = match df {
                    Some(df) => polish(x, r, df, a, b),
                    None => x,
                };
                return Ok(done(x, r, it, true));
            }
            if (r < 0.0) == increasing {
                a = x;
            } else {
                b = x;
            }
            let mid = 0.5 * (a + b);
            if !(a < mid && mid < b) {
                return Err(NumError::NonConvergence {
                    partial: done(best.0, best.1, it, false),
                    reason: "bracket collapsed before the residual tolerance was met",
                });
            }
            let newton = df.and_then(|df| {
                let d = df(x);
                let step = x - r / d;
                (d.is_finite() && d != 0.0 && step > a && step < b).then_some(step)
            });
            x = newton.unwrap_or(mid);
        }
        Err(NumError::NonConvergence {
            partial: done(best.0, best.1, self.max_iter, false),
            reason: "iteration cap reached",
        })
    }
}

fn done(x: f64, residual: f64, iterations: usize, converged: bool) -> NumericResult {
    NumericResult {
        value: x,
        err_estimate: residual.abs(),
        iterations,
        converged,
    }
}

// One extra Newton step once the residual test passes; costs no function
// evaluation and typically takes the root to full precision.
fn polish(x: f64, r: f64, df: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    if r == 0.0 {
        return x;
    }
    let d = df(x);
    let step = x - r / d;
    if d.is_finite() && d != 0.0 && step >= a && step <= b {
        step
    } else {
        x
    }
}

/// Fallible-function form of [`invert_monotone`].
pub fn try_invert_monotone(
    f: &dyn Fn(f64) -> Result<f64, NumError>,
    df: Option<&dyn Fn(f64) -> f64>,
    y: f64,
    lo: f64,
    hi: f64,
    rel_tol: f64,
) -> Result<NumericResult, NumError> {
    Inverter {
        rel_tol,
        ..Inverter::default()
    }
    .solve(f, df, y, lo, hi)
}

/// Finds `x` in `[lo, hi]` with `|f(x) - y| <= rel_tol (1 + |y|)`.
pub fn invert_monotone(
    f: &dyn Fn(f64) -> f64,
    df: Option<&dyn Fn(f64) -> f64>,
    y: f64,
    lo: f64,
    hi: f64,
    rel_tol: f64,
) -> Result<NumericResult, NumError> {
    try_invert_monotone(&|x| Ok(f(x)), df, y, lo, hi, rel_tol)
}
