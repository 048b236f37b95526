use super::{NumError, NumericResult, DEFAULT_ABS_TOL, DEFAULT_MAX_DEPTH};

// 15-point Kronrod abscissae on [-1, 1] (positive half, descending) and the
// embedded 7-point Gauss weights for the odd-indexed nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const MAX_PANELS: usize = 2000;
const ROUNDOFF: f64 = 100.0 * f64::EPSILON;

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
    /// Estimate of `∫|f|` over the panel.
    mass: f64,
    depth: u32,
}

/// QUADPACK-style error rescaling of the raw |K15 - G7| difference.
fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut err = err.abs();
    if res_asc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / res_asc).powf(1.5);
        err = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    err
}

/// Returns `(integral, error estimate, ∫|f| estimate)` over `[a, b]`.
fn gauss_kronrod<F>(f: &F, a: f64, b: f64) -> Result<(f64, f64, f64), NumError>
where
    F: Fn(f64) -> f64,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let eval = |x: f64| {
        let v = f(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(NumError::Domain { x, value: v })
        }
    };

    let fc = eval(center)?;
    let mut res_k = fc * WGK[7];
    let mut res_g = fc * WG[3];
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let scale = half.abs();
    let err = rescale_error((res_k - res_g) * half, res_abs * scale, res_asc * scale);
    Ok((res_k * half, err, res_abs * scale))
}

/// Globally adaptive G7/K15 quadrature.
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub abs_tol: f64,
    pub max_depth: u32,
}

impl Default for Quadrature {
    fn default() -> Self {
        Self::new(DEFAULT_ABS_TOL)
    }
}

impl Quadrature {
    pub fn new(abs_tol: f64) -> Self {
        Self {
            abs_tol,
            max_depth: DEFAULT_MAX_DEPTH,
        }
    }

    /// Plain adaptive bisection on `[a, b]`. Suited to integrands that are
    /// bounded; weak derivative singularities are handled by refinement.
    pub fn run<F>(&self, f: F, a: f64, b: f64) -> Result<NumericResult, NumError>
    where
        F: Fn(f64) -> f64,
    {
        if !(a.is_finite() && b.is_finite()) {
            return Err(NumError::InvalidArgument("integration bounds must be finite"));
        }
        if a > b {
            return Err(NumError::InvalidArgument("integration requires a <= b"));
        }
        if !(self.abs_tol > 0.0) {
            return Err(NumError::InvalidArgument("tolerance must be positive"));
        }
        if a == b {
            return Ok(NumericResult::exact(0.0));
        }

        let (value, err, mass) = gauss_kronrod(&f, a, b)?;
        let mut panels = vec![Panel {
            a,
            b,
            value,
            err,
            mass,
            depth: 0,
        }];
        let mut iterations = 1;

        loop {
            let total: f64 = panels.iter().map(|p| p.value).sum();
            let total_err: f64 = panels.iter().map(|p| p.err).sum();
            let mass: f64 = panels.iter().map(|p| p.mass).sum();
            // Each panel's estimate is floored at 50 ε ∫|f|, so no request
            // below that can ever be met.
            if total_err <= self.abs_tol.max(ROUNDOFF * mass) {
                return Ok(NumericResult {
                    value: total,
                    err_estimate: total_err,
                    iterations,
                    converged: true,
                });
            }
            let partial = NumericResult {
                value: total,
                err_estimate: total_err,
                iterations,
                converged: false,
            };
            if panels.len() >= MAX_PANELS {
                return Err(NumError::NonConvergence {
                    partial,
                    reason: "subdivision budget exhausted",
                });
            }
            let worst = panels
                .iter()
                .enumerate()
                .filter(|(_, p)| p.depth < self.max_depth)
                .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
                .map(|(i, _)| i);
            let Some(i) = worst else {
                return Err(NumError::NonConvergence {
                    partial,
                    reason: "subdivision depth exhausted",
                });
            };
            let p = panels.swap_remove(i);
            let mid = 0.5 * (p.a + p.b);
            if !(p.a < mid && mid < p.b) {
                // Panel already at floating-point resolution.
                panels.push(Panel {
                    depth: self.max_depth,
                    ..p
                });
                continue;
            }
            let (v1, e1, m1) = gauss_kronrod(&f, p.a, mid)?;
            let (v2, e2, m2) = gauss_kronrod(&f, mid, p.b)?;
            iterations += 1;
            panels.push(Panel {
                a: p.a,
                b: mid,
                value: v1,
                err: e1,
                mass: m1,
                depth: p.depth + 1,
            });
            panels.push(Panel {
                a: mid,
                b: p.b,
                value: v2,
                err: e2,
                mass: m2,
                depth: p.depth + 1,
            });
        }
    }

    /// Adaptive quadrature after the endpoint-clustering change of variables
    /// `t = a + (b - a) s^2 (3 - 2 s)`.
    ///
    /// The map has vanishing derivative at both ends, so an integrable
    /// `(b - t)^(-1/2)` singularity becomes a smooth integrand and weaker
    /// or stronger algebraic singularities become much milder ones.
    pub fn run_clustered<F>(&self, f: F, a: f64, b: f64) -> Result<NumericResult, NumError>
    where
        F: Fn(f64) -> f64,
    {
        if !(a.is_finite() && b.is_finite()) {
            return Err(NumError::InvalidArgument("integration bounds must be finite"));
        }
        if a > b {
            return Err(NumError::InvalidArgument("integration requires a <= b"));
        }
        let width = b - a;
        let g = |s: f64| {
            let t = a + width * s * s * (3.0 - 2.0 * s);
            if t <= a || t >= b {
                // Only reached when s is within rounding of 0 or 1, where the
                // Jacobian kills any integrable singularity.
                return 0.0;
            }
            f(t) * 6.0 * s * (1.0 - s) * width
        };
        self.run(g, 0.0, 1.0)
    }
}

/// `∫_a^b f(t) dt` to absolute tolerance `abs_tol` (or to the roundoff
/// level `100 ε ∫|f|`, whichever is larger); `f` may carry an integrable
/// singularity at either endpoint.
pub fn integrate<F>(f: F, a: f64, b: f64, abs_tol: f64) -> Result<NumericResult, NumError>
where
    F: Fn(f64) -> f64,
{
    Quadrature::new(abs_tol).run_clustered(f, a, b)
}
