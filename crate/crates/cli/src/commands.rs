use crate::args::{Command, Format, Output};
use crate::format::{number, round_sig};
use ptrig_core::bounds::{self, BoundReport, BoundsError, SharpnessReport, TheoremId};
use ptrig_core::numkit::NumError;
use ptrig_core::ptrig::{arcsin_p, evaluate, Error};
use ptrig_core::{FnId, PParam};
use std::fmt::Write as _;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;
pub const EXIT_CONVERGENCE: u8 = 4;
pub const EXIT_PARTIAL: u8 = 5;
pub const EXIT_VIOLATIONS: u8 = 6;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Param(_) => EXIT_USAGE,
            Error::Domain { .. } | Error::Pole { .. } | Error::Range { .. } => EXIT_DOMAIN,
            Error::Numeric(NumError::Domain { .. }) => EXIT_DOMAIN,
            Error::Numeric(_) => EXIT_CONVERGENCE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<BoundsError> for Failure {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::Eval(e) => e.into(),
            e @ BoundsError::Param { .. } => Failure::usage(format!("{e} (pass --force to explore anyway)")),
            other => Failure::usage(other.to_string()),
        }
    }
}

#[derive(Debug)]
pub struct Outcome {
    pub code: u8,
    pub warnings: Vec<String>,
}

pub fn run(cmd: Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Pi { p, check, output } => pi(p, check, &output),
        Command::Eval { func, p, x, output } => eval(func, p, x, &output),
        Command::Table {
            func,
            p,
            from,
            to,
            n,
            output,
        } => table(func, p, from, to, n, &output),
        Command::Verify {
            theorem,
            p,
            endpoint,
            n,
            force,
            output,
        } => verify(theorem, p, endpoint, n, force, &output),
        Command::Constants {
            theorem,
            p,
            endpoint,
            force,
            sharpness,
            output,
        } => constants(theorem, p, endpoint, force, sharpness, &output),
    }
}

fn param(p: f64) -> Result<PParam, Failure> {
    PParam::new(p).map_err(|e| Failure::usage(e.to_string()))
}

fn emit(output: &Output, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn ok() -> Outcome {
    Outcome {
        code: EXIT_OK,
        warnings: Vec::new(),
    }
}

fn pi(p: f64, check: bool, output: &Output) -> Result<Outcome, Failure> {
    let pp = param(p)?;
    let prec = output.prec as usize;
    let n = |v| number(v, prec);
    let value = pp.pi_p();
    let mut s = String::new();
    let quad = if check {
        Some(2.0 * arcsin_p(1.0, &pp)?.value)
    } else {
        None
    };
    match (output.format.unwrap_or(Format::Text), quad) {
        (Format::Text, None) => writeln!(s, "{}", n(value)),
        (Format::Text, Some(q)) => writeln!(
            s,
            "pi_p {}\nquadrature {}\ndifference {}",
            n(value),
            n(q),
            n(q - value)
        ),
        (Format::Csv, None) => writeln!(s, "p,pi_p\n{},{}", n(p), n(value)),
        (Format::Csv, Some(q)) => writeln!(
            s,
            "p,pi_p,quadrature,difference\n{},{},{},{}",
            n(p),
            n(value),
            n(q),
            n(q - value)
        ),
    }
    .expect("writing to a String");
    emit(output, &s)?;
    Ok(ok())
}

fn eval(func: FnId, p: f64, x: f64, output: &Output) -> Result<Outcome, Failure> {
    let pp = param(p)?;
    let prec = output.prec as usize;
    let n = |v| number(v, prec);
    let e = evaluate(func, x, &pp)?;
    let mut s = String::new();
    match output.format.unwrap_or(Format::Text) {
        Format::Text => {
            writeln!(s, "{}", n(e.value)).unwrap();
            if let Some(err) = e.err_estimate {
                writeln!(s, "err_estimate {}", number(err, 3)).unwrap();
            }
        }
        Format::Csv => {
            let err = e.err_estimate.map(|v| number(v, 3)).unwrap_or_default();
            writeln!(
                s,
                "fn,p,x,value,err_estimate\n{func},{},{},{},{err}",
                n(p),
                n(x),
                n(e.value)
            )
            .unwrap();
        }
    }
    emit(output, &s)?;
    Ok(ok())
}

fn table(func: FnId, p: f64, from: f64, to: f64, n: usize, output: &Output) -> Result<Outcome, Failure> {
    let pp = param(p)?;
    if !(from.is_finite() && to.is_finite() && from < to) {
        return Err(Failure::usage(format!(
            "table needs finite --from < --to, got {from} and {to}"
        )));
    }
    if n < 2 {
        return Err(Failure::usage(format!("table needs --n >= 2, got {n}")));
    }
    let prec = output.prec as usize;
    let sep = match output.format.unwrap_or(Format::Csv) {
        Format::Csv => ",",
        Format::Text => " ",
    };
    let mut s = format!("x{sep}{func}\n");
    let mut warnings = Vec::new();
    for i in 0..n {
        let x = if i == n - 1 {
            to
        } else {
            from + (to - from) * (i as f64 / (n - 1) as f64)
        };
        // Evaluate at the printed abscissa so that the file is self-consistent.
        let x = round_sig(x, prec);
        let v = match evaluate(func, x, &pp) {
            Ok(e) => e.value,
            Err(e) => {
                warnings.push(format!("x = {}: {e}", number(x, prec)));
                f64::NAN
            }
        };
        writeln!(s, "{}{sep}{}", number(x, prec), number(v, prec)).unwrap();
    }
    emit(output, &s)?;
    Ok(Outcome {
        code: if warnings.is_empty() {
            EXIT_OK
        } else {
            EXIT_PARTIAL
        },
        warnings,
    })
}

fn interval(report_end: f64, prec: usize) -> String {
    format!("(0, {})", number(report_end, prec))
}

fn opt(v: Option<f64>, prec: usize) -> String {
    v.map(|v| number(v, prec)).unwrap_or_else(|| "-".into())
}

fn verify(
    theorem: TheoremId,
    p: f64,
    endpoint: Option<f64>,
    n: usize,
    force: bool,
    output: &Output,
) -> Result<Outcome, Failure> {
    let pp = param(p)?;
    let report = bounds::verify(theorem, &pp, endpoint, n, force)?;
    let prec = output.prec as usize;
    let s = match output.format.unwrap_or(Format::Text) {
        Format::Text => verify_text(&report, prec),
        Format::Csv => verify_csv(&report, prec),
    };
    emit(output, &s)?;
    let mut warnings: Vec<String> = report
        .errors
        .iter()
        .map(|e| format!("x = {}: {}", number(e.x, prec), e.message))
        .collect();
    if !report.certifying {
        warnings.push(format!(
            "p = {p} is below the hypothesis p >= {}; this run does not certify the inequality",
            theorem.p_min()
        ));
    }
    let code = if !report.violations.is_empty() {
        EXIT_VIOLATIONS
    } else if !report.errors.is_empty() {
        EXIT_CONVERGENCE
    } else {
        EXIT_OK
    };
    Ok(Outcome { code, warnings })
}

fn verify_text(r: &BoundReport, prec: usize) -> String {
    let n = |v| number(v, prec);
    let mut s = String::new();
    writeln!(s, "theorem {}", r.theorem).unwrap();
    writeln!(s, "p {}", n(r.p)).unwrap();
    writeln!(s, "interval {}", interval(r.right_end, prec)).unwrap();
    match r.theorem {
        TheoremId::C3_7 => {
            writeln!(s, "inequality x/tan_p(x) < exp(-x^p/(p+1)) < tanh_p(x)/x").unwrap();
        }
        t => writeln!(s, "target {}", t.target_name()).unwrap(),
    }
    if let Some(c) = r.constants {
        writeln!(s, "lower_coeff {}", n(c.lower_coeff)).unwrap();
        writeln!(s, "upper_coeff {}", n(c.upper_coeff)).unwrap();
    }
    writeln!(s, "points {}", r.n_points).unwrap();
    writeln!(s, "min_lower_margin {}", n(r.min_lower_margin)).unwrap();
    writeln!(s, "min_upper_margin {}", n(r.min_upper_margin)).unwrap();
    writeln!(s, "violations {}", r.violations.len()).unwrap();
    for v in r.violations.iter().take(10) {
        writeln!(s, "  x {} side {} margin {}", n(v.x), v.side.name(), n(v.margin)).unwrap();
    }
    writeln!(s, "errors {}", r.errors.len()).unwrap();
    if r.constants.is_some() {
        writeln!(
            s,
            "limit_0 empirical {} closed {}",
            opt(r.empirical_limit_0, prec),
            opt(r.closed_limit_0, prec)
        )
        .unwrap();
        writeln!(
            s,
            "limit_end empirical {} closed {}",
            opt(r.empirical_limit_end, prec),
            opt(r.closed_limit_end, prec)
        )
        .unwrap();
    }
    writeln!(s, "certifying {}", if r.certifying { "yes" } else { "no" }).unwrap();
    s
}

fn verify_csv(r: &BoundReport, prec: usize) -> String {
    let n = |v| number(v, prec);
    let mut s = String::from("x,lower,target,upper,lower_margin,upper_margin\n");
    for pt in &r.points {
        writeln!(
            s,
            "{},{},{},{},{},{}",
            n(pt.x),
            n(pt.lower),
            n(pt.target),
            n(pt.upper),
            n(pt.lower_margin),
            n(pt.upper_margin)
        )
        .unwrap();
    }
    s
}

fn constants(
    theorem: TheoremId,
    p: f64,
    endpoint: Option<f64>,
    force: bool,
    sharpness: bool,
    output: &Output,
) -> Result<Outcome, Failure> {
    let pp = param(p)?;
    let c = bounds::constants(theorem, &pp, endpoint, force)?;
    let sharp = if sharpness {
        Some(bounds::sharpness(theorem, &pp, endpoint, force)?)
    } else {
        None
    };
    let prec = output.prec as usize;
    let n = |v| number(v, prec);
    let mut s = String::new();
    match output.format.unwrap_or(Format::Text) {
        Format::Text => {
            writeln!(s, "theorem {}", theorem).unwrap();
            writeln!(s, "p {}", n(p)).unwrap();
            if let Some(e) = endpoint {
                writeln!(s, "endpoint {}", n(e)).unwrap();
            }
            writeln!(s, "lower_coeff {}", n(c.lower_coeff)).unwrap();
            writeln!(s, "upper_coeff {}", n(c.upper_coeff)).unwrap();
            if let Some(sh) = &sharp {
                sharpness_text(&mut s, sh, prec);
            }
        }
        Format::Csv => match &sharp {
            None => {
                writeln!(s, "theorem,p,endpoint,lower_coeff,upper_coeff").unwrap();
                writeln!(
                    s,
                    "{},{},{},{},{}",
                    theorem,
                    n(p),
                    endpoint.map(n).unwrap_or_default(),
                    n(c.lower_coeff),
                    n(c.upper_coeff)
                )
                .unwrap();
            }
            Some(sh) => {
                writeln!(s, "eps,x_0,limit_0,closed_0,x_end,limit_end,closed_end").unwrap();
                for st in &sh.ladder {
                    writeln!(
                        s,
                        "{},{},{},{},{},{},{}",
                        n(st.eps),
                        n(st.x_0),
                        n(st.limit_0),
                        n(sh.closed_0),
                        n(st.x_end),
                        n(st.limit_end),
                        n(sh.closed_end)
                    )
                    .unwrap();
                }
            }
        },
    }
    emit(output, &s)?;
    Ok(ok())
}

fn sharpness_text(s: &mut String, sh: &SharpnessReport, prec: usize) {
    let n = |v| number(v, prec);
    writeln!(s, "closed_0 {}", n(sh.closed_0)).unwrap();
    writeln!(s, "closed_end {}", n(sh.closed_end)).unwrap();
    for (st, (g0, g1)) in sh.ladder.iter().zip(sh.gaps()) {
        writeln!(
            s,
            "eps {} limit_0 {} gap_0 {} limit_end {} gap_end {}",
            n(st.eps),
            n(st.limit_0),
            number(g0, 3),
            n(st.limit_end),
            number(g1, 3)
        )
        .unwrap();
    }
    writeln!(s, "extrapolated_0 {}", n(sh.extrapolated_0)).unwrap();
    writeln!(s, "extrapolated_end {}", n(sh.extrapolated_end)).unwrap();
}
