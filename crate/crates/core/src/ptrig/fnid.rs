use super::circular::{arcsin_p, cos_p, sec_p, sin_p, tan_p};
use super::hyperbolic::{arcsinh_p, cosh_p, sech_p, sinh_p, tanh_p};
use super::param::PParam;
use super::Result;
use std::fmt;
use std::str::FromStr;

/// The ten generalized functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FnId {
    ArcSin,
    Sin,
    Cos,
    Tan,
    Sec,
    ArcSinh,
    Sinh,
    Cosh,
    Tanh,
    Sech,
}

impl FnId {
    pub const ALL: [FnId; 10] = [
        FnId::ArcSin,
        FnId::Sin,
        FnId::Cos,
        FnId::Tan,
        FnId::Sec,
        FnId::ArcSinh,
        FnId::Sinh,
        FnId::Cosh,
        FnId::Tanh,
        FnId::Sech,
    ];

    /// Short name used on the command line, e.g. `sinp`.
    pub fn name(self) -> &'static str {
        match self {
            FnId::ArcSin => "arcsinp",
            FnId::Sin => "sinp",
            FnId::Cos => "cosp",
            FnId::Tan => "tanp",
            FnId::Sec => "secp",
            FnId::ArcSinh => "arcsinhp",
            FnId::Sinh => "sinhp",
            FnId::Cosh => "coshp",
            FnId::Tanh => "tanhp",
            FnId::Sech => "sechp",
        }
    }

    /// Natural domain, as shown in error messages.
    pub fn domain(self) -> &'static str {
        match self {
            FnId::ArcSin => "[-1, 1]",
            FnId::Sin | FnId::Cos => "all finite reals",
            FnId::Tan => "reals except π_p/2 + kπ_p",
            FnId::Sec => "(-π_p/2, π_p/2)",
            FnId::ArcSinh => "all finite reals",
            FnId::Sinh | FnId::Cosh | FnId::Tanh | FnId::Sech => "[-X_max(p), X_max(p)]",
        }
    }

    /// Whether the value comes straight from quadrature (and so carries an
    /// error estimate).
    pub fn is_quadrature(self) -> bool {
        matches!(self, FnId::ArcSin | FnId::ArcSinh)
    }

    pub fn is_odd(self) -> bool {
        !matches!(self, FnId::Cos | FnId::Sec | FnId::Cosh | FnId::Sech)
    }
}

impl fmt::Display for FnId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownFn(pub String);

impl fmt::Display for UnknownFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = FnId::ALL.iter().map(|f| f.name()).collect();
        write!(
            f,
            "unknown function '{}', expected one of {}",
            self.0,
            names.join(", ")
        )
    }
}

impl std::error::Error for UnknownFn {}

impl FromStr for FnId {
    type Err = UnknownFn;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s.chars().filter(|c| *c != '_').collect::<String>().to_lowercase();
        FnId::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| UnknownFn(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: f64,
    /// Present for the quadrature-defined functions.
    pub err_estimate: Option<f64>,
}

/// Evaluates any of the ten functions at `x`.
pub fn evaluate(func: FnId, x: f64, p: &PParam) -> Result<Evaluation> {
    let plain = |v: f64| Evaluation {
        value: v,
        err_estimate: None,
    };
    Ok(match func {
        FnId::ArcSin | FnId::ArcSinh => {
            let r = if func == FnId::ArcSin {
                arcsin_p(x, p)?
            } else {
                arcsinh_p(x, p)?
            };
            Evaluation {
                value: r.value,
                err_estimate: Some(r.err_estimate),
            }
        }
        FnId::Sin => plain(sin_p(x, p)?),
        FnId::Cos => plain(cos_p(x, p)?),
        FnId::Tan => plain(tan_p(x, p)?),
        FnId::Sec => plain(sec_p(x, p)?),
        FnId::Sinh => plain(sinh_p(x, p)?),
        FnId::Cosh => plain(cosh_p(x, p)?),
        FnId::Tanh => plain(tanh_p(x, p)?),
        FnId::Sech => plain(sech_p(x, p)?),
    })
}
