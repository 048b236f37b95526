#![allow(dead_code)]
//! Reference implementations that share no code with the library.

use ptrig_core::PParam;

pub fn pp(p: f64) -> PParam {
    PParam::new(p).unwrap()
}

/// `x 2F1(1/p, 1/p; 1 + 1/p; sign x^p)`, i.e. `arcsin_p` (sign = +1) or
/// `arcsinh_p` (sign = -1), by direct summation. Converges for `x^p < 1`;
/// accurate to ~1e-15 for `x^p <= 0.6`.
pub fn hyp_arc(x: f64, p: f64, sign: f64) -> f64 {
    x * (1.0 + hyp_tail(x, p, sign))
}

/// `2F1(1/p, 1/p; 1 + 1/p; sign x^p) - 1`, summed without the leading 1.
pub fn hyp_tail(x: f64, p: f64, sign: f64) -> f64 {
    let z = sign * x.powf(p);
    let a = 1.0 / p;
    let c = 1.0 + a;
    let mut term = 1.0;
    let mut sum = 0.0;
    for k in 0..10_000 {
        let k = k as f64;
        term *= (a + k) * (a + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// Bisection inverse of an increasing function on `[lo, hi]`.
pub fn bisect(f: impl Fn(f64) -> f64, y: f64, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `sin_p` on `[0, arcsin_p(0.8)]` from the series.
pub fn sin_p_ref(x: f64, p: f64) -> f64 {
    bisect(|s| hyp_arc(s, p, 1.0), x, 0.0, x.min(1.0))
}

/// `sinh_p` for arguments with `sinh_p x <= 0.8`.
pub fn sinh_p_ref(x: f64, p: f64) -> f64 {
    bisect(|s| hyp_arc(s, p, -1.0), x, x, 2.0 * x)
}

/// `2π / (p sin(π/p))`.
pub fn pi_p_ref(p: f64) -> f64 {
    2.0 * std::f64::consts::PI / (p * (std::f64::consts::PI / p).sin())
}

/// Uniform grid of `n` points strictly inside `(a, b)`.
pub fn open_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    (1..=n).map(|i| a + (b - a) * i as f64 / (n + 1) as f64).collect()
}

/// Uniform grid of `n` points on `[a, b]`.
pub fn closed_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| {
            if i == n - 1 {
                b
            } else {
                a + (b - a) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}
