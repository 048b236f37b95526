//! Locale-independent number formatting.

/// `v` rounded to `prec` significant digits, printed in its shortest
/// round-trip form: plain decimal for moderate magnitudes, `1.5e-7` style
/// otherwise. Negative zero prints as `0`.
pub fn number(v: f64, prec: usize) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.into();
    }
    let r = round_sig(v, prec);
    if r == 0.0 {
        return "0".into();
    }
    let exp = r.abs().log10().floor() as i32;
    if (-5..16).contains(&exp) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

/// The double nearest to `v` rounded to `prec` significant decimal digits.
pub fn round_sig(v: f64, prec: usize) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return v;
    }
    format!("{:.*e}", prec.saturating_sub(1), v)
        .parse()
        .expect("formatted float parses")
}
