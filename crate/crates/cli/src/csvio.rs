//! Numeric formatting for emitted files: every floating value is printed
//! with twelve significant digits, fixed notation where it fits and
//! scientific otherwise, trailing zeros trimmed.

pub const SIG_DIGITS: usize = 12;

/// `%.12g`-style rendering of a float.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an e");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if exp >= -4 && exp < SIG_DIGITS as i32 {
        let decimals = (SIG_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    } else {
        format!("{}e{}", trim_zeros(mantissa), exp)
    }
}

fn trim_zeros(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// Optional-float cell: empty when absent.
pub fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_sig).unwrap_or_default()
}
