//! Fixed-significance number formatting, in the style of C's `%.Ng`.

/// `x` with `digits` significant digits, trailing zeros removed. Exponential
/// notation is used below `1e-5` and from `10^digits` on.
pub fn sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        format!("{}e{}", trim(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp) as usize;
        trim(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Significant digits of human-readable output.
pub const TEXT_DIGITS: usize = 15;
/// Significant digits of CSV output; enough to round-trip an `f64`.
pub const CSV_DIGITS: usize = 17;

pub fn text(x: f64) -> String {
    sig(x, TEXT_DIGITS)
}

pub fn csv(x: f64) -> String {
    sig(x, CSV_DIGITS)
}

pub fn join(values: impl IntoIterator<Item = f64>) -> String {
    values.into_iter().map(text).collect::<Vec<_>>().join(" ")
}
