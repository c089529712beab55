//! Number formatting shared by every command.

/// Formats `v` with 17 significant digits, trailing zeros removed.
///
/// Positional notation is used for `|v|` in `[1e-4, 1e6)`, scientific
/// otherwise. Parsing the output recovers `v` exactly.
pub fn sig17(v: f64) -> String {
    if v == 0.0 {
        return if v.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();

    let abs = v.abs();
    if (1e-4..1e6).contains(&abs) && (-4..6).contains(&exp) {
        let (int, frac) = if exp >= 0 {
            let split = exp as usize + 1;
            (digits[..split].to_string(), digits[split..].to_string())
        } else {
            ("0".to_string(), "0".repeat((-exp - 1) as usize) + &digits)
        };
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    } else {
        let rest = digits[1..].trim_end_matches('0');
        if rest.is_empty() {
            format!("{sign}{}e{exp}", &digits[..1])
        } else {
            format!("{sign}{}.{rest}e{exp}", &digits[..1])
        }
    }
}
