//! Shared formatting helpers for half-integer exponents.

/// Formats `var^(half/2)` in reduced form: `""`, `q`, `q^-1`, `q^3`, `q^(3/2)`.
pub fn fmt_monomial(var: &str, half: i64) -> String {
    match half {
        0 => String::new(),
        2 => var.to_string(),
        h if h % 2 == 0 => format!("{var}^{}", h / 2),
        h => format!("{var}^({h}/2)"),
    }
}

/// Formats a half-unit count as a rational: `2`, `-1`, `3/2`.
pub fn fmt_half(half: i64) -> String {
    if half % 2 == 0 {
        (half / 2).to_string()
    } else {
        format!("{half}/2")
    }
}

pub(crate) fn push_signed_term(out: &mut String, negative: bool, body: &str) {
    match (out.is_empty(), negative) {
        (true, false) => {}
        (true, true) => out.push('-'),
        (false, false) => out.push_str(" + "),
        (false, true) => out.push_str(" - "),
    }
    out.push_str(body);
}
