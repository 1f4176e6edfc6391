//! Significant-digit decimal formatting for stable on-disk numbers.

/// Formats `x` with at most `sig` significant digits, choosing plain
/// decimal or scientific notation the way C's `%g` does. Trailing
/// zeros are trimmed; the output always parses back as `f64`.
pub fn fmt_sig(x: f64, sig: usize) -> String {
    assert!(sig >= 1, "need at least one significant digit");
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }

    // `{:.*e}` gives `d.ddd...e<exp>` with sig-1 fraction digits.
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent in {:e} output");
    let exp: i32 = exp.parse().expect("integer exponent");

    let neg = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let digits = digits.trim_end_matches('0');
    // Rounding can carry all the way to zero mantissa only for x == 0,
    // already handled; an empty trim result means the value was e.g. 1.000.
    let digits = if digits.is_empty() { "0" } else { digits };

    let sign = if neg { "-" } else { "" };
    let body = if exp >= -4 && (exp as i64) < sig as i64 {
        render_plain(digits, exp)
    } else if digits.len() == 1 {
        format!("{digits}e{exp}")
    } else {
        format!("{}.{}e{exp}", &digits[..1], &digits[1..])
    };
    format!("{sign}{body}")
}

/// Plain decimal rendering of `0.digits * 10^(exp+1)` style values,
/// with `digits` already holding the significant digits and `exp` the
/// power of ten of the leading digit.
fn render_plain(digits: &str, exp: i32) -> String {
    if exp < 0 {
        let zeros = "0".repeat((-exp - 1) as usize);
        format!("0.{zeros}{digits}")
    } else {
        let point = exp as usize + 1;
        if digits.len() <= point {
            let zeros = "0".repeat(point - digits.len());
            format!("{digits}{zeros}")
        } else {
            format!("{}.{}", &digits[..point], &digits[point..])
        }
    }
}

/// Rounds to the nearest value representable with 12 significant
/// decimal digits. Idempotent; the identity for values that already
/// fit in 12 digits.
pub fn round_sig12(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    fmt_sig(x, 12).parse().expect("fmt_sig output parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_decimal_forms() {
        assert_eq!(fmt_sig(0.0, 12), "0");
        assert_eq!(fmt_sig(1.0, 12), "1");
        assert_eq!(fmt_sig(-2.5, 12), "-2.5");
        assert_eq!(fmt_sig(10.0, 12), "10");
        assert_eq!(fmt_sig(0.25, 12), "0.25");
        assert_eq!(fmt_sig(0.0001, 12), "0.0001");
        assert_eq!(fmt_sig(1234.5, 12), "1234.5");
    }

    #[test]
    fn scientific_forms() {
        assert_eq!(fmt_sig(1e-5, 12), "1e-5");
        assert_eq!(fmt_sig(3.5e20, 12), "3.5e20");
        assert_eq!(fmt_sig(-7e-9, 12), "-7e-9");
    }

    #[test]
    fn rounds_to_significant_digits() {
        assert_eq!(fmt_sig(1.0 / 3.0, 12), "0.333333333333");
        assert_eq!(fmt_sig(2.0 / 3.0, 3), "0.667");
        assert_eq!(fmt_sig(999.99, 3), "1e3");
        assert_eq!(fmt_sig(999.99, 4), "1000");
    }

    #[test]
    fn round_sig12_idempotent() {
        for &x in &[std::f64::consts::PI, 1.0 / 3.0, 123456.789_f64, -9.87654321e-13] {
            let once = round_sig12(x);
            assert_eq!(round_sig12(once), once);
        }
    }
}
