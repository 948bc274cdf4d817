/// Plain-decimal rendering with 15 significant digits, trailing zeros
/// trimmed; falls back to scientific notation for extreme exponents.
pub fn significant15(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.14e}", x);
    let (mant, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("exponent digits");
    if !(-6..=20).contains(&exp) {
        return sci;
    }
    let neg = mant.starts_with('-');
    let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    let point = exp + 1;
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if point <= 0 {
        out.push_str("0.");
        for _ in 0..-point {
            out.push('0');
        }
        out.push_str(&digits);
    } else if point as usize >= digits.len() {
        out.push_str(&digits);
        for _ in 0..(point as usize - digits.len()) {
            out.push('0');
        }
    } else {
        out.push_str(&digits[..point as usize]);
        out.push('.');
        out.push_str(&digits[point as usize..]);
    }
    if out.contains('.') {
        while out.ends_with('0') {
            out.pop();
        }
        if out.ends_with('.') {
            out.pop();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        assert_eq!(significant15(0.5493061443340548), "0.549306144334055");
        assert_eq!(significant15(std::f64::consts::PI), "3.14159265358979");
        assert_eq!(significant15(0.0), "0");
        assert_eq!(significant15(2.5), "2.5");
        assert_eq!(significant15(-0.375), "-0.375");
        assert_eq!(significant15(123456.0), "123456");
        assert_eq!(significant15(1.0e-9), "1.00000000000000e-9");
    }
}
