//! Number formatting shared by the text renderers.

use num_complex::Complex64;

use crate::tolerance::DISPLAY_ZERO;

/// Snap roundoff noise to zero and drop negative zero.
pub fn clean(x: f64) -> f64 {
    if x.abs() < DISPLAY_ZERO {
        0.0
    } else {
        x
    }
}

pub fn clean_complex(z: Complex64) -> Complex64 {
    Complex64::new(clean(z.re), clean(z.im))
}

/// Shortest decimal for `x` after rounding to 12 significant digits, so that
/// 0.49999999999999994 prints as 0.5.
pub fn format_real(x: f64) -> String {
    let x = clean(x);
    if x == 0.0 {
        return "0".to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    format!("{rounded}")
}

/// Render a complex number as `a+bj`, with the imaginary unit spelled `j`.
///
/// Zero parts are omitted and a unit imaginary coefficient prints as `j` or
/// `-j`: `0`, `1`, `-j`, `0.5-0.5j`, `0.57735026919j`.
pub fn format_complex(z: Complex64) -> String {
    let re = clean(z.re);
    let im = clean(z.im);
    let imag = |v: f64| -> String {
        let s = format_real(v);
        match s.as_str() {
            "1" => "j".to_string(),
            "-1" => "-j".to_string(),
            _ => format!("{s}j"),
        }
    };
    match (re == 0.0, im == 0.0) {
        (true, true) => "0".to_string(),
        (false, true) => format_real(re),
        (true, false) => imag(im),
        (false, false) => {
            let i = imag(im);
            if i.starts_with('-') {
                format!("{}{}", format_real(re), i)
            } else {
                format!("{}+{}", format_real(re), i)
            }
        }
    }
}
