//! Deterministic text rendering: decimal convenience values carry exactly
//! 12 significant digits with ties rounded to even, computed in integer
//! arithmetic so output bytes are identical across platforms and runs.

use cyclemix::exactmath::{Natural, Ratio};
use num_traits::{Signed, Zero};

const SIGNIFICANT_DIGITS: u32 = 12;

fn pow10(k: u32) -> Natural {
    Natural::from(10u32).pow(k)
}

/// Decimal rendering of an exact rational with 12 significant digits,
/// round-half-even. Zero renders as `0`. Values outside `[1e-5, 1e12)` in
/// magnitude switch to scientific notation.
pub fn decimal12(value: &Ratio) -> String {
    if value.is_zero() {
        return "0".to_string();
    }
    let negative = value.is_negative();
    let num = value.numer().magnitude().clone();
    let den = value.denom().magnitude().clone();

    // decimal exponent e with 10^e <= num/den < 10^{e+1}
    let mut exponent = num.to_string().len() as i64 - den.to_string().len() as i64;
    let at_least = |e: i64| -> bool {
        // num/den >= 10^e
        if e >= 0 {
            num >= den.clone() * pow10(e as u32)
        } else {
            num.clone() * pow10((-e) as u32) >= den
        }
    };
    if at_least(exponent + 1) {
        exponent += 1;
    } else if !at_least(exponent) {
        exponent -= 1;
    }
    debug_assert!(at_least(exponent) && !at_least(exponent + 1));

    // 12-digit mantissa of num/den * 10^{11 - e}, rounded half to even
    let shift = SIGNIFICANT_DIGITS as i64 - 1 - exponent;
    let (scaled_num, scaled_den) = if shift >= 0 {
        (num * pow10(shift as u32), den)
    } else {
        (num, den * pow10((-shift) as u32))
    };
    let mut mantissa = &scaled_num / &scaled_den;
    let remainder = scaled_num - &mantissa * &scaled_den;
    let twice = remainder * Natural::from(2u32);
    if twice > scaled_den || (twice == scaled_den && (&mantissa % Natural::from(2u32)) == Natural::from(1u32)) {
        mantissa += Natural::from(1u32);
    }
    if mantissa == pow10(SIGNIFICANT_DIGITS) {
        mantissa = pow10(SIGNIFICANT_DIGITS - 1);
        exponent += 1;
    }

    let digits = mantissa.to_string();
    debug_assert_eq!(digits.len(), SIGNIFICANT_DIGITS as usize);
    let sign = if negative { "-" } else { "" };

    if (-5..SIGNIFICANT_DIGITS as i64).contains(&exponent) {
        if exponent >= 0 {
            let split = exponent as usize + 1;
            if split == digits.len() {
                format!("{sign}{digits}")
            } else {
                format!("{sign}{}.{}", &digits[..split], &digits[split..])
            }
        } else {
            let zeros = "0".repeat((-exponent - 1) as usize);
            format!("{sign}0.{zeros}{digits}")
        }
    } else {
        format!("{sign}{}.{}e{}", &digits[..1], &digits[1..], exponent)
    }
}

/// Same policy applied to the exact binary value of a float.
pub fn decimal12_f64(value: f64) -> String {
    let exact = Ratio::from_float(value).expect("finite float");
    decimal12(&exact)
}

/// One CSV field, quoted only when the content requires it.
pub fn csv_field(content: &str) -> String {
    if content.contains(',') || content.contains('"') || content.contains('\n') {
        format!("\"{}\"", content.replace('"', "\"\""))
    } else {
        content.to_string()
    }
}
