//! Exact arithmetic helpers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational used for every core quantity.
pub type Rational = Ratio<i128>;

/// Largest total frequency (common denominator) a distribution may carry.
///
/// Keeps every intermediate of the form `x / (2 (N-1) F^2)` well inside
/// `i128` for `N <= 120`.
pub const MAX_TOTAL: u64 = 1 << 24;

pub fn ratio(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}

pub fn int(v: i128) -> Rational {
    Rational::from_integer(v)
}

pub fn to_f64(r: &Rational) -> f64 {
    // i128 -> f64 loses precision only far beyond the magnitudes used here.
    *r.numer() as f64 / *r.denom() as f64
}

pub fn big_to_f64(r: &BigRational) -> f64 {
    let (n, d) = (r.numer(), r.denom());
    match (n.to_f64(), d.to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() => a / b,
        _ => {
            // Scale both down until they fit.
            let shift = d.bits().max(n.bits()).saturating_sub(1000);
            let a = (n >> shift).to_f64().unwrap_or(0.0);
            let b = (d >> shift).to_f64().unwrap_or(1.0);
            a / b
        }
    }
}

pub fn to_big(r: &Rational) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// `k!` as an exact big integer.
pub fn factorial(k: usize) -> BigUint {
    (1..=k as u64).fold(BigUint::one(), |acc, x| acc * x)
}

/// `k!` when it fits in a `u64`.
pub fn factorial_u64(k: usize) -> Option<u64> {
    (1..=k as u64).try_fold(1u64, |acc, x| acc.checked_mul(x))
}

/// Least common multiple of the denominators of `values`, if it fits in `u64`.
pub fn common_denominator(values: &[Rational]) -> Option<u64> {
    values.iter().try_fold(1u64, |acc, r| {
        let d = u64::try_from(*r.denom()).ok()?;
        let g = acc.gcd(&d);
        (acc / g).checked_mul(d)
    })
}

pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}

pub fn sum<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    values.into_iter().fold(Rational::zero(), |acc, v| acc + v)
}

/// Round half away from zero to `decimals` places and format without
/// trailing zeros (`0.60 -> "0.6"`, `1.00 -> "1"`).
pub fn format_fixed(r: &Rational, decimals: u32) -> String {
    format_fixed_big(&to_big(r), decimals)
}

pub fn format_fixed_big(r: &BigRational, decimals: u32) -> String {
    let scale = BigInt::from(10u32).pow(decimals);
    let scaled = r * BigRational::from_integer(scale);
    render_scaled(&round_half_away(&scaled), decimals)
}

/// Round half away from zero to `digits` significant digits, formatted
/// like [`format_fixed`] (`1/30 -> "0.033"`, `1/60 -> "0.017"`).
pub fn format_significant(r: &Rational, digits: u32) -> String {
    format_significant_big(&to_big(r), digits)
}

pub fn format_significant_big(r: &BigRational, digits: u32) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let digits = digits.max(1) as i64;
    let abs = r.abs();
    // Find e with 10^e <= |r| < 10^(e+1).
    let ten = BigRational::from_integer(BigInt::from(10));
    let mut e: i64 = 0;
    let mut probe = BigRational::one();
    if abs >= probe {
        while abs >= &probe * &ten {
            probe *= &ten;
            e += 1;
        }
    } else {
        while abs < probe {
            probe /= &ten;
            e -= 1;
        }
    }
    let decimals = digits - 1 - e;
    if decimals >= 0 {
        return format_fixed_big(r, decimals as u32);
    }
    // More integer digits than requested: round the integer itself.
    let unit = BigInt::from(10u32).pow((-decimals) as u32);
    let q = round_half_away(&(r / BigRational::from_integer(unit.clone())));
    (q * unit).to_string()
}

fn round_half_away(x: &BigRational) -> BigInt {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    if x.is_negative() {
        -((-x.clone()) + half).floor().to_integer()
    } else {
        (x.clone() + half).floor().to_integer()
    }
}

fn render_scaled(scaled: &BigInt, decimals: u32) -> String {
    let neg = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let d = decimals as usize;
    let (int_part, frac_part) = if digits.len() > d {
        let (a, b) = digits.split_at(digits.len() - d);
        (a.to_string(), b.to_string())
    } else {
        ("0".to_string(), format!("{:0>width$}", digits, width = d))
    };
    let frac = frac_part.trim_end_matches('0');
    let body = if frac.is_empty() {
        int_part
    } else {
        format!("{int_part}.{frac}")
    };
    if neg && body != "0" {
        format!("-{body}")
    } else {
        body
    }
}
