//! Scalar policies and exact/approximate real values.
//!
//! Matrix assembly and eigensolves run either over exact rationals or over
//! MPFR floats at a requested decimal precision. `ScalarPolicy` selects the
//! arithmetic; `Real` carries an input value (box radius, field strength)
//! that may be known exactly or only to finite precision.

use std::fmt;

use rug::float::Round;
use rug::ops::CompleteRound;
use rug::{Float, Rational};

use crate::error::Error;

pub const LOG2_10: f64 = 3.321928094887362;

/// Arithmetic used for matrix entries and solves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarPolicy {
    /// Exact rational arithmetic (polynomial basis with rational radius only).
    ExactRational,
    /// MPFR floats carrying at least this many significant decimal digits.
    Decimal(u32),
    /// IEEE-double-equivalent precision (53 bits).
    DoubleFloat,
}

impl ScalarPolicy {
    /// Decimal precision with validation (`digits >= 15`).
    pub fn decimal(digits: u32) -> Result<Self, Error> {
        if digits < 15 {
            return Err(Error::InvalidInput(format!(
                "decimal policy needs at least 15 digits, got {digits}"
            )));
        }
        Ok(ScalarPolicy::Decimal(digits))
    }

    /// Nominal significant decimal digits delivered by this policy.
    pub fn digits(&self) -> u32 {
        match self {
            ScalarPolicy::ExactRational => 30, // digits used once a solve forces rounding
            ScalarPolicy::Decimal(d) => *d,
            ScalarPolicy::DoubleFloat => 15,
        }
    }

    /// Nominal mantissa bits (no guard digits).
    pub fn nominal_bits(&self) -> u32 {
        match self {
            ScalarPolicy::DoubleFloat => 53,
            _ => (self.digits() as f64 * LOG2_10).ceil() as u32 + 1,
        }
    }

    /// Working mantissa bits, with guard bits over the nominal precision.
    pub fn work_bits(&self) -> u32 {
        self.nominal_bits() + 32
    }

    /// Relative rounding unit of the nominal precision, as a float.
    pub fn epsilon(&self) -> Float {
        let mut e = Float::with_val(64, 1u32);
        e >>= self.nominal_bits() - 1;
        e
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ScalarPolicy::ExactRational)
    }
}

impl fmt::Display for ScalarPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarPolicy::ExactRational => write!(f, "exact"),
            ScalarPolicy::Decimal(d) => write!(f, "decimal({d})"),
            ScalarPolicy::DoubleFloat => write!(f, "double"),
        }
    }
}

/// A real input value, either exact (rational) or approximate (float).
///
/// Exactness matters: the polynomial-basis Gram matrices are assembled in
/// rational arithmetic whenever the radius is exact, which keeps every
/// rounding error out of the assembly stage.
#[derive(Debug, Clone)]
pub enum Real {
    Exact(Rational),
    Approx(Float),
}

impl Real {
    /// Parse a plain decimal string (`"0.05"`, `"-3"`, `"1.2e-3"`) exactly.
    pub fn parse(s: &str) -> Result<Self, Error> {
        parse_decimal_rational(s).map(Real::Exact)
    }

    pub fn from_int(v: i64) -> Self {
        Real::Exact(Rational::from(v))
    }

    /// Exact conversion: every f64 is a binary rational.
    pub fn from_f64(v: f64) -> Result<Self, Error> {
        if !v.is_finite() {
            return Err(Error::InvalidInput(format!("non-finite value {v}")));
        }
        Ok(Real::Exact(Rational::from_f64(v).expect("finite f64")))
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Real::Exact(r) => Some(r),
            Real::Approx(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Real::Exact(_))
    }

    pub fn to_float(&self, prec: u32) -> Float {
        match self {
            Real::Exact(r) => Float::with_val(prec, r),
            Real::Approx(f) => Float::with_val(prec, f),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Real::Exact(r) => r.to_f64(),
            Real::Approx(f) => f.to_f64(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Real::Exact(r) => r.cmp0() == std::cmp::Ordering::Greater,
            Real::Approx(f) => f.is_sign_positive() && !f.is_zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Real::Exact(r) => r.cmp0() == std::cmp::Ordering::Equal,
            Real::Approx(f) => f.is_zero(),
        }
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Exact(r) => match exact_decimal_string(r) {
                Some(s) => f.write_str(&s),
                None => write!(f, "{}", format_sig(&Float::with_val(128, r), 17)),
            },
            Real::Approx(x) => write!(f, "{}", format_sig(x, 17)),
        }
    }
}

/// Minimal decimal form of a rational whose denominator is 2^a 5^b.
fn exact_decimal_string(r: &Rational) -> Option<String> {
    use rug::Integer;
    if r.denom() == &1 {
        return Some(r.numer().to_string());
    }
    let mut d = r.denom().clone();
    let mut twos = 0u32;
    while d.is_even() {
        d >>= 1;
        twos += 1;
    }
    let mut fives = 0u32;
    while d.clone() % Integer::from(5) == 0 {
        d /= Integer::from(5);
        fives += 1;
    }
    if d != 1 {
        return None;
    }
    let k = twos.max(fives);
    let mut scaled = Rational::from(r.abs_ref());
    for _ in 0..k {
        scaled *= Rational::from(10);
    }
    debug_assert_eq!(scaled.denom(), &Integer::from(1));
    let digits = scaled.numer().to_string();
    let sign = if r.cmp0() == std::cmp::Ordering::Less { "-" } else { "" };
    let k = k as usize;
    let s = if digits.len() > k {
        format!("{}{}.{}", sign, &digits[..digits.len() - k], &digits[digits.len() - k..])
    } else {
        format!("{}0.{}{}", sign, "0".repeat(k - digits.len()), digits)
    };
    Some(s.trim_end_matches('0').trim_end_matches('.').to_string())
}

/// Parse a decimal literal into an exact rational.
pub fn parse_decimal_rational(s: &str) -> Result<Rational, Error> {
    let t = s.trim();
    let bad = || Error::InvalidInput(format!("not a decimal number: {s:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    let (mant, exp) = match t.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = t[pos + 1..].parse().map_err(|_| bad())?;
            (&t[..pos], e)
        }
        None => (t, 0i64),
    };
    let (sign, digits) = match mant.strip_prefix('-') {
        Some(rest) => (-1i32, rest),
        None => (1i32, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int_part, frac_part) = match digits.find('.') {
        Some(pos) => (&digits[..pos], &digits[pos + 1..]),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let joined = format!("{int_part}{frac_part}");
    let numer: rug::Integer = joined.parse().map_err(|_| bad())?;
    let mut r = Rational::from(numer);
    let shift = exp - frac_part.len() as i64;
    let ten = Rational::from(10);
    if shift > 0 {
        for _ in 0..shift {
            r *= &ten;
        }
    } else {
        for _ in 0..(-shift) {
            r /= &ten;
        }
    }
    if sign < 0 {
        r = -r;
    }
    Ok(r)
}

/// Format a float with `sig` significant digits as a plain decimal string
/// (scientific notation only for very small or very large magnitudes).
pub fn format_sig(x: &Float, sig: usize) -> String {
    assert!(sig >= 1);
    if x.is_zero() {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let (neg, digits, exp10) = decimal_parts(x, sig);
    let sign = if neg { "-" } else { "" };
    // exp10 is the position of the decimal point after the first digit:
    // value = 0.digits * 10^exp10
    if exp10 > 13 || exp10 < -4 {
        let mantissa = if digits.len() > 1 {
            format!("{}.{}", &digits[..1], &digits[1..])
        } else {
            digits.clone()
        };
        return format!("{sign}{mantissa}e{}", exp10 - 1);
    }
    if exp10 <= 0 {
        let zeros = "0".repeat((-exp10) as usize);
        return format!("{sign}0.{zeros}{digits}");
    }
    let e = exp10 as usize;
    if e >= digits.len() {
        let zeros = "0".repeat(e - digits.len());
        format!("{sign}{digits}{zeros}")
    } else {
        format!("{sign}{}.{}", &digits[..e], &digits[e..])
    }
}

/// Significant digits and decimal exponent of a float: returns
/// (negative, digit string of length `sig`, exponent with value = 0.digits * 10^exp).
fn decimal_parts(x: &Float, sig: usize) -> (bool, String, i32) {
    let (sign, digits, exp) = x.to_sign_string_exp_round(10, Some(sig), Round::Nearest);
    (sign, digits, exp.unwrap_or(0))
}

/// Parse a decimal string into a float with the given precision.
pub fn float_from_str(s: &str, prec: u32) -> Result<Float, Error> {
    Float::parse(s)
        .map(|p| p.complete(prec))
        .map_err(|_| Error::InvalidInput(format!("not a number: {s:?}")))
}

/// π at the given precision.
pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, rug::float::Constant::Pi)
}

/// `x^k` at the precision of `x`.
pub fn powi(x: &Float, k: u32) -> Float {
    let mut out = Float::with_val(x.prec(), 1u32);
    let mut base = x.clone();
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            out *= &base;
        }
        e >>= 1;
        if e > 0 {
            let sq = base.clone();
            base *= &sq;
        }
    }
    out
}

/// Maximum of two floats by value.
pub fn fmax(a: Float, b: &Float) -> Float {
    if a < *b {
        b.clone()
    } else {
        a
    }
}
