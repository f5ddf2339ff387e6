//! High-precision decimal approximations with rigorous error bounds.

use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// π truncated to 64 fractional digits. The truncation error is below `10^-65`.
pub const PI_LITERAL: &str =
    "3.1415926535897932384626433832795028841971693993751058209749445923";

/// `10^e` as a big integer.
pub fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u8), e as usize)
}

/// Parse a plain decimal literal such as `-1.644934` into an exact rational.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mut digits = String::with_capacity(int_part.len() + frac_part.len());
    digits.push_str(int_part);
    digits.push_str(frac_part);
    let mag = BigInt::parse_bytes(digits.as_bytes(), 10)?;
    let mag = if neg { -mag } else { mag };
    Some(BigRational::new(mag, pow10(frac_part.len() as u32)))
}

/// The built-in rational approximation of π.
#[derive(Debug, Clone)]
pub struct PiApprox {
    value: BigRational,
}

/// [`PI_LITERAL`] as an exact rational.
pub fn pi_approx() -> PiApprox {
    PiApprox {
        value: parse_decimal(PI_LITERAL).expect("PI_LITERAL is a valid decimal"),
    }
}

impl PiApprox {
    pub fn value(&self) -> &BigRational {
        &self.value
    }

    /// `coeff·π^power`, with a bound covering the truncation of π.
    pub fn monomial(&self, coeff: &BigRational, power: i32) -> DecimalApprox {
        if coeff.is_zero() {
            return DecimalApprox::exact(BigRational::zero());
        }
        let pw = num_traits::pow::pow(self.value.clone(), power.unsigned_abs() as usize);
        let value = if power < 0 { coeff / pw } else { coeff * pw };
        // |π^p - lit^p| <= |p|·ε·|lit^p|·(1 + O(|p|ε)), ε < 10^-65 / 3
        let rel = BigRational::new(BigInt::from(power.unsigned_abs()) + 1u8, pow10(64));
        let bound = value.abs() * rel;
        DecimalApprox::new(value, bound)
    }
}

/// A decimal value together with a bound on its distance from the true quantity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecimalApprox {
    value: BigRational,
    error_bound: BigRational,
}

impl DecimalApprox {
    pub fn new(value: BigRational, error_bound: BigRational) -> Self {
        Self {
            value,
            error_bound: error_bound.abs(),
        }
    }

    pub fn exact(value: BigRational) -> Self {
        Self::new(value, BigRational::zero())
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn error_bound(&self) -> &BigRational {
        &self.error_bound
    }

    pub fn lower(&self) -> BigRational {
        &self.value - &self.error_bound
    }

    pub fn upper(&self) -> BigRational {
        &self.value + &self.error_bound
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            &self.value + &other.value,
            &self.error_bound + &other.error_bound,
        )
    }

    /// Whether `x` lies inside `value ± error_bound`.
    pub fn contains(&self, x: &BigRational) -> bool {
        (&self.value - x).abs() <= self.error_bound
    }

    /// Whether the two enclosures intersect.
    pub fn overlaps(&self, other: &Self) -> bool {
        (&self.value - &other.value).abs() <= &self.error_bound + &other.error_bound
    }

    /// Whether the whole enclosure lies within `center ± tol`.
    pub fn within(&self, center: &BigRational, tol: &BigRational) -> bool {
        (&self.value - center).abs() + &self.error_bound <= *tol
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN)
    }

    /// Positional rendering with `digits` significant digits.
    pub fn render_sig(&self, digits: u32) -> String {
        render_sig(&self.value, digits)
    }

    /// Positional rendering with `frac` digits after the point.
    pub fn render_fixed(&self, frac: u32) -> String {
        render_fixed(&self.value, frac)
    }
}

impl fmt::Display for DecimalApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ± {}",
            render_sig(&self.value, 16),
            render_sci(&self.error_bound, 2)
        )
    }
}

/// Round a non-negative rational to the nearest integer, ties to even.
fn round_half_even(x: &BigRational) -> BigInt {
    let (q, r) = x.numer().div_rem(x.denom());
    let twice = r * 2u8;
    match twice.cmp(x.denom()) {
        core::cmp::Ordering::Less => q,
        core::cmp::Ordering::Greater => q + 1u8,
        core::cmp::Ordering::Equal => {
            if q.is_even() {
                q
            } else {
                q + 1u8
            }
        }
    }
}

/// Exponent `e` with `10^e <= a < 10^(e+1)` for positive `a`.
fn decimal_exponent(a: &BigRational) -> i64 {
    let bits = a.numer().bits() as i64 - a.denom().bits() as i64;
    let mut e = bits * 30_103 / 100_000;
    let ten_pow = |e: i64| {
        if e >= 0 {
            BigRational::from_integer(pow10(e as u32))
        } else {
            BigRational::new(BigInt::one(), pow10((-e) as u32))
        }
    };
    while *a < ten_pow(e) {
        e -= 1;
    }
    while *a >= ten_pow(e + 1) {
        e += 1;
    }
    e
}

fn scale_by_pow10(a: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        a * BigRational::from_integer(pow10(e as u32))
    } else {
        a / BigRational::from_integer(pow10((-e) as u32))
    }
}

/// Mantissa digits and decimal exponent of `|x|` rounded to `digits` significant digits.
fn significant(x: &BigRational, digits: u32) -> (String, i64) {
    let digits = digits.max(1);
    let a = x.abs();
    let mut e = decimal_exponent(&a);
    let mut m = round_half_even(&scale_by_pow10(&a, digits as i64 - 1 - e));
    if m == pow10(digits) {
        m = pow10(digits - 1);
        e += 1;
    }
    (m.to_string(), e)
}

fn sign_prefix(x: &BigRational) -> &'static str {
    if x.is_negative() {
        "-"
    } else {
        ""
    }
}

/// Positional decimal with `digits` significant digits, rounding half to even.
pub fn render_sig(x: &BigRational, digits: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let (m, e) = significant(x, digits);
    let d = m.len() as i64;
    let mut out = String::from(sign_prefix(x));
    if e >= d - 1 {
        out.push_str(&m);
        out.extend(core::iter::repeat_n('0', (e - d + 1) as usize));
    } else if e >= 0 {
        let split = (e + 1) as usize;
        out.push_str(&m[..split]);
        out.push('.');
        out.push_str(&m[split..]);
    } else {
        out.push_str("0.");
        out.extend(core::iter::repeat_n('0', (-e - 1) as usize));
        out.push_str(&m);
    }
    out
}

/// Scientific notation such as `2.3e-16`, rounding half to even.
pub fn render_sci(x: &BigRational, digits: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let (m, e) = significant(x, digits);
    let mut out = String::from(sign_prefix(x));
    out.push_str(&m[..1]);
    if m.len() > 1 {
        out.push('.');
        out.push_str(&m[1..]);
    }
    out.push('e');
    out.push_str(&e.to_string());
    out
}

/// Positional decimal with exactly `frac` digits after the point, rounding half to even.
pub fn render_fixed(x: &BigRational, frac: u32) -> String {
    let m = round_half_even(&(x.abs() * BigRational::from_integer(pow10(frac))));
    let neg = x.is_negative() && !m.is_zero();
    let mut s = m.to_string();
    if frac > 0 {
        let width = frac as usize + 1;
        if s.len() < width {
            let pad: String = core::iter::repeat_n('0', width - s.len()).collect();
            s = pad + &s;
        }
        s.insert(s.len() - frac as usize, '.');
    }
    if neg {
        s.insert(0, '-');
    }
    s
}
