use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use pisum_core::decimal::{pi_approx, pow10, render_sci};
use pisum_core::exact::BigRational;

/// Digits that must agree between the built-in literal and [`machin_pi`].
pub const VALIDATED_DIGITS: u32 = 50;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("built-in pi constant disagrees with arctangent computation by {difference}")]
pub struct PiMismatch {
    pub difference: String,
}

/// `⌊scale·arctan(1/x)⌋` (up to a few units) by the alternating Taylor series.
fn arctan_inv(x: u32, scale: &BigInt) -> BigInt {
    let x2 = BigInt::from(x) * x;
    let mut power = scale / x; // scale / x^{2j+1}
    let mut sum = BigInt::zero();
    let mut j: u32 = 0;
    while !power.is_zero() {
        let term = &power / (2 * j + 1);
        if j.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        j += 1;
    }
    sum
}

/// π to `digits` fractional digits via `π = 16·arctan(1/5) − 4·arctan(1/239)`.
pub fn machin_pi(digits: u32) -> BigRational {
    let guard = 10;
    let scale = pow10(digits + guard);
    let fixed = arctan_inv(5, &scale) * 16 - arctan_inv(239, &scale) * 4;
    let truncated = fixed / pow10(guard);
    BigRational::new(truncated, pow10(digits))
}

/// Check the built-in π literal against [`machin_pi`] to [`VALIDATED_DIGITS`] digits.
pub fn validate_pi() -> Result<(), PiMismatch> {
    let reference = machin_pi(VALIDATED_DIGITS + 10);
    let diff = (pi_approx().value() - reference).abs();
    if diff < BigRational::new(1.into(), pow10(VALIDATED_DIGITS)) {
        Ok(())
    } else {
        Err(PiMismatch {
            difference: render_sci(&diff, 3),
        })
    }
}
