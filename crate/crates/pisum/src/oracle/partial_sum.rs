use num_bigint::BigUint;
use num_traits::{One, Zero};
use pisum_core::decimal::{pow10, DecimalApprox};
use pisum_core::exact::{BigInt, BigRational};

/// Fractional digits kept by the fixed-point accumulator.
const SCALE_DIGITS: u32 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Series {
    /// `ζ(2k) = Σ 1/n^{2k}`, `k >= 1`.
    ZetaEven(u32),
    /// `β(2k+1) = Σ (-1)^{n-1}/(2n-1)^{2k+1}`.
    BetaOdd(u32),
    /// `Σ (-1)^n/(2n)^{2l+2}`.
    AltEven(u32),
}

impl Series {
    /// `(base, exponent, negative)` of the `n`-th term `±1/base^exponent`.
    fn term(self, n: u64) -> (u64, u32, bool) {
        match self {
            Series::ZetaEven(k) => (n, 2 * k, false),
            Series::BetaOdd(k) => (2 * n - 1, 2 * k + 1, n.is_multiple_of(2)),
            Series::AltEven(l) => (2 * n, 2 * l + 2, n % 2 == 1),
        }
    }

    /// Bound on `|true value − sum of the first n terms|`.
    fn tail_bound(self, n: u64) -> BigRational {
        let inv_pow = |base: u64, e: u32| {
            BigRational::new(BigInt::one(), BigInt::from(base).pow(e))
        };
        match self {
            // integral test: Σ_{m>n} m^{-s} <= ∫_n^∞ x^{-s} dx = n^{1-s}/(s-1)
            Series::ZetaEven(k) => inv_pow(n, 2 * k - 1) / BigRational::from_integer((2 * k - 1).into()),
            // alternating with decreasing magnitudes: first omitted term
            Series::BetaOdd(k) => inv_pow(2 * n + 1, 2 * k + 1),
            Series::AltEven(l) => inv_pow(2 * n + 2, 2 * l + 2),
        }
    }
}

/// Sum of the first `terms` terms in 60-digit fixed point.
///
/// The error bound covers the truncated tail plus one unit in the last place per
/// accumulated term.
///
/// # Panics
///
/// If `terms == 0`, or for `ZetaEven(0)` (divergent).
pub fn partial_sum(series: Series, terms: u64) -> DecimalApprox {
    assert!(terms >= 1, "partial_sum needs at least one term");
    assert!(series != Series::ZetaEven(0), "Σ 1/n^0 diverges");
    let scale = pow10(SCALE_DIGITS).magnitude().clone();
    let mut pos = BigUint::zero();
    let mut neg = BigUint::zero();
    for n in 1..=terms {
        let (base, exp, negative) = series.term(n);
        let t = match base.checked_pow(exp) {
            Some(d) => &scale / d,
            None => &scale / BigUint::from(base).pow(exp),
        };
        if negative {
            neg += t;
        } else {
            pos += t;
        }
    }
    let fixed = BigInt::from(pos) - BigInt::from(neg);
    let denom = pow10(SCALE_DIGITS);
    let value = BigRational::new(fixed, denom.clone());
    let rounding = BigRational::new(BigInt::from(terms), denom);
    DecimalApprox::new(value, series.tail_bound(terms) + rounding)
}
