//! Closed-form Fourier coefficients of the two piecewise power functions.
//!
//! * `f_k` has period 2, equals `x^{2k}` on `[0, 1)` and vanishes on `[-1, 0]`.
//!   Its cosine coefficients are `a_n = ∫₀¹ x^{2k} cos(nπx) dx`.
//! * `g_k` has period 2π, equals `x^{2k}` on `(-π, 0)` and vanishes on `(0, π)`.
//!   Its coefficients are `a_n = (1/π)∫_{-π}^0 x^{2k} cos(nx) dx` and
//!   `b_n = (1/π)∫_{-π}^0 x^{2k} sin(nx) dx`.
//!
//! Repeated integration by parts turns each coefficient into a finite sum of terms
//! `c·(-1)^n·π^p / n^e`, which is what a [`FourierCoeff`] stores.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use alloc::string::ToString;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::decimal::DecimalApprox;
use crate::error::{Error, Result};
use crate::exact::{factorial, falling_ratio, int, sign_pow, PiMonomial, PiSum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Cosine coefficients of `f_k`.
    FkCos,
    /// Cosine coefficients of `g_k`.
    GkCos,
    /// Sine coefficients of `g_k`.
    GkSin,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::FkCos, Family::GkCos, Family::GkSin];

    pub fn name(self) -> &'static str {
        match self {
            Family::FkCos => "fk-cos",
            Family::GkCos => "gk-cos",
            Family::GkSin => "gk-sin",
        }
    }

    /// Smallest admissible `k`.
    pub fn min_k(self) -> u32 {
        match self {
            Family::GkSin => 0,
            Family::FkCos | Family::GkCos => 1,
        }
    }

    pub fn coeff(self, k: u32) -> Result<FourierCoeff> {
        match self {
            Family::FkCos => fk_cos_coeff(k),
            Family::GkCos => gk_cos_coeff(k),
            Family::GkSin => Ok(gk_sin_coeff(k)),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fk-cos" => Ok(Family::FkCos),
            "gk-cos" => Ok(Family::GkCos),
            "gk-sin" => Ok(Family::GkSin),
            _ => Err(Error::Domain("unknown coefficient family")),
        }
    }
}

/// One summand `coeff·(-1)^n·π^pi_power / n^n_exponent`; the `(-1)^n` factor is
/// present only when `alternating` is set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FourierTerm {
    pub coeff: BigRational,
    pub alternating: bool,
    pub pi_power: i32,
    pub n_exponent: u32,
}

impl FourierTerm {
    /// Exact value of the term at a concrete `n >= 1`.
    pub fn eval(&self, n: u64) -> PiMonomial {
        let mut c = &self.coeff / BigRational::from_integer(num_traits::pow(BigInt::from(n), self.n_exponent as usize));
        if self.alternating && n % 2 == 1 {
            c = -c;
        }
        PiMonomial::new(c, self.pi_power)
    }

    fn sort_key(&self) -> (u32, i32, bool) {
        (self.n_exponent, self.pi_power, !self.alternating)
    }
}

impl fmt::Display for FourierTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeff = self.coeff.to_string();
        match coeff.strip_prefix('-') {
            Some(mag) => write!(f, "−{mag}")?,
            None => f.write_str(&coeff)?,
        }
        if self.alternating {
            f.write_str("·(−1)^n")?;
        }
        if self.pi_power != 0 {
            write!(f, "·π^{{{}}}", signed_exponent(self.pi_power))?;
        }
        write!(f, "·n^{{{}}}", signed_exponent(-(self.n_exponent as i32)))
    }
}

fn signed_exponent(e: i32) -> alloc::string::String {
    if e < 0 {
        alloc::format!("−{}", -e)
    } else {
        alloc::format!("{e}")
    }
}

/// A Fourier coefficient as a function of `n`, in canonical form.
///
/// Terms are sorted by `(n_exponent, pi_power)`, alternating terms first; terms
/// sharing `(alternating, pi_power, n_exponent)` are merged and zero terms dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FourierCoeff {
    family: Family,
    k: u32,
    terms: Vec<FourierTerm>,
}

/// Exact value of a coefficient at one `n`, plus its decimal rendering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffValue {
    pub exact: PiSum,
    pub decimal: DecimalApprox,
}

impl FourierCoeff {
    pub fn from_terms(family: Family, k: u32, terms: impl IntoIterator<Item = FourierTerm>) -> Self {
        let mut merged: BTreeMap<(u32, i32, bool), FourierTerm> = BTreeMap::new();
        for t in terms {
            merged
                .entry(t.sort_key())
                .and_modify(|m| m.coeff += &t.coeff)
                .or_insert(t);
        }
        let terms = merged.into_values().filter(|t| !t.coeff.is_zero()).collect();
        Self { family, k, terms }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn terms(&self) -> &[FourierTerm] {
        &self.terms
    }

    /// Substitute a concrete `n`.
    pub fn eval(&self, n: u64) -> Result<CoeffValue> {
        if n == 0 {
            return Err(Error::Domain("coefficients are evaluated at n >= 1"));
        }
        let exact: PiSum = self.terms.iter().map(|t| t.eval(n)).collect();
        let decimal = exact.to_decimal();
        Ok(CoeffValue { exact, decimal })
    }
}

impl fmt::Display for FourierCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Free-function form of [`FourierCoeff::eval`].
pub fn eval_coeff(c: &FourierCoeff, n: u64) -> Result<CoeffValue> {
    c.eval(n)
}

fn ratio(a: u32, b: u32) -> BigRational {
    // callers guarantee a >= b
    BigRational::from_integer(falling_ratio(a, b).expect("a >= b"))
}

/// `∫₀¹ x^{2k} cos(nπx) dx = Σ_{l=1..k} (-1)^{l-1} (2k)!/(2k+1-2l)! · (-1)^n / (nπ)^{2l}`.
pub fn fk_cos_coeff(k: u32) -> Result<FourierCoeff> {
    if k == 0 {
        return Err(Error::Domain("fk-cos coefficients need k >= 1"));
    }
    let terms = (1..=k).map(|l| FourierTerm {
        coeff: ratio(2 * k, 2 * k + 1 - 2 * l) * int(sign_pow(l - 1)),
        alternating: true,
        pi_power: -2 * l as i32,
        n_exponent: 2 * l,
    });
    Ok(FourierCoeff::from_terms(Family::FkCos, k, terms))
}

/// `(1/π)∫_{-π}^0 x^{2k} cos(nx) dx = Σ_{l=0..k-1} (-1)^l (2k)!/(2k-2l-1)! · π^{2k-2l-2} (-1)^n / n^{2l+2}`.
pub fn gk_cos_coeff(k: u32) -> Result<FourierCoeff> {
    if k == 0 {
        return Err(Error::Domain("gk-cos coefficients need k >= 1"));
    }
    let terms = (0..k).map(|l| FourierTerm {
        coeff: ratio(2 * k, 2 * k - 2 * l - 1) * int(sign_pow(l)),
        alternating: true,
        pi_power: (2 * k - 2 * l) as i32 - 2,
        n_exponent: 2 * l + 2,
    });
    Ok(FourierCoeff::from_terms(Family::GkCos, k, terms))
}

/// `(1/π)∫_{-π}^0 x^{2k} sin(nx) dx`
/// `= Σ_{l=0..k} (-1)^l (2k)!/(2k-2l)! · π^{2k-2l-1} (-1)^n / n^{2l+1} - (-1)^k (2k)! / (π n^{2k+1})`.
///
/// The last, non-alternating term is kept apart from the `l = k` term: the two
/// cancel at even `n` and double at odd `n`.
pub fn gk_sin_coeff(k: u32) -> FourierCoeff {
    let alternating = (0..=k).map(|l| FourierTerm {
        coeff: ratio(2 * k, 2 * k - 2 * l) * int(sign_pow(l)),
        alternating: true,
        pi_power: (2 * k - 2 * l) as i32 - 1,
        n_exponent: 2 * l + 1,
    });
    let tail = FourierTerm {
        coeff: -BigRational::from_integer(factorial(2 * k)) * int(sign_pow(k)),
        alternating: false,
        pi_power: -1,
        n_exponent: 2 * k + 1,
    };
    FourierCoeff::from_terms(Family::GkSin, k, alternating.chain(core::iter::once(tail)))
}

/// Value of `f_k`'s integration-by-parts recurrence at `n`:
/// `(-1)^n·2k/(nπ)² − 2k(2k−1)/(nπ)² · a_{k−1}(n)`, with `a_0(n) = 0` for `n >= 1`.
pub fn fk_cos_step(k: u32, n: u64, previous: &PiSum) -> PiSum {
    let two_k = 2 * k as i64;
    let n2 = BigInt::from(n) * BigInt::from(n);
    let lead = PiMonomial::new(
        BigRational::new(BigInt::from(two_k * sign_pow_u64(n)), n2.clone()),
        -2,
    );
    let factor = PiMonomial::new(BigRational::new(BigInt::from(two_k * (two_k - 1)), n2), -2);
    let mut out = PiSum::zero();
    out.add_monomial(&lead);
    out.sub(&previous.mul_monomial(&factor))
}

/// `g_k` cosine recurrence: `π^{2k−2}·2k·(-1)^n/n² − 2k(2k−1)/n² · a_{k−1}(n)`.
pub fn gk_cos_step(k: u32, n: u64, previous: &PiSum) -> PiSum {
    let two_k = 2 * k as i64;
    let n2 = BigInt::from(n) * BigInt::from(n);
    let lead = PiMonomial::new(
        BigRational::new(BigInt::from(two_k * sign_pow_u64(n)), n2.clone()),
        2 * k as i32 - 2,
    );
    let factor = PiMonomial::new(BigRational::new(BigInt::from(two_k * (two_k - 1)), n2), 0);
    let mut out = PiSum::zero();
    out.add_monomial(&lead);
    out.sub(&previous.mul_monomial(&factor))
}

/// `g_k` sine recurrence: `π^{2k−1}·(-1)^n/n − 2k(2k−1)/n² · b_{k−1}(n)`.
pub fn gk_sin_step(k: u32, n: u64, previous: &PiSum) -> PiSum {
    let two_k = 2 * k as i64;
    let lead = PiMonomial::new(
        BigRational::new(BigInt::from(sign_pow_u64(n)), BigInt::from(n)),
        2 * k as i32 - 1,
    );
    let n2 = BigInt::from(n) * BigInt::from(n);
    let factor = PiMonomial::new(BigRational::new(BigInt::from(two_k * (two_k - 1)), n2), 0);
    let mut out = PiSum::zero();
    out.add_monomial(&lead);
    out.sub(&previous.mul_monomial(&factor))
}

fn sign_pow_u64(n: u64) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The constant term `a_0` of `f_k`: `∫₀¹ x^{2k} dx = 1/(2k+1)`.
pub fn fk_mean(k: u32) -> BigRational {
    BigRational::new(1.into(), (2 * k + 1).into())
}

/// The constant term `a_0` of `g_k`: `π^{2k}/(2k+1)`.
pub fn gk_mean(k: u32) -> PiMonomial {
    PiMonomial::new(fk_mean(k), 2 * k as i32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn term(c: i64, alternating: bool, pi_power: i32, n_exponent: u32) -> FourierTerm {
        FourierTerm {
            coeff: int(c),
            alternating,
            pi_power,
            n_exponent,
        }
    }

    #[test]
    fn fk_cos_small_k() {
        assert_eq!(fk_cos_coeff(1).unwrap().terms(), &[term(2, true, -2, 2)]);
        assert_eq!(
            fk_cos_coeff(2).unwrap().terms(),
            &[term(4, true, -2, 2), term(-24, true, -4, 4)]
        );
        assert!(fk_cos_coeff(0).is_err());
    }

    #[test]
    fn gk_cos_small_k() {
        assert_eq!(gk_cos_coeff(1).unwrap().terms(), &[term(2, true, 0, 2)]);
        // leading coefficient is (2k)!/(2k-1)! = 4; confirmed by quadrature in the oracle tests
        assert_eq!(
            gk_cos_coeff(2).unwrap().terms(),
            &[term(4, true, 2, 2), term(-24, true, 0, 4)]
        );
        assert!(gk_cos_coeff(0).is_err());
    }

    #[test]
    fn gk_sin_small_k() {
        assert_eq!(
            gk_sin_coeff(0).terms(),
            &[term(1, true, -1, 1), term(-1, false, -1, 1)]
        );
        assert_eq!(
            gk_sin_coeff(1).terms(),
            &[term(1, true, 1, 1), term(-2, true, -1, 3), term(2, false, -1, 3)]
        );
    }

    #[test]
    fn term_counts() {
        for k in 1..=12 {
            assert_eq!(fk_cos_coeff(k).unwrap().terms().len(), k as usize);
            assert_eq!(gk_cos_coeff(k).unwrap().terms().len(), k as usize);
        }
        for k in 0..=12 {
            let c = gk_sin_coeff(k);
            assert_eq!(c.terms().len(), k as usize + 2);
            assert_eq!(c.terms().iter().filter(|t| !t.alternating).count(), 1);
        }
    }

    #[test]
    fn terms_are_canonical() {
        for fam in Family::ALL {
            for k in fam.min_k()..=8 {
                let c = fam.coeff(k).unwrap();
                let keys: Vec<_> = c.terms().iter().map(|t| t.sort_key()).collect();
                assert!(keys.windows(2).all(|w| w[0] < w[1]), "{fam} k={k}");
                assert!(c.terms().iter().all(|t| !t.coeff.is_zero() && t.n_exponent >= 1));
            }
        }
    }

    #[test]
    fn merging_and_dropping() {
        let c = FourierCoeff::from_terms(
            Family::FkCos,
            1,
            [term(3, true, -2, 2), term(-3, true, -2, 2), term(1, false, 0, 1), term(1, false, 0, 1)],
        );
        assert_eq!(c.terms(), &[term(2, false, 0, 1)]);
    }

    #[test]
    fn evaluation_examples() {
        let v = fk_cos_coeff(1).unwrap().eval(1).unwrap();
        assert_eq!(v.exact.as_monomial(), Some(PiMonomial::new(int(-2), -2)));
        assert_eq!(v.decimal.render_sig(10), "-0.2026423673");

        let v = fk_cos_coeff(1).unwrap().eval(2).unwrap();
        assert_eq!(v.exact.as_monomial(), Some(PiMonomial::new(rat(1, 2).unwrap(), -2)));
        assert_eq!(v.decimal.render_sig(9), "0.0506605918");

        let v = gk_cos_coeff(1).unwrap().eval(2).unwrap();
        assert_eq!(v.exact.as_monomial(), Some(PiMonomial::new(rat(1, 2).unwrap(), 0)));

        let v = gk_cos_coeff(1).unwrap().eval(1).unwrap();
        assert_eq!(v.exact.as_monomial(), Some(PiMonomial::new(int(-2), 0)));

        let v = gk_sin_coeff(0).eval(1).unwrap();
        assert_eq!(v.exact.as_monomial(), Some(PiMonomial::new(int(-2), -1)));

        let v = gk_sin_coeff(0).eval(2).unwrap();
        assert!(v.exact.is_zero());

        assert!(gk_sin_coeff(0).eval(0).is_err());
    }

    #[test]
    fn tail_cancels_at_even_n() {
        for k in 0..=6 {
            let c = gk_sin_coeff(k);
            for n in [2u64, 4, 6] {
                let v = c.eval(n).unwrap().exact;
                assert!(v.monomials().all(|m| m.power() != -1), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn recurrences_hold() {
        for n in 1..=8u64 {
            // base cases: a_0 of the non-constant part is empty for cosines; b for k=0 is the seed
            let mut prev = PiSum::zero();
            for k in 1..=8 {
                let direct = fk_cos_coeff(k).unwrap().eval(n).unwrap().exact;
                assert_eq!(direct, fk_cos_step(k, n, &prev), "fk k={k} n={n}");
                prev = direct;
            }
            let mut prev = PiSum::zero();
            for k in 1..=8 {
                let direct = gk_cos_coeff(k).unwrap().eval(n).unwrap().exact;
                assert_eq!(direct, gk_cos_step(k, n, &prev), "gk-cos k={k} n={n}");
                prev = direct;
            }
            let mut prev = gk_sin_coeff(0).eval(n).unwrap().exact;
            for k in 1..=8 {
                let direct = gk_sin_coeff(k).eval(n).unwrap().exact;
                assert_eq!(direct, gk_sin_step(k, n, &prev), "gk-sin k={k} n={n}");
                prev = direct;
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(fk_cos_coeff(1).unwrap().to_string(), "2·(−1)^n·π^{−2}·n^{−2}");
        assert_eq!(
            gk_sin_coeff(0).to_string(),
            "1·(−1)^n·π^{−1}·n^{−1} + −1·π^{−1}·n^{−1}"
        );
        assert_eq!(gk_cos_coeff(1).unwrap().to_string(), "2·(−1)^n·n^{−2}");
    }

    #[test]
    fn means() {
        assert_eq!(fk_mean(1), rat(1, 3).unwrap());
        assert_eq!(gk_mean(2), PiMonomial::new(rat(1, 5).unwrap(), 4));
    }
}
