//! Integers, rationals, and exact values of the form `q·π^p`.
//!
//! [`BigRational`] is `num_rational::BigRational`: it is normalized after every
//! constructor and arithmetic operation, keeps a strictly positive denominator, and
//! represents zero as `0/1`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, Neg};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::decimal::{pi_approx, DecimalApprox};
use crate::error::{Error, Result};

/// Normalized fraction `n/d`. The sign is carried by the numerator.
pub fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<BigRational> {
    let d = d.into();
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(BigRational::new(n.into(), d))
}

/// Integer as a rational.
pub fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `m!`
pub fn factorial(m: u32) -> BigInt {
    (2..=m).fold(BigInt::one(), |acc, i| acc * i)
}

/// `a!/b!` as the product `(b+1)(b+2)…a`.
pub fn falling_ratio(a: u32, b: u32) -> Result<BigInt> {
    if a < b {
        return Err(Error::Domain("falling_ratio requires a >= b"));
    }
    Ok((b + 1..=a).fold(BigInt::one(), |acc, i| acc * i))
}

/// `(-1)^e` as an `i32`.
pub(crate) fn sign_pow(e: u32) -> i32 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `2^e` as a rational, for any integer exponent.
pub(crate) fn pow2(e: i32) -> BigRational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        int(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// An exact value `coeff·π^power`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiMonomial {
    coeff: BigRational,
    power: i32,
}

impl PiMonomial {
    pub fn new(coeff: BigRational, power: i32) -> Self {
        // canonical zero has no pi power
        let power = if coeff.is_zero() { 0 } else { power };
        Self { coeff, power }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), 0)
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn power(&self) -> i32 {
        self.power
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Sum of two monomials with the same power of π.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.power != other.power {
            return Err(Error::IncompatiblePiPowers(self.power, other.power));
        }
        Ok(Self::new(&self.coeff + &other.coeff, self.power))
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::new(&self.coeff * factor, self.power)
    }

    /// Decimal value using the built-in π approximation.
    pub fn to_decimal(&self) -> DecimalApprox {
        pi_approx().monomial(&self.coeff, self.power)
    }
}

impl Mul for &PiMonomial {
    type Output = PiMonomial;

    fn mul(self, rhs: &PiMonomial) -> PiMonomial {
        PiMonomial::new(&self.coeff * &rhs.coeff, self.power + rhs.power)
    }
}

impl Mul for PiMonomial {
    type Output = PiMonomial;

    fn mul(self, rhs: PiMonomial) -> PiMonomial {
        &self * &rhs
    }
}

impl Neg for PiMonomial {
    type Output = PiMonomial;

    fn neg(self) -> PiMonomial {
        PiMonomial::new(-self.coeff, self.power)
    }
}

impl fmt::Display for PiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.power {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "({})·π", self.coeff),
            p => write!(f, "({})·π^{}", self.coeff, p),
        }
    }
}

/// A finite sum of [`PiMonomial`]s with distinct powers. Zero terms are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PiSum {
    terms: BTreeMap<i32, BigRational>,
}

impl PiSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_monomial(&mut self, m: &PiMonomial) {
        if m.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.power).or_insert_with(BigRational::zero);
        *slot += &m.coeff;
        if slot.is_zero() {
            self.terms.remove(&m.power);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for m in other.monomials() {
            out.add_monomial(&m);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.mul_monomial(&PiMonomial::new(int(-1), 0)))
    }

    pub fn mul_monomial(&self, m: &PiMonomial) -> Self {
        self.monomials().map(|t| &t * m).collect()
    }

    /// Monomials in increasing power of π.
    pub fn monomials(&self) -> impl Iterator<Item = PiMonomial> + '_ {
        self.terms
            .iter()
            .map(|(p, c)| PiMonomial::new(c.clone(), *p))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_decimal(&self) -> DecimalApprox {
        let pi = pi_approx();
        self.monomials()
            .map(|m| pi.monomial(m.coeff(), m.power()))
            .fold(DecimalApprox::exact(BigRational::zero()), |acc, d| acc.add(&d))
    }

    /// The sum as a single monomial, when it has at most one term.
    pub fn as_monomial(&self) -> Option<PiMonomial> {
        match self.terms.len() {
            0 => Some(PiMonomial::zero()),
            1 => self.monomials().next(),
            _ => None,
        }
    }
}

impl FromIterator<PiMonomial> for PiSum {
    fn from_iter<I: IntoIterator<Item = PiMonomial>>(iter: I) -> Self {
        let mut out = PiSum::zero();
        for m in iter {
            out.add_monomial(&m);
        }
        out
    }
}

impl fmt::Display for PiSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<_> = self.monomials().collect();
        for (i, m) in parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}
