//! Forward triangular solvers for `S_k = ζ(2k)/π^{2k}` and `T_k = β(2k+1)/π^{2k+1}`.
//!
//! # Even zeta values
//!
//! The cosine series of `f_k` evaluated at `x = 1` converges to `1/2`. Every cosine
//! coefficient carries `(-1)^n`, which cancels against `cos(nπ) = (-1)^n`, so after
//! swapping the order of summation each inner sum over `n` is `Σ 1/(nπ)^{2l} = S_l`:
//!
//! ```text
//! Σ_{l=1..k} (-1)^{l-1} (2k)!/(2k+1-2l)! · S_l = 1/2 - 1/(4k+2)
//! ```
//!
//! Row `k` involves `S_1..S_k` with diagonal `(-1)^{k-1}(2k)! ≠ 0`.
//!
//! # Odd beta values
//!
//! The Fourier series of `g_k` evaluated at `x = π/2` converges to `0`. Only even-index
//! cosines and odd-index sines survive. Dividing the resulting identity by `π^{2k}`:
//!
//! ```text
//! -1/(4k+2) = Σ_{l<k}  (-1)^l (2k)!/(2k-2l-1)! · A_l
//!           + Σ_{l<=k} (-1)^l (2k)!/(2k-2l)!   · (-T_l)
//!           + (-1)^k (2k)! · (-T_k)
//! ```
//!
//! where `A_l·π^{2l+2} = Σ_n (-1)^n/(2n)^{2l+2}` (see [`alternating_even_coeff`]) and
//! `Σ_n (-1)^n/(2n-1)^{2l+1} = -T_l·π^{2l+1}`. The two `T_k` terms combine into
//! `2(-1)^{k+1}(2k)!·T_k`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, falling_ratio, int, pow2, sign_pow, PiMonomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesKind {
    /// `ζ(2k) = S_k·π^{2k}`, keyed from `k = 1`.
    ZetaEven,
    /// `β(2k+1) = T_k·π^{2k+1}`, keyed from `k = 0`.
    BetaOdd,
}

impl SeriesKind {
    pub fn first_k(self) -> u32 {
        match self {
            SeriesKind::ZetaEven => 1,
            SeriesKind::BetaOdd => 0,
        }
    }

    /// Power of π multiplying the `k`-th coefficient.
    pub fn pi_power(self, k: u32) -> i32 {
        match self {
            SeriesKind::ZetaEven => 2 * k as i32,
            SeriesKind::BetaOdd => 2 * k as i32 + 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::ZetaEven => "zeta_even",
            SeriesKind::BetaOdd => "beta_odd",
        }
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Produced by the triangular solvers in this module.
    Engine,
    /// Produced by an independent closed form.
    Oracle,
}

/// Contiguous table of exact coefficients.
///
/// Keys run `1..=k_max` for [`SeriesKind::ZetaEven`] and `0..=k_max` for
/// [`SeriesKind::BetaOdd`]. Entries are strictly positive; `S_1 = 1/6` and `T_0 = 1/4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTable {
    kind: SeriesKind,
    provenance: Provenance,
    entries: BTreeMap<u32, BigRational>,
}

impl SeriesTable {
    pub fn new(
        kind: SeriesKind,
        provenance: Provenance,
        entries: impl IntoIterator<Item = (u32, BigRational)>,
    ) -> Result<Self> {
        let entries: BTreeMap<_, _> = entries.into_iter().collect();
        let invalid = |reason: alloc::string::String| Error::InvalidTable { kind, reason };
        for (expected, (&k, v)) in (kind.first_k()..).zip(&entries) {
            if k != expected {
                return Err(invalid(format!("keys not contiguous: expected {expected}, found {k}")));
            }
            if !v.is_positive() {
                return Err(invalid(format!("entry {k} is not positive: {v}")));
            }
        }
        let anchor = match kind {
            SeriesKind::ZetaEven => (1, BigRational::new(1.into(), 6.into())),
            SeriesKind::BetaOdd => (0, BigRational::new(1.into(), 4.into())),
        };
        if let Some(v) = entries.get(&anchor.0) {
            if *v != anchor.1 {
                return Err(invalid(format!("entry {} must be {}, found {v}", anchor.0, anchor.1)));
            }
        }
        Ok(Self {
            kind,
            provenance,
            entries,
        })
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn get(&self, k: u32) -> Option<&BigRational> {
        self.entries.get(&k)
    }

    /// Like [`get`](Self::get), but a missing key is a dependency error.
    pub fn require(&self, k: u32) -> Result<&BigRational> {
        self.get(k).ok_or(Error::MissingDependency { kind: self.kind, k })
    }

    pub fn k_max(&self) -> Option<u32> {
        self.entries.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &BigRational)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    /// The `k`-th value as `coefficient·π^power`.
    pub fn monomial(&self, k: u32) -> Option<PiMonomial> {
        self.get(k)
            .map(|c| PiMonomial::new(c.clone(), self.kind.pi_power(k)))
    }

    fn check_kind(&self, kind: SeriesKind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::InvalidTable {
                kind: self.kind,
                reason: format!("expected a {kind} table"),
            })
        }
    }
}

fn ratio(a: u32, b: u32) -> BigRational {
    BigRational::from_integer(falling_ratio(a, b).expect("a >= b"))
}

/// Row `k` of the even-zeta system: `Σ_l coeffs[l-1]·S_l = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaRow {
    pub rhs: BigRational,
    /// Coefficient of `S_l` at index `l - 1`.
    pub coeffs: Vec<BigRational>,
}

pub fn zeta_row_coeffs(k: u32) -> Result<ZetaRow> {
    if k == 0 {
        return Err(Error::Domain("zeta rows start at k = 1"));
    }
    let coeffs = (1..=k)
        .map(|l| ratio(2 * k, 2 * k + 1 - 2 * l) * int(sign_pow(l - 1)))
        .collect();
    let rhs = BigRational::new(1.into(), 2.into()) - BigRational::new(1.into(), (4 * k + 2).into());
    Ok(ZetaRow { rhs, coeffs })
}

/// Solve rows `1..=k_max` by forward substitution.
pub fn solve_zeta_table(k_max: u32) -> Result<SeriesTable> {
    if k_max == 0 {
        return Err(Error::Domain("zeta table needs k_max >= 1"));
    }
    let mut solved: Vec<BigRational> = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max {
        let row = zeta_row_coeffs(k)?;
        let (diag, lower) = row.coeffs.split_last().expect("row k has k coefficients");
        let known: BigRational = lower.iter().zip(&solved).map(|(c, s)| c * s).sum();
        solved.push((row.rhs - known) / diag);
    }
    SeriesTable::new(
        SeriesKind::ZetaEven,
        Provenance::Engine,
        (1..).zip(solved),
    )
}

/// `Σ_l coeffs[l]·S_l − rhs` for row `k`; zero exactly when the table satisfies it.
pub fn zeta_residual(k: u32, zeta: &SeriesTable) -> Result<BigRational> {
    zeta.check_kind(SeriesKind::ZetaEven)?;
    let row = zeta_row_coeffs(k)?;
    let mut lhs = BigRational::zero();
    for (l, c) in (1..).zip(&row.coeffs) {
        lhs += c * zeta.require(l)?;
    }
    Ok(lhs - row.rhs)
}

/// Rational `A_l` with `Σ_{n>=1} (-1)^n/(2n)^{2l+2} = A_l·π^{2l+2}`.
///
/// Uses `Σ (-1)^{n-1}/n^s = (1 − 2^{1−s})ζ(s)` with `s = 2l+2`, so
/// `A_l = −(1 − 2^{−2l−1})·S_{l+1} / 2^{2l+2}`.
pub fn alternating_even_coeff(l: u32, zeta: &SeriesTable) -> Result<BigRational> {
    zeta.check_kind(SeriesKind::ZetaEven)?;
    let s = zeta.require(l + 1)?;
    let s_exp = 2 * l as i32 + 2;
    let eta_factor = BigRational::one() - pow2(1 - s_exp);
    Ok(-(eta_factor * s * pow2(-s_exp)))
}

/// Row `k` of the odd-beta system, already reduced to `unknown_coeff·T_k = rhs()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaRow {
    pub k: u32,
    pub unknown_coeff: BigRational,
    /// Contribution of every term not involving `T_k`.
    pub known_sum: BigRational,
}

impl BetaRow {
    pub fn rhs(&self) -> BigRational {
        -BigRational::new(1.into(), (4 * self.k + 2).into()) - &self.known_sum
    }

    pub fn solve(&self) -> BigRational {
        self.rhs() / &self.unknown_coeff
    }
}

/// Assemble row `k` from `S_1..S_k` and `T_0..T_{k-1}`.
pub fn beta_row(k: u32, zeta: &SeriesTable, beta_so_far: &SeriesTable) -> Result<BetaRow> {
    if k == 0 {
        return Err(Error::Domain("beta rows start at k = 1; T_0 is seeded"));
    }
    zeta.check_kind(SeriesKind::ZetaEven)?;
    beta_so_far.check_kind(SeriesKind::BetaOdd)?;
    let mut known = BigRational::zero();
    for l in 0..k {
        known += ratio(2 * k, 2 * k - 2 * l - 1) * int(sign_pow(l)) * alternating_even_coeff(l, zeta)?;
        known -= ratio(2 * k, 2 * k - 2 * l) * int(sign_pow(l)) * beta_so_far.require(l)?;
    }
    let unknown_coeff = BigRational::from_integer(factorial(2 * k)) * int(2 * sign_pow(k + 1));
    Ok(BetaRow {
        k,
        unknown_coeff,
        known_sum: known,
    })
}

/// Solve rows `1..=k_max`, seeding `T_0 = 1/4`. The zeta dependency is always
/// recomputed here rather than taken from the caller.
pub fn solve_beta_table(k_max: u32) -> Result<SeriesTable> {
    let zeta = solve_zeta_table(k_max.max(1))?;
    let mut beta = SeriesTable::new(
        SeriesKind::BetaOdd,
        Provenance::Engine,
        [(0, BigRational::new(1.into(), 4.into()))],
    )?;
    for k in 1..=k_max {
        let t = beta_row(k, &zeta, &beta)?.solve();
        beta.entries.insert(k, t);
    }
    // re-validate the finished table
    SeriesTable::new(SeriesKind::BetaOdd, Provenance::Engine, beta.entries)
}

/// The odd-beta identity for row `k` with every printed term evaluated separately,
/// divided by `π^{2k}`. Zero exactly when the tables satisfy it.
///
/// Independent of [`beta_row`]: the two `T_k` terms are not merged here.
pub fn beta_residual(k: u32, zeta: &SeriesTable, beta: &SeriesTable) -> Result<BigRational> {
    if k == 0 {
        return Err(Error::Domain("beta rows start at k = 1"));
    }
    zeta.check_kind(SeriesKind::ZetaEven)?;
    beta.check_kind(SeriesKind::BetaOdd)?;
    let two_k_fact = BigRational::from_integer(factorial(2 * k));
    let mut even_cosines = BigRational::zero();
    for l in 0..k {
        even_cosines += ratio(2 * k, 2 * k - 2 * l - 1) * int(sign_pow(l)) * alternating_even_coeff(l, zeta)?;
    }
    let mut odd_sines = BigRational::zero();
    for l in 0..=k {
        let odd_alt = -beta.require(l)?;
        odd_sines += &two_k_fact / BigRational::from_integer(factorial(2 * k - 2 * l)) * int(sign_pow(l)) * odd_alt;
    }
    let tail = two_k_fact * int(sign_pow(k)) * -beta.require(k)?;
    let lhs = -BigRational::new(BigInt::one(), (4 * k + 2).into());
    Ok(even_cosines + odd_sines + tail - lhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn q(n: i64, d: i64) -> BigRational {
        rat(n, d).unwrap()
    }

    fn zeta_oracle(values: &[(i64, i64)]) -> SeriesTable {
        SeriesTable::new(
            SeriesKind::ZetaEven,
            Provenance::Oracle,
            (1..).zip(values.iter().map(|&(n, d)| q(n, d))),
        )
        .unwrap()
    }

    #[test]
    fn zeta_rows() {
        let r1 = zeta_row_coeffs(1).unwrap();
        assert_eq!(r1.rhs, q(1, 3));
        assert_eq!(r1.coeffs, [int(2)]);

        let r2 = zeta_row_coeffs(2).unwrap();
        assert_eq!(r2.rhs, q(2, 5));
        assert_eq!(r2.coeffs, [int(4), int(-24)]);
        // substitution oracle with the classical S_1, S_2
        assert_eq!(int(4) * q(1, 6) + int(-24) * q(1, 90), q(2, 5));

        let r3 = zeta_row_coeffs(3).unwrap();
        assert_eq!(r3.rhs, q(3, 7));
        assert_eq!(r3.coeffs, [int(6), int(-120), int(720)]);
        assert_eq!(int(6) * q(1, 6) - int(120) * q(1, 90) + int(720) * q(1, 945), q(3, 7));

        assert!(zeta_row_coeffs(0).is_err());
    }

    #[test]
    fn zeta_table_values() {
        let t = solve_zeta_table(7).unwrap();
        assert_eq!(t.get(1), Some(&q(1, 6)));
        assert_eq!(t.get(6), Some(&q(691, 638_512_875)));
        assert_eq!(t.get(7), Some(&q(2, 18_243_225)));
        assert_eq!(t.provenance(), Provenance::Engine);
        assert_eq!(t.k_max(), Some(7));
        assert!(solve_zeta_table(0).is_err());
    }

    #[test]
    fn alternating_even_values() {
        let z = zeta_oracle(&[(1, 6), (1, 90)]);
        assert_eq!(alternating_even_coeff(0, &z).unwrap(), q(-1, 48));
        assert_eq!(alternating_even_coeff(1, &z).unwrap(), q(-7, 11520));
        assert_eq!(
            alternating_even_coeff(2, &z),
            Err(Error::MissingDependency {
                kind: SeriesKind::ZetaEven,
                k: 3
            })
        );
    }

    #[test]
    fn beta_row_k1_matches_hand_expansion() {
        // -π²/24 - π²/4 + 4β(3)/π = -π²/6
        let z = zeta_oracle(&[(1, 6)]);
        let b = SeriesTable::new(SeriesKind::BetaOdd, Provenance::Oracle, [(0, q(1, 4))]).unwrap();
        let row = beta_row(1, &z, &b).unwrap();
        assert_eq!(row.unknown_coeff, int(4));
        assert_eq!(row.known_sum, q(-1, 24) + q(-1, 4));
        assert_eq!(row.rhs(), q(-1, 6) + q(7, 24));
        assert_eq!(row.solve(), q(1, 32));
    }

    #[test]
    fn beta_row_unknown_coeff() {
        let z = solve_zeta_table(3).unwrap();
        let b = solve_beta_table(2).unwrap();
        assert_eq!(beta_row(3, &z, &b).unwrap().unknown_coeff, int(1440));
        assert_eq!(beta_row(2, &z, &b).unwrap().unknown_coeff, int(-48));
        assert_eq!(beta_row(2, &z, &b).unwrap().solve(), q(5, 1536));
    }

    #[test]
    fn beta_row_missing_dependency() {
        let z = zeta_oracle(&[(1, 6)]);
        let b = SeriesTable::new(SeriesKind::BetaOdd, Provenance::Oracle, [(0, q(1, 4))]).unwrap();
        assert!(matches!(
            beta_row(2, &z, &b),
            Err(Error::MissingDependency { .. })
        ));
        assert!(matches!(beta_row(1, &b, &b), Err(Error::InvalidTable { .. })));
    }

    #[test]
    fn beta_table_values() {
        assert_eq!(solve_beta_table(0).unwrap().get(0), Some(&q(1, 4)));
        let t = solve_beta_table(4).unwrap();
        assert_eq!(t.get(1), Some(&q(1, 32)));
        assert_eq!(t.get(2), Some(&q(5, 1536)));
        assert_eq!(t.get(3), Some(&q(61, 184_320)));
        assert_eq!(t.get(4), Some(&q(277, 8_257_536)));
    }

    #[test]
    fn residuals_vanish() {
        let z = solve_zeta_table(12).unwrap();
        let b = solve_beta_table(12).unwrap();
        for k in 1..=12 {
            assert!(zeta_residual(k, &z).unwrap().is_zero());
            assert!(beta_residual(k, &z, &b).unwrap().is_zero());
        }
    }

    #[test]
    fn residual_detects_corruption() {
        let z = solve_zeta_table(3).unwrap();
        let mut entries: Vec<_> = z.iter().map(|(k, v)| (k, v.clone())).collect();
        entries[2].1 = q(1, 946);
        let bad = SeriesTable::new(SeriesKind::ZetaEven, Provenance::Oracle, entries).unwrap();
        assert!(!zeta_residual(3, &bad).unwrap().is_zero());
    }

    #[test]
    fn table_validation() {
        let gap = SeriesTable::new(SeriesKind::ZetaEven, Provenance::Oracle, [(1, q(1, 6)), (3, q(1, 945))]);
        assert!(matches!(gap, Err(Error::InvalidTable { .. })));
        let neg = SeriesTable::new(SeriesKind::BetaOdd, Provenance::Oracle, [(0, q(1, 4)), (1, q(-1, 32))]);
        assert!(matches!(neg, Err(Error::InvalidTable { .. })));
        let anchor = SeriesTable::new(SeriesKind::ZetaEven, Provenance::Oracle, [(1, q(1, 5))]);
        assert!(matches!(anchor, Err(Error::InvalidTable { .. })));
        let zero_based = SeriesTable::new(SeriesKind::ZetaEven, Provenance::Oracle, [(0, q(1, 6))]);
        assert!(zero_based.is_err());
    }

    #[test]
    fn monotone_decreasing() {
        let z = solve_zeta_table(20).unwrap();
        let b = solve_beta_table(20).unwrap();
        let zs: Vec<_> = z.iter().map(|(_, v)| v.clone()).collect();
        let bs: Vec<_> = b.iter().map(|(_, v)| v.clone()).collect();
        assert!(zs.windows(2).all(|w| w[0] > w[1]));
        assert!(bs.windows(2).all(|w| w[0] > w[1]));
    }
}
