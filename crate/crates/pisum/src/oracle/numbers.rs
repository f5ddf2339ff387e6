use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use pisum_core::engine::{Provenance, SeriesKind, SeriesTable};
use pisum_core::exact::{factorial, BigRational};

/// `B_0..=B_m_max` from `Σ_{j=0}^{m} C(m+1, j)·B_j = 0`, `B_0 = 1` (so `B_1 = -1/2`).
pub fn bernoulli_numbers(m_max: u32) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(m_max as usize + 1);
    b.push(BigRational::one());
    for m in 1..=m_max {
        let m1 = BigInt::from(m + 1);
        let s: BigRational = b
            .iter()
            .enumerate()
            .map(|(j, bj)| bj * BigRational::from_integer(binomial(m1.clone(), BigInt::from(j))))
            .sum();
        let bm = -s / BigRational::from_integer(m1);
        if m >= 3 && m % 2 == 1 {
            assert!(bm.is_zero(), "odd Bernoulli number B_{m} = {bm} must vanish");
        }
        b.push(bm);
    }
    b
}

/// `E_0..=E_m_max` (odd indices are zero) from `Σ_{j=0}^{m} C(2m, 2j)·E_{2j} = 0`, `E_0 = 1`.
pub fn euler_numbers(m_max: u32) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); m_max as usize + 1];
    e[0] = BigInt::one();
    for m in 1..=m_max / 2 {
        let two_m = BigInt::from(2 * m);
        let s: BigInt = (0..m)
            .map(|j| binomial(two_m.clone(), BigInt::from(2 * j)) * &e[2 * j as usize])
            .sum();
        let em = -s;
        let prev = &e[2 * (m - 1) as usize];
        assert!(
            em.is_negative() != prev.is_negative(),
            "Euler numbers alternate in sign"
        );
        assert!(m == 1 || em.abs() > prev.abs(), "|E_2m| increases");
        e[2 * m as usize] = em;
    }
    e
}

fn zeta_from_bernoulli(k: u32, b2k: &BigRational) -> BigRational {
    let sign = if k % 2 == 1 { 1 } else { -1 };
    let two_pow = BigInt::one() << (2 * k - 1);
    b2k * BigRational::from_integer(two_pow * sign) / BigRational::from_integer(factorial(2 * k))
}

fn beta_from_euler(k: u32, e2k: &BigInt) -> BigRational {
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let four_pow = BigInt::one() << (2 * k + 2);
    BigRational::new(e2k * sign, four_pow * factorial(2 * k))
}

/// `S_k = (-1)^{k+1}·B_{2k}·2^{2k-1}/(2k)!`, so that `ζ(2k) = S_k·π^{2k}`.
pub fn zeta_closed_form(k: u32) -> BigRational {
    assert!(k >= 1, "zeta_closed_form needs k >= 1");
    let b = bernoulli_numbers(2 * k);
    zeta_from_bernoulli(k, &b[2 * k as usize])
}

/// `T_k = (-1)^k·E_{2k}/(4^{k+1}·(2k)!)`, so that `β(2k+1) = T_k·π^{2k+1}`.
pub fn beta_closed_form(k: u32) -> BigRational {
    let e = euler_numbers(2 * k);
    beta_from_euler(k, &e[2 * k as usize])
}

/// `S_1..=S_k_max` from a single Bernoulli run.
pub fn zeta_closed_table(k_max: u32) -> SeriesTable {
    let b = bernoulli_numbers(2 * k_max);
    SeriesTable::new(
        SeriesKind::ZetaEven,
        Provenance::Oracle,
        (1..=k_max).map(|k| (k, zeta_from_bernoulli(k, &b[2 * k as usize]))),
    )
    .expect("closed-form zeta table is valid")
}

/// `T_0..=T_k_max` from a single Euler run.
pub fn beta_closed_table(k_max: u32) -> SeriesTable {
    let e = euler_numbers(2 * k_max);
    SeriesTable::new(
        SeriesKind::BetaOdd,
        Provenance::Oracle,
        (0..=k_max).map(|k| (k, beta_from_euler(k, &e[2 * k as usize]))),
    )
    .expect("closed-form beta table is valid")
}
