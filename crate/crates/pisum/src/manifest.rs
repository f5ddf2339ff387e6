//! Published values to be checked, stored as data.
//!
//! Fractions are claims of the form `value = (num/den)·π^p`. Decimals are claims that a
//! value rounds to the printed digits; each is recorded twice in the source material,
//! once for the series and once for the closed form, and both copies are kept here.

use pisum_core::engine::SeriesKind;

/// `ζ(2k)` or `β(2k+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Quantity {
    pub kind: SeriesKind,
    pub k: u32,
}

impl Quantity {
    pub const fn zeta(k: u32) -> Self {
        Self {
            kind: SeriesKind::ZetaEven,
            k,
        }
    }

    pub const fn beta(k: u32) -> Self {
        Self {
            kind: SeriesKind::BetaOdd,
            k,
        }
    }

    pub fn pi_power(self) -> i32 {
        self.kind.pi_power(self.k)
    }
}

/// Which expression a decimal was printed for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    Series,
    ClosedForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Claimed {
    Fraction { num: u64, den: u64 },
    Decimal { route: Route, value: &'static str },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Claim {
    pub id: &'static str,
    pub source: &'static str,
    pub quantity: Quantity,
    pub claimed: Claimed,
}

const fn frac(id: &'static str, source: &'static str, quantity: Quantity, num: u64, den: u64) -> Claim {
    Claim {
        id,
        source,
        quantity,
        claimed: Claimed::Fraction { num, den },
    }
}

const fn dec(id: &'static str, source: &'static str, quantity: Quantity, route: Route, value: &'static str) -> Claim {
    Claim {
        id,
        source,
        quantity,
        claimed: Claimed::Decimal { route, value },
    }
}

use Route::{ClosedForm, Series};

pub const CLAIMS: &[Claim] = &[
    frac("zeta-2-fraction", "zeta fractions #1", Quantity::zeta(1), 1, 6),
    frac("zeta-4-fraction", "zeta fractions #2", Quantity::zeta(2), 1, 90),
    frac("zeta-6-fraction", "zeta fractions #3", Quantity::zeta(3), 1, 945),
    frac("zeta-8-fraction", "zeta fractions #4", Quantity::zeta(4), 1, 9450),
    frac("zeta-10-fraction", "zeta fractions #5", Quantity::zeta(5), 1, 93555),
    frac("zeta-12-fraction", "zeta fractions #6", Quantity::zeta(6), 691, 638_512_875),
    frac("zeta-14-fraction", "zeta fractions #7", Quantity::zeta(7), 2, 18_243_225),
    frac("zeta-16-fraction", "zeta fractions #8", Quantity::zeta(8), 13147, 1_183_635_518_797),
    frac("zeta-18-fraction", "zeta fractions #9", Quantity::zeta(9), 1482, 1_316_874_094_457),
    frac("zeta-20-fraction", "zeta fractions #10", Quantity::zeta(10), 19879, 174_337_804_837_681),
    dec("zeta-2-series-decimal", "zeta decimals #1 (series)", Quantity::zeta(1), Series, "1.644934"),
    dec("zeta-2-closed-decimal", "zeta decimals #1 (closed form)", Quantity::zeta(1), ClosedForm, "1.644934"),
    dec("zeta-4-series-decimal", "zeta decimals #2 (series)", Quantity::zeta(2), Series, "1.082323"),
    dec("zeta-4-closed-decimal", "zeta decimals #2 (closed form)", Quantity::zeta(2), ClosedForm, "1.082323"),
    dec("zeta-6-series-decimal", "zeta decimals #3 (series)", Quantity::zeta(3), Series, "1.017343"),
    dec("zeta-6-closed-decimal", "zeta decimals #3 (closed form)", Quantity::zeta(3), ClosedForm, "1.017343"),
    dec("zeta-8-series-decimal", "zeta decimals #4 (series)", Quantity::zeta(4), Series, "1.004077"),
    dec("zeta-8-closed-decimal", "zeta decimals #4 (closed form)", Quantity::zeta(4), ClosedForm, "1.004077"),
    dec("zeta-10-series-decimal", "zeta decimals #5 (series)", Quantity::zeta(5), Series, "1.000995"),
    dec("zeta-10-closed-decimal", "zeta decimals #5 (closed form)", Quantity::zeta(5), ClosedForm, "1.000995"),
    dec("zeta-12-series-decimal", "zeta decimals #6 (series)", Quantity::zeta(6), Series, "1.000246"),
    dec("zeta-12-closed-decimal", "zeta decimals #6 (closed form)", Quantity::zeta(6), ClosedForm, "1.000246"),
    frac("beta-3-fraction", "beta fractions #1", Quantity::beta(1), 1, 32),
    frac("beta-5-fraction", "beta fractions #2", Quantity::beta(2), 5, 1536),
    frac("beta-7-fraction", "beta fractions #3", Quantity::beta(3), 61, 184_320),
    frac("beta-9-fraction", "beta fractions #4", Quantity::beta(4), 277, 8_257_536),
    frac("beta-11-fraction", "beta fractions #5", Quantity::beta(5), 18269, 5_374_843_438),
    frac("beta-13-fraction", "beta fractions #6", Quantity::beta(6), 5_071_747, 14_726_725_711_261),
    frac("beta-15-fraction", "beta fractions #7", Quantity::beta(7), 19_194_249, 550_071_627_932_302),
    frac("beta-17-fraction", "beta fractions #8", Quantity::beta(8), 29469, 8_335_146_508_864),
    frac("beta-19-fraction", "beta fractions #9", Quantity::beta(9), 1, 2_791_563_952),
    frac("beta-21-fraction", "beta fractions #10", Quantity::beta(10), 65536, 1_805_623_744_627_141),
    dec("beta-3-series-decimal", "beta decimals #1 (series)", Quantity::beta(1), Series, "0.9689461"),
    dec("beta-3-closed-decimal", "beta decimals #1 (closed form)", Quantity::beta(1), ClosedForm, "0.9689461"),
    dec("beta-5-series-decimal", "beta decimals #2 (series)", Quantity::beta(2), Series, "0.9961578"),
    dec("beta-5-closed-decimal", "beta decimals #2 (closed form)", Quantity::beta(2), ClosedForm, "0.9961578"),
    dec("beta-7-series-decimal", "beta decimals #3 (series)", Quantity::beta(3), Series, "0.9995545"),
    dec("beta-7-closed-decimal", "beta decimals #3 (closed form)", Quantity::beta(3), ClosedForm, "0.9995545"),
    dec("beta-9-series-decimal", "beta decimals #4 (series)", Quantity::beta(4), Series, "0.9999497"),
    dec("beta-9-closed-decimal", "beta decimals #4 (closed form)", Quantity::beta(4), ClosedForm, "0.9999497"),
    dec("beta-11-series-decimal", "beta decimals #5 (series)", Quantity::beta(5), Series, "0.9999944"),
    dec("beta-11-closed-decimal", "beta decimals #5 (closed form)", Quantity::beta(5), ClosedForm, "0.9999944"),
    dec("beta-13-series-decimal", "beta decimals #6 (series)", Quantity::beta(6), Series, "0.9999994"),
    dec("beta-13-closed-decimal", "beta decimals #6 (closed form)", Quantity::beta(6), ClosedForm, "0.9999994"),
    dec("beta-15-series-decimal", "beta decimals #7 (series)", Quantity::beta(7), Series, "0.9999999"),
    dec("beta-15-closed-decimal", "beta decimals #7 (closed form)", Quantity::beta(7), ClosedForm, "0.9999999"),
    dec("beta-17-series-decimal", "beta decimals #8 (series)", Quantity::beta(8), Series, "1"),
    dec("beta-17-closed-decimal", "beta decimals #8 (closed form)", Quantity::beta(8), ClosedForm, "1"),
];

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn count(kind: SeriesKind, fraction: bool) -> usize {
        CLAIMS
            .iter()
            .filter(|c| c.quantity.kind == kind)
            .filter(|c| matches!(c.claimed, Claimed::Fraction { .. }) == fraction)
            .count()
    }

    #[test]
    fn manifest_counts() {
        assert_eq!(count(SeriesKind::ZetaEven, true), 10);
        assert_eq!(count(SeriesKind::ZetaEven, false), 12);
        assert_eq!(count(SeriesKind::BetaOdd, true), 10);
        assert_eq!(count(SeriesKind::BetaOdd, false), 16);
    }

    #[test]
    fn ids_unique_and_consistent() {
        let ids: HashSet<_> = CLAIMS.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), CLAIMS.len());
        for c in CLAIMS {
            let arg = match c.quantity.kind {
                SeriesKind::ZetaEven => format!("zeta-{}-", 2 * c.quantity.k),
                SeriesKind::BetaOdd => format!("beta-{}-", 2 * c.quantity.k + 1),
            };
            assert!(c.id.starts_with(&arg), "{}", c.id);
        }
    }
}
