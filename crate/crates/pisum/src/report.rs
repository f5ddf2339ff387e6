//! Classification of published claims against engine, closed-form and partial-sum values.

use std::fmt::Write as _;

use num_traits::Signed;
use pisum_core::decimal::{parse_decimal, render_sci, DecimalApprox};
use pisum_core::engine::{solve_beta_table, solve_zeta_table, SeriesKind, SeriesTable};
use pisum_core::exact::{BigRational, PiMonomial};
use serde::Serialize;

use crate::manifest::{Claim, Claimed, Quantity, Route, CLAIMS};
use crate::oracle::{beta_closed_table, partial_sum, zeta_closed_table, Series};
use crate::render::{pi_power_unicode, to_json, Format};

/// Largest relative error still classified as a numeric-only match.
pub fn numeric_only_tolerance() -> BigRational {
    BigRational::new(1.into(), 100_000.into())
}

/// Half a unit in the seventh decimal place: a printed decimal is an exact match when
/// the whole enclosure of the computed value lies this close to it.
pub fn decimal_match_tolerance() -> BigRational {
    BigRational::new(5.into(), 10_000_000.into())
}

/// Terms used for the tail-bounded partial sum of each series claim.
pub fn series_terms(q: Quantity) -> u64 {
    match (q.kind, q.k) {
        (SeriesKind::ZetaEven, 1) => 10_000_000,
        (SeriesKind::ZetaEven, _) => 2_000,
        (SeriesKind::BetaOdd, _) => 1_000,
    }
}

pub fn series_for(q: Quantity) -> Series {
    match q.kind {
        SeriesKind::ZetaEven => Series::ZetaEven(q.k),
        SeriesKind::BetaOdd => Series::BetaOdd(q.k),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MatchClass {
    /// Fractions: the claimed rational equals the computed one. Decimals: the computed
    /// enclosure rounds to the printed digits.
    Exact,
    /// Relative error at most `1e-5`, but not exact.
    NumericOnly,
    Mismatch,
}

impl MatchClass {
    pub fn label(self) -> &'static str {
        match self {
            MatchClass::Exact => "EXACT",
            MatchClass::NumericOnly => "NUMERIC_ONLY",
            MatchClass::Mismatch => "MISMATCH",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimedValue {
    Monomial(PiMonomial),
    Decimal(BigRational),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimResult {
    pub claim: Claim,
    pub claimed: ClaimedValue,
    /// Engine value.
    pub computed_exact: PiMonomial,
    /// Closed-form value; always compared against the engine.
    pub oracle_exact: PiMonomial,
    /// Engine decimal for fractions and closed-form decimals; partial sum for series decimals.
    pub computed_decimal: DecimalApprox,
    pub match_class: MatchClass,
    pub abs_err: BigRational,
    pub rel_err: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub claims: Vec<ClaimResult>,
}

struct Tables {
    zeta: SeriesTable,
    beta: SeriesTable,
    zeta_oracle: SeriesTable,
    beta_oracle: SeriesTable,
}

impl Tables {
    fn new(k_max: u32) -> Self {
        Self {
            zeta: solve_zeta_table(k_max).expect("k_max >= 1"),
            beta: solve_beta_table(k_max).expect("beta solve"),
            zeta_oracle: zeta_closed_table(k_max),
            beta_oracle: beta_closed_table(k_max),
        }
    }

    fn engine(&self, q: Quantity) -> PiMonomial {
        let t = match q.kind {
            SeriesKind::ZetaEven => &self.zeta,
            SeriesKind::BetaOdd => &self.beta,
        };
        t.monomial(q.k).expect("table covers manifest")
    }

    fn oracle(&self, q: Quantity) -> PiMonomial {
        let t = match q.kind {
            SeriesKind::ZetaEven => &self.zeta_oracle,
            SeriesKind::BetaOdd => &self.beta_oracle,
        };
        t.monomial(q.k).expect("table covers manifest")
    }
}

fn classify_fraction(claimed: &BigRational, computed: &BigRational) -> (MatchClass, BigRational) {
    let rel = (claimed - computed).abs() / computed.abs();
    let class = if claimed == computed {
        MatchClass::Exact
    } else if rel <= numeric_only_tolerance() {
        MatchClass::NumericOnly
    } else {
        MatchClass::Mismatch
    };
    (class, rel)
}

fn classify_decimal(claimed: &BigRational, computed: &DecimalApprox) -> (MatchClass, BigRational, BigRational) {
    let abs = (claimed - computed.value()).abs();
    let rel = &abs / computed.value().abs();
    let class = if computed.within(claimed, &decimal_match_tolerance()) {
        MatchClass::Exact
    } else if rel <= numeric_only_tolerance() {
        MatchClass::NumericOnly
    } else {
        MatchClass::Mismatch
    };
    (class, abs, rel)
}

fn check_claim(claim: &Claim, tables: &Tables) -> ClaimResult {
    let q = claim.quantity;
    let engine = tables.engine(q);
    let oracle = tables.oracle(q);
    let engine_decimal = engine.to_decimal();
    let (claimed, computed_decimal, mut class, abs_err, rel_err) = match claim.claimed {
        Claimed::Fraction { num, den } => {
            let c = BigRational::new(num.into(), den.into());
            let (class, rel) = classify_fraction(&c, engine.coeff());
            let diff = PiMonomial::new(&c - engine.coeff(), q.pi_power()).to_decimal();
            let claimed = ClaimedValue::Monomial(PiMonomial::new(c, q.pi_power()));
            (claimed, engine_decimal, class, diff.value().abs(), rel)
        }
        Claimed::Decimal { route, value } => {
            let c = parse_decimal(value).expect("manifest decimals parse");
            let computed = match route {
                Route::Series => partial_sum(series_for(q), series_terms(q)),
                Route::ClosedForm => engine_decimal,
            };
            let (class, abs, rel) = classify_decimal(&c, &computed);
            (ClaimedValue::Decimal(c), computed, class, abs, rel)
        }
    };
    if engine != oracle {
        class = MatchClass::Mismatch;
    }
    ClaimResult {
        claim: *claim,
        claimed,
        computed_exact: engine,
        oracle_exact: oracle,
        computed_decimal,
        match_class: class,
        abs_err,
        rel_err,
    }
}

/// Check every claim in [`CLAIMS`].
pub fn check_paper() -> VerificationReport {
    check_claims(CLAIMS)
}

pub fn check_claims(claims: &[Claim]) -> VerificationReport {
    let k_max = claims.iter().map(|c| c.quantity.k).max().unwrap_or(1).max(1);
    let tables = Tables::new(k_max);
    let claims = std::thread::scope(|scope| {
        let handles: Vec<_> = claims
            .iter()
            .map(|c| {
                let tables = &tables;
                scope.spawn(move || check_claim(c, tables))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("claim check panicked"))
            .collect()
    });
    VerificationReport { claims }
}

impl VerificationReport {
    pub fn count(&self, class: MatchClass) -> usize {
        self.claims.iter().filter(|c| c.match_class == class).count()
    }

    pub fn has_mismatch(&self) -> bool {
        self.count(MatchClass::Mismatch) > 0
    }

    /// 0 when nothing mismatches, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        u8::from(self.has_mismatch())
    }

    pub fn get(&self, id: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.claim.id == id)
    }

    pub fn render(&self, format: Format, precision: u32) -> String {
        match format {
            Format::Json => to_json(&self.to_json(precision)),
            Format::Table => self.render_text(precision),
            Format::Latex => self.render_latex(precision),
        }
    }

    fn summary(&self) -> String {
        format!(
            "{} claims: {} exact, {} numeric-only, {} mismatch",
            self.claims.len(),
            self.count(MatchClass::Exact),
            self.count(MatchClass::NumericOnly),
            self.count(MatchClass::Mismatch)
        )
    }

    fn render_text(&self, precision: u32) -> String {
        let mut out = String::new();
        let id_w = self.claims.iter().map(|c| c.claim.id.len()).max().unwrap_or(0);
        let claimed_w = self
            .claims
            .iter()
            .map(|c| claimed_string(c).chars().count())
            .max()
            .unwrap_or(0);
        for c in &self.claims {
            let _ = writeln!(
                out,
                "{:<12}  {:<id_w$}  {:<claimed_w$}  computed {} ≈ {}  rel_err {}",
                c.match_class.label(),
                c.claim.id,
                claimed_string(c),
                exact_string(&c.computed_exact),
                c.computed_decimal.render_sig(precision),
                render_sci(&c.rel_err, 3),
            );
        }
        out.push('\n');
        out.push_str(&self.summary());
        out.push('\n');
        let numeric: Vec<_> = self
            .claims
            .iter()
            .filter(|c| c.match_class == MatchClass::NumericOnly)
            .collect();
        if !numeric.is_empty() {
            out.push_str("\nNUMERIC_ONLY (agree to printed precision, not the exact rational):\n");
            for c in numeric {
                let _ = writeln!(
                    out,
                    "  {:<id_w$}  claimed {}  exact {}",
                    c.claim.id,
                    claimed_string(c),
                    exact_string(&c.computed_exact)
                );
            }
        }
        for c in self.claims.iter().filter(|c| c.match_class == MatchClass::Mismatch) {
            let _ = writeln!(out, "MISMATCH: {} ({})", c.claim.id, c.claim.source);
        }
        out
    }

    fn render_latex(&self, precision: u32) -> String {
        let mut out = String::from("\\begin{tabular}{lllll}\n");
        out.push_str("claim & source & computed & decimal & class \\\\\n\\hline\n");
        for c in &self.claims {
            let _ = writeln!(
                out,
                "{} & {} & ${}$ & {} & {} \\\\",
                c.claim.id.replace('-', "\\text{-}"),
                c.claim.source.replace('#', "\\#"),
                monomial_latex(&c.computed_exact),
                c.computed_decimal.render_sig(precision),
                c.match_class.label().replace('_', "\\_"),
            );
        }
        out.push_str("\\end{tabular}\n");
        out
    }

    pub fn to_json(&self, precision: u32) -> ReportJson {
        ReportJson {
            summary: SummaryJson {
                total: self.claims.len(),
                exact: self.count(MatchClass::Exact),
                numeric_only: self.count(MatchClass::NumericOnly),
                mismatch: self.count(MatchClass::Mismatch),
            },
            claims: self
                .claims
                .iter()
                .map(|c| ClaimJson {
                    claim_id: c.claim.id.to_string(),
                    source: c.claim.source.to_string(),
                    claimed: claimed_string(c),
                    computed_num: c.computed_exact.coeff().numer().to_string(),
                    computed_den: c.computed_exact.coeff().denom().to_string(),
                    pi_power: c.computed_exact.power(),
                    computed_decimal: c.computed_decimal.render_sig(precision),
                    error_bound: render_sci(c.computed_decimal.error_bound(), 3),
                    match_class: c.match_class,
                    abs_err: render_sci(&c.abs_err, 3),
                    rel_err: render_sci(&c.rel_err, 3),
                })
                .collect(),
        }
    }
}

fn exact_string(m: &PiMonomial) -> String {
    format!("({})·{}", m.coeff(), pi_power_unicode(m.power()))
}

fn monomial_latex(m: &PiMonomial) -> String {
    format!("\\frac{{{}}}{{{}}}\\pi^{{{}}}", m.coeff().numer(), m.coeff().denom(), m.power())
}

fn claimed_string(c: &ClaimResult) -> String {
    match &c.claimed {
        ClaimedValue::Monomial(m) => exact_string(m),
        ClaimedValue::Decimal(_) => match c.claim.claimed {
            Claimed::Decimal { value, .. } => value.to_string(),
            Claimed::Fraction { .. } => unreachable!("decimal claim"),
        },
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportJson {
    pub summary: SummaryJson,
    pub claims: Vec<ClaimJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SummaryJson {
    pub total: usize,
    pub exact: usize,
    pub numeric_only: usize,
    pub mismatch: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimJson {
    pub claim_id: String,
    pub source: String,
    pub claimed: String,
    pub computed_num: String,
    pub computed_den: String,
    pub pi_power: i32,
    pub computed_decimal: String,
    pub error_bound: String,
    pub match_class: MatchClass,
    pub abs_err: String,
    pub rel_err: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifest::Quantity;

    #[test]
    fn fraction_classification() {
        let exact = BigRational::new(1.into(), 6.into());
        assert_eq!(classify_fraction(&exact, &exact).0, MatchClass::Exact);
        let close = BigRational::new(100_000.into(), 600_001.into());
        assert_eq!(classify_fraction(&close, &exact).0, MatchClass::NumericOnly);
        let far = BigRational::new(1.into(), 7.into());
        assert_eq!(classify_fraction(&far, &exact).0, MatchClass::Mismatch);
    }

    #[test]
    fn decimal_classification() {
        let v = DecimalApprox::exact(parse_decimal("1.6449340668").unwrap());
        let printed = parse_decimal("1.644934").unwrap();
        assert_eq!(classify_decimal(&printed, &v).0, MatchClass::Exact);
        let off = parse_decimal("1.644930").unwrap();
        assert_eq!(classify_decimal(&off, &v).0, MatchClass::NumericOnly);
        let wrong = parse_decimal("1.6").unwrap();
        assert_eq!(classify_decimal(&wrong, &v).0, MatchClass::Mismatch);
    }

    #[test]
    fn small_manifest() {
        let claims = [
            Claim {
                id: "zeta-12-fraction",
                source: "test",
                quantity: Quantity::zeta(6),
                claimed: Claimed::Fraction { num: 691, den: 638_512_875 },
            },
            Claim {
                id: "beta-11-fraction",
                source: "test",
                quantity: Quantity::beta(5),
                claimed: Claimed::Fraction { num: 18269, den: 5_374_843_438 },
            },
            Claim {
                id: "zeta-4-bogus",
                source: "test",
                quantity: Quantity::zeta(2),
                claimed: Claimed::Fraction { num: 1, den: 91 },
            },
        ];
        let r = check_claims(&claims);
        assert_eq!(r.get("zeta-12-fraction").unwrap().match_class, MatchClass::Exact);
        assert_eq!(r.get("beta-11-fraction").unwrap().match_class, MatchClass::NumericOnly);
        assert_eq!(r.get("zeta-4-bogus").unwrap().match_class, MatchClass::Mismatch);
        assert_eq!(r.exit_code(), 1);
    }
}
