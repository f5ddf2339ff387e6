//! The invariant suite behind `pisum verify`.

use num_traits::{Signed, Zero};
use pisum_core::decimal::{render_sci, DecimalApprox};
use pisum_core::engine::{
    beta_residual, solve_beta_table, solve_zeta_table, zeta_residual, SeriesKind, SeriesTable,
};
use pisum_core::exact::{BigRational, PiSum};
use pisum_core::fourier::{fk_cos_step, gk_cos_step, gk_sin_coeff, gk_sin_step, Family};

use crate::oracle::{beta_closed_table, integrate, partial_sum, zeta_closed_table, Series};

/// Largest `k` covered by the quadrature comparison.
pub const QUADRATURE_MAX_K: u32 = 5;
/// Largest `n` covered by the quadrature and recurrence comparisons.
pub const MAX_N: u64 = 8;
/// Largest `k` covered by the recurrence comparison.
pub const RECURRENCE_MAX_K: u32 = 8;

pub fn quadrature_tolerance() -> BigRational {
    BigRational::new(1.into(), 10_000_000_000u64.into())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    pub first_failure: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            passed: 0,
            total: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.first_failure.is_none() {
            self.first_failure = Some(detail());
        }
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifySummary {
    pub k_max: u32,
    pub checks: Vec<Check>,
}

impl VerifySummary {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.ok())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        match self.first_failure() {
            None => {
                let z = self.check("zeta engine = closed form").expect("present");
                let b = self.check("beta engine = closed form").expect("present");
                out.push_str(&format!(
                    "PASS {}/{} zeta, {}/{} beta, residuals exact\n",
                    z.passed, z.total, b.passed, b.total
                ));
            }
            Some(c) => {
                out.push_str(&format!(
                    "FAIL: {}: {}\n",
                    c.name,
                    c.first_failure.as_deref().unwrap_or("")
                ));
            }
        }
        for c in &self.checks {
            out.push_str(&format!(
                "  [{}] {} ({}/{})\n",
                if c.ok() { "ok" } else { "FAIL" },
                c.name,
                c.passed,
                c.total
            ));
        }
        out
    }
}

fn residual_checks(check: &mut Check, k_max: u32, zeta: &SeriesTable, beta: &SeriesTable) {
    for k in 1..=k_max {
        let r = zeta_residual(k, zeta);
        check.record(matches!(&r, Ok(r) if r.is_zero()), || {
            format!("zeta row {k} ({:?}) residual {r:?}", zeta.provenance())
        });
        let r = beta_residual(k, zeta, beta);
        check.record(matches!(&r, Ok(r) if r.is_zero()), || {
            format!("beta row {k} ({:?}) residual {r:?}", beta.provenance())
        });
    }
}

fn partial_sum_terms(kind: SeriesKind) -> u64 {
    match kind {
        SeriesKind::ZetaEven => 2_000,
        SeriesKind::BetaOdd => 1_000,
    }
}

/// Symbolic coefficient minus adaptive quadrature, for one `(family, k, n)`.
pub fn quadrature_gap(family: Family, k: u32, n: u64) -> Result<(DecimalApprox, DecimalApprox), String> {
    let symbolic = family
        .coeff(k)
        .and_then(|c| c.eval(n))
        .map_err(|e| e.to_string())?
        .decimal;
    let numeric = integrate(family, k, n).map_err(|e| e.to_string())?;
    Ok((symbolic, numeric))
}

/// Whether the recurrence behind each closed form reproduces it exactly at `(k, n)`.
pub fn recurrence_holds(family: Family, k: u32, n: u64) -> bool {
    let eval = |k: u32| -> PiSum {
        match (family, k) {
            (Family::FkCos | Family::GkCos, 0) => PiSum::zero(),
            _ => family.coeff(k).and_then(|c| c.eval(n)).expect("valid k, n").exact,
        }
    };
    let previous = match family {
        Family::GkSin if k == 1 => gk_sin_coeff(0).eval(n).expect("n >= 1").exact,
        _ => eval(k - 1),
    };
    let stepped = match family {
        Family::FkCos => fk_cos_step(k, n, &previous),
        Family::GkCos => gk_cos_step(k, n, &previous),
        Family::GkSin => gk_sin_step(k, n, &previous),
    };
    stepped == eval(k)
}

/// Run every invariant for `k = 1..=k_max`.
pub fn run_verify(k_max: u32) -> VerifySummary {
    let zeta = solve_zeta_table(k_max).expect("k_max >= 1");
    let beta = solve_beta_table(k_max).expect("beta solve");
    let zeta_oracle = zeta_closed_table(k_max);
    let beta_oracle = beta_closed_table(k_max);

    let mut zeta_eq = Check::new("zeta engine = closed form");
    for k in 1..=k_max {
        zeta_eq.record(zeta.get(k) == zeta_oracle.get(k), || {
            format!("S_{k}: engine {:?} vs closed form {:?}", zeta.get(k), zeta_oracle.get(k))
        });
    }
    let mut beta_eq = Check::new("beta engine = closed form");
    for k in 1..=k_max {
        beta_eq.record(beta.get(k) == beta_oracle.get(k), || {
            format!("T_{k}: engine {:?} vs closed form {:?}", beta.get(k), beta_oracle.get(k))
        });
    }

    let mut residuals = Check::new("identity residuals");
    residual_checks(&mut residuals, k_max, &zeta, &beta);
    residual_checks(&mut residuals, k_max, &zeta_oracle, &beta_oracle);

    let mut positivity = Check::new("positive and decreasing");
    let values: Vec<_> = zeta.iter().map(|(_, v)| v.clone()).collect();
    positivity.record(values.iter().all(|v| v.is_positive()), || "S_k not positive".into());
    positivity.record(values.windows(2).all(|w| w[0] > w[1]), || "S_k not decreasing".into());
    positivity.record(beta.iter().all(|(_, v)| v.is_positive()), || "T_k not positive".into());

    let mut triangle = Check::new("partial sums enclose exact values");
    for (table, series) in [(&zeta, Series::ZetaEven as fn(u32) -> Series), (&beta, Series::BetaOdd)] {
        for (k, _) in table.iter() {
            let exact = table.monomial(k).expect("present").to_decimal();
            let sum = partial_sum(series(k), partial_sum_terms(table.kind()));
            triangle.record(sum.overlaps(&exact), || {
                format!("{:?}: partial sum {sum} vs exact {exact}", series(k))
            });
        }
    }

    let mut quadrature = Check::new("quadrature = symbolic coefficients");
    let tol = quadrature_tolerance();
    for family in Family::ALL {
        for k in family.min_k()..=k_max.min(QUADRATURE_MAX_K) {
            for n in 1..=MAX_N {
                let gap = quadrature_gap(family, k, n);
                let ok = matches!(&gap, Ok((s, q)) if (s.value() - q.value()).abs() < tol);
                quadrature.record(ok, || match &gap {
                    Ok((s, q)) => format!(
                        "{family} k={k} n={n}: symbolic {s} vs quadrature {q} (gap {})",
                        render_sci(&(s.value() - q.value()).abs(), 3)
                    ),
                    Err(e) => format!("{family} k={k} n={n}: {e}"),
                });
            }
        }
    }

    let mut recurrences = Check::new("integration-by-parts recurrences");
    for family in Family::ALL {
        for k in 1..=k_max.clamp(2, RECURRENCE_MAX_K) {
            for n in 1..=MAX_N {
                recurrences.record(recurrence_holds(family, k, n), || {
                    format!("{family} k={k} n={n}")
                });
            }
        }
    }

    VerifySummary {
        k_max,
        checks: vec![
            zeta_eq,
            beta_eq,
            residuals,
            positivity,
            triangle,
            quadrature,
            recurrences,
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_run_passes() {
        let s = run_verify(1);
        assert!(s.ok(), "{}", s.render());
        assert!(s.render().starts_with("PASS 1/1 zeta, 1/1 beta, residuals exact"));
    }

    #[test]
    fn recurrence_base_cases() {
        for family in Family::ALL {
            assert!(recurrence_holds(family, 1, 3));
        }
    }
}
