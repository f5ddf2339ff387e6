//! Plain-text, JSON and LaTeX renderings of tables and coefficients.

use std::fmt::Write as _;

use clap::ValueEnum;
use pisum_core::engine::{SeriesKind, SeriesTable};
use pisum_core::exact::BigRational;
use pisum_core::fourier::FourierCoeff;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Latex,
}

/// Stable JSON form of a [`SeriesTable`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub kind: String,
    pub entries: Vec<EntryJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub k: u32,
    pub num: String,
    pub den: String,
    pub pi_power: i32,
    pub decimal: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub family: String,
    pub k: u32,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub alternating: bool,
    pub pi_power: i32,
    pub n_exponent: u32,
}

/// `π`, `π²`, `π⁻³`, …
pub fn pi_power_unicode(p: i32) -> String {
    match p {
        0 => String::new(),
        1 => "π".to_string(),
        _ => format!("π{}", superscript(p)),
    }
}

pub fn superscript(n: i32) -> String {
    n.to_string()
        .chars()
        .map(|c| match c {
            '-' => '⁻',
            '0' => '⁰',
            '1' => '¹',
            '2' => '²',
            '3' => '³',
            '4' => '⁴',
            '5' => '⁵',
            '6' => '⁶',
            '7' => '⁷',
            '8' => '⁸',
            _ => '⁹',
        })
        .collect()
}

fn symbol(kind: SeriesKind, k: u32) -> String {
    match kind {
        SeriesKind::ZetaEven => format!("ζ({})", 2 * k),
        SeriesKind::BetaOdd => format!("β({})", 2 * k + 1),
    }
}

/// `ζ(6) = (1/945)·π⁶`
pub fn identity_unicode(kind: SeriesKind, k: u32, coeff: &BigRational) -> String {
    format!(
        "{} = ({})·{}",
        symbol(kind, k),
        coeff,
        pi_power_unicode(kind.pi_power(k))
    )
}

fn latex_pi(p: i32) -> String {
    if p == 1 {
        "\\pi".to_string()
    } else {
        format!("\\pi^{{{p}}}")
    }
}

/// `\sum 1/n^{10} = \pi^{10}/93555`
pub fn identity_latex(kind: SeriesKind, k: u32, coeff: &BigRational) -> String {
    let p = kind.pi_power(k);
    let lhs = match kind {
        SeriesKind::ZetaEven => format!("\\sum 1/n^{{{p}}}"),
        SeriesKind::BetaOdd => format!("\\sum (-1)^{{n-1}}/(2n-1)^{{{p}}}"),
    };
    let numer = coeff.numer().to_string();
    let num = if numer == "1" { String::new() } else { numer };
    format!("{lhs} = {num}{}/{}", latex_pi(p), coeff.denom())
}

fn decimal_of(table: &SeriesTable, k: u32, precision: u32) -> String {
    table
        .monomial(k)
        .expect("key present")
        .to_decimal()
        .render_sig(precision)
}

pub fn table_json(table: &SeriesTable, precision: u32) -> TableJson {
    TableJson {
        kind: table.kind().name().to_string(),
        entries: table
            .iter()
            .map(|(k, v)| EntryJson {
                k,
                num: v.numer().to_string(),
                den: v.denom().to_string(),
                pi_power: table.kind().pi_power(k),
                decimal: decimal_of(table, k, precision),
            })
            .collect(),
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn render_table(table: &SeriesTable, format: Format, precision: u32) -> String {
    let mut out = String::new();
    match format {
        Format::Json => return to_json(&table_json(table, precision)),
        Format::Table => {
            let width = table.k_max().unwrap_or(0).to_string().len().max(1);
            let _ = writeln!(out, "{:>width$}  value", "k");
            for (k, v) in table.iter() {
                let _ = writeln!(
                    out,
                    "{k:>width$}  {} ≈ {}",
                    identity_unicode(table.kind(), k, v),
                    decimal_of(table, k, precision)
                );
            }
        }
        Format::Latex => {
            out.push_str("\\begin{gather*}\n");
            let rows: Vec<_> = table
                .iter()
                .map(|(k, v)| {
                    format!(
                        "{} \\approx {}",
                        identity_latex(table.kind(), k, v),
                        decimal_of(table, k, precision)
                    )
                })
                .collect();
            out.push_str(&rows.join(" \\\\\n"));
            out.push_str("\n\\end{gather*}\n");
        }
    }
    out
}

pub fn coeff_json(c: &FourierCoeff) -> CoeffJson {
    CoeffJson {
        family: c.family().name().to_string(),
        k: c.k(),
        terms: c
            .terms()
            .iter()
            .map(|t| TermJson {
                coeff: t.coeff.to_string(),
                alternating: t.alternating,
                pi_power: t.pi_power,
                n_exponent: t.n_exponent,
            })
            .collect(),
    }
}

pub fn render_coeff(c: &FourierCoeff, format: Format) -> String {
    match format {
        Format::Json => to_json(&coeff_json(c)),
        Format::Table => {
            let mut out = format!("{} k={}: {} term(s)\n", c.family(), c.k(), c.terms().len());
            for t in c.terms() {
                let _ = writeln!(out, "  {t}");
            }
            out
        }
        Format::Latex => {
            let terms: Vec<_> = c
                .terms()
                .iter()
                .map(|t| {
                    let mut s = t.coeff.to_string();
                    if t.alternating {
                        s.push_str("(-1)^{n}");
                    }
                    if t.pi_power != 0 {
                        let _ = write!(s, "\\pi^{{{}}}", t.pi_power);
                    }
                    let _ = write!(s, "n^{{-{}}}", t.n_exponent);
                    s
                })
                .collect();
            format!("{}\n", terms.join(" + ").replace("+ -", "- "))
        }
    }
}
