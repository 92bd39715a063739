//! Per-`n` approximant tables.

use std::fmt::Write as _;

use qzeta_core::approximants::{build_row_with, residuals, residuals_with_depth, Residuals};
use qzeta_core::zeta::decimal::{format_enclosure, format_sci, Rounding};
use qzeta_core::zeta::{decay_exponent, RationalInterval};
use qzeta_core::{ApproximantRow, CycloTable, QContext, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Significant digits for residual endpoints and exponents.
pub const DIGITS: usize = 12;

pub const CSV_HEADER: [&str; 12] = [
    "p", "n", "beta", "alpha", "b", "a", "res1_lo", "res1_hi", "res2_lo", "res2_hi", "exp1", "exp2",
];

/// One output row. Integers are printed in full; residual endpoints are
/// rounded outward, and the exponents carry an explicit `±` bound. An
/// exponent is empty when its residual enclosure contains zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub p: u64,
    pub n: u32,
    pub beta: String,
    pub alpha: String,
    pub b: String,
    pub a: String,
    pub res1_lo: String,
    pub res1_hi: String,
    pub res2_lo: String,
    pub res2_hi: String,
    pub exp1: String,
    pub exp2: String,
}

impl SweepRow {
    fn fields(&self) -> [String; 12] {
        [
            self.p.to_string(),
            self.n.to_string(),
            self.beta.clone(),
            self.alpha.clone(),
            self.b.clone(),
            self.a.clone(),
            self.res1_lo.clone(),
            self.res1_hi.clone(),
            self.res2_lo.clone(),
            self.res2_hi.clone(),
            self.exp1.clone(),
            self.exp2.clone(),
        ]
    }
}

fn exponent(p: u64, n: u32, r: &RationalInterval) -> Result<String> {
    if r.contains_zero() {
        return Ok(String::new());
    }
    let e = decay_exponent(p, &[(n, r.clone())], 64)?;
    Ok(format_enclosure(&e[0], DIGITS))
}

fn render(row: &ApproximantRow, res: &Residuals) -> Result<SweepRow> {
    let lo = |iv: &RationalInterval| format_sci(iv.lo(), DIGITS, Rounding::Down);
    let hi = |iv: &RationalInterval| format_sci(iv.hi(), DIGITS, Rounding::Up);
    Ok(SweepRow {
        p: row.p,
        n: row.n,
        beta: row.beta.to_string(),
        alpha: row.alpha.to_string(),
        b: row.b.to_string(),
        a: row.a.to_string(),
        res1_lo: lo(&res.res1),
        res1_hi: hi(&res.res1),
        res2_lo: lo(&res.res2),
        res2_hi: hi(&res.res2),
        exp1: exponent(row.p, row.n, &res.res1)?,
        exp2: exponent(row.p, row.n, &res.res2)?,
    })
}

/// Rows for every `p` and `1 <= n <= n_max`, sorted by `(p, n)`.
///
/// With `depth`, the zeta series are cut at that depth; otherwise depth and
/// precision are grown until both residuals exclude zero.
pub fn sweep(ps: &[u64], n_max: u32, depth: Option<u32>) -> Result<Vec<SweepRow>> {
    let table = CycloTable::up_to(2 * n_max.max(1) as usize)?;
    let jobs: Vec<(u64, u32)> = ps.iter().flat_map(|&p| (1..=n_max).map(move |n| (p, n))).collect();
    let mut rows = jobs
        .par_iter()
        .map(|&(p, n)| {
            let row = build_row_with(n, &QContext::new(p)?, &table)?;
            let res = match depth {
                Some(d) => residuals_with_depth(&row, d)?,
                None => residuals(&row)?,
            };
            render(&row, &res)
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| (r.p, r.n));
    Ok(rows)
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = CSV_HEADER.join(",");
    out.push_str("\r\n");
    for row in rows {
        out.push_str(&row.fields().join(","));
        out.push_str("\r\n");
    }
    out
}

pub fn to_json(rows: &[SweepRow]) -> String {
    serde_json::to_string_pretty(rows).expect("sweep rows serialize")
}

/// Whitespace-aligned table, for reading at a terminal.
pub fn to_text(rows: &[SweepRow]) -> String {
    let cells: Vec<[String; 12]> = std::iter::once(CSV_HEADER.map(String::from))
        .chain(rows.iter().map(SweepRow::fields))
        .collect();
    let widths: Vec<usize> = (0..12).map(|i| cells.iter().map(|c| c[i].len()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for c in &cells {
        let line: Vec<String> = c.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_row_values() {
        let rows = sweep(&[2], 1, None).unwrap();
        assert_eq!(rows.len(), 1);
        let r = &rows[0];
        assert_eq!((r.beta.as_str(), r.alpha.as_str(), r.b.as_str(), r.a.as_str()), ("-2", "-3", "-2", "-6"));
        assert!(r.res1_lo.starts_with("-2.1339"));
    }

    #[test]
    fn shallow_depth_leaves_exponent_empty() {
        let rows = sweep(&[2], 6, Some(2)).unwrap();
        assert!(rows.iter().any(|r| r.exp1.is_empty()));
    }

    #[test]
    fn csv_shape() {
        let rows = sweep(&[2, 3], 3, None).unwrap();
        let csv = to_csv(&rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 7);
        assert_eq!(lines[0], CSV_HEADER.join(","));
        assert!(lines.iter().all(|l| l.split(',').count() == 12));
        let order: Vec<(u64, u32)> = rows.iter().map(|r| (r.p, r.n)).collect();
        assert_eq!(order, [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)]);
    }

    #[test]
    fn text_has_header_and_rows() {
        let rows = sweep(&[2], 2, None).unwrap();
        let text = to_text(&rows);
        assert_eq!(text.lines().count(), 3);
        assert!(text.lines().next().unwrap().trim_start().starts_with('p'));
    }
}
