//! Matrix file format: whitespace-separated rational entries, one row per
//! line, integers or "p/q" literals, '#' comments. Parsing is exact; no
//! value ever round-trips through floating point.

use anyhow::{bail, Context, Result};
use pdet_core::{Matrix, Scalar};

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row: Vec<Scalar> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Scalar>()
                    .with_context(|| format!("line {line_no}: bad entry {tok:?}"))
            })
            .collect::<Result<_>>()?;
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                bail!(
                    "line {line_no}: row has {} entries, expected {}",
                    row.len(),
                    first.len()
                );
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        bail!("no matrix rows found");
    }
    Ok(Matrix::from_rows(rows))
}

pub fn format_matrix(m: &Matrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(Scalar::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
