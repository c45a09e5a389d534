//! The JSON run report and the number formats shared by the text outputs.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dimensions {
    pub examples: usize,
    pub attributes: usize,
    pub positives: usize,
    pub negatives: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionInfo {
    pub column: String,
    pub positive: f64,
    pub negative: f64,
}

/// Everything needed to reproduce and read one run. `results` holds the
/// command-specific payload.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input: String,
    pub dimensions: Dimensions,
    pub dropped_rows: usize,
    pub decision: DecisionInfo,
    pub parameters: Value,
    /// Items reverse-coded by `--auto-orient`.
    pub flipped_items: Vec<String>,
    pub results: Value,
    /// Seconds since the Unix epoch; only recorded on request so that
    /// reruns stay byte-identical.
    pub timestamp: Option<u64>,
}

/// Fixed 7 decimal places, as in the ranking tables.
pub fn dec7(x: f64) -> String {
    format!("{x:.7}")
}

/// Seven significant digits, as in the test-statistic summary.
pub fn sig7(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    if magnitude < -4 {
        let text = format!("{x:.6e}");
        let (mantissa, exponent) = text.split_once('e').expect("exponent form");
        let exponent: i32 = exponent.parse().expect("integer exponent");
        let sign = if exponent < 0 { '-' } else { '+' };
        return format!("{mantissa}e{sign}{:02}", exponent.abs());
    }
    let decimals = (6 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Left-aligned label column followed by right-aligned value columns.
pub fn table(header: &[&str], rows: &[(String, Vec<String>)]) -> String {
    let label_width = rows
        .iter()
        .map(|(l, _)| l.len())
        .max()
        .unwrap_or(0)
        .max(header[0].len());
    let mut widths: Vec<usize> = header[1..].iter().map(|h| h.len()).collect();
    for (_, cells) in rows {
        for (w, c) in widths.iter_mut().zip(cells) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = format!("{:<label_width$}", header[0]);
    for (h, w) in header[1..].iter().zip(&widths) {
        out.push_str(&format!(" {h:>w$}"));
    }
    out.push('\n');
    for (label, cells) in rows {
        out.push_str(&format!("{label:<label_width$}"));
        for (c, w) in cells.iter().zip(&widths) {
            out.push_str(&format!(" {c:>w$}"));
        }
        out.push('\n');
    }
    out
}

/// Quotes a CSV field when it contains a delimiter, quote or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
