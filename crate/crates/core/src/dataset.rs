//! Validated in-memory dataset: a matrix of item scores plus one binary
//! decision per example.

use std::collections::HashSet;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};

/// How the decision column should be mapped onto positive/negative.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum PositiveValue {
    /// The numerically larger of the two distinct values is positive.
    #[default]
    Auto,
    Value(f64),
}

/// The raw decision values that were mapped to positive and negative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DecisionEncoding {
    pub positive: f64,
    pub negative: f64,
}

/// Item scores stored column-major, `columns[j][i]` being item `j` of
/// example `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    labels: Vec<String>,
    columns: Vec<Vec<f64>>,
    decision: Vec<bool>,
    dropped_rows: usize,
    encoding: DecisionEncoding,
}

impl Dataset {
    /// Builds a dataset from columns. `decision[i]` is `true` for a positive
    /// example.
    pub fn new(labels: Vec<String>, columns: Vec<Vec<f64>>, decision: Vec<bool>) -> Result<Self> {
        let ds = Dataset {
            labels,
            columns,
            decision,
            dropped_rows: 0,
            encoding: DecisionEncoding {
                positive: 1.0,
                negative: 0.0,
            },
        };
        ds.validate()?;
        Ok(ds)
    }

    /// Builds a dataset from row-major attribute values.
    pub fn from_rows(labels: Vec<String>, rows: &[Vec<f64>], decision: Vec<bool>) -> Result<Self> {
        let n = labels.len();
        let mut columns = vec![Vec::with_capacity(rows.len()); n];
        for row in rows {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    actual: row.len(),
                });
            }
            for (col, &v) in columns.iter_mut().zip(row) {
                col.push(v);
            }
        }
        Dataset::new(labels, columns, decision)
    }

    fn validate(&self) -> Result<()> {
        if self.decision.is_empty() {
            return Err(Error::EmptyDataset);
        }
        if self.labels.is_empty() {
            return Err(Error::NoAttributes);
        }
        if self.labels.len() != self.columns.len() {
            return Err(Error::LengthMismatch {
                expected: self.labels.len(),
                actual: self.columns.len(),
            });
        }
        let mut seen = HashSet::new();
        for (j, label) in self.labels.iter().enumerate() {
            if label.trim().is_empty() {
                return Err(Error::EmptyLabel(j));
            }
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let m = self.decision.len();
        for (label, col) in self.labels.iter().zip(&self.columns) {
            if col.len() != m {
                return Err(Error::LengthMismatch {
                    expected: m,
                    actual: col.len(),
                });
            }
            if let Some(row) = col.iter().position(|v| !v.is_finite()) {
                return Err(Error::NonFinite {
                    column: label.clone(),
                    row,
                });
            }
        }
        let positives = self.decision.iter().filter(|&&d| d).count();
        if positives == 0 || positives == m {
            return Err(Error::SingleClass);
        }
        Ok(())
    }

    /// Number of examples (rows).
    pub fn n_examples(&self) -> usize {
        self.decision.len()
    }

    /// Number of items (attribute columns).
    pub fn n_attributes(&self) -> usize {
        self.labels.len()
    }

    pub fn n_positive(&self) -> usize {
        self.decision.iter().filter(|&&d| d).count()
    }

    pub fn n_negative(&self) -> usize {
        self.n_examples() - self.n_positive()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn columns(&self) -> &[Vec<f64>] {
        &self.columns
    }

    pub fn column(&self, index: usize) -> &[f64] {
        &self.columns[index]
    }

    pub fn column_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn decision(&self) -> &[bool] {
        &self.decision
    }

    /// Rows removed during loading because a cell was missing or unparseable.
    pub fn dropped_rows(&self) -> usize {
        self.dropped_rows
    }

    pub fn encoding(&self) -> DecisionEncoding {
        self.encoding
    }

    pub fn row(&self, index: usize) -> Vec<f64> {
        self.columns.iter().map(|c| c[index]).collect()
    }

    /// Attribute values in row-major order.
    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n_examples()).map(|i| self.row(i)).collect()
    }

    /// Restricts the dataset to `cols`, in the order given.
    pub fn select_columns(&self, cols: &ColumnSelection) -> Result<Dataset> {
        let idx = cols.resolve(self)?;
        if idx.is_empty() {
            return Err(Error::NoAttributes);
        }
        Ok(Dataset {
            labels: idx.iter().map(|&j| self.labels[j].clone()).collect(),
            columns: idx.iter().map(|&j| self.columns[j].clone()).collect(),
            decision: self.decision.clone(),
            dropped_rows: self.dropped_rows,
            encoding: self.encoding,
        })
    }

    /// Drops the named columns, keeping the remaining ones in file order.
    pub fn exclude_columns<S: AsRef<str>>(&self, labels: &[S]) -> Result<Dataset> {
        let mut drop = HashSet::new();
        for l in labels {
            let l = l.as_ref();
            let j = self
                .column_index(l)
                .ok_or_else(|| Error::UnknownColumn(l.to_string()))?;
            if !drop.insert(j) {
                return Err(Error::DuplicateColumn(l.to_string()));
            }
        }
        let keep = (0..self.n_attributes())
            .filter(|j| !drop.contains(j))
            .collect();
        self.select_columns(&ColumnSelection::Indices(keep))
    }

    /// Reverse-codes the given columns, mapping each value `x` to
    /// `min + max - x` so the column keeps its range.
    pub fn reverse_columns(&self, indices: &[usize]) -> Result<Dataset> {
        let mut out = self.clone();
        for &j in indices {
            let col = out.columns.get_mut(j).ok_or(Error::IndexOutOfRange {
                index: j,
                len: self.labels.len(),
            })?;
            let (lo, hi) = col
                .iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
                    (lo.min(v), hi.max(v))
                });
            for v in col.iter_mut() {
                *v = lo + hi - *v;
            }
        }
        Ok(out)
    }

    /// Reads a comma-separated file with a header row.
    ///
    /// Rows with any missing or non-numeric cell are dropped and counted in
    /// [`Dataset::dropped_rows`]. Attribute order follows the file.
    pub fn load_csv<P: AsRef<Path>>(
        path: P,
        decision_column: &str,
        positive: PositiveValue,
    ) -> Result<Dataset> {
        let file = std::fs::File::open(path)?;
        Dataset::read_csv(file, decision_column, positive)
    }

    pub fn read_csv<R: std::io::Read>(
        reader: R,
        decision_column: &str,
        positive: PositiveValue,
    ) -> Result<Dataset> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(true)
            .flexible(true)
            .trim(csv::Trim::All)
            .from_reader(reader);
        let header: Vec<String> = rdr.headers()?.iter().map(|h| h.to_string()).collect();
        let d = header
            .iter()
            .position(|h| h == decision_column)
            .ok_or_else(|| Error::MissingDecisionColumn(decision_column.to_string()))?;
        let labels: Vec<String> = header
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != d)
            .map(|(_, h)| h.clone())
            .collect();
        if labels.is_empty() {
            return Err(Error::NoAttributes);
        }

        let mut columns = vec![Vec::new(); labels.len()];
        let mut raw_decision = Vec::new();
        let mut dropped = 0;
        let mut values = Vec::with_capacity(header.len());
        for record in rdr.records() {
            let record = record?;
            values.clear();
            let complete = record.len() == header.len()
                && record.iter().all(|cell| match parse_cell(cell) {
                    Some(v) => {
                        values.push(v);
                        true
                    }
                    None => false,
                });
            if !complete {
                dropped += 1;
                continue;
            }
            raw_decision.push(values[d]);
            let attrs = values.iter().enumerate().filter(|&(j, _)| j != d);
            for (col, (_, &v)) in columns.iter_mut().zip(attrs) {
                col.push(v);
            }
        }

        if raw_decision.is_empty() {
            return Err(Error::EmptyDataset);
        }
        let encoding = encode_decision(&raw_decision, positive)?;
        let decision = raw_decision
            .iter()
            .map(|&v| v == encoding.positive)
            .collect();
        let mut ds = Dataset::new(labels, columns, decision)?;
        ds.dropped_rows = dropped;
        ds.encoding = encoding;
        Ok(ds)
    }
}

fn parse_cell(cell: &str) -> Option<f64> {
    cell.parse::<f64>().ok().filter(|v| v.is_finite())
}

fn encode_decision(values: &[f64], positive: PositiveValue) -> Result<DecisionEncoding> {
    let mut distinct: Vec<f64> = values.to_vec();
    distinct.sort_by(f64::total_cmp);
    distinct.dedup();
    match distinct.len() {
        1 => return Err(Error::SingleClass),
        2 => {}
        found => return Err(Error::NotBinaryDecision { found }),
    }
    let (lo, hi) = (distinct[0], distinct[1]);
    match positive {
        PositiveValue::Auto => Ok(DecisionEncoding {
            positive: hi,
            negative: lo,
        }),
        PositiveValue::Value(p) if p == hi => Ok(DecisionEncoding {
            positive: hi,
            negative: lo,
        }),
        PositiveValue::Value(p) if p == lo => Ok(DecisionEncoding {
            positive: lo,
            negative: hi,
        }),
        PositiveValue::Value(p) => Err(Error::UnknownPositiveValue(p)),
    }
}

/// An ordered subset of attribute columns.
#[derive(Debug, Clone, PartialEq)]
pub enum ColumnSelection {
    All,
    Indices(Vec<usize>),
    Labels(Vec<String>),
}

impl ColumnSelection {
    pub fn labels<S: AsRef<str>>(labels: &[S]) -> Self {
        ColumnSelection::Labels(labels.iter().map(|s| s.as_ref().to_string()).collect())
    }

    /// Resolves to column indices of `ds`, rejecting unknown or repeated
    /// columns.
    pub fn resolve(&self, ds: &Dataset) -> Result<Vec<usize>> {
        let idx: Vec<usize> = match self {
            ColumnSelection::All => return Ok((0..ds.n_attributes()).collect()),
            ColumnSelection::Indices(v) => {
                for &j in v {
                    if j >= ds.n_attributes() {
                        return Err(Error::UnknownColumn(format!("#{j}")));
                    }
                }
                v.clone()
            }
            ColumnSelection::Labels(v) => v
                .iter()
                .map(|l| {
                    ds.column_index(l)
                        .ok_or_else(|| Error::UnknownColumn(l.clone()))
                })
                .collect::<Result<_>>()?,
        };
        let mut seen = HashSet::new();
        for &j in &idx {
            if !seen.insert(j) {
                return Err(Error::DuplicateColumn(ds.labels[j].clone()));
            }
        }
        Ok(idx)
    }
}
