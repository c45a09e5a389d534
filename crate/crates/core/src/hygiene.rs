//! Duplicate and gray-example screening.
//!
//! Rows are compared by exact value equality on every attribute (`-0.0`
//! equals `0.0`). Nothing is removed; callers decide what to do with the
//! reports.

use std::collections::HashMap;

use serde::Serialize;

use crate::dataset::Dataset;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DuplicateReport {
    pub total_examples: usize,
    pub distinct_examples: usize,
    pub duplicate_examples: usize,
}

/// Two examples with identical attributes and opposite decisions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrayPair {
    pub row_index_a: usize,
    pub row_index_b: usize,
    pub attribute_values: Vec<f64>,
    pub decision_a: bool,
    pub decision_b: bool,
}

/// All examples sharing one attribute vector, when that vector occurs with
/// both decisions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrayGroup {
    pub rows: Vec<usize>,
    pub attribute_values: Vec<f64>,
    pub n_positive: usize,
    pub n_negative: usize,
}

fn row_key(row: &[f64]) -> Vec<u64> {
    // +0.0 folds -0.0 into 0.0
    row.iter().map(|&v| (v + 0.0).to_bits()).collect()
}

fn check_rows(rows: &[Vec<f64>]) -> Result<()> {
    let first = rows.first().ok_or(Error::EmptyDataset)?;
    if let Some(bad) = rows.iter().find(|r| r.len() != first.len()) {
        return Err(Error::LengthMismatch {
            expected: first.len(),
            actual: bad.len(),
        });
    }
    Ok(())
}

fn check_decision(rows: &[Vec<f64>], decision: &[bool]) -> Result<()> {
    check_rows(rows)?;
    if decision.len() != rows.len() {
        return Err(Error::LengthMismatch {
            expected: rows.len(),
            actual: decision.len(),
        });
    }
    Ok(())
}

/// Groups row indices by identical attribute vectors. Groups are ordered by
/// their first row; indices within a group ascend.
pub fn group_rows(rows: &[Vec<f64>]) -> Vec<Vec<usize>> {
    let mut slot: HashMap<Vec<u64>, usize> = HashMap::with_capacity(rows.len());
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let g = *slot.entry(row_key(row)).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(i);
    }
    groups
}

/// Counts distinct attribute rows. The decision is not part of the key.
pub fn diff_examples(rows: &[Vec<f64>]) -> Result<DuplicateReport> {
    check_rows(rows)?;
    let distinct = group_rows(rows).len();
    Ok(DuplicateReport {
        total_examples: rows.len(),
        distinct_examples: distinct,
        duplicate_examples: rows.len() - distinct,
    })
}

/// Every pair `(a, b)`, `a < b`, with equal attributes and different
/// decisions, sorted by `(a, b)`.
pub fn gray_examples(rows: &[Vec<f64>], decision: &[bool]) -> Result<Vec<GrayPair>> {
    check_decision(rows, decision)?;
    let mut pairs = Vec::new();
    for group in group_rows(rows) {
        for (k, &a) in group.iter().enumerate() {
            for &b in &group[k + 1..] {
                if decision[a] != decision[b] {
                    pairs.push(GrayPair {
                        row_index_a: a,
                        row_index_b: b,
                        attribute_values: rows[a].clone(),
                        decision_a: decision[a],
                        decision_b: decision[b],
                    });
                }
            }
        }
    }
    pairs.sort_by_key(|p| (p.row_index_a, p.row_index_b));
    Ok(pairs)
}

/// Attribute patterns that occur with both decisions, ordered by first
/// occurrence.
pub fn gray_groups(rows: &[Vec<f64>], decision: &[bool]) -> Result<Vec<GrayGroup>> {
    check_decision(rows, decision)?;
    Ok(group_rows(rows)
        .into_iter()
        .filter_map(|g| {
            let n_positive = g.iter().filter(|&&i| decision[i]).count();
            let n_negative = g.len() - n_positive;
            (n_positive > 0 && n_negative > 0).then(|| GrayGroup {
                attribute_values: rows[g[0]].clone(),
                rows: g,
                n_positive,
                n_negative,
            })
        })
        .collect())
}

/// Row `n` followed by every other row with the same attribute values, in
/// ascending order, whatever their decision.
pub fn gray_examples_for(rows: &[Vec<f64>], n: usize) -> Result<Vec<usize>> {
    if n >= rows.len() {
        return Err(Error::IndexOutOfRange {
            index: n,
            len: rows.len(),
        });
    }
    check_rows(rows)?;
    let key = row_key(&rows[n]);
    let mut out = vec![n];
    out.extend(
        rows.iter()
            .enumerate()
            .filter(|&(j, r)| j != n && row_key(r) == key)
            .map(|(j, _)| j),
    );
    Ok(out)
}

/// Keeps the first occurrence of every distinct (attributes, decision)
/// combination.
pub fn unique_examples(ds: &Dataset) -> Dataset {
    let rows = ds.rows();
    let mut seen = std::collections::HashSet::new();
    let keep: Vec<usize> = (0..ds.n_examples())
        .filter(|&i| seen.insert((row_key(&rows[i]), ds.decision()[i])))
        .collect();
    let kept_rows: Vec<Vec<f64>> = keep.iter().map(|&i| rows[i].clone()).collect();
    let decision = keep.iter().map(|&i| ds.decision()[i]).collect();
    // Both classes survive deduplication, so this cannot fail.
    Dataset::from_rows(ds.labels().to_vec(), &kept_rows, decision)
        .expect("deduplicated dataset keeps both classes")
}
