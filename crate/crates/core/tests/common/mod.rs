//! Brute-force reference implementations and data generators shared by the
//! integration tests. Nothing here calls into the code paths it checks.

#![allow(dead_code)]

use std::path::PathBuf;

use rand::Rng;
use rsr_core::{Dataset, PositiveValue};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn expected() -> serde_json::Value {
    let text = std::fs::read_to_string(data_path("expected.json")).unwrap();
    serde_json::from_str(&text).unwrap()
}

pub fn pbc() -> Dataset {
    Dataset::load_csv(data_path("pbc.csv"), "hepato", PositiveValue::Auto).unwrap()
}

pub fn scale21() -> Dataset {
    Dataset::load_csv(data_path("scale21.csv"), "reality", PositiveValue::Auto).unwrap()
}

pub fn f64s(v: &serde_json::Value) -> Vec<f64> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect()
}

pub fn strings(v: &serde_json::Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_string())
        .collect()
}

/// `2 * Σ ψ` over all positive/negative pairs, as an exact integer.
pub fn psi_twice(scores: &[f64], decision: &[bool]) -> (u64, u64) {
    let mut twice = 0u64;
    let mut pairs = 0u64;
    for (i, &si) in scores.iter().enumerate() {
        if !decision[i] {
            continue;
        }
        for (j, &sj) in scores.iter().enumerate() {
            if decision[j] {
                continue;
            }
            pairs += 1;
            twice += if si > sj {
                2
            } else if si == sj {
                1
            } else {
                0
            };
        }
    }
    (twice, pairs)
}

/// Mann-Whitney AUC by enumerating every positive/negative pair.
pub fn auc_pairs(scores: &[f64], decision: &[bool]) -> f64 {
    let (twice, pairs) = psi_twice(scores, decision);
    twice as f64 / (2 * pairs) as f64
}

fn psi(a: f64, b: f64) -> f64 {
    if a > b {
        1.0
    } else if a == b {
        0.5
    } else {
        0.0
    }
}

/// Placement values by direct enumeration.
pub fn placements_pairs(scores: &[f64], decision: &[bool]) -> (Vec<f64>, Vec<f64>) {
    let pos: Vec<f64> = scores
        .iter()
        .zip(decision)
        .filter(|(_, &d)| d)
        .map(|(&s, _)| s)
        .collect();
    let neg: Vec<f64> = scores
        .iter()
        .zip(decision)
        .filter(|(_, &d)| !d)
        .map(|(&s, _)| s)
        .collect();
    let v10 = pos
        .iter()
        .map(|&p| neg.iter().map(|&n| psi(p, n)).sum::<f64>() / neg.len() as f64)
        .collect();
    let v01 = neg
        .iter()
        .map(|&n| pos.iter().map(|&p| psi(p, n)).sum::<f64>() / pos.len() as f64)
        .collect();
    (v10, v01)
}

/// Area under a polyline by the trapezoid rule.
pub fn trapezoid(xy: &[(f64, f64)]) -> f64 {
    xy.windows(2)
        .map(|w| (w[1].0 - w[0].0) * (w[1].1 + w[0].1) / 2.0)
        .sum()
}

/// Row sums of the given columns, added in the given order.
pub fn prefix_sum(ds: &Dataset, cols: &[usize]) -> Vec<f64> {
    (0..ds.n_examples())
        .map(|i| cols.iter().fold(0.0, |acc, &j| acc + ds.column(j)[i]))
        .collect()
}

/// Best AUC over every non-empty subset of columns.
pub fn exhaustive_best_auc(ds: &Dataset) -> (f64, Vec<usize>) {
    let n = ds.n_attributes();
    let mut best = (f64::NEG_INFINITY, Vec::new());
    for mask in 1u32..(1 << n) {
        let cols: Vec<usize> = (0..n).filter(|j| mask & (1 << j) != 0).collect();
        let a = auc_pairs(&prefix_sum(ds, &cols), ds.decision());
        if a > best.0 {
            best = (a, cols);
        }
    }
    best
}

/// Count of distinct rows by comparing every pair of rows.
pub fn distinct_rows_quadratic(rows: &[Vec<f64>]) -> usize {
    (0..rows.len())
        .filter(|&i| (0..i).all(|k| rows[k] != rows[i]))
        .count()
}

/// Gray pairs by comparing every pair of rows.
pub fn gray_pairs_quadratic(rows: &[Vec<f64>], decision: &[bool]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..rows.len() {
        for b in a + 1..rows.len() {
            if rows[a] == rows[b] && decision[a] != decision[b] {
                out.push((a, b));
            }
        }
    }
    out
}

/// Integer scores in `0..levels`, with at least one example of each class.
pub fn random_scores<R: Rng>(rng: &mut R, m: usize, levels: i32) -> (Vec<f64>, Vec<bool>) {
    assert!(m >= 2);
    let scores = (0..m).map(|_| rng.gen_range(0..levels) as f64).collect();
    let mut decision: Vec<bool> = (0..m).map(|_| rng.gen_bool(0.5)).collect();
    decision[0] = true;
    decision[1] = false;
    (scores, decision)
}

/// A dataset of `n` integer-coded items whose mean rises with the decision
/// by a per-item amount, so items differ in usefulness.
pub fn random_scale<R: Rng>(rng: &mut R, m: usize, n: usize) -> Dataset {
    let mut decision: Vec<bool> = (0..m).map(|_| rng.gen_bool(0.5)).collect();
    decision[0] = true;
    decision[1] = false;
    let columns = (0..n)
        .map(|_| {
            let shift: f64 = rng.gen_range(-0.5..1.5);
            decision
                .iter()
                .map(|&d| {
                    let latent = rng.gen_range(0.0..3.0) + if d { shift } else { 0.0 };
                    latent.floor().clamp(0.0, 4.0)
                })
                .collect()
        })
        .collect();
    let labels = (0..n).map(|j| format!("item{j}")).collect();
    Dataset::new(labels, columns, decision).unwrap()
}

/// Rows on a small integer grid, with planted exact copies (some with the
/// decision flipped).
pub fn rows_with_clones<R: Rng>(rng: &mut R, m: usize, n: usize) -> (Vec<Vec<f64>>, Vec<bool>) {
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(m);
    let mut decision = Vec::with_capacity(m);
    while rows.len() < m {
        if !rows.is_empty() && rng.gen_bool(0.3) {
            let k = rng.gen_range(0..rows.len());
            rows.push(rows[k].clone());
            let flip = rng.gen_bool(0.5);
            decision.push(decision[k] ^ flip);
        } else {
            rows.push((0..n).map(|_| rng.gen_range(0..6) as f64).collect());
            decision.push(rng.gen_bool(0.5));
        }
    }
    (rows, decision)
}

/// Two score vectors that share a common signal, so their AUCs are
/// correlated.
pub fn correlated_scores<R: Rng>(rng: &mut R, m: usize) -> (Vec<f64>, Vec<f64>, Vec<bool>) {
    use rand_distr::{Distribution, StandardNormal};
    let mut decision: Vec<bool> = (0..m).map(|_| rng.gen_bool(0.5)).collect();
    decision[0] = true;
    decision[1] = false;
    let mut s1 = Vec::with_capacity(m);
    let mut s2 = Vec::with_capacity(m);
    for &d in &decision {
        let common: f64 = StandardNormal.sample(rng);
        let e1: f64 = StandardNormal.sample(rng);
        let e2: f64 = StandardNormal.sample(rng);
        let y = if d { 1.0 } else { 0.0 };
        s1.push(1.2 * y + common + 0.6 * e1);
        s2.push(0.8 * y + common + 0.6 * e2);
    }
    (s1, s2, decision)
}
