//! ROC curves, tie-aware AUC and DeLong placement values.
//!
//! Orientation is fixed: a higher score ranks an example toward the
//! positive class. Tied scores count one half in every pairwise comparison,
//! which makes the trapezoidal area under the curve and the Mann-Whitney
//! statistic the same number.

use serde::Serialize;

use crate::dataset::{ColumnSelection, Dataset};
use crate::error::{Error, Result};

/// How an AUC is reported when ranking items.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Higher score means positive; an item that works backwards scores
    /// below 0.5.
    #[default]
    Fixed,
    /// Each score vector is judged in whichever direction separates best,
    /// i.e. the reported AUC is `max(auc, 1 - auc)`. Scores themselves are
    /// never altered.
    Auto,
}

impl Direction {
    pub fn orient(self, auc: f64) -> f64 {
        match self {
            Direction::Fixed => auc,
            Direction::Auto => auc.max(1.0 - auc),
        }
    }
}

/// Counts positives and negatives after checking the inputs line up.
pub(crate) fn class_counts(scores: &[f64], decision: &[bool]) -> Result<(usize, usize)> {
    if scores.len() != decision.len() {
        return Err(Error::LengthMismatch {
            expected: decision.len(),
            actual: scores.len(),
        });
    }
    if let Some(row) = scores.iter().position(|s| !s.is_finite()) {
        return Err(Error::NonFinite {
            column: "scores".into(),
            row,
        });
    }
    let pos = decision.iter().filter(|&&d| d).count();
    let neg = decision.len() - pos;
    if pos == 0 || neg == 0 {
        return Err(Error::SingleClass);
    }
    Ok((pos, neg))
}

/// Indices of `scores` in ascending score order.
fn ascending(scores: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[a].total_cmp(&scores[b]));
    order
}

/// Area under the ROC curve, `(1/PN) Σ ψ(s_i, s_j)` over positive/negative
/// pairs, evaluated through mid-ranks in `O(m log m)`.
pub fn auc(scores: &[f64], decision: &[bool]) -> Result<f64> {
    let (pos, neg) = class_counts(scores, decision)?;
    let order = ascending(scores);

    // Sum of doubled mid-ranks of the positives; a tie group at sorted
    // positions i..j has doubled mid-rank i + j + 1.
    let mut rank_sum2: u64 = 0;
    let mut i = 0;
    while i < order.len() {
        let mut j = i + 1;
        while j < order.len() && scores[order[j]] == scores[order[i]] {
            j += 1;
        }
        let pos_in_group = order[i..j].iter().filter(|&&k| decision[k]).count() as u64;
        rank_sum2 += (i + j + 1) as u64 * pos_in_group;
        i = j;
    }
    let (p, n) = (pos as u64, neg as u64);
    let u2 = rank_sum2 - p * (p + 1);
    Ok(u2 as f64 / (2 * p * n) as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RocPoint {
    /// Cut-off: an example is called positive when its score is `>= threshold`.
    pub threshold: f64,
    pub fpr: f64,
    pub tpr: f64,
    pub true_positives: usize,
    pub false_positives: usize,
}

/// The four outcomes at one cut-off.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConfusionMatrix {
    pub true_positives: usize,
    pub false_positives: usize,
    pub true_negatives: usize,
    pub false_negatives: usize,
}

impl ConfusionMatrix {
    pub fn sensitivity(&self) -> f64 {
        self.true_positives as f64 / (self.true_positives + self.false_negatives) as f64
    }

    pub fn specificity(&self) -> f64 {
        self.true_negatives as f64 / (self.true_negatives + self.false_positives) as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RocCurve {
    pub points: Vec<RocPoint>,
    pub auc: f64,
    pub n_pos: usize,
    pub n_neg: usize,
}

impl RocCurve {
    pub fn confusion(&self, point: usize) -> ConfusionMatrix {
        let p = &self.points[point];
        ConfusionMatrix {
            true_positives: p.true_positives,
            false_positives: p.false_positives,
            true_negatives: self.n_neg - p.false_positives,
            false_negatives: self.n_pos - p.true_positives,
        }
    }
}

/// ROC curve with one point per distinct score, preceded by the `(0, 0)`
/// point at threshold `+inf`. The last point is always `(1, 1)`.
pub fn roc_curve(scores: &[f64], decision: &[bool]) -> Result<RocCurve> {
    let (pos, neg) = class_counts(scores, decision)?;
    let mut order = ascending(scores);
    order.reverse();

    let mut points = Vec::with_capacity(order.len() + 1);
    points.push(RocPoint {
        threshold: f64::INFINITY,
        fpr: 0.0,
        tpr: 0.0,
        true_positives: 0,
        false_positives: 0,
    });
    let (mut tp, mut fp) = (0usize, 0usize);
    // Twice the trapezoid area in units of 1/(PN), kept in integers.
    let mut area2: u64 = 0;
    let mut i = 0;
    while i < order.len() {
        let threshold = scores[order[i]];
        let (tp_prev, fp_prev) = (tp, fp);
        while i < order.len() && scores[order[i]] == threshold {
            if decision[order[i]] {
                tp += 1;
            } else {
                fp += 1;
            }
            i += 1;
        }
        area2 += ((fp - fp_prev) * (tp + tp_prev)) as u64;
        points.push(RocPoint {
            threshold,
            fpr: fp as f64 / neg as f64,
            tpr: tp as f64 / pos as f64,
            true_positives: tp,
            false_positives: fp,
        });
    }
    Ok(RocCurve {
        points,
        auc: area2 as f64 / (2 * pos * neg) as f64,
        n_pos: pos,
        n_neg: neg,
    })
}

/// Per-observation means of the pairwise kernel ψ.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlacementValues {
    /// One entry per positive, in data order.
    pub v10: Vec<f64>,
    /// One entry per negative, in data order.
    pub v01: Vec<f64>,
}

impl PlacementValues {
    pub fn auc(&self) -> f64 {
        self.v10.iter().sum::<f64>() / self.v10.len() as f64
    }
}

pub fn placements(scores: &[f64], decision: &[bool]) -> Result<PlacementValues> {
    let (pos, neg) = class_counts(scores, decision)?;
    let mut pos_sorted: Vec<f64> = Vec::with_capacity(pos);
    let mut neg_sorted: Vec<f64> = Vec::with_capacity(neg);
    for (&s, &d) in scores.iter().zip(decision) {
        if d {
            pos_sorted.push(s);
        } else {
            neg_sorted.push(s);
        }
    }
    pos_sorted.sort_by(f64::total_cmp);
    neg_sorted.sort_by(f64::total_cmp);

    let mut v10 = Vec::with_capacity(pos);
    let mut v01 = Vec::with_capacity(neg);
    for (&s, &d) in scores.iter().zip(decision) {
        if d {
            let below = neg_sorted.partition_point(|&x| x < s);
            let at_or_below = neg_sorted.partition_point(|&x| x <= s);
            v10.push((2 * below + (at_or_below - below)) as f64 / (2 * neg) as f64);
        } else {
            let below = pos_sorted.partition_point(|&x| x < s);
            let at_or_below = pos_sorted.partition_point(|&x| x <= s);
            let above = pos - at_or_below;
            v01.push((2 * above + (at_or_below - below)) as f64 / (2 * pos) as f64);
        }
    }
    Ok(PlacementValues { v10, v01 })
}

/// Unweighted row sums of the selected columns, added in selection order.
pub fn sum_scores(ds: &Dataset, cols: &ColumnSelection) -> Result<Vec<f64>> {
    let idx = cols.resolve(ds)?;
    if idx.is_empty() {
        return Err(Error::NoAttributes);
    }
    let mut total = vec![0.0; ds.n_examples()];
    for j in idx {
        for (t, v) in total.iter_mut().zip(ds.column(j)) {
            *t += v;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn split(pos: &[f64], neg: &[f64]) -> (Vec<f64>, Vec<bool>) {
        let scores = pos.iter().chain(neg).copied().collect();
        let decision = pos
            .iter()
            .map(|_| true)
            .chain(neg.iter().map(|_| false))
            .collect();
        (scores, decision)
    }

    #[test]
    fn auc_examples() {
        let (s, d) = split(&[2.0, 3.0], &[0.0, 1.0]);
        assert_eq!(auc(&s, &d).unwrap(), 1.0);
        let (s, d) = split(&[4.0, 4.0, 4.0], &[4.0, 4.0]);
        assert_eq!(auc(&s, &d).unwrap(), 0.5);
        let (s, d) = split(&[1.0, 2.0], &[1.0, 0.0]);
        assert_eq!(auc(&s, &d).unwrap(), 0.875);
    }

    #[test]
    fn auc_single_class() {
        assert!(matches!(
            auc(&[1.0, 2.0], &[true, true]),
            Err(Error::SingleClass)
        ));
        assert!(matches!(
            roc_curve(&[1.0], &[false]),
            Err(Error::SingleClass)
        ));
        assert!(matches!(
            placements(&[1.0], &[true]),
            Err(Error::SingleClass)
        ));
    }

    #[test]
    fn auc_input_checks() {
        assert!(matches!(
            auc(&[1.0], &[true, false]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            auc(&[1.0, f64::NAN], &[true, false]),
            Err(Error::NonFinite { .. })
        ));
    }

    #[test]
    fn negative_zero_ties_with_zero() {
        let s = [0.0, -0.0];
        assert_eq!(auc(&s, &[true, false]).unwrap(), 0.5);
        assert_eq!(roc_curve(&s, &[true, false]).unwrap().points.len(), 2);
    }

    #[test]
    fn curve_examples() {
        let (s, d) = split(&[2.0, 3.0], &[0.0, 1.0]);
        let c = roc_curve(&s, &d).unwrap();
        assert!(c.points.iter().any(|p| p.fpr == 0.0 && p.tpr == 1.0));
        assert_eq!(c.auc, 1.0);

        let c = roc_curve(&[1.0, 0.0], &[true, false]).unwrap();
        let xy: Vec<(f64, f64)> = c.points.iter().map(|p| (p.fpr, p.tpr)).collect();
        assert_eq!(xy, vec![(0.0, 0.0), (0.0, 1.0), (1.0, 1.0)]);
        assert_eq!(c.points[0].threshold, f64::INFINITY);
    }

    #[test]
    fn curve_collapses_ties() {
        let (s, d) = split(&[1.0, 2.0, 2.0], &[2.0, 0.0]);
        let c = roc_curve(&s, &d).unwrap();
        // +inf, 2, 1, 0
        assert_eq!(c.points.len(), 4);
        assert_eq!(c.auc, auc(&s, &d).unwrap());
        let cm = c.confusion(1);
        assert_eq!(
            (
                cm.true_positives,
                cm.false_positives,
                cm.true_negatives,
                cm.false_negatives
            ),
            (2, 1, 1, 1)
        );
        assert!((cm.sensitivity() - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(cm.specificity(), 0.5);
    }

    #[test]
    fn placement_examples() {
        let (s, d) = split(&[2.0, 3.0], &[0.0, 1.0]);
        let pv = placements(&s, &d).unwrap();
        assert_eq!(pv.v10, vec![1.0, 1.0]);
        assert_eq!(pv.v01, vec![1.0, 1.0]);

        let pv = placements(&[1.0, 1.0], &[true, false]).unwrap();
        assert_eq!(pv.v10, vec![0.5]);
        assert_eq!(pv.v01, vec![0.5]);

        let (s, d) = split(&[1.0, 2.0], &[1.0, 0.0]);
        let pv = placements(&s, &d).unwrap();
        assert_eq!(pv.v10, vec![0.75, 1.0]);
        assert_eq!(pv.v01, vec![0.75, 1.0]);
        assert_eq!(pv.auc(), 0.875);
    }

    #[test]
    fn sum_scores_examples() {
        let ds = Dataset::new(
            vec!["a".into(), "z1".into(), "z2".into()],
            vec![vec![1.0, 2.0, 3.0], vec![0.0; 3], vec![0.0; 3]],
            vec![true, false, true],
        )
        .unwrap();
        assert_eq!(
            sum_scores(&ds, &ColumnSelection::labels(&["a"])).unwrap(),
            vec![1.0, 2.0, 3.0]
        );
        assert_eq!(
            sum_scores(&ds, &ColumnSelection::labels(&["z1", "z2"])).unwrap(),
            vec![0.0; 3]
        );
        assert!(matches!(
            sum_scores(&ds, &ColumnSelection::labels(&["q"])),
            Err(Error::UnknownColumn(_))
        ));
        assert!(matches!(
            sum_scores(&ds, &ColumnSelection::Indices(vec![])),
            Err(Error::NoAttributes)
        ));
    }

    #[test]
    fn direction_orient() {
        assert_eq!(Direction::Fixed.orient(0.25), 0.25);
        assert_eq!(Direction::Auto.orient(0.25), 0.75);
        assert_eq!(Direction::Auto.orient(0.8), 0.8);
    }
}
