//! Stepwise rating scale reduction.
//!
//! Items are ranked by their individual AUC, largest first. The scale is
//! then grown one ranked item at a time, scoring each prefix by the AUC of
//! its unweighted row sum, and cut at the first prefix whose successor
//! does not raise the AUC.

use rayon::prelude::*;
use serde::Serialize;

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::roc::{auc, Direction};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ItemAuc {
    pub label: String,
    pub auc: f64,
}

/// AUC of every item on its own, in column order.
pub fn start_auc(ds: &Dataset) -> Result<Vec<ItemAuc>> {
    start_auc_with(ds, Direction::Fixed)
}

pub fn start_auc_with(ds: &Dataset, direction: Direction) -> Result<Vec<ItemAuc>> {
    ds.columns()
        .par_iter()
        .zip(ds.labels())
        .map(|(col, label)| {
            Ok(ItemAuc {
                label: label.clone(),
                auc: direction.orient(auc(col, ds.decision())?),
            })
        })
        .collect()
}

/// Items in ranked order together with the AUC of each running total.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AucRanking {
    pub direction: Direction,
    /// Labels sorted by single-item AUC, largest first; ties keep column order.
    pub order: Vec<String>,
    /// Column index in the source dataset for each entry of `order`.
    pub columns: Vec<usize>,
    pub single_auc: Vec<f64>,
    /// `running_auc[k]` is the AUC of the sum of the first `k + 1` ranked items.
    pub running_auc: Vec<f64>,
}

impl AucRanking {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

pub fn total_auc(ds: &Dataset) -> Result<AucRanking> {
    total_auc_with(ds, Direction::Fixed)
}

pub fn total_auc_with(ds: &Dataset, direction: Direction) -> Result<AucRanking> {
    let single = start_auc_with(ds, direction)?;
    let mut columns: Vec<usize> = (0..single.len()).collect();
    columns.sort_by(|&a, &b| single[b].auc.total_cmp(&single[a].auc));

    let mut totals = Vec::with_capacity(columns.len());
    let mut running = vec![0.0; ds.n_examples()];
    for &j in &columns {
        for (t, v) in running.iter_mut().zip(ds.column(j)) {
            *t += v;
        }
        totals.push(running.clone());
    }
    let running_auc = totals
        .par_iter()
        .map(|t| auc(t, ds.decision()).map(|a| direction.orient(a)))
        .collect::<Result<Vec<f64>>>()?;

    Ok(AucRanking {
        direction,
        order: columns.iter().map(|&j| single[j].label.clone()).collect(),
        single_auc: columns.iter().map(|&j| single[j].auc).collect(),
        columns,
        running_auc,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StopReason {
    /// The next ranked item did not raise the running AUC.
    FirstDecrease,
    /// Every item raised the running AUC.
    ExhaustedAllItems,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReducedScale {
    pub items: Vec<String>,
    pub columns: Vec<usize>,
    pub auc_trajectory: Vec<f64>,
    pub achieved_auc: f64,
    pub stop_reason: StopReason,
}

impl ReducedScale {
    /// Truncates a ranking at its first maximum.
    pub fn from_ranking(ranking: &AucRanking) -> Result<Self> {
        if ranking.is_empty() {
            return Err(Error::NoAttributes);
        }
        let run = &ranking.running_auc;
        let keep = run
            .windows(2)
            .position(|w| w[1] <= w[0])
            .map_or(run.len(), |k| k + 1);
        let stop_reason = if keep == run.len() {
            StopReason::ExhaustedAllItems
        } else {
            StopReason::FirstDecrease
        };
        Ok(ReducedScale {
            items: ranking.order[..keep].to_vec(),
            columns: ranking.columns[..keep].to_vec(),
            auc_trajectory: run[..keep].to_vec(),
            achieved_auc: run[keep - 1],
            stop_reason,
        })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

pub fn rsr(ds: &Dataset) -> Result<ReducedScale> {
    rsr_with(ds, Direction::Fixed)
}

pub fn rsr_with(ds: &Dataset, direction: Direction) -> Result<ReducedScale> {
    ReducedScale::from_ranking(&total_auc_with(ds, direction)?)
}

/// Fraction of the original items that the reduced scale keeps.
pub fn reduction_ratio(scale: &ReducedScale, n_original: usize) -> Result<f64> {
    let selected = scale.len();
    if selected == 0 || n_original < selected {
        return Err(Error::InvalidCount {
            selected,
            original: n_original,
        });
    }
    Ok(selected as f64 / n_original as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(cols: Vec<Vec<f64>>, decision: Vec<bool>) -> Dataset {
        let labels = (0..cols.len()).map(|j| format!("x{j}")).collect();
        Dataset::new(labels, cols, decision).unwrap()
    }

    #[test]
    fn start_auc_perfect_column() {
        let d = ds(
            vec![vec![0.0, 1.0, 2.0, 3.0]],
            vec![false, false, true, true],
        );
        assert_eq!(
            start_auc(&d).unwrap(),
            vec![ItemAuc {
                label: "x0".into(),
                auc: 1.0
            }]
        );
    }

    #[test]
    fn single_item_scale() {
        let d = ds(
            vec![vec![0.0, 2.0, 1.0, 3.0]],
            vec![false, false, true, true],
        );
        let r = total_auc(&d).unwrap();
        assert_eq!(r.running_auc, r.single_auc);
        let s = rsr(&d).unwrap();
        assert_eq!(s.items, vec!["x0"]);
        assert_eq!(s.stop_reason, StopReason::ExhaustedAllItems);
        assert_eq!(reduction_ratio(&s, 1).unwrap(), 1.0);
    }

    #[test]
    fn duplicate_column_does_not_improve() {
        let col = vec![0.0, 2.0, 1.0, 3.0, 1.0];
        let decision = vec![false, false, true, true, false];
        let d = ds(vec![col.clone(), col], decision);
        let r = total_auc(&d).unwrap();
        assert_eq!(r.running_auc[0], r.running_auc[1]);
        let s = rsr(&d).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.stop_reason, StopReason::FirstDecrease);
    }

    #[test]
    fn ties_keep_column_order() {
        let a = vec![0.0, 1.0, 1.0, 2.0];
        let d = ds(
            vec![a.clone(), a.clone(), a],
            vec![false, true, false, true],
        );
        assert_eq!(total_auc(&d).unwrap().order, vec!["x0", "x1", "x2"]);
    }

    #[test]
    fn ranks_largest_first() {
        let d = ds(
            vec![
                vec![1.0, 0.0, 1.0, 0.0],
                vec![0.0, 0.0, 1.0, 1.0],
                vec![0.0, 1.0, 1.0, 1.0],
            ],
            vec![false, false, true, true],
        );
        let r = total_auc(&d).unwrap();
        assert_eq!(r.order, vec!["x1", "x2", "x0"]);
        assert_eq!(r.single_auc, vec![1.0, 0.75, 0.5]);
        assert_eq!(r.columns, vec![1, 2, 0]);
    }

    #[test]
    fn auto_direction_reports_oriented_auc() {
        let d = ds(
            vec![vec![3.0, 2.0, 1.0, 0.0], vec![0.0, 1.0, 1.0, 1.0]],
            vec![false, false, true, true],
        );
        assert_eq!(total_auc(&d).unwrap().order, vec!["x1", "x0"]);
        let r = total_auc_with(&d, Direction::Auto).unwrap();
        assert_eq!(r.order, vec!["x0", "x1"]);
        assert_eq!(r.single_auc, vec![1.0, 0.75]);
    }

    #[test]
    fn ratio() {
        let scale = |n: usize| ReducedScale {
            items: (0..n).map(|i| i.to_string()).collect(),
            columns: (0..n).collect(),
            auc_trajectory: vec![0.5; n],
            achieved_auc: 0.5,
            stop_reason: StopReason::FirstDecrease,
        };
        assert!((reduction_ratio(&scale(6), 21).unwrap() - 0.2857).abs() < 5e-5);
        assert!((reduction_ratio(&scale(2), 18).unwrap() - 0.1111).abs() < 5e-5);
        assert_eq!(reduction_ratio(&scale(4), 4).unwrap(), 1.0);
        assert!(matches!(
            reduction_ratio(&scale(5), 4),
            Err(Error::InvalidCount { .. })
        ));
        assert!(matches!(
            reduction_ratio(&scale(0), 4),
            Err(Error::InvalidCount { .. })
        ));
    }
}
