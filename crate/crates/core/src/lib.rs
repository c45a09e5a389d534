//! Rating scale reduction driven by the area under the ROC curve.
//!
//! The items of a scale are ranked by how well each one alone separates
//! the two classes of an external binary decision. The scale is then grown
//! in rank order, summing item scores, until adding the next item stops
//! raising the AUC of the total.
//!
//! ```
//! use rsr_core::{rsr, Dataset};
//!
//! let ds = Dataset::new(
//!     vec!["q1".into(), "q2".into()],
//!     vec![vec![0.0, 1.0, 2.0, 3.0], vec![1.0, 0.0, 1.0, 0.0]],
//!     vec![false, false, true, true],
//! )
//! .unwrap();
//! let scale = rsr(&ds).unwrap();
//! assert_eq!(scale.items, vec!["q1"]);
//! ```

pub mod compare;
pub mod dataset;
pub mod error;
pub mod hygiene;
pub mod reduction;
pub mod roc;

pub use compare::{
    bootstrap_test, check_attr_for_inclusion, delong_covariance, delong_test, Alternative,
    InclusionCheck, InclusionOptions, Method, PairedRocTest, DEFAULT_N_BOOT,
};
pub use dataset::{ColumnSelection, Dataset, DecisionEncoding, PositiveValue};
pub use error::{Error, Result};
pub use hygiene::{
    diff_examples, gray_examples, gray_examples_for, gray_groups, unique_examples, DuplicateReport,
    GrayGroup, GrayPair,
};
pub use reduction::{
    reduction_ratio, rsr, rsr_with, start_auc, start_auc_with, total_auc, total_auc_with,
    AucRanking, ItemAuc, ReducedScale, StopReason,
};
pub use roc::{
    auc, placements, roc_curve, sum_scores, Direction, PlacementValues, RocCurve, RocPoint,
};
