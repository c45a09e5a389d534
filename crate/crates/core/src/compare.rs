//! Tests for a difference between two correlated AUCs measured on the same
//! examples.

use libm::erfc;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::reduction::{total_auc_with, ReducedScale};
use crate::roc::{auc, class_counts, placements, Direction};

pub const DEFAULT_N_BOOT: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    DeLong,
    Bootstrap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Alternative {
    #[default]
    TwoSided,
    /// AUC of the first curve is smaller.
    Less,
    /// AUC of the first curve is larger.
    Greater,
}

impl Alternative {
    pub fn p_value(self, z: f64) -> f64 {
        let p = match self {
            Alternative::TwoSided => 2.0 * std_normal_cdf(-z.abs()),
            Alternative::Less => std_normal_cdf(z),
            Alternative::Greater => std_normal_cdf(-z),
        };
        p.min(1.0)
    }
}

pub fn std_normal_cdf(x: f64) -> f64 {
    0.5 * erfc(-x / std::f64::consts::SQRT_2)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairedRocTest {
    pub method: Method,
    pub alternative: Alternative,
    pub auc_1: f64,
    pub auc_2: f64,
    pub z: f64,
    pub p_value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_boot: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// DeLong estimate of the joint sampling (co)variance of two AUCs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeLongCovariance {
    pub auc_1: f64,
    pub auc_2: f64,
    pub var_1: f64,
    pub var_2: f64,
    pub cov: f64,
}

impl DeLongCovariance {
    pub fn var_difference(&self) -> f64 {
        self.var_1 + self.var_2 - 2.0 * self.cov
    }
}

fn sample_cov(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    x.iter()
        .zip(y)
        .map(|(a, b)| (a - mx) * (b - my))
        .sum::<f64>()
        / (n - 1.0)
}

/// Sample covariances of the placement values, divided by the class sizes
/// and summed. Needs at least two examples in each class.
pub fn delong_covariance(
    scores_1: &[f64],
    scores_2: &[f64],
    decision: &[bool],
) -> Result<DeLongCovariance> {
    let (pos, neg) = class_counts(scores_1, decision)?;
    class_counts(scores_2, decision)?;
    let a = placements(scores_1, decision)?;
    let b = placements(scores_2, decision)?;
    let (p, n) = (pos as f64, neg as f64);
    let term = |x10: &[f64], y10: &[f64], x01: &[f64], y01: &[f64]| {
        if pos < 2 || neg < 2 {
            // A single example per class carries no spread information.
            return 0.0;
        }
        sample_cov(x10, y10) / p + sample_cov(x01, y01) / n
    };
    Ok(DeLongCovariance {
        auc_1: auc(scores_1, decision)?,
        auc_2: auc(scores_2, decision)?,
        var_1: term(&a.v10, &a.v10, &a.v01, &a.v01),
        var_2: term(&b.v10, &b.v10, &b.v01, &b.v01),
        cov: term(&a.v10, &b.v10, &a.v01, &b.v01),
    })
}

/// Paired DeLong test of `auc_1 - auc_2`.
pub fn delong_test(
    scores_1: &[f64],
    scores_2: &[f64],
    decision: &[bool],
    alternative: Alternative,
) -> Result<PairedRocTest> {
    let c = delong_covariance(scores_1, scores_2, decision)?;
    let z = z_statistic(c.auc_1, c.auc_2, c.var_difference().max(0.0).sqrt())?;
    Ok(PairedRocTest {
        method: Method::DeLong,
        alternative,
        auc_1: c.auc_1,
        auc_2: c.auc_2,
        z,
        p_value: if z == 0.0 {
            1.0
        } else {
            alternative.p_value(z)
        },
        n_boot: None,
        seed: None,
    })
}

fn z_statistic(auc_1: f64, auc_2: f64, sd: f64) -> Result<f64> {
    if auc_1 == auc_2 {
        return Ok(0.0);
    }
    if sd.is_nan() || sd <= 0.0 {
        return Err(Error::DegenerateVariance);
    }
    Ok((auc_1 - auc_2) / sd)
}

/// Paired, class-stratified bootstrap test of `auc_1 - auc_2`.
///
/// Replicate `b` draws from its own ChaCha stream `(seed, b)`, so the
/// result does not depend on how replicates are scheduled.
pub fn bootstrap_test(
    scores_1: &[f64],
    scores_2: &[f64],
    decision: &[bool],
    alternative: Alternative,
    n_boot: usize,
    seed: u64,
) -> Result<PairedRocTest> {
    if n_boot == 0 {
        return Err(Error::NoReplicates);
    }
    class_counts(scores_1, decision)?;
    class_counts(scores_2, decision)?;
    let auc_1 = auc(scores_1, decision)?;
    let auc_2 = auc(scores_2, decision)?;

    let pos: Vec<usize> = (0..decision.len()).filter(|&i| decision[i]).collect();
    let neg: Vec<usize> = (0..decision.len()).filter(|&i| !decision[i]).collect();
    let resampled_decision: Vec<bool> = pos
        .iter()
        .map(|_| true)
        .chain(neg.iter().map(|_| false))
        .collect();

    let diffs: Vec<f64> = (0..n_boot)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b as u64);
            let mut rows: Vec<usize> = Vec::with_capacity(pos.len() + neg.len());
            rows.extend((0..pos.len()).map(|_| pos[rng.gen_range(0..pos.len())]));
            rows.extend((0..neg.len()).map(|_| neg[rng.gen_range(0..neg.len())]));
            let s1: Vec<f64> = rows.iter().map(|&i| scores_1[i]).collect();
            let s2: Vec<f64> = rows.iter().map(|&i| scores_2[i]).collect();
            // Both classes are present by construction.
            let a1 = auc(&s1, &resampled_decision).expect("stratified resample");
            let a2 = auc(&s2, &resampled_decision).expect("stratified resample");
            a1 - a2
        })
        .collect();

    let sd = if n_boot > 1 {
        sample_cov(&diffs, &diffs).sqrt()
    } else {
        0.0
    };
    let z = z_statistic(auc_1, auc_2, sd)?;
    Ok(PairedRocTest {
        method: Method::Bootstrap,
        alternative,
        auc_1,
        auc_2,
        z,
        p_value: if z == 0.0 {
            1.0
        } else {
            alternative.p_value(z)
        },
        n_boot: Some(n_boot),
        seed: Some(seed),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InclusionOptions {
    pub method: Method,
    pub alternative: Alternative,
    pub n_boot: usize,
    pub seed: u64,
    /// Ranking direction for the reduction, and for orienting the two
    /// summed scores before they are compared.
    pub direction: Direction,
}

impl InclusionOptions {
    pub fn new(method: Method, seed: u64) -> Self {
        InclusionOptions {
            method,
            alternative: Alternative::TwoSided,
            n_boot: DEFAULT_N_BOOT,
            seed,
            direction: Direction::Fixed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InclusionCheck {
    pub scale: ReducedScale,
    /// The first ranked item left out of the reduced scale.
    pub candidate: String,
    pub test: PairedRocTest,
}

/// Compares the reduced scale's total against the same total plus the next
/// ranked item.
pub fn check_attr_for_inclusion(ds: &Dataset, opts: &InclusionOptions) -> Result<InclusionCheck> {
    let ranking = total_auc_with(ds, opts.direction)?;
    let scale = ReducedScale::from_ranking(&ranking)?;
    let next = *ranking
        .columns
        .get(scale.len())
        .ok_or(Error::NoNextAttribute)?;

    let mut scores_1 = vec![0.0; ds.n_examples()];
    for &j in &scale.columns {
        for (t, v) in scores_1.iter_mut().zip(ds.column(j)) {
            *t += v;
        }
    }
    let mut scores_2: Vec<f64> = scores_1
        .iter()
        .zip(ds.column(next))
        .map(|(a, b)| a + b)
        .collect();
    if opts.direction == Direction::Auto {
        orient_scores(&mut scores_1, ds.decision())?;
        orient_scores(&mut scores_2, ds.decision())?;
    }

    let test = match opts.method {
        Method::DeLong => delong_test(&scores_1, &scores_2, ds.decision(), opts.alternative)?,
        Method::Bootstrap => bootstrap_test(
            &scores_1,
            &scores_2,
            ds.decision(),
            opts.alternative,
            opts.n_boot,
            opts.seed,
        )?,
    };
    Ok(InclusionCheck {
        candidate: ranking.order[scale.len()].clone(),
        scale,
        test,
    })
}

fn orient_scores(scores: &mut [f64], decision: &[bool]) -> Result<()> {
    if auc(scores, decision)? < 0.5 {
        scores.iter_mut().for_each(|s| *s = -*s);
    }
    Ok(())
}
