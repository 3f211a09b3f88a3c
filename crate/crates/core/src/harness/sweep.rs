use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::config::ExperimentConfig;
use super::output::Orientation;
use super::runner::run_batch;
use super::stats::LearningCurve;
use crate::envs::EnvId;
use crate::error::{Error, Result};

/// Candidate values per hyperparameter. An empty list keeps the base value.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    #[serde(default)]
    pub alpha: Vec<f64>,
    #[serde(default)]
    pub beta: Vec<f64>,
    #[serde(default)]
    pub c: Vec<u32>,
    #[serde(default)]
    pub lambda: Vec<f64>,
}

/// A sweep file: `[base]` holds an experiment config, `[candidates]` the lists.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepFile {
    pub base: ExperimentConfig,
    #[serde(default)]
    pub candidates: SweepSpec,
}

impl SweepFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        toml::from_str(&text).map_err(|source| Error::Toml {
            path: path.to_path_buf(),
            source,
        })
    }
}

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub config: ExperimentConfig,
    pub curve: LearningCurve,
    pub auc: f64,
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub rows: Vec<SweepRow>,
    /// Index of the selected row.
    pub best: usize,
    pub orientation: Orientation,
}

impl SweepOutcome {
    pub fn best_config(&self) -> &ExperimentConfig {
        &self.rows[self.best].config
    }

    /// CSV table `alpha,beta,c,lambda,auc,selected`, in enumeration order.
    pub fn table_csv(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_default();
        let mut out = String::from("alpha,beta,c,lambda,auc,selected\n");
        for (i, row) in self.rows.iter().enumerate() {
            let cfg = &row.config;
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                cfg.alpha,
                opt(cfg.beta.map(|b| b.to_string())),
                opt(cfg.c.map(|c| c.to_string())),
                opt(cfg.lambda.map(|l| l.to_string())),
                row.auc,
                i == self.best
            );
        }
        out
    }
}

impl SweepSpec {
    /// Cross product in a fixed order: alpha outermost, then beta, c, lambda.
    pub fn configs(&self, base: &ExperimentConfig) -> Vec<ExperimentConfig> {
        fn axis<T: Copy>(list: &[T], base: Option<T>) -> Vec<Option<T>> {
            if list.is_empty() {
                vec![base]
            } else {
                list.iter().copied().map(Some).collect()
            }
        }
        let mut out = Vec::new();
        for alpha in axis(&self.alpha, Some(base.alpha)) {
            for beta in axis(&self.beta, base.beta) {
                for c in axis(&self.c, base.c) {
                    for lambda in axis(&self.lambda, base.lambda) {
                        let mut cfg = base.clone();
                        cfg.alpha = alpha.expect("alpha always set");
                        cfg.beta = beta;
                        cfg.c = c;
                        cfg.lambda = lambda;
                        out.push(cfg);
                    }
                }
            }
        }
        out
    }
}

/// Grid tasks minimise steps, cart-pole maximises them.
pub fn orientation_for(env: EnvId) -> Orientation {
    if env.is_grid() {
        Orientation::LowerBetter
    } else {
        Orientation::HigherBetter
    }
}

/// Runs every candidate combination and picks the best AUC. Ties keep the
/// earliest combination.
pub fn sweep(spec: &SweepSpec, base: &ExperimentConfig, threads: Option<usize>) -> Result<SweepOutcome> {
    let env: EnvId = base.env.parse()?;
    let orientation = orientation_for(env);
    let mut rows = Vec::new();
    for cfg in spec.configs(base) {
        let curve = run_batch(&cfg.resolve()?, threads)?;
        let auc = curve.auc();
        rows.push(SweepRow {
            config: cfg,
            curve,
            auc,
        });
    }
    let mut best = 0;
    for (i, row) in rows.iter().enumerate().skip(1) {
        if orientation.better(row.auc, rows[best].auc) {
            best = i;
        }
    }
    Ok(SweepOutcome {
        rows,
        best,
        orientation,
    })
}
