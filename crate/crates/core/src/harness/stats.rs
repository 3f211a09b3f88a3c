use crate::error::{Error, Result};

/// Episode lengths of every run (`runs x episodes`), with the usual summaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LearningCurve {
    lengths: Vec<Vec<u32>>,
}

impl LearningCurve {
    pub fn new(lengths: Vec<Vec<u32>>) -> Result<Self> {
        let episodes = lengths.first().map_or(0, Vec::len);
        if episodes == 0 || lengths.iter().any(|r| r.len() != episodes) {
            return Err(Error::Config(
                "learning curve needs equal-length, non-empty runs".into(),
            ));
        }
        Ok(LearningCurve { lengths })
    }

    pub fn runs(&self) -> usize {
        self.lengths.len()
    }

    pub fn episodes(&self) -> usize {
        self.lengths[0].len()
    }

    pub fn run(&self, index: usize) -> &[u32] {
        &self.lengths[index]
    }

    pub fn per_run(&self) -> &[Vec<u32>] {
        &self.lengths
    }

    /// Mean over runs, per episode.
    pub fn mean(&self) -> Vec<f64> {
        let n = self.runs() as f64;
        (0..self.episodes())
            .map(|e| self.lengths.iter().map(|r| f64::from(r[e])).sum::<f64>() / n)
            .collect()
    }

    /// Sample standard deviation over runs divided by `sqrt(runs)`; zero for a
    /// single run.
    pub fn stderr(&self) -> Vec<f64> {
        let runs = self.runs();
        if runs < 2 {
            return vec![0.0; self.episodes()];
        }
        let n = runs as f64;
        self.mean()
            .into_iter()
            .enumerate()
            .map(|(e, m)| {
                let ss: f64 = self.lengths.iter().map(|r| (f64::from(r[e]) - m).powi(2)).sum();
                (ss / (n - 1.0)).sqrt() / n.sqrt()
            })
            .collect()
    }

    /// Area under the mean curve, one unit of width per episode.
    pub fn auc(&self) -> f64 {
        self.mean().iter().sum()
    }

    /// Mean length over the last `k` episodes of each run.
    pub fn final_mean_per_run(&self, k: usize) -> Vec<f64> {
        let k = k.clamp(1, self.episodes());
        self.lengths
            .iter()
            .map(|r| r[r.len() - k..].iter().map(|&l| f64::from(l)).sum::<f64>() / k as f64)
            .collect()
    }

    /// Mean length over the last `k` episodes, averaged over runs.
    pub fn final_mean(&self, k: usize) -> f64 {
        let per_run = self.final_mean_per_run(k);
        per_run.iter().sum::<f64>() / per_run.len() as f64
    }
}
