use super::store::{ActionValueStore, LinearStore, TabularStore};
use crate::error::{Error, Result};
use crate::features::ActiveFeatures;

/// An on-policy TD learner driven one transition at a time.
pub trait SarsaLearner {
    type Store: ActionValueStore;

    fn store(&self) -> &Self::Store;

    fn gamma(&self) -> f64;

    fn begin_episode(&mut self) {}

    /// Applies one update for `(key, action)` with the already-shaped reward.
    /// `next` is `None` when the transition ended the episode.
    fn update(
        &mut self,
        key: &<Self::Store as ActionValueStore>::Key,
        action: usize,
        total_reward: f64,
        next: Option<(&<Self::Store as ActionValueStore>::Key, usize)>,
    ) -> Result<()>;
}

/// Tabular Sarsa(0).
#[derive(Debug, Clone, PartialEq)]
pub struct TabularQ {
    pub table: TabularStore,
    pub alpha: f64,
    pub gamma: f64,
}

impl TabularQ {
    pub fn new(num_states: usize, num_actions: usize, alpha: f64, gamma: f64) -> Self {
        TabularQ {
            table: TabularStore::new(num_states, num_actions, 0.0),
            alpha,
            gamma,
        }
    }

    /// `Q(s,a) += alpha * (r + gamma * Q(s',a') - Q(s,a))`, with `Q(terminal, .) = 0`.
    pub fn sarsa0_update(
        &mut self,
        state: usize,
        action: usize,
        total_reward: f64,
        next: Option<(usize, usize)>,
    ) -> Result<()> {
        let bootstrap = next.map_or(0.0, |(s, a)| self.table.value(&s, a));
        let delta = total_reward + self.gamma * bootstrap - self.table.value(&state, action);
        if !delta.is_finite() {
            return Err(Error::NonFinite("Sarsa TD error"));
        }
        self.table.nudge(&state, action, self.alpha * delta);
        Ok(())
    }
}

impl SarsaLearner for TabularQ {
    type Store = TabularStore;

    fn store(&self) -> &TabularStore {
        &self.table
    }

    fn gamma(&self) -> f64 {
        self.gamma
    }

    fn update(&mut self, state: &usize, action: usize, total_reward: f64, next: Option<(&usize, usize)>) -> Result<()> {
        self.sarsa0_update(*state, action, total_reward, next.map(|(s, a)| (*s, a)))
    }
}

/// Linear Sarsa(lambda) over tile-coded features with replacing traces.
///
/// `alpha` is the step size of the whole estimate; each active feature moves by
/// `alpha / num_tilings`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearQ {
    pub weights: LinearStore,
    pub alpha: f64,
    pub gamma: f64,
    pub lambda: f64,
    traces: Vec<Vec<f64>>,
}

impl LinearQ {
    pub fn new(weights: LinearStore, alpha: f64, gamma: f64, lambda: f64) -> Self {
        let traces = vec![vec![0.0; weights.table_size()]; weights.num_actions()];
        LinearQ {
            weights,
            alpha,
            gamma,
            lambda,
            traces,
        }
    }

    pub fn traces(&self, action: usize) -> &[f64] {
        &self.traces[action]
    }

    pub fn reset_traces(&mut self) {
        for t in self.traces.iter_mut() {
            t.fill(0.0);
        }
    }

    fn check_bounds(&self, features: &ActiveFeatures) -> Result<()> {
        let size = self.weights.table_size();
        match features.indices().iter().find(|&&i| i >= size) {
            Some(&i) => Err(Error::InvalidTileCoder(format!(
                "feature index {i} outside weight table of size {size}"
            ))),
            None => Ok(()),
        }
    }

    pub fn sarsa_lambda_update(
        &mut self,
        features: &ActiveFeatures,
        action: usize,
        total_reward: f64,
        next: Option<(&ActiveFeatures, usize)>,
    ) -> Result<()> {
        self.check_bounds(features)?;
        if let Some((f, _)) = next {
            self.check_bounds(f)?;
        }
        let bootstrap = next.map_or(0.0, |(f, a)| self.weights.value(f, a));
        let delta = total_reward + self.gamma * bootstrap - self.weights.value(features, action);
        if !delta.is_finite() {
            return Err(Error::NonFinite("Sarsa(lambda) TD error"));
        }
        for &i in features.indices() {
            self.traces[action][i] = 1.0;
        }
        let step = self.alpha / self.weights.num_tilings() as f64 * delta;
        let decay = self.gamma * self.lambda;
        for (w, e) in self.weights.weights_mut().iter_mut().zip(self.traces.iter_mut()) {
            for (wi, ei) in w.iter_mut().zip(e.iter_mut()) {
                if *ei != 0.0 {
                    *wi += step * *ei;
                    *ei *= decay;
                }
            }
        }
        Ok(())
    }
}

impl SarsaLearner for LinearQ {
    type Store = LinearStore;

    fn store(&self) -> &LinearStore {
        &self.weights
    }

    fn gamma(&self) -> f64 {
        self.gamma
    }

    fn begin_episode(&mut self) {
        self.reset_traces();
    }

    fn update(
        &mut self,
        features: &ActiveFeatures,
        action: usize,
        total_reward: f64,
        next: Option<(&ActiveFeatures, usize)>,
    ) -> Result<()> {
        self.sarsa_lambda_update(features, action, total_reward, next)
    }
}
