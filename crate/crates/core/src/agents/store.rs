use rand::Rng;

use crate::features::ActiveFeatures;

/// Storage for a state-action value function, keyed by whatever the
/// representation indexes states with.
///
/// Both the agent's `Q` and the shaping potential `Phi` sit on top of a store,
/// so the potential automatically mirrors the agent's representation.
pub trait ActionValueStore {
    type Key;

    fn num_actions(&self) -> usize;

    fn value(&self, key: &Self::Key, action: usize) -> f64;

    /// Moves the estimate of `(key, action)` by `step`.
    fn nudge(&mut self, key: &Self::Key, action: usize, step: f64);

    fn values(&self, key: &Self::Key) -> Vec<f64> {
        (0..self.num_actions()).map(|a| self.value(key, a)).collect()
    }
}

/// Dense table over `num_states x num_actions`.
#[derive(Debug, Clone, PartialEq)]
pub struct TabularStore {
    num_actions: usize,
    table: Vec<f64>,
}

impl TabularStore {
    pub fn new(num_states: usize, num_actions: usize, init: f64) -> Self {
        TabularStore {
            num_actions,
            table: vec![init; num_states * num_actions],
        }
    }

    pub fn num_states(&self) -> usize {
        self.table.len() / self.num_actions
    }

    pub fn set(&mut self, state: usize, action: usize, value: f64) {
        self.table[state * self.num_actions + action] = value;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.table
    }
}

impl ActionValueStore for TabularStore {
    type Key = usize;

    fn num_actions(&self) -> usize {
        self.num_actions
    }

    fn value(&self, state: &usize, action: usize) -> f64 {
        self.table[state * self.num_actions + action]
    }

    fn nudge(&mut self, state: &usize, action: usize, step: f64) {
        self.table[state * self.num_actions + action] += step;
    }
}

/// One weight vector per action over a tile-coded index space. The value of
/// `(s, a)` is the sum of the weights of the active features.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearStore {
    num_tilings: usize,
    weights: Vec<Vec<f64>>,
}

impl LinearStore {
    pub fn zeros(num_actions: usize, table_size: usize, num_tilings: usize) -> Self {
        LinearStore {
            num_tilings,
            weights: vec![vec![0.0; table_size]; num_actions],
        }
    }

    /// Weights drawn uniformly from `[0, max)`; all zero when `max == 0`.
    pub fn uniform<R: Rng + ?Sized>(
        num_actions: usize,
        table_size: usize,
        num_tilings: usize,
        max: f64,
        rng: &mut R,
    ) -> Self {
        let mut store = Self::zeros(num_actions, table_size, num_tilings);
        if max > 0.0 {
            for w in store.weights.iter_mut().flatten() {
                *w = rng.gen_range(0.0..max);
            }
        }
        store
    }

    pub fn num_tilings(&self) -> usize {
        self.num_tilings
    }

    pub fn table_size(&self) -> usize {
        self.weights.first().map_or(0, Vec::len)
    }

    pub fn weights(&self, action: usize) -> &[f64] {
        &self.weights[action]
    }

    pub(crate) fn weights_mut(&mut self) -> &mut [Vec<f64>] {
        &mut self.weights
    }
}

impl ActionValueStore for LinearStore {
    type Key = ActiveFeatures;

    fn num_actions(&self) -> usize {
        self.weights.len()
    }

    fn value(&self, features: &ActiveFeatures, action: usize) -> f64 {
        let w = &self.weights[action];
        features.indices().iter().map(|&i| w[i]).sum()
    }

    /// Spreads `step` evenly over the active features.
    fn nudge(&mut self, features: &ActiveFeatures, action: usize, step: f64) {
        let per_feature = step / self.num_tilings as f64;
        let w = &mut self.weights[action];
        for &i in features.indices() {
            w[i] += per_feature;
        }
    }
}
