use rand::Rng;

use crate::error::{Error, Result};

/// Linear per-episode annealing of the exploration rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExplorationSchedule {
    pub epsilon_initial: f64,
    pub epsilon_final: f64,
    /// Episode at which `epsilon_final` is reached.
    pub decay_horizon: usize,
}

impl ExplorationSchedule {
    pub fn new(epsilon_initial: f64, epsilon_final: f64, decay_horizon: usize) -> Result<Self> {
        let in_unit = |e: f64| (0.0..=1.0).contains(&e);
        if !in_unit(epsilon_initial) || !in_unit(epsilon_final) || epsilon_final > epsilon_initial {
            return Err(Error::Config(format!(
                "epsilon schedule {epsilon_initial} -> {epsilon_final} must be non-increasing within [0, 1]"
            )));
        }
        if decay_horizon == 0 {
            return Err(Error::Config("epsilon decay horizon must be positive".into()));
        }
        Ok(ExplorationSchedule {
            epsilon_initial,
            epsilon_final,
            decay_horizon,
        })
    }

    pub fn constant(epsilon: f64) -> Self {
        ExplorationSchedule {
            epsilon_initial: epsilon,
            epsilon_final: epsilon,
            decay_horizon: 1,
        }
    }

    /// Exploration rate for the 1-based `episode`: `epsilon_initial` at episode
    /// 1, `epsilon_final` from `decay_horizon` on, linear in between.
    pub fn epsilon_at(&self, episode: usize) -> f64 {
        let episode = episode.max(1);
        if episode >= self.decay_horizon {
            return self.epsilon_final;
        }
        let frac = (episode - 1) as f64 / (self.decay_horizon - 1) as f64;
        self.epsilon_initial + (self.epsilon_final - self.epsilon_initial) * frac
    }
}

/// Epsilon-greedy choice over `values`, breaking ties uniformly at random.
///
/// Always consumes one uniform draw for the explore decision, then one more
/// for either the random action or a tie-break among several maximisers.
pub fn select_action<R: Rng + ?Sized>(values: &[f64], epsilon: f64, rng: &mut R) -> Result<usize> {
    if values.is_empty() {
        return Err(Error::EmptyActions);
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("action values"));
    }
    let explore = rng.gen::<f64>() < epsilon;
    if explore {
        return Ok(rng.gen_range(0..values.len()));
    }
    let best = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let ties: Vec<usize> = (0..values.len()).filter(|&i| values[i] == best).collect();
    if ties.len() == 1 {
        Ok(ties[0])
    } else {
        Ok(ties[rng.gen_range(0..ties.len())])
    }
}
