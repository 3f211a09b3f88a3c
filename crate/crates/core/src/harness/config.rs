use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::agents::ExplorationSchedule;
use crate::envs::{AdviceKind, AdviceSpec, EnvId, Environment};
use crate::error::{Error, Result};
use crate::features::TileCoderConfig;
use crate::shaping::{ModeTag, ShapingMode};

/// One experiment line as written in a config file. Optional fields fall back
/// to per-environment defaults in [`ExperimentConfig::resolve`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub env: String,
    pub advice: String,
    pub mode: String,
    pub alpha: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon_initial: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon_final: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon_decay_episodes: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub episodes: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runs: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub advice_magnitude: Option<f64>,
    /// Q weights start uniform in `[0, q_init_max)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_init_max: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi_init_max: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub num_tilings: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tiles_per_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_steps: Option<usize>,
}

/// A fully validated experiment, ready to run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunSpec {
    pub env_id: EnvId,
    pub env: Environment,
    pub advice: AdviceSpec,
    pub mode: ShapingMode,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub lambda: f64,
    pub exploration: ExplorationSchedule,
    pub episodes: usize,
    pub runs: usize,
    pub base_seed: u64,
    pub q_init_max: f64,
    pub phi_init_max: f64,
    /// Present for continuous-state environments.
    pub tile_coder: Option<TileCoderConfig>,
}

pub fn default_gamma(env: EnvId) -> f64 {
    match env {
        EnvId::Toy => 0.3,
        EnvId::GridWorld20 => 0.99,
        EnvId::CartPole => 1.0,
    }
}

pub fn default_episodes(env: EnvId) -> usize {
    match env {
        EnvId::Toy => 100,
        EnvId::GridWorld20 => 300,
        EnvId::CartPole => 1000,
    }
}

pub fn default_runs(env: EnvId) -> usize {
    match env {
        EnvId::Toy | EnvId::GridWorld20 => 50,
        EnvId::CartPole => 30,
    }
}

fn default_init_max(env: EnvId) -> f64 {
    match env {
        EnvId::CartPole => 0.001,
        _ => 0.0,
    }
}

impl ExperimentConfig {
    /// A config with only the required keys set.
    pub fn new(env: &str, advice: &str, mode: &str, alpha: f64) -> Self {
        ExperimentConfig {
            env: env.into(),
            advice: advice.into(),
            mode: mode.into(),
            alpha,
            beta: None,
            gamma: None,
            lambda: None,
            c: None,
            epsilon_initial: None,
            epsilon_final: None,
            epsilon_decay_episodes: None,
            episodes: None,
            runs: None,
            base_seed: None,
            output: None,
            advice_magnitude: None,
            q_init_max: None,
            phi_init_max: None,
            num_tilings: None,
            tiles_per_dim: None,
            max_steps: None,
        }
    }

    pub fn with_beta(mut self, beta: f64) -> Self {
        self.beta = Some(beta);
        self
    }

    pub fn with_c(mut self, c: u32) -> Self {
        self.c = Some(c);
        self
    }

    pub fn from_toml_str(text: &str) -> std::result::Result<Self, toml::de::Error> {
        toml::from_str(text)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_toml_str(&text).map_err(|source| Error::Toml {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    pub fn resolve(&self) -> Result<RunSpec> {
        let env_id: EnvId = self.env.parse()?;
        let mut env = Environment::new(env_id);
        if let Some(cap) = self.max_steps {
            if cap == 0 {
                return Err(Error::Config("max_steps must be positive".into()));
            }
            env.set_max_steps(cap);
        }
        if let Environment::Grid(g) = &env {
            g.validate()?;
        }

        let kind: AdviceKind = self.advice.parse()?;
        let advice = match self.advice_magnitude {
            Some(m) => AdviceSpec::new(kind, m)?,
            None => AdviceSpec::with_default_magnitude(kind),
        };
        advice.check_env(&env)?;

        let tag: ModeTag = self.mode.parse()?;
        if self.c.is_some() && tag != ModeTag::Pies {
            return Err(Error::Config(format!("c only applies to mode pies, not {tag}")));
        }
        let mode = ShapingMode::new(tag, self.c)?;

        let beta = match (tag.learns_potential(), self.beta) {
            (true, Some(b)) => b,
            (true, None) => return Err(Error::Config(format!("mode {tag} requires beta"))),
            (false, Some(_)) => return Err(Error::Config(format!("beta has no effect in mode {tag}"))),
            (false, None) => 0.0,
        };

        let gamma = self.gamma.unwrap_or_else(|| default_gamma(env_id));
        let lambda = match (env_id, self.lambda) {
            (EnvId::CartPole, l) => l.unwrap_or(0.9),
            (_, None) => 0.0,
            (_, Some(_)) => return Err(Error::Config("lambda only applies to the tile-coded learner".into())),
        };

        let episodes = self.episodes.unwrap_or_else(|| default_episodes(env_id));
        let runs = self.runs.unwrap_or_else(|| default_runs(env_id));
        if episodes == 0 || runs == 0 {
            return Err(Error::Config("episodes and runs must be at least 1".into()));
        }
        let exploration = ExplorationSchedule::new(
            self.epsilon_initial.unwrap_or(0.1),
            self.epsilon_final.unwrap_or(0.0),
            self.epsilon_decay_episodes.unwrap_or(episodes),
        )?;

        let unit = |name: &str, v: f64, lo_open: bool| -> Result<f64> {
            let ok = if lo_open {
                v > 0.0 && v <= 1.0
            } else {
                (0.0..=1.0).contains(&v)
            };
            if ok {
                Ok(v)
            } else {
                Err(Error::Config(format!("{name} = {v} out of range")))
            }
        };
        unit("alpha", self.alpha, true)?;
        if tag.learns_potential() {
            unit("beta", beta, true)?;
        }
        unit("gamma", gamma, false)?;
        unit("lambda", lambda, false)?;

        let init = |name: &str, v: Option<f64>| -> Result<f64> {
            let v = v.unwrap_or_else(|| default_init_max(env_id));
            if v >= 0.0 && v.is_finite() {
                Ok(v)
            } else {
                Err(Error::Config(format!("{name} must be non-negative")))
            }
        };
        let q_init_max = init("q_init_max", self.q_init_max)?;
        let phi_init_max = init("phi_init_max", self.phi_init_max)?;

        let tile_coder = match env_id {
            EnvId::CartPole => Some(TileCoderConfig::cartpole_with(
                self.num_tilings.unwrap_or(8),
                self.tiles_per_dim.unwrap_or(2),
            )),
            _ if self.num_tilings.is_some() || self.tiles_per_dim.is_some() => {
                return Err(Error::Config("tile coding only applies to cartpole".into()))
            }
            _ => None,
        };
        if let Some(tc) = &tile_coder {
            if tc.num_tilings() == 0 {
                return Err(Error::Config("num_tilings must be positive".into()));
            }
        }

        Ok(RunSpec {
            env_id,
            env,
            advice,
            mode,
            alpha: self.alpha,
            beta,
            gamma,
            lambda,
            exploration,
            episodes,
            runs,
            base_seed: self.base_seed.unwrap_or(0),
            q_init_max,
            phi_init_max,
            tile_coder,
        })
    }
}
