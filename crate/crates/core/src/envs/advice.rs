use std::fmt;
use std::str::FromStr;

use super::{EnvState, Environment, GridAction};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdviceKind {
    /// Rewards grid moves that strictly shorten the Manhattan distance to the goal.
    GridGood,
    /// Rewards grid moves that strictly lengthen the Manhattan distance to the goal.
    GridBad,
    /// Rewards moving right or down, whatever the state.
    GridRightDown,
    /// Rewards pushing the cart in the direction the pole leans.
    CartpoleAligned,
    /// No advice at all; valid for every environment.
    Zero,
}

impl AdviceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            AdviceKind::GridGood => "grid_good",
            AdviceKind::GridBad => "grid_bad",
            AdviceKind::GridRightDown => "grid_right_down",
            AdviceKind::CartpoleAligned => "cartpole_aligned",
            AdviceKind::Zero => "zero",
        }
    }

    pub fn default_magnitude(self) -> f64 {
        match self {
            AdviceKind::CartpoleAligned => 0.1,
            _ => 1.0,
        }
    }
}

impl FromStr for AdviceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grid_good" => Ok(AdviceKind::GridGood),
            "grid_bad" => Ok(AdviceKind::GridBad),
            "grid_right_down" => Ok(AdviceKind::GridRightDown),
            "cartpole_aligned" => Ok(AdviceKind::CartpoleAligned),
            "zero" => Ok(AdviceKind::Zero),
            other => Err(Error::UnknownAdvice(other.to_string())),
        }
    }
}

impl fmt::Display for AdviceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An expert reward signal `R^expert(s, a)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdviceSpec {
    pub kind: AdviceKind,
    /// Reward paid when the advice fires.
    pub magnitude: f64,
}

impl AdviceSpec {
    pub fn new(kind: AdviceKind, magnitude: f64) -> Result<Self> {
        if !(magnitude > 0.0 && magnitude.is_finite()) {
            return Err(Error::Config(format!(
                "advice magnitude must be positive, got {magnitude}"
            )));
        }
        Ok(AdviceSpec { kind, magnitude })
    }

    pub fn with_default_magnitude(kind: AdviceKind) -> Self {
        AdviceSpec {
            kind,
            magnitude: kind.default_magnitude(),
        }
    }

    pub fn zero() -> Self {
        Self::with_default_magnitude(AdviceKind::Zero)
    }

    /// Errors when the advice kind does not fit the environment.
    pub fn check_env(&self, env: &Environment) -> Result<()> {
        let ok = match self.kind {
            AdviceKind::Zero => true,
            AdviceKind::CartpoleAligned => matches!(env, Environment::CartPole(_)),
            _ => matches!(env, Environment::Grid(_)),
        };
        if ok {
            Ok(())
        } else {
            let env_name = match env {
                Environment::Grid(_) => "grid",
                Environment::CartPole(_) => "cartpole",
            };
            Err(Error::AdviceMismatch {
                advice: self.kind.to_string(),
                env: env_name.to_string(),
            })
        }
    }

    pub fn expert_reward(
        &self,
        env: &Environment,
        state: &EnvState,
        action: usize,
        next_state: &EnvState,
    ) -> Result<f64> {
        self.check_env(env)?;
        let fired = match (self.kind, env, state, next_state) {
            (AdviceKind::Zero, ..) => false,
            (AdviceKind::GridRightDown, ..) => {
                let a = GridAction::from_index(action)?;
                matches!(a, GridAction::Right | GridAction::Down)
            }
            (AdviceKind::GridGood, Environment::Grid(g), EnvState::Grid(s), EnvState::Grid(n)) => {
                n.manhattan(g.goal) < s.manhattan(g.goal)
            }
            (AdviceKind::GridBad, Environment::Grid(g), EnvState::Grid(s), EnvState::Grid(n)) => {
                n.manhattan(g.goal) > s.manhattan(g.goal)
            }
            (AdviceKind::CartpoleAligned, Environment::CartPole(p), EnvState::CartPole(s), _) => {
                let force = p.force(action);
                s.theta != 0.0 && force.signum() == s.theta.signum()
            }
            _ => return Err(Error::Config("state does not belong to this environment".into())),
        };
        Ok(if fired { self.magnitude } else { 0.0 })
    }
}
