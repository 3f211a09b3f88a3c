//! Episodic environments and their expert advice.
//!
//! All dynamics are deterministic given the start state; the only randomness
//! is the cart-pole start state, drawn from an explicit RNG handle.

mod advice;
mod cartpole;
mod grid;

use std::fmt;
use std::str::FromStr;

use rand::Rng;

pub use advice::{AdviceKind, AdviceSpec};
pub use cartpole::{CartPoleParams, CartPoleState};
pub use grid::{optimal_episode_length, Cell, GridAction, GridSpec};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnvId {
    Toy,
    GridWorld20,
    CartPole,
}

impl EnvId {
    pub fn as_str(self) -> &'static str {
        match self {
            EnvId::Toy => "toy",
            EnvId::GridWorld20 => "gridworld20",
            EnvId::CartPole => "cartpole",
        }
    }

    pub fn is_grid(self) -> bool {
        !matches!(self, EnvId::CartPole)
    }
}

impl FromStr for EnvId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "toy" => Ok(EnvId::Toy),
            "gridworld20" => Ok(EnvId::GridWorld20),
            "cartpole" => Ok(EnvId::CartPole),
            other => Err(Error::UnknownEnv(other.to_string())),
        }
    }
}

impl fmt::Display for EnvId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EnvState {
    Grid(Cell),
    CartPole(CartPoleState),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Transition {
    pub state: EnvState,
    pub action: usize,
    pub next_state: EnvState,
    pub reward: f64,
    /// Goal reached, pole fallen, or step cap hit.
    pub terminal: bool,
    pub step_index: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Environment {
    Grid(GridSpec),
    CartPole(CartPoleParams),
}

impl Environment {
    pub fn new(id: EnvId) -> Self {
        match id {
            EnvId::Toy => Environment::Grid(GridSpec::toy()),
            EnvId::GridWorld20 => Environment::Grid(GridSpec::gridworld20()),
            EnvId::CartPole => Environment::CartPole(CartPoleParams::default()),
        }
    }

    pub fn from_id(id: &str) -> Result<Self> {
        id.parse().map(Self::new)
    }

    pub fn num_actions(&self) -> usize {
        match self {
            Environment::Grid(_) => GridAction::ALL.len(),
            Environment::CartPole(_) => 2,
        }
    }

    pub fn max_steps(&self) -> usize {
        match self {
            Environment::Grid(g) => g.max_steps,
            Environment::CartPole(p) => p.max_steps,
        }
    }

    pub fn set_max_steps(&mut self, cap: usize) {
        match self {
            Environment::Grid(g) => g.max_steps = cap,
            Environment::CartPole(p) => p.max_steps = cap,
        }
    }

    pub fn reset<R: Rng + ?Sized>(&self, rng: &mut R) -> EnvState {
        match self {
            Environment::Grid(g) => EnvState::Grid(g.start),
            Environment::CartPole(p) => EnvState::CartPole(p.reset(rng)),
        }
    }

    /// Successor of `(state, action)` with no terminal or cap checks.
    pub fn peek(&self, state: &EnvState, action: usize) -> Result<EnvState> {
        self.check_action(action)?;
        match (self, state) {
            (Environment::Grid(g), EnvState::Grid(c)) => {
                Ok(EnvState::Grid(g.apply(*c, GridAction::from_index(action)?)))
            }
            (Environment::CartPole(p), EnvState::CartPole(s)) => Ok(EnvState::CartPole(p.integrate(*s, action))),
            _ => Err(Error::Config("state does not belong to this environment".into())),
        }
    }

    /// Advances one step. `step_index` is the number of steps already taken in
    /// the episode.
    pub fn step(&self, state: &EnvState, action: usize, step_index: usize) -> Result<Transition> {
        if step_index >= self.max_steps() || self.is_terminal(state) {
            return Err(Error::TerminalStep);
        }
        let next_state = self.peek(state, action)?;
        let capped = step_index + 1 >= self.max_steps();
        let (reward, done) = match (self, &next_state) {
            (Environment::Grid(g), EnvState::Grid(c)) => {
                let arrived = *c == g.goal;
                (if arrived { 1.0 } else { 0.0 }, arrived)
            }
            (Environment::CartPole(p), EnvState::CartPole(s)) => (1.0, p.failed(s)),
            _ => unreachable!("peek preserves the state variant"),
        };
        Ok(Transition {
            state: *state,
            action,
            next_state,
            reward,
            terminal: done || capped,
            step_index,
        })
    }

    pub fn is_terminal(&self, state: &EnvState) -> bool {
        match (self, state) {
            (Environment::Grid(g), EnvState::Grid(c)) => *c == g.goal,
            (Environment::CartPole(p), EnvState::CartPole(s)) => p.failed(s),
            _ => false,
        }
    }

    fn check_action(&self, action: usize) -> Result<()> {
        if action >= self.num_actions() {
            return Err(Error::InvalidAction {
                action,
                num_actions: self.num_actions(),
            });
        }
        Ok(())
    }
}
