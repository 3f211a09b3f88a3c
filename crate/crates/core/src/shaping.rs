//! Shaping regimes built on a learned secondary value function `Phi`.
//!
//! `Phi` is trained by TD on the negated advice, `R^Phi = -R^expert`. The
//! regimes differ in two places only:
//!
//! | mode             | reward seen by Q     | action-selection bias |
//! |------------------|----------------------|-----------------------|
//! | `none`           | `R`                  | 0                     |
//! | `static_pbrs`    | `R + F` (frozen Phi) | 0                     |
//! | `dpba`           | `R + F_t`            | `Phi_0 = 0`           |
//! | `corrected_dpba` | `R + F_t`            | `+Phi_t(s, .)`        |
//! | `pies`           | `R`                  | `-xi_e * Phi_t(s, .)` |
//!
//! with the dynamic shaping reward `F_t = gamma * Phi_{t+1}(s', a') - Phi_t(s, a)`.
//! Terminal potentials are pinned at zero.

use std::fmt;
use std::str::FromStr;

use crate::agents::ActionValueStore;
use crate::error::{Error, Result};

/// Secondary value function learned from negated advice.
#[derive(Debug, Clone, PartialEq)]
pub struct Potential<S> {
    pub store: S,
    pub beta: f64,
    pub gamma: f64,
}

impl<S: ActionValueStore> Potential<S> {
    pub fn new(store: S, beta: f64, gamma: f64) -> Self {
        Potential { store, beta, gamma }
    }

    pub fn value(&self, key: &S::Key, action: usize) -> f64 {
        self.store.value(key, action)
    }

    /// One TD step on `Phi(s, a)` with reward `-r_expert`, bootstrapping from
    /// the pre-update `Phi(s', a')` (zero when `next` is `None`). Returns the
    /// pre-update `Phi(s, a)`.
    pub fn phi_update(
        &mut self,
        key: &S::Key,
        action: usize,
        next: Option<(&S::Key, usize)>,
        r_expert: f64,
    ) -> Result<f64> {
        let phi_old = self.store.value(key, action);
        let bootstrap = next.map_or(0.0, |(k, a)| self.store.value(k, a));
        let delta = -r_expert + self.gamma * bootstrap - phi_old;
        if !delta.is_finite() {
            return Err(Error::NonFinite("potential TD error"));
        }
        self.store.nudge(key, action, self.beta * delta);
        Ok(phi_old)
    }

    /// `F = gamma * Phi_post(s', a') - phi_old`, read after this step's
    /// `phi_update` so a self-transition sees its own fresh value.
    pub fn shaping_reward_dynamic(&self, next: Option<(&S::Key, usize)>, phi_old: f64) -> f64 {
        let phi_next = next.map_or(0.0, |(k, a)| self.store.value(k, a));
        self.gamma * phi_next - phi_old
    }
}

/// `F = gamma * Phi(s', a') - Phi(s, a)` for a fixed potential; `phi_next` is
/// `None` on terminal transitions.
pub fn shaping_reward_static(gamma: f64, phi: f64, phi_next: Option<f64>) -> f64 {
    gamma * phi_next.unwrap_or(0.0) - phi
}

/// Linear decay of the PIES bias weight: `xi_1 = 1`, then `1/C` less per
/// episode until it hits zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecaySchedule {
    c: u32,
    /// Completed decrements, saturating at `c`.
    steps: u32,
}

impl DecaySchedule {
    pub fn new(c: u32) -> Result<Self> {
        if c == 0 {
            return Err(Error::Config("PIES decay constant C must be positive".into()));
        }
        Ok(DecaySchedule { c, steps: 0 })
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    /// Current `xi`, computed from the integer step count so it never drifts.
    pub fn xi(&self) -> f64 {
        f64::from(self.c - self.steps) / f64::from(self.c)
    }

    /// Called once at the end of each episode.
    pub fn xi_advance(&mut self) {
        self.steps = (self.steps + 1).min(self.c);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModeTag {
    None,
    StaticPbrs,
    Dpba,
    CorrectedDpba,
    Pies,
}

impl ModeTag {
    pub const ALL: [ModeTag; 5] = [
        ModeTag::None,
        ModeTag::StaticPbrs,
        ModeTag::Dpba,
        ModeTag::CorrectedDpba,
        ModeTag::Pies,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ModeTag::None => "none",
            ModeTag::StaticPbrs => "static_pbrs",
            ModeTag::Dpba => "dpba",
            ModeTag::CorrectedDpba => "corrected_dpba",
            ModeTag::Pies => "pies",
        }
    }

    /// Whether `Phi` is learned online.
    pub fn learns_potential(self) -> bool {
        matches!(self, ModeTag::Dpba | ModeTag::CorrectedDpba | ModeTag::Pies)
    }

    /// Whether `F` is added to the environment reward.
    pub fn shapes_reward(self) -> bool {
        matches!(self, ModeTag::StaticPbrs | ModeTag::Dpba | ModeTag::CorrectedDpba)
    }
}

impl FromStr for ModeTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ModeTag::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::UnknownMode(s.to_string()))
    }
}

impl fmt::Display for ModeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapingMode {
    pub tag: ModeTag,
    /// Present for PIES only.
    pub xi: Option<DecaySchedule>,
}

impl ShapingMode {
    pub fn new(tag: ModeTag, c: Option<u32>) -> Result<Self> {
        let xi = match (tag, c) {
            (ModeTag::Pies, Some(c)) => Some(DecaySchedule::new(c)?),
            (ModeTag::Pies, None) => return Err(Error::Config("mode pies requires the decay constant c".into())),
            _ => None,
        };
        Ok(ShapingMode { tag, xi })
    }

    pub fn plain(tag: ModeTag) -> Self {
        ShapingMode { tag, xi: None }
    }

    /// Additive bias `b(s, .)`; the behaviour policy maximises `Q(s, .) + b(s, .)`.
    pub fn policy_bias<S: ActionValueStore>(&self, phi: &Potential<S>, key: &S::Key) -> Result<Vec<f64>> {
        let n = phi.store.num_actions();
        match self.tag {
            ModeTag::None | ModeTag::StaticPbrs | ModeTag::Dpba => Ok(vec![0.0; n]),
            ModeTag::CorrectedDpba => Ok(phi.store.values(key)),
            ModeTag::Pies => {
                let xi = self
                    .xi
                    .ok_or_else(|| Error::Config("PIES bias needs a decay schedule".into()))?
                    .xi();
                Ok(phi.store.values(key).into_iter().map(|p| -xi * p).collect())
            }
        }
    }

    /// Reward the agent's `Q` is trained on.
    pub fn total_reward(&self, env_reward: f64, f: f64) -> f64 {
        if self.tag.shapes_reward() {
            env_reward + f
        } else {
            env_reward
        }
    }

    pub fn end_episode(&mut self) {
        if let Some(xi) = self.xi.as_mut() {
            xi.xi_advance();
        }
    }
}
