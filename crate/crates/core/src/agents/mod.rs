//! Sarsa learners and epsilon-greedy action selection.

mod exploration;
mod sarsa;
mod store;

pub use exploration::{select_action, ExplorationSchedule};
pub use sarsa::{LinearQ, SarsaLearner, TabularQ};
pub use store::{ActionValueStore, LinearStore, TabularStore};
