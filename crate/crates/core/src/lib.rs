//! Reward shaping from arbitrary advice.
//!
//! Five shaping regimes for temporal-difference learners are implemented side by
//! side: no shaping, static potential-based shaping, dynamic potential-based
//! advice (DPBA), DPBA with the current-potential bias correction, and policy
//! invariant explicit shaping (PIES). The [`oracle`] module solves small finite
//! MDPs exactly so the invariance claims can be checked without learning noise,
//! and [`harness`] runs seeded multi-run experiments, sweeps and figure
//! reproductions.

pub mod agents;
pub mod envs;
pub mod error;
pub mod features;
pub mod harness;
pub mod oracle;
pub mod shaping;

pub use error::{Error, Result};
