//! Experiment plumbing: configuration, seeded runs, statistics, output,
//! parameter sweeps and the published figure presets.

pub mod config;
pub mod figures;
pub mod output;
pub mod runner;
pub mod stats;
pub mod sweep;
pub mod verify;

pub use config::{ExperimentConfig, RunSpec};
pub use figures::{figures, run_figure, Figure, FigureOptions};
pub use output::{emit_csv, emit_plot, Orientation};
pub use runner::{run_batch, run_single, train_grid, GridOutcome};
pub use stats::LearningCurve;
pub use sweep::{sweep, SweepFile, SweepOutcome, SweepSpec};
