//! The published figure experiments, with their tuned parameters.

use std::path::Path;

use super::config::ExperimentConfig;
use super::output::{emit_csv, emit_plot, Orientation};
use super::runner::run_batch;
use super::stats::LearningCurve;
use super::sweep::orientation_for;
use crate::error::Result;

#[derive(Debug, Clone)]
pub struct FigureLine {
    pub label: String,
    pub config: ExperimentConfig,
}

#[derive(Debug, Clone)]
pub struct Figure {
    pub id: &'static str,
    pub title: &'static str,
    pub orientation: Orientation,
    pub lines: Vec<FigureLine>,
}

fn line(label: impl Into<String>, config: ExperimentConfig) -> FigureLine {
    FigureLine {
        label: label.into(),
        config,
    }
}

fn with_epsilon(mut cfg: ExperimentConfig, epsilon_initial: f64) -> ExperimentConfig {
    cfg.epsilon_initial = Some(epsilon_initial);
    cfg
}

/// Unshaped Sarsa on the toy grid (the advice id only fixes the environment pairing).
pub fn toy_sarsa(advice: &str) -> ExperimentConfig {
    ExperimentConfig::new("toy", advice, "none", 0.05)
}

pub fn toy_dpba(advice: &str) -> ExperimentConfig {
    ExperimentConfig::new("toy", advice, "dpba", 0.2).with_beta(0.5)
}

pub fn toy_corrected(advice: &str) -> ExperimentConfig {
    match advice {
        "grid_good" => ExperimentConfig::new("toy", advice, "corrected_dpba", 0.2).with_beta(0.1),
        _ => ExperimentConfig::new("toy", advice, "corrected_dpba", 0.05).with_beta(0.2),
    }
}

pub fn toy_pies(advice: &str) -> ExperimentConfig {
    match advice {
        "grid_good" => ExperimentConfig::new("toy", advice, "pies", 0.05)
            .with_beta(0.2)
            .with_c(50),
        _ => ExperimentConfig::new("toy", advice, "pies", 0.1)
            .with_beta(0.2)
            .with_c(5),
    }
}

pub fn grid_sarsa() -> ExperimentConfig {
    ExperimentConfig::new("gridworld20", "grid_right_down", "none", 0.05)
}

pub fn grid_dpba() -> ExperimentConfig {
    ExperimentConfig::new("gridworld20", "grid_right_down", "dpba", 0.5).with_beta(0.01)
}

pub fn grid_corrected() -> ExperimentConfig {
    ExperimentConfig::new("gridworld20", "grid_right_down", "corrected_dpba", 0.1).with_beta(0.01)
}

pub fn grid_pies() -> ExperimentConfig {
    ExperimentConfig::new("gridworld20", "grid_right_down", "pies", 0.05)
        .with_beta(0.5)
        .with_c(100)
}

pub fn cartpole_sarsa() -> ExperimentConfig {
    ExperimentConfig::new("cartpole", "cartpole_aligned", "none", 0.1)
}

pub fn cartpole_dpba() -> ExperimentConfig {
    ExperimentConfig::new("cartpole", "cartpole_aligned", "dpba", 0.02).with_beta(0.1)
}

pub fn cartpole_corrected() -> ExperimentConfig {
    ExperimentConfig::new("cartpole", "cartpole_aligned", "corrected_dpba", 0.02).with_beta(0.1)
}

pub fn cartpole_pies() -> ExperimentConfig {
    ExperimentConfig::new("cartpole", "cartpole_aligned", "pies", 0.2)
        .with_beta(0.5)
        .with_c(200)
}

pub fn figures() -> Vec<Figure> {
    let toy_bad = {
        let mut lines = vec![line("Sarsa", toy_sarsa("grid_bad"))];
        for eps in [0.1, 0.3, 0.5] {
            lines.push(line(
                format!("DPBA eps_i={eps}"),
                with_epsilon(toy_dpba("grid_bad"), eps),
            ));
        }
        for eps in [0.1, 0.3, 0.5] {
            lines.push(line(
                format!("corrected DPBA eps_i={eps}"),
                with_epsilon(toy_corrected("grid_bad"), eps),
            ));
        }
        lines
    };
    vec![
        Figure {
            id: "fig1a_gridworld_dpba",
            title: "DPBA, grid-world",
            orientation: Orientation::LowerBetter,
            lines: vec![line("Sarsa", grid_sarsa()), line("DPBA", grid_dpba())],
        },
        Figure {
            id: "fig1b_cartpole_dpba",
            title: "DPBA, cart-pole",
            orientation: Orientation::HigherBetter,
            lines: vec![line("Sarsa", cartpole_sarsa()), line("DPBA", cartpole_dpba())],
        },
        Figure {
            id: "fig3_toy_bad_advice",
            title: "Corrected DPBA with bad advice",
            orientation: Orientation::LowerBetter,
            lines: toy_bad,
        },
        Figure {
            id: "fig4_toy_good_advice",
            title: "Corrected DPBA with good advice",
            orientation: Orientation::LowerBetter,
            lines: vec![
                line("Sarsa", toy_sarsa("grid_good")),
                line("DPBA", toy_dpba("grid_good")),
                line("corrected DPBA", toy_corrected("grid_good")),
            ],
        },
        Figure {
            id: "fig5a_toy_pies_bad",
            title: "PIES, toy example, bad advice",
            orientation: Orientation::LowerBetter,
            lines: vec![
                line("Sarsa", toy_sarsa("grid_bad")),
                line("corrected DPBA", toy_corrected("grid_bad")),
                line("PIES", toy_pies("grid_bad")),
            ],
        },
        Figure {
            id: "fig5b_toy_pies_good",
            title: "PIES, toy example, good advice",
            orientation: Orientation::LowerBetter,
            lines: vec![
                line("Sarsa", toy_sarsa("grid_good")),
                line("corrected DPBA", toy_corrected("grid_good")),
                line("PIES", toy_pies("grid_good")),
            ],
        },
        Figure {
            id: "fig6a_gridworld_pies",
            title: "PIES, grid-world",
            orientation: Orientation::LowerBetter,
            lines: vec![
                line("Sarsa", grid_sarsa()),
                line("corrected DPBA", grid_corrected()),
                line("PIES", grid_pies()),
            ],
        },
        Figure {
            id: "fig6b_cartpole_pies",
            title: "PIES, cart-pole",
            orientation: Orientation::HigherBetter,
            lines: vec![
                line("Sarsa", cartpole_sarsa()),
                line("corrected DPBA", cartpole_corrected()),
                line("PIES", cartpole_pies()),
            ],
        },
    ]
}

/// Options applied to every line of a figure run.
#[derive(Debug, Clone, Default)]
pub struct FigureOptions {
    pub threads: Option<usize>,
    pub seed: Option<u64>,
    pub runs: Option<usize>,
}

fn slug(label: &str) -> String {
    label
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '.' {
                c.to_ascii_lowercase()
            } else {
                '_'
            }
        })
        .collect()
}

/// Runs every line of `figure`; with `out_dir`, writes one CSV per line and
/// `<id>.svg` into it.
pub fn run_figure(
    figure: &Figure,
    opts: &FigureOptions,
    out_dir: Option<&Path>,
) -> Result<Vec<(String, LearningCurve)>> {
    let mut curves = Vec::with_capacity(figure.lines.len());
    for l in &figure.lines {
        let mut cfg = l.config.clone();
        if opts.seed.is_some() {
            cfg.base_seed = opts.seed;
        }
        if opts.runs.is_some() {
            cfg.runs = opts.runs;
        }
        let spec = cfg.resolve()?;
        debug_assert_eq!(orientation_for(spec.env_id), figure.orientation);
        let curve = run_batch(&spec, opts.threads)?;
        if let Some(dir) = out_dir {
            emit_csv(&curve, &dir.join(format!("{}__{}.csv", figure.id, slug(&l.label))))?;
        }
        curves.push((l.label.clone(), curve));
    }
    if let Some(dir) = out_dir {
        emit_plot(
            &curves,
            &dir.join(format!("{}.svg", figure.id)),
            figure.title,
            figure.orientation,
        )?;
    }
    Ok(curves)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_preset_resolves() {
        for fig in figures() {
            assert!(!fig.lines.is_empty());
            for l in &fig.lines {
                let spec = l
                    .config
                    .resolve()
                    .unwrap_or_else(|e| panic!("{} / {}: {e}", fig.id, l.label));
                assert_eq!(orientation_for(spec.env_id), fig.orientation);
            }
        }
    }

    #[test]
    fn slugs_are_file_safe() {
        assert_eq!(slug("corrected DPBA eps_i=0.3"), "corrected_dpba_eps_i_0.3");
    }
}
