use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use advice_shaping::harness::sweep::orientation_for;
use advice_shaping::harness::{
    emit_csv, emit_plot, figures, run_batch, run_figure, sweep, verify, ExperimentConfig, FigureOptions, LearningCurve,
    SweepFile,
};
use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "advice-shaping",
    version,
    about = "Reward shaping from advice: experiments and checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Output directory.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Base seed; run i uses seed + i.
    #[arg(long, value_name = "N")]
    seed: Option<u64>,
    /// Number of independent runs.
    #[arg(long, value_name = "N")]
    runs: Option<usize>,
    /// Worker threads (1 = sequential; default: all cores).
    #[arg(long, value_name = "N")]
    parallel: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Run one experiment config and write its curve as CSV and SVG.
    Run {
        #[arg(long, value_name = "PATH")]
        config: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Sweep the hyperparameters listed in a sweep file and select by AUC.
    Sweep {
        #[arg(long, value_name = "PATH")]
        config: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Reproduce the figure experiments.
    Figures {
        /// Only run figures whose id contains this string.
        #[arg(long)]
        only: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Run the structural check suite.
    Verify {
        #[arg(long, value_name = "N", default_value_t = 2024)]
        seed: u64,
    },
}

fn apply_overrides(cfg: &mut ExperimentConfig, common: &Common) {
    if common.seed.is_some() {
        cfg.base_seed = common.seed;
    }
    if common.runs.is_some() {
        cfg.runs = common.runs;
    }
}

fn out_dir(common: &Common, cfg_output: Option<&Path>, fallback: &str) -> PathBuf {
    common
        .out
        .clone()
        .or_else(|| cfg_output.map(Path::to_path_buf))
        .unwrap_or_else(|| PathBuf::from(fallback))
}

fn summary(label: &str, curve: &LearningCurve) -> String {
    format!(
        "{label}: runs={} episodes={} auc={:.1} final20={:.3} final100={:.3}",
        curve.runs(),
        curve.episodes(),
        curve.auc(),
        curve.final_mean(20.min(curve.episodes())),
        curve.final_mean(100.min(curve.episodes())),
    )
}

fn cmd_run(config: &Path, common: &Common) -> Result<()> {
    let mut cfg = ExperimentConfig::load(config)?;
    apply_overrides(&mut cfg, common);
    let spec = cfg.resolve()?;
    let dir = out_dir(common, cfg.output.as_deref(), "out");
    let curve = run_batch(&spec, common.parallel)?;
    let label = format!("{} / {}", cfg.mode, cfg.advice);
    emit_csv(&curve, &dir.join("curve.csv"))?;
    emit_plot(
        &[(label.clone(), curve.clone())],
        &dir.join("curve.svg"),
        &format!("{} on {}", cfg.mode, cfg.env),
        orientation_for(spec.env_id),
    )?;
    println!("{}", summary(&label, &curve));
    println!("wrote {}", dir.display());
    Ok(())
}

fn cmd_sweep(config: &Path, common: &Common) -> Result<()> {
    let mut file = SweepFile::load(config)?;
    apply_overrides(&mut file.base, common);
    let dir = out_dir(common, file.base.output.as_deref(), "out");
    let outcome = sweep(&file.candidates, &file.base, common.parallel)?;
    let table = dir.join("sweep.csv");
    std::fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    std::fs::write(&table, outcome.table_csv()).with_context(|| format!("writing {}", table.display()))?;
    let best = &outcome.rows[outcome.best];
    emit_csv(&best.curve, &dir.join("best.csv"))?;
    std::fs::write(dir.join("best.toml"), best.config.to_toml_string())
        .with_context(|| format!("writing {}", dir.join("best.toml").display()))?;
    println!(
        "{} combinations; best alpha={} beta={:?} c={:?} lambda={:?} auc={:.1}",
        outcome.rows.len(),
        best.config.alpha,
        best.config.beta,
        best.config.c,
        best.config.lambda,
        best.auc
    );
    println!("wrote {}", dir.display());
    Ok(())
}

fn cmd_figures(only: Option<&str>, common: &Common) -> Result<()> {
    let dir = out_dir(common, None, "figures");
    let opts = FigureOptions {
        threads: common.parallel,
        seed: common.seed,
        runs: common.runs,
    };
    let selected: Vec<_> = figures()
        .into_iter()
        .filter(|f| only.is_none_or(|o| f.id.contains(o)))
        .collect();
    if selected.is_empty() {
        bail!("no figure matches {:?}", only.unwrap_or_default());
    }
    for fig in &selected {
        let t = Instant::now();
        let curves = run_figure(fig, &opts, Some(&dir))?;
        println!("{} ({:.1}s)", fig.id, t.elapsed().as_secs_f64());
        for (label, curve) in &curves {
            println!("  {}", summary(label, curve));
        }
    }
    println!("wrote {}", dir.display());
    Ok(())
}

fn cmd_verify(seed: u64) -> Result<bool> {
    let mut all = true;
    for (report, secs) in verify::run_all(seed)? {
        println!("{} ({secs:.2}s)", report.line());
        all &= report.passed;
    }
    Ok(all)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Run { config, common } => cmd_run(config, common).map(|_| true),
        Command::Sweep { config, common } => cmd_sweep(config, common).map(|_| true),
        Command::Figures { only, common } => cmd_figures(only.as_deref(), common).map(|_| true),
        Command::Verify { seed } => cmd_verify(*seed),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
