//! Fast structural checks, shared by the `verify` command and the test suite.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::config::ExperimentConfig;
use super::runner::run_single;
use crate::agents::select_action;
use crate::envs::{AdviceSpec, EnvId, EnvState, Environment, GridSpec};
use crate::error::Result;
use crate::features::TileCoderConfig;
use crate::oracle::{
    greedy_policy, random_deterministic_mdp, solve_shaped_greedy_successor, state_potential, value_iteration,
};
use crate::shaping::{shaping_reward_static, DecaySchedule, ModeTag};

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckReport {
    pub fn line(&self) -> String {
        format!(
            "{} {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail
        )
    }
}

/// Static shaping with state-only potentials on random deterministic MDPs: `Q*_{M'} + Phi` must equal
/// `Q*_M` and the greedy policies must agree.
pub fn static_invariance(n_mdps: usize, seed: u64, tol: f64) -> Result<CheckReport> {
    let (ns, na, gamma) = (5, 3, 0.9);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    let mut policy_mismatches = 0;
    for _ in 0..n_mdps {
        let mdp = random_deterministic_mdp(&mut rng, ns, na, 1, gamma)?;
        let per_state: Vec<f64> = (0..ns)
            .map(|s| {
                if mdp.is_terminal(s) {
                    0.0
                } else {
                    rng.gen_range(-1.0..=1.0)
                }
            })
            .collect();
        let phi = state_potential(&per_state, na);
        let q = value_iteration(&mdp, 1e-13)?;
        let (q_shaped, shaped_policy) = solve_shaped_greedy_successor(&mdp, &phi, 1e-13)?;
        for s in 0..ns {
            for a in 0..na {
                worst = worst.max((q_shaped.get(s, a) + phi[s * na + a] - q.get(s, a)).abs());
            }
        }
        let policy = greedy_policy(&q, None);
        policy_mismatches += (0..ns)
            .filter(|&s| !mdp.is_terminal(s) && policy[s] != shaped_policy[s])
            .count();
    }
    Ok(CheckReport {
        name: "static PBRS invariance",
        passed: worst <= tol && policy_mismatches == 0,
        detail: format!("{n_mdps} MDPs, max |Q'+Phi-Q| = {worst:.3e}, policy mismatches = {policy_mismatches}"),
    })
}

/// The decay weight over the first `episodes` episodes.
pub fn xi_sequence(c: u32, episodes: usize) -> Result<Vec<f64>> {
    let mut schedule = DecaySchedule::new(c)?;
    let mut out = Vec::with_capacity(episodes);
    for _ in 0..episodes {
        out.push(schedule.xi());
        schedule.xi_advance();
    }
    Ok(out)
}

pub fn xi_check(c: u32) -> Result<CheckReport> {
    let episodes = c as usize + 3;
    let got = xi_sequence(c, episodes)?;
    let expected: Vec<f64> = (0..episodes)
        .map(|e| (1.0 - e as f64 / f64::from(c)).max(0.0))
        .collect();
    let worst = got
        .iter()
        .zip(&expected)
        .map(|(g, e)| (g - e).abs())
        .fold(0.0, f64::max);
    Ok(CheckReport {
        name: "PIES decay sequence",
        passed: worst <= 1e-12,
        detail: format!("C = {c}, xi = {got:?}"),
    })
}

/// Worst telescoping error `|sum_t gamma^t F_t + Phi(s_0, a_0)|` over random
/// toy trajectories with a frozen random potential and random actions.
pub fn telescoping(trajectories: usize, seed: u64) -> Result<f64> {
    let grid = GridSpec::toy();
    let env = Environment::Grid(grid.clone());
    let gamma = 0.3;
    let na = env.num_actions();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let phi: Vec<f64> = (0..grid.num_cells() * na).map(|_| rng.gen_range(-1.0..=1.0)).collect();
    let pot = |s: &EnvState, a: usize| match s {
        EnvState::Grid(c) if !env.is_terminal(s) => phi[grid.index(*c) * na + a],
        _ => 0.0,
    };
    let mut worst = 0.0f64;
    for _ in 0..trajectories {
        let mut state = env.reset(&mut rng);
        let mut action = rng.gen_range(0..na);
        let start = pot(&state, action);
        let (mut total, mut discount, mut step) = (0.0, 1.0, 0);
        loop {
            let tr = env.step(&state, action, step)?;
            let next_action = rng.gen_range(0..na);
            let phi_next = (!tr.terminal).then(|| pot(&tr.next_state, next_action));
            total += discount * shaping_reward_static(gamma, pot(&state, action), phi_next);
            if tr.terminal {
                break;
            }
            discount *= gamma;
            state = tr.next_state;
            action = next_action;
            step += 1;
        }
        worst = worst.max((total + start).abs());
    }
    Ok(worst)
}

pub fn telescoping_check(trajectories: usize, seed: u64) -> Result<CheckReport> {
    let worst = telescoping(trajectories, seed)?;
    Ok(CheckReport {
        name: "telescoping",
        passed: worst <= 1e-10,
        detail: format!("{trajectories} toy trajectories, max error = {worst:.3e}"),
    })
}

/// Encodes a `side^4` lattice spanning the cart-pole bounds and counts
/// violations of cardinality, determinism and angle periodicity.
pub fn tile_coder_violations(coder: &TileCoderConfig, side: usize) -> Result<usize> {
    use std::f64::consts::PI;
    let axis = |lo: f64, hi: f64, k: usize| lo + (hi - lo) * k as f64 / (side - 1).max(1) as f64;
    let period = coder.period(2).unwrap_or(2.0 * PI);
    let mut violations = 0;
    for i in 0..side.pow(4) {
        let k = [i % side, i / side % side, i / side.pow(2) % side, i / side.pow(3)];
        let state = [
            axis(-2.4, 2.4, k[0]),
            axis(-3.0, 3.0, k[1]),
            -PI + period * k[2] as f64 / side as f64,
            axis(-3.5, 3.5, k[3]),
        ];
        let a = coder.encode(&state)?;
        let b = coder.encode(&state)?;
        let mut shifted = state;
        shifted[2] += period;
        let wrapped = coder.encode(&shifted)?;
        let mut idx = a.indices().to_vec();
        idx.sort_unstable();
        idx.dedup();
        let ok = a.len() == coder.num_tilings()
            && idx.len() == a.len()
            && idx.iter().all(|&f| f < coder.total_table_size())
            && a == b
            && a == wrapped;
        if !ok {
            violations += 1;
        }
    }
    Ok(violations)
}

pub fn tile_coder_check(side: usize) -> Result<CheckReport> {
    let coder = TileCoderConfig::cartpole();
    let violations = tile_coder_violations(&coder, side)?;
    Ok(CheckReport {
        name: "tile coder",
        passed: violations == 0,
        detail: format!(
            "{} points, {} tilings, violations = {violations}",
            side.pow(4),
            coder.num_tilings()
        ),
    })
}

/// Runs every mode with zero advice and compares the length vectors of
/// `runs` seeded runs against plain Sarsa.
pub fn zero_advice_identity(env: EnvId, episodes: usize, runs: usize) -> Result<CheckReport> {
    let mut mismatches = Vec::new();
    let mut baseline = Vec::new();
    for tag in ModeTag::ALL {
        let mut cfg = ExperimentConfig::new(env.as_str(), "zero", tag.as_str(), 0.1);
        if tag.learns_potential() {
            cfg.beta = Some(0.3);
        }
        if tag == ModeTag::Pies {
            cfg.c = Some(7);
        }
        cfg.episodes = Some(episodes);
        if env == EnvId::CartPole {
            cfg.phi_init_max = Some(0.0);
        }
        let spec = cfg.resolve()?;
        let lengths: Vec<Vec<u32>> = (0..runs).map(|r| run_single(&spec, r)).collect::<Result<_>>()?;
        if tag == ModeTag::None {
            baseline = lengths;
        } else if lengths != baseline {
            mismatches.push(tag.as_str());
        }
    }
    Ok(CheckReport {
        name: "zero advice identity",
        passed: mismatches.is_empty(),
        detail: format!("{env}: {runs} runs x {episodes} episodes, differing modes = {mismatches:?}"),
    })
}

/// Cheap sanity check that exploration never picks outside the action set.
fn exploration_check(seed: u64) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values = [0.0, 1.0, 1.0, -2.0];
    let mut counts = [0usize; 4];
    for _ in 0..10_000 {
        counts[select_action(&values, 0.0, &mut rng)?] += 1;
    }
    Ok(CheckReport {
        name: "greedy tie-break",
        passed: counts[0] == 0 && counts[3] == 0 && counts[1] > 4_000 && counts[2] > 4_000,
        detail: format!("counts = {counts:?}"),
    })
}

/// Every structural check with its default size. Returns reports in a fixed order.
pub fn run_all(seed: u64) -> Result<Vec<(CheckReport, f64)>> {
    let checks: Vec<Box<dyn Fn() -> Result<CheckReport>>> = vec![
        Box::new(move || static_invariance(100, seed, 1e-8)),
        Box::new(|| xi_check(5)),
        Box::new(move || telescoping_check(1_000, seed)),
        Box::new(|| tile_coder_check(10)),
        Box::new(|| zero_advice_identity(EnvId::Toy, 100, 5)),
        Box::new(|| zero_advice_identity(EnvId::GridWorld20, 20, 2)),
        Box::new(|| zero_advice_identity(EnvId::CartPole, 50, 2)),
        Box::new(move || exploration_check(seed)),
    ];
    checks
        .iter()
        .map(|check| {
            let t = Instant::now();
            check().map(|r| (r, t.elapsed().as_secs_f64()))
        })
        .collect()
}

/// Zero advice is accepted by every environment.
pub fn zero_advice_env_ok(env: &Environment) -> bool {
    AdviceSpec::zero().check_env(env).is_ok()
}
