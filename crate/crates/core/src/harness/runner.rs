use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::config::RunSpec;
use super::stats::LearningCurve;
use crate::agents::{select_action, ActionValueStore, LinearQ, LinearStore, SarsaLearner, TabularQ, TabularStore};
use crate::envs::{EnvState, Environment};
use crate::error::{Error, Result};
use crate::shaping::{shaping_reward_static, ModeTag, Potential, ShapingMode};

/// Independent random streams of one run. Keeping them apart means that, for
/// example, initialising `Phi` never shifts the exploration stream, so modes
/// that differ only in shaping stay comparable draw for draw.
struct RunRngs {
    env: ChaCha8Rng,
    q_init: ChaCha8Rng,
    phi_init: ChaCha8Rng,
    explore: ChaCha8Rng,
}

impl RunRngs {
    fn new(seed: u64) -> Self {
        let stream = |id: u64| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(id);
            rng
        };
        RunRngs {
            env: stream(0),
            q_init: stream(1),
            phi_init: stream(2),
            explore: stream(3),
        }
    }
}

pub fn run_seed(spec: &RunSpec, run_index: usize) -> u64 {
    spec.base_seed.wrapping_add(run_index as u64)
}

/// Runs `spec.episodes` episodes and returns the step count of each.
pub fn run_single(spec: &RunSpec, run_index: usize) -> Result<Vec<u32>> {
    let mut rngs = RunRngs::new(run_seed(spec, run_index));
    let n_actions = spec.env.num_actions();
    match (&spec.env, &spec.tile_coder) {
        (Environment::Grid(_), _) => train_grid(spec, run_index).map(|o| o.lengths),
        (Environment::CartPole(_), Some(coder)) => {
            let size = coder.total_table_size();
            let tilings = coder.num_tilings();
            let weights = LinearStore::uniform(n_actions, size, tilings, spec.q_init_max, &mut rngs.q_init);
            let q = LinearQ::new(weights, spec.alpha, spec.gamma, spec.lambda);
            let phi = Potential::new(
                LinearStore::uniform(n_actions, size, tilings, spec.phi_init_max, &mut rngs.phi_init),
                spec.beta,
                spec.gamma,
            );
            let featurize = |s: &EnvState| match s {
                EnvState::CartPole(c) => coder.encode(&c.to_array()),
                EnvState::Grid(_) => Err(Error::Config("tile coder got a grid state".into())),
            };
            run_episodes(spec, q, phi, featurize, &mut rngs).map(|(lengths, ..)| lengths)
        }
        (Environment::CartPole(_), None) => Err(Error::Config("cart-pole needs a tile coder".into())),
    }
}

/// A finished tabular run: episode lengths plus the final `Q` and `Phi` tables,
/// indexed by `GridSpec::index`.
#[derive(Debug, Clone)]
pub struct GridOutcome {
    pub lengths: Vec<u32>,
    pub q: TabularStore,
    pub phi: TabularStore,
}

/// Same run as [`run_single`] on a grid task, keeping the learned tables.
pub fn train_grid(spec: &RunSpec, run_index: usize) -> Result<GridOutcome> {
    let Environment::Grid(grid) = &spec.env else {
        return Err(Error::Config("train_grid needs a grid environment".into()));
    };
    let mut rngs = RunRngs::new(run_seed(spec, run_index));
    let (n_states, n_actions) = (grid.num_cells(), spec.env.num_actions());
    let mut q = TabularQ::new(n_states, n_actions, spec.alpha, spec.gamma);
    q.table = uniform_table(n_states, n_actions, spec.q_init_max, &mut rngs.q_init);
    let phi = Potential::new(
        uniform_table(n_states, n_actions, spec.phi_init_max, &mut rngs.phi_init),
        spec.beta,
        spec.gamma,
    );
    let featurize = |s: &EnvState| match s {
        EnvState::Grid(c) => Ok(grid.index(*c)),
        EnvState::CartPole(_) => Err(Error::Config("grid learner got a cart-pole state".into())),
    };
    let (lengths, q, phi) = run_episodes(spec, q, phi, featurize, &mut rngs)?;
    Ok(GridOutcome {
        lengths,
        q: q.table,
        phi: phi.store,
    })
}

fn uniform_table<R: Rng>(n_states: usize, n_actions: usize, max: f64, rng: &mut R) -> TabularStore {
    let mut table = TabularStore::new(n_states, n_actions, 0.0);
    if max > 0.0 {
        for s in 0..n_states {
            for a in 0..n_actions {
                table.set(s, a, rng.gen_range(0.0..max));
            }
        }
    }
    table
}

fn biased_values<S: ActionValueStore>(q: &S, phi: &Potential<S>, mode: &ShapingMode, key: &S::Key) -> Result<Vec<f64>> {
    let mut values = q.values(key);
    let bias = mode.policy_bias(phi, key)?;
    for (v, b) in values.iter_mut().zip(bias) {
        *v += b;
    }
    Ok(values)
}

/// The shared episode loop. Within a step:
/// 1. act, observe `(s, a, r, s')` and pick `a'` from the biased policy;
/// 2. update `Phi(s, a)` on the pre-update table, keeping the old value;
/// 3. form `F = gamma * Phi_post(s', a') - Phi_old(s, a)`;
/// 4. update `Q` with `r + F` (or plain `r`, depending on the mode).
fn run_episodes<L, F>(
    spec: &RunSpec,
    mut learner: L,
    mut phi: Potential<L::Store>,
    featurize: F,
    rngs: &mut RunRngs,
) -> Result<(Vec<u32>, L, Potential<L::Store>)>
where
    L: SarsaLearner,
    F: Fn(&EnvState) -> Result<<L::Store as ActionValueStore>::Key>,
{
    let env = &spec.env;
    let advice = &spec.advice;
    let mut mode = spec.mode;
    let tag = mode.tag;
    let static_phi = |state: &EnvState, action: usize| -> Result<f64> {
        let next = env.peek(state, action)?;
        Ok(-advice.expert_reward(env, state, action, &next)?)
    };

    let mut lengths = Vec::with_capacity(spec.episodes);
    for episode in 1..=spec.episodes {
        let epsilon = spec.exploration.epsilon_at(episode);
        learner.begin_episode();
        let mut state = env.reset(&mut rngs.env);
        let mut key = featurize(&state)?;
        let mut action = select_action(
            &biased_values(learner.store(), &phi, &mode, &key)?,
            epsilon,
            &mut rngs.explore,
        )?;
        let mut t = 0;
        loop {
            let tr = env.step(&state, action, t)?;
            t += 1;
            let next = if tr.terminal {
                None
            } else {
                let next_key = featurize(&tr.next_state)?;
                let values = biased_values(learner.store(), &phi, &mode, &next_key)?;
                let next_action = select_action(&values, epsilon, &mut rngs.explore)?;
                Some((next_key, next_action))
            };
            let next_ref = next.as_ref().map(|(k, a)| (k, *a));

            let f = match tag {
                ModeTag::None => 0.0,
                ModeTag::StaticPbrs => {
                    let phi_next = match &next {
                        Some((_, a)) => Some(static_phi(&tr.next_state, *a)?),
                        None => None,
                    };
                    shaping_reward_static(spec.gamma, static_phi(&state, action)?, phi_next)
                }
                ModeTag::Dpba | ModeTag::CorrectedDpba | ModeTag::Pies => {
                    let r_expert = advice.expert_reward(env, &state, action, &tr.next_state)?;
                    let phi_old = phi.phi_update(&key, action, next_ref, r_expert)?;
                    phi.shaping_reward_dynamic(next_ref, phi_old)
                }
            };
            learner.update(&key, action, mode.total_reward(tr.reward, f), next_ref)?;

            match next {
                Some((k, a)) => {
                    state = tr.next_state;
                    key = k;
                    action = a;
                }
                None => break,
            }
        }
        mode.end_episode();
        lengths.push(t as u32);
    }
    Ok((lengths, learner, phi))
}

/// Runs `spec.runs` seeded runs. `threads` caps the worker count (`None` uses
/// the global pool, `Some(1)` runs sequentially); results are ordered by run
/// index either way.
pub fn run_batch(spec: &RunSpec, threads: Option<usize>) -> Result<LearningCurve> {
    let runs: Vec<usize> = (0..spec.runs).collect();
    let lengths = match threads {
        Some(1) => runs.iter().map(|&i| run_single(spec, i)).collect::<Result<Vec<_>>>()?,
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Config(format!("thread pool: {e}")))?
            .install(|| {
                runs.par_iter()
                    .map(|&i| run_single(spec, i))
                    .collect::<Result<Vec<_>>>()
            })?,
        None => runs
            .par_iter()
            .map(|&i| run_single(spec, i))
            .collect::<Result<Vec<_>>>()?,
    };
    LearningCurve::new(lengths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::ExperimentConfig;

    fn toy(mode: &str) -> ExperimentConfig {
        let mut c = ExperimentConfig::new("toy", "grid_bad", mode, 0.1);
        c.runs = Some(3);
        c
    }

    #[test]
    fn seeded_runs_repeat() {
        let spec = toy("dpba").with_beta(0.5).resolve().unwrap();
        assert_eq!(run_single(&spec, 0).unwrap(), run_single(&spec, 0).unwrap());
        let spec = ExperimentConfig::new("cartpole", "cartpole_aligned", "pies", 0.2)
            .with_beta(0.5)
            .with_c(20);
        let mut spec = spec.resolve().unwrap();
        spec.episodes = 20;
        assert_eq!(run_single(&spec, 4).unwrap(), run_single(&spec, 4).unwrap());
    }

    #[test]
    fn unshaped_sarsa_learns_the_toy_grid() {
        let spec = toy("none").resolve().unwrap();
        let lengths = run_single(&spec, 0).unwrap();
        assert_eq!(lengths.len(), 100);
        assert!(lengths[90..].iter().all(|&l| l == 2), "{lengths:?}");
    }

    #[test]
    fn batch_is_independent_of_thread_count() {
        let spec = toy("pies").with_beta(0.2).with_c(5).resolve().unwrap();
        let a = run_batch(&spec, Some(1)).unwrap();
        let b = run_batch(&spec, Some(3)).unwrap();
        let c = run_batch(&spec, None).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn lengths_respect_the_cap() {
        let mut cfg = ExperimentConfig::new("gridworld20", "grid_right_down", "none", 0.05);
        cfg.max_steps = Some(60);
        cfg.episodes = Some(5);
        let spec = cfg.resolve().unwrap();
        for l in run_single(&spec, 0).unwrap() {
            assert!((1..=60).contains(&l));
        }
        cfg.max_steps = Some(37);
        assert!(cfg.resolve().is_err());
    }
}
