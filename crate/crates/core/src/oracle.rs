//! Exact dynamic programming on small finite MDPs.
//!
//! Used as ground truth for the invariance properties of the shaping modes:
//! value iteration for `Q*`, iterative policy evaluation for `Q^pi`, and
//! construction of statically shaped MDPs.

use std::fmt::Write as _;

use rand::Rng;

use crate::envs::{GridAction, GridSpec};
use crate::error::{Error, Result};

const ROW_SUM_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 1_000_000;
const MAX_POLICY_ITERATIONS: usize = 1_000;

/// `<S, A, T, gamma, R>` with explicit terminal states.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteMdp {
    n_states: usize,
    n_actions: usize,
    /// `P(s' | s, a)` at `[(s * n_actions + a) * n_states + s']`.
    transition: Vec<f64>,
    /// `R(s, a)` at `[s * n_actions + a]`.
    reward: Vec<f64>,
    gamma: f64,
    terminal: Vec<bool>,
}

/// A state-action value matrix, row-major over states.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactQ {
    pub n_actions: usize,
    pub values: Vec<f64>,
}

impl ExactQ {
    pub fn get(&self, s: usize, a: usize) -> f64 {
        self.values[s * self.n_actions + a]
    }

    pub fn row(&self, s: usize) -> &[f64] {
        &self.values[s * self.n_actions..(s + 1) * self.n_actions]
    }

    pub fn n_states(&self) -> usize {
        self.values.len() / self.n_actions
    }

    /// Sup-norm distance to another matrix of the same shape.
    pub fn max_abs_diff(&self, other: &ExactQ) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl FiniteMdp {
    pub fn new(
        n_states: usize,
        n_actions: usize,
        transition: Vec<f64>,
        reward: Vec<f64>,
        gamma: f64,
        terminal_states: &[usize],
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidMdp(msg));
        if n_states == 0 || n_actions == 0 {
            return bad("need at least one state and one action".into());
        }
        if transition.len() != n_states * n_actions * n_states {
            return bad(format!("transition tensor has {} entries", transition.len()));
        }
        if reward.len() != n_states * n_actions {
            return bad(format!("reward matrix has {} entries", reward.len()));
        }
        if !(0.0..1.0).contains(&gamma) {
            return bad(format!("gamma {gamma} outside [0, 1)"));
        }
        if reward.iter().any(|r| !r.is_finite()) {
            return bad("non-finite reward".into());
        }
        for (row, probs) in transition.chunks(n_states).enumerate() {
            if probs.iter().any(|&p| !(0.0..=1.0).contains(&p)) {
                return bad(format!("row {row} has a probability outside [0, 1]"));
            }
            let sum: f64 = probs.iter().sum();
            if (sum - 1.0).abs() > ROW_SUM_TOL {
                return bad(format!("row {row} sums to {sum}"));
            }
        }
        let mut terminal = vec![false; n_states];
        for &t in terminal_states {
            if t >= n_states {
                return bad(format!("terminal state {t} out of range"));
            }
            terminal[t] = true;
            for a in 0..n_actions {
                let row = &transition[(t * n_actions + a) * n_states..][..n_states];
                if row[t] != 1.0 || reward[t * n_actions + a] != 0.0 {
                    return bad(format!("terminal state {t} must self-loop with zero reward"));
                }
            }
        }
        Ok(FiniteMdp {
            n_states,
            n_actions,
            transition,
            reward,
            gamma,
            terminal,
        })
    }

    /// Deterministic MDP from a successor table `next[s * n_actions + a]`.
    pub fn deterministic(
        n_states: usize,
        n_actions: usize,
        next: &[usize],
        reward: Vec<f64>,
        gamma: f64,
        terminal_states: &[usize],
    ) -> Result<Self> {
        if next.len() != n_states * n_actions || next.iter().any(|&s| s >= n_states) {
            return Err(Error::InvalidMdp("bad successor table".into()));
        }
        let mut transition = vec![0.0; n_states * n_actions * n_states];
        for (sa, &s_next) in next.iter().enumerate() {
            transition[sa * n_states + s_next] = 1.0;
        }
        Self::new(n_states, n_actions, transition, reward, gamma, terminal_states)
    }

    /// The grid as an MDP over cells: +1 for entering the goal, goal terminal.
    pub fn from_grid(grid: &GridSpec, gamma: f64) -> Result<Self> {
        let n_states = grid.num_cells();
        let n_actions = GridAction::ALL.len();
        let goal = grid.index(grid.goal);
        let mut next = Vec::with_capacity(n_states * n_actions);
        let mut reward = Vec::with_capacity(n_states * n_actions);
        for s in 0..n_states {
            for action in GridAction::ALL {
                if s == goal {
                    next.push(goal);
                    reward.push(0.0);
                } else {
                    let n = grid.index(grid.apply(grid.cell(s), action));
                    next.push(n);
                    reward.push(if n == goal { 1.0 } else { 0.0 });
                }
            }
        }
        Self::deterministic(n_states, n_actions, &next, reward, gamma, &[goal])
    }

    pub fn n_states(&self) -> usize {
        self.n_states
    }

    pub fn n_actions(&self) -> usize {
        self.n_actions
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn is_terminal(&self, s: usize) -> bool {
        self.terminal[s]
    }

    pub fn terminal_states(&self) -> Vec<usize> {
        (0..self.n_states).filter(|&s| self.terminal[s]).collect()
    }

    pub fn reward(&self, s: usize, a: usize) -> f64 {
        self.reward[s * self.n_actions + a]
    }

    pub fn transition_row(&self, s: usize, a: usize) -> &[f64] {
        &self.transition[(s * self.n_actions + a) * self.n_states..][..self.n_states]
    }

    /// The successor of `(s, a)` if the transition is deterministic.
    pub fn successor(&self, s: usize, a: usize) -> Option<usize> {
        let row = self.transition_row(s, a);
        row.iter().position(|&p| p == 1.0)
    }

    /// `R(s,a) + gamma * E[v(s')]` for a state-value vector `v`.
    fn backup(&self, s: usize, a: usize, v: &[f64]) -> f64 {
        let expected: f64 = self
            .transition_row(s, a)
            .iter()
            .zip(v)
            .filter(|(&p, _)| p != 0.0)
            .map(|(p, v)| p * v)
            .sum();
        self.reward(s, a) + self.gamma * expected
    }

    fn state_values_greedy(&self, q: &ExactQ) -> Vec<f64> {
        (0..self.n_states)
            .map(|s| q.row(s).iter().copied().fold(f64::NEG_INFINITY, f64::max))
            .collect()
    }

    /// One application of the Bellman optimality operator; terminal rows are 0.
    pub fn optimality_sweep(&self, q: &ExactQ) -> ExactQ {
        let v = self.state_values_greedy(q);
        let mut values = vec![0.0; self.n_states * self.n_actions];
        for s in (0..self.n_states).filter(|&s| !self.terminal[s]) {
            for a in 0..self.n_actions {
                values[s * self.n_actions + a] = self.backup(s, a, &v);
            }
        }
        ExactQ {
            n_actions: self.n_actions,
            values,
        }
    }

    /// Sup-norm residual of the Bellman optimality equation.
    pub fn bellman_residual(&self, q: &ExactQ) -> f64 {
        self.optimality_sweep(q).max_abs_diff(q)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let terminal: Vec<String> = self.terminal_states().iter().map(usize::to_string).collect();
        let _ = writeln!(out, "n_states {}", self.n_states);
        let _ = writeln!(out, "n_actions {}", self.n_actions);
        let _ = writeln!(out, "gamma {}", self.gamma);
        let _ = writeln!(out, "terminal {}", terminal.join(" ").trim_end());
        out.push_str("reward\n");
        for row in self.reward.chunks(self.n_actions) {
            out.push_str(&join(row));
            out.push('\n');
        }
        out.push_str("transition\n");
        for row in self.transition.chunks(self.n_states) {
            out.push_str(&join(row));
            out.push('\n');
        }
        out
    }

    /// Parses the plain-text format written by [`FiniteMdp::to_text`]:
    ///
    /// ```text
    /// # comments and blank lines are ignored
    /// n_states 2
    /// n_actions 1
    /// gamma 0.5
    /// terminal 1
    /// reward
    /// 1          <- one line per state, n_actions rewards
    /// 0
    /// transition
    /// 0 1        <- one line per (state, action), state-major, n_states probabilities
    /// 0 1
    /// ```
    pub fn from_text(text: &str) -> Result<Self> {
        let mut cur = LineCursor::new(text);
        let n_states: usize = cur.header("n_states")?;
        let n_actions: usize = cur.header("n_actions")?;
        let gamma: f64 = cur.header("gamma")?;
        let terminal: Vec<usize> = cur.list("terminal")?;
        cur.keyword("reward")?;
        let reward = cur.rows(n_states, n_actions)?;
        cur.keyword("transition")?;
        let transition = cur.rows(n_states * n_actions, n_states)?;
        Self::new(n_states, n_actions, transition, reward, gamma, &terminal)
    }
}

struct LineCursor<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> LineCursor<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        LineCursor { lines, pos: 0 }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let line = self.lines.get(self.pos).copied().ok_or_else(|| Error::Parse {
            line: self.lines.last().map_or(0, |l| l.0),
            msg: format!("unexpected end of input, expected {what}"),
        })?;
        self.pos += 1;
        Ok(line)
    }

    fn keyword(&mut self, key: &str) -> Result<()> {
        let (no, line) = self.next(key)?;
        if line != key {
            return Err(Error::Parse {
                line: no,
                msg: format!("expected `{key}`"),
            });
        }
        Ok(())
    }

    fn list<T: std::str::FromStr>(&mut self, key: &str) -> Result<Vec<T>>
    where
        T::Err: std::fmt::Display,
    {
        let (no, line) = self.next(key)?;
        let rest = line
            .strip_prefix(key)
            .filter(|r| r.is_empty() || r.starts_with(char::is_whitespace))
            .ok_or_else(|| Error::Parse {
                line: no,
                msg: format!("expected `{key}`"),
            })?;
        parse_all(no, rest)
    }

    fn header<T: std::str::FromStr>(&mut self, key: &str) -> Result<T>
    where
        T::Err: std::fmt::Display,
    {
        let line_no = self.lines.get(self.pos).map_or(0, |l| l.0);
        let mut values = self.list::<T>(key)?;
        if values.len() != 1 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("`{key}` takes one value"),
            });
        }
        Ok(values.remove(0))
    }

    fn rows(&mut self, count: usize, width: usize) -> Result<Vec<f64>> {
        let mut out = Vec::with_capacity(count * width);
        for _ in 0..count {
            let (no, line) = self.next("a row of numbers")?;
            let row: Vec<f64> = parse_all(no, line)?;
            if row.len() != width {
                return Err(Error::Parse {
                    line: no,
                    msg: format!("expected {width} values, found {}", row.len()),
                });
            }
            out.extend(row);
        }
        Ok(out)
    }
}

fn parse_all<T: std::str::FromStr>(line: usize, text: &str) -> Result<Vec<T>>
where
    T::Err: std::fmt::Display,
{
    text.split_whitespace()
        .map(|x| {
            x.parse::<T>().map_err(|e| Error::Parse {
                line,
                msg: format!("`{x}`: {e}"),
            })
        })
        .collect()
}

fn join(row: &[f64]) -> String {
    row.iter().map(f64::to_string).collect::<Vec<_>>().join(" ")
}

/// Iterates the Bellman optimality operator until successive sweeps differ by
/// less than `tol` in sup norm; the returned matrix then has residual below
/// `gamma * tol`.
pub fn value_iteration(mdp: &FiniteMdp, tol: f64) -> Result<ExactQ> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidMdp("tolerance must be positive".into()));
    }
    let mut q = ExactQ {
        n_actions: mdp.n_actions,
        values: vec![0.0; mdp.n_states * mdp.n_actions],
    };
    for _ in 0..MAX_SWEEPS {
        let next = mdp.optimality_sweep(&q);
        let change = next.max_abs_diff(&q);
        q = next;
        if change < tol {
            return Ok(q);
        }
    }
    Err(Error::NoConvergence(MAX_SWEEPS))
}

/// `Q^pi` for a deterministic policy, by iterating its Bellman equation.
pub fn policy_evaluation(mdp: &FiniteMdp, policy: &[usize], tol: f64) -> Result<ExactQ> {
    if policy.len() != mdp.n_states || policy.iter().any(|&a| a >= mdp.n_actions) {
        return Err(Error::InvalidMdp("policy does not match the MDP".into()));
    }
    let mut q = ExactQ {
        n_actions: mdp.n_actions,
        values: vec![0.0; mdp.n_states * mdp.n_actions],
    };
    for _ in 0..MAX_SWEEPS {
        let v: Vec<f64> = (0..mdp.n_states).map(|s| q.get(s, policy[s])).collect();
        let mut change: f64 = 0.0;
        let mut next = q.values.clone();
        for s in (0..mdp.n_states).filter(|&s| !mdp.terminal[s]) {
            for a in 0..mdp.n_actions {
                let idx = s * mdp.n_actions + a;
                next[idx] = mdp.backup(s, a, &v);
                change = change.max((next[idx] - q.values[idx]).abs());
            }
        }
        q.values = next;
        if change < tol {
            return Ok(q);
        }
    }
    Err(Error::NoConvergence(MAX_SWEEPS))
}

/// Per-state argmax of `q + bias`, lowest action index on ties.
pub fn greedy_policy(q: &ExactQ, bias: Option<&[f64]>) -> Vec<usize> {
    (0..q.n_states())
        .map(|s| {
            let mut best = 0;
            let mut best_v = f64::NEG_INFINITY;
            for a in 0..q.n_actions {
                let v = q.get(s, a) + bias.map_or(0.0, |b| b[s * q.n_actions + a]);
                if v > best_v {
                    best_v = v;
                    best = a;
                }
            }
            best
        })
        .collect()
}

/// Broadcasts a state potential `phi(s)` to every action.
pub fn state_potential(phi: &[f64], n_actions: usize) -> Vec<f64> {
    phi.iter().flat_map(|&p| std::iter::repeat_n(p, n_actions)).collect()
}

/// `M'` with reward `R(s,a) + E_{s'}[gamma * phi(s', next_action[s']) - phi(s,a)]`.
///
/// `next_action` fixes the action whose potential is collected on arrival in
/// each state; it is irrelevant for state-only potentials.
pub fn shape_statically(mdp: &FiniteMdp, phi: &[f64], next_action: &[usize]) -> Result<FiniteMdp> {
    let (ns, na) = (mdp.n_states, mdp.n_actions);
    if phi.len() != ns * na || next_action.len() != ns || next_action.iter().any(|&a| a >= na) {
        return Err(Error::InvalidMdp(
            "potential or successor policy has the wrong shape".into(),
        ));
    }
    if let Some(t) = mdp
        .terminal_states()
        .into_iter()
        .find(|&t| phi[t * na..(t + 1) * na].iter().any(|&p| p != 0.0))
    {
        return Err(Error::TerminalPotential(t));
    }
    let arrival: Vec<f64> = (0..ns).map(|s| phi[s * na + next_action[s]]).collect();
    let mut reward = mdp.reward.clone();
    for s in (0..ns).filter(|&s| !mdp.terminal[s]) {
        for a in 0..na {
            let expected: f64 = mdp.transition_row(s, a).iter().zip(&arrival).map(|(p, v)| p * v).sum();
            reward[s * na + a] += mdp.gamma * expected - phi[s * na + a];
        }
    }
    Ok(FiniteMdp { reward, ..mdp.clone() })
}

/// Solves the statically shaped MDP under the greedy-successor convention: the
/// agent follows `argmax_a Q'(s, a) + phi(s, a)`, and `M'` collects the
/// potential of that action on arrival. Runs policy iteration over shaped MDPs
/// and returns the shaped values together with the fixed-point policy.
pub fn solve_shaped_greedy_successor(mdp: &FiniteMdp, phi: &[f64], tol: f64) -> Result<(ExactQ, Vec<usize>)> {
    let zero = ExactQ {
        n_actions: mdp.n_actions,
        values: vec![0.0; mdp.n_states * mdp.n_actions],
    };
    let mut policy = greedy_policy(&zero, Some(phi));
    for _ in 0..MAX_POLICY_ITERATIONS {
        let shaped = shape_statically(mdp, phi, &policy)?;
        let q = policy_evaluation(&shaped, &policy, tol)?;
        let improved = greedy_policy(&q, Some(phi));
        if improved == policy {
            return Ok((q, policy));
        }
        policy = improved;
    }
    Err(Error::NoConvergence(MAX_POLICY_ITERATIONS))
}

/// Random deterministic MDP: uniform successors, rewards in `[-1, 1]`, the last
/// `n_terminal` states terminal.
pub fn random_deterministic_mdp<R: Rng + ?Sized>(
    rng: &mut R,
    n_states: usize,
    n_actions: usize,
    n_terminal: usize,
    gamma: f64,
) -> Result<FiniteMdp> {
    if n_terminal >= n_states {
        return Err(Error::InvalidMdp("need at least one non-terminal state".into()));
    }
    let first_terminal = n_states - n_terminal;
    let mut next = Vec::with_capacity(n_states * n_actions);
    let mut reward = Vec::with_capacity(n_states * n_actions);
    for s in 0..n_states {
        for _ in 0..n_actions {
            if s >= first_terminal {
                next.push(s);
                reward.push(0.0);
            } else {
                next.push(rng.gen_range(0..n_states));
                reward.push(rng.gen_range(-1.0..=1.0));
            }
        }
    }
    let terminal: Vec<usize> = (first_terminal..n_states).collect();
    FiniteMdp::deterministic(n_states, n_actions, &next, reward, gamma, &terminal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn toy_grid_values() {
        let toy = GridSpec::toy();
        let mdp = FiniteMdp::from_grid(&toy, 0.3).unwrap();
        let q = value_iteration(&mdp, 1e-13).unwrap();
        let s = toy.index(toy.start);
        assert!((q.get(s, GridAction::Right as usize) - 0.3).abs() < 1e-12);
        assert!((q.get(s, GridAction::Down as usize) - 0.3).abs() < 1e-12);
        // wall bump from the start: gamma * V(S)
        assert!((q.get(s, GridAction::Up as usize) - 0.09).abs() < 1e-12);
        assert!(mdp.bellman_residual(&q) < 1e-13);

        // greedy rollout reaches the goal in the shortest number of moves
        let pi = greedy_policy(&q, None);
        let mut cell = s;
        let mut steps = 0;
        while !mdp.is_terminal(cell) {
            cell = mdp.successor(cell, pi[cell]).unwrap();
            steps += 1;
        }
        assert_eq!(steps, 2);
    }

    #[test]
    fn trivial_mdps() {
        let single = FiniteMdp::deterministic(1, 2, &[0, 0], vec![0.0, 0.0], 0.9, &[0]).unwrap();
        let q = value_iteration(&single, 1e-12).unwrap();
        assert_eq!(q.values, vec![0.0, 0.0]);

        let loop_ = FiniteMdp::deterministic(1, 1, &[0], vec![1.0], 0.5, &[]).unwrap();
        let q = value_iteration(&loop_, 1e-14).unwrap();
        assert!((q.get(0, 0) - 2.0).abs() < 1e-13);
    }

    #[test]
    fn greedy_with_bias() {
        let q = ExactQ {
            n_actions: 2,
            values: vec![1.0, 2.0],
        };
        assert_eq!(greedy_policy(&q, None), vec![1]);
        assert_eq!(greedy_policy(&q, Some(&[2.0, 0.0])), vec![0]);
        let tie = ExactQ {
            n_actions: 3,
            values: vec![1.0, 1.0, 0.0],
        };
        assert_eq!(greedy_policy(&tie, None), vec![0]);
    }

    #[test]
    fn zero_potential_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mdp = random_deterministic_mdp(&mut rng, 5, 3, 1, 0.9).unwrap();
        let shaped = shape_statically(&mdp, &[0.0; 15], &[0; 5]).unwrap();
        assert_eq!(shaped, mdp);
    }

    #[test]
    fn state_potential_shifts_values_on_a_chain() {
        // 0 -> 1 -> 2 -> 3(terminal), reward 1 on the last move; action 1 stays put
        let next = [1, 0, 2, 1, 3, 2, 3, 3];
        let reward = vec![0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0];
        let mdp = FiniteMdp::deterministic(4, 2, &next, reward, 0.9, &[3]).unwrap();
        let phi_s = [0.7, -1.2, 2.5, 0.0];
        let phi = state_potential(&phi_s, 2);
        let shaped = shape_statically(&mdp, &phi, &[0; 4]).unwrap();
        let q = value_iteration(&mdp, 1e-13).unwrap();
        let qs = value_iteration(&shaped, 1e-13).unwrap();
        for (s, p) in phi_s.iter().enumerate() {
            for a in 0..2 {
                assert!((qs.get(s, a) - (q.get(s, a) - p)).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn state_action_potential_invariance_with_greedy_successor() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..50 {
            let mdp = random_deterministic_mdp(&mut rng, 5, 3, 1, 0.9).unwrap();
            let mut phi: Vec<f64> = (0..15).map(|_| rng.gen_range(-2.0..2.0)).collect();
            phi[12..].fill(0.0);
            let q = value_iteration(&mdp, 1e-12).unwrap();
            let (qs, pi_shaped) = solve_shaped_greedy_successor(&mdp, &phi, 1e-12).unwrap();
            let pi = greedy_policy(&q, None);
            for s in 0..4 {
                assert_eq!(pi_shaped[s], pi[s]);
                for a in 0..3 {
                    assert!((qs.get(s, a) + phi[s * 3 + a] - q.get(s, a)).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn terminal_potential_rejected() {
        let mdp = FiniteMdp::deterministic(2, 1, &[1, 1], vec![1.0, 0.0], 0.9, &[1]).unwrap();
        assert!(matches!(
            shape_statically(&mdp, &[0.0, 1.0], &[0, 0]),
            Err(Error::TerminalPotential(1))
        ));
    }

    #[test]
    fn malformed_mdps() {
        assert!(FiniteMdp::new(1, 1, vec![0.5], vec![0.0], 0.9, &[]).is_err());
        assert!(FiniteMdp::new(1, 1, vec![1.0], vec![0.0], 1.0, &[]).is_err());
        assert!(FiniteMdp::new(1, 1, vec![1.0], vec![1.0], 0.5, &[0]).is_err());
        assert!(value_iteration(&FiniteMdp::new(1, 1, vec![1.0], vec![0.0], 0.5, &[]).unwrap(), 0.0).is_err());
    }

    #[test]
    fn text_format_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mdp = random_deterministic_mdp(&mut rng, 4, 2, 1, 0.95).unwrap();
        let text = mdp.to_text();
        assert_eq!(FiniteMdp::from_text(&text).unwrap(), mdp);

        let doc =
            "# two-state chain\nn_states 2\nn_actions 1\ngamma 0.5\nterminal 1\nreward\n1\n0\ntransition\n0 1\n0 1\n";
        let parsed = FiniteMdp::from_text(doc).unwrap();
        assert_eq!(parsed.reward(0, 0), 1.0);
        assert!(parsed.is_terminal(1));

        let err = FiniteMdp::from_text("n_states 2\nn_actions 1\ngamma 0.5\nterminal\nreward\n1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 6, .. }), "{err}");
    }
}
