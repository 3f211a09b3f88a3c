use advice_shaping::envs::{
    optimal_episode_length, AdviceKind, AdviceSpec, CartPoleParams, CartPoleState, Cell, EnvId, EnvState, Environment,
    GridAction, GridSpec,
};
use advice_shaping::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn grid(state: Cell) -> EnvState {
    EnvState::Grid(state)
}

#[test]
fn resets() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    assert_eq!(
        Environment::new(EnvId::GridWorld20).reset(&mut rng),
        grid(Cell::new(0, 0))
    );
    let toy = Environment::new(EnvId::Toy);
    assert_eq!(toy.reset(&mut rng), grid(GridSpec::toy().start));
    assert_eq!(toy.reset(&mut rng), toy.reset(&mut rng));
}

#[test]
fn toy_wall_bump_keeps_position() {
    let toy = Environment::new(EnvId::Toy);
    let s = grid(Cell::new(0, 0));
    for a in [GridAction::Up, GridAction::Left] {
        let tr = toy.step(&s, a as usize, 0).unwrap();
        assert_eq!(tr.next_state, s);
        assert_eq!(tr.reward, 0.0);
        assert!(!tr.terminal);
    }
}

#[test]
fn gridworld_goal_arrival() {
    let gw = Environment::new(EnvId::GridWorld20);
    let tr = gw
        .step(&grid(Cell::new(18, 19)), GridAction::Right as usize, 5)
        .unwrap();
    assert_eq!(tr.next_state, grid(Cell::new(19, 19)));
    assert_eq!(tr.reward, 1.0);
    assert!(tr.terminal);
}

#[test]
fn gridworld_step_cap_is_terminal_anywhere() {
    let gw = Environment::new(EnvId::GridWorld20);
    let s = grid(Cell::new(3, 4));
    assert!(!gw.step(&s, 0, 9_998).unwrap().terminal);
    let last = gw.step(&s, 0, 9_999).unwrap();
    assert!(last.terminal);
    assert_eq!(last.reward, 0.0);
    assert!(matches!(gw.step(&s, 0, 10_000), Err(Error::TerminalStep)));
}

#[test]
fn stepping_from_goal_is_an_error() {
    let toy = Environment::new(EnvId::Toy);
    assert!(matches!(
        toy.step(&grid(Cell::new(1, 1)), 0, 0),
        Err(Error::TerminalStep)
    ));
    assert!(matches!(
        toy.step(&grid(Cell::new(0, 0)), 4, 0),
        Err(Error::InvalidAction { .. })
    ));
}

#[test]
fn shortest_paths() {
    assert_eq!(optimal_episode_length(&GridSpec::toy()).unwrap(), 2);
    assert_eq!(optimal_episode_length(&GridSpec::gridworld20()).unwrap(), 38);
    let line = GridSpec {
        width: 2,
        height: 1,
        start: Cell::new(0, 0),
        goal: Cell::new(1, 0),
        max_steps: 10,
    };
    assert_eq!(optimal_episode_length(&line).unwrap(), 1);
}

#[test]
fn right_down_advice() {
    let env = Environment::new(EnvId::GridWorld20);
    let advice = AdviceSpec::with_default_magnitude(AdviceKind::GridRightDown);
    let s = grid(Cell::new(5, 5));
    let r = |a: GridAction| {
        let next = env.peek(&s, a as usize).unwrap();
        advice.expert_reward(&env, &s, a as usize, &next).unwrap()
    };
    assert_eq!(r(GridAction::Right), 1.0);
    assert_eq!(r(GridAction::Down), 1.0);
    assert_eq!(r(GridAction::Up), 0.0);
    assert_eq!(r(GridAction::Left), 0.0);
}

#[test]
fn cartpole_aligned_advice() {
    let env = Environment::new(EnvId::CartPole);
    let advice = AdviceSpec::with_default_magnitude(AdviceKind::CartpoleAligned);
    let leaning_right = EnvState::CartPole(CartPoleState {
        theta: 0.05,
        ..CartPoleState::default()
    });
    let next = env.peek(&leaning_right, 1).unwrap();
    assert_eq!(advice.expert_reward(&env, &leaning_right, 1, &next).unwrap(), 0.1);
    let next = env.peek(&leaning_right, 0).unwrap();
    assert_eq!(advice.expert_reward(&env, &leaning_right, 0, &next).unwrap(), 0.0);
}

#[test]
fn advice_must_match_environment() {
    let cp = Environment::new(EnvId::CartPole);
    let grid_advice = AdviceSpec::with_default_magnitude(AdviceKind::GridGood);
    assert!(matches!(grid_advice.check_env(&cp), Err(Error::AdviceMismatch { .. })));
    assert!(AdviceSpec::new(AdviceKind::GridBad, 0.0).is_err());
    assert!("nonsense".parse::<AdviceKind>().is_err());
}

#[test]
fn cartpole_matches_reference_step() {
    // First step of the classic control equations from the zero state, pushing right.
    let p = CartPoleParams::default();
    let s = p.integrate(CartPoleState::default(), 1);
    let total = 1.1;
    let temp = 10.0 / total;
    let theta_acc = -temp / (0.5 * (4.0 / 3.0 - 0.1 / total));
    let x_acc = temp - 0.05 * theta_acc / total;
    assert_eq!(s.x, 0.0);
    assert_eq!(s.theta, 0.0);
    assert!((s.x_dot - 0.02 * x_acc).abs() < 1e-15);
    assert!((s.theta_dot - 0.02 * theta_acc).abs() < 1e-15);
}

#[test]
fn cartpole_episodes_never_exceed_200_steps() {
    let env = Environment::new(EnvId::CartPole);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for policy in 0..3 {
        let mut s = env.reset(&mut rng);
        let mut t = 0;
        loop {
            let a = match (policy, &s) {
                (0, _) => 0,
                (1, _) => t % 2,
                (_, EnvState::CartPole(c)) => usize::from(c.theta + 0.5 * c.theta_dot > 0.0),
                _ => unreachable!(),
            };
            let tr = env.step(&s, a, t).unwrap();
            t += 1;
            assert_eq!(tr.reward, 1.0);
            if tr.terminal {
                break;
            }
            s = tr.next_state;
        }
        assert!(t <= 200);
    }
}

fn arb_cell(w: usize, h: usize) -> impl Strategy<Value = Cell> {
    (0..w, 0..h).prop_map(|(x, y)| Cell::new(x, y))
}

proptest! {
    #[test]
    fn grid_steps_are_deterministic_and_closed(cell in arb_cell(20, 20), a in 0usize..4, t in 0usize..9_999) {
        let gw = Environment::new(EnvId::GridWorld20);
        let s = grid(cell);
        prop_assume!(!gw.is_terminal(&s));
        let one = gw.step(&s, a, t).unwrap();
        let two = gw.step(&s, a, t).unwrap();
        prop_assert_eq!(&one, &two);
        let EnvState::Grid(n) = one.next_state else { unreachable!() };
        prop_assert!(n.x < 20 && n.y < 20);
        prop_assert!(n.manhattan(cell) <= 1);
    }

    #[test]
    fn grid_episode_reward_is_sparse(actions in prop::collection::vec(0usize..4, 1..150)) {
        let toy = Environment::new(EnvId::Toy);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut s = toy.reset(&mut rng);
        let mut total = 0.0;
        let mut ended_at_goal = false;
        for (t, &a) in actions.iter().enumerate() {
            let tr = toy.step(&s, a, t).unwrap();
            total += tr.reward;
            if tr.terminal {
                ended_at_goal = toy.is_terminal(&tr.next_state);
                break;
            }
            s = tr.next_state;
        }
        prop_assert!(total == 0.0 || total == 1.0);
        prop_assert_eq!(total == 1.0, ended_at_goal);
    }

    #[test]
    fn good_and_bad_advice_are_exclusive_and_bounded(cell in arb_cell(20, 20), a in 0usize..4) {
        let gw = Environment::new(EnvId::GridWorld20);
        let s = grid(cell);
        let next = gw.peek(&s, a).unwrap();
        let r = |k| AdviceSpec::with_default_magnitude(k).expert_reward(&gw, &s, a, &next).unwrap();
        let (good, bad) = (r(AdviceKind::GridGood), r(AdviceKind::GridBad));
        prop_assert!(good == 0.0 || bad == 0.0);
        for k in [AdviceKind::GridGood, AdviceKind::GridBad, AdviceKind::GridRightDown, AdviceKind::Zero] {
            prop_assert!(r(k).abs() <= 1.0);
        }
    }

    #[test]
    fn cartpole_advice_bounded(theta in -0.3f64..0.3, theta_dot in -3.0f64..3.0, a in 0usize..2, c in 0.01f64..5.0) {
        let env = Environment::new(EnvId::CartPole);
        let s = EnvState::CartPole(CartPoleState { theta, theta_dot, ..CartPoleState::default() });
        let next = env.peek(&s, a).unwrap();
        let advice = AdviceSpec::new(AdviceKind::CartpoleAligned, c).unwrap();
        prop_assert!(advice.expert_reward(&env, &s, a, &next).unwrap().abs() <= c.max(1.0));
    }
}
