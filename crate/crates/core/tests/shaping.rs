use advice_shaping::agents::TabularStore;
use advice_shaping::harness::verify::{telescoping, xi_sequence};
use advice_shaping::shaping::{shaping_reward_static, DecaySchedule, ModeTag, Potential, ShapingMode};
use proptest::prelude::*;

fn potential(n_states: usize, beta: f64, gamma: f64) -> Potential<TabularStore> {
    Potential::new(TabularStore::new(n_states, 4, 0.0), beta, gamma)
}

#[test]
fn phi_update_examples() {
    let mut phi = potential(4, 0.5, 0.3);
    let old = phi.phi_update(&0, 3, Some((&1, 1)), 1.0).unwrap();
    assert_eq!(old, 0.0);
    assert_eq!(phi.value(&0, 3), -0.5);

    let mut phi = potential(4, 0.5, 0.3);
    for _ in 0..100 {
        phi.phi_update(&2, 1, Some((&2, 1)), 0.0).unwrap();
    }
    assert!(phi.store.as_slice().iter().all(|&v| v == 0.0));

    // terminal successor: delta = -r_expert - Phi(s, a)
    let mut phi = potential(4, 0.5, 0.3);
    phi.store.set(1, 2, 0.4);
    phi.phi_update(&1, 2, None, 1.0).unwrap();
    assert!((phi.value(&1, 2) - (0.4 + 0.5 * (-1.0 - 0.4))).abs() < 1e-15);
}

#[test]
fn dynamic_shaping_examples() {
    let mut phi = potential(4, 0.5, 0.3);
    let old = phi.phi_update(&0, 3, Some((&1, 1)), 1.0).unwrap();
    assert_eq!(phi.shaping_reward_dynamic(Some((&1, 1)), old), 0.0);

    // wall bump repeated: the successor is the freshly updated entry
    let mut phi = potential(4, 0.5, 0.3);
    let old = phi.phi_update(&0, 0, Some((&0, 0)), 1.0).unwrap();
    assert!((phi.shaping_reward_dynamic(Some((&0, 0)), old) + 0.15).abs() < 1e-15);
}

#[test]
fn static_shaping_examples() {
    assert_eq!(shaping_reward_static(1.0, 2.5, Some(2.5)), 0.0);
    assert_eq!(shaping_reward_static(0.3, 1.0, Some(0.0)), -1.0);
    assert_eq!(shaping_reward_static(0.3, 1.0, None), -1.0);
    assert_eq!(shaping_reward_static(0.9, 1.0, None), -1.0);
}

#[test]
fn policy_biases() {
    let mut phi = Potential::new(TabularStore::new(1, 2, 0.0), 0.1, 0.3);
    let dpba = ShapingMode::plain(ModeTag::Dpba);
    assert_eq!(dpba.policy_bias(&phi, &0).unwrap(), vec![0.0, 0.0]);

    phi.store.set(0, 0, -0.5);
    let corrected = ShapingMode::plain(ModeTag::CorrectedDpba);
    let q = [0.4, 0.0];
    let biased: Vec<f64> = q
        .iter()
        .zip(corrected.policy_bias(&phi, &0).unwrap())
        .map(|(a, b)| a + b)
        .collect();
    assert!((biased[0] + 0.1).abs() < 1e-15);
    assert_eq!(biased[1], 0.0);

    let mut pies = ShapingMode::new(ModeTag::Pies, Some(2)).unwrap();
    assert_eq!(pies.policy_bias(&phi, &0).unwrap(), vec![0.5, 0.0]);
    pies.end_episode();
    assert_eq!(pies.policy_bias(&phi, &0).unwrap(), vec![0.25, 0.0]);
    pies.end_episode();
    assert!(pies.policy_bias(&phi, &0).unwrap().iter().all(|&b| b == 0.0));
}

#[test]
fn total_rewards() {
    assert_eq!(
        ShapingMode::new(ModeTag::Pies, Some(5)).unwrap().total_reward(1.0, 7.0),
        1.0
    );
    assert_eq!(ShapingMode::plain(ModeTag::Dpba).total_reward(0.0, -0.15), -0.15);
    assert_eq!(ShapingMode::plain(ModeTag::None).total_reward(1.0, 3.0), 1.0);
    assert_eq!(ShapingMode::plain(ModeTag::StaticPbrs).total_reward(1.0, 0.5), 1.5);
    assert_eq!(ShapingMode::plain(ModeTag::CorrectedDpba).total_reward(1.0, 0.5), 1.5);
}

#[test]
fn xi_schedules() {
    let xi = xi_sequence(5, 9).unwrap();
    let expected = [1.0, 0.8, 0.6, 0.4, 0.2, 0.0, 0.0, 0.0, 0.0];
    for (got, want) in xi.iter().zip(expected) {
        assert!((got - want).abs() <= 1e-12);
    }
    assert_eq!(xi_sequence(1, 4).unwrap(), vec![1.0, 0.0, 0.0, 0.0]);
    assert_eq!(xi_sequence(50, 26).unwrap()[25], 0.5);
    assert!(DecaySchedule::new(0).is_err());
    assert!(ShapingMode::new(ModeTag::Pies, None).is_err());
}

#[test]
fn mode_names_round_trip() {
    for tag in ModeTag::ALL {
        assert_eq!(tag.as_str().parse::<ModeTag>().unwrap(), tag);
    }
    assert!("dbpa".parse::<ModeTag>().is_err());
}

#[test]
fn telescoping_on_recorded_trajectories() {
    assert!(telescoping(1_000, 11).unwrap() <= 1e-10);
}

proptest! {
    #[test]
    fn phi_stays_bounded(
        steps in prop::collection::vec((0usize..6, 0usize..4, prop::option::of((0usize..6, 0usize..4)), -1.0f64..=1.0), 1..400),
        beta in 0.01f64..=1.0,
        gamma in 0.0f64..0.99,
    ) {
        let mut phi = Potential::new(TabularStore::new(6, 4, 0.0), beta, gamma);
        let bound = 1.0 / (1.0 - gamma) + 1e-9;
        for (s, a, next, r) in steps {
            phi.phi_update(&s, a, next.as_ref().map(|(s2, a2)| (s2, *a2)), r).unwrap();
            prop_assert!(phi.store.as_slice().iter().all(|v| v.abs() <= bound));
        }
    }

    #[test]
    fn frozen_potential_telescopes(
        pots in prop::collection::vec(-5.0f64..5.0, 1..60),
        gamma in 0.0f64..=1.0,
    ) {
        // pots[k] is Phi(s_k, a_k) along one trajectory; the last transition is terminal
        let mut total = 0.0;
        let mut discount = 1.0;
        for k in 0..pots.len() {
            total += discount * shaping_reward_static(gamma, pots[k], pots.get(k + 1).copied());
            discount *= gamma;
        }
        prop_assert!((total + pots[0]).abs() <= 1e-10 * (1.0 + pots.len() as f64));
    }

    #[test]
    fn pies_bias_vanishes_after_c_episodes(c in 1u32..60, extra in 0u32..10, p in prop::collection::vec(-3.0f64..3.0, 4)) {
        let mut phi = Potential::new(TabularStore::new(1, 4, 0.0), 0.1, 0.9);
        for (a, v) in p.iter().enumerate() {
            phi.store.set(0, a, *v);
        }
        let mut mode = ShapingMode::new(ModeTag::Pies, Some(c)).unwrap();
        for _ in 0..c + extra {
            mode.end_episode();
        }
        prop_assert!(mode.policy_bias(&phi, &0).unwrap().iter().all(|&b| b == 0.0));
    }
}
