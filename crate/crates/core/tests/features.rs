use std::collections::HashSet;
use std::f64::consts::PI;

use advice_shaping::features::TileCoderConfig;
use advice_shaping::harness::verify::tile_coder_violations;
use advice_shaping::Error;
use proptest::prelude::*;

fn arb_state() -> impl Strategy<Value = [f64; 4]> {
    (-2.4f64..2.4, -3.0f64..3.0, -PI..PI, -3.5f64..3.5).prop_map(|(a, b, c, d)| [a, b, c, d])
}

#[test]
fn cartpole_table_size() {
    let coder = TileCoderConfig::cartpole();
    assert_eq!(coder.num_tilings(), 8);
    assert_eq!(coder.dims(), 4);
    // 3 positions on each clipped axis, 2 on the wrapping one
    assert_eq!(coder.total_table_size(), 8 * 3 * 3 * 2 * 3);
    assert_eq!(coder.period(2), Some(2.0 * PI));
    assert_eq!(coder.period(0), None);
}

#[test]
fn exhaustive_lattice_has_no_violations() {
    assert_eq!(tile_coder_violations(&TileCoderConfig::cartpole(), 10).unwrap(), 0);
    assert_eq!(
        tile_coder_violations(&TileCoderConfig::cartpole_with(4, 5), 7).unwrap(),
        0
    );
}

#[test]
fn out_of_range_components_are_clipped() {
    let coder = TileCoderConfig::cartpole();
    let inside = coder.encode(&[2.4, 3.0, 0.1, 3.5]).unwrap();
    let outside = coder.encode(&[9.0, 40.0, 0.1, 12.0]).unwrap();
    assert_eq!(inside, outside);
}

#[test]
fn bad_inputs() {
    let coder = TileCoderConfig::cartpole();
    assert!(matches!(
        coder.encode(&[0.0; 3]),
        Err(Error::DimensionMismatch { expected: 4, got: 3 })
    ));
    assert!(coder.encode(&[0.0, f64::NAN, 0.0, 0.0]).is_err());
    assert!(TileCoderConfig::new(0, vec![2], vec![(0.0, 1.0)], vec![false]).is_err());
    assert!(TileCoderConfig::new(2, vec![2], vec![(1.0, 1.0)], vec![false]).is_err());
    assert!(TileCoderConfig::new(2, vec![0], vec![(0.0, 1.0)], vec![true]).is_err());
}

proptest! {
    #[test]
    fn cardinality_and_bounds(s in arb_state()) {
        let coder = TileCoderConfig::cartpole();
        let f = coder.encode(&s).unwrap();
        prop_assert_eq!(f.len(), 8);
        let distinct: HashSet<_> = f.indices().iter().collect();
        prop_assert_eq!(distinct.len(), 8);
        prop_assert!(f.indices().iter().all(|&i| i < coder.total_table_size()));
        prop_assert_eq!(coder.encode(&s).unwrap(), f);
    }

    #[test]
    fn wrap_is_periodic(s in arb_state(), k in -3i32..=3) {
        let coder = TileCoderConfig::cartpole();
        let mut shifted = s;
        shifted[2] += f64::from(k) * 2.0 * PI;
        prop_assert_eq!(coder.encode(&s).unwrap(), coder.encode(&shifted).unwrap());
    }

    #[test]
    fn far_apart_states_share_no_index_per_tiling(s in arb_state(), dim in prop::sample::select(vec![0usize, 1, 3])) {
        // Tile width is half the range; moving a full width apart changes every tiling.
        let coder = TileCoderConfig::cartpole();
        let (lo, hi) = [(-2.4, 2.4), (-3.0, 3.0), (0.0, 0.0), (-3.5, 3.5)][dim];
        let width = (hi - lo) / 2.0;
        let mut other = s;
        other[dim] = if s[dim] + width <= hi { s[dim] + width } else { s[dim] - width };
        prop_assume!((other[dim] - s[dim]).abs() >= width - 1e-12);
        let a = coder.encode(&s).unwrap();
        let b = coder.encode(&other).unwrap();
        for (x, y) in a.indices().iter().zip(b.indices()) {
            prop_assert_ne!(x, y);
        }
    }

    #[test]
    fn tiny_moves_keep_most_tiles(s in arb_state(), eps in 1e-7f64..1e-4) {
        let coder = TileCoderConfig::cartpole();
        let mut near = s;
        near[0] = (s[0] + eps).min(2.4);
        let a = coder.encode(&s).unwrap();
        let b = coder.encode(&near).unwrap();
        let shared = a.indices().iter().zip(b.indices()).filter(|(x, y)| x == y).count();
        prop_assert!(shared >= 7);
    }
}
