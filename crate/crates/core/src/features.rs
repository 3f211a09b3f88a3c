//! Grid tile coding with optional wrapping dimensions.
//!
//! Each tiling partitions every dimension into `tiles_per_dim[i]` tiles of
//! width `(high - low) / tiles_per_dim[i]`; tiling `t` is shifted by
//! `t / num_tilings` of a tile width in every dimension. A non-wrapping
//! dimension therefore spans `tiles + 1` tile positions per tiling, a wrapping
//! one exactly `tiles`. Indices are exact (no hashing): the table holds every
//! tile of every tiling.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Offsets closer than this (in units of `1 / num_tilings` tile) to a tile
/// boundary snap onto it, so that wrap shifts and re-encodings cannot land on
/// different sides of a boundary through rounding.
const BOUNDARY_SNAP: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct TileCoderConfig {
    num_tilings: usize,
    tiles_per_dim: Vec<usize>,
    bounds: Vec<(f64, f64)>,
    wrap: Vec<bool>,
    /// Tile positions per dimension within one tiling.
    extents: Vec<usize>,
    tiling_size: usize,
}

/// Sparse binary feature vector: one active index per tiling.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ActiveFeatures(Vec<usize>);

impl ActiveFeatures {
    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TileCoderConfig {
    /// For a wrapping dimension `bounds[i]` is one period, `[low, low + period)`.
    pub fn new(
        num_tilings: usize,
        tiles_per_dim: Vec<usize>,
        bounds: Vec<(f64, f64)>,
        wrap: Vec<bool>,
    ) -> Result<Self> {
        if num_tilings == 0 {
            return Err(Error::InvalidTileCoder("need at least one tiling".into()));
        }
        let dims = tiles_per_dim.len();
        if dims == 0 || bounds.len() != dims || wrap.len() != dims {
            return Err(Error::InvalidTileCoder(
                "tiles_per_dim, bounds and wrap must have one entry per dimension".into(),
            ));
        }
        if tiles_per_dim.contains(&0) {
            return Err(Error::InvalidTileCoder(
                "every dimension needs at least one tile".into(),
            ));
        }
        for &(lo, hi) in &bounds {
            if !(lo.is_finite() && hi.is_finite() && hi > lo) {
                return Err(Error::InvalidTileCoder(format!("bad bounds ({lo}, {hi})")));
            }
        }
        let extents: Vec<usize> = tiles_per_dim
            .iter()
            .zip(&wrap)
            .map(|(&n, &w)| if w { n } else { n + 1 })
            .collect();
        let tiling_size = extents.iter().product();
        Ok(TileCoderConfig {
            num_tilings,
            tiles_per_dim,
            bounds,
            wrap,
            extents,
            tiling_size,
        })
    }

    /// 8 tilings, 2 tiles per dimension over `(x, x_dot, theta, theta_dot)`,
    /// with the pole angle wrapping on `[-pi, pi)`.
    pub fn cartpole() -> Self {
        Self::cartpole_with(8, 2)
    }

    pub fn cartpole_with(num_tilings: usize, tiles: usize) -> Self {
        TileCoderConfig::new(
            num_tilings,
            vec![tiles; 4],
            vec![(-2.4, 2.4), (-3.0, 3.0), (-PI, PI), (-3.5, 3.5)],
            vec![false, false, true, false],
        )
        .expect("static cart-pole tiling is valid")
    }

    pub fn num_tilings(&self) -> usize {
        self.num_tilings
    }

    pub fn dims(&self) -> usize {
        self.tiles_per_dim.len()
    }

    pub fn total_table_size(&self) -> usize {
        self.num_tilings * self.tiling_size
    }

    /// Period of dimension `dim` if it wraps.
    pub fn period(&self, dim: usize) -> Option<f64> {
        self.wrap[dim].then(|| self.bounds[dim].1 - self.bounds[dim].0)
    }

    pub fn encode(&self, state: &[f64]) -> Result<ActiveFeatures> {
        if state.len() != self.dims() {
            return Err(Error::DimensionMismatch {
                expected: self.dims(),
                got: state.len(),
            });
        }
        if state.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("tile coder input"));
        }
        let n = self.num_tilings as f64;
        // position of each component in units of 1/num_tilings tile
        let scaled: Vec<f64> = state
            .iter()
            .enumerate()
            .map(|(d, &v)| {
                let (lo, hi) = self.bounds[d];
                let tiles = self.tiles_per_dim[d] as f64;
                let v = if self.wrap[d] { v } else { v.clamp(lo, hi) };
                (v - lo) / (hi - lo) * tiles * n
            })
            .collect();

        let mut indices = Vec::with_capacity(self.num_tilings);
        for t in 0..self.num_tilings {
            let mut index = 0usize;
            for (d, &u) in scaled.iter().enumerate() {
                let shifted = u + t as f64;
                let nearest = shifted.round();
                let snapped = if (shifted - nearest).abs() < BOUNDARY_SNAP {
                    nearest
                } else {
                    shifted.floor()
                };
                let mut q = (snapped as i64).div_euclid(self.num_tilings as i64);
                if self.wrap[d] {
                    q = q.rem_euclid(self.tiles_per_dim[d] as i64);
                }
                let q = q as usize;
                debug_assert!(q < self.extents[d]);
                index = index * self.extents[d] + q;
            }
            indices.push(t * self.tiling_size + index);
        }
        Ok(ActiveFeatures(indices))
    }
}
