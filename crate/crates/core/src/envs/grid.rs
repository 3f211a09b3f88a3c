use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A grid cell. `x` grows to the right, `y` grows downwards, `(0, 0)` is the
/// top-left corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub x: usize,
    pub y: usize,
}

impl Cell {
    pub const fn new(x: usize, y: usize) -> Self {
        Cell { x, y }
    }

    pub fn manhattan(self, other: Cell) -> usize {
        self.x.abs_diff(other.x) + self.y.abs_diff(other.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GridAction {
    Up = 0,
    Down = 1,
    Left = 2,
    Right = 3,
}

impl GridAction {
    pub const ALL: [GridAction; 4] = [GridAction::Up, GridAction::Down, GridAction::Left, GridAction::Right];

    pub fn from_index(index: usize) -> Result<Self> {
        Self::ALL.get(index).copied().ok_or(Error::InvalidAction {
            action: index,
            num_actions: 4,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub width: usize,
    pub height: usize,
    pub start: Cell,
    pub goal: Cell,
    /// Episode step cap.
    pub max_steps: usize,
}

impl GridSpec {
    /// The 2x2 toy grid: start top-left, goal bottom-right, 100-step cap.
    pub fn toy() -> Self {
        GridSpec {
            width: 2,
            height: 2,
            start: Cell::new(0, 0),
            goal: Cell::new(1, 1),
            max_steps: 100,
        }
    }

    /// The 20x20 grid-world with a 10,000-step cap.
    pub fn gridworld20() -> Self {
        GridSpec {
            width: 20,
            height: 20,
            start: Cell::new(0, 0),
            goal: Cell::new(19, 19),
            max_steps: 10_000,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.width == 0 || self.height == 0 {
            return Err(Error::InvalidGrid("width and height must be positive".into()));
        }
        if !self.contains(self.start) || !self.contains(self.goal) {
            return Err(Error::InvalidGrid("start and goal must lie inside the grid".into()));
        }
        if self.start == self.goal {
            return Err(Error::InvalidGrid("start and goal must differ".into()));
        }
        if self.max_steps < optimal_episode_length(self)? {
            return Err(Error::InvalidGrid("step cap is shorter than the shortest path".into()));
        }
        Ok(())
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.x < self.width && cell.y < self.height
    }

    pub fn num_cells(&self) -> usize {
        self.width * self.height
    }

    pub fn index(&self, cell: Cell) -> usize {
        cell.y * self.width + cell.x
    }

    pub fn cell(&self, index: usize) -> Cell {
        Cell::new(index % self.width, index / self.width)
    }

    /// Deterministic move; bumping into the outer wall leaves the agent in place.
    pub fn apply(&self, cell: Cell, action: GridAction) -> Cell {
        match action {
            GridAction::Up if cell.y > 0 => Cell::new(cell.x, cell.y - 1),
            GridAction::Down if cell.y + 1 < self.height => Cell::new(cell.x, cell.y + 1),
            GridAction::Left if cell.x > 0 => Cell::new(cell.x - 1, cell.y),
            GridAction::Right if cell.x + 1 < self.width => Cell::new(cell.x + 1, cell.y),
            _ => cell,
        }
    }
}

/// Shortest start-to-goal path length, by breadth-first search.
pub fn optimal_episode_length(grid: &GridSpec) -> Result<usize> {
    if grid.width == 0 || grid.height == 0 || !grid.contains(grid.start) || !grid.contains(grid.goal) {
        return Err(Error::InvalidGrid("start and goal must lie inside the grid".into()));
    }
    let mut dist = vec![usize::MAX; grid.num_cells()];
    let mut queue = VecDeque::new();
    dist[grid.index(grid.start)] = 0;
    queue.push_back(grid.start);
    while let Some(cell) = queue.pop_front() {
        let d = dist[grid.index(cell)];
        if cell == grid.goal {
            return Ok(d);
        }
        for action in GridAction::ALL {
            let next = grid.apply(cell, action);
            let slot = &mut dist[grid.index(next)];
            if *slot == usize::MAX {
                *slot = d + 1;
                queue.push_back(next);
            }
        }
    }
    Err(Error::Unreachable)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shortest_paths() {
        assert_eq!(optimal_episode_length(&GridSpec::toy()).unwrap(), 2);
        assert_eq!(optimal_episode_length(&GridSpec::gridworld20()).unwrap(), 38);
        let strip = GridSpec {
            width: 2,
            height: 1,
            start: Cell::new(0, 0),
            goal: Cell::new(1, 0),
            max_steps: 5,
        };
        assert_eq!(optimal_episode_length(&strip).unwrap(), 1);
    }

    #[test]
    fn walls_keep_agent_in_place() {
        let g = GridSpec::toy();
        assert_eq!(g.apply(Cell::new(0, 0), GridAction::Up), Cell::new(0, 0));
        assert_eq!(g.apply(Cell::new(0, 0), GridAction::Left), Cell::new(0, 0));
        assert_eq!(g.apply(Cell::new(1, 0), GridAction::Right), Cell::new(1, 0));
        assert_eq!(g.apply(Cell::new(0, 0), GridAction::Right), Cell::new(1, 0));
    }

    #[test]
    fn validation() {
        assert!(GridSpec::toy().validate().is_ok());
        let mut g = GridSpec::toy();
        g.goal = g.start;
        assert!(g.validate().is_err());
        let mut g = GridSpec::toy();
        g.max_steps = 1;
        assert!(g.validate().is_err());
        let mut g = GridSpec::toy();
        g.goal = Cell::new(2, 0);
        assert!(g.validate().is_err());
    }
}
