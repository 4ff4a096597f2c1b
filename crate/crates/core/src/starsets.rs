//! Brute-force count of star sets of maximal size among those chain-bounded
//! by `(T̃_α, W̃_γ)`, and the star set ↔ doubled-multiset correspondence.
//!
//! The search runs over `#`-orbits of the grid (singletons on the diagonal,
//! pairs elsewhere; every cell is its own orbit in ordinary mode). Adding an
//! orbit is rejected as soon as the set stops being chain-bounded, which is
//! sound because chain-boundedness is closed under taking subsets.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::attach::AttachedChains;
use crate::chain::Bounds;
use crate::error::CountError;
use crate::grid::{Cell, Grid};

pub const DEFAULT_ORBIT_BUDGET: usize = 24;

/// A star set, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StarSet {
    pub cells: Vec<Cell>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarSetCount {
    pub max_degree: usize,
    pub count: u64,
    pub sets: Option<Vec<StarSet>>,
}

/// The `#`-orbits of the grid, each sorted, ordered by representative.
pub fn grid_orbits(grid: &Grid) -> Vec<Vec<Cell>> {
    let mut orbits = Vec::new();
    for x in grid.cells() {
        if !grid.is_symplectic() {
            orbits.push(vec![x]);
            continue;
        }
        let y = grid.sharp(x);
        if y == x {
            orbits.push(vec![x]);
        } else if x < y {
            orbits.push(vec![x, y]);
        }
    }
    orbits
}

struct Search<'a> {
    orbits: &'a [Vec<Cell>],
    bounds: &'a Bounds,
    /// cells still available from orbit `i` onwards
    remaining: Vec<usize>,
    list: bool,
    best: usize,
    count: u64,
    sets: Vec<Vec<Cell>>,
}

impl Search<'_> {
    fn run(&mut self, i: usize, cur: &mut Vec<Cell>) {
        if cur.len() + self.remaining[i] < self.best {
            return;
        }
        if i == self.orbits.len() {
            if cur.len() > self.best {
                self.best = cur.len();
                self.count = 0;
                self.sets.clear();
            }
            self.count += 1;
            if self.list {
                let mut s = cur.clone();
                s.sort_unstable();
                self.sets.push(s);
            }
            return;
        }
        let orbit = &self.orbits[i];
        cur.extend_from_slice(orbit);
        if self.bounds.admits(cur) {
            self.run(i + 1, cur);
        }
        cur.truncate(cur.len() - orbit.len());
        self.run(i + 1, cur);
    }
}

/// Maximal size among chain-bounded star sets and how many attain it.
pub fn count_max_bounded_star_sets(
    chains: &AttachedChains,
    list_sets: bool,
    orbit_budget: usize,
) -> Result<StarSetCount, CountError> {
    let orbits = grid_orbits(&chains.grid);
    if orbits.len() > orbit_budget {
        return Err(CountError::BudgetExceeded { orbits: orbits.len(), budget: orbit_budget });
    }
    let bounds = Bounds::new(&chains.t_alpha, &chains.w_gamma);
    let mut remaining = vec![0; orbits.len() + 1];
    for i in (0..orbits.len()).rev() {
        remaining[i] = remaining[i + 1] + orbits[i].len();
    }
    let mut search =
        Search { orbits: &orbits, bounds: &bounds, remaining, list: list_sets, best: 0, count: 0, sets: Vec::new() };
    search.run(0, &mut Vec::new());
    let sets = list_sets.then(|| {
        let mut sets: Vec<StarSet> = search.sets.into_iter().map(|cells| StarSet { cells }).collect();
        sets.sort();
        sets
    });
    Ok(StarSetCount { max_degree: search.best, count: search.count, sets })
}

/// A multiset on the grid, as cell multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialMultiset {
    pub mult: BTreeMap<Cell, u32>,
}

impl SpecialMultiset {
    /// `U = U#` and every diagonal multiplicity is even.
    pub fn is_special(&self, grid: &Grid) -> bool {
        self.mult.iter().all(|(&x, &m)| {
            self.mult.get(&grid.sharp(x)) == Some(&m) && (!grid.is_diagonal(x) || m % 2 == 0)
        })
    }

    /// Off-diagonal multiplicity 1 and diagonal multiplicity 2, closed under `#`.
    pub fn is_double_star(&self, grid: &Grid) -> bool {
        self.mult.iter().all(|(&x, &m)| {
            self.mult.contains_key(&grid.sharp(x)) && m == if grid.is_diagonal(x) { 2 } else { 1 }
        })
    }

    pub fn degree(&self) -> u32 {
        self.mult.values().sum()
    }

    /// The underlying set.
    pub fn support(&self) -> StarSet {
        StarSet { cells: self.mult.keys().copied().collect() }
    }
}

/// `U ↦ U ∪ U#`: diagonal cells get multiplicity 2, off-diagonal pairs keep 1.
pub fn expand_to_special(u: &StarSet, grid: &Grid) -> SpecialMultiset {
    let mult = u.cells.iter().map(|&x| (x, if grid.is_diagonal(x) { 2 } else { 1 })).collect();
    SpecialMultiset { mult }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::IndexTuple;

    fn sym(v: &[u32]) -> IndexTuple {
        IndexTuple::symplectic(v).unwrap()
    }

    #[test]
    fn worked_instance() {
        let chains =
            AttachedChains::new(&sym(&[1, 2, 4, 6, 8]), &sym(&[2, 4, 5, 8, 10]), &sym(&[3, 5, 7, 9, 10])).unwrap();
        let res = count_max_bounded_star_sets(&chains, true, DEFAULT_ORBIT_BUDGET).unwrap();
        assert_eq!(res.max_degree, 13);
        assert_eq!(res.count, 4);
        assert_eq!(res.sets.unwrap().len(), 4);
    }

    #[test]
    fn small_instances() {
        let b = sym(&[1, 3]);
        let chains = AttachedChains::new(&b, &b, &b).unwrap();
        let res = count_max_bounded_star_sets(&chains, true, DEFAULT_ORBIT_BUDGET).unwrap();
        assert_eq!((res.max_degree, res.count), (0, 1));
        assert_eq!(res.sets.unwrap(), vec![StarSet { cells: vec![] }]);

        let chains = AttachedChains::new(&sym(&[1, 2]), &b, &sym(&[3, 4])).unwrap();
        let res = count_max_bounded_star_sets(&chains, false, DEFAULT_ORBIT_BUDGET).unwrap();
        assert_eq!((res.max_degree, res.count), (4, 1));
    }

    #[test]
    fn budget() {
        let b = sym(&[2, 4, 5, 8, 10]);
        let chains = AttachedChains::new(&b, &b, &b).unwrap();
        assert_eq!(
            count_max_bounded_star_sets(&chains, false, 10),
            Err(CountError::BudgetExceeded { orbits: 15, budget: 10 })
        );
    }

    #[test]
    fn orbit_counts() {
        let g = Grid::new(&sym(&[2, 4, 5, 8, 10]));
        let orbits = grid_orbits(&g);
        assert_eq!(orbits.len(), 15);
        assert_eq!(orbits.iter().filter(|o| o.len() == 1).count(), 5);
        let g = Grid::new(&IndexTuple::ordinary(&[1, 3], 5).unwrap());
        assert_eq!(grid_orbits(&g).len(), 6);
    }

    #[test]
    fn expand_examples() {
        let g = Grid::new(&sym(&[1, 3]));
        let m = expand_to_special(&StarSet { cells: vec![Cell::new(2, 3)] }, &g);
        assert_eq!(m.mult, BTreeMap::from([(Cell::new(2, 3), 2)]));
        assert!(m.is_special(&g) && m.is_double_star(&g));

        let g = Grid::new(&sym(&[2, 4, 5, 8, 10]));
        let u = StarSet { cells: vec![Cell::new(1, 5), Cell::new(6, 10)] };
        let m = expand_to_special(&u, &g);
        assert_eq!(m.mult, BTreeMap::from([(Cell::new(1, 5), 1), (Cell::new(6, 10), 1)]));
        assert_eq!(m.support(), u);
        assert!(m.is_double_star(&g));

        let m = expand_to_special(&StarSet { cells: vec![] }, &g);
        assert!(m.mult.is_empty());
        // a lone off-diagonal cell is not special
        let bad = SpecialMultiset { mult: BTreeMap::from([(Cell::new(1, 5), 1)]) };
        assert!(!bad.is_special(&g));
    }
}
