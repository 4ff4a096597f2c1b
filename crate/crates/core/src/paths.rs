//! Lattice paths `P_r` from `⌊r⌋` to `⌈r⌉` and the count of
//! non-intersecting, `#`-compatible path families.
//!
//! Negative paths step down (next row) or right (next column) inside
//! `{r < c}`; positive paths step up (previous row) or left (previous
//! column) inside `{r > c}`. "Next" and "previous" refer to the sorted row
//! and column lists of the grid.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::attach::AttachedChains;
use crate::chain::precedes;
use crate::error::{CountError, GridError};
use crate::grid::{Cell, Grid, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Endpoints {
    pub floor: Cell,
    pub ceil: Cell,
}

pub fn path_endpoints(r: Cell, grid: &Grid) -> Result<Endpoints, GridError> {
    if !grid.contains(r) {
        return Err(GridError::NotInGrid(r));
    }
    let (e, f) = (r.r, r.c);
    let ends = match r.sign().expect("grid cells are signed") {
        Sign::Positive => Endpoints {
            floor: Cell::new(e, *grid.cols().iter().rev().find(|&&y| y < e).expect("f < e")),
            ceil: Cell::new(*grid.rows().iter().find(|&&x| x > f).expect("e > f"), f),
        },
        Sign::Negative => Endpoints {
            floor: Cell::new(e, *grid.cols().iter().find(|&&y| y > e).expect("f > e")),
            ceil: Cell::new(*grid.rows().iter().rev().find(|&&x| x < f).expect("e < f"), f),
        },
    };
    Ok(ends)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticePath {
    pub anchor: Cell,
    pub cells: Vec<Cell>,
}

impl LatticePath {
    pub fn first(&self) -> Cell {
        self.cells[0]
    }

    pub fn last(&self) -> Cell {
        *self.cells.last().expect("paths are non-empty")
    }

    /// No two cells are `≺`-comparable.
    pub fn is_antichain(&self) -> bool {
        self.cells.iter().all(|&u| self.cells.iter().all(|&v| !precedes(u, v)))
    }

    /// The `#`-image, reversed so that it runs from floor to ceil of the
    /// partner anchor.
    pub fn sharp(&self, grid: &Grid) -> LatticePath {
        LatticePath {
            anchor: grid.sharp(self.anchor),
            cells: self.cells.iter().rev().map(|&x| grid.sharp(x)).collect(),
        }
    }

    /// Checks the step geometry and sign region against `grid`.
    pub fn is_admissible(&self, grid: &Grid) -> bool {
        let Some(sign) = self.anchor.sign() else { return false };
        let Ok(ends) = path_endpoints(self.anchor, grid) else { return false };
        if self.cells.is_empty() || self.first() != ends.floor || self.last() != ends.ceil {
            return false;
        }
        if !self.cells.iter().all(|&x| grid.contains(x) && x.sign() == Some(sign)) {
            return false;
        }
        self.cells.windows(2).all(|w| {
            let (a, b) = (pos(grid, w[0]), pos(grid, w[1]));
            let step: isize = if sign == Sign::Negative { 1 } else { -1 };
            (b.0 as isize - a.0 as isize == step && a.1 == b.1)
                || (b.1 as isize - a.1 as isize == step && a.0 == b.0)
        })
    }
}

fn pos(grid: &Grid, x: Cell) -> (usize, usize) {
    (grid.row_pos(x.r).expect("row in grid"), grid.col_pos(x.c).expect("col in grid"))
}

/// All admissible paths for anchor `r`, in lexicographic order of their
/// cell sequences. Diagonal anchors keep only paths with `P = P#`.
pub fn enumerate_paths(r: Cell, grid: &Grid) -> Result<Vec<LatticePath>, GridError> {
    let ends = path_endpoints(r, grid)?;
    let sign = r.sign().expect("grid cells are signed");
    let start = pos(grid, ends.floor);
    let goal = pos(grid, ends.ceil);
    let (rows, cols) = (grid.rows(), grid.cols());

    let mut out = Vec::new();
    let mut cur = vec![ends.floor];
    let mut stack_pos = vec![start];
    walk(grid, sign, goal, rows, cols, &mut cur, &mut stack_pos, &mut out, r);

    if grid.is_diagonal(r) {
        out.retain(|p| {
            let mut a = p.cells.clone();
            let mut b: Vec<Cell> = a.iter().map(|&x| grid.sharp(x)).collect();
            a.sort_unstable();
            b.sort_unstable();
            a == b
        });
    }
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn walk(
    grid: &Grid,
    sign: Sign,
    goal: (usize, usize),
    rows: &[u32],
    cols: &[u32],
    cur: &mut Vec<Cell>,
    at: &mut Vec<(usize, usize)>,
    out: &mut Vec<LatticePath>,
    anchor: Cell,
) {
    let (i, j) = *at.last().expect("non-empty walk");
    if (i, j) == goal {
        out.push(LatticePath { anchor, cells: cur.clone() });
        return;
    }
    let mut next = Vec::with_capacity(2);
    match sign {
        Sign::Negative => {
            if i < goal.0 {
                next.push((i + 1, j));
            }
            if j < goal.1 {
                next.push((i, j + 1));
            }
        }
        Sign::Positive => {
            if i > goal.0 {
                next.push((i - 1, j));
            }
            if j > goal.1 {
                next.push((i, j - 1));
            }
        }
    }
    for (ni, nj) in next {
        let cell = Cell::new(rows[ni], cols[nj]);
        if cell.sign() != Some(sign) {
            continue;
        }
        debug_assert!(grid.contains(cell));
        cur.push(cell);
        at.push((ni, nj));
        walk(grid, sign, goal, rows, cols, cur, at, out, anchor);
        cur.pop();
        at.pop();
    }
}

/// One path per anchor, in sorted anchor order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PathFamily {
    pub paths: Vec<LatticePath>,
}

impl PathFamily {
    /// Sorted union of all path cells.
    pub fn union(&self) -> Vec<Cell> {
        let mut v: Vec<Cell> = self.paths.iter().flat_map(|p| p.cells.iter().copied()).collect();
        v.sort_unstable();
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyCount {
    pub count: u64,
    pub families: Option<Vec<PathFamily>>,
}

/// One `#`-orbit of anchors and the path choices available to it.
struct Orbit {
    choices: Vec<Choice>,
}

struct Choice {
    slots: Vec<usize>,
    paths: Vec<LatticePath>,
}

fn build_orbits(chains: &AttachedChains) -> Result<Vec<Orbit>, CountError> {
    let grid = &chains.grid;
    let anchors = chains.anchors();
    let mut done = vec![false; anchors.len()];
    let mut orbits = Vec::new();
    for (i, &a) in anchors.iter().enumerate() {
        if done[i] {
            continue;
        }
        done[i] = true;
        let partner = if grid.is_symplectic() && !grid.is_diagonal(a) {
            let b = grid.sharp(a);
            let k = anchors.binary_search(&b).map_err(|_| CountError::UnpairedAnchor(a))?;
            done[k] = true;
            true
        } else {
            false
        };
        let mut choices = Vec::new();
        for p in enumerate_paths(a, grid)? {
            let mut paths = vec![p];
            if partner {
                let q = paths[0].sharp(grid);
                paths.push(q);
            }
            let mut slots: Vec<usize> =
                paths.iter().flat_map(|p| p.cells.iter().map(|&x| grid.slot(x).expect("in grid"))).collect();
            let n = slots.len();
            slots.sort_unstable();
            slots.dedup();
            if slots.len() != n {
                continue;
            }
            choices.push(Choice { slots, paths });
        }
        orbits.push(Orbit { choices });
    }
    Ok(orbits)
}

struct Search<'a> {
    orbits: &'a [Orbit],
    list: bool,
    count: u64,
    families: Vec<Vec<&'a LatticePath>>,
}

impl<'a> Search<'a> {
    fn run(&mut self, depth: usize, occupied: &mut [bool], picked: &mut Vec<&'a Choice>) {
        if depth == self.orbits.len() {
            self.count += 1;
            if self.list {
                self.families.push(picked.iter().flat_map(|c| c.paths.iter()).collect());
            }
            return;
        }
        for choice in &self.orbits[depth].choices {
            if choice.slots.iter().any(|&s| occupied[s]) {
                continue;
            }
            for &s in &choice.slots {
                occupied[s] = true;
            }
            picked.push(choice);
            self.run(depth + 1, occupied, picked);
            picked.pop();
            for &s in &choice.slots {
                occupied[s] = false;
            }
        }
    }
}

/// Counts families of pairwise disjoint paths, one per element of
/// `T̃_α ∪ W̃_γ`, with `P_{r#} = (P_r)#`. Optionally lists them, sorted.
///
/// The first orbit's choices are explored in parallel.
pub fn count_path_families(chains: &AttachedChains, list_families: bool) -> Result<FamilyCount, CountError> {
    let orbits = build_orbits(chains)?;
    let cells = chains.grid.len();
    if orbits.is_empty() {
        let families = list_families.then(|| vec![PathFamily { paths: Vec::new() }]);
        return Ok(FamilyCount { count: 1, families });
    }
    let branches: Vec<(u64, Vec<Vec<&LatticePath>>)> = orbits[0]
        .choices
        .par_iter()
        .map(|first| {
            let mut occupied = vec![false; cells];
            for &s in &first.slots {
                occupied[s] = true;
            }
            let mut search = Search { orbits: &orbits, list: list_families, count: 0, families: Vec::new() };
            let mut picked = vec![first];
            search.run(1, &mut occupied, &mut picked);
            (search.count, search.families)
        })
        .collect();
    let count = branches.iter().map(|(c, _)| c).sum();
    let families = list_families.then(|| {
        let mut fams: Vec<PathFamily> = branches
            .into_iter()
            .flat_map(|(_, f)| f)
            .map(|paths| {
                let mut paths: Vec<LatticePath> = paths.into_iter().cloned().collect();
                paths.sort_by_key(|p| p.anchor);
                PathFamily { paths }
            })
            .collect();
        fams.sort();
        fams
    });
    Ok(FamilyCount { count, families })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::IndexTuple;

    fn c(r: u32, col: u32) -> Cell {
        Cell::new(r, col)
    }

    fn worked_grid() -> Grid {
        Grid::new(&IndexTuple::symplectic(&[2, 4, 5, 8, 10]).unwrap())
    }

    #[test]
    fn endpoint_examples() {
        let g = worked_grid();
        assert_eq!(path_endpoints(c(7, 4), &g).unwrap(), Endpoints { floor: c(7, 5), ceil: c(6, 4) });
        assert_eq!(path_endpoints(c(3, 2), &g).unwrap(), Endpoints { floor: c(3, 2), ceil: c(3, 2) });
        assert_eq!(path_endpoints(c(1, 5), &g).unwrap(), Endpoints { floor: c(1, 2), ceil: c(3, 5) });
        assert_eq!(path_endpoints(c(6, 10), &g).unwrap(), Endpoints { floor: c(6, 8), ceil: c(9, 10) });
        assert_eq!(path_endpoints(c(9, 8), &g).unwrap(), Endpoints { floor: c(9, 8), ceil: c(9, 8) });
        assert!(path_endpoints(c(2, 2), &g).is_err());
    }

    #[test]
    fn path_examples() {
        let g = worked_grid();
        let p = enumerate_paths(c(1, 5), &g).unwrap();
        let seqs: Vec<Vec<Cell>> = p.iter().map(|p| p.cells.clone()).collect();
        assert_eq!(
            seqs,
            vec![
                vec![c(1, 2), c(1, 4), c(1, 5), c(3, 5)],
                vec![c(1, 2), c(1, 4), c(3, 4), c(3, 5)],
            ]
        );
        let p = enumerate_paths(c(7, 4), &g).unwrap();
        let seqs: Vec<Vec<Cell>> = p.iter().map(|p| p.cells.clone()).collect();
        assert_eq!(seqs, vec![vec![c(7, 5), c(6, 5), c(6, 4)], vec![c(7, 5), c(7, 4), c(6, 4)]]);
        let p = enumerate_paths(c(3, 2), &g).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].cells, vec![c(3, 2)]);

        let small = Grid::new(&IndexTuple::symplectic(&[1, 3]).unwrap());
        let p = enumerate_paths(c(4, 1), &small).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].cells, vec![c(4, 3), c(4, 1), c(2, 1)]);
        for q in enumerate_paths(c(1, 5), &g).unwrap() {
            assert!(q.is_admissible(&g));
            assert!(q.is_antichain());
            assert!(q.sharp(&g).is_admissible(&g));
        }
    }

    #[test]
    fn worked_count() {
        let a = IndexTuple::symplectic(&[1, 2, 4, 6, 8]).unwrap();
        let b = IndexTuple::symplectic(&[2, 4, 5, 8, 10]).unwrap();
        let g = IndexTuple::symplectic(&[3, 5, 7, 9, 10]).unwrap();
        let chains = AttachedChains::new(&a, &b, &g).unwrap();
        let res = count_path_families(&chains, true).unwrap();
        assert_eq!(res.count, 4);
        let fams = res.families.unwrap();
        assert_eq!(fams.len(), 4);
        assert!(fams.iter().all(|f| f.paths.len() == 5 && f.union().len() == 13));
    }

    #[test]
    fn trivial_counts() {
        let b = IndexTuple::symplectic(&[1, 3]).unwrap();
        let chains = AttachedChains::new(&b, &b, &b).unwrap();
        let res = count_path_families(&chains, true).unwrap();
        assert_eq!(res.count, 1);
        assert_eq!(res.families.unwrap(), vec![PathFamily { paths: vec![] }]);

        let a = IndexTuple::symplectic(&[1, 2]).unwrap();
        let g = IndexTuple::symplectic(&[3, 4]).unwrap();
        let chains = AttachedChains::new(&a, &b, &g).unwrap();
        assert_eq!(count_path_families(&chains, false).unwrap().count, 1);
    }
}
