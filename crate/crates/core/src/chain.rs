//! Elementwise orders on one-signed points of `N²`, twisted chains, depth,
//! set domination and chain-boundedness.
//!
//! Points are `(r, c)` pairs. For negative points (`r < c`):
//!
//! * `(e, f) ≺ (g, h)` iff `f < h` and `e > g`, so a chain climbs towards
//!   smaller rows and larger columns;
//! * `(e, f) ⊴ (g, h)` iff `f ≤ h` and `e ≥ g`;
//! * the meet is `(max(e, g), min(f, h))`.
//!
//! `depth_R(x)` is the length of the longest `≺`-chain in `R` all of whose
//! elements lie weakly above-right of `x`, i.e. `x ⊴ u` for every chain
//! element `u` (equivalently `x ⊴ u₁` for the chain's `≺`-least element).
//! Positive sets are handled by transposing to the negative side.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::GridError;
use crate::grid::{Cell, Sign};

/// Result of comparing two points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellRelation {
    /// `u ≺ v`
    pub prec: bool,
    /// `u ⊴ v`
    pub dom: bool,
    /// `u ∧ v`, which need not be a grid cell.
    pub meet: Cell,
}

pub fn precedes(u: Cell, v: Cell) -> bool {
    u.c < v.c && u.r > v.r
}

pub fn dominated(u: Cell, v: Cell) -> bool {
    u.c <= v.c && u.r >= v.r
}

pub fn meet(u: Cell, v: Cell) -> Cell {
    Cell::new(u.r.max(v.r), u.c.min(v.c))
}

pub fn compare_cells(u: Cell, v: Cell) -> CellRelation {
    CellRelation { prec: precedes(u, v), dom: dominated(u, v), meet: meet(u, v) }
}

fn check_sign(cells: &[Cell], sign: Sign) -> Result<(), GridError> {
    if cells.iter().all(|c| c.sign() == Some(sign)) {
        Ok(())
    } else {
        Err(GridError::MixedSigns)
    }
}

fn transposed(cells: &[Cell]) -> Vec<Cell> {
    cells.iter().map(|c| c.transpose()).collect()
}

/// All `2m` coordinates of the `m` points are pairwise distinct.
pub fn is_completely_disjointed(cells: &[Cell]) -> bool {
    let mut seen = BTreeSet::new();
    cells.iter().all(|c| seen.insert(c.r) && seen.insert(c.c))
}

fn is_negative_twisted(cells: &[Cell]) -> bool {
    if !is_completely_disjointed(cells) {
        return false;
    }
    for (i, &u) in cells.iter().enumerate() {
        for &v in &cells[i + 1..] {
            if !(precedes(u, v) || precedes(v, u) || !meet(u, v).is_negative()) {
                return false;
            }
        }
    }
    true
}

pub fn is_twisted_chain(cells: &[Cell], sign: Sign) -> Result<bool, GridError> {
    check_sign(cells, sign)?;
    Ok(match sign {
        Sign::Negative => is_negative_twisted(cells),
        Sign::Positive => is_negative_twisted(&transposed(cells)),
    })
}

/// A one-signed twisted chain, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistedChain {
    cells: Vec<Cell>,
    sign: Sign,
}

impl TwistedChain {
    pub fn new(mut cells: Vec<Cell>, sign: Sign) -> Result<Self, GridError> {
        cells.sort_unstable();
        cells.dedup();
        if !is_twisted_chain(&cells, sign)? {
            return Err(GridError::NoArrangement);
        }
        Ok(TwistedChain { cells, sign })
    }

    pub fn empty(sign: Sign) -> Self {
        TwistedChain { cells: Vec::new(), sign }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Row values, ascending.
    pub fn rows(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.cells.iter().map(|c| c.r).collect();
        v.sort_unstable();
        v
    }

    /// Column values, ascending.
    pub fn cols(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.cells.iter().map(|c| c.c).collect();
        v.sort_unstable();
        v
    }
}

/// Whether the sorted `firsts` can be matched to the sorted `seconds` with
/// every pair negative. Both sides ascending.
fn matchable(firsts: &[u32], seconds: &[u32]) -> bool {
    firsts.len() == seconds.len() && firsts.iter().zip(seconds).all(|(a, b)| a < b)
}

/// Lex-minimal negative arrangement: columns ascending, and at the first
/// column where two arrangements differ the larger row wins.
fn lex_min_negative(firsts: &[u32], seconds: &[u32]) -> Result<Vec<Cell>, GridError> {
    let mut free: Vec<u32> = firsts.to_vec();
    free.sort_unstable();
    let mut cols: Vec<u32> = seconds.to_vec();
    cols.sort_unstable();
    if !matchable(&free, &cols) {
        return Err(GridError::NoArrangement);
    }
    let mut out = Vec::with_capacity(cols.len());
    for (i, &f) in cols.iter().enumerate() {
        // largest free row below f that keeps the remainder matchable
        let pick = (0..free.len())
            .rev()
            .filter(|&k| free[k] < f)
            .find(|&k| {
                let mut rest = free.clone();
                rest.remove(k);
                matchable(&rest, &cols[i + 1..])
            })
            .expect("a matchable remainder always has a feasible pick");
        out.push(Cell::new(free.remove(pick), f));
    }
    Ok(out)
}

pub fn lex_min_arrangement(rows: &[u32], cols: &[u32], sign: Sign) -> Result<TwistedChain, GridError> {
    if rows.len() != cols.len() {
        return Err(GridError::SizeMismatch { rows: rows.len(), cols: cols.len() });
    }
    let cells = match sign {
        Sign::Negative => lex_min_negative(rows, cols)?,
        Sign::Positive => transposed(&lex_min_negative(cols, rows)?),
    };
    let chain = TwistedChain::new(cells, sign).map_err(|_| GridError::NoArrangement)?;
    Ok(chain)
}

/// For each element `u` of a negative set, the length of the longest
/// `≺`-chain in the set starting at `u`.
fn chain_lengths(set: &[Cell]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..set.len()).collect();
    order.sort_by(|&a, &b| set[b].c.cmp(&set[a].c));
    let mut len = vec![0usize; set.len()];
    for &i in &order {
        let best = order
            .iter()
            .filter(|&&j| len[j] > 0 && precedes(set[i], set[j]))
            .map(|&j| len[j])
            .max()
            .unwrap_or(0);
        len[i] = best + 1;
    }
    len
}

/// Depth profile of a negative set, reusable for many query points.
#[derive(Clone, Debug)]
pub struct DepthTable {
    cells: Vec<Cell>,
    lengths: Vec<usize>,
}

impl DepthTable {
    pub fn new(set: &[Cell]) -> Self {
        DepthTable { cells: set.to_vec(), lengths: chain_lengths(set) }
    }

    pub fn depth(&self, x: Cell) -> usize {
        self.cells
            .iter()
            .zip(&self.lengths)
            .filter(|(u, _)| dominated(x, **u))
            .map(|(_, &l)| l)
            .max()
            .unwrap_or(0)
    }
}

/// `depth_R(x)` for a negative set `R`.
pub fn depth(set: &[Cell], x: Cell) -> usize {
    DepthTable::new(set).depth(x)
}

fn dominates_negative(bound: &[Cell], set: &[Cell]) -> bool {
    let rt = DepthTable::new(bound);
    let st = DepthTable::new(set);
    set.iter().all(|&x| rt.depth(x) >= st.depth(x))
}

/// `R ⊴ S`. For negative sets: `depth_R(x) ≥ depth_S(x)` for all `x ∈ S`.
/// For positive sets: `ι(S) ⊴ ι(R)`.
pub fn set_dominates(r: &[Cell], s: &[Cell], sign: Sign) -> Result<bool, GridError> {
    check_sign(r, sign)?;
    check_sign(s, sign)?;
    Ok(match sign {
        Sign::Negative => dominates_negative(r, s),
        Sign::Positive => dominates_negative(&transposed(s), &transposed(r)),
    })
}

/// Splits a set into its negative and positive parts.
pub fn split_by_sign(set: &[Cell]) -> (Vec<Cell>, Vec<Cell>) {
    set.iter().copied().filter(|c| c.r != c.c).partition(|c| c.is_negative())
}

/// `R ⊴ U⁻` and `U⁺ ⊴ S`.
pub fn chain_bounded(u: &[Cell], r: &TwistedChain, s: &TwistedChain) -> bool {
    debug_assert_eq!(r.sign(), Sign::Negative);
    debug_assert_eq!(s.sign(), Sign::Positive);
    let (neg, pos) = split_by_sign(u);
    dominates_negative(r.cells(), &neg) && dominates_negative(&transposed(s.cells()), &transposed(&pos))
}

/// Chain-boundedness with both bounding chains preprocessed, for repeated
/// queries against the same `R`, `S`.
#[derive(Clone, Debug)]
pub struct Bounds {
    lower: DepthTable,
    upper: DepthTable,
}

impl Bounds {
    pub fn new(r: &TwistedChain, s: &TwistedChain) -> Self {
        Bounds { lower: DepthTable::new(r.cells()), upper: DepthTable::new(&transposed(s.cells())) }
    }

    pub fn admits(&self, u: &[Cell]) -> bool {
        let (neg, pos) = split_by_sign(u);
        let nt = DepthTable::new(&neg);
        if !neg.iter().all(|&x| self.lower.depth(x) >= nt.depth(x)) {
            return false;
        }
        let pos = transposed(&pos);
        let pt = DepthTable::new(&pos);
        pos.iter().all(|&x| self.upper.depth(x) >= pt.depth(x))
    }
}
