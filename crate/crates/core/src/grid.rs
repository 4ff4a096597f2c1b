//! The grid `β̄ × β` around a fixed point: cells `(r, c)` with `r ∉ β` and
//! `c ∈ β`, their sign, the diagonal, and the `#` involution.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GridError;
use crate::index::{IndexTuple, Mode};

/// An integer pair `(r, c)`. Inside a grid, `r` is a row value (not in β)
/// and `c` a column value (in β); elsewhere it is just a point of `N²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u32; 2]", into = "[u32; 2]")]
pub struct Cell {
    pub r: u32,
    pub c: u32,
}

impl Cell {
    pub const fn new(r: u32, c: u32) -> Self {
        Cell { r, c }
    }

    /// `r < c`.
    pub fn is_negative(self) -> bool {
        self.r < self.c
    }

    /// `r > c`.
    pub fn is_positive(self) -> bool {
        self.r > self.c
    }

    pub fn sign(self) -> Option<Sign> {
        if self.r < self.c {
            Some(Sign::Negative)
        } else if self.r > self.c {
            Some(Sign::Positive)
        } else {
            None
        }
    }

    /// The transpose `(c, r)`.
    pub fn transpose(self) -> Cell {
        Cell::new(self.c, self.r)
    }
}

impl From<[u32; 2]> for Cell {
    fn from(v: [u32; 2]) -> Self {
        Cell::new(v[0], v[1])
    }
}

impl From<Cell> for [u32; 2] {
    fn from(c: Cell) -> Self {
        [c.r, c.c]
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    /// `r < c`
    Negative,
    /// `r > c`
    Positive,
}

/// Region membership of a grid cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellClass {
    pub sign: Sign,
    pub diagonal: bool,
    /// `r ≤ c*`
    pub in_or: bool,
    /// `r > c` and `r ≤ c*`
    pub in_on: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    beta: IndexTuple,
    rows: Vec<u32>,
    cols: Vec<u32>,
}

impl Grid {
    pub fn new(beta: &IndexTuple) -> Self {
        Grid { beta: beta.clone(), rows: beta.complement(), cols: beta.entries().to_vec() }
    }

    pub fn beta(&self) -> &IndexTuple {
        &self.beta
    }

    /// Row values, ascending.
    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Column values, ascending.
    pub fn cols(&self) -> &[u32] {
        &self.cols
    }

    pub fn d(&self) -> u32 {
        self.beta.d()
    }

    pub fn ambient(&self) -> u32 {
        self.beta.ambient()
    }

    pub fn mode(&self) -> Mode {
        self.beta.mode()
    }

    pub fn is_symplectic(&self) -> bool {
        self.mode() == Mode::Symplectic
    }

    pub fn row_pos(&self, r: u32) -> Option<usize> {
        self.rows.binary_search(&r).ok()
    }

    pub fn col_pos(&self, c: u32) -> Option<usize> {
        self.cols.binary_search(&c).ok()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.row_pos(cell.r).is_some() && self.col_pos(cell.c).is_some()
    }

    pub fn len(&self) -> usize {
        self.rows.len() * self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Dense index `row_pos * ncols + col_pos`, for occupancy tables.
    pub fn slot(&self, cell: Cell) -> Option<usize> {
        Some(self.row_pos(cell.r)? * self.cols.len() + self.col_pos(cell.c)?)
    }

    /// All cells in row-major (lexicographic) order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows.iter().flat_map(move |&r| self.cols.iter().map(move |&c| Cell::new(r, c)))
    }

    /// `j* = 2d + 1 − j`.
    pub fn mirror(&self, j: u32) -> u32 {
        2 * self.d() + 1 - j
    }

    pub fn is_diagonal(&self, cell: Cell) -> bool {
        self.is_symplectic() && cell.r == self.mirror(cell.c)
    }

    /// `(c*, r*)`, without membership checks.
    pub fn sharp(&self, cell: Cell) -> Cell {
        Cell::new(self.mirror(cell.c), self.mirror(cell.r))
    }

    pub fn classify_cell(&self, cell: Cell) -> Result<CellClass, GridError> {
        if !self.contains(cell) {
            return Err(GridError::NotInGrid(cell));
        }
        let sign = cell.sign().expect("rows and columns are disjoint");
        let (diagonal, in_or) = if self.is_symplectic() {
            let cstar = self.mirror(cell.c);
            (cell.r == cstar, cell.r <= cstar)
        } else {
            (false, false)
        };
        Ok(CellClass { sign, diagonal, in_or, in_on: in_or && sign == Sign::Positive })
    }

    /// The `#` involution `(r, c) ↦ (c*, r*)`.
    pub fn sharp_cell(&self, cell: Cell) -> Result<Cell, GridError> {
        if !self.is_symplectic() {
            return Err(GridError::Unsupported);
        }
        if !self.contains(cell) {
            return Err(GridError::NotInGrid(cell));
        }
        Ok(self.sharp(cell))
    }

    /// The diagonal cells `(r, r*)`, one per row.
    pub fn diagonal(&self) -> Vec<Cell> {
        if !self.is_symplectic() {
            return Vec::new();
        }
        self.rows.iter().map(|&r| Cell::new(r, self.mirror(r))).collect()
    }
}
