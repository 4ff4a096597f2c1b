use thiserror::Error;

use crate::grid::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("entries must be strictly increasing ({prev} is followed by {next})")]
    NotIncreasing { prev: u32, next: u32 },
    #[error("entry {value} is outside 1..={ambient}")]
    OutOfRange { value: u32, ambient: u32 },
    #[error("tuple is not isotropic: both {entry} and its mirror {mirror} are present")]
    NotIsotropic { entry: u32, mirror: u32 },
    #[error("expected {expected} entries, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("invalid shape d={d}, ambient={ambient}")]
    BadShape { d: u32, ambient: u32 },
    #[error("tuples have different shapes")]
    ShapeMismatch,
    #[error("malformed entry {0:?}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("cell {0} is not in the grid")]
    NotInGrid(Cell),
    #[error("operation requires symplectic mode")]
    Unsupported,
    #[error("cells do not all have the declared sign")]
    MixedSigns,
    #[error("no sign-respecting arrangement of the given rows and columns exists")]
    NoArrangement,
    #[error("rows and columns have different sizes ({rows} vs {cols})")]
    SizeMismatch { rows: usize, cols: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("{orbits} orbits exceed the configured budget of {budget}")]
    BudgetExceeded { orbits: usize, budget: usize },
    #[error("anchor {0} has no partner under the involution")]
    UnpairedAnchor(Cell),
}
