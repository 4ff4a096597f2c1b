//! Multiplicity of a Richardson variety `X_α^γ` in the symplectic
//! Grassmannian at a torus fixed point `e_β`, computed two ways:
//!
//! * [`paths::count_path_families`] counts families of non-intersecting
//!   lattice paths, one per element of `T̃_α ∪ W̃_γ`, compatible with the
//!   `#` involution. This is the production method.
//! * [`starsets::count_max_bounded_star_sets`] enumerates star sets of
//!   maximal size that are chain-bounded by `(T̃_α, W̃_γ)`. It is
//!   exponential in the grid size and serves as an independent check.
//!
//! An ordinary-Grassmannian mode runs the same machinery with the
//! involution switched off.
//!
//! ```
//! use richardson_mult::{AttachedChains, IndexTuple, count_path_families};
//!
//! let alpha = IndexTuple::symplectic(&[1, 2, 4, 6, 8]).unwrap();
//! let beta = IndexTuple::symplectic(&[2, 4, 5, 8, 10]).unwrap();
//! let gamma = IndexTuple::symplectic(&[3, 5, 7, 9, 10]).unwrap();
//! let chains = AttachedChains::new(&alpha, &beta, &gamma).unwrap();
//! assert_eq!(count_path_families(&chains, false).unwrap().count, 4);
//! ```

pub mod attach;
pub mod chain;
pub mod error;
pub mod grid;
pub mod index;
pub mod paths;
pub mod report;
pub mod runner;
pub mod starsets;
pub mod svg;

pub use attach::{attach_chain, is_star_set, AttachedChains, Side};
pub use chain::{chain_bounded, depth, is_twisted_chain, lex_min_arrangement, set_dominates, TwistedChain};
pub use error::{CountError, GridError, IndexError};
pub use grid::{Cell, Grid, Sign};
pub use index::{bruhat_leq, mirror_index, IndexTuple, Mode};
pub use paths::{count_path_families, enumerate_paths, path_endpoints, LatticePath, PathFamily};
pub use report::MultiplicityReport;
pub use runner::{execute, run, Format, Method, RunConfig, RunError};
pub use svg::{render_svg, SvgContent};

pub use starsets::{count_max_bounded_star_sets, expand_to_special, StarSet};
