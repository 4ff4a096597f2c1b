//! The twisted chains `T̃_α` (negative) and `W̃_γ` (positive) attached to
//! a fixed point `β`, and the star-set test.

use crate::chain::{lex_min_arrangement, TwistedChain};
use crate::error::GridError;
use crate::grid::{Cell, Grid, Sign};
use crate::index::IndexTuple;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `α ≤ β`, negative chain.
    Lower,
    /// `β ≤ γ`, positive chain.
    Upper,
}

/// Lex-minimal sign-respecting pairing of `target \ β` (rows) with
/// `β \ target` (columns). Fails with `NoArrangement` exactly when the
/// corresponding Bruhat comparison fails.
pub fn attach_chain(target: &IndexTuple, beta: &IndexTuple, side: Side) -> Result<TwistedChain, GridError> {
    if target.d() != beta.d() || target.ambient() != beta.ambient() || target.mode() != beta.mode() {
        return Err(GridError::NoArrangement);
    }
    let rows = target.difference(beta);
    let cols = beta.difference(target);
    let sign = match side {
        Side::Lower => Sign::Negative,
        Side::Upper => Sign::Positive,
    };
    lex_min_arrangement(&rows, &cols, sign)
}

#[derive(Clone, Debug)]
pub struct AttachedChains {
    pub alpha: IndexTuple,
    pub beta: IndexTuple,
    pub gamma: IndexTuple,
    pub t_alpha: TwistedChain,
    pub w_gamma: TwistedChain,
    pub grid: Grid,
}

impl AttachedChains {
    pub fn new(alpha: &IndexTuple, beta: &IndexTuple, gamma: &IndexTuple) -> Result<Self, GridError> {
        Ok(AttachedChains {
            alpha: alpha.clone(),
            beta: beta.clone(),
            gamma: gamma.clone(),
            t_alpha: attach_chain(alpha, beta, Side::Lower)?,
            w_gamma: attach_chain(gamma, beta, Side::Upper)?,
            grid: Grid::new(beta),
        })
    }

    /// `T̃_α ∪ W̃_γ`, sorted.
    pub fn anchors(&self) -> Vec<Cell> {
        let mut v: Vec<Cell> = self.t_alpha.cells().iter().chain(self.w_gamma.cells()).copied().collect();
        v.sort_unstable();
        v
    }
}

/// Closed under `#` off the diagonal.
pub fn is_star_set(cells: &[Cell], grid: &Grid) -> Result<bool, GridError> {
    if !grid.is_symplectic() {
        return Err(GridError::Unsupported);
    }
    if let Some(&x) = cells.iter().find(|&&x| !grid.contains(x)) {
        return Err(GridError::NotInGrid(x));
    }
    Ok(cells.iter().all(|&x| grid.is_diagonal(x) || cells.contains(&grid.sharp(x))))
}

/// Distinguished-subset conditions for a subset of `{r > c}`: (A) rows and
/// columns pairwise distinct; (B) with rows sorted `r₁ < … < r_p`, each
/// consecutive pair has `c_j > c_{j+1}` or `r_j < c_{j+1}`.
pub fn is_distinguished(cells: &[Cell]) -> bool {
    if !cells.iter().all(|c| c.is_positive()) {
        return false;
    }
    let mut v = cells.to_vec();
    v.sort_unstable();
    for (i, a) in v.iter().enumerate() {
        for b in &v[i + 1..] {
            if a.r == b.r || a.c == b.c {
                return false;
            }
        }
    }
    v.windows(2).all(|w| w[0].c > w[1].c || w[0].r < w[1].c)
}

/// Distinguished conditions for an attached chain: positive chains are
/// checked directly, negative chains through their transpose.
pub fn chain_is_distinguished(chain: &TwistedChain) -> bool {
    match chain.sign() {
        Sign::Positive => is_distinguished(chain.cells()),
        Sign::Negative => {
            let t: Vec<Cell> = chain.cells().iter().map(|c| c.transpose()).collect();
            is_distinguished(&t)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[u32]) -> IndexTuple {
        IndexTuple::symplectic(v).unwrap()
    }

    #[test]
    fn worked_chains() {
        let beta = t(&[2, 4, 5, 8, 10]);
        let ta = attach_chain(&t(&[1, 2, 4, 6, 8]), &beta, Side::Lower).unwrap();
        assert_eq!(ta.cells(), &[Cell::new(1, 5), Cell::new(6, 10)]);
        let wg = attach_chain(&t(&[3, 5, 7, 9, 10]), &beta, Side::Upper).unwrap();
        assert_eq!(wg.cells(), &[Cell::new(3, 2), Cell::new(7, 4), Cell::new(9, 8)]);
        assert!(attach_chain(&beta, &beta, Side::Lower).unwrap().is_empty());
        assert!(attach_chain(&beta, &beta, Side::Upper).unwrap().is_empty());
        assert!(chain_is_distinguished(&wg));
        assert!(chain_is_distinguished(&ta));
    }

    #[test]
    fn order_violation() {
        let beta = t(&[1, 3]);
        assert_eq!(attach_chain(&t(&[2, 4]), &beta, Side::Lower), Err(GridError::NoArrangement));
    }

    #[test]
    fn star_examples() {
        let g = Grid::new(&t(&[2, 4, 5, 8, 10]));
        assert!(is_star_set(&[Cell::new(1, 5), Cell::new(6, 10)], &g).unwrap());
        assert!(!is_star_set(&[Cell::new(1, 5)], &g).unwrap());
        assert!(is_star_set(&[Cell::new(7, 4)], &g).unwrap());
        assert!(is_star_set(&[], &g).unwrap());
        let ord = Grid::new(&IndexTuple::ordinary(&[1, 3], 4).unwrap());
        assert_eq!(is_star_set(&[], &ord), Err(GridError::Unsupported));
    }

    #[test]
    fn distinguished_rejects() {
        // (3,2),(5,4): c1 = 2 < 4 and r1 = 3 < 4 -> fine; (5,2),(7,4): 2 < 4, 5 > 4 -> not
        assert!(is_distinguished(&[Cell::new(3, 2), Cell::new(5, 4)]));
        assert!(!is_distinguished(&[Cell::new(5, 2), Cell::new(7, 4)]));
        assert!(!is_distinguished(&[Cell::new(5, 2), Cell::new(5, 4)]));
    }
}
