//! Index tuples: the d-subsets of `{1, …, n}` that label torus fixed points,
//! the mirror involution `j ↦ 2d + 1 − j`, and the Bruhat comparison.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::IndexError;

/// Which Grassmannian the index sets live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Isotropic d-subspaces of a 2d-dimensional symplectic space. Tuples
    /// must avoid every mirror pair `{j, j*}`.
    Symplectic,
    /// Ordinary Grassmannian of d-planes in an n-dimensional space.
    Ordinary,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Symplectic => f.write_str("symplectic"),
            Mode::Ordinary => f.write_str("ordinary"),
        }
    }
}

/// Returns `2d + 1 − j`.
pub fn mirror_index(j: u32, d: u32) -> Result<u32, IndexError> {
    if d == 0 || j == 0 || j > 2 * d {
        return Err(IndexError::OutOfRange { value: j, ambient: 2 * d });
    }
    Ok(2 * d + 1 - j)
}

/// A validated strictly increasing d-tuple in `{1, …, ambient}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexTuple {
    entries: Vec<u32>,
    ambient: u32,
    mode: Mode,
}

impl IndexTuple {
    /// Validates `seq` as a member of `I(d)` (symplectic mode, ambient `2d`)
    /// or of `I(d, ambient)` (ordinary mode).
    ///
    /// In symplectic mode the `ambient` argument is ignored and `2d` is used.
    pub fn new(seq: &[u32], d: u32, mode: Mode, ambient: u32) -> Result<Self, IndexError> {
        let ambient = match mode {
            Mode::Symplectic => 2 * d,
            Mode::Ordinary => ambient,
        };
        if d == 0 || ambient < d {
            return Err(IndexError::BadShape { d, ambient });
        }
        if seq.len() != d as usize {
            return Err(IndexError::WrongLength { expected: d as usize, found: seq.len() });
        }
        for &v in seq {
            if v == 0 || v > ambient {
                return Err(IndexError::OutOfRange { value: v, ambient });
            }
        }
        if let Some(w) = seq.windows(2).find(|w| w[0] >= w[1]) {
            return Err(IndexError::NotIncreasing { prev: w[0], next: w[1] });
        }
        if mode == Mode::Symplectic {
            for &v in seq {
                let m = 2 * d + 1 - v;
                if m > v && seq.binary_search(&m).is_ok() {
                    return Err(IndexError::NotIsotropic { entry: v, mirror: m });
                }
            }
        }
        Ok(IndexTuple { entries: seq.to_vec(), ambient, mode })
    }

    /// Shorthand for a symplectic tuple.
    pub fn symplectic(seq: &[u32]) -> Result<Self, IndexError> {
        Self::new(seq, seq.len() as u32, Mode::Symplectic, 0)
    }

    /// Shorthand for an ordinary tuple in `{1, …, ambient}`.
    pub fn ordinary(seq: &[u32], ambient: u32) -> Result<Self, IndexError> {
        Self::new(seq, seq.len() as u32, Mode::Ordinary, ambient)
    }

    /// Parses a comma-separated list such as `"1,2,4,6,8"` and validates it.
    pub fn parse(text: &str, d: u32, mode: Mode, ambient: u32) -> Result<Self, IndexError> {
        let seq = parse_index_list(text)?;
        Self::new(&seq, d, mode, ambient)
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn d(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn contains(&self, v: u32) -> bool {
        self.entries.binary_search(&v).is_ok()
    }

    /// Sorted complement in `{1, …, ambient}`.
    pub fn complement(&self) -> Vec<u32> {
        (1..=self.ambient).filter(|v| !self.contains(*v)).collect()
    }

    /// Sorted entries of `self` that are not in `other`.
    pub fn difference(&self, other: &IndexTuple) -> Vec<u32> {
        self.entries.iter().copied().filter(|v| !other.contains(*v)).collect()
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// Parses a comma-separated list of positive integers. Whitespace around
/// entries and an optional pair of surrounding parentheses are tolerated.
pub fn parse_index_list(text: &str) -> Result<Vec<u32>, IndexError> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(trimmed);
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<u32>().map_err(|_| IndexError::Malformed(tok.to_string()))
        })
        .collect()
}

/// Componentwise comparison `a_i ≤ b_i` for every position.
pub fn bruhat_leq(a: &IndexTuple, b: &IndexTuple) -> Result<bool, IndexError> {
    if a.d() != b.d() || a.ambient() != b.ambient() || a.mode() != b.mode() {
        return Err(IndexError::ShapeMismatch);
    }
    Ok(a.entries.iter().zip(&b.entries).all(|(x, y)| x <= y))
}

/// Every element of `I(d)` in lexicographic order.
pub fn all_symplectic(d: u32) -> Vec<IndexTuple> {
    all_subsets(d, 2 * d)
        .into_iter()
        .filter_map(|s| IndexTuple::new(&s, d, Mode::Symplectic, 0).ok())
        .collect()
}

/// Every element of `I(d, n)` in lexicographic order.
pub fn all_ordinary(d: u32, n: u32) -> Vec<IndexTuple> {
    all_subsets(d, n)
        .into_iter()
        .map(|s| IndexTuple::new(&s, d, Mode::Ordinary, n).expect("generated subsets are valid"))
        .collect()
}

fn all_subsets(d: u32, n: u32) -> Vec<Vec<u32>> {
    fn go(start: u32, n: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if n - v + 1 < left {
                break;
            }
            cur.push(v);
            go(v + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, d, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mirror_values() {
        assert_eq!(mirror_index(4, 5).unwrap(), 7);
        assert_eq!(mirror_index(1, 2).unwrap(), 4);
        for d in 1..6 {
            for j in 1..=2 * d {
                assert_eq!(mirror_index(mirror_index(j, d).unwrap(), d).unwrap(), j);
            }
        }
        assert!(matches!(mirror_index(0, 3), Err(IndexError::OutOfRange { .. })));
        assert!(matches!(mirror_index(7, 3), Err(IndexError::OutOfRange { .. })));
    }

    #[test]
    fn validation() {
        assert!(IndexTuple::new(&[2, 4, 5, 8, 10], 5, Mode::Symplectic, 0).is_ok());
        assert_eq!(
            IndexTuple::new(&[1, 4], 2, Mode::Symplectic, 0),
            Err(IndexError::NotIsotropic { entry: 1, mirror: 4 })
        );
        assert_eq!(
            IndexTuple::new(&[4, 2], 2, Mode::Symplectic, 0),
            Err(IndexError::NotIncreasing { prev: 4, next: 2 })
        );
        assert_eq!(
            IndexTuple::new(&[1, 5], 2, Mode::Symplectic, 0),
            Err(IndexError::OutOfRange { value: 5, ambient: 4 })
        );
        // ordinary mode skips isotropy
        assert!(IndexTuple::new(&[1, 4], 2, Mode::Ordinary, 4).is_ok());
        assert!(matches!(
            IndexTuple::new(&[1, 2, 3], 2, Mode::Ordinary, 4),
            Err(IndexError::WrongLength { .. })
        ));
    }

    #[test]
    fn parsing() {
        let t = IndexTuple::parse(" 1, 2,4,6 ,8", 5, Mode::Symplectic, 0).unwrap();
        assert_eq!(t.entries(), &[1, 2, 4, 6, 8]);
        assert_eq!(parse_index_list("(3,5)").unwrap(), vec![3, 5]);
        assert!(matches!(parse_index_list("1,,2"), Err(IndexError::Malformed(_))));
        assert!(matches!(parse_index_list("1,-2"), Err(IndexError::Malformed(_))));
    }

    #[test]
    fn bruhat_examples() {
        let a = IndexTuple::symplectic(&[1, 2, 4, 6, 8]).unwrap();
        let b = IndexTuple::symplectic(&[2, 4, 5, 8, 10]).unwrap();
        let c = IndexTuple::symplectic(&[3, 5, 7, 9, 10]).unwrap();
        assert!(bruhat_leq(&a, &b).unwrap());
        assert!(bruhat_leq(&b, &c).unwrap());
        assert!(bruhat_leq(&a, &a).unwrap());
        let x = IndexTuple::ordinary(&[2, 4], 4).unwrap();
        let y = IndexTuple::ordinary(&[1, 3], 4).unwrap();
        assert!(!bruhat_leq(&x, &y).unwrap());
        let z = IndexTuple::symplectic(&[1, 2]).unwrap();
        assert_eq!(bruhat_leq(&x, &z), Err(IndexError::ShapeMismatch));
    }

    #[test]
    fn bruhat_is_partial_order() {
        for d in 1..=4 {
            let all = all_symplectic(d);
            assert_eq!(all.len(), 1 << d);
            for a in &all {
                assert!(bruhat_leq(a, a).unwrap());
                for b in &all {
                    let ab = bruhat_leq(a, b).unwrap();
                    if ab && bruhat_leq(b, a).unwrap() {
                        assert_eq!(a, b);
                    }
                    for c in &all {
                        if ab && bruhat_leq(b, c).unwrap() {
                            assert!(bruhat_leq(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn symplectic_entries_and_mirrors_partition() {
        for d in 1..=4 {
            for t in all_symplectic(d) {
                let mut all: Vec<u32> = t.entries().to_vec();
                all.extend(t.entries().iter().map(|&j| mirror_index(j, d).unwrap()));
                all.sort_unstable();
                assert_eq!(all, (1..=2 * d).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn ordinary_enumeration_counts() {
        assert_eq!(all_ordinary(2, 4).len(), 6);
        assert_eq!(all_ordinary(2, 5).len(), 10);
        assert_eq!(all_ordinary(3, 6).len(), 20);
    }
}
