use super::combin::{binomial, subset_rank, subset_unrank, Combinations};
use crate::error::{Error, Result};

/// Lexicographic numbering of the p-subsets of the `r` edge positions.
///
/// Positions and coordinate indices are 0-based: coordinate 0 is the
/// position set `{0, .., p-1}`. Color `i` of a p-set coloring refers to
/// coordinate `i - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionIndex {
    r: usize,
    p: usize,
    sets: Vec<Vec<usize>>,
}

impl PositionIndex {
    pub fn new(r: usize, p: usize) -> Result<Self> {
        if p == 0 || p >= r {
            return Err(Error::BadParams(format!("need 1 <= p <= r-1, got p = {p}, r = {r}")));
        }
        if r > 24 {
            return Err(Error::TooLarge(format!("r = {r} positions")));
        }
        Ok(PositionIndex {
            r,
            p,
            sets: Combinations::new(r, p).collect(),
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Number of coordinates, `C(r, p)`.
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Index of a sorted position set.
    pub fn rank(&self, positions: &[usize]) -> usize {
        subset_rank(self.r, positions) as usize
    }

    pub fn unrank(&self, index: usize) -> Vec<usize> {
        subset_unrank(self.r, self.p, index as u64)
    }

    /// The position set of coordinate `index`.
    pub fn positions(&self, index: usize) -> &[usize] {
        &self.sets[index]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.sets.iter().map(Vec::as_slice)
    }
}

pub(crate) fn count_psets(n: usize, p: usize) -> u64 {
    binomial(n as u64, p as u64)
}
