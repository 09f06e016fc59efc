use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::combin::{subset_rank, subset_unrank};
use super::positions::count_psets;
use super::{Orientation, PositionIndex};
use crate::error::{Error, Result};

/// Occurrence counts of a p-set on each position set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeVector {
    pub pset: Vec<usize>,
    pub coords: Vec<u32>,
}

impl DegreeVector {
    pub fn total(&self) -> u32 {
        self.coords.iter().sum()
    }
}

pub(crate) fn check_pset(n: usize, r: usize, pset: &[usize]) -> Result<()> {
    let bad = |reason: &str| {
        Err(Error::BadPSet {
            pset: pset.to_vec(),
            reason: reason.to_string(),
        })
    };
    if pset.is_empty() || pset.len() >= r {
        return bad("size must be between 1 and r-1");
    }
    if pset.windows(2).any(|w| w[0] >= w[1]) {
        return bad("vertices must be sorted and distinct");
    }
    if pset.iter().any(|&v| v >= n) {
        return bad("vertex out of range");
    }
    Ok(())
}

/// Degree vector of the p-set `pset` under `d`.
pub fn degree_vector(d: &Orientation, pset: &[usize]) -> Result<DegreeVector> {
    let h = d.base();
    check_pset(h.n(), h.r(), pset)?;
    let idx = PositionIndex::new(h.r(), pset.len())?;
    let mut coords = vec![0u32; idx.len()];
    let mut positions = Vec::with_capacity(pset.len());
    for (i, e) in h.edges().enumerate() {
        if !pset.iter().all(|v| e.binary_search(v).is_ok()) {
            continue;
        }
        positions.clear();
        positions.extend(pset.iter().map(|&v| d.position_of(i, v).unwrap()));
        positions.sort_unstable();
        coords[idx.rank(&positions)] += 1;
    }
    Ok(DegreeVector {
        pset: pset.to_vec(),
        coords,
    })
}

/// Largest number of edges placing a single vertex on `position` (0-based).
pub fn max_coordinate(d: &Orientation, position: usize) -> usize {
    let mut count = vec![0usize; d.base().n()];
    for order in d.orders() {
        if let Some(&v) = order.get(position) {
            count[v] += 1;
        }
    }
    count.into_iter().max().unwrap_or(0)
}

/// Degree vectors of every p-set that occurs in some edge.
///
/// p-sets are keyed by their lexicographic rank among the p-subsets of
/// `0..n`; absent p-sets have the zero vector.
#[derive(Clone, Debug)]
pub struct DegreeTable {
    n: usize,
    index: PositionIndex,
    coords: HashMap<u64, Vec<u32>>,
}

impl DegreeTable {
    pub fn build(d: &Orientation, p: usize) -> Result<Self> {
        let h = d.base();
        let index = PositionIndex::new(h.r(), p)?;
        let mut coords: HashMap<u64, Vec<u32>> = HashMap::new();
        let mut verts = Vec::with_capacity(p);
        for order in d.orders() {
            for (j, pos) in index.iter().enumerate() {
                verts.clear();
                verts.extend(pos.iter().map(|&q| order[q]));
                verts.sort_unstable();
                let key = subset_rank(h.n(), &verts);
                coords.entry(key).or_insert_with(|| vec![0; index.len()])[j] += 1;
            }
        }
        Ok(DegreeTable {
            n: h.n(),
            index,
            coords,
        })
    }

    pub fn index(&self) -> &PositionIndex {
        &self.index
    }

    pub fn p(&self) -> usize {
        self.index.p()
    }

    pub fn pset_count(&self) -> u64 {
        count_psets(self.n, self.index.p())
    }

    /// Coordinates of the p-set with the given rank; `None` means all zero.
    pub fn coords_by_rank(&self, rank: u64) -> Option<&[u32]> {
        self.coords.get(&rank).map(Vec::as_slice)
    }

    pub fn coords(&self, pset: &[usize]) -> Vec<u32> {
        self.coords
            .get(&subset_rank(self.n, pset))
            .cloned()
            .unwrap_or_else(|| vec![0; self.index.len()])
    }

    /// Whether every coordinate of `pset` is at least `k`.
    pub fn all_at_least(&self, pset: &[usize], k: u32) -> bool {
        self.all_at_least_by_rank(subset_rank(self.n, pset), k)
    }

    pub fn all_at_least_by_rank(&self, rank: u64, k: u32) -> bool {
        if k == 0 {
            return true;
        }
        self.coords
            .get(&rank)
            .is_some_and(|c| c.iter().all(|&x| x >= k))
    }

    /// Number of p-sets with every coordinate at least `k`.
    pub fn count_at_least(&self, k: u32) -> u64 {
        if k == 0 {
            return self.pset_count();
        }
        self.coords.values().filter(|c| c.iter().all(|&x| x >= k)).count() as u64
    }

    /// Iterates the p-sets occurring in some edge with their coordinates.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &[u32])> + '_ {
        let (n, p) = (self.n, self.index.p());
        self.coords
            .iter()
            .map(move |(&rank, c)| (subset_unrank(n, p, rank), c.as_slice()))
    }
}
