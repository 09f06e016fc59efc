use crate::error::{Error, Result};
use crate::hypercore::combin::binomial;
use crate::hypercore::{Hypergraph, PositionIndex};

use super::coloring::edge_pset_ranks;

/// The p-sets that lie in at least one edge, ordered fail-first: most
/// incident edges first, lexicographic rank breaking ties.
pub(crate) struct PSetSystem {
    pub per_edge: usize,
    pub edges: usize,
    /// Rank of the p-set at each search depth.
    pub order: Vec<usize>,
    /// Incident edges of the p-set at each search depth.
    pub incident: Vec<Vec<usize>>,
    /// Ranks of p-sets contained in no edge.
    pub free: Vec<usize>,
}

impl PSetSystem {
    pub fn new(h: &Hypergraph, p: usize) -> Result<Self> {
        PositionIndex::new(h.r(), p)?;
        let total = binomial(h.n() as u64, p as u64);
        if total > 1 << 24 {
            return Err(Error::TooLarge(format!("{total} p-sets")));
        }
        let total = total as usize;
        let mut by_rank: Vec<Vec<usize>> = vec![Vec::new(); total];
        for (e, ranks) in edge_pset_ranks(h, p).into_iter().enumerate() {
            for q in ranks {
                by_rank[q].push(e);
            }
        }
        let mut order: Vec<usize> = (0..total).filter(|&q| !by_rank[q].is_empty()).collect();
        order.sort_by_key(|&q| std::cmp::Reverse(by_rank[q].len()));
        let free = (0..total).filter(|&q| by_rank[q].is_empty()).collect();
        let incident = order.iter().map(|&q| std::mem::take(&mut by_rank[q])).collect();
        Ok(PSetSystem {
            per_edge: binomial(h.r() as u64, p as u64) as usize,
            edges: h.edge_count(),
            order,
            incident,
            free,
        })
    }
}

/// Per-edge, per-color counts of colored p-sets.
pub(crate) struct EdgeCounts {
    colors: usize,
    limit: u16,
    cnt: Vec<u16>,
}

impl EdgeCounts {
    pub fn new(sys: &PSetSystem, colors: usize) -> Self {
        EdgeCounts {
            colors,
            limit: sys.per_edge as u16,
            cnt: vec![0; sys.edges * colors],
        }
    }

    /// Adds color `c` (0-based) to every edge in `edges`; on a monochromatic
    /// edge the change is undone and `false` returned.
    pub fn try_add(&mut self, edges: &[usize], c: usize) -> bool {
        for (i, &e) in edges.iter().enumerate() {
            let slot = &mut self.cnt[e * self.colors + c];
            *slot += 1;
            if *slot == self.limit {
                for &f in &edges[..=i] {
                    self.cnt[f * self.colors + c] -= 1;
                }
                return false;
            }
        }
        true
    }

    pub fn remove(&mut self, edges: &[usize], c: usize) {
        for &e in edges {
            self.cnt[e * self.colors + c] -= 1;
        }
    }
}
