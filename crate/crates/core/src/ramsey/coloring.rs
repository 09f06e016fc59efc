use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercore::combin::{binomial, subset_rank, subset_unrank, Combinations};
use crate::hypercore::{check_pset, Hypergraph};

const MAX_PSETS: u64 = 1 << 24;

/// A partial coloring of the p-subsets of `0..n` with colors `1..=num_colors`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawColoring", into = "RawColoring")]
pub struct PSetColoring {
    n: usize,
    p: usize,
    num_colors: u32,
    // Indexed by lexicographic rank; 0 = uncolored.
    colors: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawColoring {
    n: usize,
    p: usize,
    num_colors: u32,
    colored: Vec<(Vec<usize>, u32)>,
}

impl TryFrom<RawColoring> for PSetColoring {
    type Error = Error;

    fn try_from(raw: RawColoring) -> Result<Self> {
        let mut c = PSetColoring::new(raw.n, raw.p, raw.num_colors)?;
        for (pset, color) in raw.colored {
            c.set(&pset, color)?;
        }
        Ok(c)
    }
}

impl From<PSetColoring> for RawColoring {
    fn from(c: PSetColoring) -> Self {
        RawColoring {
            n: c.n,
            p: c.p,
            num_colors: c.num_colors,
            colored: c.iter_colored().collect(),
        }
    }
}

impl PSetColoring {
    pub fn new(n: usize, p: usize, num_colors: u32) -> Result<Self> {
        if p == 0 {
            return Err(Error::BadParams("p must be at least 1".into()));
        }
        let total = binomial(n as u64, p as u64);
        if total > MAX_PSETS {
            return Err(Error::TooLarge(format!("{total} p-sets")));
        }
        Ok(PSetColoring {
            n,
            p,
            num_colors,
            colors: vec![0; total as usize],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn num_colors(&self) -> u32 {
        self.num_colors
    }

    pub fn pset_count(&self) -> usize {
        self.colors.len()
    }

    fn rank_checked(&self, pset: &[usize]) -> Result<usize> {
        // Reuse the p-set validation with a fake uniformity above p.
        check_pset(self.n, self.p + 1, pset)?;
        if pset.len() != self.p {
            return Err(Error::BadPSet {
                pset: pset.to_vec(),
                reason: format!("expected {} vertices", self.p),
            });
        }
        Ok(subset_rank(self.n, pset) as usize)
    }

    pub fn get(&self, pset: &[usize]) -> Option<u32> {
        let rank = self.rank_checked(pset).ok()?;
        self.get_by_rank(rank)
    }

    pub fn get_by_rank(&self, rank: usize) -> Option<u32> {
        match self.colors[rank] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn set(&mut self, pset: &[usize], color: u32) -> Result<()> {
        if color == 0 || color > self.num_colors {
            return Err(Error::BadParams(format!(
                "color {color} outside 1..={}",
                self.num_colors
            )));
        }
        let rank = self.rank_checked(pset)?;
        self.colors[rank] = color;
        Ok(())
    }

    pub(crate) fn set_by_rank(&mut self, rank: usize, color: u32) {
        self.colors[rank] = color;
    }

    pub fn clear(&mut self, pset: &[usize]) -> Result<()> {
        let rank = self.rank_checked(pset)?;
        self.colors[rank] = 0;
        Ok(())
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c != 0).count()
    }

    /// Number of distinct colors actually used.
    pub fn used_colors(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.iter().copied().filter(|&c| c != 0).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn iter_colored(&self) -> impl Iterator<Item = (Vec<usize>, u32)> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(rank, &c)| (subset_unrank(self.n, self.p, rank as u64), c))
    }
}

/// Ranks of the p-subsets of each edge, in lexicographic order of the
/// subsets of the sorted edge.
pub(crate) fn edge_pset_ranks(h: &Hypergraph, p: usize) -> Vec<Vec<usize>> {
    let combos: Vec<Vec<usize>> = Combinations::new(h.r(), p).collect();
    let mut buf = Vec::with_capacity(p);
    h.edges()
        .map(|e| {
            combos
                .iter()
                .map(|c| {
                    buf.clear();
                    buf.extend(c.iter().map(|&i| e[i]));
                    subset_rank(h.n(), &buf) as usize
                })
                .collect()
        })
        .collect()
}

/// Edges whose p-subsets are all colored with one color.
pub fn check_mono(h: &Hypergraph, coloring: &PSetColoring) -> Result<Vec<usize>> {
    if coloring.n() != h.n() || coloring.p() >= h.r() {
        return Err(Error::BadParams(format!(
            "coloring of {}-sets on {} vertices does not fit H(n = {}, r = {})",
            coloring.p(),
            coloring.n(),
            h.n(),
            h.r()
        )));
    }
    Ok(edge_pset_ranks(h, coloring.p())
        .iter()
        .enumerate()
        .filter(|(_, ranks)| {
            let first = coloring.colors[ranks[0]];
            first != 0 && ranks.iter().all(|&q| coloring.colors[q] == first)
        })
        .map(|(i, _)| i)
        .collect())
}
