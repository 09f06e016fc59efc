use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::combin::binomial;
use crate::error::{Error, Result};

/// A simple r-uniform hypergraph on vertices `0..n`.
///
/// Edges are stored sorted, deduplicated and in lexicographic order, packed
/// into a flat buffer with stride `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph", into = "RawHypergraph")]
pub struct Hypergraph {
    n: usize,
    r: usize,
    verts: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawHypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = Error;

    fn try_from(raw: RawHypergraph) -> Result<Self> {
        Hypergraph::canonicalize(&raw.edges, raw.n, raw.r)
    }
}

impl From<Hypergraph> for RawHypergraph {
    fn from(h: Hypergraph) -> Self {
        RawHypergraph {
            n: h.n,
            r: h.r,
            edges: h.edges().map(<[usize]>::to_vec).collect(),
        }
    }
}

impl Hypergraph {
    /// Validates, sorts and orders raw edge tuples.
    pub fn canonicalize<E: AsRef<[usize]>>(raw_edges: &[E], n: usize, r: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::BadParams(format!("uniformity must be at least 2, got {r}")));
        }
        let mut set = BTreeSet::new();
        for raw in raw_edges {
            let raw = raw.as_ref();
            if raw.len() != r {
                return Err(Error::BadParams(format!(
                    "edge {raw:?} has {} vertices, expected {r}",
                    raw.len()
                )));
            }
            if let Some(&v) = raw.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            let mut e = raw.to_vec();
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVertexInEdge { edge: raw.to_vec() });
            }
            if !set.insert(e.clone()) {
                return Err(Error::DuplicateEdge { edge: e });
            }
        }
        Ok(Hypergraph {
            n,
            r,
            verts: set.into_iter().flatten().collect(),
        })
    }

    pub fn empty(n: usize, r: usize) -> Result<Self> {
        Self::canonicalize::<Vec<usize>>(&[], n, r)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.verts.len() / self.r
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.verts[i * self.r..(i + 1) * self.r]
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &[usize]> + '_ {
        self.verts.chunks_exact(self.r)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges().filter(|e| e.contains(&v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &v in &self.verts {
            deg[v] += 1;
        }
        deg
    }

    /// Edge indices incident to each vertex.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() as u64 == binomial(self.n as u64, self.r as u64)
    }

    pub fn has_edge(&self, sorted: &[usize]) -> bool {
        self.edges().any(|e| e == sorted)
    }

    /// Bitmask of each edge; requires `n <= 64`.
    pub fn edge_masks(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return Err(Error::TooLarge(format!("n = {} exceeds 64-vertex bitmask", self.n)));
        }
        Ok(self
            .edges()
            .map(|e| e.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect())
    }

    /// Sub-hypergraph induced by `vertices`, relabeled by rank in the sorted
    /// vertex list. Returns the hypergraph and the old labels.
    pub fn induced(&self, vertices: &[usize]) -> (Hypergraph, Vec<usize>) {
        let mut labels = vertices.to_vec();
        labels.sort_unstable();
        labels.dedup();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            new_id[v] = i;
        }
        let mut verts = Vec::new();
        for e in self.edges() {
            if e.iter().all(|&v| new_id[v] != usize::MAX) {
                verts.extend(e.iter().map(|&v| new_id[v]));
            }
        }
        // Relabeling is monotone, so edges stay sorted and in lex order.
        let h = Hypergraph {
            n: labels.len(),
            r: self.r,
            verts,
        };
        (h, labels)
    }

    /// Graph complement; only defined for `r = 2`.
    pub fn complement(&self) -> Result<Hypergraph> {
        if self.r != 2 {
            return Err(Error::BadParams("complement requires r = 2".into()));
        }
        let mut adj = vec![vec![false; self.n]; self.n];
        for e in self.edges() {
            adj[e[0]][e[1]] = true;
        }
        let mut verts = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !adj[a][b] {
                    verts.push(a);
                    verts.push(b);
                }
            }
        }
        Ok(Hypergraph {
            n: self.n,
            r: 2,
            verts,
        })
    }

    /// Adjacency matrix of a graph.
    pub fn adjacency(&self) -> Result<Vec<Vec<bool>>> {
        if self.r != 2 {
            return Err(Error::BadParams("adjacency requires r = 2".into()));
        }
        let mut adj = vec![vec![false; self.n]; self.n];
        for e in self.edges() {
            adj[e[0]][e[1]] = true;
            adj[e[1]][e[0]] = true;
        }
        Ok(adj)
    }
}
