//! Largest vertex sets with a hereditary property, and triangle hitting.

use crate::error::{Error, NodeBudget, Result};
use crate::hypercore::Hypergraph;

use super::degeneracy::mask_degeneracy;

/// Hereditary properties of induced subhypergraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Property {
    EdgeFree,
    Degenerate(usize),
    /// Graphs only: two-colorable.
    Bipartite,
}

impl Property {
    /// Whether `set | 1 << v` keeps the property, given that `set` has it.
    fn admits(self, masks: &[u64], adj: &[u64], set: u64, v: usize) -> bool {
        let with = set | 1 << v;
        match self {
            Property::EdgeFree => !masks.iter().any(|&m| m >> v & 1 == 1 && m & with == m),
            Property::Degenerate(d) => mask_degeneracy(masks, with) <= d,
            Property::Bipartite => is_bipartite(adj, with),
        }
    }
}

fn is_bipartite(adj: &[u64], set: u64) -> bool {
    let mut side = [0u64; 2];
    let mut left = set;
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let mut frontier = 1u64 << start;
        side[0] |= frontier;
        let mut parity = 0;
        while frontier != 0 {
            left &= !frontier;
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[u] & set;
            }
            if next & side[parity] != 0 {
                return false;
            }
            next &= left;
            parity ^= 1;
            side[parity] |= next;
            frontier = next;
        }
    }
    true
}

fn adjacency_masks(h: &Hypergraph) -> Vec<u64> {
    let mut adj = vec![0u64; h.n()];
    if h.r() == 2 {
        for e in h.edges() {
            adj[e[0]] |= 1 << e[1];
            adj[e[1]] |= 1 << e[0];
        }
    }
    adj
}

/// Shared branch and bound: include/exclude each vertex in degree order,
/// pruning when the remaining vertices cannot beat the incumbent.
fn max_hereditary(h: &Hypergraph, prop: Property, budget: u64) -> Result<Vec<usize>> {
    let masks = h.edge_masks()?;
    let adj = adjacency_masks(h);
    let degrees = h.degrees();
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(degrees[v]));
    let mut st = Hereditary {
        masks: &masks,
        adj: &adj,
        order: &order,
        prop,
        best: 0,
        best_size: 0,
        found: false,
        nodes: NodeBudget::new(budget),
    };
    if !st.run(0, 0, 0) {
        return Err(Error::BudgetExceeded { limit: budget });
    }
    Ok((0..h.n()).filter(|&v| st.best >> v & 1 == 1).collect())
}

struct Hereditary<'a> {
    masks: &'a [u64],
    adj: &'a [u64],
    order: &'a [usize],
    prop: Property,
    best: u64,
    best_size: usize,
    found: bool,
    nodes: NodeBudget,
}

impl Hereditary<'_> {
    /// Returns false when the budget runs out.
    fn run(&mut self, depth: usize, set: u64, size: usize) -> bool {
        if size + (self.order.len() - depth) <= self.best_size && self.found {
            return true;
        }
        if depth == self.order.len() {
            self.best = set;
            self.best_size = size;
            self.found = true;
            return true;
        }
        if !self.nodes.tick() {
            return false;
        }
        let v = self.order[depth];
        if self.prop.admits(self.masks, self.adj, set, v) && !self.run(depth + 1, set | 1 << v, size + 1) {
            return false;
        }
        self.run(depth + 1, set, size)
    }
}

/// Independence number and a maximum independent set (no edge inside).
pub fn alpha(h: &Hypergraph, budget: u64) -> Result<(usize, Vec<usize>)> {
    let s = max_hereditary(h, Property::EdgeFree, budget)?;
    Ok((s.len(), s))
}

/// Largest vertex set inducing a `d`-degenerate subhypergraph.
pub fn beta(h: &Hypergraph, d: usize, budget: u64) -> Result<(usize, Vec<usize>)> {
    let prop = if d == 0 { Property::EdgeFree } else { Property::Degenerate(d) };
    let s = max_hereditary(h, prop, budget)?;
    Ok((s.len(), s))
}

/// Largest union of two disjoint independent sets of a graph, i.e. the
/// largest induced bipartite subgraph.
pub fn alpha2(g: &Hypergraph, budget: u64) -> Result<(usize, Vec<usize>)> {
    if g.r() != 2 {
        return Err(Error::BadParams("alpha2 needs a graph (r = 2)".into()));
    }
    let s = max_hereditary(g, Property::Bipartite, budget)?;
    Ok((s.len(), s))
}

/// Triangles of a graph as sorted triples.
pub fn triangles(g: &Hypergraph) -> Result<Vec<[usize; 3]>> {
    let adj = g.adjacency()?;
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !adj[a][b] {
                continue;
            }
            for c in b + 1..n {
                if adj[a][c] && adj[b][c] {
                    out.push([a, b, c]);
                }
            }
        }
    }
    Ok(out)
}

/// Minimum number of vertices meeting every triangle, with such a set.
///
/// Iterative deepening: branch on the three vertices of the first
/// triangle not yet hit.
pub fn hit_triangles(g: &Hypergraph, budget: u64) -> Result<(usize, Vec<usize>)> {
    if g.r() != 2 {
        return Err(Error::BadParams("triangle hitting needs a graph (r = 2)".into()));
    }
    let tris = triangles(g)?;
    let mut nodes = NodeBudget::new(budget);
    let mut chosen = vec![false; g.n()];
    for size in 0..=g.n() {
        match hit(&tris, size, &mut chosen, &mut nodes) {
            Some(true) => {
                return Ok((size, (0..g.n()).filter(|&v| chosen[v]).collect()));
            }
            Some(false) => {}
            None => return Err(Error::BudgetExceeded { limit: budget }),
        }
    }
    Err(Error::Internal("all vertices hit every triangle".into()))
}

fn hit(tris: &[[usize; 3]], left: usize, chosen: &mut [bool], nodes: &mut NodeBudget) -> Option<bool> {
    let Some(t) = tris.iter().find(|t| t.iter().all(|&v| !chosen[v])) else {
        return Some(true);
    };
    if left == 0 {
        return Some(false);
    }
    if !nodes.tick() {
        return None;
    }
    for &v in t {
        chosen[v] = true;
        let res = hit(tris, left - 1, chosen, nodes);
        if res != Some(false) {
            return res;
        }
        chosen[v] = false;
    }
    Some(false)
}
