use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, NodeBudget, Result};
use crate::hypercore::Hypergraph;
use crate::netflow::FlowNetwork;

use super::mad::mad_exact;
use super::{PartitionWitness, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MReport {
    pub value: usize,
    pub witness: PartitionWitness,
    pub nodes: u64,
}

/// Decides `Mad(H[S]) <= r k` for vertex sets given as masks, with a cache.
pub(crate) struct SparsityOracle<'a> {
    masks: &'a [u64],
    k: usize,
    cache: HashMap<u64, bool>,
}

impl<'a> SparsityOracle<'a> {
    pub fn new(masks: &'a [u64], k: usize) -> Self {
        SparsityOracle {
            masks,
            k,
            cache: HashMap::new(),
        }
    }

    pub fn sparse(&mut self, set: u64) -> bool {
        let inside: Vec<u64> = self.masks.iter().copied().filter(|&m| m & set == m).collect();
        // Any F then has e(F) <= k <= k |F|.
        if inside.len() <= self.k {
            return true;
        }
        if inside.len() > self.k * set.count_ones() as usize {
            return false;
        }
        if let Some(&ok) = self.cache.get(&set) {
            return ok;
        }
        let ok = flow_sparse(&inside, set, self.k);
        self.cache.insert(set, ok);
        ok
    }
}

/// `e(F) <= k |F|` for all `F` inside `set`, by orienting each edge toward
/// one of its vertices with every vertex chosen at most `k` times.
fn flow_sparse(edges: &[u64], set: u64, k: usize) -> bool {
    let verts: Vec<usize> = (0..64).filter(|&v| set >> v & 1 == 1).collect();
    let mut slot = [0usize; 64];
    for (i, &v) in verts.iter().enumerate() {
        slot[v] = i;
    }
    let e = edges.len();
    let sink = 1 + e + verts.len();
    let mut net = FlowNetwork::new(sink + 1, 0, sink);
    for (i, &m) in edges.iter().enumerate() {
        net.add_arc(0, 1 + i, 1);
        let mut bits = m;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            net.add_arc(1 + i, 1 + e + slot[v], 1);
        }
    }
    for i in 0..verts.len() {
        net.add_arc(1 + e + i, sink, k as i64);
    }
    net.max_flow().value == e as i64
}

/// `M(H,k)`: the largest total size of `r` disjoint vertex classes, each
/// inducing maximum average degree at most `r k`.
///
/// Vertices are assigned in decreasing-degree order to an existing class,
/// the first empty class, or left out (tried last); a branch is cut when
/// every remaining vertex joining would not beat the incumbent.
pub fn m_value(h: &Hypergraph, k: usize, budget: u64) -> Result<MReport> {
    let n = h.n();
    let r = h.r();
    let masks = h.edge_masks()?;
    let degrees = h.degrees();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(degrees[v]));
    let mut st = MSearch {
        order: &order,
        oracle: SparsityOracle::new(&masks, k),
        parts: vec![0; r],
        best: vec![0; r],
        best_size: 0,
        found: false,
        nodes: NodeBudget::new(budget),
    };
    if !st.run(0, 0) {
        return Err(Error::BudgetExceeded { limit: budget });
    }
    let parts: Vec<Vec<usize>> = st
        .best
        .iter()
        .map(|&m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect();
    let covered: u64 = st.best.iter().fold(0, |acc, &m| acc | m);
    let remainder = (0..n).filter(|&v| covered >> v & 1 == 0).collect();
    Ok(MReport {
        value: st.best_size,
        witness: PartitionWitness { parts, remainder },
        nodes: st.nodes.used(),
    })
}

struct MSearch<'a> {
    order: &'a [usize],
    oracle: SparsityOracle<'a>,
    parts: Vec<u64>,
    best: Vec<u64>,
    best_size: usize,
    found: bool,
    nodes: NodeBudget,
}

impl MSearch<'_> {
    fn run(&mut self, depth: usize, covered: usize) -> bool {
        if self.found && covered + (self.order.len() - depth) <= self.best_size {
            return true;
        }
        if depth == self.order.len() {
            self.best.clone_from(&self.parts);
            self.best_size = covered;
            self.found = true;
            return true;
        }
        if !self.nodes.tick() {
            return false;
        }
        let v = self.order[depth];
        for i in 0..self.parts.len() {
            let empty = self.parts[i] == 0;
            let with = self.parts[i] | 1 << v;
            if self.oracle.sparse(with) {
                self.parts[i] = with;
                let ok = self.run(depth + 1, covered + 1);
                self.parts[i] &= !(1 << v);
                if !ok {
                    return false;
                }
            }
            // Empty classes are interchangeable.
            if empty {
                break;
            }
        }
        self.run(depth + 1, covered)
    }
}

/// Re-checks a partition witness: disjoint classes, each with maximum
/// average degree at most `r k`. Returns the number of covered vertices.
pub fn certify_partition(h: &Hypergraph, k: usize, w: &PartitionWitness) -> Result<usize> {
    if w.parts.len() > h.r() {
        return Err(Error::BadParams(format!("{} classes for r = {}", w.parts.len(), h.r())));
    }
    let mut seen = vec![false; h.n()];
    for &v in w.parts.iter().flatten().chain(&w.remainder) {
        if v >= h.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: h.n() });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::PartsNotDisjoint { vertex: v });
        }
    }
    let bound = Rational::from_int((h.r() * k) as i64);
    for (i, part) in w.parts.iter().enumerate() {
        let (sub, _) = h.induced(part);
        if mad_exact(&sub).value > bound {
            return Err(Error::PartNotSparse { part: i });
        }
    }
    Ok(w.parts.iter().map(Vec::len).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::generate;

    const B: u64 = 10_000_000;

    fn m(h: &Hypergraph, k: usize) -> usize {
        let rep = m_value(h, k, B).unwrap();
        assert_eq!(certify_partition(h, k, &rep.witness).unwrap(), rep.value);
        rep.value
    }

    #[test]
    fn complete_graphs() {
        for n in 2..=6 {
            assert_eq!(m(&generate::complete(n, 2).unwrap(), 0), 2);
        }
        assert_eq!(m(&generate::complete(10, 2).unwrap(), 1), 6);
        assert_eq!(m(&generate::complete(7, 3).unwrap(), 0), 6);
        assert_eq!(m(&Hypergraph::empty(5, 3).unwrap(), 0), 5);
    }

    #[test]
    fn oracle_matches_mad() {
        let h = generate::complete(6, 3).unwrap();
        let masks = h.edge_masks().unwrap();
        let mut oracle = SparsityOracle::new(&masks, 1);
        for set in 1u64..64 {
            let verts: Vec<usize> = (0..6).filter(|&v| set >> v & 1 == 1).collect();
            let (sub, _) = h.induced(&verts);
            let expect = mad_exact(&sub).value <= Rational::from_int(3);
            assert_eq!(oracle.sparse(set), expect, "{verts:?}");
        }
    }

    #[test]
    fn budget_exceeded() {
        let h = generate::complete(12, 2).unwrap();
        assert!(matches!(m_value(&h, 1, 10), Err(Error::BudgetExceeded { .. })));
    }
}
