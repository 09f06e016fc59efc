use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercore::Hypergraph;

use super::degeneracy::degeneracy;

/// Disjoint vertex classes `A_1..A_m` (`m <= r`) plus the uncovered rest.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionWitness {
    pub parts: Vec<Vec<usize>>,
    pub remainder: Vec<usize>,
}

impl PartitionWitness {
    pub fn covered(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }
}

/// Splits a hypergraph of degeneracy at most `r(k+1) - 1` into `r`
/// classes, each inducing a `k`-degenerate subhypergraph.
///
/// Vertices are re-inserted in reverse elimination order into the first
/// class where they close at most `k` edges.
pub fn partition_degenerate(h: &Hypergraph, k: usize) -> Result<PartitionWitness> {
    let r = h.r();
    let required = r * (k + 1) - 1;
    let (d, order) = degeneracy(h);
    if d > required {
        return Err(Error::NotDegenerateEnough { required, actual: d });
    }
    let incidence = h.incidence();
    let mut class = vec![usize::MAX; h.n()];
    for &v in order.iter().rev() {
        let mut closed = vec![0usize; r];
        for &e in &incidence[v] {
            let others: Vec<usize> = h.edge(e).iter().copied().filter(|&u| u != v).collect();
            let c = class[others[0]];
            if c != usize::MAX && others.iter().all(|&u| class[u] == c) {
                closed[c] += 1;
            }
        }
        class[v] = (0..r)
            .find(|&c| closed[c] <= k)
            .ok_or_else(|| Error::Internal("degeneracy bound violated".into()))?;
    }
    let parts = (0..r)
        .map(|c| (0..h.n()).filter(|&v| class[v] == c).collect())
        .collect();
    Ok(PartitionWitness {
        parts,
        remainder: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::generate;

    fn check(h: &Hypergraph, k: usize) -> PartitionWitness {
        let w = partition_degenerate(h, k).unwrap();
        assert_eq!(w.covered(), h.n());
        for part in &w.parts {
            let (sub, _) = h.induced(part);
            assert!(degeneracy(&sub).0 <= k);
        }
        w
    }

    #[test]
    fn complete_graph_halves() {
        let w = check(&generate::complete(4, 2).unwrap(), 1);
        assert_eq!(w.parts, vec![vec![2, 3], vec![0, 1]]);
    }

    #[test]
    fn single_triple() {
        let w = check(&generate::complete(3, 3).unwrap(), 0);
        assert_eq!(w.parts, vec![vec![1, 2], vec![0], vec![]]);
    }

    #[test]
    fn edgeless_first_class() {
        let w = check(&Hypergraph::empty(4, 3).unwrap(), 0);
        assert_eq!(w.parts[0], vec![0, 1, 2, 3]);
    }

    #[test]
    fn too_dense() {
        assert!(matches!(
            partition_degenerate(&generate::complete(5, 2).unwrap(), 1),
            Err(Error::NotDegenerateEnough { required: 3, actual: 4 })
        ));
    }
}
