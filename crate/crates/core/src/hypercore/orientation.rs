use serde::{Deserialize, Serialize};

use super::Hypergraph;
use crate::error::{Error, Result};

/// An ordering of the vertices of every edge of a hypergraph.
///
/// `order(i)` is a permutation of `base.edge(i)`; slot `j` of it is
/// position `j` of the edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawOrientation", into = "RawOrientation")]
pub struct Orientation {
    base: Hypergraph,
    orders: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawOrientation {
    n: usize,
    r: usize,
    orders: Vec<Vec<usize>>,
}

impl TryFrom<RawOrientation> for Orientation {
    type Error = Error;

    fn try_from(raw: RawOrientation) -> Result<Self> {
        Orientation::from_ordered_edges(&raw.orders, raw.n, raw.r)
    }
}

impl From<Orientation> for RawOrientation {
    fn from(d: Orientation) -> Self {
        RawOrientation {
            n: d.base.n(),
            r: d.base.r(),
            orders: d.orders().map(<[usize]>::to_vec).collect(),
        }
    }
}

impl Orientation {
    /// Builds an orientation from one order per edge, indexed like `base`.
    pub fn new(base: Hypergraph, orders: Vec<Vec<usize>>) -> Result<Self> {
        if orders.len() != base.edge_count() {
            return Err(Error::BadOrientation(format!(
                "{} orders for {} edges",
                orders.len(),
                base.edge_count()
            )));
        }
        let mut flat = Vec::with_capacity(base.edge_count() * base.r());
        for (i, order) in orders.iter().enumerate() {
            let mut sorted = order.clone();
            sorted.sort_unstable();
            if sorted != base.edge(i) {
                return Err(Error::BadOrientation(format!(
                    "order {order:?} is not a permutation of edge {:?}",
                    base.edge(i)
                )));
            }
            flat.extend_from_slice(order);
        }
        Ok(Orientation { base, orders: flat })
    }

    pub(crate) fn from_flat_unchecked(base: Hypergraph, orders: Vec<usize>) -> Self {
        debug_assert_eq!(orders.len(), base.edge_count() * base.r());
        Orientation { base, orders }
    }

    /// Every edge in ascending vertex order.
    pub fn ascending(base: Hypergraph) -> Self {
        let orders = base.edges().flatten().copied().collect();
        Orientation { base, orders }
    }

    /// Builds the underlying hypergraph from ordered tuples and keeps each
    /// tuple as the order of its edge.
    pub fn from_ordered_edges<E: AsRef<[usize]>>(ordered: &[E], n: usize, r: usize) -> Result<Self> {
        let base = Hypergraph::canonicalize(ordered, n, r)?;
        let mut keyed: Vec<(Vec<usize>, Vec<usize>)> = ordered
            .iter()
            .map(|o| {
                let mut s = o.as_ref().to_vec();
                s.sort_unstable();
                (s, o.as_ref().to_vec())
            })
            .collect();
        keyed.sort();
        let orders = keyed.into_iter().map(|(_, o)| o).collect();
        Orientation::new(base, orders)
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn order(&self, i: usize) -> &[usize] {
        let r = self.base.r();
        &self.orders[i * r..(i + 1) * r]
    }

    pub fn orders(&self) -> impl ExactSizeIterator<Item = &[usize]> + '_ {
        self.orders.chunks_exact(self.base.r())
    }

    /// Position of `v` in edge `i`, if present.
    pub fn position_of(&self, i: usize, v: usize) -> Option<usize> {
        self.order(i).iter().position(|&u| u == v)
    }
}
