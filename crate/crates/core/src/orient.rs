//! Orientation constructions.
//!
//! * [`orient_budget`] / [`orient_max_outdeg`]: first-position degree bounded
//!   by a per-vertex budget, decided by max-flow.
//! * [`orient_from_partition`]: from classes `A_1..A_r` with small maximum
//!   average degree, an orientation where vertices of `A_i` rarely sit on
//!   position `i`.
//! * [`orient_forbidden`]: every colored p-set avoids the position set named
//!   by its color.
//! * [`deficiency_coloring`]: colors p-sets by their first deficient
//!   coordinate.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::PartitionWitness;
use crate::hypercore::combin::{binomial, permutations, subset_rank, Combinations};
use crate::hypercore::{DegreeTable, Hypergraph, Orientation, PositionIndex};
use crate::netflow::{perfect_matching, BipartiteGraph, FlowNetwork, Matching};
use crate::ramsey::PSetColoring;

/// Per-vertex upper bounds on the first-position degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeBudget(pub Vec<u64>);

impl DegreeBudget {
    pub fn uniform(n: usize, k: u64) -> Self {
        DegreeBudget(vec![k; n])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BudgetOutcome {
    Oriented(Orientation),
    /// A vertex set `F` spanning more edges than its total budget.
    Infeasible { witness: Vec<usize> },
}

impl BudgetOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, BudgetOutcome::Oriented(_))
    }
}

/// Flow assigning each edge a head vertex.
///
/// Every edge carries `weight` units split among its vertices, vertex `v`
/// absorbs at most `cap[v]`. Returns the flow value, the flow on each
/// edge-to-vertex arc (edge-major, vertices in sorted order) and the vertices
/// on the source side of a minimum cut.
pub(crate) fn head_flow(h: &Hypergraph, weight: i64, cap: &[i64]) -> (i64, Vec<i64>, Vec<usize>) {
    let e = h.edge_count();
    let n = h.n();
    let source = 0;
    let sink = e + n + 1;
    let mut net = FlowNetwork::new(e + n + 2, source, sink);
    for i in 0..e {
        net.add_arc(source, 1 + i, weight);
    }
    let first_incidence = e;
    for (i, edge) in h.edges().enumerate() {
        for &v in edge {
            net.add_arc(1 + i, 1 + e + v, weight);
        }
    }
    for (v, &c) in cap.iter().enumerate() {
        net.add_arc(1 + e + v, sink, c);
    }
    let mf = net.max_flow();
    let incidence_flow = mf.flow[first_incidence..first_incidence + e * h.r()].to_vec();
    let side = (0..n).filter(|&v| mf.source_side[1 + e + v]).collect();
    (mf.value, incidence_flow, side)
}

/// Orientation with `deg_1(v) <= f(v)` for every vertex, or a set `F` with
/// `e(F) > sum of f over F`.
///
/// The first position of each edge holds the vertex selected by the flow;
/// the other positions follow in ascending vertex order.
pub fn orient_budget(h: &Hypergraph, f: &DegreeBudget) -> Result<BudgetOutcome> {
    if f.0.len() != h.n() {
        return Err(Error::BudgetDomainMismatch {
            expected: h.n(),
            got: f.0.len(),
        });
    }
    let cap: Vec<i64> = f.0.iter().map(|&x| x.min(i64::MAX as u64) as i64).collect();
    let (value, arc_flow, side) = head_flow(h, 1, &cap);
    if value < h.edge_count() as i64 {
        return Ok(BudgetOutcome::Infeasible { witness: side });
    }
    let r = h.r();
    let mut flat = Vec::with_capacity(h.edge_count() * r);
    for (i, e) in h.edges().enumerate() {
        let slot = (0..r)
            .find(|&j| arc_flow[i * r + j] == 1)
            .ok_or_else(|| Error::Internal("saturated edge without a head".into()))?;
        flat.push(e[slot]);
        flat.extend(e.iter().enumerate().filter(|&(j, _)| j != slot).map(|(_, &v)| v));
    }
    Ok(BudgetOutcome::Oriented(Orientation::from_flat_unchecked(h.clone(), flat)))
}

/// [`orient_budget`] with the uniform budget `k`; feasible exactly when the
/// maximum average degree is at most `r k`.
pub fn orient_max_outdeg(h: &Hypergraph, k: u64) -> BudgetOutcome {
    orient_budget(h, &DegreeBudget::uniform(h.n(), k)).expect("uniform budget matches vertex set")
}

/// Orientation in which every vertex of class `i` occupies position `i` of at
/// most `k - 1` edges.
///
/// Edges inside a class are oriented with bounded first-position degree and
/// rotated so that position 0 becomes position `i`; edges inside the
/// remainder stay ascending; every other edge is ordered by a perfect
/// matching between its vertices and the positions they may take.
pub fn orient_from_partition(h: &Hypergraph, k: u64, witness: &PartitionWitness) -> Result<Orientation> {
    let n = h.n();
    let r = h.r();
    if k == 0 {
        return Err(Error::BadParams("class bound k - 1 needs k >= 1".into()));
    }
    if witness.parts.len() > r {
        return Err(Error::BadParams(format!("{} classes for r = {r}", witness.parts.len())));
    }
    // class[v] = Some(i) for v in A_i, None for the remainder.
    let mut class: Vec<Option<Option<usize>>> = vec![None; n];
    let members = witness
        .parts
        .iter()
        .enumerate()
        .flat_map(|(i, part)| part.iter().map(move |&v| (v, Some(i))))
        .chain(witness.remainder.iter().map(|&v| (v, None)));
    for (v, c) in members {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if class[v].is_some() {
            return Err(Error::PartsNotDisjoint { vertex: v });
        }
        class[v] = Some(c);
    }
    if let Some(v) = class.iter().position(Option::is_none) {
        return Err(Error::BadParams(format!("vertex {v} is in no class")));
    }
    let class: Vec<Option<usize>> = class.into_iter().map(Option::unwrap).collect();

    let mut orders: Vec<Option<Vec<usize>>> = vec![None; h.edge_count()];
    let edge_index = |e: &[usize]| -> usize {
        h.edges()
            .position(|x| x == e)
            .expect("induced edge belongs to the hypergraph")
    };
    for (i, part) in witness.parts.iter().enumerate() {
        let (sub, labels) = h.induced(part);
        let BudgetOutcome::Oriented(inner) = orient_max_outdeg(&sub, k - 1) else {
            return Err(Error::PartNotSparse { part: i });
        };
        for (j, order) in inner.orders().enumerate() {
            let global: Vec<usize> = sub.edge(j).iter().map(|&v| labels[v]).collect();
            let mut rotated = vec![0; r];
            for (slot, &v) in order.iter().enumerate() {
                rotated[(slot + i) % r] = labels[v];
            }
            orders[edge_index(&global)] = Some(rotated);
        }
    }
    for (idx, e) in h.edges().enumerate() {
        if orders[idx].is_some() {
            continue;
        }
        if e.iter().all(|&v| class[v].is_none()) {
            orders[idx] = Some(e.to_vec());
            continue;
        }
        let adj = e
            .iter()
            .map(|&v| (0..r).filter(|&pos| class[v] != Some(pos)).collect())
            .collect();
        let bg = BipartiteGraph::new(r, adj)?;
        match perfect_matching(&bg)? {
            Matching::Perfect(mate) => {
                let mut order = vec![0; r];
                for (slot, &v) in e.iter().enumerate() {
                    order[mate[slot]] = v;
                }
                orders[idx] = Some(order);
            }
            Matching::NoMatching { .. } => {
                return Err(Error::MatchingImpossible { edge: e.to_vec() });
            }
        }
    }
    let flat = orders.into_iter().flat_map(Option::unwrap).collect();
    Ok(Orientation::from_flat_unchecked(h.clone(), flat))
}

/// Orders every edge so that no colored p-set sits on the position set of
/// its color. Supported for `p = 1` and `p = r - 1`.
///
/// Each edge takes the first of its `r!` orders (lexicographic in vertex
/// sequence) with no forbidden placement.
pub fn orient_forbidden(h: &Hypergraph, coloring: &PSetColoring) -> Result<Orientation> {
    let p = coloring.p();
    let r = h.r();
    if p != 1 && p + 1 != r {
        return Err(Error::UnsupportedP {
            p,
            requirement: format!("p = 1 or p = r - 1 = {}", r - 1),
        });
    }
    if coloring.n() != h.n() {
        return Err(Error::BadParams("coloring and hypergraph differ in n".into()));
    }
    let index = PositionIndex::new(r, p)?;
    if coloring.num_colors() as usize > index.len() {
        return Err(Error::BadParams(format!(
            "{} colors exceed the {} position sets",
            coloring.num_colors(),
            index.len()
        )));
    }
    let perms = permutations(r);
    let mut flat = Vec::with_capacity(h.edge_count() * r);
    let mut order = vec![0; r];
    let mut buf = Vec::with_capacity(p);
    for e in h.edges() {
        let mut found = false;
        for perm in &perms {
            for (slot, &j) in perm.iter().enumerate() {
                order[slot] = e[j];
            }
            let clean = index.iter().enumerate().all(|(coord, pos)| {
                buf.clear();
                buf.extend(pos.iter().map(|&q| order[q]));
                buf.sort_unstable();
                coloring.get_by_rank(subset_rank(h.n(), &buf) as usize) != Some(coord as u32 + 1)
            });
            if clean {
                found = true;
                break;
            }
        }
        if !found {
            return Err(Error::Stuck { edge: e.to_vec() });
        }
        flat.extend_from_slice(&order);
    }
    Ok(Orientation::from_flat_unchecked(h.clone(), flat))
}

/// Colors every p-set by the 1-based index of its first coordinate below
/// `k`, or `C(r,p) + 1` when all coordinates reach `k`.
pub fn deficiency_coloring(d: &Orientation, p: usize, k: u32) -> Result<PSetColoring> {
    let h = d.base();
    let table = DegreeTable::build(d, p)?;
    let top = binomial(h.r() as u64, p as u64) as u32 + 1;
    let mut coloring = PSetColoring::new(h.n(), p, top)?;
    for (rank, pset) in Combinations::new(h.n(), p).enumerate() {
        let color = match table.coords_by_rank(rank as u64) {
            _ if k == 0 => top,
            None => 1,
            Some(c) => c.iter().position(|&x| x < k).map_or(top, |j| j as u32 + 1),
        };
        debug_assert_eq!(subset_rank(h.n(), &pset), rank as u64);
        coloring.set_by_rank(rank, color);
    }
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::mad_bruteforce;
    use crate::hypercore::{degree_vector, generate, max_coordinate};
    use crate::Rational;

    fn path3() -> Hypergraph {
        Hypergraph::canonicalize(&[[0, 1], [1, 2]], 3, 2).unwrap()
    }

    fn first_degree(d: &Orientation, v: usize) -> u32 {
        degree_vector(d, &[v]).unwrap().coords[0]
    }

    #[test]
    fn triangle_budget_one() {
        let k3 = generate::complete(3, 2).unwrap();
        let BudgetOutcome::Oriented(d) = orient_max_outdeg(&k3, 1) else {
            panic!("K3 has outdegree-1 orientation")
        };
        assert_eq!(max_coordinate(&d, 0), 1);
    }

    #[test]
    fn k4_budget_one_infeasible() {
        let k4 = generate::complete(4, 2).unwrap();
        assert_eq!(
            orient_max_outdeg(&k4, 1),
            BudgetOutcome::Infeasible { witness: vec![0, 1, 2, 3] }
        );
    }

    #[test]
    fn complete_triples_on_four() {
        let h = generate::complete(4, 3).unwrap();
        let BudgetOutcome::Oriented(d) = orient_max_outdeg(&h, 1) else {
            panic!("H(4,3) is feasible at k = 1")
        };
        for v in 0..4 {
            assert_eq!(first_degree(&d, v), 1);
        }
    }

    #[test]
    fn path_and_complete_triples_on_five() {
        assert!(orient_max_outdeg(&path3(), 1).is_feasible());
        let h = generate::complete(5, 3).unwrap();
        match orient_max_outdeg(&h, 1) {
            BudgetOutcome::Infeasible { witness } => assert_eq!(witness, vec![0, 1, 2, 3, 4]),
            other => panic!("unexpected {other:?}"),
        }
        assert!(orient_max_outdeg(&h, 2).is_feasible());
    }

    #[test]
    fn budget_domain_checked() {
        assert!(matches!(
            orient_budget(&path3(), &DegreeBudget(vec![1, 1])),
            Err(Error::BudgetDomainMismatch { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn partition_k4_singletons() {
        let k4 = generate::complete(4, 2).unwrap();
        let w = PartitionWitness {
            parts: vec![vec![0], vec![1]],
            remainder: vec![2, 3],
        };
        let d = orient_from_partition(&k4, 1, &w).unwrap();
        assert_eq!(degree_vector(&d, &[0]).unwrap().coords[0], 0);
        assert_eq!(degree_vector(&d, &[1]).unwrap().coords[1], 0);
    }

    #[test]
    fn partition_complete_triples_on_six() {
        let h = generate::complete(6, 3).unwrap();
        let w = PartitionWitness {
            parts: vec![vec![0, 1], vec![2, 3], vec![4, 5]],
            remainder: vec![],
        };
        let d = orient_from_partition(&h, 1, &w).unwrap();
        for (i, part) in w.parts.iter().enumerate() {
            for &v in part {
                assert_eq!(degree_vector(&d, &[v]).unwrap().coords[i], 0);
            }
        }
    }

    #[test]
    fn partition_everything_remainder() {
        let h = generate::complete(5, 3).unwrap();
        let w = PartitionWitness {
            parts: vec![],
            remainder: (0..5).collect(),
        };
        assert_eq!(orient_from_partition(&h, 1, &w).unwrap(), Orientation::ascending(h));
    }

    #[test]
    fn partition_errors() {
        let k4 = generate::complete(4, 2).unwrap();
        let overlap = PartitionWitness {
            parts: vec![vec![0], vec![0]],
            remainder: vec![1, 2, 3],
        };
        assert!(matches!(
            orient_from_partition(&k4, 1, &overlap),
            Err(Error::PartsNotDisjoint { vertex: 0 })
        ));
        let dense = PartitionWitness {
            parts: vec![vec![0, 1]],
            remainder: vec![2, 3],
        };
        assert!(matches!(
            orient_from_partition(&k4, 1, &dense),
            Err(Error::PartNotSparse { part: 0 })
        ));
    }

    #[test]
    fn forbidden_on_triangle() {
        let k3 = generate::complete(3, 2).unwrap();
        let mut c = PSetColoring::new(3, 1, 2).unwrap();
        c.set(&[0], 1).unwrap();
        c.set(&[1], 2).unwrap();
        let d = orient_forbidden(&k3, &c).unwrap();
        assert_eq!(degree_vector(&d, &[0]).unwrap().coords[0], 0);
        assert_eq!(degree_vector(&d, &[1]).unwrap().coords[1], 0);
    }

    #[test]
    fn forbidden_single_triple_pairs() {
        let h = generate::complete(3, 3).unwrap();
        let mut c = PSetColoring::new(3, 2, 3).unwrap();
        c.set(&[0, 1], 1).unwrap();
        c.set(&[0, 2], 2).unwrap();
        c.set(&[1, 2], 3).unwrap();
        let d = orient_forbidden(&h, &c).unwrap();
        for (pair, color) in c.iter_colored() {
            assert_eq!(degree_vector(&d, &pair).unwrap().coords[color as usize - 1], 0);
        }
    }

    #[test]
    fn forbidden_empty_and_stuck() {
        let h = generate::complete(4, 3).unwrap();
        let empty = PSetColoring::new(4, 1, 3).unwrap();
        assert_eq!(orient_forbidden(&h, &empty).unwrap(), Orientation::ascending(h.clone()));
        let mut mono = PSetColoring::new(3, 1, 2).unwrap();
        for v in 0..3 {
            mono.set(&[v], 1).unwrap();
        }
        let k3 = generate::complete(3, 2).unwrap();
        assert!(matches!(orient_forbidden(&k3, &mono), Err(Error::Stuck { .. })));
        let pairs = PSetColoring::new(5, 2, 3).unwrap();
        let h5 = generate::complete(5, 4).unwrap();
        assert!(matches!(orient_forbidden(&h5, &pairs), Err(Error::UnsupportedP { p: 2, .. })));
    }

    #[test]
    fn deficiency_colors() {
        let cyclic = Orientation::from_ordered_edges(&[[0, 1], [1, 2], [2, 0]], 3, 2).unwrap();
        let c = deficiency_coloring(&cyclic, 1, 1).unwrap();
        assert!((0..3).all(|v| c.get(&[v]) == Some(3)));
        let transitive = Orientation::from_ordered_edges(&[[0, 1], [0, 2], [1, 2]], 3, 2).unwrap();
        let c = deficiency_coloring(&transitive, 1, 1).unwrap();
        assert_eq!(c.get(&[0]), Some(2));
        assert_eq!(c.get(&[1]), Some(3));
        assert_eq!(c.get(&[2]), Some(1));
        let c = deficiency_coloring(&transitive, 1, 0).unwrap();
        assert!((0..3).all(|v| c.get(&[v]) == Some(3)));
    }

    #[test]
    fn hakimi_small_exhaustive() {
        // Every graph on 5 vertices: feasibility at k iff Mad <= 2k.
        let pairs: Vec<[usize; 2]> = Combinations::new(5, 2).map(|c| [c[0], c[1]]).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<[usize; 2]> = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = Hypergraph::canonicalize(&edges, 5, 2).unwrap();
            let mad = mad_bruteforce(&g).unwrap();
            for k in 0..3 {
                let feasible = orient_max_outdeg(&g, k).is_feasible();
                assert_eq!(feasible, mad <= Rational::from_int(2 * k as i64));
            }
        }
    }
}
