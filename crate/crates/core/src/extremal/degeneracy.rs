use crate::error::{Error, NodeBudget, Result};
use crate::hypercore::Hypergraph;

/// Degeneracy and the elimination order: repeatedly remove a vertex of
/// minimum degree in what is left (lowest index on ties).
pub fn degeneracy(h: &Hypergraph) -> (usize, Vec<usize>) {
    let n = h.n();
    let incidence = h.incidence();
    let mut deg = h.degrees();
    let mut removed = vec![false; n];
    let mut alive = vec![true; h.edge_count()];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| deg[v])
            .expect("a vertex remains");
        d = d.max(deg[v]);
        removed[v] = true;
        order.push(v);
        for &e in &incidence[v] {
            if alive[e] {
                alive[e] = false;
                for &u in h.edge(e) {
                    deg[u] -= 1;
                }
            }
        }
    }
    (d, order)
}

/// Degeneracy of the subhypergraph induced by `mask`, edges given as masks.
pub(crate) fn mask_degeneracy(masks: &[u64], mask: u64) -> usize {
    let mut left = mask;
    let mut live: Vec<u64> = masks.iter().copied().filter(|&m| m & mask == m).collect();
    let mut d = 0;
    while left != 0 {
        let (v, dv) = (0..64)
            .filter(|&v| left >> v & 1 == 1)
            .map(|v| (v, live.iter().filter(|&&m| m >> v & 1 == 1).count()))
            .min_by_key(|&(_, dv)| dv)
            .expect("nonempty");
        d = d.max(dv);
        left &= !(1 << v);
        live.retain(|&m| m >> v & 1 == 0);
    }
    d
}

/// Whether no edge has all its vertices in one color class.
pub fn is_proper_coloring(h: &Hypergraph, colors: &[usize]) -> bool {
    h.edges().all(|e| e.iter().any(|&v| colors[v] != colors[e[0]]))
}

/// Greedy coloring along the reversed elimination order, smallest color
/// first. Uses at most `degeneracy + 1` colors (0-based labels).
pub fn szekeres_wilf_coloring(h: &Hypergraph) -> Vec<usize> {
    let (_, order) = degeneracy(h);
    let incidence = h.incidence();
    let mut colors = vec![usize::MAX; h.n()];
    for &v in order.iter().rev() {
        let mut blocked: Vec<usize> = incidence[v]
            .iter()
            .filter_map(|&e| {
                let others: Vec<usize> = h.edge(e).iter().copied().filter(|&u| u != v).collect();
                let c = colors[others[0]];
                (c != usize::MAX && others.iter().all(|&u| colors[u] == c)).then_some(c)
            })
            .collect();
        blocked.sort_unstable();
        blocked.dedup();
        colors[v] = (0..).find(|c| blocked.binary_search(c).is_err()).unwrap();
    }
    colors
}

/// Chromatic number (no monochromatic edge) by backtracking over
/// increasing color counts, bounded by `budget` search nodes.
pub fn chromatic_exact(h: &Hypergraph, budget: u64) -> Result<usize> {
    let n = h.n();
    if h.edge_count() == 0 {
        return Ok(n.min(1));
    }
    let upper = szekeres_wilf_coloring(h).into_iter().max().map_or(1, |c| c + 1);
    let (_, mut order) = degeneracy(h);
    order.reverse();
    let incidence = h.incidence();
    let mut nodes = NodeBudget::new(budget);
    for c in 2..upper {
        let mut colors = vec![usize::MAX; n];
        match color_search(h, &incidence, &order, 0, 0, c, &mut colors, &mut nodes) {
            Some(true) => return Ok(c),
            Some(false) => {}
            None => return Err(Error::BudgetExceeded { limit: budget }),
        }
    }
    Ok(upper)
}

#[allow(clippy::too_many_arguments)]
fn color_search(
    h: &Hypergraph,
    incidence: &[Vec<usize>],
    order: &[usize],
    depth: usize,
    used: usize,
    c: usize,
    colors: &mut [usize],
    nodes: &mut NodeBudget,
) -> Option<bool> {
    if depth == order.len() {
        return Some(true);
    }
    if !nodes.tick() {
        return None;
    }
    let v = order[depth];
    for col in 0..c.min(used + 1) {
        let clash = incidence[v]
            .iter()
            .any(|&e| h.edge(e).iter().all(|&u| u == v || colors[u] == col));
        if clash {
            continue;
        }
        colors[v] = col;
        let res = color_search(h, incidence, order, depth + 1, used.max(col + 1), c, colors, nodes);
        colors[v] = usize::MAX;
        if res != Some(false) {
            return res;
        }
    }
    Some(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::generate;

    fn c5() -> Hypergraph {
        Hypergraph::canonicalize(&[[0, 1], [1, 2], [2, 3], [3, 4], [0, 4]], 5, 2).unwrap()
    }

    #[test]
    fn degeneracy_values() {
        assert_eq!(degeneracy(&generate::complete(4, 2).unwrap()).0, 3);
        let tree = Hypergraph::canonicalize(&[[0, 1], [0, 2], [2, 3], [2, 4]], 5, 2).unwrap();
        assert_eq!(degeneracy(&tree).0, 1);
        let (d, order) = degeneracy(&generate::complete(5, 3).unwrap());
        assert_eq!(d, 6);
        assert_eq!(order, vec![0, 1, 2, 3, 4]);
        assert_eq!(mask_degeneracy(&generate::complete(5, 3).unwrap().edge_masks().unwrap(), 0b11111), 6);
    }

    #[test]
    fn greedy_coloring() {
        for h in [
            generate::complete(4, 2).unwrap(),
            generate::complete(4, 3).unwrap(),
            Hypergraph::empty(3, 2).unwrap(),
            c5(),
        ] {
            let colors = szekeres_wilf_coloring(&h);
            assert!(is_proper_coloring(&h, &colors));
            let used = colors.iter().max().unwrap() + 1;
            assert!(used <= degeneracy(&h).0 + 1);
        }
        assert_eq!(*szekeres_wilf_coloring(&generate::complete(4, 2).unwrap()).iter().max().unwrap(), 3);
        assert_eq!(*szekeres_wilf_coloring(&Hypergraph::empty(3, 2).unwrap()).iter().max().unwrap(), 0);
    }

    #[test]
    fn chromatic_values() {
        assert_eq!(chromatic_exact(&generate::complete(5, 2).unwrap(), 1000).unwrap(), 5);
        assert_eq!(chromatic_exact(&generate::complete(7, 3).unwrap(), 100_000).unwrap(), 4);
        assert_eq!(chromatic_exact(&generate::complete(4, 3).unwrap(), 1000).unwrap(), 2);
        assert_eq!(chromatic_exact(&c5(), 1000).unwrap(), 3);
        assert_eq!(chromatic_exact(&Hypergraph::empty(3, 2).unwrap(), 1).unwrap(), 1);
    }
}
