use crate::error::{Error, Result};
use crate::extremal::m_value;
use crate::hypercore::combin::{binomial, factorial, permutations, subset_rank};
use crate::hypercore::{DegreeTable, Hypergraph, Orientation, PositionIndex};
use crate::orient::orient_from_partition;

use super::{FMethod, FReport, FValue};

/// Number of p-sets whose degree vector is at least `k` in every
/// coordinate.
pub fn f_count(d: &Orientation, p: usize, k: u32) -> Result<u64> {
    Ok(DegreeTable::build(d, p)?.count_at_least(k))
}

/// `(r!)^e`, saturating.
pub fn orientation_count(h: &Hypergraph) -> u64 {
    let per = factorial(h.r()) as u128;
    let mut total: u128 = 1;
    for _ in 0..h.edge_count() {
        total = total.saturating_mul(per);
        if total > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    total as u64
}

/// Exact `f(H,p,k)` by depth-first enumeration of all orientations, edges
/// in order and each edge's orders lexicographically.
///
/// The number of satisfied p-sets never drops as more edges are oriented,
/// so a partial orientation already at the incumbent is abandoned; the
/// returned orientation is the lexicographically first minimizer.
pub fn f_bruteforce(h: &Hypergraph, p: usize, k: u32, budget: u64) -> Result<FReport> {
    let index = PositionIndex::new(h.r(), p)?;
    let total = orientation_count(h);
    if total > budget {
        return Err(Error::BudgetExceeded { limit: budget });
    }
    let n = h.n();
    if k == 0 {
        return Ok(report(binomial(n as u64, p as u64), p, k, Orientation::ascending(h.clone()), 1));
    }
    let r = h.r();
    let coords = index.len();
    let perms = permutations(r);

    // Dense slots for the p-sets that lie in some edge.
    let mut slot_of = std::collections::HashMap::new();
    let mut moves: Vec<Vec<Vec<(u32, u32)>>> = Vec::with_capacity(h.edge_count());
    let mut order = vec![0; r];
    let mut buf = Vec::with_capacity(p);
    for e in h.edges() {
        let per_edge = perms
            .iter()
            .map(|perm| {
                for (s, &j) in perm.iter().enumerate() {
                    order[s] = e[j];
                }
                index
                    .iter()
                    .enumerate()
                    .map(|(c, pos)| {
                        buf.clear();
                        buf.extend(pos.iter().map(|&q| order[q]));
                        buf.sort_unstable();
                        let next = slot_of.len() as u32;
                        let slot = *slot_of.entry(subset_rank(n, &buf)).or_insert(next);
                        (slot, c as u32)
                    })
                    .collect()
            })
            .collect();
        moves.push(per_edge);
    }
    let mut st = Brute {
        moves: &moves,
        k,
        coords,
        counts: vec![0; slot_of.len() * coords],
        good: vec![0; slot_of.len()],
        satisfied: 0,
        choice: vec![0; h.edge_count()],
        best: u64::MAX,
        best_choice: Vec::new(),
        visited: 0,
    };
    st.run(0);
    let flat = st
        .best_choice
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| perms[c].iter().map(move |&j| h.edge(i)[j]))
        .collect();
    let d = Orientation::from_flat_unchecked(h.clone(), flat);
    Ok(report(st.best, p, k, d, st.visited))
}

fn report(value: u64, p: usize, k: u32, d: Orientation, nodes: u64) -> FReport {
    FReport {
        value: FValue::Exact(value),
        method: FMethod::Brute,
        p,
        k,
        orientation: Some(d),
        witness: None,
        coloring: None,
        nodes,
    }
}

struct Brute<'a> {
    moves: &'a [Vec<Vec<(u32, u32)>>],
    k: u32,
    coords: usize,
    counts: Vec<u32>,
    /// Coordinates of each slot that have reached `k`.
    good: Vec<u32>,
    satisfied: u64,
    choice: Vec<usize>,
    best: u64,
    best_choice: Vec<usize>,
    visited: u64,
}

impl Brute<'_> {
    fn run(&mut self, edge: usize) {
        self.visited += 1;
        if self.satisfied >= self.best {
            return;
        }
        if edge == self.moves.len() {
            self.best = self.satisfied;
            self.best_choice.clone_from(&self.choice);
            return;
        }
        for (c, mv) in self.moves[edge].iter().enumerate() {
            self.apply(mv);
            self.choice[edge] = c;
            self.run(edge + 1);
            self.undo(mv);
            if self.best == 0 {
                return;
            }
        }
    }

    fn apply(&mut self, mv: &[(u32, u32)]) {
        for &(slot, c) in mv {
            let cell = &mut self.counts[slot as usize * self.coords + c as usize];
            *cell += 1;
            if *cell == self.k {
                let g = &mut self.good[slot as usize];
                *g += 1;
                if *g as usize == self.coords {
                    self.satisfied += 1;
                }
            }
        }
    }

    fn undo(&mut self, mv: &[(u32, u32)]) {
        for &(slot, c) in mv {
            let cell = &mut self.counts[slot as usize * self.coords + c as usize];
            if *cell == self.k {
                let g = &mut self.good[slot as usize];
                if *g as usize == self.coords {
                    self.satisfied -= 1;
                }
                *g -= 1;
            }
            *cell -= 1;
        }
    }
}

/// `f(H,1,k) = n - M(H,k-1)`, certified by the orientation built from the
/// optimal partition.
pub fn f_via_m(h: &Hypergraph, k: u32, budget: u64) -> Result<FReport> {
    if k == 0 {
        return Err(Error::BadParams("k must be at least 1".into()));
    }
    let m = m_value(h, k as usize - 1, budget)?;
    let d = orient_from_partition(h, k as u64, &m.witness)?;
    let value = (h.n() - m.value) as u64;
    let achieved = f_count(&d, 1, k)?;
    if achieved != value {
        return Err(Error::Internal(format!(
            "partition orientation reaches {achieved}, expected {value}"
        )));
    }
    Ok(FReport {
        value: FValue::Exact(value),
        method: FMethod::ViaM,
        p: 1,
        k,
        orientation: Some(d),
        witness: Some(m.witness),
        coloring: None,
        nodes: m.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::generate;

    const B: u64 = crate::DEFAULT_ORIENTATION_BUDGET;

    fn brute(h: &Hypergraph, p: usize, k: u32) -> u64 {
        let rep = f_bruteforce(h, p, k, B).unwrap();
        let v = rep.value.exact().unwrap();
        assert_eq!(f_count(rep.orientation.as_ref().unwrap(), p, k).unwrap(), v);
        v
    }

    #[test]
    fn counts() {
        let cyclic = Orientation::from_ordered_edges(&[[0, 1], [1, 2], [2, 0]], 3, 2).unwrap();
        let transitive = Orientation::from_ordered_edges(&[[0, 1], [0, 2], [1, 2]], 3, 2).unwrap();
        assert_eq!(f_count(&cyclic, 1, 1).unwrap(), 3);
        assert_eq!(f_count(&transitive, 1, 1).unwrap(), 1);
        assert_eq!(f_count(&transitive, 1, 0).unwrap(), 3);
    }

    #[test]
    fn brute_values() {
        assert_eq!(brute(&generate::complete(3, 2).unwrap(), 1, 1), 1);
        assert_eq!(brute(&generate::complete(4, 2).unwrap(), 1, 1), 2);
        assert_eq!(brute(&generate::complete(4, 3).unwrap(), 1, 1), 0);
        assert_eq!(brute(&generate::complete(4, 3).unwrap(), 2, 1), 0);
        assert_eq!(brute(&generate::complete(4, 2).unwrap(), 1, 0), 6 - 2);
    }

    #[test]
    fn lex_first_minimizer() {
        // The transitive triangle 0 -> 1 -> 2, 0 -> 2 is found first.
        let rep = f_bruteforce(&generate::complete(3, 2).unwrap(), 1, 1, B).unwrap();
        let d = rep.orientation.unwrap();
        assert_eq!(d.orders().collect::<Vec<_>>(), vec![&[0, 1][..], &[0, 2], &[1, 2]]);
    }

    #[test]
    fn budget_checked_first() {
        let h = generate::complete(6, 3).unwrap();
        assert!(matches!(f_bruteforce(&h, 1, 1, 1000), Err(Error::BudgetExceeded { limit: 1000 })));
    }

    #[test]
    fn via_m_values() {
        let v = |h: &Hypergraph, k| f_via_m(h, k, crate::DEFAULT_NODE_BUDGET).unwrap().value;
        assert_eq!(v(&generate::complete(10, 2).unwrap(), 2), FValue::Exact(4));
        assert_eq!(v(&generate::complete(7, 3).unwrap(), 1), FValue::Exact(1));
        assert_eq!(v(&Hypergraph::empty(5, 3).unwrap(), 3), FValue::Exact(0));
        assert!(f_via_m(&Hypergraph::empty(5, 3).unwrap(), 0, 10).is_err());
    }
}
