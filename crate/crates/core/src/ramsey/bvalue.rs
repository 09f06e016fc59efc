use serde::{Deserialize, Serialize};

use crate::error::{Error, NodeBudget, Result};
use crate::fcalc::{f_count, FMethod, FReport, FValue};
use crate::hypercore::combin::binomial;
use crate::hypercore::Hypergraph;
use crate::orient::orient_forbidden;

use super::system::{EdgeCounts, PSetSystem};
use super::PSetColoring;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BReport {
    /// Largest colorable family found.
    pub value: u64,
    pub coloring: PSetColoring,
    /// False when the node budget ran out before optimality was proved.
    pub exact: bool,
    pub nodes: u64,
}

/// Largest family of p-sets colorable with `C(r,p)` colors such that no
/// fully colored edge is monochromatic.
///
/// Each p-set branches over the colors (new colors in increasing order)
/// and then "uncolored"; a branch is cut when even coloring every remaining
/// p-set could not beat the incumbent.
pub fn b_value(h: &Hypergraph, p: usize, budget: u64) -> Result<BReport> {
    let sys = PSetSystem::new(h, p)?;
    let colors = sys.per_edge as u32;
    let mut search = Search {
        sys: &sys,
        colors,
        assign: vec![0; sys.order.len()],
        best: vec![0; sys.order.len()],
        best_count: 0,
        counts: EdgeCounts::new(&sys, colors as usize),
        nodes: NodeBudget::new(budget),
        exhausted: false,
    };
    search.run(0, 0, 0);
    let mut coloring = PSetColoring::new(h.n(), p, colors)?;
    for (&q, &col) in sys.order.iter().zip(&search.best) {
        coloring.set_by_rank(q, col);
    }
    for &q in &sys.free {
        coloring.set_by_rank(q, 1);
    }
    Ok(BReport {
        value: (search.best_count + sys.free.len()) as u64,
        coloring,
        exact: !search.exhausted,
        nodes: search.nodes.used(),
    })
}

struct Search<'a> {
    sys: &'a PSetSystem,
    colors: u32,
    assign: Vec<u32>,
    best: Vec<u32>,
    best_count: usize,
    counts: EdgeCounts,
    nodes: NodeBudget,
    exhausted: bool,
}

impl Search<'_> {
    fn run(&mut self, depth: usize, colored: usize, used: u32) {
        let remaining = self.sys.order.len() - depth;
        if colored + remaining <= self.best_count && depth > 0 {
            return;
        }
        if depth == self.sys.order.len() {
            self.best_count = colored;
            self.best.copy_from_slice(&self.assign);
            return;
        }
        if self.exhausted || !self.nodes.tick() {
            self.exhausted = true;
            return;
        }
        let edges = &self.sys.incident[depth];
        for col in 1..=self.colors.min(used + 1) {
            if !self.counts.try_add(edges, col as usize - 1) {
                continue;
            }
            self.assign[depth] = col;
            self.run(depth + 1, colored + 1, used.max(col));
            self.counts.remove(edges, col as usize - 1);
            if self.exhausted || self.best_count == self.sys.order.len() {
                self.assign[depth] = 0;
                return;
            }
        }
        self.assign[depth] = 0;
        self.run(depth + 1, colored, used);
    }
}

/// `f(H,p,1)` as `C(n,p) - b(H,p)` for `p = 1` or `p = r - 1`, certified by
/// an orientation that keeps every colored p-set off its color's positions.
pub fn f_p1_exact(h: &Hypergraph, p: usize, budget: u64) -> Result<FReport> {
    if p != 1 && p + 1 != h.r() {
        return Err(Error::UnsupportedP {
            p,
            requirement: format!("p = 1 or p = r - 1 = {}", h.r() - 1),
        });
    }
    let b = b_value(h, p, budget)?;
    let total = binomial(h.n() as u64, p as u64);
    if !b.exact {
        return Err(Error::BudgetBracket {
            limit: budget,
            lower: 0,
            upper: total - b.value,
        });
    }
    let d = orient_forbidden(h, &b.coloring)?;
    let value = total - b.value;
    let achieved = f_count(&d, p, 1)?;
    if achieved != value {
        return Err(Error::Internal(format!(
            "forbidden-position orientation reaches {achieved}, expected {value}"
        )));
    }
    Ok(FReport {
        value: FValue::Exact(value),
        method: FMethod::Coloring,
        p,
        k: 1,
        orientation: Some(d),
        witness: None,
        coloring: Some(b.coloring),
        nodes: b.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::generate;
    use crate::ramsey::check_mono;

    fn b(h: &Hypergraph, p: usize) -> u64 {
        let rep = b_value(h, p, 10_000_000).unwrap();
        assert!(rep.exact);
        assert!(check_mono(h, &rep.coloring).unwrap().is_empty());
        assert_eq!(rep.coloring.colored_count() as u64, rep.value);
        rep.value
    }

    #[test]
    fn known_values() {
        assert_eq!(b(&generate::complete(5, 3).unwrap(), 2), 10);
        assert_eq!(b(&generate::complete(3, 2).unwrap(), 1), 2);
        assert_eq!(b(&generate::complete(4, 3).unwrap(), 2), 6);
        assert_eq!(b(&Hypergraph::empty(5, 3).unwrap(), 2), 10);
        // Two disjoint independent sets of K_5 cover two vertices.
        assert_eq!(b(&generate::complete(5, 2).unwrap(), 1), 2);
    }

    #[test]
    fn f_from_b() {
        let k3 = generate::complete(3, 2).unwrap();
        assert_eq!(f_p1_exact(&k3, 1, 1000).unwrap().value, FValue::Exact(1));
        let h5 = generate::complete(5, 3).unwrap();
        assert_eq!(f_p1_exact(&h5, 2, 1_000_000).unwrap().value, FValue::Exact(0));
        let h4 = generate::complete(4, 3).unwrap();
        assert_eq!(f_p1_exact(&h4, 2, 1_000_000).unwrap().value, FValue::Exact(0));
        let h44 = generate::complete(5, 4).unwrap();
        assert!(matches!(f_p1_exact(&h44, 2, 10), Err(Error::UnsupportedP { .. })));
    }

    #[test]
    fn small_budget_is_flagged() {
        let h = generate::complete(7, 2).unwrap();
        let rep = b_value(&h, 1, 3).unwrap();
        assert!(!rep.exact);
        assert!(check_mono(&h, &rep.coloring).unwrap().is_empty());
    }
}
