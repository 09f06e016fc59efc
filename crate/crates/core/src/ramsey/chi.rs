use serde::{Deserialize, Serialize};

use crate::error::{Error, NodeBudget, Result};
use crate::hypercore::Hypergraph;

use super::system::{EdgeCounts, PSetSystem};
use super::PSetColoring;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiReport {
    pub value: u32,
    pub coloring: PSetColoring,
    pub nodes: u64,
}

/// Fewest colors on the p-sets such that no edge has all its p-subsets in
/// one color.
///
/// Iterative deepening on the number of colors; p-sets are assigned
/// fail-first and a new color is only opened after all smaller ones. When
/// `budget` search nodes run out the error brackets the value.
pub fn chi_r(h: &Hypergraph, p: usize, budget: u64) -> Result<ChiReport> {
    let sys = PSetSystem::new(h, p)?;
    let mut nodes = NodeBudget::new(budget);
    let upper = sys.order.len().max(1) as u32;
    for c in 1..=upper {
        let mut assign = vec![0u32; sys.order.len()];
        let mut counts = EdgeCounts::new(&sys, c as usize);
        match extend(&sys, c, 0, 0, &mut assign, &mut counts, &mut nodes) {
            None => {
                return Err(Error::BudgetBracket {
                    limit: budget,
                    lower: c as u64,
                    upper: upper as u64,
                })
            }
            Some(false) => continue,
            Some(true) => {
                let mut coloring = PSetColoring::new(h.n(), p, c)?;
                for (&q, &col) in sys.order.iter().zip(&assign) {
                    coloring.set_by_rank(q, col);
                }
                for &q in &sys.free {
                    coloring.set_by_rank(q, 1);
                }
                return Ok(ChiReport {
                    value: c,
                    coloring,
                    nodes: nodes.used(),
                });
            }
        }
    }
    Err(Error::Internal("distinct colors always succeed".into()))
}

fn extend(
    sys: &PSetSystem,
    c: u32,
    depth: usize,
    used: u32,
    assign: &mut [u32],
    counts: &mut EdgeCounts,
    nodes: &mut NodeBudget,
) -> Option<bool> {
    if depth == sys.order.len() {
        return Some(true);
    }
    if !nodes.tick() {
        return None;
    }
    let edges = &sys.incident[depth];
    for col in 1..=c.min(used + 1) {
        if !counts.try_add(edges, col as usize - 1) {
            continue;
        }
        assign[depth] = col;
        let found = extend(sys, c, depth + 1, used.max(col), assign, counts, nodes);
        counts.remove(edges, col as usize - 1);
        if found != Some(false) {
            return found;
        }
    }
    Some(false)
}
