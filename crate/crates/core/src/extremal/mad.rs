use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercore::Hypergraph;
use crate::orient::head_flow;

use super::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MadReport {
    pub value: Rational,
    /// A vertex set attaining the maximum.
    pub witness: Vec<usize>,
}

/// Whether `r e(F) <= (a/b) |F|` for every vertex set `F`; otherwise a set
/// violating it.
fn density_at_most(h: &Hypergraph, a: i64, b: i64) -> std::result::Result<(), Vec<usize>> {
    let weight = h.r() as i64 * b;
    let (value, _, side) = head_flow(h, weight, &vec![a; h.n()]);
    if value == weight * h.edge_count() as i64 {
        Ok(())
    } else {
        Err(side)
    }
}

/// Maximum average degree `max r e(F)/|F|` as an exact fraction.
///
/// Every value is some `r e'/s` with `s <= n` and `e' <= e(H)`, so a binary
/// search over that sorted candidate list, deciding each candidate by
/// max-flow, lands on it exactly. The witness is the min-cut side at the
/// largest infeasible candidate.
pub fn mad_exact(h: &Hypergraph) -> MadReport {
    let n = h.n();
    let e = h.edge_count();
    if e == 0 {
        return MadReport {
            value: Rational::zero(),
            witness: if n > 0 { vec![0] } else { vec![] },
        };
    }
    let r = h.r() as i64;
    let mut candidates: Vec<Rational> = (1..=n as i64)
        .flat_map(|s| (0..=e as i64).map(move |m| Rational::new(r * m, s)))
        .collect();
    candidates.sort_unstable();
    candidates.dedup();
    // candidates[lo] infeasible, candidates[hi] feasible.
    let (mut lo, mut hi) = (0, candidates.len() - 1);
    let mut witness = density_at_most(h, 0, 1).expect_err("an edge has positive density");
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        let c = candidates[mid];
        match density_at_most(h, c.num(), c.den()) {
            Ok(()) => hi = mid,
            Err(side) => {
                lo = mid;
                witness = side;
            }
        }
    }
    MadReport {
        value: candidates[hi],
        witness,
    }
}

/// Edges of `h` inside the vertex set `mask`.
pub(crate) fn edges_within(masks: &[u64], mask: u64) -> usize {
    masks.iter().filter(|&&m| m & mask == m).count()
}

/// Maximum average degree by scanning every vertex subset.
pub fn mad_bruteforce(h: &Hypergraph) -> Result<Rational> {
    if h.n() > 20 {
        return Err(Error::TooLarge(format!("subset scan over n = {}", h.n())));
    }
    let masks = h.edge_masks()?;
    let r = h.r() as i64;
    let best = (1u64..1 << h.n())
        .map(|mask| Rational::new(r * edges_within(&masks, mask) as i64, mask.count_ones() as i64))
        .max()
        .unwrap_or_else(Rational::zero);
    Ok(best)
}

/// `r e(F)/|F|` for a given nonempty vertex set.
pub fn density(h: &Hypergraph, vertices: &[usize]) -> Result<Rational> {
    if vertices.is_empty() {
        return Err(Error::BadParams("empty vertex set".into()));
    }
    let (sub, _) = h.induced(vertices);
    Ok(Rational::new(
        (h.r() * sub.edge_count()) as i64,
        vertices.len() as i64,
    ))
}
