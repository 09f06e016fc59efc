use serde::{Deserialize, Serialize};

use crate::error::{Error, NodeBudget, Result};
use crate::hypercore::combin::{binomial, subset_rank, Combinations};
use crate::hypercore::{generate, DegreeTable, Orientation, PositionIndex};
use crate::ramsey::b_value;

use super::closed::complete_class_size;
use super::exact::f_bruteforce;

/// A known value of the threshold `f(r,p,k)` that is out of reach for
/// exhaustive search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownThreshold {
    pub r: usize,
    pub p: usize,
    pub k: u64,
    pub value: u64,
    /// False when `value` is only an upper bound.
    pub exact: bool,
}

pub const KNOWN_THRESHOLDS: &[KnownThreshold] = &[
    KnownThreshold { r: 3, p: 2, k: 1, value: 17, exact: true },
    KnownThreshold { r: 4, p: 3, k: 1, value: 15202, exact: false },
];

pub fn known_threshold(r: usize, p: usize, k: u64) -> Option<KnownThreshold> {
    KNOWN_THRESHOLDS.iter().copied().find(|t| t.r == r && t.p == p && t.k == k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanEntry {
    pub n: u64,
    /// `f(n,r,p,k)`, or `None` when the budget ran out.
    pub value: Option<u64>,
    pub method: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdReport {
    pub r: usize,
    pub p: usize,
    pub k: u64,
    /// Least `n` with `f(n,r,p,k) > 0`, when the scan reached it.
    pub threshold: Option<u64>,
    /// The threshold is at least this.
    pub lower_bound: u64,
    pub scanned: Vec<ScanEntry>,
    pub known: Option<KnownThreshold>,
}

/// `f(r,p,k)`, the least `n` with `f(H(n,r),p,k) > 0`, scanning
/// `n = p+1..=n_max` with the cheapest exact method available: the closed
/// form for `p = 1`, `C(n,p) - b` for `p = r-1` and `k = 1`, enumeration
/// otherwise. Values beyond the budget are skipped.
pub fn f_threshold(r: usize, p: usize, k: u64, n_max: u64, budget: u64) -> Result<ThresholdReport> {
    PositionIndex::new(r, p)?;
    let mut scanned = Vec::new();
    let mut threshold = None;
    let mut last_zero = p as u64;
    for n in p as u64 + 1..=n_max {
        let (value, method) = f_complete(n, r, p, k, budget);
        scanned.push(ScanEntry { n, value, method: method.into() });
        match value {
            Some(0) => last_zero = n,
            Some(_) => {
                threshold = Some(n);
                break;
            }
            None => {}
        }
    }
    Ok(ThresholdReport {
        r,
        p,
        k,
        threshold,
        lower_bound: threshold.unwrap_or(last_zero + 1),
        scanned,
        known: known_threshold(r, p, k),
    })
}

fn f_complete(n: u64, r: usize, p: usize, k: u64, budget: u64) -> (Option<u64>, &'static str) {
    if k == 0 {
        return (Some(binomial(n, p as u64)), "count");
    }
    if p == 1 {
        return (Some(n.saturating_sub(r as u64 * complete_class_size(r, k))), "closed-form");
    }
    if n < r as u64 {
        return (Some(0), "no edges");
    }
    let Ok(h) = generate::complete(n as usize, r) else {
        return (None, "too large");
    };
    if p + 1 == r && k == 1 {
        return match b_value(&h, p, budget) {
            Ok(b) if b.exact => (Some(binomial(n, p as u64) - b.value), "coloring"),
            _ => (None, "coloring"),
        };
    }
    match f_bruteforce(&h, p, k as u32, budget) {
        Ok(rep) => (rep.value.exact(), "brute"),
        Err(_) => (None, "brute"),
    }
}

/// A `t`-set all of whose p-subsets have every coordinate at least `k`.
///
/// Vertices are added in increasing order; a vertex is admissible when all
/// new p-subsets it forms qualify.
pub fn find_tset(d: &Orientation, p: usize, k: u32, t: usize, budget: u64) -> Result<Option<Vec<usize>>> {
    if t < p || t == 0 {
        return Err(Error::BadParams(format!("t = {t} must be at least p = {p}")));
    }
    let table = DegreeTable::build(d, p)?;
    let n = d.base().n();
    let good = |set: &[usize]| table.all_at_least_by_rank(subset_rank(n, set), k);
    // A usable vertex lies in some qualifying p-set.
    let usable: Vec<usize> = (0..n)
        .filter(|&v| {
            Combinations::new(n, p).any(|s| s.contains(&v) && good(&s))
        })
        .collect();
    let mut nodes = NodeBudget::new(budget);
    let mut chosen = Vec::with_capacity(t);
    match grow(&usable, 0, t, p, &good, &mut chosen, &mut nodes) {
        Some(true) => Ok(Some(chosen)),
        Some(false) => Ok(None),
        None => Err(Error::BudgetExceeded { limit: budget }),
    }
}

fn grow(
    usable: &[usize],
    from: usize,
    t: usize,
    p: usize,
    good: &dyn Fn(&[usize]) -> bool,
    chosen: &mut Vec<usize>,
    nodes: &mut NodeBudget,
) -> Option<bool> {
    if chosen.len() == t {
        return Some(true);
    }
    if !nodes.tick() {
        return None;
    }
    for i in from..usable.len() {
        if usable.len() - i < t - chosen.len() {
            break;
        }
        let v = usable[i];
        let ok = chosen.len() + 1 < p
            || Combinations::new(chosen.len(), p - 1).all(|idx| {
                let mut s: Vec<usize> = idx.iter().map(|&j| chosen[j]).collect();
                s.push(v);
                good(&s)
            });
        if !ok {
            continue;
        }
        chosen.push(v);
        let res = grow(usable, i + 1, t, p, good, chosen, nodes);
        if res != Some(false) {
            return res;
        }
        chosen.pop();
    }
    Some(false)
}

/// Greedy `(n,m,p)`-packing: m-sets in lexicographic order, each kept when
/// none of its p-subsets is already covered.
pub fn greedy_packing(n: usize, m: usize, p: usize) -> Result<Vec<Vec<usize>>> {
    if p == 0 || p > m || m > n {
        return Err(Error::BadParams("need 1 <= p <= m <= n".into()));
    }
    let total = binomial(n as u64, p as u64);
    let candidates = binomial(n as u64, m as u64);
    if total > 1 << 26 || candidates > 1 << 30 {
        return Err(Error::TooLarge(format!("{candidates} candidate blocks over {total} p-sets")));
    }
    let mut used = vec![false; total as usize];
    let mut blocks = Vec::new();
    let mut sub = Vec::with_capacity(p);
    for block in Combinations::new(n, m) {
        let ranks: Vec<usize> = Combinations::new(m, p)
            .map(|idx| {
                sub.clear();
                sub.extend(idx.iter().map(|&j| block[j]));
                subset_rank(n, &sub) as usize
            })
            .collect();
        if ranks.iter().all(|&q| !used[q]) {
            for q in ranks {
                used[q] = true;
            }
            blocks.push(block);
        }
    }
    Ok(blocks)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingReport {
    /// Block size: the threshold `f(r,p,k)`.
    pub m: u64,
    pub blocks: Vec<Vec<usize>>,
    /// Lower bound on `f(n,r,p,k)`: every block holds a qualifying p-set.
    pub bound: u64,
}

/// Lower bound on `f(n,r,p,k)` from a greedy packing with blocks of size
/// `f(r,p,k)`.
pub fn packing_bound(n: usize, r: usize, p: usize, k: u64) -> Result<PackingReport> {
    PositionIndex::new(r, p)?;
    let m = if p == 1 && k >= 1 {
        r as u64 * complete_class_size(r, k) + 1
    } else {
        match known_threshold(r, p, k) {
            Some(t) if t.exact => t.value,
            _ => return Err(Error::ThresholdUnknown { r, p, k: k as usize }),
        }
    };
    if m > n as u64 {
        return Ok(PackingReport { m, blocks: Vec::new(), bound: 0 });
    }
    let blocks = greedy_packing(n, m as usize, p)?;
    Ok(PackingReport {
        m,
        bound: blocks.len() as u64,
        blocks,
    })
}
