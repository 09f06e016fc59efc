use crate::error::{Error, Result};
use crate::hypercore::combin::binomial;
use crate::hypercore::Hypergraph;
use crate::ramsey::f_p1_exact;
use crate::{DEFAULT_NODE_BUDGET, DEFAULT_ORIENTATION_BUDGET};

use super::closed::{closed_form_complete, closed_form_multipartite, MultipartiteOutcome};
use super::exact::{f_bruteforce, f_via_m};
use super::report::{FMethod, FReport, FValue};

/// Class sizes of a graph recognized as complete multipartite, largest
/// first. Classes are the components of the non-adjacency relation.
pub fn multipartite_classes(g: &Hypergraph) -> Option<Vec<usize>> {
    if g.r() != 2 || g.n() == 0 {
        return None;
    }
    let n = g.n();
    let adj = g.adjacency().ok()?;
    let mut class = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    for v in 0..n {
        if class[v] != usize::MAX {
            continue;
        }
        let c = sizes.len();
        let members: Vec<usize> = (0..n).filter(|&u| u == v || !adj[v][u]).collect();
        for &u in &members {
            if class[u] != usize::MAX {
                return None;
            }
            class[u] = c;
        }
        sizes.push(members.len());
    }
    if g.edges().any(|e| class[e[0]] == class[e[1]]) {
        return None;
    }
    let squares: usize = sizes.iter().map(|s| s * s).sum();
    if g.edge_count() != (n * n - squares) / 2 {
        return None;
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Some(sizes)
}

fn closed(h: &Hypergraph, p: usize, k: u32) -> Result<Option<FReport>> {
    let report = |v| FReport {
        value: FValue::Exact(v),
        method: FMethod::ClosedForm,
        p,
        k,
        orientation: None,
        witness: None,
        coloring: None,
        nodes: 0,
    };
    if k == 0 {
        return Ok(Some(report(binomial(h.n() as u64, p as u64))));
    }
    if p != 1 {
        return Ok(None);
    }
    if h.is_complete() {
        return Ok(Some(report(closed_form_complete(h.n() as u64, h.r(), k as u64)?)));
    }
    if let Some(parts) = multipartite_classes(h) {
        if let MultipartiteOutcome::Value(v) = closed_form_multipartite(&parts, k as u64)? {
            return Ok(Some(report(v)));
        }
    }
    Ok(None)
}

/// `f(H,p,k)` by the requested method, or by the cheapest applicable one
/// when `method` is `None`: a closed form, then `n - M`, then the coloring
/// identity, then enumeration. `budget = None` uses the library defaults.
pub fn f_with(h: &Hypergraph, p: usize, k: u32, method: Option<FMethod>, budget: Option<u64>) -> Result<FReport> {
    let nodes = budget.unwrap_or(DEFAULT_NODE_BUDGET);
    let orientations = budget.unwrap_or(DEFAULT_ORIENTATION_BUDGET);
    match method {
        Some(FMethod::Brute) => f_bruteforce(h, p, k, orientations),
        Some(FMethod::ViaM) => {
            if p != 1 {
                return Err(Error::UnsupportedP { p, requirement: "p = 1".into() });
            }
            f_via_m(h, k, nodes)
        }
        Some(FMethod::Coloring) => {
            if k != 1 {
                return Err(Error::BadParams("the coloring identity needs k = 1".into()));
            }
            f_p1_exact(h, p, nodes)
        }
        Some(FMethod::ClosedForm) => closed(h, p, k)?.ok_or_else(|| {
            Error::BadParams("no closed form applies (needs p = 1 and a complete or complete multipartite input)".into())
        }),
        Some(FMethod::Bound) => Err(Error::BadParams("bounds are not a method for exact values".into())),
        None => {
            if let Some(rep) = closed(h, p, k)? {
                return Ok(rep);
            }
            if p == 1 {
                return f_via_m(h, k, nodes);
            }
            if k == 1 && p + 1 == h.r() {
                return f_p1_exact(h, p, nodes);
            }
            f_bruteforce(h, p, k, orientations)
        }
    }
}
