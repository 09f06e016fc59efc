use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercore::combin::binomial;

/// Largest `t` with `C(t-1, r-1) <= (k-1) r`: the biggest class of the
/// complete r-uniform hypergraph with maximum average degree `r(k-1)`.
pub fn complete_class_size(r: usize, k: u64) -> u64 {
    let limit = (k.saturating_sub(1)) as u128 * r as u128;
    let mut t = 1u64;
    while (binomial(t, r as u64 - 1) as u128) <= limit {
        t += 1;
    }
    t
}

/// `f` of the complete r-uniform hypergraph on `n` vertices for `p = 1`:
/// `max(n - r t, 0)`.
pub fn closed_form_complete(n: u64, r: usize, k: u64) -> Result<u64> {
    if r < 2 || k == 0 {
        return Err(Error::BadParams("need r >= 2 and k >= 1".into()));
    }
    Ok(n.saturating_sub(r as u64 * complete_class_size(r, k)))
}

/// The `r = 3` case written with a square root:
/// `n - 3 floor((sqrt(24k - 23) + 3) / 2)`, clamped at zero.
pub fn closed_form_triples(n: u64, k: u64) -> u64 {
    let s = (24 * k - 23).isqrt();
    n.saturating_sub(3 * ((s + 3) / 2))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MultipartiteOutcome {
    Value(u64),
    ConditionsNotMet(String),
}

/// `f(K_{n_1..n_t}, k) = n_3 + ... + n_t - 2k + 2` under the size
/// conditions (classes sorted decreasingly): `n_1, n_2 >= k^2 - k + 1` and
/// either `n_3 >= 2k - 2` or `n_3, n_4 >= k - 1`.
pub fn closed_form_multipartite(parts: &[usize], k: u64) -> Result<MultipartiteOutcome> {
    if k == 0 {
        return Err(Error::BadParams("k must be at least 1".into()));
    }
    let mut n: Vec<u64> = parts.iter().map(|&x| x as u64).collect();
    n.sort_unstable_by(|a, b| b.cmp(a));
    if n.len() < 3 {
        return Ok(MultipartiteOutcome::ConditionsNotMet(format!(
            "needs at least 3 classes, got {}",
            n.len()
        )));
    }
    let big = k * k - k + 1;
    if n[1] < big {
        let which = if n[0] < big { "n_1" } else { "n_2" };
        return Ok(MultipartiteOutcome::ConditionsNotMet(format!(
            "{which} = {} < k^2 - k + 1 = {big}",
            if n[0] < big { n[0] } else { n[1] }
        )));
    }
    let third_ok = n[2] >= 2 * k - 2;
    let pair_ok = n.len() >= 4 && n[2] >= k - 1 && n[3] >= k - 1;
    if !third_ok && !pair_ok {
        return Ok(MultipartiteOutcome::ConditionsNotMet(format!(
            "n_3 = {} < 2k - 2 = {} and n_3, n_4 >= k - 1 fails",
            n[2],
            2 * k - 2
        )));
    }
    let rest: u64 = n[2..].iter().sum();
    Ok(MultipartiteOutcome::Value(rest + 2 - 2 * k))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeBound {
    /// The bound, capped at `C(n,r)`.
    pub value: u64,
    /// The raw formula value.
    pub formula: i128,
    /// Whether the formula exceeded `C(n,r)`.
    pub capped: bool,
    /// Whether `r` does not divide `n` (floor of `n/r` used).
    pub approximate: bool,
}

/// Most edges an r-uniform hypergraph with `f(H,1,k) = 0` can have:
/// `C(n,r) - r C(n/r, r) + (k-1) n`.
pub fn edge_bound(n: u64, r: usize, k: u64) -> Result<EdgeBound> {
    if r < 2 || k == 0 {
        return Err(Error::BadParams("need r >= 2 and k >= 1".into()));
    }
    let r64 = r as u64;
    let all = binomial(n, r64) as i128;
    let formula = all - r as i128 * binomial(n / r64, r64) as i128 + (k as i128 - 1) * n as i128;
    Ok(EdgeBound {
        value: formula.clamp(0, all) as u64,
        formula,
        capped: formula > all,
        approximate: !n.is_multiple_of(r64),
    })
}

/// Smallest `q >= r` with `(k-1) C(q,p) < C(q,r)`.
pub fn tset_threshold_q(r: usize, p: usize, k: u64) -> Result<u64> {
    if p == 0 || p >= r || k == 0 {
        return Err(Error::BadParams("need r > p >= 1 and k >= 1".into()));
    }
    let mut q = r as u64;
    loop {
        let lhs = (k - 1) as u128 * binomial(q, p as u64) as u128;
        if lhs < binomial(q, r as u64) as u128 {
            return Ok(q);
        }
        q += 1;
    }
}
