use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::{alpha, beta, chromatic_exact, hit_triangles, m_value, Rational};
use crate::hypercore::Hypergraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Lower,
    Upper,
}

/// One bound on `f(H,1,k)`; `value` is `None` when it does not apply or an
/// input could not be computed, with the reason in `note`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: String,
    pub side: Side,
    pub value: Option<Rational>,
    pub note: String,
}

impl BoundEntry {
    fn new(name: &str, side: Side, value: Result<(i64, String)>) -> Self {
        match value {
            Ok((v, note)) => Self::rational(name, side, Ok((Rational::from_int(v), note))),
            Err(e) => Self::rational(name, side, Err(e)),
        }
    }

    fn rational(name: &str, side: Side, value: Result<(Rational, String)>) -> Self {
        let (value, note) = match value {
            Ok((v, note)) => (Some(v), note),
            Err(e) => (None, e.to_string()),
        };
        BoundEntry {
            name: name.to_string(),
            side,
            value,
            note,
        }
    }

    pub fn applies(&self) -> bool {
        self.value.is_some()
    }

    /// Whether `f` is consistent with this bound.
    pub fn admits(&self, f: u64) -> bool {
        let f = Rational::from_int(f as i64);
        match (self.value, self.side) {
            (None, _) => true,
            (Some(v), Side::Lower) => v <= f,
            (Some(v), Side::Upper) => f <= v,
        }
    }
}

fn skip(reason: &str) -> Error {
    Error::BadParams(format!("not applicable: {reason}"))
}

/// Every bound on `f(H,1,k)` the structure of `H` allows, evaluated with
/// exact searches under `budget` nodes each.
pub fn bounds(h: &Hypergraph, k: u32, budget: u64) -> Result<Vec<BoundEntry>> {
    if k == 0 {
        return Err(Error::BadParams("k must be at least 1".into()));
    }
    let n = h.n() as i64;
    let r = h.r() as i64;
    let k64 = k as i64;
    let ku = k as usize;
    let ru = h.r();
    let graph = h.r() == 2;
    let alpha_v = alpha(h, budget).map(|a| a.0 as i64);
    let chi = chromatic_exact(h, budget).map(|c| c as i64);
    let mut out = Vec::new();

    out.push(BoundEntry::new("trivial-lower", Side::Lower, Ok((0, String::new()))));
    out.push(BoundEntry::new("trivial-upper", Side::Upper, Ok((n, String::new()))));
    out.push(BoundEntry::new(
        "independence-lower",
        Side::Lower,
        alpha_v.clone().map(|a| (n - a * r * (r * k64 - r + 1), format!("alpha = {a}"))),
    ));
    out.push(BoundEntry::new(
        "degenerate-upper",
        Side::Upper,
        beta(h, ru * ku - 1, budget).map(|b| (n - b.0 as i64, format!("beta_{} = {}", ru * ku - 1, b.0))),
    ));
    out.push(BoundEntry::new(
        "degenerate-lower",
        Side::Lower,
        beta(h, ru * (ku - 1), budget)
            .map(|b| (n - r * b.0 as i64, format!("beta_{} = {}", ru * (ku - 1), b.0))),
    ));
    out.push(BoundEntry::new(
        "chromatic-lower",
        Side::Lower,
        chi.clone().map(|c| (c - r * (r * (k64 - 1) + 1), format!("chi = {c}"))),
    ));

    // Graph-only bounds.
    let avg = Rational::new(2 * h.edge_count() as i64, n.max(1));
    out.push(BoundEntry::rational(
        "average-degree-upper",
        Side::Upper,
        if !graph {
            Err(skip("graphs only"))
        } else if avg < Rational::from_int(4 * k64 - 2) {
            Err(skip(&format!("average degree {avg} < 4k - 2")))
        } else {
            let v = Rational::new(
                (avg.num() - (2 * k64 - 1) * avg.den()) * n,
                avg.num() + avg.den(),
            );
            Ok((v, format!("average degree {avg}")))
        },
    ));
    out.push(BoundEntry::new(
        "clique-factor-lower",
        Side::Lower,
        if graph { clique_factor(h, k64) } else { Err(skip("graphs only")) },
    ));
    let k1_graph = graph && k == 1;
    out.push(BoundEntry::new(
        "independence-upper",
        Side::Upper,
        if k1_graph {
            alpha_v.clone().map(|a| (n - a, format!("alpha = {a}")))
        } else {
            Err(skip("graphs with k = 1"))
        },
    ));
    out.push(BoundEntry::new(
        "color-classes-upper",
        Side::Upper,
        match (k1_graph, chi) {
            (false, _) => Err(skip("graphs with k = 1")),
            (true, Ok(t)) if t >= 2 => Ok(((t - 2) * n / t, format!("chi = {t}"))),
            (true, Ok(t)) => Err(skip(&format!("chi = {t} < 2"))),
            (true, Err(e)) => Err(e),
        },
    ));
    out.push(BoundEntry::new(
        "triangle-hitting-lower",
        Side::Lower,
        if k1_graph {
            hit_triangles(h, budget).map(|t| (t.0 as i64, format!("h = {}", t.0)))
        } else {
            Err(skip("graphs with k = 1"))
        },
    ));
    out.push(BoundEntry::new(
        "complement-lower",
        Side::Lower,
        if graph {
            complement_lower(h, k, budget)
        } else {
            Err(skip("graphs only"))
        },
    ));
    Ok(out)
}

/// `(t - 4k + 2) floor(n/t)` maximized over `t` with `delta >= (t-1) n / t`.
fn clique_factor(g: &Hypergraph, k: i64) -> Result<(i64, String)> {
    let n = g.n() as i64;
    let delta = g.min_degree() as i64;
    (1..=n)
        .filter(|&t| delta * t >= (t - 1) * n)
        .map(|t| ((t - 4 * k + 2) * (n / t), format!("t = {t}, min degree {delta}")))
        .max_by_key(|x| x.0)
        .ok_or_else(|| skip("no vertices"))
}

/// From `f(G,k) + f(G',k) >= n - 16k + 12` (and `n - 4` when `k = 1`),
/// with `f(G',k)` of the complement computed exactly.
fn complement_lower(g: &Hypergraph, k: u32, budget: u64) -> Result<(i64, String)> {
    let n = g.n() as i64;
    let co = g.complement()?;
    let m = m_value(&co, k as usize - 1, budget)?;
    let f_co = n - m.value as i64;
    let sum = if k == 1 { n - 4 } else { n - 16 * k as i64 + 12 };
    Ok((sum - f_co, format!("complement f = {f_co}")))
}
