//! Named verification suites: each checks an identity or bound over a
//! seeded corpus and reports every comparison.

use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::{alpha, hit_triangles, m_value, mad_bruteforce, mad_exact, Rational};
use crate::fcalc::{closed_form_complete, closed_form_multipartite, f_bruteforce, f_count, f_via_m, MultipartiteOutcome};
use crate::hypercore::combin::{binomial, Combinations};
use crate::hypercore::{degree_vector, generate, DegreeTable, Hypergraph, Orientation};
use crate::orient::{orient_max_outdeg, BudgetOutcome};
use crate::ramsey::{b_value, chi_r, f_p1_exact};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub instance: String,
    pub relation: String,
    pub values: Vec<(String, String)>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
    pub wall_ms: u64,
}

impl VerifySuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Suite names with a one-line description, in run order.
pub const SUITES: &[(&str, &str)] = &[
    ("hakimi", "bounded first-position degree is feasible iff Mad <= rk"),
    ("partition", "f(H,1,k) = n - M(H,k-1) against full enumeration"),
    ("complete", "closed form for complete hypergraphs"),
    ("ramsey", "Ramsey p-chromatic numbers of complete triple systems"),
    ("coloring", "f(H,p,1) = C(n,p) - b(H,p) for p = 1 and p = r-1"),
    ("multipartite", "closed form for complete multipartite graphs"),
    ("perfect", "f(G,1) equals the triangle hitting number on perfect graphs"),
    ("complement", "f(G,1) + f(complement,1) >= n - 4"),
    ("mop", "1 <= f(G,1) <= n/3 on maximal outerplanar graphs"),
    ("accounting", "degree-vector sums and monotonicity in k"),
    ("np-reduction", "alpha(G) >= t iff M(G + G joined, 0) >= 2t"),
];

const ALIASES: &[(&str, &str)] = &[("thm2", "partition"), ("thm3", "complete"), ("chi-r", "ramsey"), ("thm8", "coloring")];

/// Canonical name of a suite, accepting the short aliases.
pub fn resolve_suite(name: &str) -> Result<&'static str> {
    if let Some(&(canon, _)) = SUITES.iter().find(|(s, _)| *s == name) {
        return Ok(canon);
    }
    ALIASES
        .iter()
        .find(|(a, _)| *a == name)
        .map(|&(_, canon)| canon)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

/// Runs one suite. `budget` limits every individual search (nodes or
/// enumerated orientations).
pub fn verify_suite(name: &str, seed: u64, budget: u64) -> Result<VerifySuiteReport> {
    let canon = resolve_suite(name)?;
    let start = Instant::now();
    let mut log = Log::default();
    let mut rng = generate::rng(seed);
    match canon {
        "hakimi" => hakimi(&mut log, &mut rng)?,
        "partition" => partition(&mut log, &mut rng, budget)?,
        "complete" => complete(&mut log, budget)?,
        "ramsey" => ramsey(&mut log, budget)?,
        "coloring" => coloring(&mut log, &mut rng, budget)?,
        "multipartite" => multipartite(&mut log, budget)?,
        "perfect" => perfect(&mut log, &mut rng, budget)?,
        "complement" => complement(&mut log, budget)?,
        "mop" => mop(&mut log, &mut rng, budget)?,
        "accounting" => accounting(&mut log, &mut rng)?,
        "np-reduction" => np_reduction(&mut log, &mut rng, budget)?,
        _ => unreachable!("resolved suite names are registered"),
    }
    let failed = log.checks.iter().filter(|c| !c.passed).count();
    Ok(VerifySuiteReport {
        suite: canon.to_string(),
        passed: log.checks.len() - failed,
        failed,
        checks: log.checks,
        wall_ms: start.elapsed().as_millis() as u64,
    })
}

#[derive(Default)]
struct Log {
    checks: Vec<Check>,
}

impl Log {
    fn check(&mut self, instance: impl Into<String>, relation: &str, values: &[(&str, String)], passed: bool) {
        self.checks.push(Check {
            instance: instance.into(),
            relation: relation.to_string(),
            values: values.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            passed,
        });
    }
}

type Rng8 = rand_chacha::ChaCha8Rng;

fn describe(h: &Hypergraph) -> String {
    let edges: Vec<String> = h
        .edges()
        .map(|e| e.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    format!("n={} r={} [{}]", h.n(), h.r(), edges.join(", "))
}

/// Random r-uniform hypergraph with `n` in `r..=n_max` and at most `e_max`
/// edges.
fn random_instance(rng: &mut Rng8, r: usize, n_max: usize, e_max: usize) -> Result<Hypergraph> {
    let n = rng.gen_range(r..=n_max);
    let cap = (binomial(n as u64, r as u64) as usize).min(e_max);
    let m = rng.gen_range(0..=cap);
    generate::random(n, r, m, rng.gen())
}

fn first_degree(d: &Orientation, v: usize) -> Result<u32> {
    Ok(degree_vector(d, &[v])?.coords[0])
}

fn hakimi(log: &mut Log, rng: &mut Rng8) -> Result<()> {
    for _ in 0..200 {
        let r = rng.gen_range(2..=4);
        let h = random_instance(rng, r, 10, 12)?;
        let mad = mad_bruteforce(&h)?;
        let exact = mad_exact(&h).value;
        log.check(describe(&h), "flow Mad = subset-scan Mad", &[("flow", exact.to_string()), ("scan", mad.to_string())], exact == mad);
        for k in 0..=3u64 {
            let bound = Rational::from_int((h.r() as u64 * k) as i64);
            let outcome = orient_max_outdeg(&h, k);
            let certified = match &outcome {
                BudgetOutcome::Oriented(d) => (0..h.n()).all(|v| first_degree(d, v).is_ok_and(|x| x as u64 <= k)),
                BudgetOutcome::Infeasible { witness } => {
                    let (sub, _) = h.induced(witness);
                    sub.edge_count() as u64 > k * witness.len() as u64
                }
            };
            log.check(
                format!("{} k={k}", describe(&h)),
                "feasible <=> Mad <= rk, certificate valid",
                &[("feasible", outcome.is_feasible().to_string()), ("mad", mad.to_string()), ("rk", bound.to_string())],
                outcome.is_feasible() == (mad <= bound) && certified,
            );
        }
    }
    Ok(())
}

fn partition(log: &mut Log, rng: &mut Rng8, budget: u64) -> Result<()> {
    for _ in 0..100 {
        let r = rng.gen_range(2..=3);
        let h = random_instance(rng, r, 6, 6)?;
        for k in 1..=2u32 {
            let brute = f_bruteforce(&h, 1, k, budget)?.value;
            let via = f_via_m(&h, k, budget)?;
            let attained = f_count(via.orientation.as_ref().expect("certificate"), 1, k)?;
            log.check(
                format!("{} k={k}", describe(&h)),
                "brute = n - M(H,k-1) = certificate count",
                &[("brute", brute.to_string()), ("via-m", via.value.to_string()), ("certificate", attained.to_string())],
                brute == via.value && via.value.exact() == Some(attained),
            );
        }
    }
    Ok(())
}

fn complete(log: &mut Log, budget: u64) -> Result<()> {
    for r in 2..=3 {
        for n in 1..=12 {
            let h = generate::complete(n, r)?;
            for k in 1..=2u32 {
                let via = f_via_m(&h, k, budget)?.value;
                let closed = closed_form_complete(n as u64, r, k as u64)?;
                log.check(
                    format!("H({n},{r}) k={k}"),
                    "n - M = max(n - rt, 0)",
                    &[("via-m", via.to_string()), ("closed", closed.to_string())],
                    via.exact() == Some(closed),
                );
            }
        }
    }
    let mut brute_cases: Vec<(usize, usize, u64)> = (2..=6).map(|n| (n, 2, n as u64 - 2)).collect();
    brute_cases.extend([(4, 3, 0), (5, 3, 0)]);
    for (n, r, expect) in brute_cases {
        let h = generate::complete(n, r)?;
        let brute = f_bruteforce(&h, 1, 1, budget)?.value;
        log.check(
            format!("H({n},{r}) k=1"),
            "enumeration = expected",
            &[("brute", brute.to_string()), ("expected", expect.to_string())],
            brute.exact() == Some(expect),
        );
    }
    Ok(())
}

fn ramsey(log: &mut Log, budget: u64) -> Result<()> {
    for (n, expect) in [(3, 2), (4, 2), (5, 2), (6, 3)] {
        let h = generate::complete(n, 3)?;
        let chi = chi_r(&h, 2, budget)?;
        let proper = crate::ramsey::check_mono(&h, &chi.coloring)?.is_empty();
        log.check(
            format!("H({n},3) p=2"),
            "chi_R = expected, coloring proper",
            &[("chi_R", chi.value.to_string()), ("expected", expect.to_string())],
            chi.value == expect && proper,
        );
    }
    Ok(())
}

fn coloring(log: &mut Log, rng: &mut Rng8, budget: u64) -> Result<()> {
    for _ in 0..50 {
        let h = random_instance(rng, 3, 6, 6)?;
        for p in 1..=2 {
            let brute = f_bruteforce(&h, p, 1, budget)?.value;
            let b = b_value(&h, p, budget)?;
            let rep = f_p1_exact(&h, p, budget)?;
            let attained = f_count(rep.orientation.as_ref().expect("certificate"), p, 1)?;
            let total = binomial(h.n() as u64, p as u64);
            log.check(
                format!("{} p={p}", describe(&h)),
                "brute = C(n,p) - b = certificate count",
                &[
                    ("brute", brute.to_string()),
                    ("C(n,p)-b", (total - b.value).to_string()),
                    ("certificate", attained.to_string()),
                ],
                b.exact && brute.exact() == Some(total - b.value) && attained == total - b.value,
            );
        }
    }
    Ok(())
}

fn multipartite(log: &mut Log, budget: u64) -> Result<()> {
    for parts in [vec![7, 7, 3], vec![3, 3, 2], vec![4, 4, 2, 2]] {
        let g = generate::complete_multipartite(&parts)?;
        let via = f_via_m(&g, 2, budget)?.value;
        let closed = closed_form_multipartite(&parts, 2)?;
        let ok = matches!(closed, MultipartiteOutcome::Value(v) if via.exact() == Some(v));
        log.check(
            format!("K{parts:?} k=2"),
            "n - M = sum of small classes - 2k + 2",
            &[("via-m", via.to_string()), ("closed", format!("{closed:?}"))],
            ok,
        );
    }
    Ok(())
}

/// Integer partitions of `n` into non-increasing parts.
fn partitions(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for part in (1..=n.min(max)).rev() {
        prefix.push(part);
        partitions(n - part, part, prefix, out);
        prefix.pop();
    }
}

fn perfect(log: &mut Log, rng: &mut Rng8, budget: u64) -> Result<()> {
    let mut graphs = Vec::new();
    for n in 1..=8 {
        let mut out = Vec::new();
        partitions(n, n, &mut Vec::new(), &mut out);
        for parts in out {
            graphs.push((format!("K{parts:?}"), generate::complete_multipartite(&parts)?));
        }
    }
    for _ in 0..40 {
        let n = rng.gen_range(2..=10);
        let density = rng.gen_range(0.2..=1.0);
        let g = generate::random_bipartite(n, density, rng.gen())?;
        graphs.push((describe(&g), g));
    }
    for (name, g) in graphs {
        let f = f_via_m(&g, 1, budget)?.value;
        let h = hit_triangles(&g, budget)?.0;
        log.check(
            name,
            "f(G,1) = h(G,K3)",
            &[("f", f.to_string()), ("h", h.to_string())],
            f.exact() == Some(h as u64),
        );
    }
    Ok(())
}

/// `f(G,1)` through `M(G,0)`.
fn f1(g: &Hypergraph, budget: u64) -> Result<u64> {
    Ok((g.n() - m_value(g, 0, budget)?.value) as u64)
}

fn complement(log: &mut Log, budget: u64) -> Result<()> {
    for n in 2..=6usize {
        let pairs: Vec<[usize; 2]> = Combinations::new(n, 2).map(|c| [c[0], c[1]]).collect();
        let mut fails = 0u64;
        let mut count = 0u64;
        let mut first_failure = None;
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<[usize; 2]> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            let g = Hypergraph::canonicalize(&edges, n, 2)?;
            let sum = f1(&g, budget)? + f1(&g.complement()?, budget)?;
            count += 1;
            if (sum as i64) < n as i64 - 4 {
                fails += 1;
                first_failure.get_or_insert_with(|| describe(&g));
            }
        }
        log.check(
            format!("all {count} graphs on {n} vertices"),
            "f(G,1) + f(complement,1) >= n - 4",
            &[("violations", fails.to_string()), ("first", first_failure.unwrap_or_default())],
            fails == 0,
        );
    }
    let k = 1i64;
    for n in 4..=10usize {
        for a in 2..=n / 2 {
            let b = n - a;
            let g = generate::disjoint_cliques(&[a, b])?;
            let co = g.complement()?;
            let sum = (f_via_m(&g, 1, budget)?.value.exact().unwrap_or(0) + f_via_m(&co, 1, budget)?.value.exact().unwrap_or(0)) as i64;
            let n = n as i64;
            log.check(
                format!("K{a} + K{b} and K{a},{b}, k=1"),
                "n - 16k + 12 <= sum <= n - 8k + 4, and sum = n - 4",
                &[("sum", sum.to_string()), ("n-4", (n - 4).to_string())],
                n - 16 * k + 12 <= sum && sum <= n - 8 * k + 4 && sum == n - 4,
            );
        }
    }
    Ok(())
}

fn mop(log: &mut Log, rng: &mut Rng8, budget: u64) -> Result<()> {
    for _ in 0..50 {
        let n = rng.gen_range(3..=12);
        let g = generate::mop_random(n, rng.gen())?;
        let f = f_via_m(&g, 1, budget)?.value.exact().unwrap_or(0);
        log.check(
            describe(&g),
            "1 <= f(G,1) <= n/3",
            &[("f", f.to_string()), ("n", n.to_string())],
            g.edge_count() == 2 * n - 3 && 1 <= f && 3 * f <= n as u64,
        );
    }
    for n in 3..=12 {
        let g = generate::mop_fan(n)?;
        let f = f_via_m(&g, 1, budget)?.value;
        log.check(format!("fan on {n} vertices"), "f(G,1) = 1", &[("f", f.to_string())], f.exact() == Some(1));
    }
    Ok(())
}

fn accounting(log: &mut Log, rng: &mut Rng8) -> Result<()> {
    for _ in 0..500 {
        let r = rng.gen_range(2..=4);
        let h = random_instance(rng, r, 9, 14)?;
        let d = generate::random_orientation(&h, rng);
        let e = h.edge_count() as u64;
        let mut ok = true;
        let mut notes = Vec::new();
        for p in 1..r {
            let table = DegreeTable::build(&d, p)?;
            let coords = table.index().len();
            let mut per_coord = vec![0u64; coords];
            for (pset, c) in table.iter() {
                for (i, &x) in c.iter().enumerate() {
                    per_coord[i] += x as u64;
                }
                let containing = h.edges().filter(|edge| pset.iter().all(|v| edge.contains(v))).count();
                if c.iter().map(|&x| x as usize).sum::<usize>() != containing {
                    ok = false;
                    notes.push(format!("sum for {pset:?}"));
                }
            }
            if per_coord.iter().any(|&s| s != e) {
                ok = false;
                notes.push(format!("p={p} coordinate totals {per_coord:?}"));
            }
            let counts: Vec<u64> = (0..=4).map(|k| table.count_at_least(k)).collect();
            if counts.windows(2).any(|w| w[1] > w[0]) {
                ok = false;
                notes.push(format!("p={p} not monotone {counts:?}"));
            }
        }
        log.check(describe(&h), "coordinate sums and monotonicity", &[("problems", notes.join("; "))], ok);
    }
    Ok(())
}

fn np_reduction(log: &mut Log, rng: &mut Rng8, budget: u64) -> Result<()> {
    for _ in 0..30 {
        let n = rng.gen_range(4..=8);
        let density = rng.gen_range(0.1..=0.9);
        let g = generate::random_gnp(n, density, rng.gen())?;
        let a = alpha(&g, budget)?.0;
        let m = m_value(&generate::join_k2(&g)?, 0, budget)?.value;
        let ok = (0..=n + 1).all(|t| (a >= t) == (m >= 2 * t));
        log.check(
            describe(&g),
            "alpha(G) >= t <=> M(join, 0) >= 2t for all t",
            &[("alpha", a.to_string()), ("M", m.to_string())],
            ok,
        );
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        assert_eq!(resolve_suite("thm2").unwrap(), "partition");
        assert_eq!(resolve_suite("hakimi").unwrap(), "hakimi");
        assert!(matches!(verify_suite("nope", 1, 10), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn integer_partitions() {
        let mut out = Vec::new();
        partitions(5, 5, &mut Vec::new(), &mut out);
        assert_eq!(out.len(), 7);
    }

    #[test]
    fn ramsey_suite_passes() {
        let rep = verify_suite("ramsey", 1, crate::DEFAULT_NODE_BUDGET).unwrap();
        assert!(rep.ok());
        assert_eq!(rep.passed, 4);
    }
}
