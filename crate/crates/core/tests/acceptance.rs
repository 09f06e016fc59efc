//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hyperf::extremal::{alpha, m_value};
use hyperf::fcalc::{closed_form_multipartite, f_bruteforce, f_via_m, FValue, MultipartiteOutcome};
use hyperf::hypercore::generate;
use hyperf::ramsey::chi_r;
use hyperf::verify::verify_suite;
use hyperf::{DEFAULT_NODE_BUDGET, DEFAULT_ORIENTATION_BUDGET};

const SEED: u64 = 1;

struct Criterion {
    id: u32,
    suite: &'static str,
    title: &'static str,
    /// Exact number of comparisons the suite must make.
    checks: usize,
    limit: Duration,
    extra: fn() -> Result<(), String>,
}

fn none() -> Result<(), String> {
    Ok(())
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn complete_anchors() -> Result<(), String> {
    for n in 2..=6 {
        let h = generate::complete(n, 2).unwrap();
        let f = f_bruteforce(&h, 1, 1, DEFAULT_ORIENTATION_BUDGET).map_err(|e| e.to_string())?;
        expect(&format!("f(K{n},1,1)"), f.value, FValue::Exact(n as u64 - 2))?;
    }
    for n in [4, 5] {
        let h = generate::complete(n, 3).unwrap();
        let f = f_bruteforce(&h, 1, 1, DEFAULT_ORIENTATION_BUDGET).map_err(|e| e.to_string())?;
        expect(&format!("f(H({n},3),1,1)"), f.value, FValue::Exact(0))?;
    }
    Ok(())
}

fn ramsey_anchors() -> Result<(), String> {
    for (n, want) in [(3, 2), (4, 2), (5, 2), (6, 3)] {
        let h = generate::complete(n, 3).unwrap();
        let chi = chi_r(&h, 2, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
        expect(&format!("chi_R(H({n},3),2)"), chi.value, want)?;
    }
    Ok(())
}

fn multipartite_anchors() -> Result<(), String> {
    for (parts, want) in [(vec![7, 7, 3], 1), (vec![3, 3, 2], 0), (vec![4, 4, 2, 2], 2)] {
        let g = generate::complete_multipartite(&parts).unwrap();
        let f = f_via_m(&g, 2, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
        expect(&format!("f(K{parts:?},1,2)"), f.value, FValue::Exact(want))?;
        expect(
            &format!("formula K{parts:?}"),
            closed_form_multipartite(&parts, 2).unwrap(),
            MultipartiteOutcome::Value(want),
        )?;
    }
    Ok(())
}

fn complement_anchors() -> Result<(), String> {
    for (a, b) in [(2, 2), (3, 4), (5, 5)] {
        let g = generate::disjoint_cliques(&[a, b]).unwrap();
        let co = g.complement().unwrap();
        let sum = f_via_m(&g, 1, DEFAULT_NODE_BUDGET).unwrap().value.exact().unwrap()
            + f_via_m(&co, 1, DEFAULT_NODE_BUDGET).unwrap().value.exact().unwrap();
        expect(&format!("K{a} + K{b}"), sum, (a + b - 4) as u64)?;
    }
    Ok(())
}

fn mop_anchors() -> Result<(), String> {
    let fan = generate::mop_fan(12).unwrap();
    expect("fan on 12 vertices", f_via_m(&fan, 1, DEFAULT_NODE_BUDGET).unwrap().value, FValue::Exact(1))
}

fn np_anchors() -> Result<(), String> {
    // C5: alpha = 2, so the doubled graph covers exactly 4 vertices.
    let c5 = hyperf::Hypergraph::canonicalize(&[[0, 1], [1, 2], [2, 3], [3, 4], [0, 4]], 5, 2).unwrap();
    expect("alpha(C5)", alpha(&c5, DEFAULT_NODE_BUDGET).unwrap().0, 2)?;
    let joined = generate::join_k2(&c5).unwrap();
    expect("M(C5 joined, 0)", m_value(&joined, 0, DEFAULT_NODE_BUDGET).unwrap().value, 4)
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, suite: "hakimi", title: "bounded-degree orientation iff Mad <= rk", checks: 1000, limit: Duration::from_secs(60), extra: none },
    Criterion { id: 2, suite: "partition", title: "f(H,1,k) = n - M(H,k-1)", checks: 200, limit: Duration::from_secs(300), extra: none },
    Criterion { id: 3, suite: "complete", title: "closed form for complete hypergraphs", checks: 55, limit: Duration::from_secs(180), extra: complete_anchors },
    Criterion { id: 4, suite: "ramsey", title: "chi_R(H(n,3),2) for n = 3..6", checks: 4, limit: Duration::from_secs(60), extra: ramsey_anchors },
    Criterion { id: 5, suite: "coloring", title: "f(H,p,1) = C(n,p) - b(H,p), p in {1, r-1}", checks: 100, limit: Duration::from_secs(300), extra: none },
    Criterion { id: 6, suite: "multipartite", title: "complete multipartite closed form", checks: 3, limit: Duration::from_secs(120), extra: multipartite_anchors },
    Criterion { id: 7, suite: "perfect", title: "f(G,1) = h(G,K3) on perfect graphs", checks: 106, limit: Duration::from_secs(600), extra: none },
    Criterion { id: 8, suite: "complement", title: "f(G,1) + f(complement,1) >= n - 4", checks: 21, limit: Duration::from_secs(600), extra: complement_anchors },
    Criterion { id: 9, suite: "mop", title: "1 <= f(G,1) <= n/3 on maximal outerplanar graphs", checks: 60, limit: Duration::from_secs(600), extra: mop_anchors },
    Criterion { id: 10, suite: "accounting", title: "degree accounting and monotonicity", checks: 500, limit: Duration::from_secs(30), extra: none },
    Criterion { id: 11, suite: "np-reduction", title: "alpha(G) >= t iff M(joined, 0) >= 2t", checks: 30, limit: Duration::from_secs(600), extra: np_anchors },
];

fn run(c: &Criterion) -> Result<String, String> {
    let start = Instant::now();
    let rep = verify_suite(c.suite, SEED, DEFAULT_ORIENTATION_BUDGET).map_err(|e| e.to_string())?;
    (c.extra)()?;
    let elapsed = start.elapsed();
    if let Some(bad) = rep.failures().next() {
        return Err(format!("{} failures, first: {} [{}] {:?}", rep.failed, bad.relation, bad.instance, bad.values));
    }
    expect("comparisons", rep.checks.len(), c.checks)?;
    if elapsed > c.limit {
        return Err(format!("took {elapsed:?}, limit {:?}", c.limit));
    }
    Ok(format!("{} comparisons, {} ms", rep.passed, elapsed.as_millis()))
}

fn main() -> ExitCode {
    let mut failed = 0;
    for c in CRITERIA {
        match run(c) {
            Ok(detail) => println!("PASS {:>2} {:<13} {} ({detail})", c.id, c.suite, c.title),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {:<13} {}: {why}", c.id, c.suite, c.title);
            }
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
