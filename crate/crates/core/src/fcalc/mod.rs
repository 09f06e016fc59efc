//! The quantity `f(H,p,k)`: oracles, exact evaluation through `M(H,k-1)`,
//! closed forms, bounds, thresholds and packings.

mod bounds;
mod closed;
mod dispatch;
mod exact;
mod report;
mod threshold;

pub use bounds::{bounds, BoundEntry, Side};
pub use closed::{
    closed_form_complete, closed_form_multipartite, closed_form_triples, complete_class_size, edge_bound,
    tset_threshold_q, EdgeBound, MultipartiteOutcome,
};
pub use dispatch::{f_with, multipartite_classes};
pub use exact::{f_bruteforce, f_count, f_via_m, orientation_count};
pub use report::{FMethod, FReport, FValue};
pub use threshold::{
    f_threshold, find_tset, greedy_packing, known_threshold, packing_bound, KnownThreshold, PackingReport,
    ScanEntry, ThresholdReport, KNOWN_THRESHOLDS,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::generate;
    use crate::ramsey::b_value;
    use proptest::prelude::*;

    const NODES: u64 = crate::DEFAULT_NODE_BUDGET;
    const SCANS: u64 = crate::DEFAULT_ORIENTATION_BUDGET;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn count_monotone_in_k(n in 3usize..=7, r in 2usize..=3, m in 0usize..=10, seed in any::<u64>(), p in 1usize..=2) {
            prop_assume!(p < r);
            if let Ok(h) = generate::random(n, r, m, seed) {
                let d = generate::random_orientation(&h, &mut generate::rng(seed));
                for k in 0..4 {
                    prop_assert!(f_count(&d, p, k + 1).unwrap() <= f_count(&d, p, k).unwrap());
                }
            }
        }

        #[test]
        fn via_m_matches_enumeration(n in 3usize..=6, r in 2usize..=3, m in 0usize..=5, seed in any::<u64>(), k in 1u32..=2) {
            if let Ok(h) = generate::random(n, r, m, seed) {
                let brute = f_bruteforce(&h, 1, k, SCANS).unwrap().value;
                prop_assert_eq!(f_via_m(&h, k, NODES).unwrap().value, brute);
            }
        }

        #[test]
        fn bounds_bracket_exact(n in 3usize..=8, density in 0.0f64..1.0, seed in any::<u64>(), k in 1u32..=2) {
            let g = generate::random_gnp(n, density, seed).unwrap();
            let f = f_via_m(&g, k, NODES).unwrap().value.exact().unwrap();
            for b in bounds(&g, k, NODES).unwrap() {
                prop_assert!(b.admits(f), "{} = {:?} vs f = {}", b.name, b.value, f);
            }
        }

        #[test]
        fn coloring_gives_lower_bound_for_middle_p(m in 1usize..=3, seed in any::<u64>()) {
            let h = generate::random(5, 4, m, seed).unwrap();
            let brute = f_bruteforce(&h, 2, 1, SCANS).unwrap().value.exact().unwrap();
            let b = b_value(&h, 2, NODES).unwrap();
            prop_assert!(b.exact);
            prop_assert!(brute + b.value >= 10);
        }
    }

    #[test]
    fn closed_form_agrees_with_partition_search() {
        for r in 2..=3 {
            for n in r..=10 {
                let h = generate::complete(n, r).unwrap();
                for k in 1..=2u32 {
                    let via = f_via_m(&h, k, NODES).unwrap().value;
                    assert_eq!(via, FValue::Exact(closed_form_complete(n as u64, r, k as u64).unwrap()));
                }
            }
        }
    }
}
