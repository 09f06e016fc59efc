//! Hypergraphs, orientations, position indexing, generators and file I/O.

pub mod combin;
mod degree;
pub mod generate;
mod hypergraph;
pub mod io;
mod orientation;
mod positions;

pub use degree::{degree_vector, max_coordinate, DegreeTable, DegreeVector};
pub(crate) use degree::check_pset;
pub use hypergraph::Hypergraph;
pub use orientation::Orientation;
pub use positions::PositionIndex;

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn arb_orientation() -> impl Strategy<Value = Orientation> {
        (2usize..=4, 0usize..=9, 0usize..=12, any::<u64>()).prop_map(|(r, extra, m, seed)| {
            let n = r + extra;
            let total = combin::binomial(n as u64, r as u64) as usize;
            let h = generate::random(n, r, m.min(total), seed).unwrap();
            let mut rng = generate::rng(seed ^ 0x5eed);
            generate::random_orientation(&h, &mut rng)
        })
    }

    proptest! {
        #[test]
        fn each_position_holds_one_vertex_per_edge(d in arb_orientation()) {
            let h = d.base();
            for pos in 0..h.r() {
                let total: usize = (0..h.n())
                    .map(|v| d.orders().filter(|o| o[pos] == v).count())
                    .sum();
                prop_assert_eq!(total, h.edge_count());
            }
        }

        #[test]
        fn coordinates_sum_to_pset_degree(d in arb_orientation()) {
            let h = d.base();
            for p in 1..h.r() {
                let table = DegreeTable::build(&d, p).unwrap();
                let mut per_coord = vec![0u64; table.index().len()];
                for a in combin::Combinations::new(h.n(), p) {
                    let v = degree_vector(&d, &a).unwrap();
                    let deg = h.edges().filter(|e| a.iter().all(|x| e.contains(x))).count();
                    prop_assert_eq!(v.total() as usize, deg);
                    prop_assert_eq!(&v.coords, &table.coords(&a));
                    for (c, x) in per_coord.iter_mut().zip(&v.coords) {
                        *c += *x as u64;
                    }
                }
                for c in per_coord {
                    prop_assert_eq!(c, h.edge_count() as u64);
                }
            }
        }

        #[test]
        fn canonicalize_is_idempotent(d in arb_orientation()) {
            let h = d.base();
            let edges: Vec<Vec<usize>> = h.edges().map(<[usize]>::to_vec).collect();
            let again = Hypergraph::canonicalize(&edges, h.n(), h.r()).unwrap();
            prop_assert_eq!(&again, h);
            let text = io::write_orientation(&d);
            prop_assert_eq!(io::parse(&text).unwrap(), io::Document::Oriented(d.clone()));
        }
    }
}
