//! Instance generators.
//!
//! Random families draw from ChaCha8 seeded with `seed_from_u64`, so a seed
//! pins the instance.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::combin::{binomial, subset_unrank, Combinations};
use super::{Hypergraph, Orientation};
use crate::error::{Error, Result};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The complete r-uniform hypergraph `H(n, r)`.
pub fn complete(n: usize, r: usize) -> Result<Hypergraph> {
    let edges: Vec<Vec<usize>> = Combinations::new(n, r).collect();
    Hypergraph::canonicalize(&edges, n, r)
}

/// Complete multipartite graph with the given part sizes; parts occupy
/// consecutive vertex ranges.
pub fn complete_multipartite(parts: &[usize]) -> Result<Hypergraph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::BadParams("multipartite parts must be non-empty".into()));
    }
    let mut part_of = Vec::new();
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let n = part_of.len();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if part_of[a] != part_of[b] {
                edges.push([a, b]);
            }
        }
    }
    Hypergraph::canonicalize(&edges, n, 2)
}

/// Polygon `0..n` with every chord from vertex 0.
pub fn mop_fan(n: usize) -> Result<Hypergraph> {
    if n < 3 {
        return Err(Error::BadParams("a triangulated polygon needs n >= 3".into()));
    }
    let mut edges: Vec<[usize; 2]> = (0..n).map(|i| [i, (i + 1) % n]).collect();
    edges.extend((2..n - 1).map(|i| [0, i]));
    Hypergraph::canonicalize(&edges, n, 2)
}

/// Uniformly seeded random triangulation of the polygon `0..n`.
pub fn mop_random(n: usize, seed: u64) -> Result<Hypergraph> {
    if n < 3 {
        return Err(Error::BadParams("a triangulated polygon needs n >= 3".into()));
    }
    let mut rng = rng(seed);
    let mut edges: Vec<[usize; 2]> = (0..n).map(|i| [i, (i + 1) % n]).collect();
    // Each polygon [a, .., b] is split by a random apex of the side ab.
    let mut stack = vec![(0..n).collect::<Vec<usize>>()];
    while let Some(poly) = stack.pop() {
        if poly.len() < 3 {
            continue;
        }
        let last = poly.len() - 1;
        let apex = rng.gen_range(1..last);
        if apex > 1 {
            edges.push([poly[0], poly[apex]]);
        }
        if apex < last - 1 {
            edges.push([poly[apex], poly[last]]);
        }
        stack.push(poly[..=apex].to_vec());
        stack.push(poly[apex..].to_vec());
    }
    Hypergraph::canonicalize(&edges, n, 2)
}

/// Two copies of `g` joined by every edge between the copies.
pub fn join_k2(g: &Hypergraph) -> Result<Hypergraph> {
    if g.r() != 2 {
        return Err(Error::BadParams("join_k2 requires a graph (r = 2)".into()));
    }
    let n = g.n();
    let mut edges: Vec<[usize; 2]> = Vec::new();
    for e in g.edges() {
        edges.push([e[0], e[1]]);
        edges.push([e[0] + n, e[1] + n]);
    }
    for a in 0..n {
        for b in 0..n {
            edges.push([a, n + b]);
        }
    }
    Hypergraph::canonicalize(&edges, 2 * n, 2)
}

pub fn complement(g: &Hypergraph) -> Result<Hypergraph> {
    g.complement()
}

/// Disjoint union of cliques of the given sizes.
pub fn disjoint_cliques(sizes: &[usize]) -> Result<Hypergraph> {
    let mut edges = Vec::new();
    let mut offset = 0;
    for &s in sizes {
        for a in 0..s {
            for b in a + 1..s {
                edges.push([offset + a, offset + b]);
            }
        }
        offset += s;
    }
    Hypergraph::canonicalize(&edges, offset, 2)
}

/// `m` distinct r-sets of `0..n` chosen uniformly at random.
pub fn random(n: usize, r: usize, m: usize, seed: u64) -> Result<Hypergraph> {
    let total = binomial(n as u64, r as u64);
    if (m as u64) > total {
        return Err(Error::BadParams(format!("{m} edges requested, only {total} r-sets exist")));
    }
    let mut rng = rng(seed);
    let edges: Vec<Vec<usize>> = if total <= 1 << 20 {
        index::sample(&mut rng, total as usize, m)
            .into_iter()
            .map(|i| subset_unrank(n, r, i as u64))
            .collect()
    } else {
        let mut seen = std::collections::BTreeSet::new();
        while seen.len() < m {
            let mut e: Vec<usize> = index::sample(&mut rng, n, r).into_vec();
            e.sort_unstable();
            seen.insert(e);
        }
        seen.into_iter().collect()
    };
    Hypergraph::canonicalize(&edges, n, r)
}

/// Random bipartite graph: each vertex joins side A with probability 1/2 and
/// each cross pair is an edge with probability `density`.
pub fn random_bipartite(n: usize, density: f64, seed: u64) -> Result<Hypergraph> {
    let mut rng = rng(seed);
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if side[a] != side[b] && rng.gen_bool(density) {
                edges.push([a, b]);
            }
        }
    }
    Hypergraph::canonicalize(&edges, n, 2)
}

/// Random graph with each pair present with probability `density`.
pub fn random_gnp(n: usize, density: f64, seed: u64) -> Result<Hypergraph> {
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(density) {
                edges.push([a, b]);
            }
        }
    }
    Hypergraph::canonicalize(&edges, n, 2)
}

/// Independent uniformly random order for every edge.
pub fn random_orientation<R: Rng>(h: &Hypergraph, rng: &mut R) -> Orientation {
    let mut flat = Vec::with_capacity(h.edge_count() * h.r());
    for e in h.edges() {
        let mut order = e.to_vec();
        order.shuffle(rng);
        flat.extend(order);
    }
    Orientation::from_flat_unchecked(h.clone(), flat)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_counts() {
        assert_eq!(complete(4, 3).unwrap().edge_count(), 4);
        assert_eq!(complete(5, 2).unwrap().edge_count(), 10);
        assert_eq!(complete(2, 3).unwrap().edge_count(), 0);
    }

    #[test]
    fn multipartite_c4() {
        let g = complete_multipartite(&[2, 2]).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degrees(), vec![2, 2, 2, 2]);
        assert!(matches!(complete_multipartite(&[2, 0]), Err(Error::BadParams(_))));
    }

    #[test]
    fn join_of_empty_pair_is_k22() {
        let g = Hypergraph::empty(2, 2).unwrap();
        let j = join_k2(&g).unwrap();
        assert_eq!(j, complete_multipartite(&[2, 2]).unwrap());
    }

    #[test]
    fn mops_have_2n_minus_3_edges() {
        for n in 3..15 {
            assert_eq!(mop_fan(n).unwrap().edge_count(), 2 * n - 3);
            for seed in 0..5 {
                let g = mop_random(n, seed).unwrap();
                assert_eq!(g.edge_count(), 2 * n - 3, "n = {n}, seed = {seed}");
            }
        }
    }

    #[test]
    fn random_is_reproducible() {
        let a = random(8, 3, 10, 42).unwrap();
        let b = random(8, 3, 10, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge_count(), 10);
        assert!(random(4, 3, 5, 1).is_err());
    }
}
