use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    /// `adj[u]` lists the right neighbours of left vertex `u`.
    pub fn new(right: usize, mut adj: Vec<Vec<usize>>) -> Result<Self> {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            if let Some(&v) = list.iter().find(|&&v| v >= right) {
                return Err(Error::BadParams(format!("right vertex {v} out of range")));
            }
        }
        Ok(BipartiteGraph {
            left: adj.len(),
            right,
            adj,
        })
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn neighbours(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Matching {
    /// `mate[u]` is the right vertex matched to left vertex `u`.
    Perfect(Vec<usize>),
    /// A set of left vertices with fewer than `|Q|` neighbours.
    NoMatching { hall_violator: Vec<usize> },
}

/// Perfect matching by augmenting paths, seeded greedily, lowest index first.
pub fn perfect_matching(bg: &BipartiteGraph) -> Result<Matching> {
    if bg.left != bg.right {
        return Err(Error::SizeMismatch {
            left: bg.left,
            right: bg.right,
        });
    }
    let mut mate_left = vec![usize::MAX; bg.left];
    let mut mate_right = vec![usize::MAX; bg.right];
    for u in 0..bg.left {
        if let Some(&v) = bg.adj[u].iter().find(|&&v| mate_right[v] == usize::MAX) {
            mate_left[u] = v;
            mate_right[v] = u;
        }
    }
    for u in 0..bg.left {
        if mate_left[u] != usize::MAX {
            continue;
        }
        let mut visited = vec![false; bg.right];
        if !augment(bg, u, &mut visited, &mut mate_left, &mut mate_right) {
            return Ok(Matching::NoMatching {
                hall_violator: alternating_reach(bg, u, &mate_right),
            });
        }
    }
    Ok(Matching::Perfect(mate_left))
}

fn augment(
    bg: &BipartiteGraph,
    u: usize,
    visited: &mut [bool],
    mate_left: &mut [usize],
    mate_right: &mut [usize],
) -> bool {
    for &v in &bg.adj[u] {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        if mate_right[v] == usize::MAX || augment(bg, mate_right[v], visited, mate_left, mate_right) {
            mate_left[u] = v;
            mate_right[v] = u;
            return true;
        }
    }
    false
}

/// Left vertices reachable from the exposed vertex `u` by alternating paths.
/// With a maximum matching, their neighbourhood is matched into the set
/// minus `u`, so it violates Hall's condition.
fn alternating_reach(bg: &BipartiteGraph, u: usize, mate_right: &[usize]) -> Vec<usize> {
    let mut in_q = vec![false; bg.left];
    let mut seen_right = vec![false; bg.right];
    in_q[u] = true;
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        for &v in &bg.adj[x] {
            if seen_right[v] {
                continue;
            }
            seen_right[v] = true;
            let w = mate_right[v];
            if w != usize::MAX && !in_q[w] {
                in_q[w] = true;
                stack.push(w);
            }
        }
    }
    (0..bg.left).filter(|&x| in_q[x]).collect()
}
