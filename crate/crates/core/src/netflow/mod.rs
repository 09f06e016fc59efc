//! Max-flow and bipartite matching kernels.

mod flow;
mod matching;

pub use flow::{FlowNetwork, MaxFlow};
pub use matching::{perfect_matching, BipartiteGraph, Matching};
