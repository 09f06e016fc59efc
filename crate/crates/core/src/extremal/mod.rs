//! Extremal invariants: maximum average degree, degeneracy, colorings,
//! independence-type numbers and `M(H,k)`.

mod degeneracy;
mod mad;
mod mvalue;
mod partition;
mod rational;
mod search;

pub use degeneracy::{chromatic_exact, degeneracy, is_proper_coloring, szekeres_wilf_coloring};
pub use mad::{density, mad_bruteforce, mad_exact, MadReport};
pub use mvalue::{certify_partition, m_value, MReport};
pub use partition::{partition_degenerate, PartitionWitness};
pub use rational::Rational;
pub use search::{alpha, alpha2, beta, hit_triangles, triangles};
