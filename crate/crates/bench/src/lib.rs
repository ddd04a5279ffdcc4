//! Fixtures shared by the criterion benches.

use dspectra::ops::{cycle_union, subdivision_join, JoinKind, PartitionMin3};
use dspectra::Graph;

/// `K_{1,1} ∘ C_6`, the 15-vertex join used throughout the benches.
pub fn single_edge_join() -> Graph {
    let k11 = Graph::complete_bipartite(1, 1).expect("K_{1,1}");
    let c6 = cycle_union(&PartitionMin3::new(vec![6]).expect("partition")).expect("C_6");
    subdivision_join(&k11, &c6, JoinKind::VertexVertex)
        .expect("join")
        .0
}

/// `K_{2,2} ∘ C_P` for a larger partition of 9.
pub fn bipartite_join() -> Graph {
    let k22 = Graph::complete_bipartite(2, 2).expect("K_{2,2}");
    let c = cycle_union(&PartitionMin3::new(vec![3, 3, 3]).expect("partition")).expect("3C_3");
    subdivision_join(&k22, &c, JoinKind::VertexVertex)
        .expect("join")
        .0
}
