//! Isomorph-free exhaustive generation of small graphs by vertex
//! augmentation.
//!
//! Level `j + 1` is obtained by attaching a new vertex to every subset of
//! the vertices of each level-`j` representative; children are reduced to
//! canonical form and deduplicated. A filter passed to the generator must be
//! hereditary (closed under deleting vertices), otherwise graphs whose
//! induced subgraphs fail it are never reached.

use rayon::prelude::*;

use crate::canon::canonical_form;
use crate::graph::Graph;
use crate::tree::{classify_tree, TreeSpec};

/// Largest vertex count the generator accepts.
pub const MAX_GENERATION_N: usize = 12;

fn extend(parent: &Graph, mask: u64) -> Graph {
    let j = parent.n();
    let mut child = Graph::empty(j + 1);
    for (u, v) in parent.edges() {
        child.add_edge(u, v);
    }
    for u in 0..j {
        if mask >> u & 1 == 1 {
            child.add_edge(u, j);
        }
    }
    child
}

/// All graphs on `n` vertices satisfying the hereditary predicate `keep`,
/// one canonical representative per isomorphism class, in a deterministic
/// order.
///
/// Runs on the ambient rayon pool; wrap in `ThreadPool::install` to bound
/// parallelism.
pub fn nonisomorphic_graphs<F>(n: usize, keep: F) -> Vec<Graph>
where
    F: Fn(&Graph) -> bool + Sync,
{
    assert!(
        n <= MAX_GENERATION_N,
        "generation is limited to {MAX_GENERATION_N} vertices"
    );
    let mut level = vec![Graph::empty(0)];
    for j in 0..n {
        let mut next: Vec<Graph> = level
            .par_iter()
            .flat_map_iter(|parent| {
                let keep = &keep;
                (0u64..1 << j).filter_map(move |mask| {
                    let child = extend(parent, mask);
                    keep(&child).then(|| canonical_form(&child))
                })
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        level = next;
    }
    level
}

pub fn all_graphs(n: usize) -> Vec<Graph> {
    nonisomorphic_graphs(n, |_| true)
}

/// Nonisomorphic trees on `k` vertices.
pub fn nonisomorphic_trees(k: usize) -> Vec<Graph> {
    nonisomorphic_graphs(k, Graph::is_forest)
        .into_iter()
        .filter(Graph::is_tree)
        .collect()
}

/// Trees on `k` vertices with diameter at most `max_diameter`, optionally
/// excluding stars.
pub fn candidate_trees(k: usize, max_diameter: usize, non_star: bool) -> Vec<TreeSpec> {
    nonisomorphic_trees(k)
        .iter()
        .map(|t| classify_tree(t).expect("generated graph is a tree"))
        .filter(|spec| spec.diameter() <= max_diameter && !(non_star && spec.is_star()))
        .collect()
}
