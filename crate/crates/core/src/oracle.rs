//! Exact `rem_H(G)` and `ex(G, H)` for arbitrary patterns by a bounded
//! search tree under iterative deepening.
//!
//! At each node the first copy of `H` found is destroyed by branching on
//! its edges. Branch `i` deletes the `i`-th edge and keeps the earlier ones,
//! so no deletion set is explored twice within one depth bound. A greedy
//! packing of edge-disjoint copies bounds the remaining depth from below.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::subgraph::Pattern;

/// Default ceiling on search nodes per call.
pub const DEFAULT_NODE_LIMIT: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Give up once `rem` is known to exceed this.
    pub budget: Option<usize>,
    pub node_limit: Option<u64>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            budget: None,
            node_limit: Some(DEFAULT_NODE_LIMIT),
        }
    }
}

impl SearchLimits {
    pub fn with_budget(budget: usize) -> Self {
        SearchLimits {
            budget: Some(budget),
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("rem exceeds the budget of {budget} deletions")]
    Exceeded { budget: usize, nodes: u64 },
    #[error("node limit of {limit} reached; rem >= {lower_bound}")]
    NodeLimit {
        limit: u64,
        lower_bound: usize,
        nodes: u64,
    },
    #[error("pattern has no edges and fits in the host graph; no deletion set removes it")]
    Unremovable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeletionResult {
    pub rem: usize,
    pub ex: usize,
    pub deleted_edges: Vec<Edge>,
    /// `G` minus the deleted edges.
    #[serde(skip)]
    pub witness: Graph,
    pub nodes: u64,
}

struct Abort;

struct Search<'a> {
    pattern: &'a Pattern,
    work: Graph,
    kept: Graph,
    deleted: Vec<Edge>,
    nodes: u64,
    node_limit: u64,
}

impl Search<'_> {
    /// Number of edge-disjoint copies found greedily, stopping once it
    /// exceeds `cap`; `None` if some copy uses only kept edges.
    fn packing_bound(&self, first: &[Edge], cap: usize) -> Option<usize> {
        let mut scratch = self.work.clone();
        let mut count = 0;
        let mut copy = first.to_vec();
        loop {
            if copy.iter().all(|&(u, v)| self.kept.has_edge(u, v)) {
                return None;
            }
            count += 1;
            if count > cap {
                return Some(count);
            }
            for &(u, v) in &copy {
                scratch.remove_edge(u, v);
            }
            match self.pattern.find_in(&scratch) {
                Some(m) => copy = self.pattern.image_edges(&m),
                None => return Some(count),
            }
        }
    }

    fn dfs(&mut self, depth_left: usize) -> Result<bool, Abort> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Abort);
        }
        let Some(mapping) = self.pattern.find_in(&self.work) else {
            return Ok(true);
        };
        if depth_left == 0 {
            return Ok(false);
        }
        let copy = self.pattern.image_edges(&mapping);
        match self.packing_bound(&copy, depth_left) {
            Some(lb) if lb <= depth_left => {}
            _ => return Ok(false),
        }
        let mut marked = Vec::new();
        let mut found = false;
        for &(u, v) in &copy {
            if self.kept.has_edge(u, v) {
                continue;
            }
            self.work.remove_edge(u, v);
            self.deleted.push((u, v));
            if self.dfs(depth_left - 1)? {
                found = true;
                break;
            }
            self.deleted.pop();
            self.work.add_edge(u, v);
            self.kept.add_edge(u, v);
            marked.push((u, v));
        }
        for (u, v) in marked {
            self.kept.remove_edge(u, v);
        }
        Ok(found)
    }
}

/// The minimum number of edge deletions making `g` free of `h`, with a
/// certificate.
///
/// Depth bounds are tried in order 0, 1, 2, ..., so the first success is
/// optimal. With a budget, bounds stop at the budget and
/// [`OracleError::Exceeded`] proves `rem > budget`.
pub fn rem_exact(
    g: &Graph,
    h: &Graph,
    limits: SearchLimits,
) -> Result<DeletionResult, OracleError> {
    let pattern = Pattern::new(h);
    rem_with_pattern(g, &pattern, limits)
}

pub fn rem_with_pattern(
    g: &Graph,
    pattern: &Pattern,
    limits: SearchLimits,
) -> Result<DeletionResult, OracleError> {
    if pattern.graph().edge_count() == 0 {
        return if pattern.find_in(g).is_some() {
            Err(OracleError::Unremovable)
        } else {
            Ok(DeletionResult {
                rem: 0,
                ex: g.edge_count(),
                deleted_edges: Vec::new(),
                witness: g.clone(),
                nodes: 0,
            })
        };
    }
    let node_limit = limits.node_limit.unwrap_or(u64::MAX);
    let mut search = Search {
        pattern,
        work: g.clone(),
        kept: Graph::empty(g.n()),
        deleted: Vec::new(),
        nodes: 0,
        node_limit,
    };
    let max_depth = limits
        .budget
        .map_or(g.edge_count(), |b| b.min(g.edge_count()));
    for depth in 0..=max_depth {
        match search.dfs(depth) {
            Ok(true) => {
                let mut deleted = search.deleted;
                deleted.sort_unstable();
                return Ok(DeletionResult {
                    rem: deleted.len(),
                    ex: g.edge_count() - deleted.len(),
                    deleted_edges: deleted,
                    witness: search.work,
                    nodes: search.nodes,
                });
            }
            Ok(false) => {}
            Err(Abort) => {
                return Err(OracleError::NodeLimit {
                    limit: node_limit,
                    lower_bound: depth,
                    nodes: search.nodes,
                })
            }
        }
    }
    match limits.budget {
        Some(budget) => Err(OracleError::Exceeded {
            budget,
            nodes: search.nodes,
        }),
        // deleting every edge always works for a pattern with edges
        None => unreachable!("empty graph is free of any pattern with edges"),
    }
}

/// `ex(G, H) = e(G) - rem_H(G)`.
pub fn ex_exact(g: &Graph, h: &Graph) -> Result<usize, OracleError> {
    rem_exact(g, h, SearchLimits::default()).map(|r| r.ex)
}
