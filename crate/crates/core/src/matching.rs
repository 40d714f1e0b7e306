//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm, the O(V^3) breadth-first formulation with explicit blossom
//! bases).

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{Edge, Graph};

const NIL: usize = usize::MAX;

/// A set of vertex-disjoint edges of some host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    #[serde(skip)]
    mate: Vec<usize>,
    edges: Vec<Edge>,
}

impl Matching {
    fn from_mates(mate: Vec<usize>) -> Self {
        let edges = mate
            .iter()
            .enumerate()
            .filter(|&(v, &m)| m != NIL && v < m)
            .map(|(v, &m)| (v, m))
            .collect();
        Matching { mate, edges }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Matched edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        match self.mate[v] {
            NIL => None,
            m => Some(m),
        }
    }

    /// Checks the matching invariants against `host`.
    pub fn is_valid_in(&self, host: &Graph) -> bool {
        let mut covered = vec![false; host.n()];
        self.edges.iter().all(|&(u, v)| {
            let fresh = !covered[u] && !covered[v];
            covered[u] = true;
            covered[v] = true;
            fresh && host.has_edge(u, v)
        })
    }

    /// Replaces the partner of `a` with `b`: `a`'s old edge is dropped, and
    /// `b` must be exposed.
    pub(crate) fn rematch(&mut self, a: usize, b: usize) {
        debug_assert_eq!(self.mate[b], NIL);
        let old = self.mate[a];
        if old != NIL {
            self.mate[old] = NIL;
        }
        self.mate[a] = b;
        self.mate[b] = a;
        *self = Matching::from_mates(std::mem::take(&mut self.mate));
    }
}

struct Search<'a> {
    g: &'a Graph,
    adj: Vec<Vec<usize>>,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Search {
            g,
            adj: (0..n).map(|v| g.neighbors(v).collect()).collect(),
            mate: vec![NIL; n],
            parent: vec![NIL; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NIL {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the exposed endpoint of
    /// an augmenting path if one exists.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.fill(false);
        self.parent.fill(NIL);
        for (v, b) in self.base.iter_mut().enumerate() {
            *b = v;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NIL && self.parent[self.mate[to]] != NIL) {
                    // odd cycle: contract the blossom
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for u in 0..n {
                        if self.in_blossom[self.base[u]] {
                            self.base[u] = cur;
                            if !self.used[u] {
                                self.used[u] = true;
                                self.queue.push_back(u);
                            }
                        }
                    }
                } else if self.parent[to] == NIL {
                    self.parent[to] = v;
                    if self.mate[to] == NIL {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NIL {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

/// A maximum matching of `g`.
///
/// Starts from a greedy matching (lowest labels first), then augments from
/// each exposed vertex in increasing label order; the result is
/// deterministic.
pub fn max_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut s = Search::new(g);
    for v in 0..n {
        if s.mate[v] == NIL {
            if let Some(u) = s.adj[v].iter().copied().find(|&u| s.mate[u] == NIL) {
                s.mate[v] = u;
                s.mate[u] = v;
            }
        }
    }
    for v in 0..n {
        if s.mate[v] == NIL {
            if let Some(end) = s.find_path(v) {
                s.augment(end);
            }
        }
    }
    Matching::from_mates(s.mate)
}

/// ν(G).
pub fn matching_number(g: &Graph) -> usize {
    max_matching(g).size()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(g: &Graph) -> usize {
        fn go(edges: &[Edge], used: &mut Vec<bool>) -> usize {
            match edges.split_first() {
                None => 0,
                Some((&(u, v), rest)) => {
                    let skip = go(rest, used);
                    if used[u] || used[v] {
                        return skip;
                    }
                    used[u] = true;
                    used[v] = true;
                    let take = 1 + go(rest, used);
                    used[u] = false;
                    used[v] = false;
                    skip.max(take)
                }
            }
        }
        go(&g.edge_list(), &mut vec![false; g.n()])
    }

    #[test]
    fn named_graphs() {
        assert_eq!(matching_number(&Graph::cycle(4)), 2);
        assert_eq!(matching_number(&Graph::complete(4)), 2);
        assert_eq!(matching_number(&Graph::petersen()), 5);
        assert_eq!(brute_force(&Graph::petersen()), 5);
        assert_eq!(matching_number(&Graph::cycle(5)), 2);
        assert_eq!(matching_number(&Graph::star(9)), 1);
        assert_eq!(matching_number(&Graph::empty(3)), 0);
    }

    #[test]
    fn needs_blossom_contraction() {
        // a triangle with pendant paths: greedy picks 0-1, the augmenting
        // path runs through the odd cycle
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (0, 4), (4, 5)]).unwrap();
        let m = max_matching(&g);
        assert!(m.is_valid_in(&g));
        assert_eq!(m.size(), 3);
        assert_eq!(brute_force(&g), 3);
    }

    #[test]
    fn rematch_keeps_invariants() {
        let g = Graph::path(3);
        let mut m = max_matching(&g);
        assert_eq!(m.edges(), &[(0, 1)]);
        m.rematch(1, 2);
        assert_eq!(m.edges(), &[(1, 2)]);
        assert_eq!(m.mate(0), None);
        assert!(m.is_valid_in(&g));
    }
}
