//! Non-induced subgraph containment by backtracking over pattern vertices.

use crate::graph::{bits, Edge, Graph};

/// A pattern prepared for repeated containment queries.
///
/// Pattern vertices are visited in descending degree order, except that a
/// vertex adjacent to an already placed one is always preferred; this keeps
/// candidate sets small via neighbor-row intersection.
#[derive(Debug, Clone)]
pub struct Pattern {
    graph: Graph,
    order: Vec<usize>,
    /// For each step, positions (in `order`) of earlier neighbors.
    back: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

impl Pattern {
    pub fn new(h: &Graph) -> Self {
        let n = h.n();
        let degree = h.degrees();
        let mut placed = vec![false; n];
        let mut links = vec![0usize; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by(|&a, &b| {
                    (links[a] > 0, degree[a], links[a])
                        .cmp(&(links[b] > 0, degree[b], links[b]))
                        .then(b.cmp(&a))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
            for u in h.neighbors(next) {
                links[u] += 1;
            }
        }
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                h.neighbors(v)
                    .map(|u| position[u])
                    .filter(|&p| p < i)
                    .collect()
            })
            .collect();
        Pattern {
            graph: h.clone(),
            order,
            back,
            degree,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// First embedding found, as `mapping[h_vertex] = g_vertex`.
    ///
    /// Candidates are tried in increasing label order, so the result is
    /// deterministic for fixed inputs.
    pub fn find_in(&self, g: &Graph) -> Option<Vec<usize>> {
        let k = self.order.len();
        if k > g.n() || self.graph.edge_count() > g.edge_count() {
            return None;
        }
        let words = g.words();
        let g_degree = g.degrees();
        let mut image = vec![usize::MAX; k];
        let mut used = vec![0u64; words];
        let mut cands: Vec<Vec<u64>> = vec![vec![0; words]; k];
        let mut cursor = vec![0usize; k];
        let all: Vec<u64> = (0..words)
            .map(|w| {
                let lo = w * 64;
                let hi = (lo + 64).min(g.n());
                if hi <= lo {
                    0
                } else if hi - lo == 64 {
                    u64::MAX
                } else {
                    (1u64 << (hi - lo)) - 1
                }
            })
            .collect();

        let fill = |depth: usize, image: &[usize], used: &[u64], out: &mut Vec<u64>| {
            out.copy_from_slice(&all);
            for &p in &self.back[depth] {
                for (o, r) in out.iter_mut().zip(g.row(image[p])) {
                    *o &= r;
                }
            }
            for (o, u) in out.iter_mut().zip(used) {
                *o &= !u;
            }
        };

        if k == 0 {
            return Some(Vec::new());
        }
        let mut depth = 0;
        fill(0, &image, &used, &mut cands[0]);
        cursor[0] = 0;
        loop {
            let need = self.degree[self.order[depth]];
            let next = bits(&cands[depth])
                .skip_while(|&v| v < cursor[depth])
                .find(|&v| g_degree[v] >= need);
            match next {
                Some(v) => {
                    cursor[depth] = v + 1;
                    image[depth] = v;
                    used[v / 64] |= 1 << (v % 64);
                    if depth + 1 == k {
                        let mut mapping = vec![0; k];
                        for (i, &h) in self.order.iter().enumerate() {
                            mapping[h] = image[i];
                        }
                        return Some(mapping);
                    }
                    depth += 1;
                    fill(depth, &image, &used, &mut cands[depth]);
                    cursor[depth] = 0;
                }
                None => {
                    if depth == 0 {
                        return None;
                    }
                    depth -= 1;
                    let v = image[depth];
                    used[v / 64] &= !(1 << (v % 64));
                }
            }
        }
    }

    /// Edges of the copy of the pattern under `mapping`, normalized `u < v`,
    /// in pattern edge order.
    pub fn image_edges(&self, mapping: &[usize]) -> Vec<Edge> {
        self.graph
            .edges()
            .map(|(a, b)| {
                let (u, v) = (mapping[a], mapping[b]);
                (u.min(v), u.max(v))
            })
            .collect()
    }
}

/// Returns an injective, edge-preserving map `V(h) -> V(g)`, or `None` when
/// `g` has no subgraph isomorphic to `h`.
pub fn contains_subgraph(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    Pattern::new(h).find_in(g)
}

pub fn is_free_of(g: &Graph, h: &Graph) -> bool {
    contains_subgraph(g, h).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_valid(g: &Graph, h: &Graph, m: &[usize]) {
        let mut seen = std::collections::HashSet::new();
        assert!(m.iter().all(|&v| v < g.n() && seen.insert(v)));
        for (a, b) in h.edges() {
            assert!(g.has_edge(m[a], m[b]));
        }
    }

    #[test]
    fn small_cases() {
        assert!(contains_subgraph(&Graph::complete(3), &Graph::path(4)).is_none());
        let m = contains_subgraph(&Graph::complete(4), &Graph::path(4)).unwrap();
        assert_valid(&Graph::complete(4), &Graph::path(4), &m);
        assert!(contains_subgraph(&Graph::cycle(6), &Graph::star(3)).is_none());
        assert!(contains_subgraph(&Graph::petersen(), &Graph::cycle(4)).is_none());
        assert!(contains_subgraph(&Graph::petersen(), &Graph::cycle(5)).is_some());
    }

    #[test]
    fn empty_and_isolated_patterns() {
        assert_eq!(
            contains_subgraph(&Graph::empty(0), &Graph::empty(0)),
            Some(vec![])
        );
        assert!(contains_subgraph(&Graph::empty(2), &Graph::empty(3)).is_none());
        let h = Graph::complete(2).disjoint_union(&Graph::empty(2));
        assert!(contains_subgraph(&Graph::path(3), &h).is_none());
        let m = contains_subgraph(&Graph::path(4), &h).unwrap();
        assert_valid(&Graph::path(4), &h, &m);
    }

    #[test]
    fn deterministic_first_copy() {
        let g = Graph::complete(5);
        let h = Graph::path(3);
        assert_eq!(contains_subgraph(&g, &h), contains_subgraph(&g, &h));
        // center of the path goes first and takes the lowest label
        assert_eq!(contains_subgraph(&g, &h), Some(vec![1, 0, 2]));
    }

    #[test]
    fn wide_host() {
        let g = Graph::star(100).disjoint_union(&Graph::star(100));
        let h = Graph::complete(2).repeat(2);
        let m = contains_subgraph(&g, &h).unwrap();
        assert_valid(&g, &h, &m);
        assert!(contains_subgraph(&Graph::star(100), &h).is_none());
    }
}
