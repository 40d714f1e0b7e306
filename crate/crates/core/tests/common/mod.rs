//! Brute-force reference implementations shared by the integration tests.
//! None of them call into the solver code paths they are compared against.
#![allow(dead_code)]

use hfree::Graph;
use rand::Rng;

/// Tries every injection `V(H) -> V(G)`.
pub fn brute_contains(g: &Graph, h: &Graph) -> bool {
    fn go(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == h.n() {
            return true;
        }
        for v in 0..g.n() {
            if used[v] {
                continue;
            }
            if (0..i).all(|j| !h.has_edge(i, j) || g.has_edge(v, map[j])) {
                used[v] = true;
                map.push(v);
                if go(g, h, map, used) {
                    return true;
                }
                map.pop();
                used[v] = false;
            }
        }
        false
    }
    h.n() <= g.n() && go(g, h, &mut Vec::new(), &mut vec![false; g.n()])
}

fn kept(g: &Graph, edges: &[(usize, usize)], mask: u64) -> Graph {
    let chosen: Vec<_> = (0..edges.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| edges[i])
        .collect();
    g.spanning_subgraph(&chosen)
}

/// `ex(G, H)` over all `2^e(G)` edge subsets, largest first.
pub fn brute_ex(g: &Graph, h: &Graph) -> usize {
    let edges = g.edge_list();
    let e = edges.len();
    for size in (0..=e).rev() {
        let found = (0u64..1 << e)
            .filter(|m| m.count_ones() as usize == size)
            .any(|m| !brute_contains(&kept(g, &edges, m), h));
        if found {
            return size;
        }
    }
    unreachable!("the empty subgraph avoids any pattern with an edge")
}

/// Largest edge subset with every degree within `f`.
pub fn brute_capped(g: &Graph, f: &[usize]) -> usize {
    let edges = g.edge_list();
    (0u64..1 << edges.len())
        .filter(|&m| {
            let mut deg = vec![0; g.n()];
            for (i, &(u, v)) in edges.iter().enumerate() {
                if m >> i & 1 == 1 {
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
            deg.iter().zip(f).all(|(d, b)| d <= b)
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Maximum matching size by include/exclude recursion over the edge list.
pub fn brute_matching(g: &Graph) -> usize {
    fn go(edges: &[(usize, usize)], used: &mut [bool]) -> usize {
        let Some((&(u, v), rest)) = edges.split_first() else {
            return 0;
        };
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
    go(&g.edge_list(), &mut vec![false; g.n()])
}

/// Whether some `⌊n/2⌋`-subset `A` has every edge to its complement.
pub fn brute_balanced_biclique(g: &Graph) -> bool {
    let n = g.n();
    (0u64..1 << n)
        .filter(|a| a.count_ones() as usize == n / 2)
        .any(|a| {
            (0..n).all(|u| (0..n).all(|v| a >> u & 1 == 0 || a >> v & 1 == 1 || g.has_edge(u, v)))
        })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Nonisomorphic graphs on `n` vertices from all labeled graphs, keyed by
/// the smallest adjacency bitmask over all relabelings.
pub fn labeled_classes(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = permutations(n);
    let mut index = vec![vec![0; n]; n];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        index[a][b] = i;
        index[b][a] = i;
    }
    let mut seen = std::collections::BTreeMap::new();
    for mask in 0u64..1 << pairs.len() {
        let key = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &(a, b))| 1u64 << index[p[a]][p[b]])
                    .sum::<u64>()
            })
            .min()
            .unwrap();
        seen.entry(key).or_insert(mask);
    }
    seen.values()
        .map(|&mask| kept(&Graph::complete(n), &pairs, mask))
        .collect()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Random graph on `n >= 2` vertices where every isolated vertex gets one
/// random neighbor.
pub fn random_graph_without_isolated<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = random_graph(rng, n, p);
    for v in 0..n {
        if g.degree(v) == 0 {
            let mut u = rng.gen_range(0..n - 1);
            if u >= v {
                u += 1;
            }
            g.add_edge(u, v);
        }
    }
    g
}

/// Star forests with at least one edge on at most `max_v` vertices,
/// isolated vertices allowed.
pub fn star_forests_up_to(max_v: usize) -> Vec<Graph> {
    fn partitions(total: usize, max_part: usize) -> Vec<Vec<usize>> {
        if total == 0 {
            return vec![Vec::new()];
        }
        (1..=max_part.min(total))
            .rev()
            .flat_map(|first| {
                partitions(total - first, first)
                    .into_iter()
                    .map(move |mut rest| {
                        rest.insert(0, first);
                        rest
                    })
            })
            .collect()
    }
    let mut out = Vec::new();
    for v in 2..=max_v {
        // component sizes: stars of size >= 2 plus isolated vertices
        for parts in partitions(v, v) {
            if parts[0] < 2 {
                continue;
            }
            let g = parts.iter().fold(Graph::empty(0), |acc, &s| {
                let c = if s == 1 {
                    Graph::empty(1)
                } else {
                    Graph::star(s - 1)
                };
                acc.disjoint_union(&c)
            });
            out.push(g);
        }
    }
    out
}
