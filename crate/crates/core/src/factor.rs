//! Maximum subgraphs under per-vertex degree caps, computed through a
//! matching gadget.
//!
//! Each edge `e = xy` of `G` becomes an edge between two fresh vertices
//! `e_x` and `e_y`; each vertex `x` receives `d(x) - f(x)` slack vertices
//! joined to every `e_x` with `x ∈ e`. A maximum matching of the gadget then
//! has size `m + Σ (d(x) - f(x))`, where `m` is the largest edge count of a
//! spanning subgraph with `d_F(x) <= f(x)`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::matching::{max_matching, Matching};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("budget has {got} entries for a graph on {n} vertices")]
    LengthMismatch { got: usize, n: usize },
    #[error("budget f({vertex}) = {value} exceeds degree {degree}; normalize first")]
    Unnormalized {
        vertex: usize,
        value: usize,
        degree: usize,
    },
}

/// Upper degree bounds `f: V -> {0, .., n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeBudget(Vec<usize>);

impl DegreeBudget {
    pub fn new(values: Vec<usize>) -> Self {
        DegreeBudget(values)
    }

    pub fn constant(n: usize, value: usize) -> Self {
        DegreeBudget(vec![value; n])
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, v: usize) -> usize {
        self.0[v]
    }

    /// Clamps every entry to the vertex degree; `f(v) > d(v)` never binds.
    pub fn normalized(&self, g: &Graph) -> Result<DegreeBudget, FactorError> {
        self.check_len(g)?;
        Ok(DegreeBudget(
            self.0
                .iter()
                .enumerate()
                .map(|(v, &f)| f.min(g.degree(v)))
                .collect(),
        ))
    }

    fn check_len(&self, g: &Graph) -> Result<(), FactorError> {
        if self.0.len() != g.n() {
            return Err(FactorError::LengthMismatch {
                got: self.0.len(),
                n: g.n(),
            });
        }
        Ok(())
    }
}

/// Correspondence between `G` and its gadget graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetMap {
    /// Edges of `G` in lexicographic order; index `j` owns gadget vertices
    /// `2j` (the end at the smaller vertex) and `2j + 1`.
    pub edges: Vec<Edge>,
    /// `slack[x]` lists the gadget vertices `x_1, .., x_{d(x) - f(x)}`.
    pub slack: Vec<Vec<usize>>,
    /// For each vertex `x`, the gadget vertices `e_x` of its incident edges,
    /// in edge order.
    pub ends: Vec<Vec<usize>>,
}

impl GadgetMap {
    /// Gadget vertex `e_x` for edge index `j` at endpoint `x`.
    pub fn end(&self, j: usize, x: usize) -> usize {
        let (u, v) = self.edges[j];
        debug_assert!(x == u || x == v);
        if x == u {
            2 * j
        } else {
            2 * j + 1
        }
    }

    pub fn slack_total(&self) -> usize {
        self.slack.iter().map(Vec::len).sum()
    }

    /// Edge index and owning vertex of an edge-end gadget vertex.
    pub fn owner(&self, gadget_vertex: usize) -> Option<(usize, usize)> {
        let j = gadget_vertex / 2;
        let (u, v) = *self.edges.get(j)?;
        Some((
            j,
            if gadget_vertex.is_multiple_of(2) {
                u
            } else {
                v
            },
        ))
    }
}

/// Builds the gadget graph for a normalized budget.
pub fn build_gadget(g: &Graph, f: &DegreeBudget) -> Result<(Graph, GadgetMap), FactorError> {
    f.check_len(g)?;
    for v in 0..g.n() {
        let (value, degree) = (f.get(v), g.degree(v));
        if value > degree {
            return Err(FactorError::Unnormalized {
                vertex: v,
                value,
                degree,
            });
        }
    }
    let edges = g.edge_list();
    let mut next = 2 * edges.len();
    let slack: Vec<Vec<usize>> = (0..g.n())
        .map(|x| {
            let k = g.degree(x) - f.get(x);
            let ids = (next..next + k).collect();
            next += k;
            ids
        })
        .collect();
    let mut ends = vec![Vec::new(); g.n()];
    for (j, &(u, v)) in edges.iter().enumerate() {
        ends[u].push(2 * j);
        ends[v].push(2 * j + 1);
    }
    let mut gadget = Graph::empty(next);
    for j in 0..edges.len() {
        gadget.add_edge(2 * j, 2 * j + 1);
    }
    for x in 0..g.n() {
        for &s in &slack[x] {
            for &e in &ends[x] {
                gadget.add_edge(s, e);
            }
        }
    }
    Ok((gadget, GadgetMap { edges, slack, ends }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorResult {
    /// Edges of the optimal subgraph `F`.
    pub edges: Vec<Edge>,
    /// `m = e(F)`.
    pub m: usize,
    /// ν of the gadget graph.
    pub gadget_matching: usize,
    /// `Σ (d(x) - f(x))` under the normalized budget.
    pub slack_total: usize,
    pub gadget_vertices: usize,
}

/// The largest spanning subgraph `F` of `g` with `d_F(v) <= f(v)`.
///
/// Budgets above the degree are clamped first. Panics if the matching
/// identity `ν(G') = m + Σ (d(x) - f(x))` fails, which would be a bug.
pub fn max_degree_constrained_subgraph(
    g: &Graph,
    f: &DegreeBudget,
) -> Result<FactorResult, FactorError> {
    let f = f.normalized(g)?;
    let (gadget, map) = build_gadget(g, &f)?;
    let mut matching = max_matching(&gadget);
    let nu = matching.size();
    saturate_slack(&mut matching, &map);
    assert_eq!(
        matching.size(),
        nu,
        "slack repair changed the matching size"
    );

    let edges: Vec<Edge> = map
        .edges
        .iter()
        .enumerate()
        .filter(|&(j, _)| matching.mate(2 * j) == Some(2 * j + 1))
        .map(|(_, &e)| e)
        .collect();
    let slack_total = map.slack_total();
    assert_eq!(
        nu,
        edges.len() + slack_total,
        "gadget matching identity violated"
    );
    debug_assert!({
        let mut deg = vec![0; g.n()];
        for &(u, v) in &edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        (0..g.n()).all(|v| deg[v] <= f.get(v))
    });
    Ok(FactorResult {
        m: edges.len(),
        edges,
        gadget_matching: nu,
        slack_total,
        gadget_vertices: gadget.n(),
    })
}

/// Makes every slack vertex covered without shrinking the matching: an
/// exposed `x_i` takes over some `e_x` currently matched to its twin `e_y`.
/// Vertices and slack are processed left to right; the first eligible edge
/// end is used.
fn saturate_slack(matching: &mut Matching, map: &GadgetMap) {
    for (x, slack) in map.slack.iter().enumerate() {
        for &s in slack {
            if matching.mate(s).is_some() {
                continue;
            }
            // In a maximum matching every e_x is covered while x_i is exposed,
            // and at most |slack| - 1 of them go to slack vertices, so some
            // e_x is matched across its own edge.
            let e_x = map.ends[x]
                .iter()
                .copied()
                .find(|&e| matching.mate(e) == Some(e ^ 1))
                .expect("maximum matching leaves an e_x-e_y edge to swap");
            matching.rematch(e_x, s);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(g: &Graph, f: &[usize]) -> usize {
        let edges = g.edge_list();
        (0u64..1 << edges.len())
            .filter(|mask| {
                let mut deg = vec![0; g.n()];
                for (i, &(u, v)) in edges.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        deg[u] += 1;
                        deg[v] += 1;
                    }
                }
                (0..g.n()).all(|v| deg[v] <= f[v])
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn gadget_of_an_edge_with_full_budget() {
        let g = Graph::complete(2);
        let (gadget, map) = build_gadget(&g, &DegreeBudget::constant(2, 1)).unwrap();
        assert_eq!((gadget.n(), gadget.edge_count()), (2, 1));
        assert_eq!(map.slack_total(), 0);
    }

    #[test]
    fn gadget_of_an_edge_with_zero_budget() {
        let g = Graph::complete(2);
        let (gadget, map) = build_gadget(&g, &DegreeBudget::constant(2, 0)).unwrap();
        assert_eq!((gadget.n(), gadget.edge_count()), (4, 3));
        assert_eq!(map.slack, vec![vec![2], vec![3]]);
        assert!(gadget.has_edge(2, 0) && gadget.has_edge(3, 1));
    }

    #[test]
    fn gadget_of_a_path() {
        let g = Graph::path(3);
        let (gadget, map) = build_gadget(&g, &DegreeBudget::constant(3, 1)).unwrap();
        assert_eq!((gadget.n(), gadget.edge_count()), (5, 4));
        assert_eq!(map.slack, vec![vec![], vec![4], vec![]]);
        // e_1 for edges 01 and 12 are gadget vertices 1 and 2
        assert_eq!(map.ends[1], vec![1, 2]);
        assert_eq!(map.owner(2), Some((1, 1)));
    }

    #[test]
    fn gadget_counts_match_formula() {
        let g = Graph::petersen();
        let f = DegreeBudget::new(vec![0, 1, 2, 3, 0, 1, 2, 3, 1, 1]);
        let (gadget, map) = build_gadget(&g, &f).unwrap();
        let slack: usize = (0..10).map(|x| 3 - f.get(x)).sum();
        assert_eq!(gadget.n(), 2 * g.edge_count() + slack);
        assert_eq!(
            gadget.edge_count(),
            g.edge_count() + (0..10).map(|x| 3 * (3 - f.get(x))).sum::<usize>()
        );
        assert_eq!(map.slack_total(), slack);
    }

    #[test]
    fn unnormalized_budget_is_rejected() {
        let err = build_gadget(&Graph::path(3), &DegreeBudget::constant(3, 2)).unwrap_err();
        assert_eq!(
            err,
            FactorError::Unnormalized {
                vertex: 0,
                value: 2,
                degree: 1
            }
        );
        let err = build_gadget(&Graph::path(3), &DegreeBudget::constant(2, 0)).unwrap_err();
        assert_eq!(err, FactorError::LengthMismatch { got: 2, n: 3 });
    }

    #[test]
    fn small_optima() {
        let k4 = Graph::complete(4);
        let r = max_degree_constrained_subgraph(&k4, &DegreeBudget::constant(4, 2)).unwrap();
        assert_eq!(r.m, 4);
        assert_eq!(brute_force(&k4, &[2; 4]), 4);
        let cycle = k4.spanning_subgraph(&r.edges);
        assert!(cycle.degrees().iter().all(|&d| d == 2));

        let r = max_degree_constrained_subgraph(&k4, &DegreeBudget::constant(4, 1)).unwrap();
        assert_eq!(r.m, 2);

        let star = Graph::star(5);
        let mut f = vec![1; 6];
        f[0] = 3;
        let r = max_degree_constrained_subgraph(&star, &DegreeBudget::new(f)).unwrap();
        assert_eq!(r.m, 3);
        assert_eq!(r.gadget_matching, r.m + r.slack_total);
    }

    #[test]
    fn oversized_budget_is_clamped() {
        let g = Graph::cycle(5);
        let r = max_degree_constrained_subgraph(&g, &DegreeBudget::constant(5, 9)).unwrap();
        assert_eq!(r.m, 5);
        assert_eq!(r.slack_total, 0);
    }
}
