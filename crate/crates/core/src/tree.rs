//! Trees and star forests: structural classification used by the solvers
//! and the extremal verifier.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("not a tree: {0}")]
    NotATree(&'static str),
    #[error("not a star forest: component {component:?} is not a star")]
    NotStarForest { component: Vec<usize> },
}

/// The center decomposition of a non-star tree of diameter 3 or 4: a center
/// `a`, its neighbors `b_i`, and the leaf sets `C_i` hanging off each `b_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CenterDecomposition {
    pub center: usize,
    /// Branch vertices, ordered so that `leaf_sets[i].len()` is nondecreasing.
    pub branches: Vec<usize>,
    pub leaf_sets: Vec<Vec<usize>>,
}

impl CenterDecomposition {
    /// `p = d(a)`.
    pub fn p(&self) -> usize {
        self.branches.len()
    }

    /// The sorted sizes `γ_1 <= ... <= γ_p`.
    pub fn gammas(&self) -> Vec<usize> {
        self.leaf_sets.iter().map(Vec::len).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeSpec {
    tree: Graph,
    diameter: usize,
    decomposition: Option<CenterDecomposition>,
}

impl TreeSpec {
    pub fn graph(&self) -> &Graph {
        &self.tree
    }

    /// Vertex count `k`.
    pub fn k(&self) -> usize {
        self.tree.n()
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn is_star(&self) -> bool {
        self.diameter <= 2
    }

    /// Present exactly when the diameter is 3 or 4.
    pub fn decomposition(&self) -> Option<&CenterDecomposition> {
        self.decomposition.as_ref()
    }
}

/// A longest path, found by two breadth-first sweeps.
fn longest_path(t: &Graph) -> Vec<usize> {
    let far = |s: usize| {
        let dist = t.distances_from(s);
        (0..t.n())
            .max_by_key(|&v| (dist[v], std::cmp::Reverse(v)))
            .unwrap()
    };
    let a = far(0);
    let b = far(a);
    // walk back from b towards a
    let dist = t.distances_from(a);
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        let d = dist[cur].unwrap();
        cur = t.neighbors(cur).find(|&u| dist[u] == Some(d - 1)).unwrap();
        path.push(cur);
    }
    path
}

pub fn classify_tree(t: &Graph) -> Result<TreeSpec, ShapeError> {
    if t.n() == 0 {
        return Err(ShapeError::NotATree("no vertices"));
    }
    if !t.is_connected() {
        return Err(ShapeError::NotATree("disconnected"));
    }
    if t.edge_count() + 1 != t.n() {
        return Err(ShapeError::NotATree("contains a cycle"));
    }
    let path = longest_path(t);
    let diameter = path.len() - 1;
    let decomposition = match diameter {
        3 | 4 => {
            // A middle vertex of a longest path reaches everything within two
            // steps. With diameter 3 both middle vertices qualify; take the
            // one of larger degree, then the smaller label.
            let center = if diameter == 4 {
                path[2]
            } else {
                let (x, y) = (path[1], path[2]);
                match t.degree(x).cmp(&t.degree(y)) {
                    std::cmp::Ordering::Greater => x,
                    std::cmp::Ordering::Less => y,
                    std::cmp::Ordering::Equal => x.min(y),
                }
            };
            let mut arms: Vec<(usize, Vec<usize>)> = t
                .neighbors(center)
                .map(|b| (b, t.neighbors(b).filter(|&c| c != center).collect()))
                .collect();
            arms.sort_by_key(|(b, c)| (c.len(), *b));
            let (branches, leaf_sets) = arms.into_iter().unzip();
            Some(CenterDecomposition {
                center,
                branches,
                leaf_sets,
            })
        }
        _ => None,
    };
    Ok(TreeSpec {
        tree: t.clone(),
        diameter,
        decomposition,
    })
}

/// A star forest reduced to its leaf counts `t_1 >= ... >= t_r >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarForestSpec {
    leaves: Vec<usize>,
    /// Isolated vertices removed during normalization.
    isolated: usize,
}

impl StarForestSpec {
    /// Builds a normalized spec directly from leaf counts (zeros are
    /// rejected by panicking; they would be isolated vertices).
    pub fn from_leaves(mut leaves: Vec<usize>) -> Self {
        assert!(
            leaves.iter().all(|&t| t >= 1),
            "a star needs at least one leaf"
        );
        leaves.sort_unstable_by(|a, b| b.cmp(a));
        StarForestSpec {
            leaves,
            isolated: 0,
        }
    }

    /// Leaf counts, nonincreasing.
    pub fn leaves(&self) -> &[usize] {
        &self.leaves
    }

    /// Number of star components `r`.
    pub fn r(&self) -> usize {
        self.leaves.len()
    }

    pub fn isolated(&self) -> usize {
        self.isolated
    }

    /// `v(H)` after normalization: `r + sum t_i`.
    pub fn vertices(&self) -> usize {
        self.r() + self.leaves.iter().sum::<usize>()
    }

    /// Vertex count of the pattern as given, isolated vertices included.
    pub fn original_vertices(&self) -> usize {
        self.vertices() + self.isolated
    }

    /// The prefix forest `H_i` made of the `i` largest stars.
    pub fn prefix_graph(&self, i: usize) -> Graph {
        self.leaves[..i].iter().fold(Graph::empty(0), |acc, &t| {
            acc.disjoint_union(&Graph::star(t))
        })
    }

    /// `H' = H - S_1`, dropping the largest star.
    pub fn without_largest(&self) -> StarForestSpec {
        StarForestSpec {
            leaves: self.leaves[1..].to_vec(),
            isolated: 0,
        }
    }

    /// The normalized pattern, without isolated vertices.
    pub fn graph(&self) -> Graph {
        self.prefix_graph(self.r())
    }
}

/// Splits `h` into stars after discarding isolated vertices.
///
/// Stripping isolated vertices preserves `ex(G, H)` only for hosts with at
/// least `v(H)` vertices; [`StarForestSpec::original_vertices`] keeps the
/// threshold available to callers.
pub fn decompose_star_forest(h: &Graph) -> Result<StarForestSpec, ShapeError> {
    let mut leaves = Vec::new();
    let mut isolated = 0;
    for comp in h.components() {
        if comp.len() == 1 {
            isolated += 1;
            continue;
        }
        let edges: usize = comp.iter().map(|&v| h.degree(v)).sum::<usize>() / 2;
        let hub = comp.iter().any(|&v| h.degree(v) == comp.len() - 1);
        if edges + 1 != comp.len() || !hub {
            return Err(ShapeError::NotStarForest { component: comp });
        }
        leaves.push(comp.len() - 1);
    }
    leaves.sort_unstable_by(|a, b| b.cmp(a));
    Ok(StarForestSpec { leaves, isolated })
}

pub fn is_star_forest(h: &Graph) -> bool {
    decompose_star_forest(h).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Spider with the given leg lengths, center 0.
    pub(crate) fn spider(legs: &[usize]) -> Graph {
        let n = 1 + legs.iter().sum::<usize>();
        let mut g = Graph::empty(n);
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                g.add_edge(prev, next);
                prev = next;
                next += 1;
            }
        }
        g
    }

    #[test]
    fn path_on_five_vertices() {
        let spec = classify_tree(&Graph::path(5)).unwrap();
        assert_eq!(spec.diameter(), 4);
        assert!(!spec.is_star());
        let d = spec.decomposition().unwrap();
        assert_eq!(d.center, 2);
        assert_eq!(d.p(), 2);
        assert_eq!(d.gammas(), vec![1, 1]);
        assert_eq!(d.gammas().iter().sum::<usize>(), spec.k() - d.p() - 1);
    }

    #[test]
    fn stars() {
        let spec = classify_tree(&Graph::star(4)).unwrap();
        assert_eq!(spec.diameter(), 2);
        assert!(spec.is_star());
        assert!(spec.decomposition().is_none());
        assert!(classify_tree(&Graph::empty(1)).unwrap().is_star());
        assert!(classify_tree(&Graph::complete(2)).unwrap().is_star());
    }

    #[test]
    fn spider_with_three_long_legs() {
        let spec = classify_tree(&spider(&[2, 2, 2])).unwrap();
        assert_eq!(spec.diameter(), 4);
        let d = spec.decomposition().unwrap();
        assert_eq!(d.center, 0);
        assert_eq!(d.gammas(), vec![1, 1, 1]);
    }

    #[test]
    fn diameter_three_prefers_the_busier_middle() {
        // legs (2,1,1): the hub 0 has degree 3, its long-leg neighbor degree 2
        let spec = classify_tree(&spider(&[2, 1, 1])).unwrap();
        assert_eq!(spec.diameter(), 3);
        let d = spec.decomposition().unwrap();
        assert_eq!(d.center, 0);
        assert_eq!(d.gammas(), vec![0, 0, 1]);
        assert_eq!(d.gammas().iter().sum::<usize>(), spec.k() - d.p() - 1);
    }

    #[test]
    fn rejects_non_trees() {
        assert_eq!(
            classify_tree(&Graph::cycle(4)),
            Err(ShapeError::NotATree("contains a cycle"))
        );
        assert_eq!(
            classify_tree(&Graph::empty(2)),
            Err(ShapeError::NotATree("disconnected"))
        );
        assert!(classify_tree(&Graph::empty(0)).is_err());
    }

    #[test]
    fn star_forest_decomposition() {
        let two_k2 = Graph::complete(2).repeat(2);
        assert_eq!(decompose_star_forest(&two_k2).unwrap().leaves(), &[1, 1]);
        let h = Graph::star(2).disjoint_union(&Graph::star(3));
        let spec = decompose_star_forest(&h).unwrap();
        assert_eq!(spec.leaves(), &[3, 2]);
        assert_eq!(spec.vertices(), 7);
        let err = decompose_star_forest(&Graph::path(4)).unwrap_err();
        assert_eq!(
            err,
            ShapeError::NotStarForest {
                component: vec![0, 1, 2, 3]
            }
        );
        assert!(decompose_star_forest(&Graph::complete(3)).is_err());
    }

    #[test]
    fn isolated_vertices_are_stripped_and_counted() {
        let h = Graph::complete(2).disjoint_union(&Graph::empty(2));
        let spec = decompose_star_forest(&h).unwrap();
        assert_eq!(spec.leaves(), &[1]);
        assert_eq!(spec.isolated(), 2);
        assert_eq!(spec.original_vertices(), 4);
        assert_eq!(spec.graph(), Graph::complete(2));
    }

    #[test]
    fn prefix_forests() {
        let spec = StarForestSpec::from_leaves(vec![1, 3, 2]);
        assert_eq!(spec.leaves(), &[3, 2, 1]);
        assert_eq!(spec.prefix_graph(0).n(), 0);
        assert_eq!(spec.prefix_graph(2).edge_count(), 5);
        assert_eq!(spec.without_largest().leaves(), &[2, 1]);
    }
}
