//! Hardness-reduction constructions with oracle validators, and two
//! polynomial decision procedures used alongside them.

use serde::Serialize;
use thiserror::Error;

use crate::canon::{are_isomorphic, canonical_form};
use crate::graph::{complement_components, Graph};
use crate::oracle::{rem_exact, OracleError, SearchLimits};
use crate::tree::{classify_tree, ShapeError, TreeSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

fn precondition(msg: impl Into<String>) -> ReductionError {
    ReductionError::Precondition(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionKind {
    Pendant,
    Pad,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    /// Each original vertex `v` gets `leaf_set_size` private leaves,
    /// numbered `n + v * leaf_set_size ..`.
    Pendant {
        tree: TreeSpec,
        core: TreeSpec,
        leaf_set_size: usize,
    },
    /// `multiplicity` components of `pattern` are isomorphic to `dominant`;
    /// each remaining component was added `copies` times.
    Pad {
        pattern: Graph,
        dominant: Graph,
        multiplicity: usize,
        padding: Vec<Graph>,
        copies: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    pub source: Graph,
    pub constructed: Graph,
    pub construction: Construction,
}

/// Both sides of an identity claimed by a reduction, computed by the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

impl ReductionInstance {
    pub fn kind(&self) -> ReductionKind {
        match self.construction {
            Construction::Pendant { .. } => ReductionKind::Pendant,
            Construction::Pad { .. } => ReductionKind::Pad,
        }
    }

    /// Evaluates the identity attached to the construction with the exact
    /// oracle on both sides.
    pub fn validate(&self, limits: SearchLimits) -> Result<IdentityCheck, ReductionError> {
        match &self.construction {
            Construction::Pendant { tree, core, .. } => {
                let lhs = rem_exact(&self.source, core.graph(), limits)?.rem;
                let rhs = rem_exact(&self.constructed, tree.graph(), limits)?.rem;
                Ok(IdentityCheck {
                    identity: "rem_T0(G) = rem_T(G')".into(),
                    lhs,
                    rhs,
                    holds: lhs == rhs,
                })
            }
            Construction::Pad {
                pattern,
                dominant,
                multiplicity,
                ..
            } => {
                let lhs = rem_exact(&self.constructed, pattern, limits)?.ex;
                let k_t1 = dominant.repeat(*multiplicity);
                let inner = rem_exact(&self.source, &k_t1, limits)?.ex;
                let rhs = self.constructed.edge_count() - self.source.edge_count() + inner;
                Ok(IdentityCheck {
                    identity: "ex(G', H) = e(G') - e(G) + ex(G, k T1)".into(),
                    lhs,
                    rhs,
                    holds: lhs == rhs,
                })
            }
        }
    }
}

/// The tree left after deleting every leaf.
pub fn strip_leaves(t: &TreeSpec) -> Result<TreeSpec, ReductionError> {
    let g = t.graph();
    if g.n() <= 2 {
        return Err(precondition(format!(
            "cannot strip leaves of a tree on {} vertices",
            g.n()
        )));
    }
    let inner: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 1).collect();
    Ok(classify_tree(&g.induced(&inner))?)
}

/// Attaches `binom(n, 2) + v(T)` private pendant vertices to every vertex.
pub fn pendant_expand(g: &Graph, t: &TreeSpec) -> Result<ReductionInstance, ReductionError> {
    if t.diameter() < 5 {
        return Err(precondition(format!(
            "tree has diameter {}; pendant expansion needs diameter at least 5",
            t.diameter()
        )));
    }
    let core = strip_leaves(t)?;
    assert!(
        core.diameter() >= 3,
        "stripped tree of diameter >= 5 must have diameter >= 3"
    );
    let n = g.n();
    let leaf_set_size = n * n.saturating_sub(1) / 2 + t.k();
    let mut out = Graph::empty(n + n * leaf_set_size);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for v in 0..n {
        for j in 0..leaf_set_size {
            out.add_edge(v, n + v * leaf_set_size + j);
        }
    }
    Ok(ReductionInstance {
        source: g.clone(),
        constructed: out,
        construction: Construction::Pendant {
            tree: t.clone(),
            core,
            leaf_set_size,
        },
    })
}

/// Adds `n^2` disjoint copies of every component of `h` not isomorphic to
/// the dominant component `T_1`: the non-star component with most edges,
/// ties broken by the smallest canonical form.
pub fn disjoint_pad(g: &Graph, h: &Graph) -> Result<ReductionInstance, ReductionError> {
    if !h.is_forest() {
        return Err(precondition("pattern is not a forest"));
    }
    let components: Vec<Graph> = h.components().iter().map(|c| h.induced(c)).collect();
    let is_star = |c: &Graph| c.n() <= 2 || classify_tree(c).map(|t| t.is_star()).unwrap_or(false);
    let dominant = components
        .iter()
        .filter(|c| !is_star(c))
        .map(|c| (c.edge_count(), canonical_form(c)))
        .min_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)))
        .map(|(_, c)| c)
        .ok_or_else(|| precondition("every component of the pattern is a star"))?;
    let (same, padding): (Vec<Graph>, Vec<Graph>) = components
        .into_iter()
        .partition(|c| are_isomorphic(c, &dominant));
    let copies = g.n() * g.n();
    let constructed = padding
        .iter()
        .fold(g.clone(), |acc, c| acc.disjoint_union(&c.repeat(copies)));
    Ok(ReductionInstance {
        source: g.clone(),
        constructed,
        construction: Construction::Pad {
            pattern: h.clone(),
            dominant,
            multiplicity: same.len(),
            padding,
            copies,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnionReport {
    pub k: usize,
    /// `ex(kG, kC)`.
    pub whole: usize,
    /// `ex((k-1)G, kC)`.
    pub rest: usize,
    /// `ex(G, C)`.
    pub single: usize,
    pub holds: bool,
}

/// Checks `ex(kG, kC) = ex((k-1)G, kC) + ex(G, C)` with the oracle.
pub fn verify_union_identity(
    g: &Graph,
    c: &Graph,
    k: usize,
    limits: SearchLimits,
) -> Result<UnionReport, ReductionError> {
    if !c.is_connected() || c.n() == 0 {
        return Err(precondition("C must be connected"));
    }
    if k < 2 {
        return Err(precondition(format!("k = {k}; the identity needs k >= 2")));
    }
    let kc = c.repeat(k);
    let whole = rem_exact(&g.repeat(k), &kc, limits)?.ex;
    let rest = rem_exact(&g.repeat(k - 1), &kc, limits)?.ex;
    let single = rem_exact(g, c, limits)?.ex;
    Ok(UnionReport {
        k,
        whole,
        rest,
        single,
        holds: whole == rest + single,
    })
}

/// Whether the vertex set splits into cliques of size `q`.
pub fn has_clique_factor(g: &Graph, q: usize) -> Result<bool, ReductionError> {
    if q == 0 || !g.n().is_multiple_of(q) {
        return Err(precondition(format!(
            "q = {q} does not divide n = {}",
            g.n()
        )));
    }
    fn cover(g: &Graph, q: usize, free: &mut Vec<bool>) -> bool {
        let Some(v) = free.iter().position(|&f| f) else {
            return true;
        };
        free[v] = false;
        let cands: Vec<usize> = g.neighbors(v).filter(|&u| free[u]).collect();
        let mut clique = vec![v];
        let found = extend(g, q, free, &cands, 0, &mut clique);
        free[v] = true;
        found
    }
    fn extend(
        g: &Graph,
        q: usize,
        free: &mut Vec<bool>,
        cands: &[usize],
        from: usize,
        clique: &mut Vec<usize>,
    ) -> bool {
        if clique.len() == q {
            return cover(g, q, free);
        }
        for i in from..cands.len() {
            let u = cands[i];
            if clique.iter().all(|&w| g.has_edge(u, w)) {
                free[u] = false;
                clique.push(u);
                let found = extend(g, q, free, cands, i + 1, clique);
                clique.pop();
                free[u] = true;
                if found {
                    return true;
                }
            }
        }
        false
    }
    Ok(cover(g, q, &mut vec![true; g.n()]))
}

/// Whether `K_{⌊n/2⌋, ⌈n/2⌉}` is a subgraph of `g`.
///
/// A side `A` works exactly when no complement edge leaves `A`, so `A` is a
/// union of complement components; a subset-sum over their sizes decides it.
pub fn contains_balanced_biclique(g: &Graph) -> bool {
    let target = g.n() / 2;
    let mut reach = vec![0u64; target / 64 + 1];
    reach[0] = 1;
    for a in complement_components(g) {
        shift_or(&mut reach, a);
    }
    reach[target / 64] >> (target % 64) & 1 == 1
}

/// `set |= set << by`, truncated to the current width.
fn shift_or(set: &mut [u64], by: usize) {
    let (words, bits) = (by / 64, by % 64);
    for i in (0..set.len()).rev() {
        let mut moved = 0;
        if i >= words {
            moved = set[i - words] << bits;
            if bits > 0 && i > words {
                moved |= set[i - words - 1] >> (64 - bits);
            }
        }
        set[i] |= moved;
    }
}
