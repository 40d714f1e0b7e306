//! Exact `ex(G, H)` for star forests `H` in polynomial time.
//!
//! The dispatcher follows the induction on the number of stars `r`:
//! a single star is a degree-capped subgraph problem; hosts of small maximum
//! degree go through an enumeration of small "heavy" vertex sets `U` with
//! their incident edges; hosts of large maximum degree either cap every
//! degree below `t_1` or give one vertex all its edges and recurse on the
//! remaining stars.

use std::collections::HashMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::factor::{max_degree_constrained_subgraph, DegreeBudget};
use crate::graph::{Edge, Graph};
use crate::subgraph::Pattern;
use crate::tree::{decompose_star_forest, ShapeError, StarForestSpec};

/// Default ceiling on the estimated number of `(U, F')` pairs.
pub const DEFAULT_ENUMERATION_CEILING: u64 = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StarForestError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error("enumeration estimate {estimate} exceeds the ceiling {ceiling}")]
    EnumerationTooLarge { estimate: u64, ceiling: u64 },
    #[error("maximum degree {max_degree} exceeds the cap {cap}")]
    DegreeAboveCap { max_degree: usize, cap: usize },
    #[error("pattern has no edges and fits in the host graph; no subgraph avoids it")]
    Unremovable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarForestOptions {
    /// Refuse bounded-degree enumerations whose estimated size exceeds this.
    pub ceiling: u64,
    /// Keep every accepted `(U, F')` pair in [`BoundedDegreeRun::candidates`].
    pub record_candidates: bool,
    /// Return `e(G)` at once when the host is already `H`-free. Turning this
    /// off forces every instance through the general branches.
    pub free_check: bool,
}

impl Default for StarForestOptions {
    fn default() -> Self {
        StarForestOptions {
            ceiling: DEFAULT_ENUMERATION_CEILING,
            record_candidates: false,
            free_check: true,
        }
    }
}

/// `D(H) = d(d+1)v(H) + d` with `d = v(H) - 1`.
pub fn threshold_d(h: &StarForestSpec) -> usize {
    let v = h.vertices();
    let d = v.saturating_sub(1);
    d * (d + 1) * v + d
}

/// A pair `(U, F')` that passed the freeness and degree checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub u: Vec<usize>,
    pub f_prime: Vec<Edge>,
    /// Largest `i < r` with `H_i ⊆ F'`.
    pub i: usize,
    /// `M(U, F') = e(F') + m`.
    pub m: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundedDegreeRun {
    pub cap: usize,
    /// Largest `|U|` enumerated: `min((C + 1) v(H), n)`.
    pub u_limit: usize,
    pub ex: usize,
    pub best: Candidate,
    /// Edges of `F''` for the best candidate.
    pub f_second: Vec<Edge>,
    #[serde(skip)]
    pub witness: Graph,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub candidates: Vec<Candidate>,
    pub subsets: u64,
    pub subgraphs: u64,
    pub accepted: u64,
    pub factor_calls: u64,
}

/// Upper bound on the `(U, F')` pairs visited: subsets of size `j` touch at
/// most `j * Δ` edges.
fn enumeration_estimate(g: &Graph, u_limit: usize) -> u64 {
    let n = g.n() as u128;
    let e = g.edge_count() as u128;
    let delta = g.max_degree() as u128;
    let mut binom: u128 = 1;
    let mut total: u128 = 0;
    for j in 0..=u_limit as u128 {
        if let Some(next) = binom.saturating_mul(n + 1 - j).checked_div(j) {
            binom = next;
        }
        let exp = e.min(j * delta).min(127) as u32;
        total = total.saturating_add(binom.saturating_mul(1u128 << exp));
    }
    total.min(u64::MAX as u128) as u64
}

struct PerSubset {
    best: Option<(Candidate, Vec<Edge>)>,
    candidates: Vec<Candidate>,
    subgraphs: u64,
    accepted: u64,
    factor_calls: u64,
}

struct SubsetSearch<'a> {
    g: &'a Graph,
    spec: &'a StarForestSpec,
    full: &'a Pattern,
    prefixes: &'a [Pattern],
    in_u: Vec<bool>,
    touching: Vec<Edge>,
    inner: Graph,
    f_prime: Graph,
    chosen: Vec<Edge>,
    cache: HashMap<Vec<usize>, (usize, Vec<Edge>)>,
    record: bool,
    out: PerSubset,
}

impl SubsetSearch<'_> {
    fn visit(&mut self, idx: usize) {
        if idx == self.touching.len() {
            self.leaf();
            return;
        }
        let (a, b) = self.touching[idx];
        self.visit(idx + 1);
        self.f_prime.add_edge(a, b);
        // both checks are monotone in F', so a failing prefix kills the subtree
        let t1 = self.spec.leaves()[0];
        let degree_ok = [a, b]
            .iter()
            .all(|&w| self.in_u[w] || self.f_prime.degree(w) < t1);
        if degree_ok && self.full.find_in(&self.f_prime).is_none() {
            self.chosen.push((a, b));
            self.visit(idx + 1);
            self.chosen.pop();
        }
        self.f_prime.remove_edge(a, b);
    }

    fn leaf(&mut self) {
        self.out.subgraphs += 1;
        let r = self.spec.r();
        let mut i = 0;
        while i + 1 < r && self.prefixes[i].find_in(&self.f_prime).is_some() {
            i += 1;
        }
        let cap = self.spec.leaves()[i] - 1;
        let n = self.g.n();
        if (0..n).any(|w| !self.in_u[w] && self.f_prime.degree(w) > cap) {
            return;
        }
        self.out.accepted += 1;
        let f: Vec<usize> = (0..n)
            .map(|w| {
                if self.in_u[w] {
                    0
                } else {
                    cap - self.f_prime.degree(w)
                }
            })
            .collect();
        let (m, f_second) = match self.cache.get(&f) {
            Some(hit) => hit.clone(),
            None => {
                self.out.factor_calls += 1;
                let res =
                    max_degree_constrained_subgraph(&self.inner, &DegreeBudget::new(f.clone()))
                        .expect("budget has one entry per vertex");
                let value = (res.m, res.edges);
                self.cache.insert(f, value.clone());
                value
            }
        };
        let candidate = Candidate {
            u: (0..n).filter(|&v| self.in_u[v]).collect(),
            f_prime: self.chosen.iter().copied().sorted().collect(),
            i,
            m: self.chosen.len() + m,
        };
        if self
            .out
            .best
            .as_ref()
            .is_none_or(|(b, _)| candidate.m > b.m)
        {
            self.out.best = Some((candidate.clone(), f_second));
        }
        if self.record {
            self.out.candidates.push(candidate);
        }
    }
}

/// Exact `ex(G, H)` for a host of maximum degree at most `cap`, by the
/// `(U, F')` enumeration.
pub fn ex_bounded_degree(
    g: &Graph,
    h: &StarForestSpec,
    cap: usize,
) -> Result<BoundedDegreeRun, StarForestError> {
    ex_bounded_degree_with(g, h, cap, &StarForestOptions::default())
}

pub fn ex_bounded_degree_with(
    g: &Graph,
    h: &StarForestSpec,
    cap: usize,
    opts: &StarForestOptions,
) -> Result<BoundedDegreeRun, StarForestError> {
    if h.r() == 0 {
        return Err(StarForestError::Unremovable);
    }
    if g.max_degree() > cap {
        return Err(StarForestError::DegreeAboveCap {
            max_degree: g.max_degree(),
            cap,
        });
    }
    let n = g.n();
    let u_limit = (cap + 1).saturating_mul(h.vertices()).min(n);
    let estimate = enumeration_estimate(g, u_limit);
    if estimate > opts.ceiling {
        return Err(StarForestError::EnumerationTooLarge {
            estimate,
            ceiling: opts.ceiling,
        });
    }
    let full = Pattern::new(&h.graph());
    let prefixes: Vec<Pattern> = (1..h.r())
        .map(|i| Pattern::new(&h.prefix_graph(i)))
        .collect();
    let subsets: Vec<Vec<usize>> = (0..=u_limit).flat_map(|j| (0..n).combinations(j)).collect();

    let per_subset: Vec<PerSubset> = subsets
        .par_iter()
        .map(|u| {
            let mut in_u = vec![false; n];
            for &v in u {
                in_u[v] = true;
            }
            let touching: Vec<Edge> = g.edges().filter(|&(a, b)| in_u[a] || in_u[b]).collect();
            let outside: Vec<Edge> = g.edges().filter(|&(a, b)| !in_u[a] && !in_u[b]).collect();
            let mut search = SubsetSearch {
                g,
                spec: h,
                full: &full,
                prefixes: &prefixes,
                in_u,
                touching,
                inner: g.spanning_subgraph(&outside),
                f_prime: Graph::empty(n),
                chosen: Vec::new(),
                cache: HashMap::new(),
                record: opts.record_candidates,
                out: PerSubset {
                    best: None,
                    candidates: Vec::new(),
                    subgraphs: 0,
                    accepted: 0,
                    factor_calls: 0,
                },
            };
            search.visit(0);
            search.out
        })
        .collect();

    let mut best: Option<(Candidate, Vec<Edge>)> = None;
    let mut candidates = Vec::new();
    let (mut subgraphs, mut accepted, mut factor_calls) = (0, 0, 0);
    for out in per_subset {
        subgraphs += out.subgraphs;
        accepted += out.accepted;
        factor_calls += out.factor_calls;
        candidates.extend(out.candidates);
        if let Some((c, f2)) = out.best {
            if best.as_ref().is_none_or(|(b, _)| c.m > b.m) {
                best = Some((c, f2));
            }
        }
    }
    // U = ∅ with F' empty always passes, so some candidate exists
    let (best, f_second) = best.expect("the empty pair is always a candidate");
    let mut witness = g.spanning_subgraph(&best.f_prime);
    for &(a, b) in &f_second {
        witness.add_edge(a, b);
    }
    Ok(BoundedDegreeRun {
        cap,
        u_limit,
        ex: best.m,
        best,
        f_second,
        witness,
        candidates,
        subsets: subsets.len() as u64,
        subgraphs,
        accepted,
        factor_calls,
    })
}

/// One dispatch decision of the solver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "branch", rename_all = "kebab-case")]
pub enum BranchStep {
    /// The host has fewer vertices than the pattern as given.
    TooSmall { n: usize, pattern_vertices: usize },
    /// The host contains no copy of the pattern.
    AlreadyFree { edges: usize },
    /// A single star: every degree capped at `t_1 - 1`.
    Base { leaves: Vec<usize>, m: usize },
    BoundedDegree {
        leaves: Vec<usize>,
        max_degree: usize,
        threshold: usize,
        u_limit: usize,
        subsets: u64,
        subgraphs: u64,
        accepted: u64,
        ex: usize,
    },
    /// `max{M_1, M_2}`; `vertex` is the smallest `u` attaining `M_2`.
    HighDegree {
        leaves: Vec<usize>,
        max_degree: usize,
        threshold: usize,
        m1: usize,
        m2: usize,
        vertex: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarForestResult {
    pub ex: usize,
    pub rem: usize,
    #[serde(skip)]
    pub witness: Graph,
    /// Steps from the top-level call down the branch that produced the
    /// witness.
    pub branch_trace: Vec<BranchStep>,
}

/// Exact `ex(G, H)` for a star forest `H`, with an `H`-free witness.
pub fn ex_star_forest(g: &Graph, h: &Graph) -> Result<StarForestResult, StarForestError> {
    ex_star_forest_with(g, h, &StarForestOptions::default())
}

pub fn ex_star_forest_with(
    g: &Graph,
    h: &Graph,
    opts: &StarForestOptions,
) -> Result<StarForestResult, StarForestError> {
    let spec = decompose_star_forest(h)?;
    if g.n() < h.n() {
        return Ok(StarForestResult {
            ex: g.edge_count(),
            rem: 0,
            witness: g.clone(),
            branch_trace: vec![BranchStep::TooSmall {
                n: g.n(),
                pattern_vertices: h.n(),
            }],
        });
    }
    ex_star_forest_spec(g, &spec, opts)
}

/// As [`ex_star_forest_with`] for a normalized pattern; isolated vertices
/// recorded in `spec` are ignored.
pub fn ex_star_forest_spec(
    g: &Graph,
    spec: &StarForestSpec,
    opts: &StarForestOptions,
) -> Result<StarForestResult, StarForestError> {
    let (witness, branch_trace) = solve(g, spec, opts)?;
    let ex = witness.edge_count();
    Ok(StarForestResult {
        ex,
        rem: g.edge_count() - ex,
        witness,
        branch_trace,
    })
}

fn cap_all(g: &Graph, t: usize) -> Graph {
    let r = max_degree_constrained_subgraph(g, &DegreeBudget::constant(g.n(), t - 1))
        .expect("budget length matches");
    g.spanning_subgraph(&r.edges)
}

fn solve(
    g: &Graph,
    spec: &StarForestSpec,
    opts: &StarForestOptions,
) -> Result<(Graph, Vec<BranchStep>), StarForestError> {
    let leaves = spec.leaves().to_vec();
    if spec.r() > 0 && opts.free_check && Pattern::new(&spec.graph()).find_in(g).is_none() {
        let edges = g.edge_count();
        return Ok((g.clone(), vec![BranchStep::AlreadyFree { edges }]));
    }
    match spec.r() {
        0 => return Err(StarForestError::Unremovable),
        1 => {
            let witness = cap_all(g, leaves[0]);
            let m = witness.edge_count();
            return Ok((witness, vec![BranchStep::Base { leaves, m }]));
        }
        _ => {}
    }
    let threshold = threshold_d(spec);
    let max_degree = g.max_degree();
    if max_degree < threshold {
        let run = ex_bounded_degree_with(g, spec, threshold, opts)?;
        let step = BranchStep::BoundedDegree {
            leaves,
            max_degree,
            threshold,
            u_limit: run.u_limit,
            subsets: run.subsets,
            subgraphs: run.subgraphs,
            accepted: run.accepted,
            ex: run.ex,
        };
        return Ok((run.witness, vec![step]));
    }

    let first = cap_all(g, leaves[0]);
    let rest = spec.without_largest();
    let per_vertex: Vec<(Graph, Vec<BranchStep>)> = (0..g.n())
        .into_par_iter()
        .map(|u| {
            let mut minus = g.clone();
            minus.isolate(u);
            let (mut w, trace) = solve(&minus, &rest, opts)?;
            for v in g.neighbors(u) {
                w.add_edge(u, v);
            }
            Ok((w, trace))
        })
        .collect::<Result<_, StarForestError>>()?;
    let (vertex, (second, sub_trace)) = per_vertex
        .into_iter()
        .enumerate()
        .reduce(|a, b| {
            if b.1 .0.edge_count() > a.1 .0.edge_count() {
                b
            } else {
                a
            }
        })
        .expect("a graph with maximum degree at least D has vertices");
    let (m1, m2) = (first.edge_count(), second.edge_count());
    let step = BranchStep::HighDegree {
        leaves,
        max_degree,
        threshold,
        m1,
        m2,
        vertex,
    };
    if m1 >= m2 {
        Ok((first, vec![step]))
    } else {
        let mut trace = vec![step];
        trace.extend(sub_trace);
        Ok((second, trace))
    }
}
