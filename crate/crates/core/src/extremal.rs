//! Exhaustive checks of the strong Erdős–Sós property for small trees, and
//! constructive versions of the two counting lemmas used in its proof.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::generate::{nonisomorphic_graphs, MAX_GENERATION_N};
use crate::io::to_graph6;
use crate::subgraph::Pattern;
use crate::tree::TreeSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("n = {n} exceeds the generation ceiling of {ceiling}")]
    TooLarge { n: usize, ceiling: usize },
    #[error("t = {0} is outside [0, 1]")]
    ParameterOutOfRange(String),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("invalid partition instance: {0}")]
    Partition(String),
    #[error("could not build a thread pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SescVerdict {
    pub k: usize,
    pub n: usize,
    pub verdict: Verdict,
    /// Every `T`-free graph meeting the edge bound, in graph6.
    pub extremal: Vec<String>,
    /// The subset of `extremal` that is not a disjoint union of `K_{k-1}`.
    pub counterexamples: Vec<String>,
    /// `T`-free graphs on `n` vertices, up to isomorphism.
    pub t_free_graphs: usize,
}

/// Enumerates every `T`-free graph on `n` vertices and collects those with
/// `2e >= (k-2)n`; the property holds when all of them are disjoint unions
/// of `K_{k-1}`.
///
/// `jobs` bounds worker threads; `None` uses the global pool.
pub fn verify_sesc(
    t: &TreeSpec,
    n: usize,
    jobs: Option<usize>,
) -> Result<SescVerdict, ExtremalError> {
    if n > MAX_GENERATION_N {
        return Err(ExtremalError::TooLarge {
            n,
            ceiling: MAX_GENERATION_N,
        });
    }
    let pattern = Pattern::new(t.graph());
    let k = t.k();
    let generate = || nonisomorphic_graphs(n, |g| pattern.find_in(g).is_none());
    let free = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| ExtremalError::ThreadPool(e.to_string()))?
            .install(generate),
        None => generate(),
    };
    let (mut extremal, mut counterexamples) = (Vec::new(), Vec::new());
    for g in &free {
        if 2 * g.edge_count() < (k - 2) * n {
            continue;
        }
        extremal.push(to_graph6(g));
        if k < 2 || !g.is_clique_union(k - 1) {
            counterexamples.push(to_graph6(g));
        }
    }
    Ok(SescVerdict {
        k,
        n,
        verdict: if counterexamples.is_empty() {
            Verdict::Holds
        } else {
            Verdict::Fails
        },
        extremal,
        counterexamples,
        t_free_graphs: free.len(),
    })
}

/// `(k-2)n/2`, the Erdős–Sós edge bound for a `k`-vertex tree.
pub fn es_bound(t: &TreeSpec, n: usize) -> Rational64 {
    Rational64::new((t.k() as i64 - 2) * n as i64, 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeavyVertex {
    pub vertex: usize,
    /// `Σ_{v ∈ N(u)} (1 - t d(G) / d(v))`.
    pub sum: BigRational,
    /// `(1 - t) d(G)`.
    pub bound: BigRational,
}

/// A vertex maximizing `Σ_{v ∈ N(u)} (1 - t d(G)/d(v))`, where `d(G)` is
/// the average degree. Ties go to the smallest label. The maximum is at
/// least `(1 - t) d(G)` since the sum over all `u` equals `n (1 - t) d(G)`.
pub fn heavy_vertex(
    g: &crate::graph::Graph,
    t: &BigRational,
) -> Result<HeavyVertex, ExtremalError> {
    if t < &BigRational::zero() || t > &BigRational::one() {
        return Err(ExtremalError::ParameterOutOfRange(t.to_string()));
    }
    let n = g.n();
    if n == 0 {
        return Err(ExtremalError::EmptyGraph);
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
        return Err(ExtremalError::IsolatedVertex(v));
    }
    let int = |x: usize| BigRational::from_integer(BigInt::from(x));
    let avg = BigRational::new(BigInt::from(2 * g.edge_count()), BigInt::from(n));
    let scaled = t * &avg;
    let mut best: Option<(usize, BigRational)> = None;
    for u in 0..n {
        let sum = g
            .neighbors(u)
            .map(|v| BigRational::one() - &scaled / int(g.degree(v)))
            .fold(BigRational::zero(), |a, b| a + b);
        if best.as_ref().is_none_or(|(_, s)| &sum > s) {
            best = Some((u, sum));
        }
    }
    let (vertex, sum) = best.expect("n > 0");
    Ok(HeavyVertex {
        vertex,
        sum,
        bound: (BigRational::one() - t) * avg,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionInstance {
    pub gammas: Vec<usize>,
    pub s: Vec<usize>,
    /// `J_1 .. J_ℓ`, 0-based indices into `gammas`.
    pub parts: Vec<Vec<usize>>,
    /// Whether the sum hypothesis of the lemma held; the peeling may succeed
    /// without it.
    pub sum_hypothesis: bool,
}

impl PartitionInstance {
    pub fn is_feasible(&self) -> bool {
        let mut seen = vec![false; self.gammas.len()];
        for part in &self.parts {
            for &j in part {
                if seen[j] {
                    return false;
                }
                seen[j] = true;
            }
        }
        seen.iter().all(|&b| b)
            && self
                .parts
                .iter()
                .zip(&self.s)
                .all(|(part, &s)| demand(&self.gammas, part) <= s)
    }
}

fn demand(gammas: &[usize], part: &[usize]) -> usize {
    part.iter().map(|&j| 1 + gammas[j]).sum()
}

/// Whether `s_1 + .. + s_ℓ >= Σ (1 + γ_i) + (ℓ - 1) γ_{p-1}`.
pub fn partition_sum_hypothesis(gammas: &[usize], s: &[usize]) -> bool {
    let p = gammas.len();
    let second = if p >= 2 { gammas[p - 2] } else { 0 };
    let need = gammas.iter().map(|g| 1 + g).sum::<usize>() + (s.len().saturating_sub(1)) * second;
    s.iter().sum::<usize>() >= need
}

/// Splits `[p]` into `J_1 .. J_ℓ` with `s_i >= Σ_{j ∈ J_i} (1 + γ_j)`.
///
/// `J_ℓ` takes the longest suffix `q..p` that fits in `s_ℓ`, and the
/// prefix is split recursively among `s_1 .. s_{ℓ-1}`; with two parts left
/// the first gets everything remaining. Needs `p >= 1`, `ℓ >= 2`, sorted
/// `γ`, and `s_i >= γ_p + 1`. The peeling is run even when the sum
/// hypothesis fails, and an error names the part it overfills.
pub fn partition_indices(
    gammas: &[usize],
    s: &[usize],
) -> Result<PartitionInstance, ExtremalError> {
    let bad = |m: String| Err(ExtremalError::Partition(m));
    let (p, l) = (gammas.len(), s.len());
    if p == 0 {
        return bad("p must be at least 1".into());
    }
    if l < 2 {
        return bad(format!("ℓ = {l}; at least two parts are needed"));
    }
    if gammas.windows(2).any(|w| w[0] > w[1]) {
        return bad("γ must be nondecreasing".into());
    }
    let top = gammas[p - 1];
    if let Some(i) = s.iter().position(|&si| si < top + 1) {
        return bad(format!("s_{} = {} < γ_p + 1 = {}", i + 1, s[i], top + 1));
    }
    let mut parts = vec![Vec::new(); l];
    let mut end = p;
    for i in (1..l).rev() {
        // longest suffix of 0..end that still fits in s_i
        let mut q = end;
        let mut load = 0;
        while q > 0 && load + 1 + gammas[q - 1] <= s[i] {
            q -= 1;
            load += 1 + gammas[q];
        }
        parts[i] = (q..end).collect();
        end = q;
        if end == 0 {
            break;
        }
    }
    parts[0] = (0..end).collect();
    let inst = PartitionInstance {
        gammas: gammas.to_vec(),
        s: s.to_vec(),
        parts,
        sum_hypothesis: partition_sum_hypothesis(gammas, s),
    };
    if let Some(i) = (0..l).find(|&i| demand(gammas, &inst.parts[i]) > s[i]) {
        return bad(format!(
            "peeling overfills J_{}: Σ(1 + γ_j) = {} > s_{} = {}",
            i + 1,
            demand(gammas, &inst.parts[i]),
            i + 1,
            s[i]
        ));
    }
    Ok(inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::tree::classify_tree;

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn paths_and_stars_on_few_vertices() {
        let p4 = classify_tree(&Graph::path(4)).unwrap();
        let v = verify_sesc(&p4, 6, None).unwrap();
        assert_eq!(v.verdict, Verdict::Holds);
        assert_eq!(
            v.extremal,
            vec![to_graph6(&crate::canon::canonical_form(
                &Graph::complete(3).repeat(2)
            ))]
        );

        let claw = classify_tree(&Graph::star(3)).unwrap();
        let v = verify_sesc(&claw, 6, Some(2)).unwrap();
        assert_eq!(v.verdict, Verdict::Fails);
        assert!(v
            .counterexamples
            .contains(&to_graph6(&crate::canon::canonical_form(&Graph::cycle(6)))));
        assert!(matches!(
            verify_sesc(&claw, 40, None),
            Err(ExtremalError::TooLarge { .. })
        ));
    }

    #[test]
    fn bounds() {
        let t4 = classify_tree(&Graph::path(4)).unwrap();
        let t5 = classify_tree(&Graph::path(5)).unwrap();
        assert_eq!(es_bound(&t4, 6), Rational64::from_integer(6));
        assert_eq!(es_bound(&t5, 8), Rational64::from_integer(12));
        assert_eq!(es_bound(&t5, 7), Rational64::new(21, 2));
    }

    #[test]
    fn heavy_vertex_examples() {
        let k4 = Graph::complete(4);
        let h = heavy_vertex(&k4, &rat(1, 1)).unwrap();
        assert_eq!((h.vertex, h.sum.clone()), (0, rat(0, 1)));
        let h = heavy_vertex(&k4, &rat(0, 1)).unwrap();
        assert_eq!(h.sum, rat(3, 1));
        let h = heavy_vertex(&Graph::star(3), &rat(1, 2)).unwrap();
        assert_eq!(h.bound, rat(3, 4));
        assert!(h.sum >= h.bound);
        assert_eq!(
            heavy_vertex(&Graph::empty(2), &rat(1, 2)),
            Err(ExtremalError::IsolatedVertex(0))
        );
        assert!(heavy_vertex(&k4, &rat(3, 2)).is_err());
    }

    #[test]
    fn partition_examples() {
        assert_eq!(
            partition_indices(&[2], &[3, 3]).unwrap().parts,
            vec![vec![], vec![0]]
        );
        let two = partition_indices(&[1, 1], &[2, 2]).unwrap();
        assert_eq!(two.parts, vec![vec![0], vec![1]]);
        assert!(!two.sum_hypothesis);
        assert_eq!(
            partition_indices(&[0, 0], &[1, 1]).unwrap().parts,
            vec![vec![0], vec![1]]
        );
        assert!(partition_indices(&[0], &[1]).is_err());
        assert!(partition_indices(&[3], &[3, 5]).is_err());
        assert!(partition_indices(&[2, 1], &[5, 5]).is_err());
    }
}
