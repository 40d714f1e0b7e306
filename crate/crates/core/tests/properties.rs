mod common;

use common::*;
use hfree::canon::{are_isomorphic, canonical_form};
use hfree::extremal::partition_indices;
use hfree::factor::{max_degree_constrained_subgraph, DegreeBudget};
use hfree::generate::{all_graphs, nonisomorphic_trees};
use hfree::io::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use hfree::matching::max_matching;
use hfree::oracle::{rem_exact, OracleError, SearchLimits};
use hfree::reductions::{contains_balanced_biclique, has_clique_factor};
use hfree::starforest::{ex_star_forest, ex_star_forest_with, StarForestOptions};
use hfree::{classify_tree, contains_subgraph, Graph};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let mut g = Graph::empty(n);
                let mut it = bits.into_iter();
                for j in 0..n {
                    for i in 0..j {
                        if it.next().unwrap() {
                            g.add_edge(i, j);
                        }
                    }
                }
                g
            },
        )
    })
}

fn sparse_graph(max_n: usize, max_e: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("too many edges", move |g| g.edge_count() <= max_e)
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn with_perm(g: impl Strategy<Value = Graph>) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    g.prop_flat_map(|g| {
        let n = g.n();
        (Just(g), permutation(n))
    })
}

/// Star forests with up to three stars of at most three leaves each.
fn star_forest() -> impl Strategy<Value = Graph> {
    (proptest::collection::vec(1usize..=3, 1..=3), 0usize..=1).prop_map(|(leaves, iso)| {
        let mut h = leaves.iter().fold(Graph::empty(0), |acc, &t| {
            acc.disjoint_union(&Graph::star(t))
        });
        if iso == 1 {
            h = h.disjoint_union(&Graph::empty(1));
        }
        h
    })
}

fn no_limits() -> SearchLimits {
    SearchLimits::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph6_roundtrip(g in graph(70)) {
        let text = to_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_roundtrip(g in graph(20)) {
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn containment_matches_brute_force(g in graph(7), h in graph(4)) {
        let found = contains_subgraph(&g, &h);
        prop_assert_eq!(found.is_some(), brute_contains(&g, &h));
        if let Some(map) = found {
            let mut seen = map.clone();
            seen.sort_unstable();
            seen.dedup();
            prop_assert_eq!(seen.len(), h.n());
            for (u, v) in h.edges() {
                prop_assert!(g.has_edge(map[u], map[v]));
            }
        }
    }

    #[test]
    fn oracle_matches_brute_force(g in sparse_graph(6, 11), h in graph(4)) {
        prop_assume!(h.edge_count() > 0);
        let r = rem_exact(&g, &h, no_limits()).unwrap();
        prop_assert_eq!(r.ex, brute_ex(&g, &h));
        prop_assert_eq!(r.rem + r.ex, g.edge_count());
        prop_assert!(!brute_contains(&r.witness, &h));
        for &(u, v) in &r.deleted_edges {
            prop_assert!(g.has_edge(u, v) && !r.witness.has_edge(u, v));
        }
    }

    #[test]
    fn oracle_is_isomorphism_invariant((g, perm) in with_perm(sparse_graph(8, 16)), h in graph(4)) {
        prop_assume!(h.edge_count() > 0);
        let a = rem_exact(&g, &h, no_limits()).unwrap().rem;
        let b = rem_exact(&g.permuted(&perm), &h, no_limits()).unwrap().rem;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn oracle_monotone_under_edge_deletion(g in sparse_graph(8, 16), h in graph(4), pick in any::<prop::sample::Index>()) {
        prop_assume!(h.edge_count() > 0 && g.edge_count() > 0);
        let edges = g.edge_list();
        let (u, v) = edges[pick.index(edges.len())];
        let mut smaller = g.clone();
        smaller.remove_edge(u, v);
        let big = rem_exact(&g, &h, no_limits()).unwrap();
        let small = rem_exact(&smaller, &h, no_limits()).unwrap();
        prop_assert!(small.rem <= big.rem && big.rem <= small.rem + 1);
        prop_assert!(small.ex <= big.ex);
    }

    #[test]
    fn budget_cutoff_is_sound(g in sparse_graph(7, 14), h in graph(4), slack in 0usize..3) {
        prop_assume!(h.edge_count() > 0);
        let rem = rem_exact(&g, &h, no_limits()).unwrap().rem;
        if rem > 0 {
            let below = rem_exact(&g, &h, SearchLimits::with_budget(rem - 1));
            prop_assert!(matches!(below, Err(OracleError::Exceeded { .. })), "{:?}", below);
        }
        let above = rem_exact(&g, &h, SearchLimits::with_budget(rem + slack)).unwrap();
        prop_assert_eq!(above.rem, rem);
    }

    #[test]
    fn factor_matches_brute_force(
        (g, f) in graph(7).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), proptest::collection::vec(0usize..=4, n))
        })
    ) {
        let r = max_degree_constrained_subgraph(&g, &DegreeBudget::new(f.clone())).unwrap();
        prop_assert_eq!(r.m, brute_capped(&g, &f));
        prop_assert_eq!(r.edges.len(), r.m);
        let sub = g.spanning_subgraph(&r.edges);
        prop_assert_eq!(sub.edge_count(), r.m);
        for (v, &cap) in f.iter().enumerate() {
            prop_assert!(sub.degree(v) <= cap);
        }
    }

    #[test]
    fn factor_monotone_in_budget(
        (g, f, bump) in graph(9).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), proptest::collection::vec(0usize..=3, n), any::<prop::sample::Index>())
        })
    ) {
        prop_assume!(g.n() > 0);
        let base = max_degree_constrained_subgraph(&g, &DegreeBudget::new(f.clone())).unwrap().m;
        let mut more = f.clone();
        more[bump.index(g.n())] += 1;
        let next = max_degree_constrained_subgraph(&g, &DegreeBudget::new(more)).unwrap().m;
        prop_assert!(base <= next && next <= base + 1);
    }

    #[test]
    fn matching_matches_brute_force((g, perm) in with_perm(sparse_graph(10, 20))) {
        let m = max_matching(&g);
        prop_assert!(m.is_valid_in(&g));
        prop_assert_eq!(m.size(), brute_matching(&g));
        prop_assert_eq!(max_matching(&g.permuted(&perm)).size(), m.size());
    }

    #[test]
    fn star_forest_matches_oracle(g in sparse_graph(7, 14), h in star_forest()) {
        let r = ex_star_forest(&g, &h).unwrap();
        prop_assert_eq!(r.ex, rem_exact(&g, &h, no_limits()).unwrap().ex);
        prop_assert_eq!(r.witness.edge_count(), r.ex);
        prop_assert!(r.witness.edges().all(|(u, v)| g.has_edge(u, v)));
        prop_assert!(!brute_contains(&r.witness, &h));
    }

    #[test]
    fn single_star_agrees_with_factor(g in graph(9), t in 1usize..=4) {
        let h = Graph::star(t);
        prop_assume!(g.n() >= h.n());
        let sf = ex_star_forest_with(&g, &h, &StarForestOptions { free_check: false, ..Default::default() }).unwrap();
        let fac = max_degree_constrained_subgraph(&g, &DegreeBudget::constant(g.n(), t - 1)).unwrap();
        prop_assert_eq!(sf.ex, fac.m);
    }

    #[test]
    fn star_forest_candidates_are_sound(g in sparse_graph(6, 10), h in star_forest()) {
        let opts = StarForestOptions { record_candidates: true, free_check: false, ..Default::default() };
        let spec = hfree::decompose_star_forest(&h).unwrap();
        let cap = spec.leaves()[0] + 2;
        prop_assume!(g.max_degree() <= cap && spec.r() >= 2);
        let run = hfree::starforest::ex_bounded_degree_with(&g, &spec, cap, &opts).unwrap();
        let hg = spec.graph();
        for c in &run.candidates {
            let fp = g.spanning_subgraph(&c.f_prime);
            prop_assert!(!brute_contains(&fp, &hg));
            prop_assert!(brute_contains(&fp, &spec.prefix_graph(c.i)));
            prop_assert!(c.i + 1 >= spec.r() || !brute_contains(&fp, &spec.prefix_graph(c.i + 1)));
            prop_assert!(c.m <= run.ex);
        }
        prop_assert_eq!(run.ex, brute_ex(&g, &hg));
    }

    #[test]
    fn biclique_matches_brute_force(g in graph(8)) {
        prop_assert_eq!(contains_balanced_biclique(&g), brute_balanced_biclique(&g));
    }

    #[test]
    fn clique_factor_of_disjoint_cliques(
        (q, k, perm) in (1usize..=4, 1usize..=3).prop_flat_map(|(q, k)| (Just(q), Just(k), permutation(q * k)))
    ) {
        let g = Graph::complete(q).repeat(k).permuted(&perm);
        prop_assert!(has_clique_factor(&g, q).unwrap());
        if q > 1 {
            let mut broken = g.clone();
            let (u, v) = g.edge_list()[0];
            broken.remove_edge(u, v);
            prop_assert!(!has_clique_factor(&broken, q).unwrap());
        }
    }

    #[test]
    fn partition_output_is_feasible(
        mut gammas in proptest::collection::vec(0usize..=4, 1..=5),
        s in proptest::collection::vec(1usize..=20, 2..=4),
    ) {
        gammas.sort_unstable();
        if let Ok(inst) = partition_indices(&gammas, &s) {
            prop_assert!(inst.is_feasible());
            let mut all: Vec<usize> = inst.parts.iter().flatten().copied().collect();
            all.sort_unstable();
            prop_assert_eq!(all, (0..gammas.len()).collect::<Vec<_>>());
            for (part, &cap) in inst.parts.iter().zip(&s) {
                prop_assert!(part.iter().map(|&j| 1 + gammas[j]).sum::<usize>() <= cap);
            }
        }
    }
}

#[test]
fn generated_classes_match_labeled_enumeration() {
    for n in 0..=5 {
        let ours = all_graphs(n);
        let reference = labeled_classes(n);
        assert_eq!(ours.len(), reference.len(), "n = {n}");
        let mut a: Vec<String> = ours.iter().map(|g| to_graph6(&canonical_form(g))).collect();
        let mut b: Vec<String> = reference
            .iter()
            .map(|g| to_graph6(&canonical_form(g)))
            .collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }
}

#[test]
fn generated_classes_are_pairwise_distinct() {
    let gs = all_graphs(6);
    assert_eq!(gs.len(), 156);
    for (i, a) in gs.iter().enumerate() {
        for b in &gs[i + 1..] {
            assert!(!are_isomorphic(a, b));
        }
    }
}

#[test]
fn tree_counts() {
    let counts: Vec<usize> = (1..=10).map(|k| nonisomorphic_trees(k).len()).collect();
    assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
}

#[test]
fn tree_decomposition_invariants() {
    for k in 1..=9 {
        for t in nonisomorphic_trees(k) {
            let spec = classify_tree(&t).unwrap();
            let diam = spec.diameter();
            assert_eq!(spec.k(), k);
            assert_eq!(spec.is_star(), diam <= 2);
            match spec.decomposition() {
                None => assert!(!(3..=4).contains(&diam), "k={k} diam={diam}"),
                Some(d) => {
                    assert!((3..=4).contains(&diam));
                    let g = spec.graph();
                    assert_eq!(d.p(), g.degree(d.center));
                    assert!(d.p() >= 2);
                    assert_eq!(1 + d.p() + d.gammas().iter().sum::<usize>(), k);
                    assert!(d.gammas().windows(2).all(|w| w[0] <= w[1]));
                    for (b, leaves) in d.branches.iter().zip(&d.leaf_sets) {
                        assert!(g.has_edge(d.center, *b));
                        for &c in leaves {
                            assert!(g.has_edge(*b, c));
                            assert_eq!(g.degree(c), 1);
                        }
                    }
                    if diam == 3 {
                        assert!(d.gammas()[0] == 0 && d.gammas()[d.p() - 1] >= 1);
                    }
                }
            }
        }
    }
}

#[test]
fn every_small_graph_star_forest_against_oracle() {
    let patterns = [
        Graph::star(1).repeat(2),
        Graph::star(2),
        Graph::star(2).disjoint_union(&Graph::star(1)),
    ];
    for n in 0..=6 {
        for g in all_graphs(n) {
            for h in &patterns {
                let sf = ex_star_forest(&g, h).unwrap();
                let or = rem_exact(&g, h, no_limits()).unwrap();
                assert_eq!(sf.ex, or.ex, "{} vs {}", to_graph6(&g), to_graph6(h));
            }
        }
    }
}
