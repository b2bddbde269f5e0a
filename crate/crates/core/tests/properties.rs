//! Property tests against brute-force oracles written independently of the library.

use funbox_core::interval::{graph_from_intervals, graph_from_points, normalize, IntervalRep};
use funbox_core::parameters::{fun_graph_with, fun_vertex, is_function_of, sd_graph_with, sd_pair, Limits};
use funbox_core::{Exec, Graph, VertexSet};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn adj(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).any(|w| w == v)
}

/// `y` is determined by `s` inside `within`: equal patterns on `s` imply equal adjacency to `y`.
fn naive_is_function(g: &Graph, within: &[usize], y: usize, s: &[usize]) -> bool {
    let rest: Vec<usize> = within.iter().copied().filter(|&z| z != y && !s.contains(&z)).collect();
    for (i, &z) in rest.iter().enumerate() {
        for &w in &rest[i + 1..] {
            let same = s.iter().all(|&m| adj(g, m, z) == adj(g, m, w));
            if same && adj(g, y, z) != adj(g, y, w) {
                return false;
            }
        }
    }
    true
}

fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    (0u32..1 << items.len())
        .map(|m| items.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &v)| v).collect())
        .collect()
}

fn naive_fun(g: &Graph, within: &[usize], y: usize) -> usize {
    let others: Vec<usize> = within.iter().copied().filter(|&v| v != y).collect();
    subsets(&others).into_iter().filter(|s| naive_is_function(g, within, y, s)).map(|s| s.len()).min().unwrap()
}

fn naive_sd(g: &Graph, within: &[usize], x: usize, y: usize) -> usize {
    within.iter().filter(|&&z| z != x && z != y && adj(g, x, z) != adj(g, y, z)).count()
}

fn naive_fun_graph(g: &Graph) -> usize {
    let all: Vec<usize> = (0..g.n()).collect();
    subsets(&all)
        .into_iter()
        .filter(|u| !u.is_empty())
        .map(|u| u.iter().map(|&y| naive_fun(g, &u, y)).min().unwrap())
        .max()
        .unwrap()
}

fn naive_sd_graph(g: &Graph) -> usize {
    let all: Vec<usize> = (0..g.n()).collect();
    subsets(&all)
        .into_iter()
        .filter(|u| u.len() >= 2)
        .map(|u| {
            let mut best = usize::MAX;
            for (i, &x) in u.iter().enumerate() {
                for &y in &u[i + 1..] {
                    best = best.min(naive_sd(g, &u, x, y));
                }
            }
            best
        })
        .max()
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fun_vertex_matches_enumeration(g in graph_strategy(8)) {
        let all: Vec<usize> = (0..g.n()).collect();
        for y in 0..g.n() {
            let r = fun_vertex(&g, y).unwrap();
            prop_assert_eq!(r.k, naive_fun(&g, &all, y));
            prop_assert!(r.witness.validate(&g).is_ok());
            prop_assert!(naive_is_function(&g, &all, y, &r.witness.args));
        }
    }

    #[test]
    fn sd_pair_matches_count(g in graph_strategy(10)) {
        let all: Vec<usize> = (0..g.n()).collect();
        for x in 0..g.n() {
            for y in x + 1..g.n() {
                prop_assert_eq!(sd_pair(&g, x, y).unwrap(), naive_sd(&g, &all, x, y));
            }
        }
    }

    #[test]
    fn graph_sweeps_match_enumeration(g in graph_strategy(6)) {
        let lim = Limits::default();
        let f = naive_fun_graph(&g);
        prop_assert_eq!(fun_graph_with(&g, lim, Exec::Sequential).unwrap(), f);
        prop_assert_eq!(fun_graph_with(&g, lim, Exec::Parallel).unwrap(), f);
        let s = naive_sd_graph(&g);
        prop_assert_eq!(sd_graph_with(&g, lim, Exec::Sequential).unwrap(), s);
        prop_assert_eq!(sd_graph_with(&g, lim, Exec::Parallel).unwrap(), s);
    }

    #[test]
    fn is_function_of_agrees(g in graph_strategy(8), y_pick in 0usize..8, mask in 0u32..256) {
        let y = y_pick % g.n();
        let s: Vec<usize> = (0..g.n()).filter(|&v| v != y && mask >> v & 1 == 1).collect();
        let set = VertexSet::from_ids(g.n(), s.iter().copied()).unwrap();
        let all: Vec<usize> = (0..g.n()).collect();
        let r = is_function_of(&g, y, &set).unwrap();
        prop_assert_eq!(r.is_function, naive_is_function(&g, &all, y, &s));
        if let Some((z, w)) = r.counterexample {
            prop_assert!(s.iter().all(|&m| adj(&g, m, z) == adj(&g, m, w)));
            prop_assert_ne!(adj(&g, y, z), adj(&g, y, w));
        }
    }

    #[test]
    fn induced_subgraphs_compose(g in graph_strategy(10), outer in any::<u16>(), inner in any::<u16>()) {
        let n = g.n();
        let s1 = VertexSet::from_ids(n, (0..n).filter(|&v| outer >> v & 1 == 1)).unwrap();
        prop_assume!(!s1.is_empty());
        let h = g.induced_subgraph(&s1).unwrap();
        let m = h.graph.n();
        let s2 = VertexSet::from_ids(m, (0..m).filter(|&v| inner >> v & 1 == 1)).unwrap();
        prop_assume!(!s2.is_empty());
        let hh = h.graph.induced_subgraph(&s2).unwrap();
        let composed: Vec<usize> = hh.old_ids.iter().map(|&v| h.old_ids[v]).collect();
        let direct = g.induced_subgraph(&VertexSet::from_ids(n, composed.iter().copied()).unwrap()).unwrap();
        prop_assert!(direct.graph.equal_labeled(&hh.graph));
        for (a, &u) in composed.iter().enumerate() {
            for (b, &v) in composed.iter().enumerate() {
                if a != b {
                    prop_assert_eq!(hh.graph.has_edge(a, b), adj(&g, u, v));
                }
            }
        }
    }

    #[test]
    fn json_round_trip(g in graph_strategy(12)) {
        let back = Graph::from_json(&g.to_json()).unwrap();
        prop_assert!(back.equal_labeled(&g));
        prop_assert_eq!(back.to_json(), g.to_json());
    }

    #[test]
    fn normalization_preserves_the_graph(
        raw in proptest::collection::vec((0i64..40, 0i64..40), 1..40)
    ) {
        let iv: Vec<(i64, i64)> = raw.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        let rep = IntervalRep::new(iv.clone()).unwrap();
        let pts = normalize(&rep);
        let mut ranks: Vec<usize> = pts.points.iter().flat_map(|&(i, j)| [i, j]).collect();
        ranks.sort_unstable();
        prop_assert_eq!(ranks, (1..=2 * iv.len()).collect::<Vec<_>>());
        let g = graph_from_points(&pts);
        prop_assert!(g.equal_labeled(&graph_from_intervals(&rep)));
        for (u, &(a, b)) in iv.iter().enumerate() {
            for (v, &(c, d)) in iv.iter().enumerate().skip(u + 1) {
                prop_assert_eq!(g.has_edge(u, v), a <= d && c <= b);
            }
        }
    }

    #[test]
    fn complement_swaps_edges(g in graph_strategy(10)) {
        let c = g.complement();
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                prop_assert_ne!(c.has_edge(u, v), g.has_edge(u, v));
            }
        }
        // functionality is invariant under complementation
        for y in 0..g.n().min(4) {
            prop_assert_eq!(fun_vertex(&c, y).unwrap().k, fun_vertex(&g, y).unwrap().k);
        }
    }
}

#[test]
fn normalize_at_scale() {
    let rep = funbox_core::random::random_interval_rep(2000, 11, 500).unwrap();
    let pts = normalize(&rep);
    assert!(graph_from_points(&pts).equal_labeled(&graph_from_intervals(&rep)));
}
