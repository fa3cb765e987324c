use linkpart_core::graph::{find_separator_leq, vertex_connectivity};
use linkpart_core::graph::{bfs_ball, greedy_mis};
use linkpart_core::hamilton::{compress, red_closure, select_blue_edges};
use linkpart_core::linkage::{find_spanning_linkage, LinkageRequest};
use linkpart_core::longpath::{pattern_cover, CoverParams};
use linkpart_core::longpath::{build_weighted, mark};
use linkpart_core::oracle::random_graph;
use linkpart_core::partition::{kappa_partition, refine_to_linked, BlueStrategy, MarkStrategy};
use linkpart_core::treewidth::{heuristic_decomposition, lift};
use linkpart_core::{Graph, SolverConfig, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.05f64..0.9, any::<u64>()).prop_map(|(n, p, s)| random_graph(n, p, s))
}

fn graph_with_order(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn bfs_ball_grows_with_radius(g in graph(20), seed in any::<usize>()) {
        let v = seed % g.n();
        let mut prev = VertexSet::new(g.n());
        for r in 1..6 {
            let (ball, boundary) = bfs_ball(&g, v, r);
            prop_assert!(prev.is_subset(&ball));
            prop_assert!(ball.is_disjoint(&boundary));
            let dist = g.bfs_distances(v);
            for u in 0..g.n() {
                prop_assert_eq!(ball.contains(u), dist[u] < r);
                prop_assert_eq!(boundary.contains(u), dist[u] == r);
            }
            prev = ball;
        }
    }

    #[test]
    fn greedy_mis_is_maximal_independent((g, order) in graph_with_order(20)) {
        let s = greedy_mis(&g, &order).unwrap();
        prop_assert!(g.is_independent(&s.to_vec()));
        for v in 0..g.n() {
            prop_assert!(s.contains(v) || g.neighbors(v).iter().any(|&u| s.contains(u)));
        }
    }

    #[test]
    fn connectivity_at_most_min_degree(g in graph(12)) {
        prop_assume!(g.n() >= 2);
        let k = vertex_connectivity(&g);
        if !g.is_complete() {
            prop_assert!(k <= g.min_degree());
        }
    }

    #[test]
    fn separators_disconnect(g in graph(16), s in 0usize..5) {
        let all = VertexSet::full(g.n());
        if let Some(sep) = find_separator_leq(&g, &all, s) {
            prop_assert!(sep.len() <= s);
            let rest: Vec<usize> = (0..g.n()).filter(|&v| !sep.contains(v)).collect();
            prop_assert!(rest.len() >= 2);
            let (sub, _) = g.induced(&rest);
            prop_assert!(!sub.is_connected());
        }
    }

    #[test]
    fn kappa_partition_is_star_shaped((g, order) in graph_with_order(20)) {
        let (p, q) = kappa_partition(&g, &order).unwrap();
        p.validate(&g).unwrap();
        for part in p.parts() {
            let center = part.iter().copied().find(|&c| part.iter().all(|&u| u == c || g.has_edge(u, c)));
            prop_assert!(center.is_some());
        }
        prop_assert_eq!(q.graph.n(), p.len());
    }

    #[test]
    fn quotient_matches_scan(g in graph(20)) {
        let (p, q) = kappa_partition(&g, &(0..g.n()).collect::<Vec<_>>()).unwrap();
        for i in 0..p.len() {
            for j in 0..p.len() {
                let want = i != j && p.part(i).iter().any(|&u| p.part(j).iter().any(|&v| g.has_edge(u, v)));
                prop_assert_eq!(q.graph.has_edge(i, j), want);
            }
            prop_assert_eq!(q.sizes[i], p.part(i).len());
        }
    }

    #[test]
    fn refinement_is_valid(g in graph(18)) {
        let (p0, _) = kappa_partition(&g, &(0..g.n()).collect::<Vec<_>>()).unwrap();
        let cfg = SolverConfig::default();
        let (p, _) = refine_to_linked(&g, &p0, &cfg).unwrap();
        p.validate(&g).unwrap();
        for (i, part) in p.parts().iter().enumerate() {
            prop_assert!(p.part_of(part[0]) == i);
            let origin = p0.part_of(part[0]);
            prop_assert!(part.iter().all(|&v| p0.part_of(v) == origin));
        }
    }

    #[test]
    fn lifted_decomposition_is_valid(g in graph(20)) {
        let (p, q) = kappa_partition(&g, &(0..g.n()).collect::<Vec<_>>()).unwrap();
        let td_q = heuristic_decomposition(&q.graph);
        prop_assert!(td_q.validate(&q.graph));
        let td = lift(&td_q, &p);
        prop_assert!(td.validate(&g));
        let gamma: Vec<f64> = (0..q.graph.n()).map(|i| 1.0 + (p.part(i).len() as f64).log2()).collect();
        let want = td_q.bags().iter().map(|b| b.iter().map(|&i| gamma[i]).sum::<f64>()).fold(0.0, f64::max);
        prop_assert!((td_q.weighted_width(&gamma) - want).abs() < 1e-9);
    }

    #[test]
    fn red_closure_completes_parts(g in graph(20)) {
        let (p, _) = kappa_partition(&g, &(0..g.n()).collect::<Vec<_>>()).unwrap();
        let gx = red_closure(&g, &p);
        for part in p.parts() {
            prop_assert!(gx.closure.is_clique(part));
        }
        prop_assert_eq!(gx.closure.m(), g.m() + gx.red_edges.len());
        for &(u, v) in &gx.red_edges {
            prop_assert!(!g.has_edge(u, v) && p.part_of(u) == p.part_of(v));
        }
    }

    #[test]
    fn compressed_graph_structure(g in graph(20), bounded in any::<bool>()) {
        let (p, _) = kappa_partition(&g, &(0..g.n()).collect::<Vec<_>>()).unwrap();
        let gx = red_closure(&g, &p);
        let strategy = if bounded { BlueStrategy::Bounded } else { BlueStrategy::All };
        let blue = select_blue_edges(&gx, &p, strategy);
        let c = compress(&gx, &p, &blue);
        prop_assert!(c.origin.windows(2).all(|w| w[0] < w[1]));
        for (x, y) in c.h.edges() {
            let (u, v) = (c.origin[x], c.origin[y]);
            let same = p.part_of(u) == p.part_of(v);
            prop_assert!(same || blue.edges().any(|e| e == (u.min(v), u.max(v))));
        }
        for (u, v) in blue.edges() {
            prop_assert!(g.has_edge(u, v));
            prop_assert!(c.h.has_edge(c.h_vertex(u).unwrap(), c.h_vertex(v).unwrap()));
        }
        for kept in &c.kept {
            let hs: Vec<usize> = kept.iter().map(|&v| c.h_vertex(v).unwrap()).collect();
            prop_assert!(c.h.is_clique(&hs));
        }
    }

    #[test]
    fn weights_conserved_and_twins_adjacent(g in graph(20), bounded in any::<bool>()) {
        let (p, _) = kappa_partition(&g, &(0..g.n()).collect::<Vec<_>>()).unwrap();
        let gx = red_closure(&g, &p);
        let strategy = if bounded { MarkStrategy::Bounded } else { MarkStrategy::Full };
        let m = mark(&gx, &p, strategy, 1);
        let w = build_weighted(&gx, &p, &m);
        prop_assert_eq!(w.weights.iter().sum::<u64>(), g.n() as u64);
        for (i, ki) in w.kept.iter().enumerate() {
            for (j, kj) in w.kept.iter().enumerate() {
                let adjacent = i != j && p.part(i).iter().any(|&u| p.part(j).iter().any(|&v| g.has_edge(u, v)));
                for &x in ki {
                    for &y in kj {
                        if x != y {
                            prop_assert_eq!(w.h_twin.has_edge(x, y), i == j || adjacent);
                        }
                    }
                }
            }
        }
        for (x, y) in w.h_prime.edges() {
            prop_assert!(w.h.has_edge(x, y));
        }
    }

    #[test]
    fn pattern_cover_deterministic_and_consistent(g in graph(30), k in 2usize..40, seed in any::<u64>()) {
        let params = CoverParams::new(k, 2, 2.0);
        let s = pattern_cover(&g, k, seed, &params);
        prop_assert_eq!(&s, &pattern_cover(&g, k, seed, &params));
        let mut centers = VertexSet::new(g.n());
        for c in &s.clusters {
            prop_assert!(c.radius >= 1 && c.radius <= params.r_cap);
            prop_assert!(c.sampled <= c.boundary_size && c.sampled <= params.l_cap);
            prop_assert!(centers.insert(c.center));
        }
        let covered: usize = s.clusters.iter().map(|c| c.ball_size + c.boundary_size).sum();
        prop_assert_eq!(covered, g.n());
        prop_assert_eq!(s.aborted, s.pool.len() > params.l_cap);
        if s.aborted {
            prop_assert!(s.a.is_empty());
        } else {
            let balls: usize = s.clusters.iter().map(|c| c.ball_size).sum();
            prop_assert_eq!(s.a.len(), balls + s.pool.len());
        }
    }

    #[test]
    fn linkages_are_valid(g in graph(9), a in 0usize..9, b in 0usize..9) {
        let n = g.n();
        prop_assume!(n >= 2 && a % n != b % n);
        let req = LinkageRequest::new(VertexSet::full(n), vec![(a % n, b % n)]).unwrap();
        match find_spanning_linkage(&g, &req).unwrap() {
            Some(l) => prop_assert!(l.validate(&g, &req)),
            None => {
                let path = linkpart_core::oracle::held_karp_path(&g).unwrap();
                if let Some(c) = path {
                    let v = &c.vertices;
                    prop_assert!(!(v[0] == a % n && v[n - 1] == b % n));
                }
            }
        }
    }
}
