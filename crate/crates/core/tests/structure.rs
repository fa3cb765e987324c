use linkpart_core::geometry::{generate_instance, intersection_graph, object_distance};
use linkpart_core::graph::{vertex_connectivity, VertexSet};
use linkpart_core::longpath::{
    bad_radius_bound, bad_radius_constant, outer_cover, pattern_cover, pattern_cover_traced, CoverParams,
};
use linkpart_core::oracle::planted_clique_partition;
use linkpart_core::partition::{clique_partition_exact, kappa_partition_default, separator_tree};
use linkpart_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn leaf_is_linked(g: &Graph, leaf: &[usize], thr: usize) -> bool {
    let (sub, _) = g.induced(leaf);
    sub.is_complete() || vertex_connectivity(&sub) > thr
}

#[test]
fn planted_two_clique_separator_tree_bounds() {
    for seed in 0..100 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sizes = [rng.gen_range(5..10), rng.gen_range(5..10)];
        let cross = rng.gen_range(6..=sizes[0] * sizes[1] / 2);
        let (g, _) = planted_clique_partition(&sizes, cross, seed);
        assert!(g.is_connected());
        let t = separator_tree(&g, &VertexSet::full(g.n()), 4);
        assert!(t.leaf_count() <= 2, "seed {seed}");
        assert!(t.interior_union().len() <= 4, "seed {seed}");
        for leaf in t.leaves() {
            assert!(leaf_is_linked(&g, leaf, 4), "seed {seed}");
        }
    }
}

#[test]
fn planted_three_clique_partition_is_recovered() {
    for seed in 0..100 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sizes = [rng.gen_range(1..5), rng.gen_range(1..5), rng.gen_range(1..5)];
        let n: usize = sizes.iter().sum();
        let cross = rng.gen_range(0..n * 2);
        let (g, planted) = planted_clique_partition(&sizes, cross, seed);
        for c in &planted {
            assert!(g.is_clique(c));
        }
        let found = clique_partition_exact(&g, &VertexSet::full(n), 3).unwrap().expect("planted partition exists");
        assert!(found.len() <= 3);
        let mut seen = VertexSet::new(n);
        for c in &found {
            assert!(g.is_clique(c), "seed {seed}");
            for &v in c {
                assert!(seen.insert(v), "seed {seed}");
            }
        }
        assert_eq!(seen.len(), n);
    }
}

#[test]
fn same_part_objects_are_close() {
    for (seed, beta, mix) in [(1u64, 1.0, 1.0), (2, 2.0, 0.5), (3, 3.0, 0.0)] {
        let inst = generate_instance(2, beta, 300, 30.0, mix, seed).unwrap();
        let g = intersection_graph(&inst).unwrap();
        let (p, _) = kappa_partition_default(&g).unwrap();
        for part in p.parts() {
            for &u in part {
                for &v in part {
                    assert!(object_distance(&inst.objects[u], &inst.objects[v]) <= 2.0 * beta + 1e-9);
                }
            }
        }
    }
}

#[test]
fn single_vertex_covers() {
    let k1 = Graph::empty(1);
    let params = CoverParams::new(8, 2, 2.0);
    for seed in 0..50 {
        let s = pattern_cover(&k1, 8, seed, &params);
        assert_eq!(s.a.to_vec(), [0]);
        assert_eq!(s.clusters.len(), 1);
        assert!(outer_cover(&k1, 8, seed).contains(0));
    }
}

#[test]
fn oversized_boundary_sample_aborts() {
    // boundary sampling fires with probability 1/(kn) per cluster, so scan seeds
    let stars: Vec<Graph> = (0..40).map(|_| linkpart_core::graph::families::star(2)).collect();
    let star = linkpart_core::graph::families::disjoint_union(&stars);
    let k = 2;
    let params = CoverParams::new(k, 2, 2.0);
    let mut params_small = params;
    params_small.l_cap = 1;
    params_small.p = 1.0;
    let mut hit = None;
    for seed in 0..20_000 {
        let s = pattern_cover(&star, k, seed, &params_small);
        if s.aborted {
            hit = Some(s);
            break;
        }
    }
    let s = hit.expect("some seed samples more than the cap");
    assert!(s.a.is_empty());
    assert!(s.pool.len() > params_small.l_cap);
}

#[test]
fn bad_radius_report() {
    let c1 = bad_radius_constant(2, 64);
    let mut over = 0;
    let mut clusters = 0;
    for seed in 0..40u64 {
        let inst = generate_instance(2, 1.0, 300, 20.0, 1.0, 500 + seed).unwrap();
        let g = intersection_graph(&inst).unwrap();
        let k = 16;
        let dist = g.bfs_distances(0);
        let mut order: Vec<usize> = (0..g.n()).filter(|&v| dist[v] != usize::MAX).collect();
        order.sort_by_key(|&v| (dist[v], v));
        let x = VertexSet::from_iter(g.n(), order.into_iter().take(k));
        let params = CoverParams::new(k, 2, 2.0);
        let s = pattern_cover_traced(&g, k, seed, &params, Some(&x));
        let bound = bad_radius_bound(k, 2, c1);
        for c in &s.clusters {
            let bad = c.bad_radii.expect("planted set given");
            assert!(bad <= params.r_cap);
            clusters += 1;
            over += (bad > bound) as usize;
        }
        assert_eq!(s, {
            let mut plain = pattern_cover(&g, k, seed, &params);
            plain.clusters.iter_mut().zip(&s.clusters).for_each(|(a, b)| a.bad_radii = b.bad_radii);
            plain
        });
    }
    println!("bad radii: c1 = {c1:.4}, {over} of {clusters} clusters above the bound");
}
