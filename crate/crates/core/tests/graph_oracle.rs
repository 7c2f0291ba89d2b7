mod common;

use common::{all_graphs, circumference_dp, cycle_lengths_dp, longest_path_dp, random_edges};
use pathramsey::graph::verify_coloring;
use pathramsey::{Color, EdgeColoring, SimpleGraph, Target};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn graph(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
    SimpleGraph::from_edges(n, edges.iter().copied()).unwrap()
}

fn check_against_oracle(n: usize, edges: &[(usize, usize)]) {
    let g = graph(n, edges);
    let lp = g.longest_path_order().unwrap();
    assert_eq!(
        lp,
        longest_path_dp(n, edges),
        "longest path, n={n} edges={edges:?}"
    );
    let path = g.longest_path().unwrap();
    assert_eq!(path.len(), lp);
    assert!(g.is_path(&path));

    let lens = cycle_lengths_dp(n, edges);
    assert_eq!(
        g.circumference().unwrap(),
        circumference_dp(n, edges),
        "circumference {edges:?}"
    );
    for k in 3..=n {
        assert_eq!(g.has_cycle_exact(k).unwrap(), lens[k], "C{k} in {edges:?}");
        if let Some(c) = g.find_cycle_exact(k).unwrap() {
            assert_eq!(c.len(), k);
            assert!(g.is_cycle(&c));
        }
    }
    for k in 1..=n {
        assert_eq!(g.has_path(k).unwrap(), lp >= k);
        match g.find_path(k).unwrap() {
            Some(p) => assert!(p.len() == k && g.is_path(&p)),
            None => assert!(lp < k),
        }
    }
}

#[test]
fn all_graphs_up_to_five_vertices() {
    let mut count = 0;
    for n in 1..=5 {
        for edges in all_graphs(n) {
            check_against_oracle(n, &edges);
            count += 1;
        }
    }
    assert_eq!(count, 1 + 2 + 8 + 64 + 1024);
}

#[test]
fn random_graphs_up_to_ten_vertices() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..500 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.05..0.9);
        let edges = random_edges(&mut rng, n, p);
        check_against_oracle(n, &edges);
    }
}

#[test]
fn sparse_graphs_beyond_oracle_size_are_consistent() {
    // components stay small while n exceeds the exact limit
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..20 {
        let blocks: Vec<(usize, Vec<(usize, usize)>)> = (0..4)
            .map(|_| {
                let n = rng.gen_range(1..=8);
                (n, random_edges(&mut rng, n, 0.5))
            })
            .collect();
        let mut g = SimpleGraph::new(0).unwrap();
        let mut best_path = 0;
        let mut best_cycle = 0;
        for (n, e) in &blocks {
            g = g.disjoint_union(&graph(*n, e)).unwrap();
            best_path = best_path.max(longest_path_dp(*n, e));
            best_cycle = best_cycle.max(circumference_dp(*n, e));
        }
        assert_eq!(g.longest_path_order().unwrap(), best_path);
        assert_eq!(g.circumference().unwrap(), best_cycle);
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = common::pairs(n);
        let m = pairs.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |mask| {
            let edges = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &b)| b)
                .map(|(&e, _)| e)
                .collect();
            (n, edges)
        })
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn relabelling_preserves_path_and_cycle_measures(
        (n, edges, perm) in arb_graph(12).prop_flat_map(|(n, e)| (Just(n), Just(e), arb_perm(n)))
    ) {
        let g = graph(n, &edges);
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(h.edge_count(), g.edge_count());
        prop_assert_eq!(h.longest_path_order().unwrap(), g.longest_path_order().unwrap());
        prop_assert_eq!(h.circumference().unwrap(), g.circumference().unwrap());
    }

    #[test]
    fn adding_an_edge_never_shortens((n, edges) in arb_graph(12), a in 0usize..12, b in 0usize..12) {
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b);
        let g = graph(n, &edges);
        let mut h = g.clone();
        h.add_edge(a, b).unwrap();
        prop_assert!(h.longest_path_order().unwrap() >= g.longest_path_order().unwrap());
        prop_assert!(h.circumference().unwrap() >= g.circumference().unwrap());
    }

    #[test]
    fn has_path_matches_longest_path((n, edges) in arb_graph(12)) {
        let g = graph(n, &edges);
        let lp = g.longest_path_order().unwrap();
        for k in 1..=n {
            prop_assert_eq!(g.has_path(k).unwrap(), lp >= k);
        }
    }

    #[test]
    fn color_classes_partition_the_edges(n in 1usize..14, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let col = EdgeColoring::from_fn(n, 3, |_, _| rng.gen_range(1..=3)).unwrap();
        let mut seen = SimpleGraph::new(n).unwrap();
        let mut total = 0;
        for c in 1..=3 {
            let g = col.color_class(c).unwrap();
            for (u, v) in g.edges() {
                prop_assert!(!seen.has_edge(u, v));
                seen.add_edge(u, v).unwrap();
            }
            total += g.edge_count();
        }
        prop_assert_eq!(total, n * (n - 1) / 2);
    }

    #[test]
    fn verification_commutes_with_color_permutation(
        n in 2usize..12,
        seed in any::<u64>(),
        ks in proptest::collection::vec(2usize..7, 3),
        perm in Just(vec![1 as Color, 2, 3]).prop_shuffle(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let col = EdgeColoring::from_fn(n, 3, |_, _| rng.gen_range(1..=3)).unwrap();
        let targets: Vec<Target> = ks.iter().map(|&k| Target::Path(k)).collect();
        // color i becomes perm[i-1], so target i must move with it
        let mut moved = targets.clone();
        for (i, &t) in targets.iter().enumerate() {
            moved[perm[i] as usize - 1] = t;
        }
        let a = verify_coloring(&col, &targets).unwrap();
        let b = verify_coloring(&col.permute_colors(&perm).unwrap(), &moved).unwrap();
        prop_assert_eq!(a.is_good(), b.is_good());
        for (i, c) in a.classes.iter().enumerate() {
            let d = &b.classes[perm[i] as usize - 1];
            prop_assert_eq!((c.edges, c.longest_path, c.circumference), (d.edges, d.longest_path, d.circumference));
            prop_assert_eq!(c.violation.is_some(), d.violation.is_some());
        }
    }
}
