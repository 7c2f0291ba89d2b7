mod common;

use std::time::Duration;

use common::{all_assignments, brute_force_good_exists, Pattern};
use pathramsey::constructions::blowup_witness;
use pathramsey::graph::verify_coloring;
use pathramsey::search::{
    compute_ramsey, find_good_coloring, satisfies_symmetry, turan_budget_prune, RamseyValue,
    SearchConfig, SearchStatus, SymmetryOptions,
};
use pathramsey::{Color, EdgeColoring, Target};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

const ALL_SYMMETRY: SymmetryOptions = SymmetryOptions {
    color_precedence: true,
    vertex_order: true,
};

fn pattern(t: Target) -> Pattern {
    match t {
        Target::Path(k) => Pattern::Path(k),
        Target::Cycle(k) => Pattern::Cycle(k),
    }
}

fn small_targets() -> Vec<Vec<Target>> {
    let menu = [
        Target::Path(1),
        Target::Path(2),
        Target::Path(3),
        Target::Path(4),
        Target::Cycle(3),
        Target::Cycle(4),
    ];
    let mut out = Vec::new();
    for a in menu {
        for b in menu {
            for c in menu {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

fn configs(n: usize, targets: &[Target]) -> Vec<SearchConfig> {
    let full = SearchConfig::new(n, targets.to_vec());
    let mut no_sym = full.clone();
    no_sym.symmetry = SymmetryOptions {
        color_precedence: false,
        vertex_order: false,
    };
    let mut no_capacity = full.clone();
    no_capacity.pruning.capacity = false;
    let mut sym_only = SearchConfig::brute_force(n, targets.to_vec());
    sym_only.symmetry = ALL_SYMMETRY;
    vec![
        full,
        no_sym,
        no_capacity,
        sym_only,
        SearchConfig::brute_force(n, targets.to_vec()),
    ]
}

#[test]
fn search_agrees_with_plain_enumeration() {
    for targets in small_targets() {
        let patterns: Vec<Pattern> = targets.iter().map(|&t| pattern(t)).collect();
        for n in 1..=5 {
            let expected = brute_force_good_exists(n, &patterns);
            for cfg in configs(n, &targets) {
                let out = find_good_coloring(&cfg).unwrap();
                let want = if expected {
                    SearchStatus::Witness
                } else {
                    SearchStatus::ExhaustedNone
                };
                assert_eq!(out.status, want, "n={n} targets={targets:?} cfg={cfg:?}");
                if let Some(w) = out.witness {
                    assert!(verify_coloring(&w, &targets).unwrap().is_good());
                }
            }
        }
    }
}

#[test]
fn symmetry_rules_visit_exactly_the_canonical_colorings() {
    // no class may hold an edge, so nothing is good and every surviving
    // leaf is visited
    for targets in [
        vec![Target::Path(2); 3],
        vec![Target::Path(2), Target::Path(2), Target::Path(1)],
        vec![Target::Path(1), Target::Path(2), Target::Path(1)],
    ] {
        for n in 2..=5 {
            let mut cfg = SearchConfig::brute_force(n, targets.clone());
            cfg.symmetry = ALL_SYMMETRY;
            let out = find_good_coloring(&cfg).unwrap();
            let canonical = all_assignments(n, 3)
                .into_iter()
                .filter(|a| {
                    let col = EdgeColoring::from_assignments(n, 3, a.clone()).unwrap();
                    satisfies_symmetry(&col, &targets, ALL_SYMMETRY).unwrap()
                })
                .count() as u64;
            assert_eq!(out.status, SearchStatus::ExhaustedNone);
            assert_eq!(out.stats.leaves, canonical, "n={n} {targets:?}");
        }
    }
}

/// Every relabelling of vertices and of equal-target colors maps `col` to
/// something; at least one image must be canonical.
fn orbit_has_canonical(col: &EdgeColoring, targets: &[Target]) -> bool {
    let n = col.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let color_perms: Vec<Vec<Color>> = permutations(&[1, 2, 3])
        .into_iter()
        .filter(|p| (0..3).all(|i| targets[p[i] as usize - 1] == targets[i]))
        .collect();
    loop {
        let moved = col.permute_vertices(&perm).unwrap();
        for cp in &color_perms {
            let c = moved.permute_colors(cp).unwrap();
            if satisfies_symmetry(&c, targets, ALL_SYMMETRY).unwrap() {
                return true;
            }
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn permutations(items: &[Color]) -> Vec<Vec<Color>> {
    let mut p = items.to_vec();
    let mut out = vec![p.clone()];
    while next_permutation(&mut p) {
        out.push(p.clone());
    }
    out
}

fn next_permutation<T: Ord>(p: &mut [T]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[test]
fn every_orbit_keeps_a_representative() {
    let targets = [
        vec![Target::Path(3); 3],
        vec![Target::Path(3), Target::Path(4), Target::Path(3)],
        vec![Target::Path(2), Target::Cycle(3), Target::Cycle(4)],
    ];
    for t in &targets {
        for n in 1..=4 {
            for a in all_assignments(n, 3) {
                let col = EdgeColoring::from_assignments(n, 3, a).unwrap();
                assert!(orbit_has_canonical(&col, t), "{col:?}");
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(11);
    for t in &targets {
        for _ in 0..150 {
            let n = rng.gen_range(5..=6);
            let col = EdgeColoring::from_fn(n, 3, |_, _| rng.gen_range(1..=3)).unwrap();
            assert!(orbit_has_canonical(&col, t));
        }
    }
}

#[test]
fn planted_witnesses_are_rediscovered() {
    let mut rng = StdRng::seed_from_u64(3);
    for k in 3..=5 {
        let w = blowup_witness(k).unwrap();
        let targets = vec![Target::Path(k); 3];
        for _ in 0..10 {
            let mut perm: Vec<usize> = (0..w.n()).collect();
            perm.shuffle(&mut rng);
            let mut colors = vec![1, 2, 3];
            colors.shuffle(&mut rng);
            let planted = w
                .permute_vertices(&perm)
                .unwrap()
                .permute_colors(&colors)
                .unwrap();
            assert!(verify_coloring(&planted, &targets).unwrap().is_good());
            if w.n() <= 6 {
                assert!(orbit_has_canonical(&planted, &targets));
            }
        }
        let out = find_good_coloring(&SearchConfig::new(w.n(), targets.clone())).unwrap();
        assert_eq!(
            out.status,
            SearchStatus::Witness,
            "P{k} on {} vertices",
            w.n()
        );
    }
}

#[test]
fn budget_prune_never_cuts_a_good_coloring() {
    for targets in small_targets()
        .into_iter()
        .filter(|t| t.iter().all(|x| matches!(x, Target::Path(_))))
    {
        let patterns: Vec<Pattern> = targets.iter().map(|&t| pattern(t)).collect();
        for n in 2..=5 {
            for a in all_assignments(n, 3) {
                let cls = common::classes(n, 3, &a);
                if cls
                    .iter()
                    .zip(&patterns)
                    .any(|(e, &p)| common::contains(n, e, p))
                {
                    continue;
                }
                // every lexicographic prefix of a good coloring survives
                for len in 0..=a.len() {
                    let mut prefix = a[..len].to_vec();
                    prefix.resize(a.len(), 0);
                    let partial = EdgeColoring::from_assignments(n, 3, prefix).unwrap();
                    assert!(
                        !turan_budget_prune(&partial, &targets).unwrap(),
                        "{targets:?} {a:?} {len}"
                    );
                }
            }
        }
    }
}

#[test]
fn small_ramsey_values() {
    let template = SearchConfig::new(1, vec![Target::Path(3); 3]);
    for (k, lo, hi, value) in [(3, 3, 6, 5), (4, 4, 8, 6), (5, 7, 10, 9)] {
        let (v, steps) = compute_ramsey(&[Target::Path(k); 3], lo, hi, &template).unwrap();
        assert_eq!(v, RamseyValue::Value(value), "P{k}");
        let last = steps.last().unwrap();
        assert_eq!(
            (last.n, last.outcome.status),
            (value, SearchStatus::ExhaustedNone)
        );
        let below = steps.iter().find(|s| s.n == value - 1).unwrap();
        assert_eq!(below.outcome.status, SearchStatus::Witness);
    }
    // range starting at the answer still confirms the witness below it
    let (v, steps) = compute_ramsey(&[Target::Path(3); 3], 5, 6, &template).unwrap();
    assert_eq!(v, RamseyValue::Value(5));
    assert_eq!(steps[0].n, 4);
    let (v, _) = compute_ramsey(&[Target::Path(3); 3], 3, 4, &template).unwrap();
    assert!(matches!(v, RamseyValue::Inconclusive(_)));
}

#[test]
fn single_worker_runs_are_reproducible() {
    for (n, k) in [(8, 5), (9, 5), (6, 4)] {
        let cfg = SearchConfig::new(n, vec![Target::Path(k); 3]);
        let a = find_good_coloring(&cfg).unwrap();
        let b = find_good_coloring(&cfg).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn worker_count_does_not_change_the_status() {
    for (n, k, want) in [
        (6, 4, SearchStatus::ExhaustedNone),
        (9, 5, SearchStatus::ExhaustedNone),
        (8, 5, SearchStatus::Witness),
        (9, 6, SearchStatus::Witness),
    ] {
        for workers in [1, 2, 4] {
            let mut cfg = SearchConfig::new(n, vec![Target::Path(k); 3]);
            cfg.workers = workers;
            let out = find_good_coloring(&cfg).unwrap();
            assert_eq!(out.status, want, "n={n} P{k} workers={workers}");
            if let Some(w) = out.witness {
                assert!(verify_coloring(&w, &cfg.targets).unwrap().is_good());
            }
        }
    }
}

#[test]
fn limits_are_never_reported_as_exhaustion() {
    for workers in [1, 3] {
        let mut cfg = SearchConfig::new(10, vec![Target::Path(6); 3]);
        cfg.workers = workers;
        cfg.node_limit = Some(1000);
        let out = find_good_coloring(&cfg).unwrap();
        assert_eq!(out.status, SearchStatus::LimitReached);
        assert!(out.witness.is_none());

        cfg.node_limit = None;
        cfg.time_limit = Some(Duration::from_millis(50));
        let out = find_good_coloring(&cfg).unwrap();
        assert_eq!(out.status, SearchStatus::LimitReached);
    }
}
