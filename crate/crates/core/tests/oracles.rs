mod common;

use common::*;
use labelcut::check::small_sweep_instance;
use labelcut::generate::{generate, GeneratorConfig};
use labelcut::reductions::{brute_force_hitting_set, hitting_set_to_st_label_cut, optima, random_instance};
use labelcut::solvers::{decide_cut_at_most, min_edge_cut_between};
use labelcut::{exact_min_label_cut, greedy_st_label_cut, min_edge_cut, operation_k, Semantics, SolveConfig, Variant};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEMANTICS: [(Semantics, bool); 2] = [(Semantics::Independent, false), (Semantics::Cascading, true)];

#[test]
fn exact_solver_matches_enumeration() {
    for i in 0..300 {
        let g = small_sweep_instance(i, 7);
        if g.vertex_count() < 2 {
            continue;
        }
        for (sem, cascading) in SEMANTICS {
            for (variant, st) in [(Variant::Global, None), (Variant::St, g.terminals())] {
                let sol = exact_min_label_cut(&g, &SolveConfig::new(variant, sem)).unwrap();
                let oracle = brute_min_label_cut(&g, st, cascading).unwrap();
                assert_eq!(sol.total_weight, oracle, "instance {i} {variant} {sem}");
                let removed = if cascading { closure(&g, mask_of(&sol.labels)) } else { mask_of(&sol.labels) };
                assert_eq!(removed, mask_of(&sol.labels), "reported labels are the removed set");
                assert!(disconnects(&g, &surviving(&g, removed), st));
            }
        }
    }
}

#[test]
fn weighted_exact_matches_enumeration() {
    for seed in 0..150 {
        let g = generate(&GeneratorConfig { n: 7, m: 11, labels: 8, overlap: 0.3, weights: (1, 9), seed, terminals: true })
            .unwrap();
        for (sem, cascading) in SEMANTICS {
            let sol = exact_min_label_cut(&g, &SolveConfig::st(sem)).unwrap();
            assert_eq!(sol.total_weight, brute_min_label_cut(&g, g.terminals(), cascading).unwrap(), "seed {seed}");
            let sol = exact_min_label_cut(&g, &SolveConfig::global(sem)).unwrap();
            assert_eq!(sol.total_weight, brute_min_label_cut(&g, None, cascading).unwrap(), "seed {seed}");
        }
    }
}

#[test]
fn decision_agrees_with_optimum() {
    for i in 0..100 {
        let g = small_sweep_instance(i, 11);
        if g.vertex_count() < 2 {
            continue;
        }
        let cfg = SolveConfig::st(Semantics::Cascading);
        let opt = brute_min_label_cut(&g, g.terminals(), true).unwrap();
        for p in 0..=opt + 1 {
            assert_eq!(decide_cut_at_most(&g, &cfg, p).unwrap(), p >= opt, "instance {i} p={p}");
        }
    }
}

#[test]
fn overlap_elimination_preserves_every_cut_value() {
    for i in 0..300 {
        let g = small_sweep_instance(i, 3);
        if g.vertex_count() < 2 {
            continue;
        }
        let t = operation_k(&g).transformed;
        assert!(t.is_non_overlapping());
        for st in [None, g.terminals()] {
            let before = brute_min_label_cut(&g, st, true).unwrap();
            assert_eq!(brute_min_label_cut(&t, st, false), Some(before), "instance {i} {st:?}");
            assert_eq!(brute_min_label_cut(&t, st, true), Some(before), "instance {i} {st:?}");
        }
    }
}

#[test]
fn greedy_is_feasible_and_never_below_optimum() {
    for i in 0..300 {
        let g = small_sweep_instance(i, 5);
        if g.vertex_count() < 2 {
            continue;
        }
        for (sem, cascading) in SEMANTICS {
            let sol = greedy_st_label_cut(&g, &SolveConfig::st(sem)).unwrap();
            let removed = if cascading { closure(&g, mask_of(&sol.labels)) } else { mask_of(&sol.labels) };
            assert!(disconnects(&g, &surviving(&g, removed), g.terminals()), "instance {i}");
            assert!(sol.total_weight >= brute_min_label_cut(&g, g.terminals(), cascading).unwrap());
        }
    }
}

#[test]
fn max_flow_matches_edge_subset_enumeration() {
    let mut checked = 0;
    for i in 0..400 {
        let g = small_sweep_instance(i, 13);
        if g.vertex_count() < 2 || g.vertex_count() > 8 {
            continue;
        }
        for s in 0..g.vertex_count() {
            for t in s + 1..g.vertex_count() {
                let cut = min_edge_cut_between(&g, s, t).unwrap();
                assert_eq!(cut.value, brute_min_edge_cut(&g, s, t), "instance {i} {s}-{t}");
                assert_eq!(cut.edges.len(), cut.value);
                assert_eq!(cut.paths.len(), cut.value);
                let mut used = vec![false; g.edge_count()];
                for p in &cut.paths {
                    let mut at = s;
                    for &e in p {
                        assert!(!used[e], "paths share edge {e}");
                        used[e] = true;
                        at = g.edges()[e].other(at);
                    }
                    assert_eq!(at, t);
                }
                let alive: Vec<bool> = (0..g.edge_count()).map(|e| !cut.edges.contains(&e)).collect();
                assert!(disconnects(&g, &alive, Some((s, t))));
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn hitting_set_solver_matches_integer_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for round in 0..500 {
        let universe = 1 + round % 10;
        let h = random_instance(&mut rng, universe, 1 + round % 5, 4);
        let best = brute_force_hitting_set(&h).unwrap();
        assert!(h.is_hit_by(&best));
        assert_eq!(best.len(), brute_hitting_set_size(universe, &h.subsets), "round {round}");
        let g = hitting_set_to_st_label_cut(&h).unwrap();
        assert_eq!(brute_min_label_cut(&g, g.terminals(), false), Some(best.len() as u64));
        let (hs, cut) = optima(&h).unwrap();
        assert_eq!(hs.len(), cut.len());
    }
}

#[test]
fn label_cut_equals_edge_cut_with_one_label_per_edge() {
    for seed in 0..100 {
        let n = 3 + (seed as usize % 6);
        let m = (n * (n - 1) / 2).min(n + 4);
        let base = generate(&GeneratorConfig { n, m, labels: 1, seed, ..Default::default() }).unwrap();
        let mut b = labelcut::LabeledGraph::builder(n).label_count(m).terminals(0, n - 1);
        for (id, e) in base.edges().iter().enumerate() {
            b.push_edge(e.u, e.v, vec![id]);
        }
        let g = b.build().unwrap();
        let flow = min_edge_cut(&g).unwrap().value as u64;
        assert_eq!(exact_min_label_cut(&g, &SolveConfig::st(Semantics::Independent)).unwrap().total_weight, flow);
    }
}

#[test]
fn label_degrees_match_direct_count() {
    for i in 0..200 {
        let g = labelcut::check::sweep_instance(i, 2);
        assert_eq!(g.stats().label_degree, label_degrees(&g));
    }
}
