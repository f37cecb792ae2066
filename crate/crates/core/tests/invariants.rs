mod common;

use common::*;
use labelcut::generate::{generate, GeneratorConfig};
use labelcut::properties::{check_f_symmetric, check_g_submodular, eval_f, eval_g, CountMode, SampleConfig};
use labelcut::transform::verify_guarantees;
use labelcut::{io, operation_k, EdgeSubset, LabeledGraph, Semantics};
use proptest::prelude::*;

fn graphs() -> impl Strategy<Value = LabeledGraph> {
    (2usize..9, 0usize..6, 1usize..9, prop_oneof![Just(0.0), Just(0.3), Just(0.6)], 1u64..4, any::<u64>())
        .prop_map(|(n, extra, labels, overlap, hi, seed)| {
            let m = (n - 1 + extra).min(n * (n - 1) / 2);
            generate(&GeneratorConfig { n, m, labels, overlap, weights: (1, hi), seed, terminals: true }).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn emit_then_parse_is_identity(g in graphs()) {
        let text = io::emit(&g);
        let back = io::parse(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(io::emit(&back), text);
    }

    #[test]
    fn operation_k_output_is_overlap_free_and_weight_preserving(g in graphs()) {
        let r = operation_k(&g);
        prop_assert!(r.transformed.is_non_overlapping());
        prop_assert_eq!(r.total_new_weight(), g.labels().iter().map(|l| l.weight).sum::<u64>());
        prop_assert!(operation_k(&r.transformed).is_identity());
        let v = verify_guarantees(&r, &g).unwrap();
        prop_assert!(v.clauses[0].passed && v.clauses[2].passed);
        // every class is closed: no edge mixes labels of two classes
        for e in g.edges() {
            let classes: Vec<_> = e.labels.iter().map(|&l| r.class_of(l)).collect();
            prop_assert!(classes.windows(2).all(|w| w[0] == w[1]));
        }
    }

    #[test]
    fn removal_matches_oracle(g in graphs(), pick in any::<u64>()) {
        let sel = pick & ((1u64 << g.label_count()) - 1);
        let labels = ids(sel);
        let ind = g.remove_labels(&labels, Semantics::Independent).unwrap();
        let casc = g.remove_labels(&labels, Semantics::Cascading).unwrap();
        prop_assert_eq!(ind.as_mask(), &surviving(&g, sel)[..]);
        prop_assert_eq!(casc.as_mask(), &surviving(&g, closure(&g, sel))[..]);
        prop_assert!(casc.is_subset_of(&ind));
        if g.is_non_overlapping() {
            prop_assert_eq!(casc, ind);
        }
    }

    #[test]
    fn label_degree_bounds(g in graphs()) {
        let s = g.stats();
        for v in 0..g.vertex_count() {
            let incident: usize = g.edges().iter().filter(|e| e.u == v || e.v == v).map(|e| e.labels.len()).sum();
            prop_assert!(s.label_degree[v] <= incident);
            if g.is_non_overlapping() {
                prop_assert!(s.label_degree[v] <= g.degree(v));
            }
        }
    }

    #[test]
    fn g_is_monotone_and_submodular(g in graphs(), a in any::<u64>(), b in any::<u64>()) {
        let m = g.edge_count();
        let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let (a, b) = (a & full, b & full);
        let ev = |s: u64| eval_g(&g, &(0..m).filter(|e| s >> e & 1 == 1).collect::<Vec<_>>()).unwrap();
        prop_assert!(ev(a) + ev(b) >= ev(a | b) + ev(a & b));
        prop_assert!(ev(a & b) <= ev(a));
        let cfg = SampleConfig { samples: 200, ..SampleConfig::default() };
        prop_assert!(check_g_submodular(&g, &cfg).holds());
    }

    #[test]
    fn f_is_symmetric(g in graphs(), pick in any::<u64>()) {
        let n = g.vertex_count();
        let inside: Vec<usize> = (0..n).filter(|v| pick >> v & 1 == 1).collect();
        let outside: Vec<usize> = (0..n).filter(|v| pick >> v & 1 == 0).collect();
        for mode in [CountMode::Raw, CountMode::Merged] {
            prop_assert_eq!(eval_f(&g, &inside, mode).unwrap(), eval_f(&g, &outside, mode).unwrap());
            prop_assert_eq!(check_f_symmetric(&g, mode, &SampleConfig::default()), None);
        }
    }

    #[test]
    fn edge_subset_masks_round_trip(mask in proptest::collection::vec(any::<bool>(), 0..40)) {
        let s = EdgeSubset::from_mask(mask.clone());
        prop_assert_eq!(EdgeSubset::from_ids(mask.len(), s.ids()), s.clone());
        prop_assert_eq!(s.len(), mask.iter().filter(|&&b| b).count());
    }
}

#[test]
fn generated_instances_always_validate() {
    for seed in 0..10_000u64 {
        let n = 2 + (seed % 19) as usize;
        let max_m = n * (n - 1) / 2;
        let m = (n - 1 + (seed / 19 % 7) as usize).min(max_m);
        let cfg = GeneratorConfig { n, m, labels: 1 + (seed % 12) as usize, overlap: 0.4, weights: (1, 3), seed, terminals: true };
        let g = generate(&cfg).unwrap();
        let edges: Vec<_> = g.edges().iter().map(|e| (e.u, e.v, e.labels.clone())).collect();
        let weights = g.labels().iter().enumerate().map(|(l, x)| (l, x.weight)).collect();
        labelcut::build_graph(n, &edges, Some(&weights)).unwrap();
        assert_eq!(g.edge_count(), m);
    }
}
