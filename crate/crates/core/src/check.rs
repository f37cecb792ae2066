//! Property suite behind the `check` command.
//!
//! [`check_instance`] runs every per-instance property against one graph;
//! [`check_global`] runs the instance-independent searches; [`run_sweeps`]
//! adds seeded random sweeps. Output order is fixed, so identical inputs give
//! identical reports regardless of the worker count.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::generate::{generate, GeneratorConfig};
use crate::model::{compute_stats, LabelId, LabeledGraph, Semantics};
use crate::properties::{
    check_f_symmetric, check_g_monotone, check_g_submodular, find_f_submodularity_violation, label_degree_bound,
    CountMode, PropertyVerdict, SampleConfig, SearchBounds,
};
use crate::reductions::{self, random_instance};
use crate::solvers::{exact_min_label_cut, greedy_st_label_cut, min_edge_cut, SolveConfig, Variant};
use crate::transform::{operation_k, verify_guarantees};

/// Environment variable capping internal parallelism; `0` or unset means automatic.
pub const THREADS_ENV: &str = "LABELCUT_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    pub sample: SampleConfig,
    pub budget: usize,
    /// Label count up to which removal properties enumerate every subset.
    pub subset_limit: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            sample: SampleConfig::default(),
            budget: crate::solvers::DEFAULT_BUDGET,
            subset_limit: 10,
        }
    }
}

/// Thread pool honoring [`THREADS_ENV`].
pub fn thread_pool() -> rayon::ThreadPool {
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

fn label_subsets(g: &LabeledGraph, cfg: &CheckConfig) -> Vec<Vec<LabelId>> {
    use rand::Rng;
    let k = g.label_count();
    if k <= cfg.subset_limit {
        (0u64..1 << k)
            .map(|s| (0..k).filter(|&l| s >> l & 1 == 1).collect())
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.sample.seed ^ 0x7375_6273);
        (0..cfg.sample.samples.min(2_000))
            .map(|_| (0..k).filter(|_| rng.gen()).collect())
            .collect()
    }
}

pub fn check_instance(g: &LabeledGraph, cfg: &CheckConfig) -> Vec<PropertyVerdict> {
    let mut out = Vec::new();
    let within_budget = g.label_count() <= cfg.budget;
    let over_budget = || format!("labels={} budget={}", g.label_count(), cfg.budget);

    let stats = compute_stats(g);
    let freq_total: usize = stats.label_frequency.iter().sum();
    let dl_le_deg = !g.is_non_overlapping() || (0..g.vertex_count()).all(|v| stats.label_degree[v] <= g.degree(v));
    out.push(PropertyVerdict::new(
        "stats_consistent",
        freq_total >= g.edge_count() && dl_le_deg,
        format!("min_dl={} max_dl={} f_max={}", stats.min_label_degree, stats.max_label_degree, stats.max_label_frequency),
    ));

    // operation K
    let report = operation_k(g);
    match verify_guarantees(&report, g) {
        Ok(v) => {
            for c in &v.clauses {
                out.push(PropertyVerdict::new(format!("operation_k_{}", c.clause.name()), c.passed, c.detail.clone()));
            }
        }
        Err(e) => out.push(PropertyVerdict::new("operation_k_provenance", false, e.to_string())),
    }
    let again = operation_k(&report.transformed);
    out.push(PropertyVerdict::new(
        "operation_k_idempotent",
        again.is_identity(),
        format!("classes={}", again.classes.len()),
    ));

    let mut variants = vec![Variant::Global];
    if g.terminals().is_some() {
        variants.push(Variant::St);
    }
    for &variant in &variants {
        let name = format!("operation_k_preserves_{variant}_cut");
        if !within_budget {
            out.push(PropertyVerdict::skip(name, over_budget()));
            continue;
        }
        if variant == Variant::Global && g.vertex_count() < 2 {
            out.push(PropertyVerdict::skip(name, "single vertex"));
            continue;
        }
        let cfg_c = SolveConfig { budget: cfg.budget, ..SolveConfig::new(variant, Semantics::Cascading) };
        let before = exact_min_label_cut(g, &cfg_c);
        let after = exact_min_label_cut(&report.transformed, &cfg_c);
        match (before, after) {
            (Ok(a), Ok(b)) => out.push(PropertyVerdict::new(
                name,
                a.total_weight == b.total_weight,
                format!("original={} transformed={}", a.weight_string(), b.weight_string()),
            )),
            (Err(e), _) | (_, Err(e)) => out.push(PropertyVerdict::new(name, false, e.to_string())),
        }
    }

    // label-degree bounds
    if !within_budget {
        out.push(PropertyVerdict::skip("degree_bound", over_budget()));
        out.push(PropertyVerdict::skip("isolation_bound_cascading", over_budget()));
    } else if g.vertex_count() < 2 {
        out.push(PropertyVerdict::skip("degree_bound", "single vertex"));
        out.push(PropertyVerdict::skip("isolation_bound_cascading", "single vertex"));
    } else {
        match label_degree_bound(g, Semantics::Independent, cfg.budget) {
            Ok(b) => {
                let unit = g.is_unit_weighted();
                let held = if unit { b.holds_raw(g.denominator()) } else { b.holds_isolation() };
                out.push(PropertyVerdict::new(
                    "degree_bound",
                    held,
                    format!("cut={} min_dl={} isolation={}", b.cut_weight, b.min_label_degree, b.isolation_weight),
                ));
            }
            Err(e) => out.push(PropertyVerdict::new("degree_bound", false, e.to_string())),
        }
        match label_degree_bound(g, Semantics::Cascading, cfg.budget) {
            Ok(b) => out.push(PropertyVerdict::new(
                "isolation_bound_cascading",
                b.holds_isolation(),
                format!(
                    "cut={} isolation={} vertex={} raw_dl_bound={}",
                    b.cut_weight,
                    b.isolation_weight,
                    b.isolation_vertex,
                    if b.holds_raw(g.denominator()) { "held" } else { "exceeded" }
                ),
            )),
            Err(e) => out.push(PropertyVerdict::new("isolation_bound_cascading", false, e.to_string())),
        }
    }

    // removal semantics
    let subsets = label_subsets(g, cfg);
    let exhaustive = g.label_count() <= cfg.subset_limit;
    let mut contain_bad = None;
    let mut coincide_bad = None;
    let mut monotone_bad = None;
    for s in &subsets {
        let ind = g.remove_labels(s, Semantics::Independent).expect("labels in range");
        let casc = g.remove_labels(s, Semantics::Cascading).expect("labels in range");
        if contain_bad.is_none() && !casc.is_subset_of(&ind) {
            contain_bad = Some(s.clone());
        }
        if coincide_bad.is_none() && g.is_non_overlapping() && casc != ind {
            coincide_bad = Some(s.clone());
        }
        if monotone_bad.is_none() {
            if let Some(extra) = (0..g.label_count()).find(|l| !s.contains(l)) {
                let mut bigger = s.clone();
                bigger.push(extra);
                let more = g.remove_labels(&bigger, Semantics::Independent).expect("labels in range");
                if !more.is_subset_of(&ind) {
                    monotone_bad = Some(bigger);
                }
            }
        }
    }
    let scope = format!("subsets={} exhaustive={exhaustive}", subsets.len());
    let witness = |bad: &Option<Vec<LabelId>>| match bad {
        None => scope.clone(),
        Some(s) => format!("{scope} set={s:?}"),
    };
    out.push(PropertyVerdict::new("cascading_within_independent", contain_bad.is_none(), witness(&contain_bad)));
    if g.is_non_overlapping() {
        out.push(PropertyVerdict::new("semantics_coincide", coincide_bad.is_none(), witness(&coincide_bad)));
    } else {
        out.push(PropertyVerdict::skip("semantics_coincide", "instance has overlaps"));
    }
    out.push(PropertyVerdict::new("removal_monotone", monotone_bad.is_none(), witness(&monotone_bad)));

    // cut-set functions
    let sub = check_g_submodular(g, &cfg.sample);
    out.push(PropertyVerdict::new(
        "g_submodular",
        sub.holds(),
        match &sub.violation {
            None => format!("pairs={} exhaustive={}", sub.pairs_checked, sub.exhaustive),
            Some(v) => format!("first={:?} second={:?} values={:?}", v.first, v.second, v.values),
        },
    ));
    let mono = check_g_monotone(g, &cfg.sample);
    out.push(PropertyVerdict::new(
        "g_monotone",
        mono.is_none(),
        mono.map(|(s, e)| format!("set={s:?} edge={e}")).unwrap_or_default(),
    ));
    for mode in [CountMode::Raw, CountMode::Merged] {
        let bad = check_f_symmetric(g, mode, &cfg.sample);
        out.push(PropertyVerdict::new(
            format!("f_symmetric_{}", mode.as_str()),
            bad.is_none(),
            bad.map(|a| format!("set={a:?}")).unwrap_or_default(),
        ));
    }

    // s-t specific
    if g.terminals().is_none() {
        for name in ["greedy_feasible", "greedy_not_below_exact", "menger_matches_label_cut"] {
            out.push(PropertyVerdict::skip(name, "no terminals"));
        }
        return out;
    }
    for semantics in [Semantics::Cascading, Semantics::Independent] {
        let scfg = SolveConfig { budget: cfg.budget, ..SolveConfig::st(semantics) };
        let greedy = greedy_st_label_cut(g, &scfg);
        let suffix = semantics.as_str();
        match &greedy {
            Ok(sol) => out.push(PropertyVerdict::new(
                format!("greedy_feasible_{suffix}"),
                sol.verify(g, semantics),
                format!("weight={} labels={}", sol.weight_string(), sol.labels.len()),
            )),
            Err(e) => out.push(PropertyVerdict::new(format!("greedy_feasible_{suffix}"), false, e.to_string())),
        }
        let name = format!("greedy_not_below_exact_{suffix}");
        if !within_budget {
            out.push(PropertyVerdict::skip(name, over_budget()));
            continue;
        }
        match (greedy, exact_min_label_cut(g, &scfg)) {
            (Ok(gr), Ok(ex)) => out.push(PropertyVerdict::new(
                name,
                gr.total_weight >= ex.total_weight,
                format!("greedy={} exact={}", gr.weight_string(), ex.weight_string()),
            )),
            (Err(e), _) | (_, Err(e)) => out.push(PropertyVerdict::new(name, false, e.to_string())),
        }
    }
    let bijective = g.is_unit_weighted()
        && g.is_non_overlapping()
        && stats.label_frequency.iter().all(|&f| f <= 1);
    if !bijective {
        out.push(PropertyVerdict::skip("menger_matches_label_cut", "labels not one per edge"));
    } else if !within_budget {
        out.push(PropertyVerdict::skip("menger_matches_label_cut", over_budget()));
    } else {
        let flow = min_edge_cut(g).map(|c| c.value);
        let cut = exact_min_label_cut(g, &SolveConfig { budget: cfg.budget, ..SolveConfig::st(Semantics::Independent) });
        match (flow, cut) {
            (Ok(f), Ok(c)) => out.push(PropertyVerdict::new(
                "menger_matches_label_cut",
                f as u64 * g.denominator() == c.total_weight,
                format!("edge_cut={f} label_cut={}", c.weight_string()),
            )),
            (Err(e), _) | (_, Err(e)) => out.push(PropertyVerdict::new("menger_matches_label_cut", false, e.to_string())),
        }
    }
    out
}

/// Instance-independent checks: the hedge cut function has a
/// non-submodularity witness, and the plain edge cut function has none.
pub fn check_global() -> Vec<PropertyVerdict> {
    let mut out = Vec::new();
    match find_f_submodularity_violation(&SearchBounds::default()) {
        Some(v) => {
            let (lhs, rhs) = v.marginal_gains();
            let edges: Vec<String> = v
                .graph
                .edges()
                .iter()
                .map(|e| {
                    let ls: Vec<String> = e.labels.iter().map(|l| l.to_string()).collect();
                    format!("{}-{}:{}", e.u, e.v, ls.join(","))
                })
                .collect();
            out.push(PropertyVerdict::new(
                "f_not_submodular",
                v.confirm(),
                format!(
                    "n={} edges=[{}] A={:?} B={:?} f(A)={} f(B)={} f(AuB)={} f(AnB)={} gains {}<{} shape={}",
                    v.graph.vertex_count(),
                    edges.join(" "),
                    v.a,
                    v.b,
                    v.f_a,
                    v.f_b,
                    v.f_union,
                    v.f_intersection,
                    lhs,
                    rhs,
                    v.shape.as_str()
                ),
            ));
        }
        None => out.push(PropertyVerdict::new("f_not_submodular", false, "no witness within bounds")),
    }
    let control = find_f_submodularity_violation(&SearchBounds { distinct_edge_labels: true, ..SearchBounds::default() });
    out.push(PropertyVerdict::new(
        "plain_cut_submodular",
        control.is_none(),
        control.map(|v| format!("A={:?} B={:?}", v.a, v.b)).unwrap_or_default(),
    ));
    out
}

/// Seeded random overlap instances for sweeps: `n <= 20`, `|L| <= 12`.
pub fn sweep_instance(index: u64, seed: u64) -> LabeledGraph {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ index);
    let n = rng.gen_range(2..=20);
    let max_m = (n * (n - 1) / 2).min(2 * n + 4);
    let m = rng.gen_range(n - 1..=max_m);
    let labels = rng.gen_range(2..=12);
    let overlap = [0.1, 0.2, 0.3, 0.5][rng.gen_range(0..4)];
    generate(&GeneratorConfig {
        n,
        m,
        labels,
        overlap,
        weights: (1, 1),
        seed: rng.gen(),
        terminals: true,
    })
    .expect("sweep parameters are feasible")
}

/// Small seeded instances for exact double-solving: `|L| <= 12`, `m <= 14`.
pub fn small_sweep_instance(index: u64, seed: u64) -> LabeledGraph {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0xbf58_476d_1ce4_e5b9) ^ index);
    let n = rng.gen_range(2..=9);
    let max_m = (n * (n - 1) / 2).min(14);
    let m = rng.gen_range(n - 1..=max_m);
    let labels = rng.gen_range(1..=12);
    let overlap = [0.0, 0.2, 0.4, 0.6][rng.gen_range(0..4)];
    generate(&GeneratorConfig {
        n,
        m,
        labels,
        overlap,
        weights: (1, 1),
        seed: rng.gen(),
        terminals: true,
    })
    .expect("sweep parameters are feasible")
}

/// Random sweeps: operation K guarantees, cut preservation and the hitting-set
/// reduction, `count` instances each.
pub fn run_sweeps(count: u64, seed: u64) -> Vec<PropertyVerdict> {
    let pool = thread_pool();
    pool.install(|| {
        let mut out = Vec::new();

        let failures: Vec<(u64, String)> = (0..count)
            .into_par_iter()
            .filter_map(|i| {
                let g = sweep_instance(i, seed);
                let v = verify_guarantees(&operation_k(&g), &g).expect("own report");
                let bad: Vec<String> = v
                    .clauses
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| format!("{}({})", c.clause.name(), c.detail))
                    .collect();
                (!bad.is_empty()).then(|| (i, bad.join(";")))
            })
            .collect();
        out.push(PropertyVerdict::new(
            "sweep_operation_k_guarantees",
            failures.is_empty(),
            match failures.first() {
                None => format!("instances={count}"),
                Some((i, why)) => format!("instances={count} failures={} first=#{i} {why}", failures.len()),
            },
        ));

        let mismatches: Vec<(u64, u64, u64)> = (0..count)
            .into_par_iter()
            .filter_map(|i| {
                let g = small_sweep_instance(i, seed);
                let cfg = SolveConfig::global(Semantics::Cascading);
                let a = exact_min_label_cut(&g, &cfg).expect("small instance").total_weight;
                let b = exact_min_label_cut(&operation_k(&g).transformed, &cfg).expect("small instance").total_weight;
                (a != b).then_some((i, a, b))
            })
            .collect();
        out.push(PropertyVerdict::new(
            "sweep_operation_k_preserves_cut",
            mismatches.is_empty(),
            match mismatches.first() {
                None => format!("instances={count}"),
                Some((i, a, b)) => format!("instances={count} first=#{i} original={a} transformed={b}"),
            },
        ));

        let disagreements: Vec<u64> = (0..count)
            .into_par_iter()
            .filter(|&i| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (i << 8) ^ 0x6873);
                let h = random_instance(&mut rng, 6, 1 + (i % 4) as usize, 4);
                match reductions::optima(&h) {
                    Ok((hs, cut)) => hs.len() != cut.len(),
                    Err(_) => true,
                }
            })
            .collect();
        out.push(PropertyVerdict::new(
            "sweep_reduction_equivalence",
            disagreements.is_empty(),
            match disagreements.first() {
                None => format!("instances={count}"),
                Some(i) => format!("instances={count} first=#{i}"),
            },
        ));
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixtures_pass_the_suite() {
        for (name, g) in fixtures::all() {
            for v in check_instance(&g, &CheckConfig::default()) {
                assert!(!v.failed(), "{name}: {v}");
            }
        }
    }

    #[test]
    fn chain_fails_only_the_size_bound() {
        let failed: Vec<String> = check_instance(&fixtures::overlap_chain(), &CheckConfig::default())
            .into_iter()
            .filter(|v| v.failed())
            .map(|v| v.name)
            .collect();
        assert_eq!(failed, vec!["operation_k_weight_bound".to_string()]);
    }

    #[test]
    fn global_checks_pass() {
        assert!(check_global().iter().all(|v| !v.failed()));
    }

    #[test]
    fn sweep_instances_respect_bounds() {
        for i in 0..50 {
            let g = sweep_instance(i, 1);
            assert!(g.vertex_count() <= 20 && g.label_count() <= 12);
            let g = small_sweep_instance(i, 1);
            assert!(g.label_count() <= 12 && g.edge_count() <= 14);
        }
    }
}
