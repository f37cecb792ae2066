//! Hitting set to minimum label `s-t` cut, with brute-force cross-validation.
//!
//! Every subset `S_i` becomes an internally disjoint `s-t` path whose `j`-th
//! edge carries the `j`-th element of `S_i` as its only label. A label set
//! disconnects `s` from `t` exactly when it hits every subset, so the two
//! optima coincide.

use rand::Rng;
use thiserror::Error;

use crate::model::{GraphError, LabeledGraph};
use crate::solvers::{decide_cut_at_most, exact_min_label_cut, min_edge_cut, SolveConfig, SolveError};
use crate::transform::operation_k;

/// Largest universe the brute-force hitting-set solver accepts.
pub const MAX_UNIVERSE: usize = 24;

pub const SOURCE: usize = 0;
pub const SINK: usize = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("the family has no subsets; s and t would start disconnected")]
    EmptyFamily,
    #[error("subset {0} is empty")]
    EmptySubset(usize),
    #[error("subset {subset}: element {element} outside universe of size {universe}")]
    ElementOutOfRange { subset: usize, element: usize, universe: usize },
    #[error("subset {subset}: element {element} listed twice")]
    RepeatedElement { subset: usize, element: usize },
    #[error("universe of {0} elements exceeds the brute-force limit of {MAX_UNIVERSE}")]
    BudgetExceeded(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("hitting set says {hitting}, label cut says {cut} for l = {budget}")]
    Disagreement { budget: u64, hitting: bool, cut: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSetInstance {
    pub universe: usize,
    /// Each subset keeps the order it was given in.
    pub subsets: Vec<Vec<usize>>,
    pub budget: Option<u64>,
}

impl HittingSetInstance {
    pub fn new(universe: usize, subsets: Vec<Vec<usize>>) -> Result<Self, ReductionError> {
        let h = Self { universe, subsets, budget: None };
        h.validate()?;
        Ok(h)
    }

    pub fn validate(&self) -> Result<(), ReductionError> {
        for (i, s) in self.subsets.iter().enumerate() {
            if s.is_empty() {
                return Err(ReductionError::EmptySubset(i));
            }
            let mut seen = vec![false; self.universe];
            for &x in s {
                if x >= self.universe {
                    return Err(ReductionError::ElementOutOfRange { subset: i, element: x, universe: self.universe });
                }
                if seen[x] {
                    return Err(ReductionError::RepeatedElement { subset: i, element: x });
                }
                seen[x] = true;
            }
        }
        Ok(())
    }

    pub fn is_hit_by(&self, chosen: &[usize]) -> bool {
        self.subsets.iter().all(|s| s.iter().any(|x| chosen.contains(x)))
    }
}

/// Size of the constructed graph: `(vertices, edges)`.
///
/// `2 + Σ(|S_i| - 1)` vertices and `Σ|S_i|` edges, plus one vertex and one
/// edge for each singleton subset after the first. Singletons beyond the
/// first cannot reuse the direct `s-t` edge in a simple graph, so they become
/// two-edge paths with the element on both edges.
pub fn construction_size(h: &HittingSetInstance) -> (usize, usize) {
    let extra = h.subsets.iter().filter(|s| s.len() == 1).count().saturating_sub(1);
    let n = 2 + h.subsets.iter().map(|s| s.len() - 1).sum::<usize>() + extra;
    let m = h.subsets.iter().map(|s| s.len()).sum::<usize>() + extra;
    (n, m)
}

/// Builds the path graph with `s = 0`, `t = 1`; interior vertices are numbered
/// in subset order. Label `x` is element `x` at unit weight.
pub fn hitting_set_to_st_label_cut(h: &HittingSetInstance) -> Result<LabeledGraph, ReductionError> {
    h.validate()?;
    if h.subsets.is_empty() {
        return Err(ReductionError::EmptyFamily);
    }
    let (n, _) = construction_size(h);
    let mut b = LabeledGraph::builder(n).label_count(h.universe).terminals(SOURCE, SINK);
    let mut next = 2;
    let mut direct_used = false;
    for s in &h.subsets {
        if s.len() == 1 && !direct_used {
            direct_used = true;
            b.push_edge(SOURCE, SINK, vec![s[0]]);
            continue;
        }
        let elems: Vec<usize> = if s.len() == 1 { vec![s[0], s[0]] } else { s.clone() };
        let mut prev = SOURCE;
        for (j, &x) in elems.iter().enumerate() {
            let to = if j + 1 == elems.len() {
                SINK
            } else {
                next += 1;
                next - 1
            };
            b.push_edge(prev, to, vec![x]);
            prev = to;
        }
    }
    Ok(b.build()?)
}

/// Minimum hitting set: subsets of the universe by increasing size, each size
/// in lexicographic order, so ties go to the lexicographically smallest set.
pub fn brute_force_hitting_set(h: &HittingSetInstance) -> Result<Vec<usize>, ReductionError> {
    h.validate()?;
    if h.universe > MAX_UNIVERSE {
        return Err(ReductionError::BudgetExceeded(h.universe));
    }
    let masks: Vec<u32> = h.subsets.iter().map(|s| s.iter().fold(0u32, |m, &x| m | 1 << x)).collect();
    for k in 0..=h.universe {
        let mut comb: Vec<usize> = (0..k).collect();
        loop {
            let chosen = comb.iter().fold(0u32, |m, &x| m | 1 << x);
            if masks.iter().all(|&s| s & chosen != 0) {
                return Ok(comb);
            }
            // next combination in lexicographic order
            let mut i = k;
            while i > 0 && comb[i - 1] == h.universe - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            comb[i - 1] += 1;
            for j in i..k {
                comb[j] = comb[j - 1] + 1;
            }
        }
    }
    unreachable!("the whole universe hits every nonempty subset")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionReport {
    pub budget: u64,
    pub hitting_at_most: bool,
    pub cut_at_most: bool,
    /// Number of edge-disjoint `s-t` paths in the constructed graph.
    pub min_edge_cut: usize,
    /// Labels after overlap elimination (the construction has no overlaps).
    pub merged_labels: usize,
}

/// Decides both sides at threshold `l` and fails with
/// [`ReductionError::Disagreement`] if they differ. The label-cut side runs on
/// the operation-K output of the constructed graph.
pub fn decision_pipeline(h: &HittingSetInstance, l: u64) -> Result<DecisionReport, ReductionError> {
    let hs = brute_force_hitting_set(h)?;
    let hitting_at_most = hs.len() as u64 <= l;
    let g = hitting_set_to_st_label_cut(h)?;
    let flow = min_edge_cut(&g)?;
    let merged = operation_k(&g);
    let cut_at_most = decide_cut_at_most(&merged.transformed, &SolveConfig::st(Default::default()), l)?;
    if hitting_at_most != cut_at_most {
        return Err(ReductionError::Disagreement { budget: l, hitting: hitting_at_most, cut: cut_at_most });
    }
    Ok(DecisionReport {
        budget: l,
        hitting_at_most,
        cut_at_most,
        min_edge_cut: flow.value,
        merged_labels: merged.classes.len(),
    })
}

/// Both optima for one instance: `(hitting set, label cut)`.
pub fn optima(h: &HittingSetInstance) -> Result<(Vec<usize>, Vec<usize>), ReductionError> {
    let hs = brute_force_hitting_set(h)?;
    let g = hitting_set_to_st_label_cut(h)?;
    let cut = exact_min_label_cut(&g, &SolveConfig { budget: MAX_UNIVERSE, ..SolveConfig::st(Default::default()) })?;
    Ok((hs, cut.labels))
}

/// Random instance with `universe` elements and `count` subsets of size
/// `1..=max_size`, elements in random order.
pub fn random_instance<R: Rng>(rng: &mut R, universe: usize, count: usize, max_size: usize) -> HittingSetInstance {
    let subsets = (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=max_size.min(universe).max(1));
            rand::seq::index::sample(rng, universe, size).into_vec()
        })
        .collect();
    HittingSetInstance { universe, subsets, budget: None }
}
