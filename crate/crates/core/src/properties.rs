//! Cut-set functions and executable checks of their structural properties.
//!
//! `g(E')` counts the distinct labels on an edge subset; it is a coverage
//! function and therefore monotone and submodular. `f(A)` counts the label
//! classes with at least one edge crossing the vertex bipartition
//! `(A, V \ A)`; it is symmetric but not submodular in general, and
//! [`find_f_submodularity_violation`] produces a concrete witness.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{compute_stats, EdgeId, EdgeSubset, GraphError, LabelId, LabeledGraph, Semantics, VertexId};
use crate::solvers::{exact_min_label_cut, SolveConfig, SolveError};

/// `g(E')`: number of distinct labels appearing on the edges of `E'`.
#[derive(Debug, Clone)]
pub struct LabelCountFunction<'g> {
    g: &'g LabeledGraph,
}

impl<'g> LabelCountFunction<'g> {
    pub fn new(g: &'g LabeledGraph) -> Self {
        Self { g }
    }

    pub fn eval(&self, edges: &[EdgeId]) -> Result<usize, GraphError> {
        let mut seen = vec![false; self.g.label_count()];
        let mut count = 0;
        for &e in edges {
            for &l in &self.g.edge(e)?.labels {
                if !seen[l] {
                    seen[l] = true;
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    pub fn eval_subset(&self, edges: &EdgeSubset) -> usize {
        let ids: Vec<EdgeId> = edges.ids().collect();
        self.eval(&ids).expect("subset drawn from this graph")
    }
}

pub fn eval_g(g: &LabeledGraph, edges: &[EdgeId]) -> Result<usize, GraphError> {
    LabelCountFunction::new(g).eval(edges)
}

/// What `f` counts as one crossing unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CountMode {
    /// Raw labels.
    #[default]
    Raw,
    /// Label classes after merging labels that share an edge.
    Merged,
}

impl CountMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CountMode::Raw => "raw",
            CountMode::Merged => "merged",
        }
    }
}

/// `f(A)`: number of label classes with an edge crossing `(A, V \ A)`.
#[derive(Debug, Clone)]
pub struct HedgeVertexCutFunction<'g> {
    g: &'g LabeledGraph,
    /// Class ids carried by each edge, deduplicated.
    edge_units: Vec<Vec<usize>>,
    units: usize,
}

impl<'g> HedgeVertexCutFunction<'g> {
    pub fn new(g: &'g LabeledGraph, mode: CountMode) -> Self {
        let (edge_units, units) = match mode {
            CountMode::Raw => (g.edges().iter().map(|e| e.labels.clone()).collect(), g.label_count()),
            CountMode::Merged => {
                let classes = g.label_classes();
                let mut class_of = vec![0; g.label_count()];
                for (i, c) in classes.iter().enumerate() {
                    for &l in c {
                        class_of[l] = i;
                    }
                }
                let eu = g
                    .edges()
                    .iter()
                    .map(|e| {
                        let mut v: Vec<usize> = e.labels.iter().map(|&l| class_of[l]).collect();
                        v.sort_unstable();
                        v.dedup();
                        v
                    })
                    .collect();
                (eu, classes.len())
            }
        };
        Self { g, edge_units, units }
    }

    /// `inside[v]` marks membership of `v` in `A`.
    pub fn eval_membership(&self, inside: &[bool]) -> usize {
        let mut hit = vec![false; self.units];
        let mut count = 0;
        for (e, edge) in self.g.edges().iter().enumerate() {
            if inside[edge.u] != inside[edge.v] {
                for &u in &self.edge_units[e] {
                    if !hit[u] {
                        hit[u] = true;
                        count += 1;
                    }
                }
            }
        }
        count
    }

    pub fn eval(&self, set: &[VertexId]) -> Result<usize, GraphError> {
        let mut inside = vec![false; self.g.vertex_count()];
        for &v in set {
            self.g.check_vertex(v)?;
            inside[v] = true;
        }
        Ok(self.eval_membership(&inside))
    }

    fn eval_bits(&self, mask: u64) -> usize {
        let inside: Vec<bool> = (0..self.g.vertex_count()).map(|v| mask >> v & 1 == 1).collect();
        self.eval_membership(&inside)
    }
}

pub fn eval_f(g: &LabeledGraph, set: &[VertexId], mode: CountMode) -> Result<usize, GraphError> {
    HedgeVertexCutFunction::new(g, mode).eval(set)
}

/// Sampling parameters shared by the randomized checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleConfig {
    /// Largest edge (or vertex) count checked exhaustively.
    pub exhaustive_limit: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        Self { exhaustive_limit: 12, samples: 10_000, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFunctionViolation {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    /// `[h(first), h(second), h(union), h(intersection)]`.
    pub values: [usize; 4],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubmodularityReport {
    pub exhaustive: bool,
    pub pairs_checked: u64,
    pub violation: Option<SetFunctionViolation>,
}

impl SubmodularityReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

fn bits(mask: u64, len: usize) -> Vec<usize> {
    (0..len).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Label masks over the labels used by the graph, when they fit in 64 bits.
fn compressed_edge_masks(g: &LabeledGraph) -> Option<Vec<u64>> {
    let used = g.used_labels();
    if used.len() > 64 {
        return None;
    }
    let mut slot = vec![usize::MAX; g.label_count()];
    for (i, &l) in used.iter().enumerate() {
        slot[l] = i;
    }
    Some(
        g.edges()
            .iter()
            .map(|e| e.labels.iter().fold(0u64, |m, &l| m | 1 << slot[l]))
            .collect(),
    )
}

fn g_table(masks: &[u64]) -> Vec<usize> {
    let m = masks.len();
    let mut cover = vec![0u64; 1 << m];
    for s in 1usize..1 << m {
        let low = s.trailing_zeros() as usize;
        cover[s] = cover[s & (s - 1)] | masks[low];
    }
    cover.iter().map(|c| c.count_ones() as usize).collect()
}

/// Checks `g(E') + g(E'') >= g(E' ∪ E'') + g(E' ∩ E'')`, over every pair of
/// edge subsets when `m <= exhaustive_limit`, otherwise over `samples` random
/// pairs.
pub fn check_g_submodular(g: &LabeledGraph, cfg: &SampleConfig) -> SubmodularityReport {
    let m = g.edge_count();
    if m <= cfg.exhaustive_limit.min(20) {
        if let Some(masks) = compressed_edge_masks(g) {
            let table = g_table(&masks);
            let full = 1usize << m;
            let mut pairs = 0u64;
            for a in 0..full {
                for b in a..full {
                    pairs += 1;
                    if table[a] + table[b] < table[a | b] + table[a & b] {
                        return SubmodularityReport {
                            exhaustive: true,
                            pairs_checked: pairs,
                            violation: Some(SetFunctionViolation {
                                first: bits(a as u64, m),
                                second: bits(b as u64, m),
                                values: [table[a], table[b], table[a | b], table[a & b]],
                            }),
                        };
                    }
                }
            }
            return SubmodularityReport { exhaustive: true, pairs_checked: pairs, violation: None };
        }
    }
    let func = LabelCountFunction::new(g);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for i in 0..cfg.samples {
        let a: Vec<bool> = (0..m).map(|_| rng.gen()).collect();
        let b: Vec<bool> = (0..m).map(|_| rng.gen()).collect();
        let sub = |f: &dyn Fn(bool, bool) -> bool| EdgeSubset::from_mask(a.iter().zip(&b).map(|(&x, &y)| f(x, y)).collect());
        let (sa, sb) = (sub(&|x, _| x), sub(&|_, y| y));
        let (su, si) = (sub(&|x, y| x || y), sub(&|x, y| x && y));
        let values = [func.eval_subset(&sa), func.eval_subset(&sb), func.eval_subset(&su), func.eval_subset(&si)];
        if values[0] + values[1] < values[2] + values[3] {
            return SubmodularityReport {
                exhaustive: false,
                pairs_checked: i as u64 + 1,
                violation: Some(SetFunctionViolation {
                    first: sa.ids().collect(),
                    second: sb.ids().collect(),
                    values,
                }),
            };
        }
    }
    SubmodularityReport { exhaustive: false, pairs_checked: cfg.samples as u64, violation: None }
}

/// Checks `E' ⊆ E'' ⇒ g(E') <= g(E'')` on single-edge extensions.
/// Returns the first `(subset, added edge)` that breaks it.
pub fn check_g_monotone(g: &LabeledGraph, cfg: &SampleConfig) -> Option<(Vec<EdgeId>, EdgeId)> {
    let m = g.edge_count();
    if m <= cfg.exhaustive_limit.min(20) {
        if let Some(masks) = compressed_edge_masks(g) {
            let table = g_table(&masks);
            for s in 0..1usize << m {
                for e in 0..m {
                    if s >> e & 1 == 0 && table[s] > table[s | 1 << e] {
                        return Some((bits(s as u64, m), e));
                    }
                }
            }
            return None;
        }
    }
    let func = LabelCountFunction::new(g);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x6d6f6e6f);
    for _ in 0..cfg.samples {
        let mut mask: Vec<bool> = (0..m).map(|_| rng.gen()).collect();
        let Some(e) = (0..m).find(|&e| !mask[e]) else { continue };
        let before = func.eval_subset(&EdgeSubset::from_mask(mask.clone()));
        mask[e] = true;
        if before > func.eval_subset(&EdgeSubset::from_mask(mask.clone())) {
            mask[e] = false;
            return Some(((0..m).filter(|&i| mask[i]).collect(), e));
        }
    }
    None
}

/// Checks `f(A) = f(V \ A)`; returns the first asymmetric `A`.
pub fn check_f_symmetric(g: &LabeledGraph, mode: CountMode, cfg: &SampleConfig) -> Option<Vec<VertexId>> {
    let n = g.vertex_count();
    let func = HedgeVertexCutFunction::new(g, mode);
    let check = |inside: &[bool]| {
        let outside: Vec<bool> = inside.iter().map(|b| !b).collect();
        func.eval_membership(inside) == func.eval_membership(&outside)
    };
    if n <= cfg.exhaustive_limit.min(20) {
        for mask in 0u64..1 << n {
            let inside: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
            if !check(&inside) {
                return Some(bits(mask, n));
            }
        }
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x73796d6d);
    for _ in 0..cfg.samples {
        let inside: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
        if !check(&inside) {
            return Some((0..n).filter(|&v| inside[v]).collect());
        }
    }
    None
}

/// Bounds for the exhaustive counterexample search over small connected graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_vertices: usize,
    pub max_labels: usize,
    pub max_edges: usize,
    /// Give every edge its own label, which turns `f` into the plain cut function.
    pub distinct_edge_labels: bool,
    pub mode: CountMode,
}

impl Default for SearchBounds {
    fn default() -> Self {
        Self {
            max_vertices: 5,
            max_labels: 4,
            max_edges: 8,
            distinct_edge_labels: false,
            mode: CountMode::Raw,
        }
    }
}

/// A graph and vertex sets `A`, `B` with `f(A) + f(B) < f(A ∪ B) + f(A ∩ B)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FViolation {
    pub graph: LabeledGraph,
    pub mode: CountMode,
    pub a: Vec<VertexId>,
    pub b: Vec<VertexId>,
    pub f_a: usize,
    pub f_b: usize,
    pub f_union: usize,
    pub f_intersection: usize,
    pub shape: ViolationShape,
}

/// Value pattern of a violation with `A = {x, y}`, `B = {x, z}`, listed as
/// `f({x}), f(A), f(B), f(A ∪ B)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ViolationShape {
    /// `2, 1, 1, 2`: gains `1 - 2 < 2 - 1`.
    Crossing,
    /// `2, 1, 2, 2`: gains `1 - 2 < 2 - 2`, as on the alternating 4-cycle.
    Alternating,
    /// Any other strict violation.
    Generic,
}

impl ViolationShape {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationShape::Crossing => "crossing",
            ViolationShape::Alternating => "alternating",
            ViolationShape::Generic => "generic",
        }
    }
}

impl FViolation {
    /// Recomputes all four values with [`eval_f`] and re-checks the strict inequality.
    pub fn confirm(&self) -> bool {
        let union: Vec<VertexId> = {
            let mut u = self.a.clone();
            u.extend(&self.b);
            u.sort_unstable();
            u.dedup();
            u
        };
        let inter: Vec<VertexId> = self.a.iter().copied().filter(|v| self.b.contains(v)).collect();
        let f = |s: &[VertexId]| eval_f(&self.graph, s, self.mode).ok();
        f(&self.a) == Some(self.f_a)
            && f(&self.b) == Some(self.f_b)
            && f(&union) == Some(self.f_union)
            && f(&inter) == Some(self.f_intersection)
            && self.f_a + self.f_b < self.f_union + self.f_intersection
    }

    /// `f(A) - f(A ∩ B)` and `f(A ∪ B) - f(B)`; the first is strictly smaller.
    pub fn marginal_gains(&self) -> (i64, i64) {
        (
            self.f_a as i64 - self.f_intersection as i64,
            self.f_union as i64 - self.f_b as i64,
        )
    }
}

/// Enumerates connected graphs in canonical order (vertex count, label count,
/// edge set as a bitmask over vertex pairs, then label assignments) and
/// returns the first instance of [`ViolationShape::Crossing`]. Failing that,
/// the first alternating violation, then the first violation of any shape.
pub fn find_f_submodularity_violation(bounds: &SearchBounds) -> Option<FViolation> {
    // best non-crossing violation seen so far
    let mut fallback: Option<FViolation> = None;
    for n in 2..=bounds.max_vertices.min(16) {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let label_counts: Vec<usize> = if bounds.distinct_edge_labels { vec![0] } else { (1..=bounds.max_labels).collect() };
        for k in label_counts {
            for edge_mask in 1u64..1 << pairs.len() {
                let m = edge_mask.count_ones() as usize;
                if m < n - 1 || m > bounds.max_edges {
                    continue;
                }
                if bounds.distinct_edge_labels && m > bounds.max_labels {
                    continue;
                }
                let edges: Vec<(usize, usize)> = bits(edge_mask, pairs.len()).into_iter().map(|i| pairs[i]).collect();
                if !connected(n, &edges) {
                    continue;
                }
                let mut visit = |labels: &[Vec<LabelId>]| -> Option<FViolation> {
                    let mut b = LabeledGraph::builder(n);
                    for ((u, v), ls) in edges.iter().zip(labels) {
                        b.push_edge(*u, *v, ls.clone());
                    }
                    let g = b.build().expect("enumerated graphs are valid");
                    scan_pairs(&g, bounds.mode, &mut fallback)
                };
                if bounds.distinct_edge_labels {
                    let labels: Vec<Vec<LabelId>> = (0..m).map(|i| vec![i]).collect();
                    if let Some(hit) = visit(&labels) {
                        return Some(hit);
                    }
                    continue;
                }
                // mixed-radix counter over nonempty label subsets per edge
                let radix = (1usize << k) - 1;
                let mut digits = vec![0usize; m];
                'labelings: loop {
                    let labels: Vec<Vec<LabelId>> = digits.iter().map(|&d| bits(d as u64 + 1, k)).collect();
                    let used = digits.iter().fold(0usize, |acc, &d| acc | (d + 1));
                    if used == radix {
                        if let Some(hit) = visit(&labels) {
                            return Some(hit);
                        }
                    }
                    let mut pos = m;
                    loop {
                        if pos == 0 {
                            break 'labelings;
                        }
                        pos -= 1;
                        digits[pos] += 1;
                        if digits[pos] < radix {
                            break;
                        }
                        digits[pos] = 0;
                    }
                }
            }
        }
    }
    fallback
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut dsu = crate::dsu::DisjointSet::new(n);
    let mut parts = n;
    for &(u, v) in edges {
        if dsu.union(u, v) {
            parts -= 1;
        }
    }
    parts == 1
}

/// Returns a crossing violation if `g` has one; otherwise keeps the
/// lowest-ranked shape seen so far in `fallback`.
fn scan_pairs(g: &LabeledGraph, mode: CountMode, fallback: &mut Option<FViolation>) -> Option<FViolation> {
    let n = g.vertex_count();
    let func = HedgeVertexCutFunction::new(g, mode);
    let f: Vec<usize> = (0u64..1 << n).map(|s| func.eval_bits(s)).collect();
    let make = |a: u64, b: u64, shape: ViolationShape| FViolation {
        graph: g.clone(),
        mode,
        a: bits(a, n),
        b: bits(b, n),
        f_a: f[a as usize],
        f_b: f[b as usize],
        f_union: f[(a | b) as usize],
        f_intersection: f[(a & b) as usize],
        shape,
    };
    let rank = |slot: &Option<FViolation>| slot.as_ref().map_or(ViolationShape::Generic as u8 + 1, |v| v.shape as u8);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if x == y || y == z || x == z {
                    continue;
                }
                let (a, b) = (1u64 << x | 1 << y, 1u64 << x | 1 << z);
                let values = [f[1 << x], f[a as usize], f[b as usize], f[(a | b) as usize]];
                if values == [2, 1, 1, 2] {
                    return Some(make(a, b, ViolationShape::Crossing));
                }
                if values == [2, 1, 2, 2] && rank(fallback) > ViolationShape::Alternating as u8 {
                    *fallback = Some(make(a, b, ViolationShape::Alternating));
                }
            }
        }
    }
    if fallback.is_none() {
        'outer: for a in 0u64..1 << n {
            for b in a..1 << n {
                let (ai, bi) = (a as usize, b as usize);
                if f[ai] + f[bi] < f[ai | bi] + f[ai & bi] {
                    *fallback = Some(make(a, b, ViolationShape::Generic));
                    break 'outer;
                }
            }
        }
    }
    None
}

/// Minimum cut weight next to the label-degree bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeBound {
    pub semantics: Semantics,
    /// Numerator over the graph denominator.
    pub cut_weight: u64,
    pub min_label_degree: usize,
    /// Smallest weight of removing everything around one vertex under the
    /// given semantics (its incident labels, closed under cascading).
    pub isolation_weight: u64,
    pub isolation_vertex: VertexId,
}

impl DegreeBound {
    /// `cut <= min_v D_L(v)` in label-count units.
    pub fn holds_raw(&self, denom: u64) -> bool {
        self.cut_weight <= self.min_label_degree as u64 * denom
    }

    /// `cut <=` the cheapest single-vertex isolation.
    pub fn holds_isolation(&self) -> bool {
        self.cut_weight <= self.isolation_weight
    }
}

/// Exact global cut against the vertex label-degree bounds.
pub fn label_degree_bound(g: &LabeledGraph, semantics: Semantics, budget: usize) -> Result<DegreeBound, SolveError> {
    let cfg = SolveConfig { budget, ..SolveConfig::global(semantics) };
    let cut = exact_min_label_cut(g, &cfg)?;
    let stats = compute_stats(g);
    let (isolation_weight, isolation_vertex) = (0..g.vertex_count())
        .map(|v| {
            let mut around: Vec<LabelId> = g
                .neighbors(v)
                .iter()
                .flat_map(|&(_, e)| g.edges()[e].labels.iter().copied())
                .collect();
            around.sort_unstable();
            around.dedup();
            if semantics == Semantics::Cascading {
                around = g.cascade_closure(&around).expect("labels from the graph");
            }
            (g.total_weight(&around), v)
        })
        .min()
        .expect("graph has vertices");
    Ok(DegreeBound {
        semantics,
        cut_weight: cut.total_weight,
        min_label_degree: stats.min_label_degree,
        isolation_weight,
        isolation_vertex,
    })
}

/// One line of the property report, `PROPERTY <name> PASS|FAIL|SKIP [witness...]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyVerdict {
    pub name: String,
    pub status: Status,
    pub witness: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Not applicable to this instance (too large, no terminals, ...).
    Skip,
}

impl PropertyVerdict {
    pub fn new(name: impl Into<String>, passed: bool, witness: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            witness: witness.into(),
        }
    }

    pub fn skip(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Self { name: name.into(), status: Status::Skip, witness: reason.into() }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

impl fmt::Display for PropertyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        write!(f, "PROPERTY {} {}", self.name, status)?;
        if !self.witness.is_empty() {
            write!(f, " {}", self.witness)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn g_values() {
        let g = fixtures::figure2();
        assert_eq!(eval_g(&g, &[]).unwrap(), 0);
        assert_eq!(eval_g(&g, &[0, 2]).unwrap(), 3);
        let all: Vec<EdgeId> = (0..g.edge_count()).collect();
        assert_eq!(eval_g(&g, &all).unwrap(), 5);
        assert!(matches!(eval_g(&g, &[42]), Err(GraphError::UnknownEdge { edge: 42, .. })));
    }

    #[test]
    fn g_submodular_on_figure2() {
        let g = fixtures::figure2();
        let r = check_g_submodular(&g, &SampleConfig::default());
        assert!(r.exhaustive);
        assert!(r.holds());
        // unordered pairs with repetition over 2^7 subsets
        assert_eq!(r.pairs_checked, 128 * 129 / 2);
        assert_eq!(check_g_monotone(&g, &SampleConfig::default()), None);
    }

    #[test]
    fn g_sampled_path() {
        let g = fixtures::figure2();
        let cfg = SampleConfig { exhaustive_limit: 0, samples: 500, seed: 3 };
        let r = check_g_submodular(&g, &cfg);
        assert!(!r.exhaustive);
        assert_eq!(r.pairs_checked, 500);
        assert!(r.holds());
    }

    #[test]
    fn f_values() {
        let g = fixtures::single_edge();
        assert_eq!(eval_f(&g, &[], CountMode::Raw).unwrap(), 0);
        assert_eq!(eval_f(&g, &[0], CountMode::Raw).unwrap(), 1);
        assert!(eval_f(&g, &[5], CountMode::Raw).is_err());
        let g = fixtures::figure2();
        assert_eq!(eval_f(&g, &[0], CountMode::Raw).unwrap(), 3);
        assert_eq!(eval_f(&g, &[0], CountMode::Merged).unwrap(), 1);
        assert_eq!(check_f_symmetric(&g, CountMode::Raw, &SampleConfig::default()), None);
        assert_eq!(check_f_symmetric(&g, CountMode::Merged, &SampleConfig::default()), None);
    }

    #[test]
    fn alternating_square_breaks_submodularity() {
        // a-b Y, b-c X, c-d Y, d-a X
        let g = LabeledGraph::builder(4)
            .edge(0, 1, [1])
            .edge(1, 2, [0])
            .edge(2, 3, [1])
            .edge(0, 3, [0])
            .build()
            .unwrap();
        let f = |s: &[usize]| eval_f(&g, s, CountMode::Raw).unwrap();
        assert_eq!((f(&[0]), f(&[0, 1]), f(&[0, 2]), f(&[0, 1, 2])), (2, 1, 2, 2));
    }

    #[test]
    fn search_finds_pattern() {
        let v = find_f_submodularity_violation(&SearchBounds::default()).expect("witness in bounds");
        assert_eq!(v.shape, ViolationShape::Crossing);
        assert!(v.confirm());
        assert_eq!(v.marginal_gains(), (-1, 1));
        assert_eq!(v.graph.vertex_count(), 4);
    }

    #[test]
    fn plain_edge_cut_has_no_violation() {
        let bounds = SearchBounds { distinct_edge_labels: true, ..SearchBounds::default() };
        assert_eq!(find_f_submodularity_violation(&bounds), None);
    }

    #[test]
    fn degree_bound_figure1() {
        let g = fixtures::figure1();
        let b = label_degree_bound(&g, Semantics::Cascading, 24).unwrap();
        assert_eq!((b.cut_weight, b.min_label_degree), (3, 3));
        assert!(b.holds_raw(1) && b.holds_isolation());
    }

    #[test]
    fn cascading_cut_can_exceed_raw_degree() {
        // 0-1 {A,B}, 1-2 {B,C}: D_L(0) = 2 but the only class weighs 3
        let g = LabeledGraph::builder(3).edge(0, 1, [0, 1]).edge(1, 2, [1, 2]).build().unwrap();
        let casc = label_degree_bound(&g, Semantics::Cascading, 24).unwrap();
        assert_eq!((casc.cut_weight, casc.min_label_degree), (3, 2));
        assert!(!casc.holds_raw(1));
        assert!(casc.holds_isolation());
        let ind = label_degree_bound(&g, Semantics::Independent, 24).unwrap();
        assert_eq!(ind.cut_weight, 1);
        assert!(ind.holds_raw(1));
    }

    #[test]
    fn verdict_lines() {
        assert_eq!(PropertyVerdict::new("g_submodular", true, "pairs=10").to_string(), "PROPERTY g_submodular PASS pairs=10");
        assert_eq!(PropertyVerdict::new("x", false, "").to_string(), "PROPERTY x FAIL");
        assert_eq!(PropertyVerdict::skip("y", "no terminals").to_string(), "PROPERTY y SKIP no terminals");
    }
}
