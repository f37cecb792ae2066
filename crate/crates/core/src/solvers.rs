//! Exact and heuristic label-cut solvers, and the plain minimum `s-t` edge cut.
//!
//! The exact solver works over *units*: single labels under independent
//! removal, whole correlation classes under cascading removal (selecting any
//! member of a class removes all of it, so only unions of classes matter).
//! Unit subsets are enumerated in nondecreasing total weight with a heap; the
//! first weight level containing a feasible subset is scanned completely and
//! the lexicographically smallest label set wins.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::model::{format_weight, EdgeId, GraphError, LabelId, LabeledGraph, Semantics, VertexId};

/// Largest label count accepted by default by the exact solver.
pub const DEFAULT_BUDGET: usize = 24;
/// Hard ceiling imposed by the 64-bit label masks.
pub const MAX_BUDGET: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("exact solver refuses {labels} labels (budget {budget})")]
    BudgetExceeded { labels: usize, budget: usize },
    #[error("budget must be between 1 and {MAX_BUDGET}, got {0}")]
    InvalidBudget(usize),
    #[error("s-t variant requires terminals")]
    NoTerminals,
    #[error("a single-vertex graph has no global cut")]
    NoCut,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    #[default]
    Global,
    St,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Global => "global",
            Variant::St => "st",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "global" => Ok(Variant::Global),
            "st" => Ok(Variant::St),
            other => Err(format!("unknown variant `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveConfig {
    pub variant: Variant,
    pub semantics: Semantics,
    /// Maximum label count the exact solver accepts.
    pub budget: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self {
            variant: Variant::Global,
            semantics: Semantics::Cascading,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl SolveConfig {
    pub fn new(variant: Variant, semantics: Semantics) -> Self {
        Self { variant, semantics, ..Self::default() }
    }

    pub fn global(semantics: Semantics) -> Self {
        Self::new(Variant::Global, semantics)
    }

    pub fn st(semantics: Semantics) -> Self {
        Self::new(Variant::St, semantics)
    }
}

/// What the cut disconnects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// The component containing vertex 0 after removal (a proper subset of V).
    Component(Vec<VertexId>),
    Terminals(VertexId, VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutSolution {
    /// Every removed label, ascending. Under cascading removal this is closed
    /// under correlation.
    pub labels: Vec<LabelId>,
    /// Numerator over `denom`.
    pub total_weight: u64,
    pub denom: u64,
    pub witness: Witness,
}

impl CutSolution {
    pub fn weight_string(&self) -> String {
        format_weight(self.total_weight, self.denom)
    }

    /// Re-derives feasibility and weight from scratch.
    pub fn verify(&self, g: &LabeledGraph, semantics: Semantics) -> bool {
        let Ok(surviving) = g.remove_labels(&self.labels, semantics) else {
            return false;
        };
        if g.total_weight(&self.labels) != self.total_weight {
            return false;
        }
        match &self.witness {
            Witness::Terminals(s, t) => matches!(g.is_st_connected(*s, *t, &surviving), Ok(false)),
            Witness::Component(vs) => {
                let comp = g.components(&surviving);
                vs.len() < g.vertex_count()
                    && !vs.is_empty()
                    && vs.iter().all(|&v| comp[v] == comp[vs[0]])
                    && comp.iter().filter(|&&c| c == comp[vs[0]]).count() == vs.len()
            }
        }
    }
}

#[derive(Debug, Clone)]
struct Unit {
    labels: Vec<LabelId>,
    mask: u64,
    weight: u64,
}

enum Target {
    Global,
    St(VertexId, VertexId),
}

struct Prepared<'g> {
    g: &'g LabeledGraph,
    edge_masks: Vec<u64>,
    units: Vec<Unit>,
    /// Unit-index masks; a feasible subset intersects every one of them.
    required: Vec<u64>,
    target: Target,
}

impl<'g> Prepared<'g> {
    fn new(g: &'g LabeledGraph, cfg: &SolveConfig) -> Result<Self, SolveError> {
        if cfg.budget == 0 || cfg.budget > MAX_BUDGET {
            return Err(SolveError::InvalidBudget(cfg.budget));
        }
        if g.label_count() > cfg.budget {
            return Err(SolveError::BudgetExceeded { labels: g.label_count(), budget: cfg.budget });
        }
        g.ensure_connected()?;
        let target = match cfg.variant {
            Variant::Global if g.vertex_count() < 2 => return Err(SolveError::NoCut),
            Variant::Global => Target::Global,
            Variant::St => {
                let (s, t) = g.terminals().ok_or(SolveError::NoTerminals)?;
                Target::St(s, t)
            }
        };

        let edge_masks: Vec<u64> = g
            .edges()
            .iter()
            .map(|e| e.labels.iter().fold(0u64, |m, &l| m | (1 << l)))
            .collect();
        let used = edge_masks.iter().fold(0u64, |m, &e| m | e);

        let groups: Vec<Vec<LabelId>> = match cfg.semantics {
            Semantics::Independent => (0..g.label_count()).map(|l| vec![l]).collect(),
            Semantics::Cascading => g.label_classes(),
        };
        let mut units: Vec<Unit> = groups
            .into_iter()
            .map(|labels| Unit {
                mask: labels.iter().fold(0u64, |m, &l| m | (1 << l)),
                weight: g.total_weight(&labels),
                labels,
            })
            .filter(|u| u.mask & used != 0)
            .collect();
        units.sort_by(|a, b| (a.weight, a.labels[0]).cmp(&(b.weight, b.labels[0])));

        let mut p = Prepared { g, edge_masks, units, required: Vec::new(), target };
        p.required = p.required_masks();
        Ok(p)
    }

    fn unit_mask_hitting(&self, edges: &[EdgeId]) -> u64 {
        let labels = edges.iter().fold(0u64, |m, &e| m | self.edge_masks[e]);
        self.units
            .iter()
            .enumerate()
            .filter(|(_, u)| u.mask & labels != 0)
            .fold(0u64, |m, (i, _)| m | (1 << i))
    }

    /// Edge sets every cut must touch: the edge-disjoint `s-t` paths of a
    /// maximum flow, or a BFS spanning tree for the global variant.
    fn required_masks(&self) -> Vec<u64> {
        match self.target {
            Target::St(s, t) => min_edge_cut_between(self.g, s, t)
                .map(|c| c.paths.iter().map(|p| self.unit_mask_hitting(p)).collect())
                .unwrap_or_default(),
            Target::Global => vec![self.unit_mask_hitting(&spanning_tree(self.g))],
        }
    }

    fn removed_labels(&self, subset: u64) -> u64 {
        let mut removed = 0u64;
        let mut rest = subset;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            removed |= self.units[i].mask;
            rest &= rest - 1;
        }
        removed
    }

    /// Vertices reachable from the search root after removing `removed`.
    fn reach(&self, removed: u64, root: VertexId, stop: Option<VertexId>) -> (Vec<bool>, bool) {
        let n = self.g.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(x) = queue.pop_front() {
            for &(y, e) in self.g.neighbors(x) {
                if !seen[y] && self.edge_masks[e] & removed == 0 {
                    if Some(y) == stop {
                        return (seen, true);
                    }
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (seen, false)
    }

    fn feasible(&self, subset: u64) -> bool {
        if self.required.iter().any(|&r| r & subset == 0) {
            return false;
        }
        let removed = self.removed_labels(subset);
        match self.target {
            Target::St(s, t) => !self.reach(removed, s, Some(t)).1,
            Target::Global => self.reach(removed, 0, None).0.iter().any(|&b| !b),
        }
    }

    fn labels_of(&self, subset: u64) -> Vec<LabelId> {
        let removed = self.removed_labels(subset);
        (0..self.g.label_count()).filter(|&l| removed >> l & 1 == 1).collect()
    }

    fn solution(&self, subset: u64, weight: u64) -> CutSolution {
        let witness = match self.target {
            Target::St(s, t) => Witness::Terminals(s, t),
            Target::Global => {
                let (seen, _) = self.reach(self.removed_labels(subset), 0, None);
                Witness::Component((0..seen.len()).filter(|&v| seen[v]).collect())
            }
        };
        CutSolution {
            labels: self.labels_of(subset),
            total_weight: weight,
            denom: self.g.denominator(),
            witness,
        }
    }

    /// Walks unit subsets in nondecreasing weight. Returns the lexicographically
    /// least feasible subset of minimum weight, or `None` once the weight
    /// passes `limit` without finding one.
    fn search(&self, limit: Option<u64>) -> Option<(u64, u64)> {
        let k = self.units.len();
        if k == 0 {
            return None;
        }
        let w = |i: usize| self.units[i].weight;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((w(0), 1u64, 0usize)));
        let mut best: Option<(u64, u64, Vec<LabelId>)> = None;
        while let Some(Reverse((weight, subset, last))) = heap.pop() {
            if let Some((bw, _, _)) = &best {
                if weight > *bw {
                    break;
                }
            }
            if limit.is_some_and(|l| weight > l) {
                break;
            }
            if last + 1 < k {
                heap.push(Reverse((weight + w(last + 1), subset | 1 << (last + 1), last + 1)));
                heap.push(Reverse((
                    weight - w(last) + w(last + 1),
                    (subset & !(1 << last)) | 1 << (last + 1),
                    last + 1,
                )));
            }
            if self.feasible(subset) {
                let labels = self.labels_of(subset);
                let better = match &best {
                    None => true,
                    Some((_, _, bl)) => labels < *bl,
                };
                if better {
                    best = Some((weight, subset, labels));
                }
                if limit.is_some() {
                    break;
                }
            }
        }
        best.map(|(w, s, _)| (s, w))
    }
}

fn spanning_tree(g: &LabeledGraph) -> Vec<EdgeId> {
    let mut seen = vec![false; g.vertex_count()];
    let mut tree = Vec::new();
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(x) = queue.pop_front() {
        for &(y, e) in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                tree.push(e);
                queue.push_back(y);
            }
        }
    }
    tree
}

/// Minimum-weight label cut; ties go to the lexicographically smallest label set.
pub fn exact_min_label_cut(g: &LabeledGraph, cfg: &SolveConfig) -> Result<CutSolution, SolveError> {
    let p = Prepared::new(g, cfg)?;
    let (subset, weight) = p.search(None).expect("removing every used label disconnects a connected graph");
    Ok(p.solution(subset, weight))
}

/// Whether a label cut of weight at most `p` exists.
pub fn decide_cut_at_most(g: &LabeledGraph, cfg: &SolveConfig, p: u64) -> Result<bool, SolveError> {
    let prepared = Prepared::new(g, cfg)?;
    let limit = p.saturating_mul(g.denominator());
    Ok(prepared.search(Some(limit)).is_some())
}

/// Greedy path-hitting heuristic for the `s-t` variant. No approximation ratio
/// is claimed.
///
/// While `s` and `t` are connected, take a shortest surviving path and remove
/// the candidate (a label, or its class under cascading removal) on it that
/// kills the most surviving edges per unit weight; ties go to the smaller label.
pub fn greedy_st_label_cut(g: &LabeledGraph, cfg: &SolveConfig) -> Result<CutSolution, SolveError> {
    g.ensure_connected()?;
    let (s, t) = g.terminals().ok_or(SolveError::NoTerminals)?;
    let classes = g.label_classes();
    let mut class_of = vec![0usize; g.label_count()];
    for (i, c) in classes.iter().enumerate() {
        for &l in c {
            class_of[l] = i;
        }
    }
    let group = |l: LabelId| -> Vec<LabelId> {
        match cfg.semantics {
            Semantics::Independent => vec![l],
            Semantics::Cascading => classes[class_of[l]].clone(),
        }
    };

    let mut removed = vec![false; g.label_count()];
    let mut alive: Vec<bool> = vec![true; g.edge_count()];
    while let Some(path) = shortest_path(g, s, t, &alive) {
        let mut candidates: Vec<LabelId> = path.iter().flat_map(|&e| g.edges()[e].labels.iter().copied()).collect();
        candidates.sort_unstable();
        candidates.dedup();

        // (killed, weight, label)
        let mut best: Option<(u64, u64, LabelId)> = None;
        for &l in &candidates {
            let sel = group(l);
            let weight = g.total_weight(&sel);
            let killed = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(e, edge)| alive[*e] && edge.labels.iter().any(|x| sel.contains(x)))
                .count() as u64;
            let better = match best {
                None => true,
                Some((bk, bw, _)) => (killed as u128) * (bw as u128) > (bk as u128) * (weight as u128),
            };
            if better {
                best = Some((killed, weight, l));
            }
        }
        let (_, _, pick) = best.expect("a path has at least one edge");
        for l in group(pick) {
            removed[l] = true;
        }
        for (e, edge) in g.edges().iter().enumerate() {
            if edge.labels.iter().any(|&x| removed[x]) {
                alive[e] = false;
            }
        }
    }
    let labels: Vec<LabelId> = (0..g.label_count()).filter(|&l| removed[l]).collect();
    Ok(CutSolution {
        total_weight: g.total_weight(&labels),
        labels,
        denom: g.denominator(),
        witness: Witness::Terminals(s, t),
    })
}

fn shortest_path(g: &LabeledGraph, s: VertexId, t: VertexId, alive: &[bool]) -> Option<Vec<EdgeId>> {
    let mut via: Vec<Option<EdgeId>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    let mut queue = VecDeque::from([s]);
    seen[s] = true;
    while let Some(x) = queue.pop_front() {
        if x == t {
            let mut path = Vec::new();
            let mut cur = t;
            while let Some(e) = via[cur] {
                path.push(e);
                cur = g.edges()[e].other(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &(y, e) in g.neighbors(x) {
            if alive[e] && !seen[y] {
                seen[y] = true;
                via[y] = Some(e);
                queue.push_back(y);
            }
        }
    }
    None
}

/// Minimum `s-t` edge cut with every edge at unit capacity, labels ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinEdgeCut {
    pub value: usize,
    /// Cut edges, ascending.
    pub edges: Vec<EdgeId>,
    /// Vertices on the source side of the cut, ascending.
    pub source_side: Vec<VertexId>,
    /// Edge-disjoint `s-t` paths realizing the flow, each listed from `s`.
    pub paths: Vec<Vec<EdgeId>>,
}

pub fn min_edge_cut(g: &LabeledGraph) -> Result<MinEdgeCut, SolveError> {
    let (s, t) = g.terminals().ok_or(SolveError::NoTerminals)?;
    min_edge_cut_between(g, s, t)
}

/// Shortest-augmenting-path max flow. Edge `e` maps to arcs `2e` (u to v) and
/// `2e + 1` (v to u), each the other's reverse, both starting at capacity 1.
pub fn min_edge_cut_between(g: &LabeledGraph, s: VertexId, t: VertexId) -> Result<MinEdgeCut, SolveError> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(GraphError::TerminalsCoincide(s).into());
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let head = |a: usize| {
        let e = &g.edges()[a / 2];
        if a & 1 == 0 {
            e.v
        } else {
            e.u
        }
    };
    let arcs_out = |x: VertexId| {
        g.neighbors(x)
            .iter()
            .map(move |&(_, e)| if g.edges()[e].u == x { 2 * e } else { 2 * e + 1 })
    };
    let mut cap = vec![1i32; 2 * m];
    let mut value = 0;
    loop {
        let mut via: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for a in arcs_out(x) {
                let y = head(a);
                if cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = Some(a);
                    queue.push_back(y);
                }
            }
        }
        if !seen[t] {
            let source_side: Vec<VertexId> = (0..n).filter(|&v| seen[v]).collect();
            let edges: Vec<EdgeId> = (0..m)
                .filter(|&e| seen[g.edges()[e].u] != seen[g.edges()[e].v])
                .collect();
            debug_assert_eq!(edges.len(), value);
            let paths = decompose(g, s, t, &cap, value);
            return Ok(MinEdgeCut { value, edges, source_side, paths });
        }
        let mut cur = t;
        while let Some(a) = via[cur] {
            cap[a] -= 1;
            cap[a ^ 1] += 1;
            cur = head(a ^ 1);
        }
        value += 1;
    }
}

/// Splits a unit flow into `value` edge-disjoint paths.
fn decompose(g: &LabeledGraph, s: VertexId, t: VertexId, cap: &[i32], value: usize) -> Vec<Vec<EdgeId>> {
    // outgoing flow arcs per vertex: (edge, head)
    let mut out: Vec<Vec<(EdgeId, VertexId)>> = vec![Vec::new(); g.vertex_count()];
    for (e, edge) in g.edges().iter().enumerate() {
        match cap[2 * e] {
            0 => out[edge.u].push((e, edge.v)),
            2 => out[edge.v].push((e, edge.u)),
            _ => {}
        }
    }
    let mut paths = Vec::with_capacity(value);
    for _ in 0..value {
        // DFS over unused flow arcs; flow conservation guarantees t is reachable
        let mut seen = vec![false; g.vertex_count()];
        let mut stack: Vec<(VertexId, usize)> = vec![(s, 0)];
        let mut used_arcs: Vec<(VertexId, usize)> = Vec::new();
        seen[s] = true;
        while let Some(&mut (x, ref mut next)) = stack.last_mut() {
            if x == t {
                break;
            }
            if *next < out[x].len() {
                let i = *next;
                *next += 1;
                let (_, y) = out[x][i];
                if !seen[y] {
                    seen[y] = true;
                    used_arcs.push((x, i));
                    stack.push((y, 0));
                }
            } else {
                stack.pop();
                used_arcs.pop();
            }
        }
        let path: Vec<EdgeId> = used_arcs.iter().map(|&(x, i)| out[x][i].0).collect();
        let mut drop: Vec<(VertexId, usize)> = used_arcs;
        drop.sort_unstable_by(|a, b| b.cmp(a));
        for (x, i) in drop {
            out[x].remove(i);
        }
        paths.push(path);
    }
    paths
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::EdgeSubset;

    #[test]
    fn single_edge_cut() {
        let g = fixtures::single_edge();
        for variant in [Variant::Global, Variant::St] {
            let sol = exact_min_label_cut(&g, &SolveConfig::new(variant, Semantics::Cascading)).unwrap();
            assert_eq!(sol.labels, vec![0]);
            assert_eq!(sol.total_weight, 1);
        }
        assert!(decide_cut_at_most(&g, &SolveConfig::default(), 1).unwrap());
    }

    #[test]
    fn two_paths_need_both_labels() {
        let g = fixtures::two_paths();
        for variant in [Variant::Global, Variant::St] {
            let cfg = SolveConfig::new(variant, Semantics::Independent);
            let sol = exact_min_label_cut(&g, &cfg).unwrap();
            if variant == Variant::St {
                assert_eq!(sol.labels, vec![0, 1]);
                assert_eq!(sol.total_weight, 2);
                assert!(!decide_cut_at_most(&g, &cfg, 1).unwrap());
            } else {
                // removing A alone already isolates x
                assert_eq!(sol.labels, vec![0]);
            }
            assert!(sol.verify(&g, cfg.semantics));
        }
    }

    #[test]
    fn figure1_cascading_cut_is_three() {
        let g = fixtures::figure1();
        let cfg = SolveConfig::global(Semantics::Cascading);
        let sol = exact_min_label_cut(&g, &cfg).unwrap();
        assert_eq!(sol.total_weight, 3);
        assert_eq!(sol.labels, vec![0, 1, 2]);
        assert!(!decide_cut_at_most(&g, &cfg, 2).unwrap());
        assert!(decide_cut_at_most(&g, &cfg, 3).unwrap());
        // independent removal: R alone isolates a
        let sol = exact_min_label_cut(&g, &SolveConfig::global(Semantics::Independent)).unwrap();
        assert_eq!((sol.labels, sol.total_weight), (vec![0], 1));
    }

    #[test]
    fn lexicographic_tie_break() {
        // triangle, all labels distinct: every pair is a cut of weight 2
        let g = LabeledGraph::builder(3).edge(0, 1, [2]).edge(1, 2, [0]).edge(0, 2, [1]).build().unwrap();
        let sol = exact_min_label_cut(&g, &SolveConfig::default()).unwrap();
        assert_eq!(sol.labels, vec![0, 1]);
        assert_eq!(sol.witness, Witness::Component(vec![0, 1]));
    }

    #[test]
    fn weighted_cut_prefers_light_labels() {
        // path 0-1-2: heavy label on the first edge, two light ones on the second
        let g = LabeledGraph::builder(3)
            .edge(0, 1, [0])
            .edge(1, 2, [1])
            .weight(0, 5)
            .weight(1, 2)
            .build()
            .unwrap();
        let sol = exact_min_label_cut(&g, &SolveConfig::default()).unwrap();
        assert_eq!((sol.labels, sol.total_weight), (vec![1], 2));
        assert!(!decide_cut_at_most(&g, &SolveConfig::default(), 1).unwrap());
    }

    #[test]
    fn budget_and_terminal_errors() {
        let g = fixtures::figure2();
        let cfg = SolveConfig { budget: 4, ..SolveConfig::default() };
        assert_eq!(
            exact_min_label_cut(&g, &cfg),
            Err(SolveError::BudgetExceeded { labels: 5, budget: 4 })
        );
        let cfg = SolveConfig { budget: 0, ..SolveConfig::default() };
        assert_eq!(exact_min_label_cut(&g, &cfg), Err(SolveError::InvalidBudget(0)));
        assert_eq!(
            exact_min_label_cut(&g, &SolveConfig::st(Semantics::Cascading)),
            Err(SolveError::NoTerminals)
        );
        assert_eq!(greedy_st_label_cut(&g, &SolveConfig::default()), Err(SolveError::NoTerminals));
        assert_eq!(min_edge_cut(&g), Err(SolveError::NoTerminals));
        let lone = LabeledGraph::builder(1).build().unwrap();
        assert_eq!(exact_min_label_cut(&lone, &SolveConfig::default()), Err(SolveError::NoCut));
    }

    #[test]
    fn greedy_small_cases() {
        let g = fixtures::single_edge();
        let sol = greedy_st_label_cut(&g, &SolveConfig::default()).unwrap();
        assert_eq!(sol.labels, vec![0]);
        let g = fixtures::two_paths();
        let sol = greedy_st_label_cut(&g, &SolveConfig::st(Semantics::Independent)).unwrap();
        assert_eq!(sol.labels, vec![0, 1]);
        assert!(sol.verify(&g, Semantics::Independent));
    }

    #[test]
    fn greedy_cascading_takes_whole_class() {
        let g = fixtures::k4_overlap();
        let sol = greedy_st_label_cut(&g, &SolveConfig::st(Semantics::Cascading)).unwrap();
        assert!(sol.verify(&g, Semantics::Cascading));
        assert_eq!(sol.labels.contains(&0), sol.labels.contains(&6));
    }

    #[test]
    fn menger_on_parallel_paths() {
        let g = fixtures::single_edge();
        assert_eq!(min_edge_cut(&g).unwrap().value, 1);
        // three internally disjoint paths of length 2 between 0 and 4
        let g = LabeledGraph::builder(5)
            .edge(0, 1, [0])
            .edge(1, 4, [0])
            .edge(0, 2, [0])
            .edge(2, 4, [0])
            .edge(0, 3, [0])
            .edge(3, 4, [0])
            .terminals(0, 4)
            .build()
            .unwrap();
        let cut = min_edge_cut(&g).unwrap();
        assert_eq!(cut.value, 3);
        assert_eq!(cut.paths.len(), 3);
        assert_eq!(cut.edges.len(), 3);
        let mut used: Vec<EdgeId> = cut.paths.concat();
        used.sort_unstable();
        used.dedup();
        assert_eq!(used.len(), 6);
    }

    #[test]
    fn cut_edges_separate() {
        let g = fixtures::figure2().with_terminals(Some((0, 3))).unwrap();
        let cut = min_edge_cut(&g).unwrap();
        let keep = EdgeSubset::from_mask((0..g.edge_count()).map(|e| !cut.edges.contains(&e)).collect());
        assert!(!g.is_st_connected(0, 3, &keep).unwrap());
        assert_eq!(cut.value, 3);
    }
}
