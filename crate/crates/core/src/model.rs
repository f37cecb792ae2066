//! Labeled graph data model, label removal, connectivity and label statistics.
//!
//! A [`LabeledGraph`] is an undirected simple graph whose edges each carry a
//! nonempty set of labels. Labels are dense indices `0..label_count()` with an
//! optional display name and a positive weight. Weights are rationals stored as
//! integer numerators over a graph-wide denominator, so the unweighted problem
//! is the special case where every numerator equals the denominator.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::dsu::DisjointSet;

pub type VertexId = usize;
pub type EdgeId = usize;
pub type LabelId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("edge {edge}: endpoint {vertex} out of range (n = {n})")]
    VertexOutOfRange { edge: EdgeId, vertex: VertexId, n: usize },
    #[error("edge {edge}: self-loop on vertex {vertex}")]
    SelfLoop { edge: EdgeId, vertex: VertexId },
    #[error("edge {edge}: duplicates edge {first} between {u} and {v}")]
    DuplicateEdge { edge: EdgeId, first: EdgeId, u: VertexId, v: VertexId },
    #[error("edge {edge}: empty label set")]
    EmptyLabelSet { edge: EdgeId },
    #[error("unknown label {label} (graph has {count} labels)")]
    UnknownLabel { label: LabelId, count: usize },
    #[error("label {label}: weight must be positive")]
    NonPositiveWeight { label: LabelId },
    #[error("weight denominator must be positive")]
    ZeroDenominator,
    #[error("graph is disconnected: vertex {vertex} is unreachable from vertex 0")]
    Disconnected { vertex: VertexId },
    #[error("vertex {vertex} out of range (n = {n})")]
    UnknownVertex { vertex: VertexId, n: usize },
    #[error("terminals must be distinct (s = t = {0})")]
    TerminalsCoincide(VertexId),
    #[error("unknown edge {edge} (graph has {count} edges)")]
    UnknownEdge { edge: EdgeId, count: usize },
}

/// How removing a label set acts on edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Semantics {
    /// Remove every edge carrying a selected label.
    Independent,
    /// Close the selection under "shares an edge with a selected label" first,
    /// then remove as [`Semantics::Independent`].
    #[default]
    Cascading,
}

impl Semantics {
    pub fn as_str(self) -> &'static str {
        match self {
            Semantics::Independent => "independent",
            Semantics::Cascading => "cascading",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "independent" => Ok(Semantics::Independent),
            "cascading" => Ok(Semantics::Cascading),
            other => Err(format!("unknown semantics `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Label {
    pub name: Option<String>,
    /// Numerator over the owning graph's denominator.
    pub weight: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    /// Sorted, duplicate-free, nonempty.
    pub labels: Vec<LabelId>,
}

impl Edge {
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn has_label(&self, label: LabelId) -> bool {
        self.labels.binary_search(&label).is_ok()
    }
}

/// A subset of a graph's edges, stored as a membership mask indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeSubset(Vec<bool>);

impl EdgeSubset {
    pub fn all(m: usize) -> Self {
        Self(vec![true; m])
    }

    pub fn none(m: usize) -> Self {
        Self(vec![false; m])
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        Self(mask)
    }

    pub fn from_ids(m: usize, ids: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut mask = vec![false; m];
        for e in ids {
            mask[e] = true;
        }
        Self(mask)
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.get(e).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.0.iter().any(|&b| b)
    }

    /// Number of edges in the universe this subset was drawn from.
    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    pub fn is_subset_of(&self, other: &EdgeSubset) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(&a, &b)| !a || b)
    }

    pub fn as_mask(&self) -> &[bool] {
        &self.0
    }
}

/// Per-vertex label degree and per-label frequency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    /// `D_L(v)`: distinct labels over the edges incident to `v`.
    pub label_degree: Vec<usize>,
    pub min_label_degree: usize,
    pub max_label_degree: usize,
    /// Number of edges carrying each label.
    pub label_frequency: Vec<usize>,
    pub max_label_frequency: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    n: usize,
    edges: Vec<Edge>,
    labels: Vec<Label>,
    denom: u64,
    terminals: Option<(VertexId, VertexId)>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
}

/// Incremental constructor for [`LabeledGraph`]; validation happens in [`GraphBuilder::build`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    edges: Vec<(VertexId, VertexId, Vec<LabelId>)>,
    label_count: Option<usize>,
    weights: HashMap<LabelId, u64>,
    names: HashMap<LabelId, String>,
    denom: u64,
    terminals: Option<(VertexId, VertexId)>,
    require_connected: bool,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            label_count: None,
            weights: HashMap::new(),
            names: HashMap::new(),
            denom: 1,
            terminals: None,
            require_connected: true,
        }
    }

    pub fn edge(mut self, u: VertexId, v: VertexId, labels: impl IntoIterator<Item = LabelId>) -> Self {
        self.edges.push((u, v, labels.into_iter().collect()));
        self
    }

    pub fn push_edge(&mut self, u: VertexId, v: VertexId, labels: Vec<LabelId>) {
        self.edges.push((u, v, labels));
    }

    /// Fixes the label table size. Without it the table covers `0..=max used id`.
    pub fn label_count(mut self, count: usize) -> Self {
        self.label_count = Some(count);
        self
    }

    /// Weight numerator for `label` (over the denominator).
    pub fn weight(mut self, label: LabelId, numerator: u64) -> Self {
        self.weights.insert(label, numerator);
        self
    }

    pub fn set_weight(&mut self, label: LabelId, numerator: u64) {
        self.weights.insert(label, numerator);
    }

    pub fn name(mut self, label: LabelId, name: impl Into<String>) -> Self {
        self.names.insert(label, name.into());
        self
    }

    pub fn set_name(&mut self, label: LabelId, name: impl Into<String>) {
        self.names.insert(label, name.into());
    }

    pub fn denominator(mut self, denom: u64) -> Self {
        self.denom = denom;
        self
    }

    pub fn terminals(mut self, s: VertexId, t: VertexId) -> Self {
        self.terminals = Some((s, t));
        self
    }

    pub fn set_terminals(&mut self, terminals: Option<(VertexId, VertexId)>) {
        self.terminals = terminals;
    }

    /// Accept disconnected graphs. Solvers still reject them.
    pub fn allow_disconnected(mut self) -> Self {
        self.require_connected = false;
        self
    }

    pub fn build(self) -> Result<LabeledGraph, GraphError> {
        let n = self.n;
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if self.denom == 0 {
            return Err(GraphError::ZeroDenominator);
        }
        let max_used = self
            .edges
            .iter()
            .flat_map(|(_, _, ls)| ls.iter().copied())
            .chain(self.weights.keys().copied())
            .chain(self.names.keys().copied())
            .max();
        let label_count = self
            .label_count
            .unwrap_or_else(|| max_used.map_or(0, |m| m + 1));

        let mut seen: HashMap<(VertexId, VertexId), EdgeId> = HashMap::new();
        let mut edges = Vec::with_capacity(self.edges.len());
        for (id, (u, v, mut labels)) in self.edges.into_iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { edge: id, vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { edge: id, vertex: u });
            }
            if labels.is_empty() {
                return Err(GraphError::EmptyLabelSet { edge: id });
            }
            labels.sort_unstable();
            labels.dedup();
            if let Some(&bad) = labels.iter().find(|&&l| l >= label_count) {
                return Err(GraphError::UnknownLabel { label: bad, count: label_count });
            }
            let key = (u.min(v), u.max(v));
            if let Some(&first) = seen.get(&key) {
                return Err(GraphError::DuplicateEdge { edge: id, first, u, v });
            }
            seen.insert(key, id);
            edges.push(Edge { u, v, labels });
        }

        let mut labels: Vec<Label> = (0..label_count)
            .map(|_| Label { name: None, weight: self.denom })
            .collect();
        for (label, w) in self.weights {
            if label >= label_count {
                return Err(GraphError::UnknownLabel { label, count: label_count });
            }
            if w == 0 {
                return Err(GraphError::NonPositiveWeight { label });
            }
            labels[label].weight = w;
        }
        for (label, name) in self.names {
            if label >= label_count {
                return Err(GraphError::UnknownLabel { label, count: label_count });
            }
            labels[label].name = Some(name);
        }

        if let Some((s, t)) = self.terminals {
            for x in [s, t] {
                if x >= n {
                    return Err(GraphError::UnknownVertex { vertex: x, n });
                }
            }
            if s == t {
                return Err(GraphError::TerminalsCoincide(s));
            }
        }

        let mut adjacency = vec![Vec::new(); n];
        for (id, e) in edges.iter().enumerate() {
            adjacency[e.u].push((e.v, id));
            adjacency[e.v].push((e.u, id));
        }

        let g = LabeledGraph {
            n,
            edges,
            labels,
            denom: self.denom,
            terminals: self.terminals,
            adjacency,
        };
        if self.require_connected {
            g.ensure_connected()?;
        }
        Ok(g)
    }
}

/// Builds and validates a connected graph with default (unit) weights unless
/// `weights` overrides them.
pub fn build_graph(
    n: usize,
    edges: &[(VertexId, VertexId, Vec<LabelId>)],
    weights: Option<&HashMap<LabelId, u64>>,
) -> Result<LabeledGraph, GraphError> {
    let mut b = GraphBuilder::new(n);
    for (u, v, ls) in edges {
        b.push_edge(*u, *v, ls.clone());
    }
    if let Some(ws) = weights {
        for (&l, &w) in ws {
            b.set_weight(l, w);
        }
    }
    b.build()
}

impl LabeledGraph {
    pub fn builder(n: usize) -> GraphBuilder {
        GraphBuilder::new(n)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn label_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Result<&Edge, GraphError> {
        self.edges
            .get(id)
            .ok_or(GraphError::UnknownEdge { edge: id, count: self.edges.len() })
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, id: LabelId) -> &Label {
        &self.labels[id]
    }

    /// Display name of a label, falling back to its numeric id.
    pub fn label_name(&self, id: LabelId) -> String {
        self.labels[id].name.clone().unwrap_or_else(|| id.to_string())
    }

    pub fn weight(&self, id: LabelId) -> u64 {
        self.labels[id].weight
    }

    pub fn denominator(&self) -> u64 {
        self.denom
    }

    /// `true` when every label has weight exactly 1.
    pub fn is_unit_weighted(&self) -> bool {
        self.labels.iter().all(|l| l.weight == self.denom)
    }

    pub fn total_weight(&self, labels: &[LabelId]) -> u64 {
        labels.iter().map(|&l| self.labels[l].weight).sum()
    }

    pub fn terminals(&self) -> Option<(VertexId, VertexId)> {
        self.terminals
    }

    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_non_overlapping(&self) -> bool {
        self.edges.iter().all(|e| e.labels.len() == 1)
    }

    /// Labels that actually occur on some edge.
    pub fn used_labels(&self) -> Vec<LabelId> {
        let mut used = vec![false; self.labels.len()];
        for e in &self.edges {
            for &l in &e.labels {
                used[l] = true;
            }
        }
        (0..self.labels.len()).filter(|&l| used[l]).collect()
    }

    /// Copy with different terminals (validated).
    pub fn with_terminals(&self, terminals: Option<(VertexId, VertexId)>) -> Result<Self, GraphError> {
        if let Some((s, t)) = terminals {
            self.check_vertex(s)?;
            self.check_vertex(t)?;
            if s == t {
                return Err(GraphError::TerminalsCoincide(s));
            }
        }
        let mut g = self.clone();
        g.terminals = terminals;
        Ok(g)
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex { vertex: v, n: self.n })
        }
    }

    pub(crate) fn check_label(&self, l: LabelId) -> Result<(), GraphError> {
        if l < self.labels.len() {
            Ok(())
        } else {
            Err(GraphError::UnknownLabel { label: l, count: self.labels.len() })
        }
    }

    pub fn ensure_connected(&self) -> Result<(), GraphError> {
        let comp = self.components(&EdgeSubset::all(self.edges.len()));
        match comp.iter().position(|&c| c != 0) {
            None => Ok(()),
            Some(vertex) => Err(GraphError::Disconnected { vertex }),
        }
    }

    /// Label correlation classes: labels sharing an edge end up in one class,
    /// transitively. Ordered by smallest member; every label appears once.
    pub fn label_classes(&self) -> Vec<Vec<LabelId>> {
        let mut dsu = DisjointSet::new(self.labels.len());
        for e in &self.edges {
            for w in e.labels.windows(2) {
                dsu.union(w[0], w[1]);
            }
        }
        dsu.groups()
    }

    /// Closure of `selection` under the cascading rule. Sorted output.
    pub fn cascade_closure(&self, selection: &[LabelId]) -> Result<Vec<LabelId>, GraphError> {
        for &l in selection {
            self.check_label(l)?;
        }
        let mut class_of = vec![0usize; self.labels.len()];
        let classes = self.label_classes();
        for (i, c) in classes.iter().enumerate() {
            for &l in c {
                class_of[l] = i;
            }
        }
        let mut take = vec![false; classes.len()];
        for &l in selection {
            take[class_of[l]] = true;
        }
        let mut out: Vec<LabelId> = classes
            .iter()
            .zip(&take)
            .filter(|(_, &t)| t)
            .flat_map(|(c, _)| c.iter().copied())
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Edges surviving the removal of `selection` under `semantics`.
    pub fn remove_labels(&self, selection: &[LabelId], semantics: Semantics) -> Result<EdgeSubset, GraphError> {
        for &l in selection {
            self.check_label(l)?;
        }
        let removed: Vec<LabelId> = match semantics {
            Semantics::Independent => selection.to_vec(),
            Semantics::Cascading => self.cascade_closure(selection)?,
        };
        let mut gone = vec![false; self.labels.len()];
        for l in removed {
            gone[l] = true;
        }
        Ok(EdgeSubset(
            self.edges
                .iter()
                .map(|e| !e.labels.iter().any(|&l| gone[l]))
                .collect(),
        ))
    }

    /// Component index per vertex over the surviving edges, numbered in
    /// order of the smallest vertex in each component.
    pub fn components(&self, surviving: &EdgeSubset) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            queue.push_back(start);
            while let Some(x) = queue.pop_front() {
                for &(y, e) in &self.adjacency[x] {
                    if surviving.contains(e) && comp[y] == usize::MAX {
                        comp[y] = next;
                        queue.push_back(y);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self, surviving: &EdgeSubset) -> bool {
        self.components(surviving).iter().all(|&c| c == 0)
    }

    pub fn is_st_connected(&self, s: VertexId, t: VertexId, surviving: &EdgeSubset) -> Result<bool, GraphError> {
        self.check_vertex(s)?;
        self.check_vertex(t)?;
        if s == t {
            return Ok(true);
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(x) = queue.pop_front() {
            for &(y, e) in &self.adjacency[x] {
                if surviving.contains(e) && !seen[y] {
                    if y == t {
                        return Ok(true);
                    }
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        Ok(false)
    }

    pub fn stats(&self) -> GraphStats {
        compute_stats(self)
    }
}

pub fn compute_stats(g: &LabeledGraph) -> GraphStats {
    let mut label_frequency = vec![0usize; g.label_count()];
    for e in g.edges() {
        for &l in &e.labels {
            label_frequency[l] += 1;
        }
    }
    let mut mark = vec![usize::MAX; g.label_count()];
    let label_degree: Vec<usize> = (0..g.vertex_count())
        .map(|v| {
            let mut count = 0;
            for &(_, e) in g.neighbors(v) {
                for &l in &g.edges()[e].labels {
                    if mark[l] != v {
                        mark[l] = v;
                        count += 1;
                    }
                }
            }
            count
        })
        .collect();
    GraphStats {
        min_label_degree: label_degree.iter().copied().min().unwrap_or(0),
        max_label_degree: label_degree.iter().copied().max().unwrap_or(0),
        max_label_frequency: label_frequency.iter().copied().max().unwrap_or(0),
        label_degree,
        label_frequency,
    }
}

/// Formats `numerator / denom` as an integer when exact, else as a reduced fraction.
pub fn format_weight(numerator: u64, denom: u64) -> String {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    let d = gcd(numerator, denom).max(1);
    let (p, q) = (numerator / d, denom / d);
    if q == 1 {
        p.to_string()
    } else {
        format!("{p}/{q}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> LabeledGraph {
        LabeledGraph::builder(3).edge(0, 1, [0]).edge(1, 2, [1]).build().unwrap()
    }

    #[test]
    fn minimal_graph_is_non_overlapping() {
        let g = build_graph(2, &[(0, 1, vec![0])], None).unwrap();
        assert!(g.is_non_overlapping());
        assert_eq!(g.label_count(), 1);
        assert_eq!(g.weight(0), 1);
    }

    #[test]
    fn triple_labeled_edge_is_overlapping() {
        let g = build_graph(
            4,
            &[
                (0, 1, vec![0, 1, 2]),
                (0, 2, vec![0]),
                (0, 3, vec![0]),
                (1, 2, vec![2]),
                (1, 3, vec![2]),
                (2, 3, vec![1]),
            ],
            None,
        )
        .unwrap();
        assert!(!g.is_non_overlapping());
    }

    #[test]
    fn rejects_duplicate_edge() {
        let err = build_graph(3, &[(0, 1, vec![0]), (0, 1, vec![1])], None).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge { edge: 1, first: 0, u: 0, v: 1 });
        let err = build_graph(2, &[(0, 1, vec![0]), (1, 0, vec![1])], None).unwrap_err();
        assert!(matches!(err, GraphError::DuplicateEdge { edge: 1, .. }));
    }

    #[test]
    fn rejects_invalid_elements() {
        assert_eq!(
            build_graph(2, &[(1, 1, vec![0])], None).unwrap_err(),
            GraphError::SelfLoop { edge: 0, vertex: 1 }
        );
        assert_eq!(
            build_graph(2, &[(0, 1, vec![])], None).unwrap_err(),
            GraphError::EmptyLabelSet { edge: 0 }
        );
        assert_eq!(
            build_graph(3, &[(0, 1, vec![0])], None).unwrap_err(),
            GraphError::Disconnected { vertex: 2 }
        );
        let ws = HashMap::from([(0, 0)]);
        assert_eq!(
            build_graph(2, &[(0, 1, vec![0])], Some(&ws)).unwrap_err(),
            GraphError::NonPositiveWeight { label: 0 }
        );
        assert!(matches!(
            build_graph(2, &[(0, 5, vec![0])], None).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 5, .. }
        ));
        assert!(matches!(
            LabeledGraph::builder(2).label_count(1).edge(0, 1, [3]).build().unwrap_err(),
            GraphError::UnknownLabel { label: 3, count: 1 }
        ));
    }

    #[test]
    fn disconnected_allowed_on_request() {
        let g = LabeledGraph::builder(3).edge(0, 1, [0]).allow_disconnected().build().unwrap();
        assert!(!g.is_connected(&EdgeSubset::all(1)));
        assert!(g.ensure_connected().is_err());
    }

    #[test]
    fn empty_removal_keeps_everything() {
        let g = path3();
        for sem in [Semantics::Independent, Semantics::Cascading] {
            assert_eq!(g.remove_labels(&[], sem).unwrap(), EdgeSubset::all(2));
        }
    }

    #[test]
    fn independent_removal_leaves_other_labels() {
        // edge 0 carries {A, C}; edge 1 carries {C}
        let g = LabeledGraph::builder(3).edge(0, 1, [0, 2]).edge(1, 2, [2]).edge(0, 2, [1]).build().unwrap();
        let s = g.remove_labels(&[0], Semantics::Independent).unwrap();
        assert_eq!(s.ids().collect::<Vec<_>>(), vec![1, 2]);
        let s = g.remove_labels(&[0], Semantics::Cascading).unwrap();
        assert_eq!(s.ids().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn removal_rejects_unknown_label() {
        let g = path3();
        assert!(matches!(
            g.remove_labels(&[7], Semantics::Independent),
            Err(GraphError::UnknownLabel { label: 7, .. })
        ));
    }

    #[test]
    fn connectivity_oracles() {
        let g = build_graph(2, &[(0, 1, vec![0])], None).unwrap();
        assert!(g.is_connected(&EdgeSubset::all(1)));
        assert!(!g.is_connected(&EdgeSubset::none(1)));
        let g = path3();
        let mid_removed = EdgeSubset::from_ids(2, [0]);
        assert!(!g.is_st_connected(0, 2, &mid_removed).unwrap());
        assert!(g.is_st_connected(0, 1, &mid_removed).unwrap());
        assert!(matches!(
            g.is_st_connected(0, 9, &mid_removed),
            Err(GraphError::UnknownVertex { vertex: 9, .. })
        ));
    }

    #[test]
    fn star_label_degrees() {
        let g = LabeledGraph::builder(4).edge(0, 1, [0]).edge(0, 2, [1]).edge(0, 3, [2]).build().unwrap();
        let st = g.stats();
        assert_eq!(st.label_degree, vec![3, 1, 1, 1]);
        assert_eq!(st.min_label_degree, 1);
        assert_eq!(st.max_label_frequency, 1);
    }

    #[test]
    fn weight_formatting() {
        assert_eq!(format_weight(6, 2), "3");
        assert_eq!(format_weight(3, 2), "3/2");
        assert_eq!(format_weight(4, 6), "2/3");
    }
}
