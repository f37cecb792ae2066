//! Overlap elimination (operation K) and the rainbow-path edge replacement.
//!
//! Operation K merges every group of labels that is linked through edges
//! carrying several labels at once into a single fresh label whose weight is
//! the total weight of the group. The result has exactly one label per edge.
//!
//! The rainbow-path replacement substitutes a multi-label edge by a path of
//! single-label edges. It is kept because it does *not* preserve the minimum
//! label cut: every interior path vertex can be isolated by its two labels.

use std::fmt;

use thiserror::Error;

use crate::model::{compute_stats, EdgeId, GraphError, LabelId, LabeledGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("edge {edge} carries a single label; nothing to replace")]
    SingleLabel { edge: EdgeId },
    #[error("report does not belong to this graph: {0}")]
    Provenance(String),
}

/// One merged group of original labels and the fresh label replacing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelClass {
    /// Fresh id, numbered from the original label count upward.
    pub new_id: usize,
    /// Sum of member weights (numerators over the graph denominator).
    pub weight: u64,
    /// Original labels, ascending.
    pub members: Vec<LabelId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformReport {
    pub original_label_count: usize,
    /// Ordered by smallest member; class `i` is label `i` of `transformed`.
    pub classes: Vec<LabelClass>,
    pub transformed: LabeledGraph,
}

impl TransformReport {
    /// Index into `classes` (and label id in `transformed`) for an original label.
    pub fn class_of(&self, original: LabelId) -> Option<usize> {
        self.classes.iter().position(|c| c.members.binary_search(&original).is_ok())
    }

    pub fn total_new_weight(&self) -> u64 {
        self.classes.iter().map(|c| c.weight).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.classes.iter().all(|c| c.members.len() == 1)
    }

    /// Provenance lines, `class <new-id> <w> := <old ids...>`.
    pub fn provenance_lines(&self) -> Vec<String> {
        let denom = self.transformed.denominator();
        self.classes
            .iter()
            .map(|c| {
                let ids: Vec<String> = c.members.iter().map(|l| l.to_string()).collect();
                format!(
                    "class {} {} := {}",
                    c.new_id,
                    crate::model::format_weight(c.weight, denom),
                    ids.join(" ")
                )
            })
            .collect()
    }
}

/// Operation K.
///
/// Labels co-occurring on an edge are unioned in a disjoint-set forest; each
/// resulting group becomes one label of the transformed graph. Groups are
/// ordered by their smallest original label, and group `i` gets the fresh id
/// `original_label_count + i`. Labels never sharing an edge stay singleton
/// groups with their own weight.
pub fn operation_k(g: &LabeledGraph) -> TransformReport {
    let groups = g.label_classes();
    let base = g.label_count();
    let mut class_of = vec![0usize; base];
    let classes: Vec<LabelClass> = groups
        .into_iter()
        .enumerate()
        .map(|(i, members)| {
            for &l in &members {
                class_of[l] = i;
            }
            LabelClass {
                new_id: base + i,
                weight: g.total_weight(&members),
                members,
            }
        })
        .collect();

    let mut b = LabeledGraph::builder(g.vertex_count())
        .label_count(classes.len())
        .denominator(g.denominator());
    for e in g.edges() {
        b.push_edge(e.u, e.v, vec![class_of[e.labels[0]]]);
    }
    for (i, c) in classes.iter().enumerate() {
        b.set_weight(i, c.weight);
        let names: Vec<String> = c.members.iter().map(|&l| g.label_name(l)).collect();
        b.set_name(i, names.join("+"));
    }
    b.set_terminals(g.terminals());
    let transformed = b
        .allow_disconnected()
        .build()
        .expect("relabeling a valid graph keeps it valid");

    TransformReport {
        original_label_count: base,
        classes,
        transformed,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Clause {
    /// Each edge carries one label.
    SingleLabelPerEdge,
    /// Each new label's size is at most the largest vertex label degree of the
    /// original graph, and there are no more new labels than old ones.
    WeightBound,
    /// Total new weight equals the original total weight (`|L|` when unweighted).
    TotalWeight,
}

impl Clause {
    pub fn name(self) -> &'static str {
        match self {
            Clause::SingleLabelPerEdge => "single_label_per_edge",
            Clause::WeightBound => "weight_bound",
            Clause::TotalWeight => "total_weight",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseVerdict {
    pub clause: Clause,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for ClauseVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}",
            self.clause.name(),
            if self.passed { "PASS" } else { "FAIL" },
            self.detail
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapGuarantees {
    pub clauses: [ClauseVerdict; 3],
}

impl OverlapGuarantees {
    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn get(&self, clause: Clause) -> &ClauseVerdict {
        self.clauses.iter().find(|c| c.clause == clause).expect("all clauses present")
    }
}

/// Checks the three guarantees of operation K against the original graph.
///
/// The size bound compares the member count of every class with the maximum
/// label degree over the original vertices.
pub fn verify_guarantees(report: &TransformReport, original: &LabeledGraph) -> Result<OverlapGuarantees, TransformError> {
    check_provenance(report, original)?;
    let t = &report.transformed;

    let multi: Vec<EdgeId> = (0..t.edge_count()).filter(|&e| t.edges()[e].labels.len() != 1).collect();
    let single = ClauseVerdict {
        clause: Clause::SingleLabelPerEdge,
        passed: multi.is_empty(),
        detail: if multi.is_empty() {
            format!("edges={}", t.edge_count())
        } else {
            format!("multi_label_edges={multi:?}")
        },
    };

    let max_dl = compute_stats(original).max_label_degree;
    let largest = report.classes.iter().max_by_key(|c| (c.members.len(), std::cmp::Reverse(c.new_id)));
    let largest_size = largest.map_or(0, |c| c.members.len());
    let count_ok = report.classes.len() <= original.label_count();
    let size_ok = largest_size <= max_dl;
    let bound = ClauseVerdict {
        clause: Clause::WeightBound,
        passed: size_ok && count_ok,
        detail: format!(
            "max_class_size={} max_label_degree={} new_labels={} old_labels={}{}",
            largest_size,
            max_dl,
            report.classes.len(),
            original.label_count(),
            match largest {
                Some(c) if !size_ok => format!(" offending_class={}", c.new_id),
                _ => String::new(),
            }
        ),
    };

    let old_total = original.total_weight(&(0..original.label_count()).collect::<Vec<_>>());
    let new_total = report.total_new_weight();
    let denom = original.denominator();
    let total = ClauseVerdict {
        clause: Clause::TotalWeight,
        passed: new_total == old_total,
        detail: format!(
            "new_total={} old_total={} old_labels={}",
            crate::model::format_weight(new_total, denom),
            crate::model::format_weight(old_total, denom),
            original.label_count()
        ),
    };

    Ok(OverlapGuarantees { clauses: [single, bound, total] })
}

fn check_provenance(report: &TransformReport, original: &LabeledGraph) -> Result<(), TransformError> {
    let bad = |msg: String| Err(TransformError::Provenance(msg));
    if report.original_label_count != original.label_count() {
        return bad(format!(
            "report covers {} labels, graph has {}",
            report.original_label_count,
            original.label_count()
        ));
    }
    let mut owner = vec![usize::MAX; original.label_count()];
    for (i, c) in report.classes.iter().enumerate() {
        if c.new_id != original.label_count() + i {
            return bad(format!("class {i} has id {}", c.new_id));
        }
        for &l in &c.members {
            if l >= owner.len() {
                return bad(format!("class {} names unknown label {l}", c.new_id));
            }
            if owner[l] != usize::MAX {
                return bad(format!("label {l} appears in two classes"));
            }
            owner[l] = i;
        }
    }
    if let Some(l) = owner.iter().position(|&o| o == usize::MAX) {
        return bad(format!("label {l} belongs to no class"));
    }
    let t = &report.transformed;
    if t.edge_count() != original.edge_count() || t.label_count() != report.classes.len() {
        return bad("transformed graph shape differs".into());
    }
    for (id, (a, b)) in original.edges().iter().zip(t.edges()).enumerate() {
        if (a.u, a.v) != (b.u, b.v) {
            return bad(format!("edge {id} endpoints differ"));
        }
        if b.labels.iter().any(|&nl| a.labels.iter().any(|&ol| owner[ol] != nl)) {
            return bad(format!("edge {id} relabeled outside its class"));
        }
    }
    Ok(())
}

/// Replaces edge `edge` (carrying `k >= 2` labels) by a path of `k` edges
/// through `k - 1` fresh vertices appended after the existing ones. Path edge
/// `i` carries the `i`-th label of the original edge in ascending order. The
/// new edges replace the old one at the end of the edge list.
pub fn rainbow_path_transform(g: &LabeledGraph, edge: EdgeId) -> Result<LabeledGraph, TransformError> {
    let target = g.edge(edge)?;
    let k = target.labels.len();
    if k < 2 {
        return Err(TransformError::SingleLabel { edge });
    }
    let n = g.vertex_count();
    let mut b = LabeledGraph::builder(n + k - 1)
        .label_count(g.label_count())
        .denominator(g.denominator());
    for (id, e) in g.edges().iter().enumerate() {
        if id != edge {
            b.push_edge(e.u, e.v, e.labels.clone());
        }
    }
    let mut prev = target.u;
    for (i, &l) in target.labels.iter().enumerate() {
        let next = if i + 1 == k { target.v } else { n + i };
        b.push_edge(prev, next, vec![l]);
        prev = next;
    }
    for (l, label) in g.labels().iter().enumerate() {
        b.set_weight(l, label.weight);
        if let Some(name) = &label.name {
            b.set_name(l, name.clone());
        }
    }
    b.set_terminals(g.terminals());
    Ok(b.build()?)
}
