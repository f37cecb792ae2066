//! Line-oriented text formats for label graphs and hitting-set instances.
//!
//! Graph files:
//!
//! ```text
//! # comment
//! labelgraph <n> <m> <|L|>
//! terminals <s> <t>          (optional)
//! denom <d>                  (optional, default 1)
//! weight <label-id> <w>      (optional; numerator over denom, default d)
//! name <label-id> <name>     (optional display name)
//! edge <u> <v> <label-id>[,<label-id>...]
//! ```
//!
//! The header comes first; other directives may appear in any order. Edge ids
//! follow the order of `edge` lines. [`emit`] writes the canonical form:
//! header, terminals, denom, weights, names, edges.
//!
//! Hitting-set files: `hittingset <|U|> <m>`, an optional `budget <l>`, then
//! one line of space-separated element indices per subset.

use std::fmt::Write as _;

use thiserror::Error;

use crate::model::{GraphError, LabeledGraph};
use crate::reductions::{HittingSetInstance, ReductionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("invalid instance: {0}")]
    Invalid(#[from] GraphError),
    #[error("invalid hitting-set instance: {0}")]
    HittingSet(#[from] ReductionError),
}

impl ParseError {
    /// 1-based line the error points at, when there is one.
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { line, .. } | ParseError::Graph { line, .. } => Some(*line),
            _ => None,
        }
    }
}

fn syntax(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, reason: reason.into() }
}

/// Non-blank lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = body.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn number<T: std::str::FromStr>(line: usize, word: &str, what: &str) -> Result<T, ParseError> {
    word.parse().map_err(|_| syntax(line, format!("expected {what}, found `{word}`")))
}

fn arity(line: usize, words: &[&str], n: usize) -> Result<(), ParseError> {
    if words.len() == n {
        Ok(())
    } else {
        Err(syntax(line, format!("`{}` takes {} field(s), found {}", words[0], n - 1, words.len() - 1)))
    }
}

pub fn parse(text: &str) -> Result<LabeledGraph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| syntax(1, "empty input, expected `labelgraph <n> <m> <|L|>`"))?;
    if header[0] != "labelgraph" {
        return Err(syntax(hline, format!("expected `labelgraph` header, found `{}`", header[0])));
    }
    arity(hline, &header, 4)?;
    let n: usize = number(hline, header[1], "vertex count")?;
    let m: usize = number(hline, header[2], "edge count")?;
    let label_count: usize = number(hline, header[3], "label count")?;

    let mut b = LabeledGraph::builder(n).label_count(label_count);
    let mut edge_lines = Vec::new();
    let mut seen_terminals = false;
    let mut seen_denom = false;
    let mut weight_seen = vec![false; label_count];
    let mut name_seen = vec![false; label_count];
    let check_label = |line: usize, l: usize| {
        if l < label_count {
            Ok(l)
        } else {
            Err(syntax(line, format!("label id {l} out of range (|L| = {label_count})")))
        }
    };
    let check_vertex = |line: usize, v: usize| {
        if v < n {
            Ok(v)
        } else {
            Err(syntax(line, format!("vertex {v} out of range (n = {n})")))
        }
    };

    for (line, words) in lines {
        match words[0] {
            "terminals" => {
                arity(line, &words, 3)?;
                if seen_terminals {
                    return Err(syntax(line, "duplicate `terminals` line"));
                }
                seen_terminals = true;
                let s = check_vertex(line, number(line, words[1], "vertex")?)?;
                let t = check_vertex(line, number(line, words[2], "vertex")?)?;
                if s == t {
                    return Err(ParseError::Graph { line, source: GraphError::TerminalsCoincide(s) });
                }
                b.set_terminals(Some((s, t)));
            }
            "denom" => {
                arity(line, &words, 2)?;
                if seen_denom {
                    return Err(syntax(line, "duplicate `denom` line"));
                }
                seen_denom = true;
                let d: u64 = number(line, words[1], "denominator")?;
                if d == 0 {
                    return Err(ParseError::Graph { line, source: GraphError::ZeroDenominator });
                }
                b = b.denominator(d);
            }
            "weight" => {
                arity(line, &words, 3)?;
                let l = check_label(line, number(line, words[1], "label id")?)?;
                if std::mem::replace(&mut weight_seen[l], true) {
                    return Err(syntax(line, format!("duplicate weight for label {l}")));
                }
                let w: u64 = number(line, words[2], "weight")?;
                if w == 0 {
                    return Err(ParseError::Graph { line, source: GraphError::NonPositiveWeight { label: l } });
                }
                b.set_weight(l, w);
            }
            "name" => {
                arity(line, &words, 3)?;
                let l = check_label(line, number(line, words[1], "label id")?)?;
                if std::mem::replace(&mut name_seen[l], true) {
                    return Err(syntax(line, format!("duplicate name for label {l}")));
                }
                b.set_name(l, words[2]);
            }
            "edge" => {
                arity(line, &words, 4)?;
                let u = check_vertex(line, number(line, words[1], "vertex")?)?;
                let v = check_vertex(line, number(line, words[2], "vertex")?)?;
                let mut labels = Vec::new();
                for part in words[3].split(',') {
                    if part.is_empty() {
                        return Err(syntax(line, "empty entry in label list"));
                    }
                    labels.push(check_label(line, number(line, part, "label id")?)?);
                }
                edge_lines.push(line);
                b.push_edge(u, v, labels);
            }
            "labelgraph" => return Err(syntax(line, "second `labelgraph` header")),
            other => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }
    if edge_lines.len() != m {
        return Err(syntax(hline, format!("header declares {m} edges, found {}", edge_lines.len())));
    }
    b.build().map_err(|e| match e {
        GraphError::SelfLoop { edge, .. }
        | GraphError::DuplicateEdge { edge, .. }
        | GraphError::EmptyLabelSet { edge }
        | GraphError::VertexOutOfRange { edge, .. } => ParseError::Graph { line: edge_lines[edge], source: e },
        other => ParseError::Invalid(other),
    })
}

pub fn emit(g: &LabeledGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "labelgraph {} {} {}", g.vertex_count(), g.edge_count(), g.label_count());
    if let Some((s, t)) = g.terminals() {
        let _ = writeln!(out, "terminals {s} {t}");
    }
    if g.denominator() != 1 {
        let _ = writeln!(out, "denom {}", g.denominator());
    }
    for (l, label) in g.labels().iter().enumerate() {
        if label.weight != g.denominator() {
            let _ = writeln!(out, "weight {l} {}", label.weight);
        }
    }
    for (l, label) in g.labels().iter().enumerate() {
        if let Some(name) = &label.name {
            let _ = writeln!(out, "name {l} {name}");
        }
    }
    for e in g.edges() {
        let ids: Vec<String> = e.labels.iter().map(|l| l.to_string()).collect();
        let _ = writeln!(out, "edge {} {} {}", e.u, e.v, ids.join(","));
    }
    out
}

pub fn parse_hitting_set(text: &str) -> Result<HittingSetInstance, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| syntax(1, "empty input, expected `hittingset <|U|> <m>`"))?;
    if header[0] != "hittingset" {
        return Err(syntax(hline, format!("expected `hittingset` header, found `{}`", header[0])));
    }
    arity(hline, &header, 3)?;
    let universe: usize = number(hline, header[1], "universe size")?;
    let m: usize = number(hline, header[2], "subset count")?;
    let mut subsets = Vec::with_capacity(m);
    let mut budget = None;
    for (line, words) in lines {
        if words[0] == "budget" {
            arity(line, &words, 2)?;
            if budget.replace(number(line, words[1], "budget")?).is_some() {
                return Err(syntax(line, "duplicate `budget` line"));
            }
            continue;
        }
        let mut subset = Vec::with_capacity(words.len());
        for w in words {
            let x: usize = number(line, w, "element index")?;
            if x >= universe {
                return Err(syntax(line, format!("element {x} out of range (|U| = {universe})")));
            }
            if subset.contains(&x) {
                return Err(syntax(line, format!("element {x} repeated")));
            }
            subset.push(x);
        }
        subsets.push(subset);
    }
    if subsets.len() != m {
        return Err(syntax(hline, format!("header declares {m} subsets, found {}", subsets.len())));
    }
    let mut h = HittingSetInstance::new(universe, subsets)?;
    h.budget = budget;
    Ok(h)
}

pub fn emit_hitting_set(h: &HittingSetInstance) -> String {
    let mut out = format!("hittingset {} {}\n", h.universe, h.subsets.len());
    if let Some(l) = h.budget {
        let _ = writeln!(out, "budget {l}");
    }
    for s in &h.subsets {
        let words: Vec<String> = s.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", words.join(" "));
    }
    out
}
