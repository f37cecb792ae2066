//! Small hand-built instances used by tests, the CLI and the shipped
//! `fixtures/` directory. Each constructor matches the file of the same name.

use crate::model::LabeledGraph;

/// K4 on `a b c d` with labels `R G B`. Edge `a-b` carries all three labels,
/// `a` otherwise sees only `R`, `b` only `B`, and `c-d` carries `G`, so every
/// vertex has label degree 3.
pub fn figure1() -> LabeledGraph {
    LabeledGraph::builder(4)
        .label_count(3)
        .name(0, "R")
        .name(1, "G")
        .name(2, "B")
        .edge(0, 1, [0, 1, 2])
        .edge(0, 2, [0])
        .edge(0, 3, [0])
        .edge(1, 2, [2])
        .edge(1, 3, [2])
        .edge(2, 3, [1])
        .build()
        .expect("valid fixture")
}

/// Five labels `A..E`; three edges carry `{A,C}`, `{B,E}` and `{A,D}`.
pub fn figure2() -> LabeledGraph {
    LabeledGraph::builder(5)
        .label_count(5)
        .name(0, "A")
        .name(1, "B")
        .name(2, "C")
        .name(3, "D")
        .name(4, "E")
        .edge(0, 1, [0, 2])
        .edge(1, 2, [1, 4])
        .edge(2, 3, [0, 3])
        .edge(3, 4, [1])
        .edge(4, 0, [3])
        .edge(0, 2, [2])
        .edge(1, 3, [4])
        .build()
        .expect("valid fixture")
}

/// K4 with a distinct label per edge plus an extra label on edge `0-1`.
/// Its minimum label cut is 3 under either removal semantics.
pub fn k4_overlap() -> LabeledGraph {
    LabeledGraph::builder(4)
        .label_count(7)
        .edge(0, 1, [0, 6])
        .edge(0, 2, [1])
        .edge(0, 3, [2])
        .edge(1, 2, [3])
        .edge(1, 3, [4])
        .edge(2, 3, [5])
        .terminals(0, 3)
        .build()
        .expect("valid fixture")
}

/// Path whose overlap sets `{A,B}`, `{B,C}`, `{C,D}` chain into one class,
/// joined by single-label edges `X` and `Y`.
pub fn overlap_chain() -> LabeledGraph {
    LabeledGraph::builder(6)
        .label_count(6)
        .name(0, "A")
        .name(1, "B")
        .name(2, "C")
        .name(3, "D")
        .name(4, "X")
        .name(5, "Y")
        .edge(0, 1, [0, 1])
        .edge(1, 2, [4])
        .edge(2, 3, [1, 2])
        .edge(3, 4, [5])
        .edge(4, 5, [2, 3])
        .build()
        .expect("valid fixture")
}

/// One edge between the two terminals.
pub fn single_edge() -> LabeledGraph {
    LabeledGraph::builder(2)
        .edge(0, 1, [0])
        .terminals(0, 1)
        .build()
        .expect("valid fixture")
}

/// Two internally disjoint `s-t` paths `s-x-t` and `s-y-t`, one label each.
pub fn two_paths() -> LabeledGraph {
    LabeledGraph::builder(4)
        .name(0, "A")
        .name(1, "B")
        .edge(0, 1, [0])
        .edge(1, 3, [0])
        .edge(0, 2, [1])
        .edge(2, 3, [1])
        .terminals(0, 3)
        .build()
        .expect("valid fixture")
}

/// Name and constructor of every fixture under `fixtures/`. The overlap
/// chain lives under `fixtures/counterexamples/` and is not listed.
pub fn all() -> Vec<(&'static str, LabeledGraph)> {
    vec![
        ("figure1", figure1()),
        ("figure2", figure2()),
        ("k4_overlap", k4_overlap()),
        ("single_edge", single_edge()),
        ("two_paths", two_paths()),
    ]
}
