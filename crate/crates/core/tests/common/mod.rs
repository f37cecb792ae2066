//! Brute-force oracles. Nothing here calls the removal, closure or solver
//! code under test; only graph accessors are shared.
#![allow(dead_code)]

use labelcut::{LabelId, LabeledGraph};

/// Labels reachable from `selection` through shared edges, by fixpoint
/// iteration over the edge list.
pub fn closure(g: &LabeledGraph, selection: u64) -> u64 {
    let mut set = selection;
    loop {
        let mut next = set;
        for e in g.edges() {
            let mask = mask_of(&e.labels);
            if mask & set != 0 {
                next |= mask;
            }
        }
        if next == set {
            return set;
        }
        set = next;
    }
}

pub fn mask_of(labels: &[LabelId]) -> u64 {
    labels.iter().fold(0, |m, &l| m | 1 << l)
}

pub fn ids(mask: u64) -> Vec<LabelId> {
    (0..64).filter(|b| mask >> b & 1 == 1).collect()
}

/// Surviving edges after removing `removed`: an edge dies if it carries any
/// removed label.
pub fn surviving(g: &LabeledGraph, removed: u64) -> Vec<bool> {
    g.edges().iter().map(|e| mask_of(&e.labels) & removed == 0).collect()
}

fn reach(g: &LabeledGraph, alive: &[bool], from: usize) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(x) = stack.pop() {
        for (id, e) in g.edges().iter().enumerate() {
            if !alive[id] {
                continue;
            }
            let y = if e.u == x {
                e.v
            } else if e.v == x {
                e.u
            } else {
                continue;
            };
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

pub fn disconnects(g: &LabeledGraph, alive: &[bool], st: Option<(usize, usize)>) -> bool {
    match st {
        Some((s, t)) => !reach(g, alive, s)[t],
        None => reach(g, alive, 0).iter().any(|&r| !r),
    }
}

fn weight(g: &LabeledGraph, mask: u64) -> u64 {
    ids(mask).into_iter().map(|l| g.weight(l)).sum()
}

/// Minimum cut weight over every label subset. Under cascading removal the
/// removed set, and the price paid, is the closure of the chosen labels.
pub fn brute_min_label_cut(g: &LabeledGraph, st: Option<(usize, usize)>, cascading: bool) -> Option<u64> {
    let k = g.label_count();
    assert!(k <= 20, "oracle limited to 20 labels");
    (0u64..1 << k)
        .filter_map(|s| {
            let removed = if cascading { closure(g, s) } else { s };
            disconnects(g, &surviving(g, removed), st).then(|| weight(g, removed))
        })
        .min()
}

/// Minimum number of edges whose removal separates `s` from `t`.
pub fn brute_min_edge_cut(g: &LabeledGraph, s: usize, t: usize) -> usize {
    let m = g.edge_count();
    assert!(m <= 20, "oracle limited to 20 edges");
    (0u64..1 << m)
        .filter(|&cut| {
            let alive: Vec<bool> = (0..m).map(|e| cut >> e & 1 == 0).collect();
            disconnects(g, &alive, Some((s, t)))
        })
        .map(|cut| cut.count_ones() as usize)
        .min()
        .expect("cutting every edge separates")
}

/// Minimum hitting set size by plain integer enumeration over all subsets.
pub fn brute_hitting_set_size(universe: usize, subsets: &[Vec<usize>]) -> usize {
    let masks: Vec<u32> = subsets.iter().map(|s| s.iter().fold(0, |m, &x| m | 1 << x)).collect();
    (0u32..1 << universe)
        .filter(|c| masks.iter().all(|s| s & c != 0))
        .map(|c| c.count_ones() as usize)
        .min()
        .expect("the whole universe hits every nonempty subset")
}

/// `D_L(v)` counted directly from the edge list.
pub fn label_degrees(g: &LabeledGraph) -> Vec<usize> {
    (0..g.vertex_count())
        .map(|v| {
            let m = g.edges().iter().filter(|e| e.u == v || e.v == v).fold(0u64, |m, e| m | mask_of(&e.labels));
            m.count_ones() as usize
        })
        .collect()
}
