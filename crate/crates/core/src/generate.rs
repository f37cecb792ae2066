//! Seeded random instance generation.
//!
//! A random spanning tree (each vertex of a shuffled order attaches to a
//! uniformly chosen earlier vertex) is padded with uniformly drawn extra
//! edges. Every edge gets one uniform label; after that, each further label is
//! added with the overlap probability, stopping at the first miss.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::model::{LabelId, LabeledGraph};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("need at least one vertex")]
    NoVertices,
    #[error("{m} edges cannot connect {n} vertices")]
    TooFewEdges { n: usize, m: usize },
    #[error("{m} edges exceed the {max} vertex pairs of a simple graph on {n} vertices")]
    TooManyEdges { n: usize, m: usize, max: usize },
    #[error("edges need at least one label")]
    NoLabels,
    #[error("overlap probability must lie in [0, 1), got {0}")]
    BadProbability(f64),
    #[error("weight range {0}..={1} must be positive and ordered")]
    BadWeights(u64, u64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorConfig {
    pub n: usize,
    pub m: usize,
    pub labels: usize,
    /// Chance of each additional label on an edge.
    pub overlap: f64,
    /// Inclusive numerator range; `(1, 1)` gives the unweighted problem.
    pub weights: (u64, u64),
    pub seed: u64,
    /// Set terminals `(0, n - 1)` when `n >= 2`.
    pub terminals: bool,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        Self {
            n: 6,
            m: 8,
            labels: 5,
            overlap: 0.0,
            weights: (1, 1),
            seed: 0,
            terminals: true,
        }
    }
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<(), GenerateError> {
        let GeneratorConfig { n, m, .. } = *self;
        if n == 0 {
            return Err(GenerateError::NoVertices);
        }
        if m + 1 < n {
            return Err(GenerateError::TooFewEdges { n, m });
        }
        let max = n * (n - 1) / 2;
        if m > max {
            return Err(GenerateError::TooManyEdges { n, m, max });
        }
        if self.labels == 0 && m > 0 {
            return Err(GenerateError::NoLabels);
        }
        if !(0.0..1.0).contains(&self.overlap) {
            return Err(GenerateError::BadProbability(self.overlap));
        }
        let (lo, hi) = self.weights;
        if lo == 0 || lo > hi {
            return Err(GenerateError::BadWeights(lo, hi));
        }
        Ok(())
    }
}

pub fn generate(cfg: &GeneratorConfig) -> Result<LabeledGraph, GenerateError> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = cfg.n;

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut present = vec![false; n * n];
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(cfg.m);
    for i in 1..n {
        let u = order[rng.gen_range(0..i)];
        let v = order[i];
        present[u * n + v] = true;
        present[v * n + u] = true;
        pairs.push((u, v));
    }
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !present[u * n + v])
        .collect();
    let extra = cfg.m - pairs.len();
    let (chosen, _) = missing.partial_shuffle(&mut rng, extra);
    pairs.extend_from_slice(chosen);

    let mut b = LabeledGraph::builder(n).label_count(cfg.labels);
    for (u, v) in pairs {
        let mut labels: Vec<LabelId> = vec![rng.gen_range(0..cfg.labels)];
        while labels.len() < cfg.labels && rng.gen_bool(cfg.overlap) {
            let free: Vec<LabelId> = (0..cfg.labels).filter(|l| !labels.contains(l)).collect();
            labels.push(*free.choose(&mut rng).expect("fewer labels than the table"));
        }
        b.push_edge(u, v, labels);
    }
    let (lo, hi) = cfg.weights;
    if (lo, hi) != (1, 1) {
        for l in 0..cfg.labels {
            b.set_weight(l, rng.gen_range(lo..=hi));
        }
    }
    if cfg.terminals && n >= 2 {
        b.set_terminals(Some((0, n - 1)));
    }
    Ok(b.build().expect("generator output is a valid connected graph"))
}
