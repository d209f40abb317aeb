//! Witness graphs for positive verdicts.
//!
//! A simple-graph witness is built by finding a graphic degree vector
//! inside the box and realizing it with Havel-Hakimi. The bipartite check
//! uses a lower-bounded flow network.

mod flow;
mod havel_hakimi;
mod search;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

pub use flow::interval_bipartite_realize;
pub use havel_hakimi::{havel_hakimi_realize, realize_degrees};
pub use search::{find_graphic_in_box, find_graphic_in_box_with_limit, DEFAULT_SEARCH_LIMIT};

use crate::criteria::CriterionVerdict;
use crate::error::{Error, Result};
use crate::sequences::{tilde_by_crossing, IntervalSequencePair, NormalizedInstance};

/// Undirected simple graph on vertices `0..n`. Edges are stored with the
/// smaller endpoint first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// Builds from an edge list, rejecting loops, repeats, and endpoints
    /// outside `0..n`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Option<Self> {
        let mut g = Self::new(n);
        for (u, v) in edges {
            if !g.add_edge(u, v) {
                return None;
            }
        }
        Some(g)
    }

    /// Returns false (and changes nothing) for a loop, a repeated edge, or
    /// an endpoint out of range.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n || v >= self.n {
            return false;
        }
        self.edges.insert((u.min(v), u.max(v)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Renames vertex `k` to `map[k]`.
    pub fn relabel(&self, map: &[usize]) -> Self {
        let mut g = Self::new(self.n);
        for &(u, v) in &self.edges {
            g.add_edge(map[u], map[v]);
        }
        g
    }

    /// One `u v` line per edge, 1-based.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", u + 1, v + 1);
        }
        out
    }

    /// Undirected DOT with vertices labeled `1..=n`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 1..=self.n {
            let _ = writeln!(out, "  {v};");
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {} -- {};", u + 1, v + 1);
        }
        out.push_str("}\n");
        out
    }
}

/// Bipartite graph with parts `0..left_n` and `0..right_n`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BipartiteGraph {
    left_n: usize,
    right_n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(left_n: usize, right_n: usize) -> Self {
        Self {
            left_n,
            right_n,
            edges: BTreeSet::new(),
        }
    }

    pub fn add_edge(&mut self, left: usize, right: usize) -> bool {
        left < self.left_n && right < self.right_n && self.edges.insert((left, right))
    }

    pub fn left_n(&self) -> usize {
        self.left_n
    }

    pub fn right_n(&self) -> usize {
        self.right_n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn left_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.left_n];
        for &(x, _) in &self.edges {
            deg[x] += 1;
        }
        deg
    }

    pub fn right_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.right_n];
        for &(_, y) in &self.edges {
            deg[y] += 1;
        }
        deg
    }
}

/// Realizes a normalized instance and maps the witness back to the
/// original vertex labels, so it satisfies the bounds as given.
pub fn realize_pair(instance: &NormalizedInstance) -> Result<Option<SimpleGraph>> {
    let pair = &instance.pair;
    pair.require_good_order()?;
    let Some(degrees) = find_graphic_in_box(pair)? else {
        return Ok(None);
    };
    let graph = realize_degrees(&degrees).expect("box search only returns graphic vectors");
    Ok(Some(graph.relabel(&instance.perm)))
}

/// True iff `g` is simple and `a_i <= deg(i) <= b_i` for every vertex.
pub fn verify_witness(g: &SimpleGraph, a: &[usize], b: &[usize]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            a: a.len(),
            b: b.len(),
        });
    }
    if g.n() != a.len() {
        return Err(Error::LengthMismatch {
            a: a.len(),
            b: g.n(),
        });
    }
    // The edge set can't hold loops or repeats, but check anyway since the
    // graph may have come from outside.
    let simple = g.edges().all(|(u, v)| u < v && v < g.n());
    let deg = g.degrees();
    Ok(simple && (0..g.n()).all(|i| a[i] <= deg[i] && deg[i] <= b[i]))
}

/// The interval list `[tilde a_i, tilde b_i]`, each tilde taken with its
/// own crossing index.
pub fn ryser_intervals(pair: &IntervalSequencePair) -> Vec<(usize, usize)> {
    let lo = tilde_by_crossing(pair.a());
    let hi = tilde_by_crossing(pair.b());
    lo.iter().copied().zip(hi.iter().copied()).collect()
}

/// A bipartite graph realizing `(S; S)`, if any.
pub fn ryser_interval_witness(pair: &IntervalSequencePair) -> Result<Option<BipartiteGraph>> {
    pair.require_good_order()?;
    let s = ryser_intervals(pair);
    interval_bipartite_realize(&s, &s)
}

/// Holds iff `(S; S)` is interval bipartite realizable. Necessary only.
pub fn check_ryser_interval(pair: &IntervalSequencePair) -> Result<CriterionVerdict> {
    Ok(match ryser_interval_witness(pair)? {
        Some(_) => CriterionVerdict::HOLDS,
        None => CriterionVerdict::FAILS,
    })
}
