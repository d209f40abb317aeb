use std::collections::VecDeque;

use crate::error::{Error, Result};

use super::BipartiteGraph;

struct Arc {
    to: usize,
    cap: i64,
}

/// Dinic max-flow over a residual arc list; arc `e ^ 1` is the reverse of `e`.
struct Network {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
    level: Vec<i32>,
    next: Vec<usize>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Self {
            arcs: Vec::new(),
            adj: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            next: vec![0; nodes],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap });
        self.adj[from].push(id);
        self.arcs.push(Arc { to: from, cap: 0 });
        self.adj[to].push(id + 1);
        id
    }

    /// Flow currently pushed along arc `id`.
    fn flow(&self, id: usize) -> i64 {
        self.arcs[id ^ 1].cap
    }

    fn bfs(&mut self, source: usize, sink: usize) -> bool {
        self.level.fill(-1);
        self.level[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let Arc { to, cap } = self.arcs[e];
                if cap > 0 && self.level[to] < 0 {
                    self.level[to] = self.level[u] + 1;
                    queue.push_back(to);
                }
            }
        }
        self.level[sink] >= 0
    }

    fn dfs(&mut self, u: usize, sink: usize, pushed: i64) -> i64 {
        if u == sink {
            return pushed;
        }
        while self.next[u] < self.adj[u].len() {
            let e = self.adj[u][self.next[u]];
            let Arc { to, cap } = self.arcs[e];
            if cap > 0 && self.level[to] == self.level[u] + 1 {
                let got = self.dfs(to, sink, pushed.min(cap));
                if got > 0 {
                    self.arcs[e].cap -= got;
                    self.arcs[e ^ 1].cap += got;
                    return got;
                }
            }
            self.next[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, source: usize, sink: usize) -> i64 {
        let mut total = 0;
        while self.bfs(source, sink) {
            self.next.fill(0);
            loop {
                let got = self.dfs(source, sink, i64::MAX);
                if got == 0 {
                    break;
                }
                total += got;
            }
        }
        total
    }
}

/// A bipartite graph whose left vertex `i` has degree in `left[i]` and right
/// vertex `j` in `right[j]` (inclusive intervals), or `None` if none exists.
///
/// Network: source to each left vertex and each right vertex to sink with
/// the interval as `[lower, upper]`, unit arcs left to right, and an
/// unbounded sink-to-source return arc. Lower bounds are removed with the
/// usual excess/deficit super source and sink; the instance is feasible iff
/// the auxiliary max-flow saturates every excess arc.
pub fn interval_bipartite_realize(
    left: &[(usize, usize)],
    right: &[(usize, usize)],
) -> Result<Option<BipartiteGraph>> {
    for (bounds, part) in [(left, right.len()), (right, left.len())] {
        for &(lo, hi) in bounds {
            if hi > part {
                return Err(Error::BoundExceedsPartSize { bound: hi, part });
            }
            if lo > hi {
                return Ok(None);
            }
        }
    }
    let (l, r) = (left.len(), right.len());
    let source = l + r;
    let sink = source + 1;
    let super_source = sink + 1;
    let super_sink = super_source + 1;
    let mut net = Network::new(super_sink + 1);
    let mut excess = vec![0i64; super_sink + 1];

    let mut bounded = |net: &mut Network, from: usize, to: usize, lo: usize, hi: usize| {
        net.add_arc(from, to, (hi - lo) as i64);
        excess[to] += lo as i64;
        excess[from] -= lo as i64;
    };
    for (i, &(lo, hi)) in left.iter().enumerate() {
        bounded(&mut net, source, i, lo, hi);
    }
    for (j, &(lo, hi)) in right.iter().enumerate() {
        bounded(&mut net, l + j, sink, lo, hi);
    }
    let mut grid = Vec::with_capacity(l * r);
    for i in 0..l {
        for j in 0..r {
            grid.push((i, j, net.add_arc(i, l + j, 1)));
        }
    }
    net.add_arc(sink, source, i64::MAX / 4);

    let mut required = 0;
    for (v, &e) in excess.iter().enumerate() {
        if e > 0 {
            net.add_arc(super_source, v, e);
            required += e;
        } else if e < 0 {
            net.add_arc(v, super_sink, -e);
        }
    }
    if net.max_flow(super_source, super_sink) < required {
        return Ok(None);
    }
    let mut g = BipartiteGraph::new(l, r);
    for (i, j, e) in grid {
        if net.flow(e) > 0 {
            g.add_edge(i, j);
        }
    }
    Ok(Some(g))
}
