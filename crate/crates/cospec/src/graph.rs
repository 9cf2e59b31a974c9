//! Labeled simple undirected graphs and the named constructions the rest of
//! the crate studies.
//!
//! Adjacency is stored as one [`VertexSet`] row per vertex, so structural
//! queries are word operations. All constructors keep the two representation
//! invariants: the matrix is symmetric and loop-free.

use std::fmt;

use crate::vset::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, n: usize },
    LoopEdge { vertex: usize },
    TooManyVertices { n: usize },
    CycleTooShort { len: usize },
    EmptyPendantSide,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            GraphError::LoopEdge { vertex } => write!(f, "loop edge at vertex {vertex}"),
            GraphError::TooManyVertices { n } => {
                write!(f, "{n} vertices exceeds the limit of {MAX_VERTICES}")
            }
            GraphError::CycleTooShort { len } => write!(f, "cycle length {len} is below 3"),
            GraphError::EmptyPendantSide => write!(f, "construction parameter must be at least 1"),
        }
    }
}

impl std::error::Error for GraphError {}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::LoopEdge { vertex: u });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Non-decreasing is the wrong shape for eyeballing star-like graphs;
    /// the sequence is reported largest-first.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        ds.sort_unstable_by(|a, b| b.cmp(a));
        ds
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = VertexSet::singleton(start);
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next | self.adj[v];
                }
                frontier = next.minus(comp);
                comp = comp | frontier;
            }
            seen = seen | comp;
            comps.push(comp);
        }
        comps
    }

    /// Proper 2-coloring if one exists. Every vertex is assigned a side;
    /// BFS roots (and isolated vertices) go left.
    ///
    /// Coloring by BFS level parity: any edge joins levels differing by at
    /// most one, so an improperly colored edge always ends up inside one
    /// side and the final sweep rejects it.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut left = VertexSet::EMPTY;
        let mut right = VertexSet::EMPTY;
        let mut seen = VertexSet::EMPTY;
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            left.insert(start);
            seen.insert(start);
            let mut frontier = VertexSet::singleton(start);
            let mut frontier_left = true;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next | self.adj[v];
                }
                let fresh = next.minus(seen);
                seen = seen | fresh;
                if frontier_left {
                    right = right | fresh;
                } else {
                    left = left | fresh;
                }
                frontier = fresh;
                frontier_left = !frontier_left;
            }
        }
        for u in 0..self.n {
            let side = if left.contains(u) { left } else { right };
            if self.adj[u].intersects(side) {
                return None;
            }
        }
        Some(Bipartition { left, right })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// BFS eccentricity maximum; disconnected graphs have infinite diameter.
    pub fn diameter(&self) -> Diameter {
        if self.n <= 1 {
            return Diameter::Finite(0);
        }
        let all = VertexSet::full(self.n);
        let mut best = 0usize;
        for start in 0..self.n {
            let mut reached = VertexSet::singleton(start);
            let mut frontier = reached;
            let mut dist = 0usize;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next | self.adj[v];
                }
                frontier = next.minus(reached);
                reached = reached | frontier;
                if !frontier.is_empty() {
                    dist += 1;
                }
            }
            if reached != all {
                return Diameter::Infinite;
            }
            best = best.max(dist);
        }
        Diameter::Finite(best)
    }

    /// Induced subgraph on the complement of `drop`, relabeled by ascending
    /// surviving index.
    pub fn delete_vertices(&self, drop: VertexSet) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| !drop.contains(v)).collect();
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let mut g = Graph {
            n: keep.len(),
            adj: vec![VertexSet::EMPTY; keep.len()],
        };
        for (i, &v) in keep.iter().enumerate() {
            for w in self.adj[v].minus(drop).iter() {
                g.adj[i].insert(new_index[w]);
            }
        }
        g
    }

    /// Induced subgraph on `keep` (complement of `delete_vertices`).
    pub fn induced(&self, keep: VertexSet) -> Graph {
        self.delete_vertices(keep.complement_within(self.n))
    }

    /// Vertex-disjoint union; `other`'s labels are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut g = Graph::empty(n)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for v in 0..other.n {
            for w in other.adj[v].iter() {
                g.adj[self.n + v].insert(self.n + w);
            }
        }
        Ok(g)
    }

    /// Checks the representation invariants; used by tests after each
    /// constructor.
    pub fn check_invariants(&self) -> bool {
        let range = VertexSet::full(self.n);
        for v in 0..self.n {
            if !self.adj[v].is_subset_of(range) || self.adj[v].contains(v) {
                return false;
            }
            for w in self.adj[v].iter() {
                if !self.adj[w].contains(v) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// The two sides of a proper 2-coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

/// Builds a graph from an explicit edge list; duplicate edges collapse.
pub fn make_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for &(u, v) in edges {
        g.add_edge(u, v)?;
    }
    Ok(g)
}

/// Path on `n` vertices labeled `0-1-...-(n-1)`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v)?;
    }
    Ok(g)
}

/// Cycle on `n >= 3` vertices labeled around the cycle.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::CycleTooShort { len: n });
    }
    let mut g = path(n)?;
    g.add_edge(n - 1, 0)?;
    Ok(g)
}

/// Complete bipartite graph with partite sets `{0..m-1}` and `{m..m+k-1}`.
pub fn complete_bipartite(m: usize, k: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(m + k)?;
    for u in 0..m {
        for v in m..m + k {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Star with `k` leaves: center 0, leaves `1..=k`.
pub fn star(k: usize) -> Result<Graph, GraphError> {
    complete_bipartite(1, k)
}

/// Double star: centers 0 and 1 are adjacent, center 0 carries `a` leaves
/// (`2..2+a`) and center 1 carries `b` leaves (`2+a..2+a+b`).
pub fn double_star(a: usize, b: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(a + b + 2)?;
    g.add_edge(0, 1)?;
    for l in 0..a {
        g.add_edge(0, 2 + l)?;
    }
    for l in 0..b {
        g.add_edge(1, 2 + a + l)?;
    }
    Ok(g)
}

/// `K_{2,a}` with two pendant vertices attached to one of the degree-`a`
/// side vertices. Labels: 0, 1 are the order-two side, 2, 3 the pendants
/// (both on vertex 1), `4..4+a` the order-`a` side.
pub fn construction_a(a: usize) -> Result<Graph, GraphError> {
    if a == 0 {
        return Err(GraphError::EmptyPendantSide);
    }
    let mut g = Graph::empty(a + 4)?;
    for w in 4..4 + a {
        g.add_edge(0, w)?;
        g.add_edge(1, w)?;
    }
    g.add_edge(1, 2)?;
    g.add_edge(1, 3)?;
    Ok(g)
}

/// `K_{4,a}` plus one extra vertex adjacent to two of the order-four side
/// vertices. Labels: 0 is the extra vertex, `1..=4` the order-four side
/// (0 joins 3 and 4), `5..5+a` the order-`a` side.
pub fn construction_b(a: usize) -> Result<Graph, GraphError> {
    if a == 0 {
        return Err(GraphError::EmptyPendantSide);
    }
    let mut g = Graph::empty(a + 5)?;
    for u in 5..5 + a {
        for w in 1..=4 {
            g.add_edge(w, u)?;
        }
    }
    g.add_edge(0, 3)?;
    g.add_edge(0, 4)?;
    Ok(g)
}

/// The 6-vertex graph: a 4-cycle `0-1-2-3` with pendants on the adjacent
/// cycle vertices 2 and 3.
pub fn graph_r() -> Graph {
    make_graph(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 5), (3, 4)])
        .expect("fixed construction is valid")
}
