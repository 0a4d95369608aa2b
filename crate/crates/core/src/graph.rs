//! Undirected simple graphs on vertices `0..n`.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A finite simple undirected graph with adjacency stored as one bitset per vertex.
///
/// Adjacency is always symmetric and loop-free; every constructor checks this.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.adj[v].insert_range(..);
            g.adj[v].set(v, false);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v, true);
        }
        g
    }

    /// The cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Input(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let mut g = Graph::path(n);
        g.set_edge(0, n - 1, true);
        Ok(g)
    }

    /// Builds a graph from an edge list. Rejects loops and out-of-range endpoints;
    /// repeated edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric predicate evaluated on each pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.set_edge(u, v, true);
                }
            }
        }
        g
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert!(u != v);
        self.adj[u].set(v, present);
        self.adj[v].set(u, present);
    }

    pub(crate) fn toggle_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u].toggle(v);
        self.adj[v].toggle(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = self.clone();
        for v in 0..n {
            g.adj[v].toggle_range(..);
            g.adj[v].set(v, false);
        }
        g
    }

    /// The subgraph induced on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |a, b| self.has_edge(vertices[a], vertices[b]))
    }

    /// Vertices sorted by nondecreasing degree, ties broken by ascending index.
    pub fn degree_order(&self) -> Vec<usize> {
        let deg = self.degrees();
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by_key(|&v| (deg[v], v));
        order
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_stable(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Maximum over vertices of `|N_G(v) △ N_H(v)|`.
pub fn local_difference(g: &Graph, h: &Graph) -> Result<usize> {
    if g.n() != h.n() {
        return Err(Error::Input(format!(
            "vertex count mismatch: {} vs {}",
            g.n(),
            h.n()
        )));
    }
    Ok(g.adj
        .iter()
        .zip(&h.adj)
        .map(|(a, b)| a.symmetric_difference_count(b))
        .max()
        .unwrap_or(0))
}

/// Small named graphs used as forbidden patterns.
pub mod patterns {
    use super::Graph;

    pub fn c4() -> Graph {
        Graph::cycle(4).unwrap()
    }

    pub fn c5() -> Graph {
        Graph::cycle(5).unwrap()
    }

    pub fn p4() -> Graph {
        Graph::path(4)
    }

    pub fn two_k2() -> Graph {
        Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
    }
}
