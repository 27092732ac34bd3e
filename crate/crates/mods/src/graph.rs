//! Immutable undirected graphs and their orientations.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::set::VertexSet;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Endpoint order
    /// within an edge does not matter; loops and duplicates are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        let mut adj = vec![VertexSet::empty(n); n];
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n {
                return Err(Error::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { v: b, n });
            }
            if a == b {
                return Err(Error::LoopArc(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if adj[u].contains(v) {
                return Err(Error::DuplicateEdge(u, v));
            }
            adj[u].insert(v);
            adj[v].insert(u);
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    /// This ordering is the one orientation enumeration counts over.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && u != v && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(self.adj[v].len())
    }

    /// Closed neighborhood of a set in the undirected sense.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        assert_eq!(s.ambient(), self.n, "set ambient mismatch");
        let mut cov = s.clone();
        for v in s.iter() {
            cov.union_with(&self.adj[v]);
        }
        cov
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(self.n, 0);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for w in self.adj[v].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == self.n
    }

    /// Closed neighborhood mask per vertex.
    pub(crate) fn cover_masks(&self) -> Vec<VertexSet> {
        (0..self.n)
            .map(|v| {
                let mut m = self.adj[v].clone();
                m.insert(v);
                m
            })
            .collect()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// One direction chosen for every edge of a base graph.
///
/// `reversed[i]` refers to the i-th edge of `base.edges()`: `false` orients
/// `(u, v)` as `u -> v` (with `u < v`), `true` as `v -> u`.
#[derive(Clone, Debug)]
pub struct Orientation {
    base: Graph,
    reversed: Vec<bool>,
}

impl Orientation {
    pub fn new(base: Graph, reversed: Vec<bool>) -> Self {
        assert_eq!(base.edge_count(), reversed.len(), "one direction per edge");
        Orientation { base, reversed }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn reversed(&self) -> &[bool] {
        &self.reversed
    }

    /// Arcs of the oriented digraph, in base edge order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.base
            .edges()
            .iter()
            .zip(&self.reversed)
            .map(|(&(u, v), &r)| if r { (v, u) } else { (u, v) })
            .collect()
    }

    pub fn digraph(&self) -> Digraph {
        Digraph::new(self.base.order(), self.arcs())
            .expect("an orientation of a simple graph is a valid digraph")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_edges() {
        let g = Graph::new(4, [(2, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert!(g.has_edge(2, 0));
        assert!(!g.has_edge(0, 3));
        assert_eq!(g.degree(0).unwrap(), 2);
        assert!(matches!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(Graph::new(3, [(2, 2)]), Err(Error::LoopArc(2))));
    }

    #[test]
    fn connectivity() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(g.is_connected());
        let h = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!h.is_connected());
        assert!(Graph::new(1, []).unwrap().is_connected());
    }

    #[test]
    fn orientation_digraph() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let o = Orientation::new(g, vec![false, true]);
        let d = o.digraph();
        assert_eq!(d.arcs(), &[(0, 1), (2, 1)]);
        assert_eq!(d.arc_count(), 2);
    }
}
