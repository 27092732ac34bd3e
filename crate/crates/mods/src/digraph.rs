//! Immutable directed graphs without loops or multiple arcs; opposite arc
//! pairs are allowed. Vertices are the integers `0..n`.
//!
//! Structural edits are functional: they leave the receiver untouched and
//! return a fresh value, so solver code can hold references across edits.

use crate::error::{Error, Result};
use crate::set::VertexSet;

#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
}

impl Digraph {
    /// Builds a digraph on `n` vertices from an arc list. Rejects `n = 0`,
    /// out-of-range endpoints, loops, and duplicate arcs.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        let mut out = vec![VertexSet::empty(n); n];
        let mut inn = vec![VertexSet::empty(n); n];
        let mut list = Vec::new();
        for (u, v) in arcs {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::LoopArc(u));
            }
            if out[u].contains(v) {
                return Err(Error::DuplicateArc(u, v));
            }
            out[u].insert(v);
            inn[v].insert(u);
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(Digraph {
            n,
            arcs: list,
            out,
            inn,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Arcs in ascending lexicographic order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u].contains(v)
    }

    pub fn out_neighbors(&self, v: usize) -> &VertexSet {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &VertexSet {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.out[v].len())
    }

    pub fn in_degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.inn[v].len())
    }

    /// Maximum out-degree over all vertices.
    pub fn max_out_degree(&self) -> usize {
        (0..self.n).map(|v| self.out[v].len()).max().unwrap_or(0)
    }

    /// Closed out-neighborhood of a set: `S` together with every head of an
    /// arc whose tail lies in `S`.
    pub fn closed_out_neighborhood(&self, s: &VertexSet) -> VertexSet {
        assert_eq!(s.ambient(), self.n, "set ambient mismatch");
        let mut cov = s.clone();
        for v in s.iter() {
            cov.union_with(&self.out[v]);
        }
        cov
    }

    /// External private out-neighbors of `u` with respect to `s`: the
    /// vertices outside `s` whose only in-neighbor inside `s` is `u`.
    pub fn private_out_neighbors(&self, s: &VertexSet, u: usize) -> Result<VertexSet> {
        self.check_vertex(u)?;
        if !s.contains(u) {
            return Err(Error::NotInSet(u));
        }
        let mut pn = VertexSet::empty(self.n);
        for w in self.out[u].iter() {
            if !s.contains(w) && self.inn[w].intersection(s).len() == 1 {
                pn.insert(w);
            }
        }
        Ok(pn)
    }

    /// Subdigraph induced by `x`, relabeled to `0..|x|` in ascending order of
    /// the original labels. Also returns the map from new index to original
    /// label.
    pub fn induced_subdigraph(&self, x: &VertexSet) -> Result<(Digraph, Vec<usize>)> {
        assert_eq!(x.ambient(), self.n, "set ambient mismatch");
        if x.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let map = x.to_vec();
        let mut rev = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            rev[v] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(u, v)| x.contains(u) && x.contains(v))
            .map(|&(u, v)| (rev[u], rev[v]));
        let d = Digraph::new(map.len(), arcs.collect::<Vec<_>>())?;
        Ok((d, map))
    }

    pub fn remove_arc(&self, u: usize, v: usize) -> Result<Digraph> {
        if !self.has_arc(u, v) {
            return Err(Error::MissingArc(u, v));
        }
        let arcs = self.arcs.iter().copied().filter(|&a| a != (u, v));
        Digraph::new(self.n, arcs.collect::<Vec<_>>())
    }

    pub fn add_arc(&self, u: usize, v: usize) -> Result<Digraph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopArc(u));
        }
        if self.has_arc(u, v) {
            return Err(Error::DuplicateArc(u, v));
        }
        let mut arcs = self.arcs.clone();
        arcs.push((u, v));
        Digraph::new(self.n, arcs)
    }

    /// Replaces the arc `(u, v)` by `(v, u)`. The opposite arc must not
    /// already be present.
    pub fn reverse_arc(&self, u: usize, v: usize) -> Result<Digraph> {
        if !self.has_arc(u, v) {
            return Err(Error::MissingArc(u, v));
        }
        if self.has_arc(v, u) {
            return Err(Error::OppositeArcPresent(u, v));
        }
        let arcs = self
            .arcs
            .iter()
            .copied()
            .map(|a| if a == (u, v) { (v, u) } else { a });
        Digraph::new(self.n, arcs.collect::<Vec<_>>())
    }

    /// Removes a vertex, relabeling larger labels downward by one. Returns
    /// the new digraph and the map from new index to original label.
    pub fn remove_vertex(&self, v: usize) -> Result<(Digraph, Vec<usize>)> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(Error::LastVertex);
        }
        let map: Vec<usize> = (0..self.n).filter(|&x| x != v).collect();
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let arcs = self
            .arcs
            .iter()
            .copied()
            .filter(|&(a, b)| a != v && b != v)
            .map(|(a, b)| (shift(a), shift(b)));
        let d = Digraph::new(self.n - 1, arcs.collect::<Vec<_>>())?;
        Ok((d, map))
    }

    /// Closed out-neighborhood mask per vertex; the cover rows used by every
    /// solver in this crate.
    pub(crate) fn cover_masks(&self) -> Vec<VertexSet> {
        (0..self.n)
            .map(|v| {
                let mut m = self.out[v].clone();
                m.insert(v);
                m
            })
            .collect()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n })
        }
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs)
    }
}
