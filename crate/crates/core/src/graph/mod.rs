//! Small labelled simple graphs stored as per-vertex neighbour bitsets.

mod canon;
mod enumerate;
mod named;
mod symmetry;

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub use canon::{canonical_form, canonical_labeling, is_isomorphic, CanonicalForm};
pub use enumerate::{enumerate_all, enumerate_connected, enumerate_trees};
pub use named::{build_named, Family};
pub use symmetry::{automorphisms, AUTOMORPHISM_LIMIT};

/// Largest vertex count handled anywhere in the crate.
pub const MAX_VERTICES: usize = 12;

/// Simple undirected graph on vertices `0..n`.
///
/// `adj[u]` has bit `v` set iff `uv` is an edge. The neighbour sets are kept
/// symmetric and loop free by every constructor.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: u8,
    adj: [u16; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::Order(n));
        }
        Ok(Graph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Self::empty(n)?.complement())
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from neighbour bitsets, validating symmetry and loops.
    pub fn from_adjacency(n: usize, adj: &[u16]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        if adj.len() != n {
            return Err(Error::Dimension {
                expected: n,
                got: adj.len(),
            });
        }
        let mask = g.vertex_mask();
        for (u, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::Parameter("neighbour outside vertex range"));
            }
            if row >> u & 1 == 1 {
                return Err(Error::Loop(u));
            }
            g.adj[u] = row;
        }
        for u in 0..n {
            for v in 0..n {
                if g.has_edge(u, v) != g.has_edge(v, u) {
                    return Err(Error::Parameter("adjacency is not symmetric"));
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn link(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub(crate) fn vertex_mask(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbour set of `u` as a bitset.
    #[inline]
    pub fn neighbors(&self, u: usize) -> u16 {
        self.adj[u]
    }

    pub fn adjacency(&self) -> &[u16] {
        &self.adj[..self.order()]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order();
        (0..n).flat_map(move |u| ((u + 1)..n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mask = self.vertex_mask();
        let mut out = *self;
        for u in 0..self.order() {
            out.adj[u] = !self.adj[u] & mask & !(1 << u);
        }
        out
    }

    /// Disjoint union with `other`'s vertices shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order();
        let mut out = Graph::empty(n + other.order())?;
        out.adj[..n].copy_from_slice(self.adjacency());
        for (u, &row) in other.adjacency().iter().enumerate() {
            out.adj[n + u] = row << n;
        }
        Ok(out)
    }

    /// Disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut out = self.disjoint_union(other)?;
        let n = self.order();
        for u in 0..n {
            for v in 0..other.order() {
                out.link(u, n + v);
            }
        }
        Ok(out)
    }

    /// Cartesian product; vertex `(u, a)` gets index `u * other.order() + a`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        let m = other.order();
        let mut out = Graph::empty(self.order() * m)?;
        for u in 0..self.order() {
            for a in 0..m {
                for b in (a + 1)..m {
                    if other.has_edge(a, b) {
                        out.link(u * m + a, u * m + b);
                    }
                }
            }
        }
        for (u, v) in self.edges() {
            for a in 0..m {
                out.link(u * m + a, v * m + a);
            }
        }
        Ok(out)
    }

    /// Graph with vertex `v` relabelled as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order());
        let mut out = *self;
        out.adj = [0; MAX_VERTICES];
        for (u, v) in self.edges() {
            out.link(perm[u], perm[v]);
        }
        out
    }

    /// `N(a) \ {b} == N(b) \ {a}`.
    pub fn twins(&self, a: usize, b: usize) -> Result<bool> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::SameVertex(a));
        }
        let strip = !((1u16 << a) | (1u16 << b));
        Ok(self.adj[a] & strip == self.adj[b] & strip)
    }

    /// Vertices reachable from `start`, as a bitset.
    pub fn component_of(&self, start: usize) -> u16 {
        let mut seen = 1u16 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u16;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertex_mask()
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.order() && self.is_connected()
    }

    /// Two-colouring by BFS layering, one component at a time. `side[v]` is
    /// `false` for the part containing the smallest vertex of each component.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut side = alloc::vec![false; n];
        let mut seen = 0u16;
        for root in 0..n {
            if seen >> root & 1 == 1 {
                continue;
            }
            seen |= 1 << root;
            let mut layer = 1u16 << root;
            let mut parity = false;
            while layer != 0 {
                let mut next = 0u16;
                for u in bits(layer) {
                    side[u] = parity;
                    next |= self.adj[u];
                }
                if next & layer != 0 {
                    return None;
                }
                next &= !seen;
                seen |= next;
                layer = next;
                parity = !parity;
            }
        }
        // Edges inside one layer are caught above; edges between a layer and an
        // older one of the same parity cannot exist in BFS order.
        Some(side)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}{v}")?;
        }
        f.write_str("])")
    }
}

/// Indices of set bits, ascending.
pub fn bits(mut set: u16) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let i = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(i)
        }
    })
}
