//! Undirected simple graphs and the exact small-graph algorithms the
//! verifier relies on.
//!
//! Adjacency is stored as one bit row per vertex. The NP-hard routines
//! (cliques, colorings, subdivisions, complete-bipartite subgraphs) work on
//! single-word `u64` rows and therefore refuse graphs with more than
//! [`MAX_EXACT_VERTICES`] vertices.

mod clique;
mod coloring;
pub mod export;
mod subdivision;
mod traversal;

use std::fmt;

use thiserror::Error;

pub use clique::{clique_number, contains_complete, independence_number, Clique};
pub use coloring::{chromatic_number, is_proper_coloring, Coloring};
pub use subdivision::{
    contains_complete_bipartite, contains_subdivision, BipartiteWitness, Subdivision,
    SubdivisionTarget,
};
pub use traversal::{
    connected_components, cyclomatic_number, girth, is_bipartite, is_connected, is_eulerian,
    Bipartiteness, Girth,
};

/// Vertex cap for the exact exponential-time algorithms.
pub const MAX_EXACT_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {n} vertices; exact search is limited to {MAX_EXACT_VERTICES}")]
    TooLarge { n: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("expected {expected} vertex tags, found {found}")]
    TagCount { expected: usize, found: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("witness failed re-validation: {0}")]
    InvalidWitness(String),
}

pub type Result<T> = std::result::Result<T, GraphError>;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// An undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    tags: Option<Vec<String>>,
}

impl SimpleGraph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self { n, words, rows: vec![0; n * words], tags: None }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set(u, v, true);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::new(n);
        if n >= 3 {
            for v in 0..n {
                g.set(v, (v + 1) % n, true);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n);
        for v in 1..n {
            g.set(v - 1, v, true);
        }
        g
    }

    /// Complete multipartite graph; parts are consecutive index blocks.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let n = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(p, size));
        }
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    g.set(u, v, true);
                }
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::complete_multipartite(&[a, b])
    }

    pub fn with_tags(mut self, tags: Vec<String>) -> Result<Self> {
        if tags.len() != self.n {
            return Err(GraphError::TagCount { expected: self.n, found: tags.len() });
        }
        self.tags = Some(tags);
        Ok(self)
    }

    pub fn tags(&self) -> Option<&[String]> {
        self.tags.as_deref()
    }

    /// Display name of `v`: its tag, or the index.
    pub fn tag(&self, v: usize) -> String {
        match &self.tags {
            Some(t) => t[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        let twice: u32 = self.rows.iter().map(|w| w.count_ones()).sum();
        twice as usize / 2
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    fn set(&mut self, u: usize, v: usize, on: bool) {
        let (wu, bu) = (u * self.words + v / 64, v % 64);
        let (wv, bv) = (v * self.words + u / 64, u % 64);
        if on {
            self.rows[wu] |= bit(bu);
            self.rows[wv] |= bit(bv);
        } else {
            self.rows[wu] &= !bit(bu);
            self.rows[wv] &= !bit(bv);
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.set(u, v, true);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        self.set(u, v, false);
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] & bit(v % 64) != 0
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| bits(word).map(move |b| w * 64 + b))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    /// A vertex adjacent to every other vertex, if any.
    pub fn dominating_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.degree(v) + 1 == self.n)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Same vertex set; distinct vertices adjacent iff they were not.
    pub fn complement(&self) -> Self {
        let mut g = Self::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.set(u, v, true);
                }
            }
        }
        g.tags = self.tags.clone();
        g
    }

    /// Induced subgraph on `vs`, relabeled `0..vs.len()` in the given order.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<Self> {
        for &v in vs {
            self.check(v)?;
        }
        let mut g = Self::new(vs.len());
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set(i, j, true);
                }
            }
        }
        g.tags = self.tags.as_ref().map(|t| vs.iter().map(|&v| t[v].clone()).collect());
        Ok(g)
    }

    /// Single-word adjacency rows, for the exact search routines.
    pub fn masks(&self) -> Result<Vec<u64>> {
        if self.n > MAX_EXACT_VERTICES {
            return Err(GraphError::TooLarge { n: self.n });
        }
        Ok((0..self.n).map(|v| self.rows[v * self.words]).collect())
    }

    /// Checks that `h` is isomorphic to `self` by trying all bijections.
    /// Intended for tiny graphs only (n <= 9).
    pub fn is_isomorphic_brute_force(&self, h: &SimpleGraph) -> bool {
        if self.n != h.n || self.edge_count() != h.edge_count() {
            return false;
        }
        let mut a = self.degrees();
        let mut b = h.degrees();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
        let mut map = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        self.extend_iso(h, 0, &mut map, &mut used)
    }

    fn extend_iso(&self, h: &SimpleGraph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if v == self.n {
            return true;
        }
        for w in 0..self.n {
            if used[w] || self.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).all(|u| self.has_edge(u, v) == h.has_edge(map[u], w)) {
                map[v] = w;
                used[w] = true;
                if self.extend_iso(h, v + 1, map, used) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut g = SimpleGraph::new(n);
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            g.add_edge(u, v).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let g = SimpleGraph::complete(4).complement();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = SimpleGraph::cycle(5);
        assert!(c5.complement().is_isomorphic_brute_force(&c5));
        assert!(!SimpleGraph::path(5).complement().is_isomorphic_brute_force(&c5));
    }

    #[test]
    fn induced_subgraph_edge_cases() {
        let g = SimpleGraph::cycle(6).with_tags((0..6).map(|i| format!("v{i}")).collect()).unwrap();
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(g.induced_subgraph(&all).unwrap(), g);
        let none = g.induced_subgraph(&[]).unwrap();
        assert_eq!((none.vertex_count(), none.edge_count()), (0, 0));
        let sub = g.induced_subgraph(&[4, 5, 0]).unwrap();
        assert_eq!(sub.edge_count(), 2);
        assert_eq!(sub.tag(0), "v4");
        assert_eq!(g.induced_subgraph(&[6]), Err(GraphError::VertexOutOfRange { v: 6, n: 6 }));
    }

    #[test]
    fn edge_errors() {
        let mut g = SimpleGraph::new(3);
        assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        assert!(g.add_edge(0, 3).is_err());
        assert!(SimpleGraph::new(65).masks().is_err());
        assert!(SimpleGraph::new(2).with_tags(vec!["a".into()]).is_err());
    }

    #[test]
    fn wide_graphs_use_multiple_words() {
        let mut g = SimpleGraph::new(130);
        g.add_edge(3, 129).unwrap();
        g.add_edge(64, 65).unwrap();
        assert!(g.has_edge(129, 3));
        assert_eq!(g.neighbors(129).collect::<Vec<_>>(), vec![3]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(3, 129), (64, 65)]);
        assert_eq!(g.complement().edge_count(), 130 * 129 / 2 - 2);
    }

    proptest! {
        #[test]
        fn complement_is_an_involution(g in arb_graph(12)) {
            let c = g.complement();
            prop_assert_eq!(c.complement(), g.clone());
            let n = g.vertex_count();
            prop_assert_eq!(g.edge_count() + c.edge_count(), n * n.saturating_sub(1) / 2);
            for u in 0..n {
                prop_assert!(!g.has_edge(u, u));
                for v in 0..n {
                    prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
                }
            }
        }
    }
}
