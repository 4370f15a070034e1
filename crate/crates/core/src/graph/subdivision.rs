use std::fmt;

use serde::Serialize;

use super::{bit, bits, GraphError, Result, SimpleGraph};

/// The four Kuratowski-type obstructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SubdivisionTarget {
    K4,
    K23,
    K5,
    K33,
}

impl SubdivisionTarget {
    /// Branch-vertex count.
    pub fn order(self) -> usize {
        match self {
            Self::K4 => 4,
            Self::K23 => 5,
            Self::K5 => 5,
            Self::K33 => 6,
        }
    }

    /// Edges between branch positions. Bipartite targets put the left part
    /// first.
    pub fn edges(self) -> Vec<(usize, usize)> {
        match self {
            Self::K4 | Self::K5 => {
                let n = self.order();
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
            }
            Self::K23 => (0..2).flat_map(|i| (2..5).map(move |j| (i, j))).collect(),
            Self::K33 => (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect(),
        }
    }

    fn parts(self) -> Option<(usize, usize)> {
        match self {
            Self::K23 => Some((2, 3)),
            Self::K33 => Some((3, 3)),
            _ => None,
        }
    }
}

impl fmt::Display for SubdivisionTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::K4 => "K4",
            Self::K23 => "K2,3",
            Self::K5 => "K5",
            Self::K33 => "K3,3",
        })
    }
}

/// Branch vertices plus one path per target edge (in `target.edges()` order).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subdivision {
    pub target: SubdivisionTarget,
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl Subdivision {
    /// Checks endpoints, adjacency along every path and internal
    /// disjointness.
    pub fn validate(&self, g: &SimpleGraph) -> bool {
        let n = g.vertex_count();
        let edges = self.target.edges();
        if self.branch.len() != self.target.order() || self.paths.len() != edges.len() {
            return false;
        }
        let mut used = vec![false; n];
        for &b in &self.branch {
            if b >= n || std::mem::replace(&mut used[b], true) {
                return false;
            }
        }
        for (path, &(i, j)) in self.paths.iter().zip(&edges) {
            if path.len() < 2 || path[0] != self.branch[i] || path[path.len() - 1] != self.branch[j] {
                return false;
            }
            if path.windows(2).any(|w| w[1] >= n || !g.has_edge(w[0], w[1])) {
                return false;
            }
            for &v in &path[1..path.len() - 1] {
                if std::mem::replace(&mut used[v], true) {
                    return false;
                }
            }
        }
        true
    }

    /// Vertices the subdivision touches.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.paths.iter().flatten().copied().collect();
        vs.extend(&self.branch);
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

struct Packer<'a> {
    adj: &'a [u64],
    pairs: Vec<(usize, usize)>,
    paths: Vec<Vec<usize>>,
}

impl Packer<'_> {
    fn reachable(&self, s: usize, t: usize, free: u64) -> bool {
        let mut seen = bit(s);
        let mut frontier = bit(s);
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            if next & bit(t) != 0 {
                return true;
            }
            frontier = next & free & !seen;
            seen |= frontier;
        }
        false
    }

    fn pack(&mut self, k: usize, free: u64) -> bool {
        if k == self.pairs.len() {
            return true;
        }
        let pending = &self.pairs[k..];
        if !pending.iter().all(|&(s, t)| self.reachable(s, t, free)) {
            return false;
        }
        let (s, t) = self.pairs[k];
        let mut path = vec![s];
        self.route(k, s, t, free, &mut path)
    }

    fn route(&mut self, k: usize, v: usize, t: usize, free: u64, path: &mut Vec<usize>) -> bool {
        if self.adj[v] & bit(t) != 0 {
            path.push(t);
            self.paths[k] = path.clone();
            path.pop();
            if self.pack(k + 1, free) {
                return true;
            }
        }
        for w in bits(self.adj[v] & free) {
            // Keep the remaining target reachable before descending.
            if !self.reachable(w, t, free & !bit(w)) {
                continue;
            }
            path.push(w);
            if self.route(k, w, t, free & !bit(w), path) {
                return true;
            }
            path.pop();
        }
        false
    }
}

/// Tries to route all target edges between the given branch vertices.
fn pack_paths(adj: &[u64], target: SubdivisionTarget, branch: &[usize]) -> Option<Subdivision> {
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { bit(n) - 1 };
    let branch_mask = branch.iter().fold(0, |m, &v| m | bit(v));
    let edges = target.edges();
    let mut paths = vec![Vec::new(); edges.len()];
    let mut indirect = Vec::new();
    let mut pairs = Vec::new();
    for (k, &(i, j)) in edges.iter().enumerate() {
        let (s, t) = (branch[i], branch[j]);
        // A direct edge costs no internal vertices, so taking it never hurts.
        if adj[s] & bit(t) != 0 {
            paths[k] = vec![s, t];
        } else {
            indirect.push(k);
            pairs.push((s, t));
        }
    }
    let mut packer = Packer { adj, pairs, paths: vec![Vec::new(); indirect.len()] };
    if !packer.pack(0, all & !branch_mask) {
        return None;
    }
    for (slot, path) in indirect.into_iter().zip(packer.paths) {
        paths[slot] = path;
    }
    Some(Subdivision { target, branch: branch.to_vec(), paths })
}

/// Calls `f` on every `k`-subset of `pool` (increasing order) until it
/// returns `Some`.
fn combinations<T>(pool: &[usize], k: usize, f: &mut impl FnMut(&[usize]) -> Option<T>) -> Option<T> {
    fn rec<T>(
        pool: &[usize],
        k: usize,
        start: usize,
        acc: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> Option<T>,
    ) -> Option<T> {
        if acc.len() == k {
            return f(acc);
        }
        let need = k - acc.len();
        for i in start..pool.len() {
            if pool.len() - i < need {
                break;
            }
            acc.push(pool[i]);
            let r = rec(pool, k, i + 1, acc, f);
            acc.pop();
            if r.is_some() {
                return r;
            }
        }
        None
    }
    rec(pool, k, 0, &mut Vec::with_capacity(k), f)
}

/// Searches for a subdivision of `target` in `g`, exhaustively.
///
/// `Ok(None)` means no subdivision exists.
pub fn contains_subdivision(g: &SimpleGraph, target: SubdivisionTarget) -> Result<Option<Subdivision>> {
    let adj = g.masks()?;
    let deg: Vec<usize> = adj.iter().map(|r| r.count_ones() as usize).collect();
    let found = match target.parts() {
        None => {
            let k = target.order();
            let pool: Vec<usize> = (0..adj.len()).filter(|&v| deg[v] >= k - 1).collect();
            combinations(&pool, k, &mut |branch| pack_paths(&adj, target, branch))
        }
        Some((a, b)) => {
            let left_pool: Vec<usize> = (0..adj.len()).filter(|&v| deg[v] >= b).collect();
            let right_pool: Vec<usize> = (0..adj.len()).filter(|&v| deg[v] >= a).collect();
            combinations(&left_pool, a, &mut |left| {
                let rest: Vec<usize> = right_pool.iter().copied().filter(|v| !left.contains(v)).collect();
                combinations(&rest, b, &mut |right| {
                    // Equal parts: count each unordered pair once.
                    if a == b && right[0] < left[0] {
                        return None;
                    }
                    let branch: Vec<usize> = left.iter().chain(right).copied().collect();
                    pack_paths(&adj, target, &branch)
                })
            })
        }
    };
    if let Some(s) = &found {
        if !s.validate(g) {
            return Err(GraphError::InvalidWitness(format!("{target} subdivision {:?}", s.branch)));
        }
    }
    Ok(found)
}

/// Two disjoint vertex sets with every cross pair adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteWitness {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl BipartiteWitness {
    pub fn validate(&self, g: &SimpleGraph) -> bool {
        let n = g.vertex_count();
        let mut all: Vec<usize> = self.left.iter().chain(&self.right).copied().collect();
        all.sort_unstable();
        let distinct = all.windows(2).all(|w| w[0] != w[1]);
        distinct
            && all.iter().all(|&v| v < n)
            && self.left.iter().all(|&u| self.right.iter().all(|&v| g.has_edge(u, v)))
    }
}

fn small_side(adj: &[u64], pool: &[usize], a: usize, b: usize, start: usize, chosen: &mut Vec<usize>, common: u64) -> Option<u64> {
    if chosen.len() == a {
        return Some(common);
    }
    for i in start..pool.len() {
        if pool.len() - i < a - chosen.len() {
            break;
        }
        let v = pool[i];
        let next = common & adj[v];
        if (next.count_ones() as usize) < b {
            continue;
        }
        chosen.push(v);
        if let Some(c) = small_side(adj, pool, a, b, i + 1, chosen, next) {
            return Some(c);
        }
        chosen.pop();
    }
    None
}

/// Finds a `K_{a,b}` subgraph (not necessarily induced), left part of size `a`.
pub fn contains_complete_bipartite(g: &SimpleGraph, a: usize, b: usize) -> Result<Option<BipartiteWitness>> {
    let adj = g.masks()?;
    let n = adj.len();
    if a + b > n {
        return Ok(None);
    }
    let (s, l) = (a.min(b), a.max(b));
    let (small, large) = if s == 0 {
        (vec![], (0..l).collect())
    } else {
        let pool: Vec<usize> = (0..n).filter(|&v| adj[v].count_ones() as usize >= l).collect();
        let mut chosen = Vec::with_capacity(s);
        let all = if n == 64 { u64::MAX } else { bit(n) - 1 };
        match small_side(&adj, &pool, s, l, 0, &mut chosen, all) {
            Some(common) => (chosen, bits(common).take(l).collect()),
            None => return Ok(None),
        }
    };
    let w = if a <= b {
        BipartiteWitness { left: small, right: large }
    } else {
        BipartiteWitness { left: large, right: small }
    };
    if !w.validate(g) {
        return Err(GraphError::InvalidWitness(format!("K{a},{b} witness {w:?}")));
    }
    Ok(Some(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::arb_graph;
    use proptest::prelude::*;
    use SubdivisionTarget::*;

    fn has(g: &SimpleGraph, t: SubdivisionTarget) -> bool {
        contains_subdivision(g, t).unwrap().is_some()
    }

    /// Minor test by brute force over all partial partitions of the vertex
    /// set into connected branch sets. Feasible up to about 8 vertices.
    fn has_minor(g: &SimpleGraph, h: &SimpleGraph) -> bool {
        let n = g.vertex_count();
        let k = h.vertex_count();
        // block[v] = 0 means deleted, otherwise branch set index + 1.
        fn rec(g: &SimpleGraph, h: &SimpleGraph, v: usize, block: &mut Vec<usize>, blocks: usize) -> bool {
            let n = g.vertex_count();
            if v == n {
                return blocks >= h.vertex_count() && check(g, h, block, blocks);
            }
            for b in 0..=blocks + 1 {
                block[v] = b;
                let nb = if b == blocks + 1 { blocks + 1 } else { blocks };
                if rec(g, h, v + 1, block, nb) {
                    return true;
                }
            }
            false
        }
        fn check(g: &SimpleGraph, h: &SimpleGraph, block: &[usize], blocks: usize) -> bool {
            let sets: Vec<Vec<usize>> =
                (1..=blocks).map(|b| (0..block.len()).filter(|&v| block[v] == b).collect()).collect();
            if !sets.iter().all(|s| {
                crate::graph::is_connected(&g.induced_subgraph(s).unwrap())
            }) {
                return false;
            }
            let mut q = SimpleGraph::new(blocks);
            for (u, v) in g.edges() {
                if block[u] != 0 && block[v] != 0 && block[u] != block[v] {
                    q.add_edge(block[u] - 1, block[v] - 1).unwrap();
                }
            }
            // h must be a subgraph of the quotient: try injective maps.
            fn embed(q: &SimpleGraph, h: &SimpleGraph, i: usize, map: &mut Vec<usize>) -> bool {
                if i == h.vertex_count() {
                    return true;
                }
                for x in 0..q.vertex_count() {
                    if map.contains(&x) {
                        continue;
                    }
                    if (0..i).all(|j| !h.has_edge(i, j) || q.has_edge(x, map[j])) {
                        map.push(x);
                        if embed(q, h, i + 1, map) {
                            return true;
                        }
                        map.pop();
                    }
                }
                false
            }
            embed(&q, h, 0, &mut Vec::new())
        }
        k <= n && rec(g, h, 0, &mut vec![0; n], 0)
    }

    #[test]
    fn basic_cases() {
        assert!(has(&SimpleGraph::complete(4), K4));
        assert!(!has(&SimpleGraph::cycle(6), K4));
        let mut k5e = SimpleGraph::complete(5);
        k5e.remove_edge(0, 1).unwrap();
        assert!(!has(&k5e, K5));
        assert!(!has(&k5e, K33));
        assert!(has(&SimpleGraph::complete_bipartite(3, 3), K33));
        assert!(has(&SimpleGraph::complete_bipartite(2, 3), K23));
        assert!(!has(&SimpleGraph::complete(5), K33));
    }

    #[test]
    fn petersen_contains_k33_subdivision_but_no_k5_subdivision() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let g = SimpleGraph::from_edges(10, &edges).unwrap();
        let w = contains_subdivision(&g, K33).unwrap().unwrap();
        assert!(w.validate(&g));
        // Cubic graphs cannot host a degree-4 branch vertex.
        assert!(!has(&g, K5));
    }

    #[test]
    fn subdivided_k5_is_found() {
        // K5 with every edge subdivided once: 15 vertices.
        let mut g = SimpleGraph::new(15);
        let mut mid = 5;
        for u in 0..5 {
            for v in u + 1..5 {
                g.add_edge(u, mid).unwrap();
                g.add_edge(mid, v).unwrap();
                mid += 1;
            }
        }
        let w = contains_subdivision(&g, K5).unwrap().unwrap();
        assert_eq!(w.branch, vec![0, 1, 2, 3, 4]);
        assert!(w.paths.iter().all(|p| p.len() == 3));
        assert!(!has(&g, K33));
    }

    #[test]
    fn witness_validation_rejects_tampering() {
        let g = SimpleGraph::complete(4);
        let mut w = contains_subdivision(&g, K4).unwrap().unwrap();
        assert!(w.validate(&g));
        w.paths[0] = vec![w.branch[0], w.branch[2]];
        assert!(!w.validate(&g));
    }

    #[test]
    fn complete_bipartite_subgraphs() {
        let g = SimpleGraph::complete_bipartite(4, 5);
        let w = contains_complete_bipartite(&g, 4, 5).unwrap().unwrap();
        assert_eq!((w.left.len(), w.right.len()), (4, 5));
        let w = contains_complete_bipartite(&g, 5, 4).unwrap().unwrap();
        assert_eq!((w.left.len(), w.right.len()), (5, 4));
        assert!(contains_complete_bipartite(&SimpleGraph::complete(7), 4, 4).unwrap().is_none());
        assert!(contains_complete_bipartite(&SimpleGraph::complete(7), 3, 4).unwrap().is_some());
        assert!(contains_complete_bipartite(&SimpleGraph::new(3), 0, 3).unwrap().is_some());
        // Parts of sizes 3,3,3 cannot host K4,4: one side would need two parts
        // and the other side the remaining part only.
        let k333 = SimpleGraph::complete_multipartite(&[3, 3, 3]);
        assert!(contains_complete_bipartite(&k333, 4, 4).unwrap().is_none());
        assert!(contains_complete_bipartite(&k333, 3, 6).unwrap().is_some());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn planarity_agrees_with_minor_oracle(g in arb_graph(8)) {
            let k5 = SimpleGraph::complete(5);
            let k33 = SimpleGraph::complete_bipartite(3, 3);
            let by_subdivision = has(&g, K5) || has(&g, K33);
            let by_minor = has_minor(&g, &k5) || has_minor(&g, &k33);
            prop_assert_eq!(by_subdivision, by_minor);
        }

        #[test]
        fn outerplanarity_agrees_with_minor_oracle(g in arb_graph(7)) {
            let k4 = SimpleGraph::complete(4);
            let k23 = SimpleGraph::complete_bipartite(2, 3);
            let by_subdivision = has(&g, K4) || has(&g, K23);
            let by_minor = has_minor(&g, &k4) || has_minor(&g, &k23);
            prop_assert_eq!(by_subdivision, by_minor);
        }

        #[test]
        fn witnesses_validate(g in arb_graph(9)) {
            for t in [K4, K23, K5, K33] {
                if let Some(w) = contains_subdivision(&g, t).unwrap() {
                    prop_assert!(w.validate(&g));
                }
            }
        }
    }
}
