use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use super::{GraphError, Result, SimpleGraph};

/// Length of a shortest cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn is_infinite(self) -> bool {
        self == Girth::Infinite
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(n) => write!(f, "{n}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(n) => s.serialize_u64(*n as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Result of a bipartiteness test, with a witness either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// `side[v]` is 0 or 1 and every edge joins different sides.
    Bipartite { side: Vec<u8> },
    /// Vertices of an odd cycle, in cyclic order.
    OddCycle(Vec<usize>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }

    /// Re-checks the witness against `g`.
    pub fn validate(&self, g: &SimpleGraph) -> bool {
        match self {
            Bipartiteness::Bipartite { side } => {
                side.len() == g.vertex_count()
                    && side.iter().all(|&s| s < 2)
                    && g.edges().all(|(u, v)| side[u] != side[v])
            }
            Bipartiteness::OddCycle(c) => {
                let mut seen = vec![false; g.vertex_count()];
                c.len() % 2 == 1
                    && c.len() >= 3
                    && c.iter().all(|&v| v < seen.len() && !std::mem::replace(&mut seen[v], true))
                    && (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]))
            }
        }
    }
}

/// Connected components, each sorted, listed by least vertex.
pub fn connected_components(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut comp = vec![root];
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Graphs with at most one vertex count as connected.
pub fn is_connected(g: &SimpleGraph) -> bool {
    connected_components(g).len() <= 1
}

fn bfs(g: &SimpleGraph, root: usize) -> (Vec<usize>, Vec<usize>) {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    (dist, parent)
}

/// Shortest cycle length, by a BFS from every vertex.
pub fn girth(g: &SimpleGraph) -> Girth {
    let mut best = usize::MAX;
    for root in 0..g.vertex_count() {
        let (dist, parent) = bfs(g, root);
        for (u, v) in g.edges() {
            if dist[u] == usize::MAX || parent[u] == v || parent[v] == u {
                continue;
            }
            // A non-tree edge closes a closed walk through root of this length,
            // which contains a cycle no longer than it; the minimum over roots
            // is attained by a root on a shortest cycle.
            best = best.min(dist[u] + dist[v] + 1);
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

fn path_to_root(parent: &[usize], mut v: usize) -> Vec<usize> {
    let mut out = vec![v];
    while parent[v] != usize::MAX {
        v = parent[v];
        out.push(v);
    }
    out
}

/// Two-colours `g` by BFS, or returns an odd cycle.
pub fn is_bipartite(g: &SimpleGraph) -> Bipartiteness {
    let n = g.vertex_count();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    parent[w] = v;
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    // Both BFS-tree paths have the same parity; join them at
                    // their lowest common ancestor.
                    let pv = path_to_root(&parent, v);
                    let pw = path_to_root(&parent, w);
                    let common = pv.iter().rev().zip(pw.iter().rev()).take_while(|(a, b)| a == b).count();
                    let mut cycle: Vec<usize> = pv[..=pv.len() - common].to_vec();
                    cycle.extend(pw[..pw.len() - common].iter().rev());
                    return Bipartiteness::OddCycle(cycle);
                }
            }
        }
    }
    Bipartiteness::Bipartite { side }
}

/// Whether `g` has a closed trail through every edge.
///
/// All vertices of positive degree must share one component and every degree
/// must be even. With `ignore_isolated` false, isolated vertices also count
/// towards connectivity, so any isolated vertex alongside an edge fails. An
/// edgeless graph is vacuously Eulerian.
pub fn is_eulerian(g: &SimpleGraph, ignore_isolated: bool) -> bool {
    if g.edge_count() == 0 {
        return true;
    }
    if g.degrees().iter().any(|d| d % 2 == 1) {
        return false;
    }
    let comps = connected_components(g);
    if ignore_isolated {
        comps.iter().filter(|c| c.len() > 1).count() == 1
    } else {
        comps.len() == 1
    }
}

/// `m - n + 1` for a connected graph.
pub fn cyclomatic_number(g: &SimpleGraph) -> Result<i64> {
    if !is_connected(g) {
        return Err(GraphError::Disconnected);
    }
    Ok(g.edge_count() as i64 - g.vertex_count() as i64 + 1)
}
