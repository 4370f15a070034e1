//! Rotation systems, optionally signed, and face tracing.
//!
//! Certificate text format, one line per vertex with its neighbours in
//! cyclic order, then an optional list of negative edges:
//!
//! ```text
//! 0: 1 2 3
//! 1: 0 3 2
//! 2: 0 1 3
//! 3: 0 2 1
//! signs:
//! 1 2
//! ```

use std::collections::BTreeSet;
use std::fmt::Write;

use serde::Serialize;

use super::{Result, TopologyError};
use crate::graph::{is_connected, SimpleGraph};

/// A graph with a cyclic order of neighbours at each vertex. Edges listed in
/// `negative` carry sign -1; `None` marks an orientable certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    pub graph: SimpleGraph,
    pub rotations: Vec<Vec<usize>>,
    pub negative: Option<BTreeSet<(usize, usize)>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Surface {
    /// Sphere with this many handles.
    Orientable(u64),
    /// Sphere with this many crosscaps.
    NonOrientable(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingCheck {
    pub surface: Surface,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub face_lengths: Vec<usize>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn malformed(msg: impl Into<String>) -> TopologyError {
    TopologyError::MalformedRotation(msg.into())
}

/// Face walks of a signed rotation system, as cycles over the states
/// `(u, v, eps)`: the edge `u -> v` is being traversed with local
/// orientation `eps` at `u`. The successor applies the sign of `uv` and then
/// turns to the rotation successor (eps = +1) or predecessor (eps = -1) of
/// `u` at `v`. Every face is traced twice, once per direction.
pub(crate) struct FaceTracer<'a> {
    n: usize,
    succ: Vec<usize>,
    pred: Vec<usize>,
    sign: &'a dyn Fn(usize, usize) -> i8,
}

impl<'a> FaceTracer<'a> {
    pub(crate) fn new(n: usize, rotations: &[Vec<usize>], sign: &'a dyn Fn(usize, usize) -> i8) -> Self {
        let mut succ = vec![usize::MAX; n * n];
        let mut pred = vec![usize::MAX; n * n];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &a) in rot.iter().enumerate() {
                let b = rot[(i + 1) % rot.len()];
                succ[v * n + a] = b;
                pred[v * n + b] = a;
            }
        }
        Self { n, succ, pred, sign }
    }

    fn next(&self, (u, v, eps): (usize, usize, i8)) -> (usize, usize, i8) {
        let e = eps * (self.sign)(u, v);
        let w = if e > 0 { self.succ[v * self.n + u] } else { self.pred[v * self.n + u] };
        (v, w, e)
    }

    fn reverse(&self, (u, v, eps): (usize, usize, i8)) -> (usize, usize, i8) {
        (v, u, -eps * (self.sign)(u, v))
    }

    fn index(&self, (u, v, eps): (usize, usize, i8)) -> usize {
        (u * self.n + v) * 2 + usize::from(eps < 0)
    }

    /// Lengths of the faces, one per pair of mutually reverse walks.
    pub(crate) fn faces(&self, g: &SimpleGraph) -> Result<Vec<usize>> {
        let mut cycle_of = vec![usize::MAX; self.n * self.n * 2];
        let mut cycles: Vec<Vec<(usize, usize, i8)>> = Vec::new();
        for (u, v) in g.edges() {
            for s in [(u, v, 1), (u, v, -1), (v, u, 1), (v, u, -1)] {
                if cycle_of[self.index(s)] != usize::MAX {
                    continue;
                }
                let id = cycles.len();
                let mut walk = Vec::new();
                let mut cur = s;
                loop {
                    let i = self.index(cur);
                    if cycle_of[i] != usize::MAX {
                        return Err(TopologyError::TracingInconsistent(format!(
                            "state {}->{} reached twice",
                            cur.0, cur.1
                        )));
                    }
                    cycle_of[i] = id;
                    walk.push(cur);
                    cur = self.next(cur);
                    if cur == s {
                        break;
                    }
                }
                cycles.push(walk);
            }
        }
        let mut lengths = Vec::new();
        for (id, walk) in cycles.iter().enumerate() {
            let rev = cycle_of[self.index(self.reverse(walk[0]))];
            if rev == id {
                return Err(TopologyError::TracingInconsistent(format!(
                    "face through {}->{} is its own reverse",
                    walk[0].0, walk[0].1
                )));
            }
            if walk.iter().any(|&s| cycle_of[self.index(self.reverse(s))] != rev) {
                return Err(TopologyError::TracingInconsistent("reverse walk splits".into()));
            }
            if id < rev {
                lengths.push(walk.len());
            }
        }
        Ok(lengths)
    }
}

impl RotationSystem {
    /// Checks the rotation lists against the graph and the sign set against
    /// its edges.
    pub fn new(
        graph: SimpleGraph,
        rotations: Vec<Vec<usize>>,
        negative: Option<BTreeSet<(usize, usize)>>,
    ) -> Result<Self> {
        let n = graph.vertex_count();
        if rotations.len() != n {
            return Err(malformed(format!("{} rotation lists for {n} vertices", rotations.len())));
        }
        for (v, rot) in rotations.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if !sorted.iter().copied().eq(graph.neighbors(v)) {
                return Err(malformed(format!("rotation at {v} is not a permutation of its neighbours")));
            }
        }
        if let Some(neg) = &negative {
            for &(u, v) in neg {
                if u >= v || v >= n || !graph.has_edge(u, v) {
                    return Err(malformed(format!("signed pair {u} {v} is not an edge (u < v)")));
                }
            }
        }
        Ok(Self { graph, rotations, negative })
    }

    pub fn sign(&self, u: usize, v: usize) -> i8 {
        match &self.negative {
            Some(neg) if neg.contains(&key(u, v)) => -1,
            _ => 1,
        }
    }

    /// Whether vertex switching can make every sign positive.
    pub fn is_orientable(&self) -> bool {
        let n = self.graph.vertex_count();
        let mut side = vec![0i8; n];
        for root in 0..n {
            if side[root] != 0 {
                continue;
            }
            side[root] = 1;
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for w in self.graph.neighbors(v) {
                    let want = side[v] * self.sign(v, w);
                    if side[w] == 0 {
                        side[w] = want;
                        stack.push(w);
                    } else if side[w] != want {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Traces all faces and derives the surface from Euler's formula.
    pub fn verify(&self) -> Result<EmbeddingCheck> {
        let g = &self.graph;
        let (v, e) = (g.vertex_count(), g.edge_count());
        if v == 0 || !is_connected(g) {
            return Err(TopologyError::Disconnected);
        }
        let sign = |a: usize, b: usize| self.sign(a, b);
        let face_lengths = if e == 0 { vec![0] } else { FaceTracer::new(v, &self.rotations, &sign).faces(g)? };
        let f = face_lengths.len();
        let euler_genus = 2 + e as i64 - v as i64 - f as i64;
        if euler_genus < 0 {
            return Err(TopologyError::TracingInconsistent(format!("Euler characteristic {} exceeds 2", 2 - euler_genus)));
        }
        let surface = if self.is_orientable() {
            if euler_genus % 2 != 0 {
                return Err(TopologyError::TracingInconsistent("odd Euler genus on an orientable surface".into()));
            }
            Surface::Orientable(euler_genus as u64 / 2)
        } else {
            if euler_genus == 0 {
                return Err(TopologyError::TracingInconsistent("non-orientable system on the sphere".into()));
            }
            Surface::NonOrientable(euler_genus as u64)
        };
        Ok(EmbeddingCheck { surface, vertices: v, edges: e, faces: f, face_lengths })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, rot) in self.rotations.iter().enumerate() {
            let _ = write!(out, "{v}:");
            for w in rot {
                let _ = write!(out, " {w}");
            }
            out.push('\n');
        }
        if let Some(neg) = &self.negative {
            out.push_str("signs:\n");
            for (u, v) in neg {
                let _ = writeln!(out, "{u} {v}");
            }
        }
        out
    }

    /// Parses the certificate format; the graph is read off the rotations.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |line: usize, message: String| TopologyError::Parse { line, message };
        let mut rotations: Vec<Vec<usize>> = Vec::new();
        let mut negative: Option<BTreeSet<(usize, usize)>> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let l = raw.trim();
            if l.is_empty() || l.starts_with('#') {
                continue;
            }
            if l == "signs:" {
                negative = Some(BTreeSet::new());
                continue;
            }
            let nums = |s: &str| -> Result<Vec<usize>> {
                s.split_whitespace()
                    .map(|t| t.parse().map_err(|_| err(line, format!("`{t}` is not a vertex"))))
                    .collect()
            };
            match &mut negative {
                Some(neg) => {
                    let pair = nums(l)?;
                    if pair.len() != 2 {
                        return Err(err(line, "expected a pair `u v`".into()));
                    }
                    neg.insert(key(pair[0], pair[1]));
                }
                None => {
                    let (head, tail) = l.split_once(':').ok_or_else(|| err(line, "missing `:`".into()))?;
                    let v: usize = head.trim().parse().map_err(|_| err(line, format!("bad vertex `{head}`")))?;
                    if v != rotations.len() {
                        return Err(err(line, format!("expected vertex {}, found {v}", rotations.len())));
                    }
                    rotations.push(nums(tail)?);
                }
            }
        }
        let n = rotations.len();
        let mut g = SimpleGraph::new(n);
        for (v, rot) in rotations.iter().enumerate() {
            for &w in rot {
                g.add_edge(v, w).map_err(|e| malformed(e.to_string()))?;
            }
        }
        Self::new(g, rotations, negative)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_planar() -> RotationSystem {
        let g = SimpleGraph::complete(4);
        RotationSystem::new(g, vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]], None).unwrap()
    }

    #[test]
    fn tetrahedron_is_spherical() {
        let c = k4_planar().verify().unwrap();
        assert_eq!(c.surface, Surface::Orientable(0));
        assert_eq!(c.faces, 4);
        assert!(c.face_lengths.iter().all(|&l| l == 3));
    }

    #[test]
    fn other_rotations_of_k4_lift_to_the_torus() {
        let g = SimpleGraph::complete(4);
        let rotations = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        let rs = RotationSystem::new(g, rotations, None).unwrap();
        let c = rs.verify().unwrap();
        assert_eq!(c.surface, Surface::Orientable(1));
        assert_eq!(c.faces, 2);
    }

    #[test]
    fn one_negative_edge_gives_a_projective_plane() {
        // A planar K4 with one edge twisted: faces merge, F = 3, crosscap 1.
        let mut rs = k4_planar();
        rs.negative = Some([(0, 1)].into_iter().collect());
        let c = rs.verify().unwrap();
        assert_eq!(c.surface, Surface::NonOrientable(1));
        assert_eq!(c.faces, 3);
    }

    #[test]
    fn switching_a_vertex_preserves_orientability() {
        // Negate every edge at vertex 0 and reverse its rotation.
        let mut rs = k4_planar();
        rs.negative = Some([(0, 1), (0, 2), (0, 3)].into_iter().collect());
        rs.rotations[0].reverse();
        assert!(rs.is_orientable());
        assert_eq!(rs.verify().unwrap().surface, Surface::Orientable(0));
    }

    #[test]
    fn malformed_inputs() {
        let g = SimpleGraph::complete(3);
        assert!(RotationSystem::new(g.clone(), vec![vec![1, 2], vec![0, 2]], None).is_err());
        assert!(RotationSystem::new(g.clone(), vec![vec![1, 2], vec![0, 2], vec![0, 0]], None).is_err());
        let bad_sign = Some([(0, 0)].into_iter().collect());
        assert!(RotationSystem::new(g, vec![vec![1, 2], vec![0, 2], vec![0, 1]], bad_sign).is_err());
        let disconnected = RotationSystem::new(SimpleGraph::new(2), vec![vec![], vec![]], None).unwrap();
        assert!(matches!(disconnected.verify(), Err(TopologyError::Disconnected)));
    }

    #[test]
    fn text_round_trip() {
        let mut rs = k4_planar();
        rs.negative = Some([(1, 2)].into_iter().collect());
        let text = rs.to_text();
        assert!(text.ends_with("signs:\n1 2\n"));
        assert_eq!(RotationSystem::parse(&text).unwrap(), rs);
        assert!(matches!(RotationSystem::parse("0: 1\n2: 0\n"), Err(TopologyError::Parse { line: 2, .. })));
        assert!(matches!(RotationSystem::parse("0: x\n"), Err(TopologyError::Parse { line: 1, .. })));
        assert!(RotationSystem::parse("0: 1\n1: 2\n2: 1\n").is_err());
    }
}
