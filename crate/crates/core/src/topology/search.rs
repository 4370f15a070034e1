//! Exhaustive backtracking search for embeddings of small graphs.
//!
//! Faces are traced one at a time. Whenever a walk needs a rotation link (or
//! an edge sign) that is not yet fixed, the search branches over the
//! possibilities. A partial state is abandoned once the faces already closed,
//! plus the most faces the unused edge sides could still form, fall short of
//! the target count from Euler's formula.

use std::collections::{BTreeSet, VecDeque};

use super::rotation::{RotationSystem, Surface};
use super::{Result, TopologyError};
use crate::graph::{is_connected, SimpleGraph};

pub const MAX_SEARCH_VERTICES: usize = 12;
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(RotationSystem),
    /// The whole search space was explored without success: no embedding
    /// with this face count exists.
    Exhausted,
}

const NONE: usize = usize::MAX;

type State = (usize, usize, i8);

struct Search {
    n: usize,
    nbr: Vec<Vec<usize>>,
    succ: Vec<usize>,
    pred: Vec<usize>,
    links: Vec<usize>,
    sign: Vec<i8>,
    used: Vec<bool>,
    closed: usize,
    reserved: usize,
    total: usize,
    target_faces: usize,
    nonorientable: bool,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn idx(&self, (u, v, e): State) -> usize {
        ((u * self.n + v) << 1) | usize::from(e < 0)
    }

    fn feasible(&self, open: usize) -> bool {
        if self.closed > self.target_faces {
            return false;
        }
        let mut free = self.total - self.reserved;
        let mut bound = self.closed;
        if open > 0 {
            // The open face still needs enough sides to reach length 3.
            let missing = 2 * 3usize.saturating_sub(open);
            if free < missing {
                return false;
            }
            free -= missing;
            bound += 1;
        }
        bound + free / 6 >= self.target_faces
    }

    fn can_link(&self, v: usize, a: usize, b: usize) -> bool {
        let n = self.n;
        if self.succ[v * n + a] != NONE || self.pred[v * n + b] != NONE {
            return false;
        }
        let mut x = b;
        while x != a && self.succ[v * n + x] != NONE {
            x = self.succ[v * n + x];
        }
        // Closing the rotation cycle is only allowed as the final link.
        x != a || self.links[v] + 1 == self.nbr[v].len()
    }

    fn set_link(&mut self, v: usize, a: usize, b: usize, on: bool) {
        let n = self.n;
        if on {
            self.succ[v * n + a] = b;
            self.pred[v * n + b] = a;
            self.links[v] += 1;
        } else {
            self.succ[v * n + a] = NONE;
            self.pred[v * n + b] = NONE;
            self.links[v] -= 1;
        }
    }

    fn set_sign(&mut self, u: usize, v: usize, s: i8) {
        self.sign[u * self.n + v] = s;
        self.sign[v * self.n + u] = s;
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(TopologyError::BudgetExhausted { nodes: self.budget })
        } else {
            Ok(())
        }
    }

    fn start_face(&mut self) -> Result<bool> {
        let mut start = None;
        'find: for u in 0..self.n {
            for &v in &self.nbr[u] {
                for e in [1, -1] {
                    if !self.used[self.idx((u, v, e))] {
                        start = Some((u, v, e));
                        break 'find;
                    }
                }
            }
        }
        let Some(s) = start else {
            let negative = self.sign.iter().any(|&s| s < 0);
            return Ok(self.closed == self.target_faces && negative == self.nonorientable);
        };
        let i = self.idx(s);
        self.used[i] = true;
        self.reserved += 2;
        let mut face = vec![s];
        let found = self.feasible(1) && self.extend(&mut face)?;
        if !found {
            self.used[i] = false;
            self.reserved -= 2;
        }
        Ok(found)
    }

    fn extend(&mut self, face: &mut Vec<State>) -> Result<bool> {
        self.tick()?;
        let (u, v, e) = *face.last().expect("open face is nonempty");
        let known = self.sign[u * self.n + v];
        let options: &[i8] = if known != 0 { &[0] } else { &[1, -1] };
        for &choice in options {
            let s = if known != 0 { known } else { choice };
            if known == 0 {
                self.set_sign(u, v, s);
            }
            let e2 = e * s;
            let fixed = if e2 > 0 { self.succ[v * self.n + u] } else { self.pred[v * self.n + u] };
            let found = if fixed != NONE {
                self.advance(face, (v, fixed, e2))?
            } else {
                let mut found = false;
                for k in 0..self.nbr[v].len() {
                    let w = self.nbr[v][k];
                    let (a, b) = if e2 > 0 { (u, w) } else { (w, u) };
                    if !self.can_link(v, a, b) {
                        continue;
                    }
                    self.set_link(v, a, b, true);
                    found = self.advance(face, (v, w, e2))?;
                    if found {
                        break;
                    }
                    self.set_link(v, a, b, false);
                }
                found
            };
            if found {
                return Ok(true);
            }
            if known == 0 {
                self.set_sign(u, v, 0);
            }
        }
        Ok(false)
    }

    fn advance(&mut self, face: &mut Vec<State>, next: State) -> Result<bool> {
        if next == face[0] {
            return self.close(face);
        }
        let i = self.idx(next);
        if self.used[i] {
            return Ok(false);
        }
        self.used[i] = true;
        self.reserved += 2;
        face.push(next);
        let found = self.feasible(face.len()) && self.extend(face)?;
        if !found {
            face.pop();
            self.used[i] = false;
            self.reserved -= 2;
        }
        Ok(found)
    }

    fn close(&mut self, face: &mut Vec<State>) -> Result<bool> {
        let revs: Vec<usize> = face
            .iter()
            .map(|&(a, b, e)| self.idx((b, a, -e * self.sign[a * self.n + b])))
            .collect();
        let distinct: BTreeSet<usize> = revs.iter().copied().collect();
        if distinct.len() != revs.len() || revs.iter().any(|&r| self.used[r]) {
            return Ok(false);
        }
        for &r in &revs {
            self.used[r] = true;
        }
        self.closed += 1;
        let found = self.feasible(0) && self.start_face()?;
        if !found {
            self.closed -= 1;
            for &r in &revs {
                self.used[r] = false;
            }
        }
        Ok(found)
    }

    fn into_rotation_system(self, g: &SimpleGraph) -> Result<RotationSystem> {
        let n = self.n;
        let rotations = (0..n)
            .map(|v| {
                let mut rot = Vec::with_capacity(self.nbr[v].len());
                if let Some(&first) = self.nbr[v].first() {
                    let mut x = first;
                    loop {
                        rot.push(x);
                        x = self.succ[v * n + x];
                        if x == first {
                            break;
                        }
                    }
                }
                rot
            })
            .collect();
        let negative = self.nonorientable.then(|| {
            g.edges().filter(|&(u, v)| self.sign[u * n + v] < 0).collect::<BTreeSet<_>>()
        });
        RotationSystem::new(g.clone(), rotations, negative)
    }
}

fn spanning_tree(g: &SimpleGraph) -> Vec<(usize, usize)> {
    let mut seen = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    if g.vertex_count() == 0 {
        return out;
    }
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                out.push((v, w));
                queue.push_back(w);
            }
        }
    }
    out
}

/// Searches for an embedding of `g` in the orientable surface of genus
/// `target` (`orientable`) or the non-orientable surface with `target`
/// crosscaps. Supported: genus 0 or 1, crosscap 1, connected graphs with
/// 3 to [`MAX_SEARCH_VERTICES`] vertices.
///
/// Only embeddings with exactly the Euler-formula face count for the target
/// surface are accepted, so a hit certifies that surface and no smaller one
/// by this search. `budget` caps the number of search nodes; running out is
/// reported as [`TopologyError::BudgetExhausted`], which says nothing about
/// existence.
pub fn search_embedding(g: &SimpleGraph, target: u64, orientable: bool, budget: u64) -> Result<SearchOutcome> {
    let n = g.vertex_count();
    if !(3..=MAX_SEARCH_VERTICES).contains(&n) {
        return Err(TopologyError::Unsupported(format!(
            "embedding search needs 3..={MAX_SEARCH_VERTICES} vertices, got {n}"
        )));
    }
    if !(orientable && target <= 1 || !orientable && target == 1) {
        return Err(TopologyError::Unsupported(format!(
            "embedding search covers genus 0, 1 and crosscap 1, not {} {target}",
            if orientable { "genus" } else { "crosscap" }
        )));
    }
    if !is_connected(g) {
        return Err(TopologyError::Disconnected);
    }
    let e = g.edge_count() as i64;
    let euler_genus = if orientable { 2 * target as i64 } else { target as i64 };
    let faces = e - n as i64 + 2 - euler_genus;
    if faces < 1 {
        return Ok(SearchOutcome::Exhausted);
    }
    let nbr: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut s = Search {
        n,
        nbr,
        succ: vec![NONE; n * n],
        pred: vec![NONE; n * n],
        links: vec![0; n],
        sign: vec![0; n * n],
        used: vec![false; n * n * 2],
        closed: 0,
        reserved: 0,
        total: 4 * e as usize,
        target_faces: faces as usize,
        nonorientable: !orientable,
        nodes: 0,
        budget,
    };
    if orientable {
        for (u, v) in g.edges() {
            s.set_sign(u, v, 1);
        }
    } else {
        // Switching at vertices makes any spanning tree all-positive.
        for (u, v) in spanning_tree(g) {
            s.set_sign(u, v, 1);
        }
    }
    if !s.start_face()? {
        return Ok(SearchOutcome::Exhausted);
    }
    let rs = s.into_rotation_system(g)?;
    let want = if orientable { Surface::Orientable(target) } else { Surface::NonOrientable(target) };
    let got = rs.verify()?.surface;
    if got != want {
        return Err(TopologyError::TracingInconsistent(format!("search produced {got:?}, wanted {want:?}")));
    }
    Ok(SearchOutcome::Found(rs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::arb_graph;
    use proptest::prelude::*;

    fn found(g: &SimpleGraph, target: u64, orientable: bool) -> Option<RotationSystem> {
        match search_embedding(g, target, orientable, DEFAULT_BUDGET).unwrap() {
            SearchOutcome::Found(rs) => Some(rs),
            SearchOutcome::Exhausted => None,
        }
    }

    #[test]
    fn planar_and_toroidal_classics() {
        let k4 = found(&SimpleGraph::complete(4), 0, true).unwrap();
        assert_eq!(k4.verify().unwrap().faces, 4);
        assert!(found(&SimpleGraph::complete(5), 0, true).is_none());
        assert!(found(&SimpleGraph::complete_bipartite(3, 3), 0, true).is_none());
        let k5 = found(&SimpleGraph::complete(5), 1, true).unwrap();
        assert_eq!(k5.verify().unwrap().faces, 5);
        let k33 = found(&SimpleGraph::complete_bipartite(3, 3), 1, true).unwrap();
        assert_eq!(k33.verify().unwrap().faces, 3);
        let k7 = found(&SimpleGraph::complete(7), 1, true).unwrap();
        assert_eq!(k7.verify().unwrap().faces, 14);
        assert!(found(&SimpleGraph::complete(8), 1, true).is_none());
    }

    #[test]
    fn projective_plane() {
        let k6 = found(&SimpleGraph::complete(6), 1, false).unwrap();
        assert_eq!(k6.verify().unwrap().surface, Surface::NonOrientable(1));
        assert!(found(&SimpleGraph::complete(5), 1, false).is_some());
        assert!(found(&SimpleGraph::complete(7), 1, false).is_none());
        // Planar graphs have projective embeddings too.
        assert!(found(&SimpleGraph::complete(4), 1, false).is_some());
    }

    #[test]
    fn multipartite_triangulations_of_the_torus() {
        for parts in [&[2, 2, 2, 2][..], &[3, 3, 3]] {
            let g = SimpleGraph::complete_multipartite(parts);
            let rs = found(&g, 1, true).unwrap();
            let c = rs.verify().unwrap();
            assert!(c.face_lengths.iter().all(|&l| l == 3));
        }
    }

    #[test]
    fn preconditions() {
        let budget = DEFAULT_BUDGET;
        assert!(matches!(search_embedding(&SimpleGraph::complete(2), 0, true, budget), Err(TopologyError::Unsupported(_))));
        assert!(matches!(search_embedding(&SimpleGraph::complete(13), 0, true, budget), Err(TopologyError::Unsupported(_))));
        assert!(matches!(search_embedding(&SimpleGraph::complete(4), 2, true, budget), Err(TopologyError::Unsupported(_))));
        assert!(matches!(search_embedding(&SimpleGraph::complete(4), 0, false, budget), Err(TopologyError::Unsupported(_))));
        assert!(matches!(search_embedding(&SimpleGraph::new(4), 0, true, budget), Err(TopologyError::Disconnected)));
        assert!(matches!(
            search_embedding(&SimpleGraph::complete(7), 1, true, 10),
            Err(TopologyError::BudgetExhausted { nodes: 10 })
        ));
    }

    /// Every surface reached by some rotation system, by plain enumeration
    /// of all rotations and (with `signed`) all signs off a spanning tree.
    fn all_surfaces(g: &SimpleGraph, signed: bool) -> BTreeSet<Surface> {
        fn perms(rest: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
            if k == rest.len() {
                out.push(rest.clone());
                return;
            }
            for i in k..rest.len() {
                rest.swap(k, i);
                perms(rest, k + 1, out);
                rest.swap(k, i);
            }
        }
        let choices: Vec<Vec<Vec<usize>>> = (0..g.vertex_count())
            .map(|v| {
                let nb: Vec<usize> = g.neighbors(v).collect();
                let mut out = Vec::new();
                match nb.split_first() {
                    Some((&first, rest)) => {
                        let mut tail = rest.to_vec();
                        perms(&mut tail, 0, &mut out);
                        out.iter_mut().for_each(|p| p.insert(0, first));
                    }
                    None => out.push(vec![]),
                }
                out
            })
            .collect();
        let tree = spanning_tree(g);
        let cotree: Vec<(usize, usize)> =
            g.edges().filter(|&(u, v)| !tree.contains(&(u, v)) && !tree.contains(&(v, u))).collect();
        let sign_sets = if signed { 1u32 << cotree.len() } else { 1 };
        let mut surfaces = BTreeSet::new();
        let mut pick = vec![0; choices.len()];
        loop {
            let rot: Vec<Vec<usize>> = pick.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
            for mask in 0..sign_sets {
                let neg = signed.then(|| {
                    cotree.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect()
                });
                let rs = RotationSystem::new(g.clone(), rot.clone(), neg).unwrap();
                surfaces.insert(rs.verify().unwrap().surface);
            }
            let mut i = 0;
            while i < pick.len() && pick[i] + 1 == choices[i].len() {
                pick[i] = 0;
                i += 1;
            }
            if i == pick.len() {
                return surfaces;
            }
            pick[i] += 1;
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn search_agrees_with_rotation_enumeration(g in arb_graph(6)) {
            prop_assume!(g.vertex_count() >= 3 && is_connected(&g));
            prop_assume!(g.degrees().iter().all(|&d| d <= 4));
            let surfaces = all_surfaces(&g, false);
            for target in [0, 1] {
                prop_assert_eq!(found(&g, target, true).is_some(), surfaces.contains(&Surface::Orientable(target)));
            }
        }

        #[test]
        fn projective_search_agrees_with_signed_enumeration(g in arb_graph(5)) {
            prop_assume!(g.vertex_count() >= 3 && is_connected(&g));
            prop_assume!(g.edge_count() + 1 <= g.vertex_count() + 4);
            let surfaces = all_surfaces(&g, true);
            prop_assert_eq!(found(&g, 1, false).is_some(), surfaces.contains(&Surface::NonOrientable(1)));
        }

        #[test]
        fn planar_search_agrees_with_kuratowski(g in arb_graph(7)) {
            use crate::graph::{contains_subdivision, SubdivisionTarget::*};
            prop_assume!(g.vertex_count() >= 3 && is_connected(&g));
            let kuratowski = contains_subdivision(&g, K5).unwrap().is_none()
                && contains_subdivision(&g, K33).unwrap().is_none();
            prop_assert_eq!(found(&g, 0, true).is_some(), kuratowski);
        }
    }
}
