use super::{bit, bits, GraphError, Result, SimpleGraph};

/// A maximum clique and its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clique {
    pub size: usize,
    pub vertices: Vec<usize>,
}

impl Clique {
    pub fn validate(&self, g: &SimpleGraph) -> bool {
        self.vertices.len() == self.size
            && self.vertices.iter().all(|&v| v < g.vertex_count())
            && self
                .vertices
                .iter()
                .enumerate()
                .all(|(i, &u)| self.vertices[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    }
}

/// Greedy colouring of `cand` in a fixed order; returns vertices with their
/// colour bounds, colours non-decreasing.
fn colour_sort(adj: &[u64], cand: u64, order: &mut Vec<(usize, usize)>) {
    order.clear();
    let mut rest = cand;
    let mut colour = 0;
    while rest != 0 {
        colour += 1;
        let mut avail = rest;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !bit(v) & !adj[v];
            rest &= !bit(v);
            order.push((v, colour));
        }
    }
}

struct Search<'a> {
    adj: &'a [u64],
    best: u64,
    best_size: usize,
    stop_at: usize,
}

impl Search<'_> {
    fn expand(&mut self, current: u64, size: usize, cand: u64) {
        let mut order = Vec::with_capacity(cand.count_ones() as usize);
        colour_sort(self.adj, cand, &mut order);
        let mut cand = cand;
        for &(v, colour) in order.iter().rev() {
            if self.best_size >= self.stop_at || size + colour <= self.best_size {
                return;
            }
            let next = current | bit(v);
            let sub = cand & self.adj[v];
            if sub == 0 {
                if size + 1 > self.best_size {
                    self.best = next;
                    self.best_size = size + 1;
                }
            } else {
                self.expand(next, size + 1, sub);
            }
            cand &= !bit(v);
        }
    }
}

fn search(g: &SimpleGraph, stop_at: usize) -> Result<Clique> {
    let adj = g.masks()?;
    let n = adj.len();
    if n == 0 {
        return Ok(Clique { size: 0, vertices: vec![] });
    }
    let all = if n == 64 { u64::MAX } else { bit(n) - 1 };
    let mut s = Search { adj: &adj, best: 1, best_size: 1, stop_at };
    s.expand(0, 0, all);
    let clique = Clique { size: s.best_size, vertices: bits(s.best).collect() };
    if !clique.validate(g) {
        return Err(GraphError::InvalidWitness(format!("clique {:?}", clique.vertices)));
    }
    Ok(clique)
}

/// Exact clique number with a witness. The graph on zero vertices has clique
/// number 0; any other edgeless graph has clique number 1.
pub fn clique_number(g: &SimpleGraph) -> Result<Clique> {
    search(g, usize::MAX)
}

/// A clique on `r` vertices, if one exists (subgraph semantics).
pub fn contains_complete(g: &SimpleGraph, r: usize) -> Result<Option<Vec<usize>>> {
    if r == 0 {
        g.masks()?;
        return Ok(Some(vec![]));
    }
    let c = search(g, r)?;
    Ok((c.size >= r).then(|| c.vertices[..r].to_vec()))
}

/// Independence number, as the clique number of the complement.
pub fn independence_number(g: &SimpleGraph) -> Result<Clique> {
    clique_number(&g.complement())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::arb_graph;
    use proptest::prelude::*;

    fn brute(g: &SimpleGraph) -> usize {
        let n = g.vertex_count();
        (0u32..1 << n)
            .filter(|&s| {
                (0..n).all(|u| (0..n).all(|v| u == v || s >> u & 1 == 0 || s >> v & 1 == 0 || g.has_edge(u, v)))
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn conventions_and_small_cases() {
        assert_eq!(clique_number(&SimpleGraph::new(0)).unwrap().size, 0);
        assert_eq!(clique_number(&SimpleGraph::new(4)).unwrap().size, 1);
        assert_eq!(clique_number(&SimpleGraph::complete(7)).unwrap().size, 7);
        assert_eq!(clique_number(&SimpleGraph::complete(64)).unwrap().size, 64);
        assert_eq!(clique_number(&SimpleGraph::cycle(5)).unwrap().size, 2);
        assert_eq!(independence_number(&SimpleGraph::cycle(5)).unwrap().size, 2);
        assert!(clique_number(&SimpleGraph::new(65)).is_err());
    }

    #[test]
    fn containment() {
        let k33 = SimpleGraph::complete_bipartite(3, 3);
        assert_eq!(contains_complete(&k33, 3).unwrap(), None);
        assert_eq!(contains_complete(&k33, 2).unwrap().map(|c| c.len()), Some(2));
        assert_eq!(contains_complete(&SimpleGraph::new(1), 1).unwrap(), Some(vec![0]));
        assert_eq!(contains_complete(&SimpleGraph::new(0), 1).unwrap(), None);
        let k7 = SimpleGraph::complete(7);
        assert_eq!(contains_complete(&k7, 7).unwrap().unwrap().len(), 7);
        assert_eq!(contains_complete(&k7, 8).unwrap(), None);
    }

    proptest! {
        #[test]
        fn matches_subset_enumeration(g in arb_graph(12)) {
            let c = clique_number(&g).unwrap();
            prop_assert!(c.validate(&g));
            prop_assert_eq!(c.size, brute(&g));
        }
    }
}
