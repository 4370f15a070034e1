use super::{bits, clique_number, GraphError, Result, SimpleGraph};

/// A proper colouring using colours `0..count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub count: usize,
    pub colors: Vec<usize>,
}

pub fn is_proper_coloring(g: &SimpleGraph, colors: &[usize]) -> bool {
    colors.len() == g.vertex_count() && g.edges().all(|(u, v)| colors[u] != colors[v])
}

fn colours_used(colors: &[usize]) -> usize {
    colors.iter().map(|&c| c + 1).max().unwrap_or(0)
}

/// Renumbers colours densely in order of first appearance.
fn normalise(colors: &[usize]) -> Vec<usize> {
    let mut map = std::collections::HashMap::new();
    colors
        .iter()
        .map(|c| {
            let next = map.len();
            *map.entry(*c).or_insert(next)
        })
        .collect()
}

const NONE: usize = usize::MAX;

struct KColour<'a> {
    adj: &'a [u64],
    k: usize,
    colors: Vec<usize>,
}

impl KColour<'_> {
    fn pick(&self) -> Option<(usize, u64)> {
        let mut best: Option<(usize, u64, u32, u32)> = None;
        for v in 0..self.adj.len() {
            if self.colors[v] != NONE {
                continue;
            }
            let mut seen = 0u64;
            let mut free_deg = 0;
            for w in bits(self.adj[v]) {
                match self.colors[w] {
                    NONE => free_deg += 1,
                    c => seen |= 1 << c,
                }
            }
            let sat = seen.count_ones();
            if best.is_none_or(|(_, _, s, d)| (sat, free_deg) > (s, d)) {
                best = Some((v, seen, sat, free_deg));
            }
        }
        best.map(|(v, seen, _, _)| (v, seen))
    }

    fn solve(&mut self, used: usize) -> bool {
        let Some((v, seen)) = self.pick() else {
            return true;
        };
        // Opening a fresh colour is only tried once, which removes colour
        // permutation symmetry.
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if seen >> c & 1 == 1 {
                continue;
            }
            self.colors[v] = c;
            if self.solve(used.max(c + 1)) {
                return true;
            }
        }
        self.colors[v] = NONE;
        false
    }
}

fn k_colouring(adj: &[u64], k: usize) -> Option<Vec<usize>> {
    let mut s = KColour { adj, k, colors: vec![NONE; adj.len()] };
    s.solve(0).then_some(s.colors)
}

fn greedy_dsatur(adj: &[u64]) -> Vec<usize> {
    k_colouring(adj, adj.len().max(1)).expect("n colours always suffice")
}

/// Exact chromatic number with a proper colouring.
///
/// The clique number is a lower bound; a `hint` colouring meeting it is
/// accepted directly, otherwise it (or a DSATUR colouring) serves as the
/// upper bound and each intermediate `k` is decided by exact search. Zero
/// vertices give 0 colours.
pub fn chromatic_number(g: &SimpleGraph, hint: Option<&[usize]>) -> Result<Coloring> {
    let adj = g.masks()?;
    let lower = clique_number(g)?.size;
    let mut upper = match hint {
        Some(h) if is_proper_coloring(g, h) => normalise(h),
        _ => greedy_dsatur(&adj),
    };
    let mut k = lower;
    while k < colours_used(&upper) {
        if let Some(c) = k_colouring(&adj, k) {
            upper = c;
            break;
        }
        k += 1;
    }
    let result = Coloring { count: colours_used(&upper), colors: upper };
    if !is_proper_coloring(g, &result.colors) {
        return Err(GraphError::InvalidWitness("colouring is not proper".into()));
    }
    Ok(result)
}
