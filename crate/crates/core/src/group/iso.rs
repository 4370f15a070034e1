//! Brute-force group isomorphism for desk-scale orders.
//!
//! The search fixes a small generating set of the source group and tries
//! every order-preserving assignment of images, extending each assignment to
//! a full map along words in the generators. Groups with different element
//! order profiles are rejected up front.

use super::GroupTable;

/// Sorted list of element orders.
pub fn order_profile(g: &GroupTable) -> Vec<usize> {
    let mut p: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
    p.sort_unstable();
    p
}

fn span(g: &GroupTable, gens: &[usize]) -> Vec<bool> {
    // In a finite group the submonoid generated by `gens` is the subgroup.
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(y) = stack.pop() {
        for &s in gens {
            let z = g.mul(y, s);
            if !seen[z] {
                seen[z] = true;
                stack.push(z);
            }
        }
    }
    seen
}

fn generating_set(g: &GroupTable) -> Vec<usize> {
    // Greedy: repeatedly add the highest-order element outside the current span.
    let mut by_order: Vec<usize> = g.elements().collect();
    by_order.sort_by_key(|&x| std::cmp::Reverse(g.element_order(x)));
    let mut gens = Vec::new();
    let mut covered = span(g, &gens);
    for x in by_order {
        if !covered[x] {
            gens.push(x);
            covered = span(g, &gens);
        }
    }
    gens
}

/// Extends `images` of `gens` to a map on all of `g`; `None` if inconsistent.
fn extend(g: &GroupTable, h: &GroupTable, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0];
    while let Some(x) = queue.pop() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let image = h.mul(map[x], t);
            if map[y] == usize::MAX {
                if used[image] {
                    return None;
                }
                map[y] = image;
                used[image] = true;
                queue.push(y);
            } else if map[y] != image {
                return None;
            }
        }
    }
    if map.contains(&usize::MAX) {
        return None;
    }
    let hom = (0..n).all(|a| (0..n).all(|b| map[g.mul(a, b)] == h.mul(map[a], map[b])));
    hom.then_some(map)
}

/// An isomorphism `g -> h` as an index map, if one exists.
pub fn find_isomorphism(g: &GroupTable, h: &GroupTable) -> Option<Vec<usize>> {
    if g.order() != h.order() || order_profile(g) != order_profile(h) {
        return None;
    }
    let gens = generating_set(g);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| h.elements().filter(|&t| h.element_order(t) == g.element_order(s)).collect())
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    search(g, h, &gens, &candidates, &mut images)
}

fn search(
    g: &GroupTable,
    h: &GroupTable,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if images.len() == gens.len() {
        return extend(g, h, gens, images);
    }
    for &t in &candidates[images.len()] {
        if images.contains(&t) {
            continue;
        }
        images.push(t);
        if let Some(map) = search(g, h, gens, candidates, images) {
            return Some(map);
        }
        images.pop();
    }
    None
}

pub fn are_isomorphic(g: &GroupTable, h: &GroupTable) -> bool {
    find_isomorphism(g, h).is_some()
}
