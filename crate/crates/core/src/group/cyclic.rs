use std::collections::BTreeSet;

use serde::Serialize;

use super::GroupTable;

/// The maximal cyclic subgroups of a group, with their generator sets.
///
/// Subgroups are sorted by size (descending), then by member list, so the
/// family of a given table is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalCyclicFamily {
    pub subgroups: Vec<Vec<usize>>,
    pub generators: Vec<Vec<usize>>,
    pub sizes: Vec<usize>,
    order: usize,
}

impl MaximalCyclicFamily {
    pub(crate) fn compute(g: &GroupTable) -> Self {
        let cyclic: BTreeSet<Vec<usize>> = g.elements().map(|x| g.cyclic_subgroup(x)).collect();
        let cyclic: Vec<Vec<usize>> = cyclic.into_iter().collect();
        let is_proper_subset = |a: &[usize], b: &[usize]| {
            a.len() < b.len() && a.iter().all(|x| b.binary_search(x).is_ok())
        };
        let mut subgroups: Vec<Vec<usize>> = cyclic
            .iter()
            .filter(|c| !cyclic.iter().any(|d| is_proper_subset(c, d)))
            .cloned()
            .collect();
        subgroups.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));

        let generators = subgroups
            .iter()
            .map(|m| m.iter().copied().filter(|&x| g.element_order(x) == m.len()).collect())
            .collect();
        let sizes = subgroups.iter().map(Vec::len).collect();
        Self { subgroups, generators, sizes, order: g.order() }
    }

    /// Number of maximal cyclic subgroups.
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Order of the group the family was computed from.
    pub fn group_order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, i: usize, x: usize) -> bool {
        self.subgroups[i].binary_search(&x).is_ok()
    }

    /// Indices of the maximal cyclic subgroups containing `x`.
    pub fn containing(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.contains(i, x)).collect()
    }

    /// Union of every maximal cyclic subgroup that contains `x`, sorted.
    pub fn union_containing(&self, x: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self
            .subgroups
            .iter()
            .filter(|m| m.binary_search(&x).is_ok())
            .flat_map(|m| m.iter().copied())
            .collect();
        set.into_iter().collect()
    }

    /// All elements generating some maximal cyclic subgroup, sorted.
    pub fn generator_set(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.generators.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    /// Elements lying in every maximal cyclic subgroup.
    pub fn common_intersection(&self) -> Vec<usize> {
        (0..self.order).filter(|&x| (0..self.len()).all(|i| self.contains(i, x))).collect()
    }

    /// Sizes sorted in descending order.
    pub fn size_profile(&self) -> Vec<usize> {
        let mut s = self.sizes.clone();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    /// Whether two elements lie in a common maximal cyclic subgroup.
    pub fn share_subgroup(&self, x: usize, y: usize) -> bool {
        self.subgroups.iter().any(|m| m.binary_search(&x).is_ok() && m.binary_search(&y).is_ok())
    }
}
