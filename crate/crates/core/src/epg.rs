//! The enhanced power graph of a group, its complement, and the reduced
//! complement on the non-isolated vertices.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{export, SimpleGraph};
use crate::group::{GroupTable, MaximalCyclicFamily};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EpgError {
    #[error("family was computed for a group of order {family}, not {group}")]
    OrderMismatch { family: usize, group: usize },
    #[error("family member {index} is not a cyclic subgroup of the group")]
    NotCyclicSubgroup { index: usize },
    #[error("element {x} out of range for a group of order {order}")]
    ElementOutOfRange { x: usize, order: usize },
}

/// Adjacency from the family: distinct `x`, `y` are joined iff some maximal
/// cyclic subgroup contains both.
pub fn enhanced_power_graph(
    g: &GroupTable,
    family: &MaximalCyclicFamily,
) -> Result<SimpleGraph, EpgError> {
    if family.group_order() != g.order() {
        return Err(EpgError::OrderMismatch { family: family.group_order(), group: g.order() });
    }
    for (index, (members, gens)) in family.subgroups.iter().zip(&family.generators).enumerate() {
        let ok = gens.first().is_some_and(|&z| z < g.order() && g.cyclic_subgroup(z) == *members);
        if !ok {
            return Err(EpgError::NotCyclicSubgroup { index });
        }
    }
    let mut epg = SimpleGraph::new(g.order());
    for members in &family.subgroups {
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                epg.add_edge(x, y).expect("members are distinct group elements");
            }
        }
    }
    Ok(epg.with_tags(g.labels().to_vec()).expect("one label per element"))
}

/// Which of the three graphs to render.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Epg,
    Complement,
    Reduced,
}

/// A group together with every graph derived from it.
#[derive(Debug, Clone)]
pub struct EpgBundle {
    pub group: GroupTable,
    pub family: MaximalCyclicFamily,
    pub epg: SimpleGraph,
    pub complement: SimpleGraph,
    /// Sorted elements of degree zero in the complement.
    pub isolated: Vec<usize>,
    pub reduced: SimpleGraph,
    /// `reduced_index_map[v]` is the group element behind reduced vertex `v`.
    pub reduced_index_map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EpgSummary {
    pub name: String,
    pub order: usize,
    pub cyclic: bool,
    pub maximal_cyclic_count: usize,
    pub maximal_cyclic_sizes: Vec<usize>,
    pub isolated: Vec<String>,
    pub epg_edges: usize,
    pub complement_edges: usize,
    pub reduced_vertices: usize,
    pub reduced_edges: usize,
}

impl EpgBundle {
    pub fn build(group: GroupTable) -> Self {
        let family = group.maximal_cyclic_subgroups();
        let epg = enhanced_power_graph(&group, &family).expect("family computed from this group");
        let complement = epg.complement();
        let isolated = complement.isolated_vertices();
        let reduced_index_map: Vec<usize> =
            group.elements().filter(|x| isolated.binary_search(x).is_err()).collect();
        let reduced = complement
            .induced_subgraph(&reduced_index_map)
            .expect("indices come from the vertex range");
        Self { group, family, epg, complement, isolated, reduced, reduced_index_map }
    }

    pub fn name(&self) -> &str {
        self.group.name()
    }

    pub fn graph(&self, kind: GraphKind) -> &SimpleGraph {
        match kind {
            GraphKind::Epg => &self.epg,
            GraphKind::Complement => &self.complement,
            GraphKind::Reduced => &self.reduced,
        }
    }

    /// Elements lying in every maximal cyclic subgroup; these are exactly
    /// the isolated vertices of the complement.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.family.common_intersection()
    }

    pub fn reduced_complement(&self) -> &SimpleGraph {
        &self.reduced
    }

    /// Degree of `x` in the complement, which equals `|G| - |M_x|` with
    /// `M_x` the union of the maximal cyclic subgroups through `x`.
    pub fn complement_degree(&self, x: usize) -> Result<usize, EpgError> {
        if x >= self.group.order() {
            return Err(EpgError::ElementOutOfRange { x, order: self.group.order() });
        }
        Ok(self.complement.degree(x))
    }

    /// Colours each element by the least index of a maximal cyclic subgroup
    /// containing it. Proper for the complement, since elements sharing a
    /// cyclic subgroup are non-adjacent there.
    pub fn partition_by_maximal_cyclic(&self) -> Vec<usize> {
        self.group
            .elements()
            .map(|x| (0..self.family.len()).find(|&i| self.family.contains(i, x)).expect("x lies in <x>"))
            .collect()
    }

    /// The partition restricted to the reduced vertices.
    pub fn reduced_partition(&self) -> Vec<usize> {
        let full = self.partition_by_maximal_cyclic();
        self.reduced_index_map.iter().map(|&x| full[x]).collect()
    }

    pub fn summary(&self) -> EpgSummary {
        EpgSummary {
            name: self.name().to_string(),
            order: self.group.order(),
            cyclic: self.group.is_cyclic(),
            maximal_cyclic_count: self.family.len(),
            maximal_cyclic_sizes: self.family.size_profile(),
            isolated: self.isolated.iter().map(|&x| self.group.label(x).to_string()).collect(),
            epg_edges: self.epg.edge_count(),
            complement_edges: self.complement.edge_count(),
            reduced_vertices: self.reduced.vertex_count(),
            reduced_edges: self.reduced.edge_count(),
        }
    }

    pub fn to_dot(&self, kind: GraphKind) -> String {
        let suffix = match kind {
            GraphKind::Epg => "epg",
            GraphKind::Complement => "complement",
            GraphKind::Reduced => "reduced",
        };
        export::to_dot(self.graph(kind), &format!("{} {suffix}", self.name()))
    }
}
