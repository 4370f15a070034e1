use serde::Deserialize;

use super::VerifierError;

const BUILTIN: &str = include_str!("../../fixtures/claims.toml");

/// Expected values for every claim, loaded from TOML.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct Fixtures {
    pub claims: Vec<ClaimText>,
    pub maximal_cyclic: Vec<MaximalCyclicRow>,
    pub no_two_maximal: NoTwoMaximal,
    pub bipartite_girth_perfect: BipartiteGirthPerfect,
    pub dominating_complete: DominatingComplete,
    pub eulerian: EulerianSweep,
    pub c_cyclic: CCyclic,
    pub surface: SurfaceSets,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct ClaimText {
    pub id: String,
    pub statement: String,
    /// Quantified over all finite groups, so a catalog run only corroborates.
    pub universal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct MaximalCyclicRow {
    pub group: String,
    pub count: usize,
    pub sizes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct NoTwoMaximal {
    pub forbidden_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct BipartiteGirthPerfect {
    pub noncyclic_girth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct DominatingComplete {
    pub dominating_subgroup_order: usize,
}

/// Inclusive `[lo, hi]` ranges of the family parameter n.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct EulerianSweep {
    pub dihedral_n: [usize; 2],
    pub dicyclic_n: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct CCyclic {
    pub unicyclic: Vec<String>,
    pub pentacyclic: Vec<String>,
    pub forbidden: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct SurfaceSets {
    pub outerplanar: Vec<String>,
    pub planar: Vec<String>,
    pub projective: Vec<String>,
    pub toroidal: Vec<String>,
    pub other_genus_at_least: u64,
    pub other_crosscap_at_least: u64,
    pub forbidden_crosscap: u64,
}

impl Fixtures {
    /// The fixtures shipped with the crate.
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("bundled fixtures parse")
    }

    pub fn parse(text: &str) -> Result<Self, VerifierError> {
        toml::from_str(text).map_err(|e| VerifierError::Fixtures(e.to_string()))
    }

    pub fn statement(&self, id: &str) -> Option<&ClaimText> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn maximal_cyclic_row(&self, group: &str) -> Option<&MaximalCyclicRow> {
        self.maximal_cyclic.iter().find(|r| r.group == group)
    }

    pub fn maximal_cyclic_row_mut(&mut self, group: &str) -> Option<&mut MaximalCyclicRow> {
        self.maximal_cyclic.iter_mut().find(|r| r.group == group)
    }
}
