//! Executable checks of the structural claims about enhanced power graphs,
//! run over the group catalog.
//!
//! Expected values live in `fixtures/claims.toml`; nothing expected is
//! written into the checks themselves.
//!
//! ```
//! use epgraph::verifier::{Status, Verifier};
//!
//! let v = Verifier::new(8).unwrap();
//! let report = v.one_component();
//! assert_eq!(report.status, Status::Pass);
//! assert_eq!(report.scope.len(), 14);
//! ```

mod claims;
mod fixtures;
mod render;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::epg::EpgBundle;
use crate::group::{catalog, GroupError, EXHAUSTIVE_CATALOG_LIMIT};
use crate::topology::DEFAULT_BUDGET;

pub use fixtures::{
    BipartiteGirthPerfect, CCyclic, ClaimText, DominatingComplete, EulerianSweep, Fixtures, NoTwoMaximal,
    SurfaceSets, MaximalCyclicRow,
};
pub use render::{render_json, render_table};

pub const CLAIM_IDS: [&str; 8] = [
    "table-maximal-cyclic",
    "no-two-maximal",
    "one-component",
    "bipartite-girth-perfect",
    "dominating-complete",
    "eulerian",
    "c-cyclic",
    "surface-classification",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifierError {
    #[error("fixtures: {0}")]
    Fixtures(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    /// The claim's hypotheses do not apply (cyclic group, empty graph).
    Vacuous,
    /// Consistent, but resting on a pinned literature value or an
    /// unfinished search.
    Partial,
    Fail,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Vacuous => "VACUOUS",
            Status::Partial => "PARTIAL",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupCheck {
    pub group: String,
    pub status: Status,
    pub observed: String,
    pub expected: String,
    /// Structure backing the verdict; always present on FAIL.
    pub witness: Option<String>,
}

impl GroupCheck {
    fn new(group: &str, ok: bool, observed: String, expected: String) -> Self {
        GroupCheck {
            group: group.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            observed,
            expected,
            witness: None,
        }
    }

    fn vacuous(group: &str, why: &str) -> Self {
        GroupCheck {
            group: group.to_string(),
            status: Status::Vacuous,
            observed: why.to_string(),
            expected: "-".to_string(),
            witness: None,
        }
    }

    fn witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }

    /// Attaches the witness only when the check failed.
    fn witness_on_fail(self, w: impl FnOnce() -> String) -> Self {
        if self.status == Status::Fail {
            let w = w();
            self.witness(w)
        } else {
            self
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub claim_id: String,
    pub claim_text: String,
    pub coverage: String,
    pub scope: Vec<String>,
    pub status: Status,
    pub per_group: Vec<GroupCheck>,
}

impl TheoremReport {
    fn assemble(id: &str, fx: &Fixtures, per_group: Vec<GroupCheck>) -> Self {
        let claim = fx.statement(id);
        let mut scope: Vec<String> = Vec::new();
        for c in &per_group {
            if !scope.contains(&c.group) {
                scope.push(c.group.clone());
            }
        }
        let status = overall(&per_group);
        let n = scope.len();
        let coverage = match claim {
            Some(c) if c.universal => format!("corroborated on {n} groups"),
            _ => format!("checked on {n} groups"),
        };
        TheoremReport {
            claim_id: id.to_string(),
            claim_text: claim.map(|c| c.statement.clone()).unwrap_or_default(),
            coverage,
            scope,
            status,
            per_group,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &GroupCheck> {
        self.per_group.iter().filter(|c| c.status == Status::Fail)
    }
}

fn overall(per_group: &[GroupCheck]) -> Status {
    let has = |s| per_group.iter().any(|c| c.status == s);
    if has(Status::Fail) {
        Status::Fail
    } else if has(Status::Partial) {
        Status::Partial
    } else if has(Status::Pass) {
        Status::Pass
    } else {
        Status::Vacuous
    }
}

/// Catalog bundles plus fixtures; each claim method produces one report.
#[derive(Debug, Clone)]
pub struct Verifier {
    fixtures: Fixtures,
    bundles: Vec<EpgBundle>,
    max_order: usize,
    budget: u64,
}

impl Verifier {
    /// Builds the enhanced power graphs of every catalog group up to
    /// `max_order` (at most 32).
    pub fn new(max_order: usize) -> Result<Self, VerifierError> {
        let groups = catalog(max_order)?;
        let bundles = groups.into_par_iter().map(EpgBundle::build).collect();
        Ok(Verifier { fixtures: Fixtures::builtin(), bundles, max_order, budget: DEFAULT_BUDGET })
    }

    pub fn with_fixtures(mut self, fixtures: Fixtures) -> Self {
        self.fixtures = fixtures;
        self
    }

    /// Node budget for each embedding search.
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn fixtures(&self) -> &Fixtures {
        &self.fixtures
    }

    pub fn bundles(&self) -> &[EpgBundle] {
        &self.bundles
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// Bundles inside the range where the catalog is complete.
    fn exhaustive(&self) -> impl Iterator<Item = &EpgBundle> {
        self.bundles.iter().filter(|b| b.group.order() <= EXHAUSTIVE_CATALOG_LIMIT)
    }

    fn per_group<F>(&self, bundles: Vec<&EpgBundle>, check: F) -> Vec<GroupCheck>
    where
        F: Fn(&EpgBundle) -> GroupCheck + Sync + Send,
    {
        bundles.into_par_iter().map(check).collect()
    }

    pub fn run(&self, id: &str) -> Option<TheoremReport> {
        Some(match id {
            "table-maximal-cyclic" => self.maximal_cyclic_table(),
            "no-two-maximal" => self.no_two_maximal(),
            "one-component" => self.one_component(),
            "bipartite-girth-perfect" => self.bipartite_girth_perfect(),
            "dominating-complete" => self.dominating_complete(),
            "eulerian" => self.eulerian(),
            "c-cyclic" => self.c_cyclic(),
            "surface-classification" => self.surface_classification(),
            _ => return None,
        })
    }

    /// All eight reports in a fixed order.
    pub fn verify_all(&self) -> Vec<TheoremReport> {
        CLAIM_IDS.iter().map(|id| self.run(id).expect("known claim id")).collect()
    }
}

/// Runs every claim over the catalog up to `max_order`.
pub fn verify_all(max_order: usize) -> Result<Vec<TheoremReport>, VerifierError> {
    Ok(Verifier::new(max_order)?.verify_all())
}

/// True iff no report failed.
pub fn all_passed(reports: &[TheoremReport]) -> bool {
    reports.iter().all(|r| r.status != Status::Fail)
}
