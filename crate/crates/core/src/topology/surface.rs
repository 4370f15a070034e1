use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use super::formulas::{formula_crosscap_kmn, formula_crosscap_kn, formula_genus_kmn, formula_genus_kn};
use super::rotation::{RotationSystem, Surface};
use super::search::{search_embedding, SearchOutcome, DEFAULT_BUDGET, MAX_SEARCH_VERTICES};
use super::{Result, TopologyError};
use crate::epg::EpgBundle;
use crate::graph::{
    connected_components, contains_complete, contains_complete_bipartite, contains_subdivision, SimpleGraph,
    Subdivision, SubdivisionTarget,
};

/// Directory for certificate files, read and written by [`certificate`].
pub const CERT_DIR_ENV: &str = "EPGRAPH_CERT_DIR";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlanarityCheck {
    pub holds: bool,
    /// Present whenever `holds` is false. When `holds` is true the
    /// subdivision search ran to completion.
    pub obstruction: Option<Subdivision>,
    pub edge_bound_exceeded: bool,
}

fn direct_complete(g: &SimpleGraph, r: usize, target: SubdivisionTarget) -> Result<Option<Subdivision>> {
    Ok(contains_complete(g, r)?.map(|branch| Subdivision {
        target,
        paths: target.edges().iter().map(|&(i, j)| vec![branch[i], branch[j]]).collect(),
        branch,
    }))
}

fn direct_bipartite(g: &SimpleGraph, a: usize, b: usize, target: SubdivisionTarget) -> Result<Option<Subdivision>> {
    Ok(contains_complete_bipartite(g, a, b)?.map(|w| {
        let branch: Vec<usize> = w.left.into_iter().chain(w.right).collect();
        Subdivision {
            target,
            paths: target.edges().iter().map(|&(i, j)| vec![branch[i], branch[j]]).collect(),
            branch,
        }
    }))
}

fn kuratowski_check(
    g: &SimpleGraph,
    (complete, ct): (usize, SubdivisionTarget),
    (a, b, bt): (usize, usize, SubdivisionTarget),
    edge_limit: usize,
) -> Result<PlanarityCheck> {
    let edge_bound_exceeded = g.edge_count() > edge_limit;
    // Direct subgraphs first: cheap, and they give the smallest witnesses.
    let mut obstruction = direct_complete(g, complete, ct)?;
    if obstruction.is_none() {
        obstruction = direct_bipartite(g, a, b, bt)?;
    }
    if obstruction.is_none() {
        obstruction = contains_subdivision(g, ct)?;
    }
    if obstruction.is_none() {
        obstruction = contains_subdivision(g, bt)?;
    }
    if edge_bound_exceeded && obstruction.is_none() {
        return Err(TopologyError::TracingInconsistent(
            "edge count exceeds the bound but no obstruction was found".into(),
        ));
    }
    Ok(PlanarityCheck { holds: obstruction.is_none(), obstruction, edge_bound_exceeded })
}

/// Outerplanar iff there is no subdivision of `K4` or `K2,3`.
pub fn is_outerplanar(g: &SimpleGraph) -> Result<PlanarityCheck> {
    let limit = (2 * g.vertex_count()).saturating_sub(3).max(g.vertex_count().saturating_sub(1));
    kuratowski_check(g, (4, SubdivisionTarget::K4), (2, 3, SubdivisionTarget::K23), limit)
}

/// Planar iff there is no subdivision of `K5` or `K3,3`.
pub fn is_planar(g: &SimpleGraph) -> Result<PlanarityCheck> {
    let n = g.vertex_count();
    let limit = if n >= 3 { 3 * n - 6 } else { n.saturating_sub(1) };
    kuratowski_check(g, (5, SubdivisionTarget::K5), (3, 3, SubdivisionTarget::K33), limit)
}

/// A forbidden subgraph from the obstruction menu.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Obstruction {
    Complete(usize),
    Bipartite(usize, usize),
}

impl Obstruction {
    pub fn name(self) -> String {
        match self {
            Obstruction::Complete(r) => format!("K{r}"),
            Obstruction::Bipartite(a, b) => format!("K{a},{b}"),
        }
    }

    /// (genus, crosscap) of the obstruction itself.
    pub fn bounds(self) -> (u64, u64) {
        match self {
            Obstruction::Complete(r) => (
                formula_genus_kn(r as u64).expect("menu entries are in range"),
                formula_crosscap_kn(r as u64).expect("menu entries are in range"),
            ),
            Obstruction::Bipartite(a, b) => (
                formula_genus_kmn(a as u64, b as u64).expect("menu entries are in range"),
                formula_crosscap_kmn(a as u64, b as u64).expect("menu entries are in range"),
            ),
        }
    }
}

pub const OBSTRUCTION_MENU: [Obstruction; 11] = [
    Obstruction::Complete(5),
    Obstruction::Complete(7),
    Obstruction::Complete(8),
    Obstruction::Bipartite(3, 3),
    Obstruction::Bipartite(4, 4),
    Obstruction::Bipartite(4, 5),
    Obstruction::Bipartite(4, 6),
    Obstruction::Bipartite(6, 4),
    Obstruction::Bipartite(6, 5),
    Obstruction::Bipartite(8, 4),
    Obstruction::Bipartite(5, 6),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FoundObstruction {
    pub obstruction: String,
    pub vertices: Vec<usize>,
    pub genus: u64,
    pub crosscap: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBounds {
    pub genus: u64,
    pub crosscap: u64,
    pub found: Vec<FoundObstruction>,
}

impl LowerBounds {
    /// The obstruction that sets the genus bound (first in menu order).
    pub fn genus_witness(&self) -> Option<&FoundObstruction> {
        self.found.iter().find(|f| f.genus == self.genus && self.genus > 0)
    }
}

/// Bounds from every menu graph present as a subgraph.
pub fn genus_crosscap_lower_bounds(g: &SimpleGraph) -> Result<LowerBounds> {
    let mut out = LowerBounds { genus: 0, crosscap: 0, found: Vec::new() };
    for ob in OBSTRUCTION_MENU {
        let vertices = match ob {
            Obstruction::Complete(r) => contains_complete(g, r)?,
            Obstruction::Bipartite(a, b) => contains_complete_bipartite(g, a, b)?
                .map(|w| w.left.into_iter().chain(w.right).collect()),
        };
        if let Some(vertices) = vertices {
            let (genus, crosscap) = ob.bounds();
            out.genus = out.genus.max(genus);
            out.crosscap = out.crosscap.max(crosscap);
            out.found.push(FoundObstruction { obstruction: ob.name(), vertices, genus, crosscap });
        }
    }
    Ok(out)
}

/// Part sizes (descending) if `g` is complete multipartite.
pub fn multipartite_parts(g: &SimpleGraph) -> Option<Vec<usize>> {
    let co = g.complement();
    let comps = connected_components(&co);
    for c in &comps {
        for (i, &u) in c.iter().enumerate() {
            if c[i + 1..].iter().any(|&v| !co.has_edge(u, v)) {
                return None;
            }
        }
    }
    let mut sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Some(sizes)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    Genus0,
    Genus1,
    Crosscap1,
}

impl CertificateKind {
    fn parts(self) -> (u64, bool) {
        match self {
            CertificateKind::Genus0 => (0, true),
            CertificateKind::Genus1 => (1, true),
            CertificateKind::Crosscap1 => (1, false),
        }
    }

    fn surface(self) -> Surface {
        match self.parts() {
            (t, true) => Surface::Orientable(t),
            (t, false) => Surface::NonOrientable(t),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CertificateKind::Genus0 => "genus0",
            CertificateKind::Genus1 => "genus1",
            CertificateKind::Crosscap1 => "crosscap1",
        }
    }
}

type CacheKey = (String, CertificateKind, Vec<(usize, usize)>);

fn cache() -> &'static Mutex<HashMap<CacheKey, SearchOutcome>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, SearchOutcome>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cert_path(name: &str, kind: CertificateKind) -> Option<PathBuf> {
    let dir = std::env::var_os(CERT_DIR_ENV)?;
    let safe: String = name.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    Some(PathBuf::from(dir).join(format!("{safe}-{}.cert", kind.label())))
}

fn load(path: &PathBuf, g: &SimpleGraph, kind: CertificateKind) -> Option<RotationSystem> {
    let text = std::fs::read_to_string(path).ok()?;
    let rs = RotationSystem::parse(&text).ok()?;
    let same_graph = rs.graph.vertex_count() == g.vertex_count() && rs.graph.edges().eq(g.edges());
    (same_graph && rs.verify().ok()?.surface == kind.surface()).then_some(rs)
}

/// A certificate of `kind` for `g`, cached under `name`.
///
/// Lookups go to the in-memory cache, then to the directory named by
/// [`CERT_DIR_ENV`] (files are re-verified before use), then to
/// [`search_embedding`]. Fresh certificates are written back to the
/// directory when it is set.
pub fn certificate(name: &str, g: &SimpleGraph, kind: CertificateKind, budget: u64) -> Result<SearchOutcome> {
    let key = (name.to_string(), kind, g.edges().collect::<Vec<_>>());
    if let Some(hit) = cache().lock().expect("cache lock").get(&key) {
        return Ok(hit.clone());
    }
    let path = cert_path(name, kind);
    let outcome = match path.as_ref().and_then(|p| load(p, g, kind)) {
        Some(rs) => SearchOutcome::Found(rs),
        None => {
            let (target, orientable) = kind.parts();
            let outcome = search_embedding(g, target, orientable, budget)?;
            if let (Some(p), SearchOutcome::Found(rs)) = (&path, &outcome) {
                // A failed write only loses the on-disk copy.
                let _ = p.parent().map(std::fs::create_dir_all);
                let _ = std::fs::write(p, rs.to_text());
            }
            outcome
        }
    };
    cache().lock().expect("cache lock").entry(key).or_insert_with(|| outcome.clone());
    Ok(outcome)
}

/// Interval verdict on the surfaces hosting the reduced complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceVerdict {
    pub group: String,
    /// The reduced graph is empty (cyclic group); nothing is asserted.
    pub vacuous: bool,
    pub outerplanar: bool,
    pub planar: bool,
    pub genus_lower: u64,
    pub genus_upper: Option<u64>,
    pub crosscap_lower: u64,
    pub crosscap_upper: Option<u64>,
    /// Some bound rests on a pinned literature value.
    pub pinned: bool,
    /// Some embedding search ran out of budget.
    pub budget_limited: bool,
    pub outerplanarity_obstruction: Option<Subdivision>,
    pub planarity_obstruction: Option<Subdivision>,
    pub evidence: Vec<String>,
}

impl SurfaceVerdict {
    pub fn genus(&self) -> Option<u64> {
        (self.genus_upper == Some(self.genus_lower)).then_some(self.genus_lower)
    }

    pub fn crosscap(&self) -> Option<u64> {
        (self.crosscap_upper == Some(self.crosscap_lower)).then_some(self.crosscap_lower)
    }

    /// Genus exactly 1.
    pub fn is_toroidal(&self) -> bool {
        !self.vacuous && self.genus() == Some(1)
    }

    /// Crosscap number exactly 1.
    pub fn is_projective_planar(&self) -> bool {
        !self.vacuous && self.crosscap() == Some(1)
    }
}

/// Pinned non-orientable values taken from the literature, keyed by the
/// multipartite shape of the reduced graph.
const PINNED_CROSSCAP: [(&[usize], u64, &str); 2] = [
    (&[2, 2, 2, 2], 3, "crosscap(K2,2,2,2) = 3 (Jungerman 1979)"),
    (&[3, 3, 3], 3, "crosscap(K3,3,3) = 3 (Ellingham, Stephens and Zha 2006)"),
];

fn vacuous(name: &str) -> SurfaceVerdict {
    SurfaceVerdict {
        group: name.to_string(),
        vacuous: true,
        outerplanar: true,
        planar: true,
        genus_lower: 0,
        genus_upper: Some(0),
        crosscap_lower: 0,
        crosscap_upper: Some(0),
        pinned: false,
        budget_limited: false,
        outerplanarity_obstruction: None,
        planarity_obstruction: None,
        evidence: vec!["reduced graph is empty (cyclic group)".into()],
    }
}

fn describe(s: &Subdivision, tags: &SimpleGraph) -> String {
    let names: Vec<String> = s.branch.iter().map(|&v| tags.tag(v)).collect();
    let direct = s.paths.iter().all(|p| p.len() == 2);
    format!(
        "{} {} on {{{}}}",
        s.target,
        if direct { "subgraph" } else { "subdivision" },
        names.join(", ")
    )
}

/// Combines planarity tests, obstruction bounds, closed forms, pinned
/// values and embedding certificates for the reduced complement of `bundle`.
pub fn classify_surface(bundle: &EpgBundle) -> Result<SurfaceVerdict> {
    classify_surface_with_budget(bundle, DEFAULT_BUDGET)
}

pub fn classify_surface_with_budget(bundle: &EpgBundle, budget: u64) -> Result<SurfaceVerdict> {
    let name = bundle.name();
    let r = &bundle.reduced;
    if r.vertex_count() == 0 {
        return Ok(vacuous(name));
    }
    let mut v = vacuous(name);
    v.vacuous = false;
    v.evidence.clear();

    let outer = is_outerplanar(r)?;
    v.outerplanar = outer.holds;
    match &outer.obstruction {
        Some(s) => v.evidence.push(format!("not outerplanar: {}", describe(s, r))),
        None => v.evidence.push("outerplanar: no K4 or K2,3 subdivision (exhaustive)".into()),
    }
    v.outerplanarity_obstruction = outer.obstruction;

    let planar = is_planar(r)?;
    v.planar = planar.holds;
    match &planar.obstruction {
        Some(s) => v.evidence.push(format!("not planar: {}", describe(s, r))),
        None => v.evidence.push("planar: no K5 or K3,3 subdivision (exhaustive)".into()),
    }
    v.planarity_obstruction = planar.obstruction;

    let searchable = (3..=MAX_SEARCH_VERTICES).contains(&r.vertex_count());
    let run = |v: &mut SurfaceVerdict, kind: CertificateKind| -> Result<Option<bool>> {
        if !searchable {
            v.evidence.push(format!("{} search skipped: {} vertices", kind.label(), r.vertex_count()));
            return Ok(None);
        }
        match certificate(name, r, kind, budget) {
            Ok(SearchOutcome::Found(rs)) => {
                let c = rs.verify()?;
                v.evidence.push(format!("{} certificate verified: {} faces", kind.label(), c.faces));
                Ok(Some(true))
            }
            Ok(SearchOutcome::Exhausted) => {
                v.evidence.push(format!("{} search exhausted: no such embedding", kind.label()));
                Ok(Some(false))
            }
            Err(TopologyError::BudgetExhausted { nodes }) => {
                v.budget_limited = true;
                v.evidence.push(format!("{} search stopped after {nodes} nodes", kind.label()));
                Ok(None)
            }
            Err(e) => Err(e),
        }
    };

    if v.planar {
        v.genus_lower = 0;
        v.crosscap_lower = 0;
        v.crosscap_upper = Some(0);
        v.genus_upper = match run(&mut v, CertificateKind::Genus0)? {
            Some(true) => Some(0),
            Some(false) => {
                return Err(TopologyError::TracingInconsistent(
                    "Kuratowski test and embedding search disagree on planarity".into(),
                ))
            }
            None => None,
        };
        return Ok(v);
    }

    let lb = genus_crosscap_lower_bounds(r)?;
    v.genus_lower = lb.genus.max(1);
    v.crosscap_lower = lb.crosscap.max(1);
    v.genus_upper = None;
    v.crosscap_upper = None;
    for f in &lb.found {
        v.evidence.push(format!("contains {}: genus >= {}, crosscap >= {}", f.obstruction, f.genus, f.crosscap));
    }

    let n = r.vertex_count() as u64;
    let parts = multipartite_parts(r);
    if r.is_complete() {
        let (g, c) = (formula_genus_kn(n)?, formula_crosscap_kn(n)?);
        v.genus_lower = v.genus_lower.max(g);
        v.genus_upper = Some(g);
        v.crosscap_lower = v.crosscap_lower.max(c);
        v.crosscap_upper = Some(c);
        v.evidence.push(format!("reduced graph is K{n}: genus {g}, crosscap {c} by closed form"));
    } else if let Some([a, b]) = parts.as_deref() {
        let (g, c) = (formula_genus_kmn(*a as u64, *b as u64)?, formula_crosscap_kmn(*a as u64, *b as u64)?);
        v.genus_lower = v.genus_lower.max(g);
        v.genus_upper = Some(g);
        v.crosscap_lower = v.crosscap_lower.max(c);
        v.crosscap_upper = Some(c);
        v.evidence.push(format!("reduced graph is K{a},{b}: genus {g}, crosscap {c} by closed form"));
    }
    if let Some(p) = &parts {
        for (shape, value, cite) in PINNED_CROSSCAP {
            if p == shape {
                v.crosscap_lower = value;
                v.crosscap_upper = Some(value);
                v.pinned = true;
                v.evidence.push(format!("pinned literature value: {cite}"));
            }
        }
    }

    if v.genus_lower <= 1 {
        match run(&mut v, CertificateKind::Genus1)? {
            Some(true) => v.genus_upper = Some(1),
            Some(false) => v.genus_lower = v.genus_lower.max(2),
            None => {}
        }
    }
    if v.crosscap_lower <= 1 && v.crosscap_upper.is_none() {
        match run(&mut v, CertificateKind::Crosscap1)? {
            Some(true) => v.crosscap_upper = Some(1),
            Some(false) => v.crosscap_lower = v.crosscap_lower.max(2),
            None => {}
        }
    }
    if v.genus_upper.is_some_and(|u| u < v.genus_lower) || v.crosscap_upper.is_some_and(|u| u < v.crosscap_lower) {
        return Err(TopologyError::TracingInconsistent(format!("{name}: lower bound exceeds upper bound")));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::selector::parse_selector;

    fn bundle(sel: &str) -> EpgBundle {
        EpgBundle::build(parse_selector(sel).unwrap())
    }

    #[test]
    fn planarity_examples() {
        assert!(is_outerplanar(&SimpleGraph::complete(3)).unwrap().holds);
        let s3 = bundle("S3");
        let o = is_outerplanar(&s3.reduced).unwrap();
        assert_eq!(o.obstruction.unwrap().target, SubdivisionTarget::K4);
        assert!(is_planar(&s3.reduced).unwrap().holds);

        let q8 = bundle("Q8");
        let o = is_outerplanar(&q8.reduced).unwrap();
        let w = o.obstruction.unwrap();
        assert_eq!(w.target, SubdivisionTarget::K23);
        assert!(w.validate(&q8.reduced));

        let z2z4 = bundle("Z2xZ4");
        let p = is_planar(&z2z4.reduced).unwrap();
        assert_eq!(p.obstruction.unwrap().target, SubdivisionTarget::K33);

        let d8 = bundle("D8");
        let p = is_planar(&d8.reduced).unwrap();
        assert!(p.edge_bound_exceeded);
        let w = p.obstruction.unwrap();
        assert_eq!(w.target, SubdivisionTarget::K5);
        let mut labels: Vec<String> = w.branch.iter().map(|&v| d8.reduced.tag(v)).collect();
        labels.sort();
        // x or x^3 together with the four reflections.
        assert!(labels.iter().filter(|l| l.ends_with('y')).count() == 4, "{labels:?}");
    }

    #[test]
    fn multipartite_detection() {
        assert_eq!(multipartite_parts(&SimpleGraph::complete_multipartite(&[3, 3, 3])), Some(vec![3, 3, 3]));
        assert_eq!(multipartite_parts(&SimpleGraph::complete(4)), Some(vec![1, 1, 1, 1]));
        assert_eq!(multipartite_parts(&SimpleGraph::path(4)), None);
        assert_eq!(multipartite_parts(&bundle("Z3xZ3").reduced), Some(vec![2, 2, 2, 2]));
        assert_eq!(multipartite_parts(&bundle("Z2xZ6").reduced), Some(vec![3, 3, 3]));
    }

    #[test]
    fn three_part_graph_has_no_k44() {
        let k333 = SimpleGraph::complete_multipartite(&[3, 3, 3]);
        let lb = genus_crosscap_lower_bounds(&k333).unwrap();
        assert!(lb.found.iter().all(|f| f.obstruction != "K4,4"));
        assert_eq!(lb.genus, 1);
        assert_eq!(lb.genus_witness().unwrap().obstruction, "K3,3");
    }

    #[test]
    fn lower_bound_examples() {
        let lb = genus_crosscap_lower_bounds(&bundle("D12").reduced).unwrap();
        assert_eq!((lb.genus, lb.crosscap), (3, 6));
        assert!(lb.found.iter().any(|f| f.obstruction == "K5,6"));
        let lb = genus_crosscap_lower_bounds(&bundle("Z2xZ2xZ2").reduced).unwrap();
        assert_eq!((lb.genus, lb.crosscap), (1, 3));
        let lb = genus_crosscap_lower_bounds(&SimpleGraph::cycle(6)).unwrap();
        assert_eq!((lb.genus, lb.crosscap), (0, 0));
    }

    #[test]
    fn verdicts() {
        let v = classify_surface(&bundle("Z2xZ2")).unwrap();
        assert!(v.outerplanar && v.planar && v.genus() == Some(0));
        let v = classify_surface(&bundle("Q8")).unwrap();
        assert!(!v.outerplanar && v.planar);
        let v = classify_surface(&bundle("Z2xZ6")).unwrap();
        assert!(v.is_toroidal() && v.pinned);
        assert_eq!(v.crosscap(), Some(3));
        let v = classify_surface(&bundle("D8")).unwrap();
        assert!(v.is_toroidal() && v.is_projective_planar());
        let v = classify_surface(&bundle("Z5")).unwrap();
        assert!(v.vacuous);
    }

    #[test]
    fn certificates_round_trip_through_the_directory() {
        let dir = tempfile::tempdir().unwrap();
        // Only this test sets the variable, and the cache key includes the
        // name, so other tests never see these files.
        std::env::set_var(CERT_DIR_ENV, dir.path());
        let g = SimpleGraph::complete(5);
        let out = certificate("cache-test-K5", &g, CertificateKind::Genus1, DEFAULT_BUDGET).unwrap();
        std::env::remove_var(CERT_DIR_ENV);
        let SearchOutcome::Found(rs) = out else { panic!("K5 embeds in the torus") };
        let path = dir.path().join("cache_test_K5-genus1.cert");
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(RotationSystem::parse(&text).unwrap(), rs);
        assert!(load(&path, &g, CertificateKind::Genus1).is_some());
        assert!(load(&path, &g, CertificateKind::Genus0).is_none());
        assert!(load(&path, &SimpleGraph::complete(4), CertificateKind::Genus1).is_none());
    }
}
