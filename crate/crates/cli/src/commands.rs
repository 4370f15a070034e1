use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use epgraph::epg::{EpgBundle, GraphKind};
use epgraph::graph::{
    chromatic_number, clique_number, connected_components, cyclomatic_number, girth, is_bipartite, is_eulerian,
    SimpleGraph,
};
use epgraph::group::io::{parse_table, write_table};
use epgraph::group::selector::parse_selector;
use epgraph::group::{are_isomorphic, catalog, GroupTable, CURATED_EXTENSION_LIMIT};
use epgraph::topology::{certificate, classify_surface_with_budget, CertificateKind, SearchOutcome, SurfaceVerdict};
use epgraph::verifier::{all_passed, render_json, render_table, Verifier, CLAIM_IDS};
use serde_json::{json, Value};

use crate::{Command, Format, GraphArg, GroupArgs, Outcome, ShowFormat};

const SELECTOR_HELP: &str = "selectors look like Q8, D:12, D8, Zn:7, Z7, S3, A4 or Z2xZ6";

pub fn run(command: &Command, out: &mut impl Write) -> Result<Outcome> {
    match command {
        Command::List { max_order, format } => list(*max_order, *format, out),
        Command::Show { group, format } => show(&load(group)?, *format, out),
        Command::Build { group, graph, format } => build(&load(group)?, *graph, *format, out),
        Command::Invariants { group, format } => invariants(&load(group)?, *format, out),
        Command::Classify { group, budget, certificates, format } => {
            classify(&load(group)?, *budget, *certificates, *format, out)
        }
        Command::Verify { max_order, all: _, claim, budget, format, verbose } => {
            verify(*max_order, claim, *budget, *format, *verbose, out)
        }
        Command::Ingest { file, name, compare, format } => ingest(file, name.as_deref(), compare.as_deref(), *format, out),
    }
}

fn load(args: &GroupArgs) -> Result<GroupTable> {
    match (&args.group, &args.file) {
        (Some(sel), _) => parse_selector(sel).with_context(|| format!("cannot build `{sel}`; {SELECTOR_HELP}")),
        (None, Some(path)) => read_table(path, None),
        (None, None) => bail!("give --group or --file"),
    }
}

fn read_table(path: &Path, name: Option<&str>) -> Result<GroupTable> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("G");
    parse_table(&text, name.unwrap_or(stem))
        .with_context(|| format!("{} is not a valid Cayley table file", path.display()))
}

fn no_dot(format: Format, what: &str) -> Result<()> {
    if format == Format::Dot {
        bail!("--format dot applies to `build`; use text or json for {what}");
    }
    Ok(())
}

fn emit_json(value: &Value, out: &mut impl Write) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn labels(g: &GroupTable, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| g.label(x).to_string()).collect()
}

fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn list(max_order: usize, format: Format, out: &mut impl Write) -> Result<Outcome> {
    no_dot(format, "list")?;
    if !(1..=CURATED_EXTENSION_LIMIT).contains(&max_order) {
        bail!("--max-order must be between 1 and {CURATED_EXTENSION_LIMIT}");
    }
    let rows: Vec<Value> = catalog(max_order)?
        .iter()
        .map(|g| {
            let fam = g.maximal_cyclic_subgroups();
            json!({
                "name": g.name(),
                "order": g.order(),
                "cyclic": g.is_cyclic(),
                "maximal_cyclic_count": fam.len(),
                "maximal_cyclic_sizes": fam.size_profile(),
            })
        })
        .collect();
    if format == Format::Json {
        emit_json(&Value::Array(rows), out)?;
        return Ok(Outcome::Ok);
    }
    writeln!(out, "{:<12} {:>5} {:>4}  sizes", "group", "order", "|M|")?;
    for r in &rows {
        let sizes: Vec<String> = r["maximal_cyclic_sizes"].as_array().unwrap().iter().map(|v| v.to_string()).collect();
        writeln!(
            out,
            "{:<12} {:>5} {:>4}  [{}]",
            r["name"].as_str().unwrap(),
            r["order"].as_u64().unwrap(),
            r["maximal_cyclic_count"].as_u64().unwrap(),
            sizes.join(", ")
        )?;
    }
    Ok(Outcome::Ok)
}

fn show(g: &GroupTable, format: ShowFormat, out: &mut impl Write) -> Result<Outcome> {
    if format == ShowFormat::Table {
        write!(out, "{}", write_table(g))?;
        return Ok(Outcome::Ok);
    }
    let fam = g.maximal_cyclic_subgroups();
    let isolated = labels(g, &fam.common_intersection());
    if format == ShowFormat::Json {
        let subgroups: Vec<Value> = fam
            .subgroups
            .iter()
            .zip(&fam.generators)
            .map(|(m, gens)| json!({ "elements": labels(g, m), "generators": labels(g, gens) }))
            .collect();
        emit_json(
            &json!({
                "name": g.name(),
                "order": g.order(),
                "cyclic": g.is_cyclic(),
                "abelian": g.is_abelian(),
                "maximal_cyclic_count": fam.len(),
                "maximal_cyclic_sizes": fam.size_profile(),
                "maximal_cyclic_subgroups": subgroups,
                "isolated": isolated,
            }),
            out,
        )?;
        return Ok(Outcome::Ok);
    }
    let kind = match (g.is_cyclic(), g.is_abelian()) {
        (true, _) => "cyclic",
        (false, true) => "abelian",
        (false, false) => "non-abelian",
    };
    writeln!(out, "{} (order {}, {kind})", g.name(), g.order())?;
    writeln!(out, "|M| = {}", fam.len())?;
    writeln!(out, "sizes {:?}", fam.size_profile())?;
    for (m, gens) in fam.subgroups.iter().zip(&fam.generators) {
        writeln!(out, "  <{}> = {}", g.label(gens[0]), braces(&labels(g, m)))?;
    }
    writeln!(out, "isolated {}", braces(&isolated))?;
    Ok(Outcome::Ok)
}

fn graph_kind(arg: GraphArg) -> GraphKind {
    match arg {
        GraphArg::Epg => GraphKind::Epg,
        GraphArg::Complement => GraphKind::Complement,
        GraphArg::Reduced => GraphKind::Reduced,
    }
}

fn build(g: &GroupTable, graph: GraphArg, format: Format, out: &mut impl Write) -> Result<Outcome> {
    let bundle = EpgBundle::build(g.clone());
    let kind = graph_kind(graph);
    let h = bundle.graph(kind);
    match format {
        Format::Dot => write!(out, "{}", bundle.to_dot(kind))?,
        Format::Json => {
            let vertices: Vec<String> = (0..h.vertex_count()).map(|v| h.tag(v)).collect();
            let edges: Vec<[usize; 2]> = h.edges().map(|(u, v)| [u, v]).collect();
            emit_json(
                &json!({
                    "group": g.name(),
                    "graph": format!("{graph:?}").to_lowercase(),
                    "vertices": vertices,
                    "edges": edges,
                }),
                out,
            )?;
        }
        Format::Text => {
            writeln!(out, "{} vertices, {} edges", h.vertex_count(), h.edge_count())?;
            for v in 0..h.vertex_count() {
                let nbrs: Vec<String> = h.neighbors(v).map(|w| h.tag(w)).collect();
                writeln!(out, "{}: {}", h.tag(v), nbrs.join(" "))?;
            }
        }
    }
    Ok(Outcome::Ok)
}

fn reduced_invariants(r: &SimpleGraph) -> Result<Value> {
    if r.vertex_count() == 0 {
        return Ok(json!({ "vertices": 0, "edges": 0 }));
    }
    Ok(json!({
        "vertices": r.vertex_count(),
        "edges": r.edge_count(),
        "eulerian": is_eulerian(r, false),
        "cyclomatic_number": cyclomatic_number(r)?,
        "dominating_vertex": r.dominating_vertex().map(|v| r.tag(v)),
        "complete": r.is_complete(),
    }))
}

fn invariants(g: &GroupTable, format: Format, out: &mut impl Write) -> Result<Outcome> {
    no_dot(format, "invariants")?;
    let b = EpgBundle::build(g.clone());
    let c = &b.complement;
    let big: Vec<usize> = connected_components(c).iter().map(Vec::len).filter(|&n| n > 1).collect();
    let omega = clique_number(c).context("clique number")?;
    let chi = chromatic_number(c, Some(&b.partition_by_maximal_cyclic())).context("chromatic number")?;
    let value = json!({
        "group": g.name(),
        "order": g.order(),
        "maximal_cyclic_count": b.family.len(),
        "complement": {
            "edges": c.edge_count(),
            "component_sizes": big,
            "isolated": labels(g, &b.isolated),
            "bipartite": is_bipartite(c).is_bipartite(),
            "girth": girth(c).to_string(),
            "clique_number": omega.size,
            "chromatic_number": chi.count,
        },
        "reduced": reduced_invariants(&b.reduced)?,
    });
    if format == Format::Json {
        emit_json(&value, out)?;
        return Ok(Outcome::Ok);
    }
    writeln!(out, "{} (order {}, |M| = {})", g.name(), g.order(), b.family.len())?;
    let cv = &value["complement"];
    writeln!(out, "complement: {} edges", cv["edges"])?;
    writeln!(out, "  components of size >= 2: {}", cv["component_sizes"])?;
    writeln!(out, "  isolated: {}", braces(&labels(g, &b.isolated)))?;
    writeln!(out, "  bipartite: {}", cv["bipartite"])?;
    writeln!(out, "  girth: {}", girth(c))?;
    writeln!(out, "  clique number: {}", omega.size)?;
    writeln!(out, "  chromatic number: {}", chi.count)?;
    let rv = &value["reduced"];
    writeln!(out, "reduced: {} vertices, {} edges", rv["vertices"], rv["edges"])?;
    if b.reduced.vertex_count() > 0 {
        writeln!(out, "  eulerian: {}", rv["eulerian"])?;
        writeln!(out, "  cyclomatic number: {}", rv["cyclomatic_number"])?;
        let dom = b.reduced.dominating_vertex().map_or("none".to_string(), |v| b.reduced.tag(v));
        writeln!(out, "  dominating vertex: {dom}")?;
        writeln!(out, "  complete: {}", rv["complete"])?;
    }
    Ok(Outcome::Ok)
}

fn found_certificates(b: &EpgBundle, v: &SurfaceVerdict, budget: u64) -> Result<Vec<(CertificateKind, String)>> {
    let mut certs = Vec::new();
    for kind in [CertificateKind::Genus0, CertificateKind::Genus1, CertificateKind::Crosscap1] {
        let verified = format!("{} certificate verified", kind.label());
        if !v.evidence.iter().any(|e| e.starts_with(&verified)) {
            continue;
        }
        if let SearchOutcome::Found(rs) = certificate(b.name(), &b.reduced, kind, budget)? {
            certs.push((kind, rs.to_text()));
        }
    }
    Ok(certs)
}

fn bound(lo: u64, hi: Option<u64>) -> String {
    match hi {
        Some(h) if h == lo => lo.to_string(),
        Some(h) => format!("{lo}..{h}"),
        None => format!(">= {lo}"),
    }
}

fn classify(g: &GroupTable, budget: u64, show_certs: bool, format: Format, out: &mut impl Write) -> Result<Outcome> {
    no_dot(format, "classify")?;
    let b = EpgBundle::build(g.clone());
    let v = classify_surface_with_budget(&b, budget)?;
    let certs = if show_certs { found_certificates(&b, &v, budget)? } else { Vec::new() };
    if format == Format::Json {
        let mut value = serde_json::to_value(&v)?;
        if show_certs {
            let c: serde_json::Map<String, Value> =
                certs.iter().map(|(k, t)| (k.label().to_string(), Value::String(t.clone()))).collect();
            value["certificates"] = Value::Object(c);
        }
        emit_json(&value, out)?;
        return Ok(Outcome::Ok);
    }
    writeln!(out, "{}: reduced complement on {} vertices", g.name(), b.reduced.vertex_count())?;
    if v.vacuous {
        writeln!(out, "empty reduced graph (cyclic group)")?;
        return Ok(Outcome::Ok);
    }
    writeln!(out, "outerplanar: {}", v.outerplanar)?;
    writeln!(out, "planar: {}", v.planar)?;
    writeln!(out, "genus: {}", bound(v.genus_lower, v.genus_upper))?;
    writeln!(out, "crosscap: {}", bound(v.crosscap_lower, v.crosscap_upper))?;
    writeln!(out, "toroidal: {}", v.is_toroidal())?;
    writeln!(out, "projective-planar: {}", v.is_projective_planar())?;
    if v.pinned {
        writeln!(out, "note: relies on a pinned literature value")?;
    }
    if v.budget_limited {
        writeln!(out, "note: an embedding search ran out of budget")?;
    }
    writeln!(out, "evidence:")?;
    for e in &v.evidence {
        writeln!(out, "  {e}")?;
    }
    for (kind, text) in &certs {
        writeln!(out, "certificate {}:", kind.label())?;
        write!(out, "{text}")?;
    }
    Ok(Outcome::Ok)
}

fn verify(
    max_order: usize,
    claims: &[String],
    budget: u64,
    format: Format,
    verbose: bool,
    out: &mut impl Write,
) -> Result<Outcome> {
    no_dot(format, "verify")?;
    if let Some(bad) = claims.iter().find(|c| !CLAIM_IDS.contains(&c.as_str())) {
        bail!("unknown claim `{bad}`; known claims: {}", CLAIM_IDS.join(", "));
    }
    if !(1..=CURATED_EXTENSION_LIMIT).contains(&max_order) {
        bail!("--max-order must be between 1 and {CURATED_EXTENSION_LIMIT}");
    }
    let v = Verifier::new(max_order)?.with_budget(budget);
    let reports = if claims.is_empty() {
        v.verify_all()
    } else {
        claims.iter().map(|c| v.run(c).expect("id checked above")).collect()
    };
    match format {
        Format::Json => writeln!(out, "{}", render_json(&reports))?,
        _ => write!(out, "{}", render_table(&reports, verbose))?,
    }
    Ok(if all_passed(&reports) { Outcome::Ok } else { Outcome::Failed })
}

fn ingest(path: &Path, name: Option<&str>, compare: Option<&str>, format: Format, out: &mut impl Write) -> Result<Outcome> {
    no_dot(format, "ingest")?;
    let g = read_table(path, name)?;
    let fam = g.maximal_cyclic_subgroups();
    let iso = match compare {
        Some(sel) => {
            let h = parse_selector(sel).with_context(|| format!("cannot build `{sel}`; {SELECTOR_HELP}"))?;
            Some((sel, are_isomorphic(&g, &h)))
        }
        None => None,
    };
    if format == Format::Json {
        emit_json(
            &json!({
                "name": g.name(),
                "order": g.order(),
                "cyclic": g.is_cyclic(),
                "abelian": g.is_abelian(),
                "maximal_cyclic_count": fam.len(),
                "maximal_cyclic_sizes": fam.size_profile(),
                "isomorphic": iso.map(|(_, i)| i),
            }),
            out,
        )?;
    } else {
        writeln!(out, "{}: valid group table of order {}", g.name(), g.order())?;
        writeln!(out, "cyclic: {}, abelian: {}", g.is_cyclic(), g.is_abelian())?;
        writeln!(out, "|M| = {}, sizes {:?}", fam.len(), fam.size_profile())?;
        if let Some((sel, i)) = iso {
            writeln!(out, "isomorphic to {sel}: {}", if i { "yes" } else { "no" })?;
        }
    }
    Ok(match iso {
        Some((_, false)) => Outcome::Failed,
        _ => Outcome::Ok,
    })
}
