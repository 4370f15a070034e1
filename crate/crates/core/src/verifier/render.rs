use std::fmt::Write;

use super::{Status, TheoremReport};

pub fn render_json(reports: &[TheoremReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

/// One summary line per claim; `verbose` adds a row per group, and failing
/// rows are always shown with their witness.
pub fn render_table(reports: &[TheoremReport], verbose: bool) -> String {
    let mut out = String::new();
    let width = reports.iter().map(|r| r.claim_id.len()).max().unwrap_or(0);
    for r in reports {
        let counts = [Status::Pass, Status::Partial, Status::Vacuous, Status::Fail]
            .map(|s| r.per_group.iter().filter(|c| c.status == s).count());
        writeln!(
            out,
            "{:<7} {:<width$}  {} (pass {}, partial {}, vacuous {}, fail {})",
            r.status.to_string(),
            r.claim_id,
            r.coverage,
            counts[0],
            counts[1],
            counts[2],
            counts[3],
        )
        .unwrap();
        for c in &r.per_group {
            let show = verbose || matches!(c.status, Status::Fail | Status::Partial);
            if !show {
                continue;
            }
            writeln!(out, "    {:<7} {:<10} observed: {}  expected: {}", c.status.to_string(), c.group, c.observed, c.expected)
                .unwrap();
            if let Some(w) = c.witness.as_ref().filter(|_| verbose || c.status != Status::Pass) {
                writeln!(out, "            {w}").unwrap();
            }
        }
    }
    out
}
