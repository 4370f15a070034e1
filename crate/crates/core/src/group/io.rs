//! Plain-text Cayley table format.
//!
//! ```text
//! 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! e a a^2
//! ```
//!
//! The first line is the order `n`, followed by `n` rows of `n`
//! whitespace-separated 0-based indices, and an optional line of `n` labels.
//! Blank lines and lines starting with `#` are ignored.

use super::{GroupError, GroupTable, Result};

fn parse_err(line: usize, message: impl Into<String>) -> GroupError {
    GroupError::Parse { line, message: message.into() }
}

/// Parses and validates a table; `name` becomes the group's display name.
pub fn parse_table(text: &str, name: &str) -> Result<GroupTable> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (first, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let n: usize = header
        .parse()
        .map_err(|_| parse_err(first, format!("expected the group order, found `{header}`")))?;
    if n == 0 {
        return Err(parse_err(first, "group order must be positive"));
    }

    let mut rows = Vec::with_capacity(n);
    for row in 0..n {
        let (line, text) = lines
            .next()
            .ok_or_else(|| parse_err(first, format!("expected {n} table rows, found {row}")))?;
        let entries = text
            .split_whitespace()
            .enumerate()
            .map(|(col, tok)| {
                tok.parse::<usize>().map_err(|_| {
                    parse_err(line, format!("row {row}, column {col}: `{tok}` is not an index"))
                })
            })
            .collect::<Result<Vec<usize>>>()?;
        rows.push(entries);
    }
    let labels = match lines.next() {
        Some((_, text)) => Some(text.split_whitespace().map(str::to_string).collect()),
        None => None,
    };
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(line, "unexpected content after the label line"));
    }
    GroupTable::validate(&rows, labels, name)
}

/// Renders a table in the text format, labels included.
///
/// Labels containing whitespace are not representable and are replaced by
/// their indices.
pub fn write_table(g: &GroupTable) -> String {
    let mut out = format!("{}\n", g.order());
    for a in g.elements() {
        let row: Vec<String> = g.row(a).iter().map(usize::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    let plain = g.labels().iter().all(|l| !l.is_empty() && !l.contains(char::is_whitespace));
    let labels: Vec<String> = if plain {
        g.labels().to_vec()
    } else {
        g.elements().map(|i| i.to_string()).collect()
    };
    out.push_str(&labels.join(" "));
    out.push('\n');
    out
}
