//! Plain-text edge-list stanzas: an optional name line, a vertex count, then
//! one "u v" line per edge. Blank lines separate stanzas. This is the export
//! format of the catalog and an accepted input format for single graphs.

use crate::catalog::catalog;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Writes one stanza.
pub fn write_stanza(name: Option<&str>, g: &Graph) -> String {
    let mut out = String::new();
    if let Some(name) = name {
        out.push_str(name);
        out.push('\n');
    }
    out.push_str(&g.vertex_count().to_string());
    out.push('\n');
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// The whole catalog as edge-list stanzas, in catalog order.
pub fn catalog_edgelist() -> String {
    let mut out = String::new();
    for (i, e) in catalog().iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&write_stanza(Some(e.name), &e.graph));
    }
    out
}

/// Parses edge-list stanzas. Errors carry the byte offset of the offending
/// line.
pub fn parse_edgelist(text: &str) -> Result<Vec<(Option<String>, Graph)>> {
    let mut out = Vec::new();
    let mut name: Option<String> = None;
    let mut current: Option<Graph> = None;
    let mut offset = 0usize;
    for raw in text.split_inclusive('\n') {
        let line_start = offset;
        offset += raw.len();
        let line = raw.trim_end_matches(['\n', '\r']).trim();
        if line.is_empty() {
            if let Some(g) = current.take() {
                out.push((name.take(), g));
            } else if name.is_some() {
                return Err(Error::parse(line_start, "stanza name without a vertex count"));
            }
            continue;
        }
        match current.as_mut() {
            None => {
                if let Ok(n) = line.parse::<usize>() {
                    current = Some(Graph::empty(n)?);
                } else if name.is_none() {
                    name = Some(line.to_string());
                } else {
                    return Err(Error::parse(
                        line_start,
                        format!("expected a vertex count, found {line:?}"),
                    ));
                }
            }
            Some(g) => {
                let mut it = line.split_whitespace();
                let (u, v) = match (it.next(), it.next(), it.next()) {
                    (Some(u), Some(v), None) => (u, v),
                    _ => {
                        return Err(Error::parse(
                            line_start,
                            format!("expected an edge line \"u v\", found {line:?}"),
                        ))
                    }
                };
                let parse_endpoint = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| Error::parse(line_start, format!("bad endpoint {s:?}")))
                };
                g.add_edge(parse_endpoint(u)?, parse_endpoint(v)?)
                    .map_err(|e| Error::parse(line_start, e.to_string()))?;
            }
        }
    }
    if let Some(g) = current.take() {
        out.push((name.take(), g));
    } else if name.is_some() {
        return Err(Error::parse(offset, "stanza name without a vertex count"));
    }
    Ok(out)
}
