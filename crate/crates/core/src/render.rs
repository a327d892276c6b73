//! Graphviz DOT rendering of line classes.
//!
//! The picture is the complete graph on V(G): every vertex pair is an edge,
//! colored by the line class of that pair, with a legend listing each line's
//! member set. Two pairs share a color exactly when they induce the same
//! line. Output is plain text and byte-deterministic so figures can be
//! diffed in tests.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lines::line_partition;

pub struct RenderSpec {
    pub graph: Graph,
    /// Optional Graphviz layout engine hint (for example "circo").
    pub layout: Option<String>,
}

const PALETTE: [&str; 16] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#4699c9", "#f032e6", "#9a6324",
    "#808000", "#008080", "#e6b800", "#000075", "#800000", "#2f4f4f", "#fa8072", "#6b8e23",
];

// Style variation covers line counts past the palette size.
const STYLES: [&str; 4] = ["solid", "dashed", "dotted", "bold"];

fn edge_attrs(class: usize) -> (&'static str, &'static str) {
    (PALETTE[class % PALETTE.len()], STYLES[(class / PALETTE.len()) % STYLES.len()])
}

/// Renders the line-class figure for a graph on at least two vertices.
pub fn render_dot(spec: &RenderSpec) -> Result<String> {
    let g = &spec.graph;
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::domain(format!("rendering needs n >= 2, got {n}")));
    }
    let part = line_partition(g)?;

    let mut out = String::new();
    out.push_str("graph lines {\n");
    out.push_str(&format!(
        "  // {} vertices, {} pairs, {} distinct lines\n",
        n,
        n * (n - 1) / 2,
        part.len()
    ));
    if let Some(engine) = &spec.layout {
        out.push_str(&format!("  layout=\"{engine}\";\n"));
    }
    out.push_str("  node [shape=circle, fontsize=11, width=0.35, fixedsize=true];\n");
    for v in 0..n {
        out.push_str(&format!("  v{v} [label=\"{v}\"];\n"));
    }
    for x in 0..n {
        for y in x + 1..n {
            let class = part.class_of(x, y);
            let (color, style) = edge_attrs(class);
            let marker = if g.has_edge(x, y) { "" } else { ", penwidth=0.8" };
            out.push_str(&format!(
                "  v{x} -- v{y} [color=\"{color}\", style={style}{marker}];\n"
            ));
        }
    }
    out.push_str("  subgraph cluster_legend {\n");
    out.push_str("    label=\"lines\";\n");
    out.push_str("    node [shape=box, fontsize=10, width=0, fixedsize=false];\n");
    for (id, line) in part.classes.iter().enumerate() {
        let (color, style) = edge_attrs(id);
        out.push_str(&format!(
            "    l{id} [label=\"L{id} = {}\", color=\"{color}\", tooltip=\"{style}\"];\n",
            line.members
        ));
    }
    out.push_str("  }\n}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(g: Graph) -> String {
        render_dot(&RenderSpec {
            graph: g,
            layout: None,
        })
        .unwrap()
    }

    #[test]
    fn c4_uses_one_color_for_all_six_pairs() {
        let dot = render(Graph::cycle(4));
        assert_eq!(dot.matches(PALETTE[0]).count(), 6 + 1, "six edges plus legend");
        assert_eq!(dot.matches("l0 [").count(), 1);
        assert!(!dot.contains("l1 ["));
        assert!(dot.contains("L0 = {0, 1, 2, 3}"));
    }

    #[test]
    fn k6_prime_uses_four_colors_over_fifteen_pairs() {
        let dot = render(Graph::complete_minus_matching(3));
        assert_eq!(dot.matches(" -- ").count(), 15);
        for id in 0..4 {
            assert!(dot.contains(&format!("l{id} [")));
        }
        assert!(!dot.contains("l4 ["));
    }

    #[test]
    fn rendering_is_deterministic() {
        let g = Graph::cycle(4).glued_at(0, &Graph::cycle(4), 0).unwrap();
        assert_eq!(render(g.clone()), render(g));
    }

    #[test]
    fn rejects_tiny_graphs() {
        let r = render_dot(&RenderSpec {
            graph: Graph::complete(1),
            layout: None,
        });
        assert!(r.is_err());
    }
}
