//! Graphviz export.

use std::collections::BTreeSet;
use std::fmt::Write;

use ramsey_stars::{Color, ColoredCompleteGraph, Embedding};

pub const PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#9a6324",
    "#469990", "#800000", "#808000", "#000075",
];

const STYLES: [&str; 4] = ["solid", "dashed", "dotted", "bold"];

/// Palette entry and line style for a 1-based color; colors past the
/// palette reuse it with the next style.
pub fn color_style(c: Color) -> (&'static str, &'static str) {
    let i = usize::from(c.max(1)) - 1;
    (
        PALETTE[i % PALETTE.len()],
        STYLES[(i / PALETTE.len()) % STYLES.len()],
    )
}

/// Undirected DOT graph; edges of `highlight` are drawn thicker.
pub fn to_dot(g: &ColoredCompleteGraph, highlight: Option<&Embedding>) -> String {
    let marked: BTreeSet<(usize, usize)> = highlight
        .map(|e| {
            e.graph_edges()
                .into_iter()
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect()
        })
        .unwrap_or_default();
    let mut out = String::new();
    writeln!(out, "graph K{} {{", g.order()).unwrap();
    writeln!(out, "  layout=circo;").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in 0..g.order() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v, c) in g.edges() {
        let (hex, style) = color_style(c);
        let width = if marked.contains(&(u, v)) { 4 } else { 1 };
        writeln!(
            out,
            "  {u} -- {v} [color=\"{hex}\", style={style}, penwidth={width}, label=\"{c}\"];"
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn palette_cycles_with_styles() {
        assert_eq!(color_style(1), (PALETTE[0], "solid"));
        assert_eq!(color_style(12), (PALETTE[11], "solid"));
        assert_eq!(color_style(13), (PALETTE[0], "dashed"));
        assert_eq!(color_style(49), (PALETTE[0], "solid"));
    }

    #[test]
    fn one_line_per_edge() {
        let g = ColoredCompleteGraph::from_fn(5, 2, |u, v| 1 + ((u + v) % 2) as Color).unwrap();
        let dot = to_dot(&g, None);
        assert_eq!(dot.matches(" -- ").count(), 10);
        assert!(dot.starts_with("graph K5 {"));
    }
}
