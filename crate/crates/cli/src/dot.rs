//! Graphviz export.

use std::fmt::Write as _;

use incol_core::{Graph, IncidenceColoring};

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        if ch == '"' || ch == '\\' {
            out.push('\\');
        }
        out.push(ch);
    }
    out.push('"');
    out
}

/// An undirected `graph` block listing every vertex in id order, then every
/// edge in id order. With a coloring, edge `u -- v` is labeled
/// `"<color at u>|<color at v>"`.
pub fn export_dot(names: &[String], g: &Graph, coloring: Option<&IncidenceColoring>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        writeln!(out, "  {};", quote(&names[v.index()])).unwrap();
    }
    for (e, u, v) in g.edges() {
        let (a, b) = (quote(&names[u.index()]), quote(&names[v.index()]));
        match coloring {
            Some(c) => {
                let [cu, cv] = c.pair(e);
                writeln!(out, "  {a} -- {b} [label=\"{cu}|{cv}\"];").unwrap();
            }
            None => writeln!(out, "  {a} -- {b};").unwrap(),
        }
    }
    out.push_str("}\n");
    out
}
