//! Edge-list and coloring text formats.
//!
//! Input lines hold one token (an isolated vertex), two tokens (an edge) or
//! four tokens (an edge with the colors at its two ends). `#` starts a
//! comment; a `# palette <k>` comment marks the file as a coloring even
//! when it has no edges. Vertex tokens are interned in order of first
//! appearance.

use std::collections::HashMap;
use std::fmt::Write as _;

use incol_core::{palette_count, Color, Graph, IncidenceColoring, VertexId};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected 1, 2 or 4 tokens, found {0}")]
    TokenCount(usize),
    #[error("bad color {0:?}: colors are positive integers")]
    BadColor(String),
    #[error("loop at {0}")]
    SelfLoop(String),
    #[error("edge {0} {1} appears twice")]
    DuplicateEdge(String, String),
    #[error("edge has no colors but earlier edges do")]
    MissingColors,
    #[error("edge has colors but earlier edges do not")]
    UnexpectedColors,
}

/// A graph read from text, with the original vertex tokens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub names: Vec<String>,
    pub graph: Graph,
    /// Present when the edge lines carry colors.
    pub coloring: Option<IncidenceColoring>,
}

impl Document {
    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.index()]
    }

    /// A document naming vertex `i` by its number.
    pub fn numbered(graph: Graph, coloring: Option<IncidenceColoring>) -> Document {
        Document {
            names: (0..graph.vertex_count()).map(|i| i.to_string()).collect(),
            graph,
            coloring,
        }
    }
}

pub fn parse(text: &str) -> Result<Document, ParseError> {
    let mut names: Vec<String> = Vec::new();
    let mut ids: HashMap<String, VertexId> = HashMap::new();
    let mut edges: Vec<(VertexId, VertexId, Option<[Color; 2]>)> = Vec::new();
    let mut seen: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    let mut colored: Option<bool> = None;
    let mut palette_line = false;

    let mut intern = |tok: &str| -> VertexId {
        *ids.entry(tok.to_string()).or_insert_with(|| {
            names.push(tok.to_string());
            VertexId(names.len() - 1)
        })
    };

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |kind| ParseError { line, kind };
        let (body, comment) = raw.split_once('#').unwrap_or((raw, ""));
        palette_line |= comment.trim_start().starts_with("palette");
        let toks: Vec<&str> = body.split_whitespace().collect();
        let colors = match toks.len() {
            0 => continue,
            1 => {
                intern(toks[0]);
                continue;
            }
            2 => None,
            4 => {
                let color = |s: &str| match s.parse::<Color>() {
                    Ok(c) if c > 0 => Ok(c),
                    _ => Err(err(ParseErrorKind::BadColor(s.to_string()))),
                };
                Some([color(toks[2])?, color(toks[3])?])
            }
            n => return Err(err(ParseErrorKind::TokenCount(n))),
        };
        match (colored, colors.is_some()) {
            (Some(true), false) => return Err(err(ParseErrorKind::MissingColors)),
            (Some(false), true) => return Err(err(ParseErrorKind::UnexpectedColors)),
            _ => colored = Some(colors.is_some()),
        }
        if toks[0] == toks[1] {
            return Err(err(ParseErrorKind::SelfLoop(toks[0].to_string())));
        }
        let (u, v) = (intern(toks[0]), intern(toks[1]));
        let key = (u.min(v), u.max(v));
        if seen.insert(key, line).is_some() {
            return Err(err(ParseErrorKind::DuplicateEdge(
                toks[0].to_string(),
                toks[1].to_string(),
            )));
        }
        edges.push((u, v, colors));
    }

    let graph = Graph::with_edges(names.len(), edges.iter().map(|&(u, v, _)| (u.index(), v.index())))
        .expect("loops and duplicates were rejected above");
    // an edgeless coloring is marked only by its palette line
    let is_coloring = colored.unwrap_or(palette_line);
    let coloring = is_coloring.then(|| {
        let mut c = IncidenceColoring::uncolored(edges.len());
        for (e, &(u, v, colors)) in graph.edges().map(|(e, _, _)| e).zip(&edges) {
            let [cu, cv] = colors.expect("every edge is colored");
            // stored pairs follow ascending vertex ids
            c.set_pair(e, if u < v { [cu, cv] } else { [cv, cu] });
        }
        c
    });
    Ok(Document {
        names,
        graph,
        coloring,
    })
}

/// Vertex tokens must re-intern to the same ids. That holds when edges,
/// written lower id first, introduce the vertices in id order; otherwise
/// every vertex is declared up front.
fn needs_declarations(g: &Graph) -> bool {
    let mut next = 0;
    for (_, u, v) in g.edges() {
        for w in [u, v] {
            if w.index() == next {
                next += 1;
            } else if w.index() > next {
                return true;
            }
        }
    }
    next != g.vertex_count()
}

/// Writes `doc` in the input format. With a coloring, every edge line
/// carries the two colors and a final `# palette <k>` line follows.
/// Parsing the output gives back the same graph and coloring.
pub fn print(doc: &Document) -> String {
    let mut out = String::new();
    let g = &doc.graph;
    if needs_declarations(g) {
        for v in g.vertices() {
            writeln!(out, "{}", doc.name(v)).unwrap();
        }
    }
    for (e, u, v) in g.edges() {
        match &doc.coloring {
            Some(c) => {
                let [cu, cv] = c.pair(e);
                writeln!(out, "{} {} {cu} {cv}", doc.name(u), doc.name(v)).unwrap();
            }
            None => writeln!(out, "{} {}", doc.name(u), doc.name(v)).unwrap(),
        }
    }
    if let Some(c) = &doc.coloring {
        writeln!(out, "# palette {}", palette_count(c)).unwrap();
    }
    out
}
