use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::{Color, EdgeId, Graph, IncidenceColoring, VertexId};
use crate::{Error, Result};

/// The four configurations pasted onto members of class `P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GadgetKind {
    G2,
    G4,
    G8,
    /// Ladder of length `t >= 1` replacing an edge.
    H(usize),
}

impl GadgetKind {
    /// True for the kinds pasted at a degree-2 vertex.
    pub fn replaces_vertex(self) -> bool {
        !matches!(self, GadgetKind::H(_))
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GadgetKind::G2 => f.write_str("g2"),
            GadgetKind::G4 => f.write_str("g4"),
            GadgetKind::G8 => f.write_str("g8"),
            GadgetKind::H(t) => write!(f, "h{t}"),
        }
    }
}

impl FromStr for GadgetKind {
    type Err = Error;

    /// Accepts `g2`, `g4`, `g8` and `h<t>` with `t >= 1`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "g2" => Ok(GadgetKind::G2),
            "g4" => Ok(GadgetKind::G4),
            "g8" => Ok(GadgetKind::G8),
            other => match other.strip_prefix('h').map(str::parse::<usize>) {
                Some(Ok(t)) if t >= 1 => Ok(GadgetKind::H(t)),
                _ => Err(Error::InvalidGadget),
            },
        }
    }
}

/// Endpoint of a template edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum End {
    Inner(usize),
    /// Attaches to `z1`.
    X,
    /// Attaches to `z2`.
    Y,
}

/// Interior vertices and edges of a configuration. The two boundary edges
/// are the only ones touching `X` and `Y`.
#[derive(Debug, Clone)]
pub(crate) struct Template {
    pub(crate) inner: usize,
    pub(crate) edges: Vec<(End, End)>,
}

const G2_EDGES: [(End, End); 5] = {
    use End::*;
    // u, v, w
    [
        (Inner(0), Inner(1)),
        (Inner(0), Inner(2)),
        (Inner(1), Inner(2)),
        (Inner(1), X),
        (Inner(2), Y),
    ]
};

const G4_EDGES: [(End, End); 8] = {
    use End::*;
    // u0, u1, v0, v1, w
    [
        (Inner(0), Inner(1)),
        (Inner(0), Inner(3)),
        (Inner(0), Inner(4)),
        (Inner(1), Inner(2)),
        (Inner(2), Inner(3)),
        (Inner(2), Inner(4)),
        (Inner(1), X),
        (Inner(3), Y),
    ]
};

const G8_EDGES: [(End, End); 8] = {
    use End::*;
    // u0, u1, u2, v0, v1
    [
        (Inner(0), Inner(1)),
        (Inner(1), Inner(2)),
        (Inner(0), Inner(3)),
        (Inner(0), Inner(4)),
        (Inner(3), Inner(4)),
        (Inner(2), Inner(3)),
        (Inner(2), X),
        (Inner(4), Y),
    ]
};

/// Ladder vertex `x_i` (`y_i` when `y`), with `x_t`, `y_t` the terminals.
fn rail(t: usize, i: usize, y: bool) -> End {
    if i == t {
        if y {
            End::Y
        } else {
            End::X
        }
    } else {
        End::Inner(2 + 2 * i + usize::from(y))
    }
}

impl Template {
    pub(crate) fn of(kind: GadgetKind) -> Result<Template> {
        let (inner, edges) = match kind {
            GadgetKind::G2 => (3, G2_EDGES.to_vec()),
            GadgetKind::G4 => (5, G4_EDGES.to_vec()),
            GadgetKind::G8 => (5, G8_EDGES.to_vec()),
            GadgetKind::H(0) => return Err(Error::InvalidGadget),
            GadgetKind::H(t) => {
                use End::*;
                // x', y', x0, y0, x1, y1, ..., x_{t-1}, y_{t-1}
                let mut edges = Vec::from([
                    (Inner(0), Inner(1)),
                    (Inner(0), Inner(3)),
                    (Inner(2), Inner(1)),
                    (Inner(0), Inner(2)),
                    (Inner(1), Inner(3)),
                ]);
                for i in 0..t {
                    edges.push((rail(t, i, false), rail(t, i + 1, false)));
                    edges.push((rail(t, i, true), rail(t, i + 1, true)));
                    if i + 1 < t {
                        edges.push((rail(t, i + 1, false), rail(t, i + 1, true)));
                    }
                }
                (2 * t + 2, edges)
            }
        };
        Ok(Template { inner, edges })
    }

    /// Indices of the edges entering `X` and `Y`.
    pub(crate) fn boundary(&self) -> [usize; 2] {
        let find = |end: End| {
            self.edges
                .iter()
                .position(|&(a, b)| a == end || b == end)
                .expect("templates touch both terminals")
        };
        [find(End::X), find(End::Y)]
    }
}

fn labels(kind: GadgetKind) -> Vec<String> {
    let fixed = |names: &[&str]| names.iter().map(|s| s.to_string()).collect();
    match kind {
        GadgetKind::G2 => fixed(&["u", "v", "w", "x", "y"]),
        GadgetKind::G4 => fixed(&["u0", "u1", "v0", "v1", "w", "x", "y"]),
        GadgetKind::G8 => fixed(&["u0", "u1", "u2", "v0", "v1", "x", "y"]),
        GadgetKind::H(t) => {
            let mut out = Vec::from(["x'".to_string(), "y'".to_string()]);
            for i in 0..t {
                out.push(format!("x{i}"));
                out.push(format!("y{i}"));
            }
            out.push(format!("x{t}"));
            out.push(format!("y{t}"));
            out
        }
    }
}

/// A configuration on its own: interior vertices plus the two outer
/// boundary vertices, each of degree one.
///
/// Vertex `i < inner_count()` is interior role `i`; the last two vertices
/// are the boundary ends (`x`, `y` or `x_t`, `y_t`). Edge ids follow the
/// template order used by the extenders.
#[derive(Debug, Clone)]
pub struct Gadget {
    kind: GadgetKind,
    labels: Vec<String>,
    graph: Graph,
    boundary: [EdgeId; 2],
}

impl Gadget {
    pub fn new(kind: GadgetKind) -> Result<Gadget> {
        let tpl = Template::of(kind)?;
        let m = tpl.inner;
        let id = |end: End| match end {
            End::Inner(i) => i,
            End::X => m,
            End::Y => m + 1,
        };
        let graph = Graph::with_edges(m + 2, tpl.edges.iter().map(|&(a, b)| (id(a), id(b))))?;
        let [bx, by] = tpl.boundary();
        Ok(Gadget {
            kind,
            labels: labels(kind),
            graph,
            boundary: [EdgeId(bx), EdgeId(by)],
        })
    }

    pub fn kind(&self) -> GadgetKind {
        self.kind
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn inner_count(&self) -> usize {
        self.graph.vertex_count() - 2
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.index()]
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label).map(VertexId)
    }

    /// Edge between two labeled vertices.
    pub fn edge(&self, a: &str, b: &str) -> Option<EdgeId> {
        self.graph.edge_between(self.vertex(a)?, self.vertex(b)?)
    }

    /// The two edges through which the configuration meets the host:
    /// `vx, wy` / `u1x, v1y` / `u2x, v1y` / `x_{t-1}x_t, y_{t-1}y_t`.
    pub fn boundary(&self) -> [EdgeId; 2] {
        self.boundary
    }
}

/// Vertex roles of `K4+`: the subdivision vertex `s`, its neighbors `a`, `b`,
/// and the remaining pair `c`, `d`.
pub const K4_PLUS_EDGES: [(usize, usize); 7] = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// A conflict-free 7-coloring of [`k4_plus`], found once by the exact oracle.
const K4_PLUS_PAIRS: [[Color; 2]; 7] = [[1, 2], [3, 4], [3, 5], [6, 7], [6, 7], [1, 5], [2, 4]];

/// `K4` with one edge subdivided: 5 vertices, 7 edges, vertex 0 of degree 2.
pub fn k4_plus() -> Graph {
    Graph::with_edges(5, K4_PLUS_EDGES).expect("fixed simple graph")
}

pub fn k4_plus_coloring() -> IncidenceColoring {
    IncidenceColoring::from_pairs(K4_PLUS_PAIRS.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{palette_count, verify};
    use crate::oracle::feasible;

    #[test]
    fn k4_plus_shape_and_coloring() {
        let g = k4_plus();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 7));
        assert_eq!(2 * g.edge_count(), 14);
        let c = k4_plus_coloring();
        assert!(verify(&g, &c).is_ok());
        assert_eq!(palette_count(&c), 7);
        assert!(feasible(&g, 6).unwrap().is_infeasible());
    }

    #[test]
    fn gadget_edge_counts_and_degrees() {
        let cases = [
            (GadgetKind::G2, 5, 5),
            (GadgetKind::G4, 7, 8),
            (GadgetKind::G8, 7, 8),
            (GadgetKind::H(1), 6, 7),
            (GadgetKind::H(2), 8, 10),
            (GadgetKind::H(3), 10, 13),
        ];
        for (kind, n, m) in cases {
            let gad = Gadget::new(kind).unwrap();
            let g = gad.graph();
            assert_eq!((g.vertex_count(), g.edge_count()), (n, m), "{kind}");
            let inner_deg2 = (0..gad.inner_count())
                .filter(|&i| g.degree(VertexId(i)) == 2)
                .count();
            assert_eq!(inner_deg2, usize::from(kind.replaces_vertex()), "{kind}");
            for i in 0..gad.inner_count() {
                assert!(g.degree(VertexId(i)) >= 2);
                assert!(g.degree(VertexId(i)) <= 3);
            }
            assert_eq!(g.degree(VertexId(n - 2)), 1);
            assert_eq!(g.degree(VertexId(n - 1)), 1);
        }
    }

    #[test]
    fn named_edges() {
        let g4 = Gadget::new(GadgetKind::G4).unwrap();
        for (a, b) in [("u0", "u1"), ("u0", "v1"), ("u0", "w"), ("u1", "v0"), ("v0", "v1"), ("v0", "w")] {
            assert!(g4.edge(a, b).is_some(), "{a}{b}");
        }
        assert_eq!(g4.boundary(), [g4.edge("u1", "x").unwrap(), g4.edge("v1", "y").unwrap()]);
        let h2 = Gadget::new(GadgetKind::H(2)).unwrap();
        assert_eq!(h2.boundary(), [h2.edge("x1", "x2").unwrap(), h2.edge("y1", "y2").unwrap()]);
        assert!(h2.edge("x1", "y1").is_some());
        assert!(h2.edge("x0", "y0").is_none());
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("g8".parse::<GadgetKind>(), Ok(GadgetKind::G8));
        assert_eq!("h12".parse::<GadgetKind>(), Ok(GadgetKind::H(12)));
        assert!("h0".parse::<GadgetKind>().is_err());
        assert!("g3".parse::<GadgetKind>().is_err());
        assert_eq!(GadgetKind::H(3).to_string(), "h3");
        assert!(Gadget::new(GadgetKind::H(0)).is_err());
    }
}
