use core::fmt;

use crate::graph::{EdgeId, VertexId};

/// Errors raised by graph construction, the constructive colorers and the
/// exact searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    UnknownVertex(VertexId),
    UnknownEdge(EdgeId),
    SelfLoop(VertexId),
    ParallelEdge(VertexId, VertexId),
    /// The vertex is not an endpoint of the edge.
    InvalidIncidence { vertex: VertexId, edge: EdgeId },
    MissingEdge(VertexId, VertexId),
    /// A parameterized family was asked for a member below its smallest order.
    OrderTooSmall { min: usize, got: usize },
    NotDegreeTwo { vertex: VertexId, degree: usize },
    /// Two adjacent edges share a color, or the coloring does not fit the graph.
    ImproperEdgeColoring { first: EdgeId, second: EdgeId },
    EdgeColoringSize { expected: usize, found: usize },
    /// Boundary pairs handed to a gadget extender intersect.
    OverlappingPairs,
    /// The two rails entering a ladder gadget carry different pairs.
    UnequalRailPairs,
    /// The palette has no room left for a fresh pair.
    PaletteExhausted { palette: u32 },
    /// Searches are limited to this many colors.
    PaletteTooLarge { requested: usize, max: usize },
    InvalidGadget,
    NotInP,
    NotInPPlus,
    Disconnected,
    /// No proper edge coloring with the maximum degree exists, so the graph
    /// cannot be a connected outer-1-planar graph outside the class-two cases.
    NotClassOne,
    BudgetExceeded,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownVertex(v) => write!(f, "unknown vertex {}", v.index()),
            Error::UnknownEdge(e) => write!(f, "unknown edge {}", e.index()),
            Error::SelfLoop(v) => write!(f, "loop at vertex {}", v.index()),
            Error::ParallelEdge(u, v) => {
                write!(f, "parallel edge between {} and {}", u.index(), v.index())
            }
            Error::InvalidIncidence { vertex, edge } => write!(
                f,
                "vertex {} is not an endpoint of edge {}",
                vertex.index(),
                edge.index()
            ),
            Error::MissingEdge(u, v) => {
                write!(f, "no edge between {} and {}", u.index(), v.index())
            }
            Error::OrderTooSmall { min, got } => {
                write!(f, "order {got} is below the minimum {min}")
            }
            Error::NotDegreeTwo { vertex, degree } => write!(
                f,
                "vertex {} has degree {degree}, expected 2",
                vertex.index()
            ),
            Error::ImproperEdgeColoring { first, second } => write!(
                f,
                "adjacent edges {} and {} share a color",
                first.index(),
                second.index()
            ),
            Error::EdgeColoringSize { expected, found } => write!(
                f,
                "edge coloring covers {found} edges, graph has {expected}"
            ),
            Error::OverlappingPairs => f.write_str("boundary color pairs are not disjoint"),
            Error::UnequalRailPairs => f.write_str("rail color pairs differ"),
            Error::PaletteExhausted { palette } => {
                write!(f, "no fresh color pair left in a palette of {palette}")
            }
            Error::PaletteTooLarge { requested, max } => {
                write!(f, "palette of {requested} colors exceeds the supported {max}")
            }
            Error::InvalidGadget => f.write_str("invalid gadget parameters"),
            Error::NotInP => f.write_str("graph is not in class P"),
            Error::NotInPPlus => f.write_str("graph is not in class P+"),
            Error::Disconnected => f.write_str("graph is disconnected"),
            Error::NotClassOne => {
                f.write_str("no proper edge coloring with max-degree colors exists")
            }
            Error::BudgetExceeded => f.write_str("search budget exceeded"),
        }
    }
}

impl core::error::Error for Error {}
