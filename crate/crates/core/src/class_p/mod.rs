//! Class `P`: the subcubic graphs grown from `K4+` by pasting the
//! configurations `G2`, `G4`, `G8` at the degree-2 vertex or a ladder `H_t`
//! across an edge. Every member needs exactly 7 colors.
//!
//! Class `P+` collects the connected graphs of maximum degree 3 that contain
//! a member of `P`. Such a member always hangs off a bridge at its degree-2
//! vertex, which is how [`color_class_p_plus`] splits the problem.

mod extend;
mod gadget;
mod paste;
mod peel;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

pub use extend::{extend, extend_g2, extend_g4, extend_g8, extend_h, fresh_pair};
pub use gadget::{k4_plus, k4_plus_coloring, Gadget, GadgetKind, K4_PLUS_EDGES};
pub use paste::{generate, parse_steps, paste_g, paste_g_at, paste_h, paste_step, Pasted};
pub use peel::{peel, PeelStep, PeelTrace};

use gadget::{End, Template};

use crate::edge_coloring::{double, edge_color_exact_with_budget};
use crate::graph::{verify, Color, ColorPair, Graph, IncidenceColoring, VertexId};
use crate::search::{Budget, SearchOutcome};
use crate::{Error, Result};

/// Palette every member of `P` is colored from.
pub const P_PALETTE: Color = 7;

pub fn is_in_p(g: &Graph) -> bool {
    peel(g).is_ok()
}

fn key(a: VertexId, b: VertexId) -> (usize, usize) {
    (a.index().min(b.index()), a.index().max(b.index()))
}

/// 7-coloring of a member of `P`, built by coloring `K4+` and extending
/// across the pastes in construction order.
pub fn color_class_p(g: &Graph) -> Result<IncidenceColoring> {
    let trace = peel(g)?;
    color_from_trace(g, &trace)
}

/// Same as [`color_class_p`] with a decomposition already at hand.
pub fn color_from_trace(g: &Graph, trace: &PeelTrace) -> Result<IncidenceColoring> {
    let mut pairs: BTreeMap<(usize, usize), ColorPair> = BTreeMap::new();
    for (&(a, b), p) in K4_PLUS_EDGES.iter().zip(k4_plus_coloring().pairs()) {
        let pair = ColorPair::new(p[0], p[1]).expect("base pairs are proper");
        pairs.insert(key(trace.base[a], trace.base[b]), pair);
    }
    for step in trace.steps.iter().rev() {
        let boundary = if step.kind.replaces_vertex() {
            let z = step.inner[0];
            let take = |pairs: &mut BTreeMap<_, ColorPair>, w| {
                pairs.remove(&key(z, w)).ok_or(Error::MissingEdge(z, w))
            };
            [take(&mut pairs, step.x)?, take(&mut pairs, step.y)?]
        } else {
            let p = pairs
                .remove(&key(step.x, step.y))
                .ok_or(Error::MissingEdge(step.x, step.y))?;
            [p, p]
        };
        let colored = extend(step.kind, boundary, P_PALETTE)?;
        let tpl = Template::of(step.kind)?;
        let at = |end: End| match end {
            End::Inner(i) => step.inner[i],
            End::X => step.x,
            End::Y => step.y,
        };
        for (&(a, b), p) in tpl.edges.iter().zip(colored) {
            pairs.insert(key(at(a), at(b)), p);
        }
    }
    let mut c = IncidenceColoring::uncolored(g.edge_count());
    for (e, u, v) in g.edges() {
        let p = pairs.get(&key(u, v)).ok_or(Error::NotInP)?;
        c.set_pair(e, p.as_array());
    }
    debug_assert!(verify(g, &c).is_ok());
    Ok(c)
}

/// A member of `P` attached to the rest of the graph by a single bridge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hanging {
    /// Degree-2 vertex of the member, of degree 3 in the host.
    pub anchor: VertexId,
    /// Other end of the bridge.
    pub outside: VertexId,
    /// Vertex set of the member, ascending.
    pub member: Vec<VertexId>,
}

/// Vertices reachable from `start` without crossing edge `start`–`skip`.
fn side(g: &Graph, start: VertexId, skip: VertexId) -> Vec<VertexId> {
    let mut seen = BTreeSet::from([start]);
    let mut stack = Vec::from([start]);
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if v == start && w == skip {
                continue;
            }
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.into_iter().collect()
}

/// First bridge `ux` (by edge id, `u` the lower endpoint first) with
/// `deg(u) = 3` whose `u` side induces a member of `P`.
pub fn find_hanging(g: &Graph) -> Option<Hanging> {
    for (_, a, b) in g.edges() {
        for (u, x) in [(a, b), (b, a)] {
            if g.degree(u) != 3 {
                continue;
            }
            let member = side(g, u, x);
            if member.contains(&x) {
                break;
            }
            let h = g.induced_subgraph(&member).expect("vertices of g");
            if is_in_p(&h) {
                return Some(Hanging {
                    anchor: u,
                    outside: x,
                    member,
                });
            }
        }
    }
    None
}

/// Connected, maximum degree 3, and containing a member of `P`.
pub fn is_in_p_plus(g: &Graph) -> bool {
    g.is_connected() && g.max_degree() == 3 && (is_in_p(g) || find_hanging(g).is_some())
}

pub fn color_class_p_plus(g: &Graph) -> Result<IncidenceColoring> {
    color_class_p_plus_with_budget(g, Budget::unlimited())
}

/// 7-coloring of a member of `P+`.
///
/// A hanging member `H` is 7-colored on its own; the rest `H'` (the graph
/// minus the interior of `H`, keeping the bridge) is colored recursively if
/// it is itself in `P+`, and by doubling an exact 3-edge-coloring otherwise.
/// The colors of `H` are then permuted so the two pairs at the anchor avoid
/// the pair on the bridge. `budget` bounds each edge-coloring search; a
/// remainder that is not 3-edge-colorable gives [`Error::NotClassOne`].
pub fn color_class_p_plus_with_budget(g: &Graph, budget: Budget) -> Result<IncidenceColoring> {
    if !g.is_connected() || g.max_degree() != 3 {
        return Err(Error::NotInPPlus);
    }
    if let Ok(trace) = peel(g) {
        return color_from_trace(g, &trace);
    }
    let hang = find_hanging(g).ok_or(Error::NotInPPlus)?;
    let u = hang.anchor;

    let h = g.induced_subgraph(&hang.member)?;
    let mut phi = color_class_p(&h)?;

    let rest: Vec<VertexId> = g
        .vertices()
        .filter(|v| *v == u || hang.member.binary_search(v).is_err())
        .collect();
    let h2 = g.induced_subgraph(&rest)?;
    let phi2 = if is_in_p_plus(&h2) {
        color_class_p_plus_with_budget(&h2, budget)?
    } else {
        match edge_color_exact_with_budget(&h2, 3, budget)? {
            SearchOutcome::Found(ec) => double(&h2, &ec)?,
            SearchOutcome::Infeasible => return Err(Error::NotClassOne),
            SearchOutcome::BudgetExceeded => return Err(Error::BudgetExceeded),
        }
    };

    // u is vertex `u_in_h` of h and `u_in_rest` of h2
    let u_in_h = VertexId(hang.member.binary_search(&u).expect("anchor in member"));
    let u_in_rest = VertexId(rest.binary_search(&u).expect("anchor kept"));
    let x_in_rest = VertexId(rest.binary_search(&hang.outside).expect("outside kept"));
    let bridge = h2
        .edge_between(u_in_rest, x_in_rest)
        .ok_or(Error::MissingEdge(u, hang.outside))?;
    let t = phi2.pair(bridge);
    let s: Vec<Color> = h
        .incident(u_in_h)
        .iter()
        .flat_map(|&(_, e)| phi.pair(e))
        .collect();

    let mut swap: BTreeMap<Color, Color> = BTreeMap::new();
    let mut spare = (1..=P_PALETTE).filter(|f| !s.contains(f) && !t.contains(f));
    for c in s.iter().copied().filter(|c| t.contains(c)) {
        let f = spare.next().ok_or(Error::PaletteExhausted { palette: P_PALETTE })?;
        swap.insert(c, f);
        swap.insert(f, c);
    }
    phi.recolor(|c| swap.get(&c).copied().unwrap_or(c));

    let mut out = IncidenceColoring::uncolored(g.edge_count());
    out.copy_from(g, &h, &hang.member, &phi)?;
    out.copy_from(g, &h2, &rest, &phi2)?;
    debug_assert!(verify(g, &out).is_ok());
    Ok(out)
}
