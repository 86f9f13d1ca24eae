//! The two paste operations that grow class `P` from `K4+`, and a seeded
//! generator built on them.

use alloc::vec::Vec;

use super::gadget::{k4_plus, End, GadgetKind, Template};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::{Error, Result};

/// Result of a paste: the new graph and where the gadget landed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pasted {
    pub graph: Graph,
    /// Interior vertices in template role order.
    pub inner: Vec<VertexId>,
    /// The host vertices identified with the gadget's `x` and `y` ends.
    pub terminals: (VertexId, VertexId),
}

/// Replaces vertex `removed` or edge `removed_edge` of `g` by a copy of
/// `tpl` attached to `x` and `y`. A removed vertex's id is reused for the
/// first interior role; further interior vertices are appended.
fn paste_template(
    g: &Graph,
    tpl: &Template,
    removed: Option<VertexId>,
    removed_edge: Option<EdgeId>,
    x: VertexId,
    y: VertexId,
) -> Result<Pasted> {
    let mut next = g.vertex_count();
    let mut inner = Vec::with_capacity(tpl.inner);
    for i in 0..tpl.inner {
        match (i, removed) {
            (0, Some(z)) => inner.push(z),
            _ => {
                inner.push(VertexId(next));
                next += 1;
            }
        }
    }
    let resolve = |end: End| match end {
        End::Inner(i) => inner[i],
        End::X => x,
        End::Y => y,
    };
    let kept = g
        .edges()
        .filter(|&(e, u, v)| Some(e) != removed_edge && Some(u) != removed && Some(v) != removed)
        .map(|(_, u, v)| (u.index(), v.index()));
    let added = tpl.edges.iter().map(|&(a, b)| (resolve(a).index(), resolve(b).index()));
    let graph = Graph::with_edges(next, kept.chain(added))?;
    Ok(Pasted {
        graph,
        inner,
        terminals: (x, y),
    })
}

/// `G ⊔_z G_t` with `z1` taken as the lower-id neighbor of `z`.
pub fn paste_g(g: &Graph, z: VertexId, kind: GadgetKind) -> Result<Pasted> {
    g.check_vertex(z)?;
    let mut nbrs: Vec<VertexId> = g.neighbors(z).collect();
    if nbrs.len() != 2 {
        return Err(Error::NotDegreeTwo {
            vertex: z,
            degree: nbrs.len(),
        });
    }
    nbrs.sort_unstable();
    paste_g_at(g, z, nbrs[0], nbrs[1], kind)
}

/// Removes the degree-2 vertex `z` with neighbors `z1`, `z2` and pastes a
/// copy of `kind` (one of `G2`, `G4`, `G8`) with `x = z1`, `y = z2`.
pub fn paste_g_at(
    g: &Graph,
    z: VertexId,
    z1: VertexId,
    z2: VertexId,
    kind: GadgetKind,
) -> Result<Pasted> {
    if !kind.replaces_vertex() {
        return Err(Error::InvalidGadget);
    }
    g.check_vertex(z)?;
    if g.degree(z) != 2 {
        return Err(Error::NotDegreeTwo {
            vertex: z,
            degree: g.degree(z),
        });
    }
    for w in [z1, z2] {
        if !g.has_edge(z, w) {
            return Err(Error::MissingEdge(z, w));
        }
    }
    if z1 == z2 {
        return Err(Error::InvalidGadget);
    }
    paste_template(g, &Template::of(kind)?, Some(z), None, z1, z2)
}

/// `G ∨_{z1z2} H_t`: removes edge `z1z2` and pastes the ladder `H_t` with
/// `x_t = z1`, `y_t = z2`.
pub fn paste_h(g: &Graph, z1: VertexId, z2: VertexId, t: usize) -> Result<Pasted> {
    g.check_vertex(z1)?;
    g.check_vertex(z2)?;
    let e = g.edge_between(z1, z2).ok_or(Error::MissingEdge(z1, z2))?;
    paste_template(g, &Template::of(GadgetKind::H(t))?, None, Some(e), z1, z2)
}

/// Applies one paste of `kind` to a member of `P`.
///
/// `G` kinds go to the unique degree-2 vertex; `H` kinds to the edge picked
/// by `choose(edge_count)`. `choose(2)` decides the orientation in both
/// cases, `0` keeping the lower id as `z1`. Results of `choose` are taken
/// modulo the bound.
pub fn paste_step(
    g: &Graph,
    kind: GadgetKind,
    choose: &mut dyn FnMut(usize) -> usize,
) -> Result<Pasted> {
    let flip = choose(2) % 2 == 1;
    if kind.replaces_vertex() {
        let z = g
            .vertices()
            .find(|&v| g.degree(v) == 2)
            .ok_or(Error::NotInP)?;
        let mut nbrs: Vec<VertexId> = g.neighbors(z).collect();
        nbrs.sort_unstable();
        if flip {
            nbrs.swap(0, 1);
        }
        paste_g_at(g, z, nbrs[0], nbrs[1], kind)
    } else {
        let GadgetKind::H(t) = kind else {
            unreachable!()
        };
        if g.edge_count() == 0 {
            return Err(Error::NotInP);
        }
        let e = EdgeId(choose(g.edge_count()) % g.edge_count());
        let (mut a, mut b) = g.endpoints(e);
        if flip {
            core::mem::swap(&mut a, &mut b);
        }
        paste_h(g, a, b, t)
    }
}

/// Builds a member of `P` by applying `steps` to `K4+` in order.
pub fn generate(steps: &[GadgetKind], choose: &mut dyn FnMut(usize) -> usize) -> Result<Graph> {
    let mut g = k4_plus();
    for &kind in steps {
        g = paste_step(&g, kind, choose)?.graph;
    }
    Ok(g)
}

/// Parses a comma-separated step list such as `g2,h3,g8`.
pub fn parse_steps(spec: &str) -> Result<Vec<GadgetKind>> {
    spec.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect()
}
