//! Simple undirected graphs, incidences, and incidence colorings.
//!
//! Every edge stores its endpoints in ascending vertex order. The color of an
//! incidence is addressed by the edge and the endpoint [`Slot`]: slot `U` is
//! the lower endpoint, slot `V` the higher one.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Colors are positive; `0` marks an uncolored incidence.
pub type Color = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

/// Endpoint position within an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    /// The endpoint with the smaller vertex id.
    U = 0,
    V = 1,
}

impl Slot {
    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }
}

/// A vertex–edge pair `(v, e)` with `v` an endpoint of `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Incidence {
    pub vertex: VertexId,
    pub edge: EdgeId,
}

impl Incidence {
    pub fn new(vertex: VertexId, edge: EdgeId) -> Self {
        Incidence { vertex, edge }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
    edges: Vec<(VertexId, VertexId)>,
}

impl Graph {
    /// A graph on `n` isolated vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph on `n` vertices; edge ids follow the iteration order.
    pub fn with_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(VertexId(u), VertexId(v))?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.adjacency.push(Vec::new());
        VertexId(self.adjacency.len() - 1)
    }

    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> Result<EdgeId> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        if self.has_edge(a, b) {
            return Err(Error::ParallelEdge(a, b));
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        let id = EdgeId(self.edges.len());
        self.edges.push((u, v));
        self.adjacency[u.0].push((v, id));
        self.adjacency[v.0].push((u, id));
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.adjacency.len()).map(VertexId)
    }

    /// All edges as `(id, lower endpoint, higher endpoint)`.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (EdgeId(i), u, v))
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.0]
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.0 < self.adjacency.len()
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e.0 < self.edges.len() {
            Ok(())
        } else {
            Err(Error::UnknownEdge(e))
        }
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v.0].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `(neighbor, edge)` pairs around `v` in insertion order.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v.0]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency[v.0].iter().map(|&(w, _)| w)
    }

    pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        if !self.contains_vertex(a) || !self.contains_vertex(b) {
            return None;
        }
        let (small, other) = if self.degree(a) <= self.degree(b) {
            (a, b)
        } else {
            (b, a)
        };
        self.adjacency[small.0]
            .iter()
            .find(|&&(w, _)| w == other)
            .map(|&(_, e)| e)
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edge_between(a, b).is_some()
    }

    /// The endpoint of `e` that is not `v`.
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e.0];
        if a == v {
            b
        } else {
            a
        }
    }

    /// The slot `v` occupies on `e`, if it is an endpoint.
    pub fn slot_of(&self, e: EdgeId, v: VertexId) -> Option<Slot> {
        let (a, b) = self.edges[e.0];
        if a == v {
            Some(Slot::U)
        } else if b == v {
            Some(Slot::V)
        } else {
            None
        }
    }

    pub fn check_incidence(&self, i: Incidence) -> Result<Slot> {
        self.check_vertex(i.vertex)?;
        self.check_edge(i.edge)?;
        self.slot_of(i.edge, i.vertex).ok_or(Error::InvalidIncidence {
            vertex: i.vertex,
            edge: i.edge,
        })
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![VertexId(s)];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for w in self.neighbors(v) {
                    if !seen[w.0] {
                        seen[w.0] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True for a connected 2-regular graph, i.e. a cycle `C_n` with `n >= 3`.
    pub fn is_cycle(&self) -> bool {
        self.vertex_count() >= 3
            && self.adjacency.iter().all(|a| a.len() == 2)
            && self.is_connected()
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let sv = side[v].unwrap_or(false);
                for w in self.neighbors(VertexId(v)) {
                    match side[w.0] {
                        None => {
                            side[w.0] = Some(!sv);
                            stack.push(w.0);
                        }
                        Some(sw) if sw == sv => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// The subgraph induced by `keep`. Vertex `i` of the result is
    /// `keep[i]`; edges keep their relative order.
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            index[v.0] = i;
        }
        let mut sub = Graph::new(keep.len());
        for &(u, v) in &self.edges {
            let (a, b) = (index[u.0], index[v.0]);
            if a != usize::MAX && b != usize::MAX {
                sub.add_edge(VertexId(a), VertexId(b))?;
            }
        }
        Ok(sub)
    }
}

/// Both incidences of every edge at `v`, so `2 * degree(v)` of them.
pub fn incidences_at(g: &Graph, v: VertexId) -> Result<Vec<Incidence>> {
    g.check_vertex(v)?;
    let mut out = Vec::with_capacity(2 * g.degree(v));
    for &(w, e) in g.incident(v) {
        out.push(Incidence::new(v, e));
        out.push(Incidence::new(w, e));
    }
    Ok(out)
}

/// Which of the three conflict rules relates two incidences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConflictRule {
    /// Both incidences sit at the same vertex.
    SameVertex,
    /// The two vertices are joined by one of the two edges.
    JoiningEdge,
    /// The edges meet at a third vertex `w`, each leading away from it.
    CommonNeighbor,
}

/// The conflict rule relating `a` and `b`, or `None` when they do not
/// conflict. An incidence never conflicts with itself.
pub fn conflict_rule(g: &Graph, a: Incidence, b: Incidence) -> Result<Option<ConflictRule>> {
    g.check_incidence(a)?;
    g.check_incidence(b)?;
    if a == b {
        return Ok(None);
    }
    if a.vertex == b.vertex {
        return Ok(Some(ConflictRule::SameVertex));
    }
    let joins = |e: EdgeId| {
        let (x, y) = g.endpoints(e);
        (x == a.vertex && y == b.vertex) || (x == b.vertex && y == a.vertex)
    };
    if joins(a.edge) || joins(b.edge) {
        return Ok(Some(ConflictRule::JoiningEdge));
    }
    if g.opposite(a.edge, a.vertex) == g.opposite(b.edge, b.vertex) {
        return Ok(Some(ConflictRule::CommonNeighbor));
    }
    Ok(None)
}

pub fn conflicting(g: &Graph, a: Incidence, b: Incidence) -> Result<bool> {
    conflict_rule(g, a, b).map(|r| r.is_some())
}

/// A color for each of the two incidences of every edge, indexed by edge id
/// and [`Slot`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IncidenceColoring {
    pairs: Vec<[Color; 2]>,
}

impl IncidenceColoring {
    /// All incidences of `edge_count` edges uncolored.
    pub fn uncolored(edge_count: usize) -> Self {
        IncidenceColoring {
            pairs: vec![[0, 0]; edge_count],
        }
    }

    pub fn from_pairs(pairs: Vec<[Color; 2]>) -> Self {
        IncidenceColoring { pairs }
    }

    pub fn pairs(&self) -> &[[Color; 2]] {
        &self.pairs
    }

    pub fn into_pairs(self) -> Vec<[Color; 2]> {
        self.pairs
    }

    pub fn edge_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair(&self, e: EdgeId) -> [Color; 2] {
        self.pairs[e.0]
    }

    pub fn get(&self, e: EdgeId, slot: Slot) -> Color {
        self.pairs[e.0][slot.index()]
    }

    pub fn set_pair(&mut self, e: EdgeId, pair: [Color; 2]) {
        self.pairs[e.0] = pair;
    }

    pub fn set(&mut self, e: EdgeId, slot: Slot, c: Color) {
        self.pairs[e.0][slot.index()] = c;
    }

    /// Color of `i` in `g`; `None` when `i` is not an incidence of `g` or
    /// lies outside the coloring.
    pub fn color_of(&self, g: &Graph, i: Incidence) -> Option<Color> {
        let slot = g.check_incidence(i).ok()?;
        self.pairs.get(i.edge.0).map(|p| p[slot.index()])
    }

    /// Largest color used.
    pub fn palette_size(&self) -> Color {
        self.pairs.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Copies the coloring `col` of `sub` into `self`, a coloring of `g`,
    /// where vertex `i` of `sub` is `ids[i]` in `g`. Each color stays on the
    /// same endpoint.
    pub fn copy_from(
        &mut self,
        g: &Graph,
        sub: &Graph,
        ids: &[VertexId],
        col: &IncidenceColoring,
    ) -> Result<()> {
        for (e, a, b) in sub.edges() {
            let (ga, gb) = (ids[a.0], ids[b.0]);
            let ge = g.edge_between(ga, gb).ok_or(Error::MissingEdge(ga, gb))?;
            let [ca, cb] = col.pair(e);
            self.set_pair(ge, if ga < gb { [ca, cb] } else { [cb, ca] });
        }
        Ok(())
    }

    /// Applies `f` to every color.
    pub fn recolor(&mut self, mut f: impl FnMut(Color) -> Color) {
        for p in &mut self.pairs {
            p[0] = f(p[0]);
            p[1] = f(p[1]);
        }
    }
}

/// Number of distinct colors used.
pub fn palette_count(c: &IncidenceColoring) -> usize {
    let mut all: Vec<Color> = c.pairs.iter().flatten().copied().filter(|&x| x != 0).collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// Why a coloring failed verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    /// The coloring does not cover exactly the graph's edges.
    Incomplete { expected: usize, found: usize },
    Uncolored(Incidence),
    /// Two incidences of `I(witness)` share `color`.
    Conflict {
        witness: VertexId,
        first: Incidence,
        second: Incidence,
        color: Color,
    },
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::Incomplete { expected, found } => {
                write!(f, "coloring covers {found} edges, graph has {expected}")
            }
            VerifyError::Uncolored(i) => write!(
                f,
                "incidence ({}, e{}) is uncolored",
                i.vertex.index(),
                i.edge.index()
            ),
            VerifyError::Conflict {
                witness,
                first,
                second,
                color,
            } => write!(
                f,
                "incidences ({}, e{}) and ({}, e{}) at vertex {} share color {color}",
                first.vertex.index(),
                first.edge.index(),
                second.vertex.index(),
                second.edge.index(),
                witness.index()
            ),
        }
    }
}

impl core::error::Error for VerifyError {}

/// Checks that `c` is a conflict-free incidence coloring of `g`.
///
/// Two incidences conflict exactly when they lie in a common `I(w)`, so it
/// suffices to check that every `I(w)` is rainbow. The first repeated color
/// found (vertices ascending, adjacency order, slot `U` before `V`) is
/// reported together with its witness vertex.
pub fn verify(g: &Graph, c: &IncidenceColoring) -> core::result::Result<(), VerifyError> {
    if c.edge_count() != g.edge_count() {
        return Err(VerifyError::Incomplete {
            expected: g.edge_count(),
            found: c.edge_count(),
        });
    }
    for (e, u, v) in g.edges() {
        let [cu, cv] = c.pair(e);
        if cu == 0 {
            return Err(VerifyError::Uncolored(Incidence::new(u, e)));
        }
        if cv == 0 {
            return Err(VerifyError::Uncolored(Incidence::new(v, e)));
        }
    }
    let mut seen: BTreeMap<Color, Incidence> = BTreeMap::new();
    for w in g.vertices() {
        seen.clear();
        for &(_, e) in g.incident(w) {
            let (a, b) = g.endpoints(e);
            for (slot, x) in [(Slot::U, a), (Slot::V, b)] {
                let inc = Incidence::new(x, e);
                let color = c.get(e, slot);
                if let Some(&first) = seen.get(&color) {
                    return Err(VerifyError::Conflict {
                        witness: w,
                        first,
                        second: inc,
                        color,
                    });
                }
                seen.insert(color, inc);
            }
        }
    }
    Ok(())
}

/// An unordered pair of two distinct colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorPair {
    lo: Color,
    hi: Color,
}

impl ColorPair {
    /// `None` unless `a` and `b` are distinct positive colors.
    pub fn new(a: Color, b: Color) -> Option<Self> {
        if a == 0 || b == 0 || a == b {
            return None;
        }
        Some(ColorPair {
            lo: a.min(b),
            hi: a.max(b),
        })
    }

    pub fn lo(self) -> Color {
        self.lo
    }

    pub fn hi(self) -> Color {
        self.hi
    }

    pub fn as_array(self) -> [Color; 2] {
        [self.lo, self.hi]
    }

    pub fn contains(self, c: Color) -> bool {
        self.lo == c || self.hi == c
    }

    pub fn is_disjoint(self, other: ColorPair) -> bool {
        !other.contains(self.lo) && !other.contains(self.hi)
    }

    pub fn map(self, mut f: impl FnMut(Color) -> Color) -> Option<Self> {
        ColorPair::new(f(self.lo), f(self.hi))
    }
}

impl fmt::Display for ColorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::with_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn inc(v: usize, e: usize) -> Incidence {
        Incidence::new(VertexId(v), EdgeId(e))
    }

    /// All graphs on `n` labeled vertices, one per edge subset of `K_n`.
    fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        (0u32..1 << pairs.len()).map(move |mask| {
            let chosen = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p);
            Graph::with_edges(n, chosen).unwrap()
        })
    }

    fn all_incidences(g: &Graph) -> Vec<Incidence> {
        g.edges()
            .flat_map(|(e, u, v)| [Incidence::new(u, e), Incidence::new(v, e)])
            .collect()
    }

    #[test]
    fn rejects_loops_and_parallel_edges() {
        let mut g = Graph::new(3);
        assert_eq!(
            g.add_edge(VertexId(1), VertexId(1)),
            Err(Error::SelfLoop(VertexId(1)))
        );
        g.add_edge(VertexId(2), VertexId(0)).unwrap();
        assert!(matches!(
            g.add_edge(VertexId(0), VertexId(2)),
            Err(Error::ParallelEdge(..))
        ));
        assert_eq!(g.endpoints(EdgeId(0)), (VertexId(0), VertexId(2)));
        assert!(g.add_edge(VertexId(0), VertexId(3)).is_err());
    }

    #[test]
    fn incidences_of_triangle_vertex() {
        let g = triangle();
        let mut got = incidences_at(&g, VertexId(0)).unwrap();
        got.sort();
        // edges: 0 = ab, 2 = ac
        let mut want = vec![inc(0, 0), inc(1, 0), inc(0, 2), inc(2, 2)];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn incidences_of_isolated_and_unknown_vertex() {
        let g = Graph::new(2);
        assert!(incidences_at(&g, VertexId(1)).unwrap().is_empty());
        assert_eq!(
            incidences_at(&g, VertexId(5)),
            Err(Error::UnknownVertex(VertexId(5)))
        );
    }

    #[test]
    fn k4_vertex_has_six_incidences() {
        let g = Graph::with_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        for v in g.vertices() {
            assert_eq!(incidences_at(&g, v).unwrap().len(), 6);
        }
    }

    #[test]
    fn conflict_rules_on_small_examples() {
        let g = Graph::with_edges(1 + 1, [(0, 1)]).unwrap();
        assert_eq!(
            conflict_rule(&g, inc(0, 0), inc(1, 0)).unwrap(),
            Some(ConflictRule::JoiningEdge)
        );

        // path u - w - v with u = 0, w = 1, v = 2
        let p = Graph::with_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            conflict_rule(&p, inc(0, 0), inc(2, 1)).unwrap(),
            Some(ConflictRule::CommonNeighbor)
        );

        let two = Graph::with_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!conflicting(&two, inc(0, 0), inc(2, 1)).unwrap());
        assert!(!conflicting(&two, inc(0, 0), inc(0, 0)).unwrap());
        assert_eq!(
            conflicting(&two, inc(2, 0), inc(0, 0)),
            Err(Error::InvalidIncidence {
                vertex: VertexId(2),
                edge: EdgeId(0)
            })
        );
    }

    #[test]
    fn three_rules_match_shared_vertex_formulation_exhaustively() {
        for n in 1..=5 {
            for g in all_graphs(n) {
                let incs = all_incidences(&g);
                let sets: Vec<Vec<Incidence>> =
                    g.vertices().map(|v| incidences_at(&g, v).unwrap()).collect();
                for &a in &incs {
                    for &b in &incs {
                        let rules = conflicting(&g, a, b).unwrap();
                        let shared =
                            a != b && sets.iter().any(|s| s.contains(&a) && s.contains(&b));
                        assert_eq!(rules, shared, "{a:?} {b:?} in {g:?}");
                        assert_eq!(rules, conflicting(&g, b, a).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn verify_even_cycle_pattern() {
        let c4 = Graph::with_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let good = IncidenceColoring::from_pairs(vec![[1, 2], [3, 4], [1, 2], [3, 4]]);
        assert_eq!(verify(&c4, &good), Ok(()));
        assert_eq!(palette_count(&good), 4);

        let bad = IncidenceColoring::from_pairs(vec![[1, 2], [1, 3], [5, 6], [7, 8]]);
        match verify(&c4, &bad) {
            Err(VerifyError::Conflict { witness, color, .. }) => {
                assert_eq!(witness, VertexId(1));
                assert_eq!(color, 1);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn verify_rejects_equal_colors_on_one_edge() {
        let g = Graph::with_edges(2, [(0, 1)]).unwrap();
        let c = IncidenceColoring::from_pairs(vec![[3, 3]]);
        let err = verify(&g, &c).unwrap_err();
        let VerifyError::Conflict { first, second, .. } = err else {
            panic!("{err:?}")
        };
        assert_eq!(
            conflict_rule(&g, first, second).unwrap(),
            Some(ConflictRule::JoiningEdge)
        );
    }

    #[test]
    fn verify_reports_partial_colorings_separately() {
        let g = triangle();
        assert_eq!(
            verify(&g, &IncidenceColoring::from_pairs(vec![[1, 2]])),
            Err(VerifyError::Incomplete {
                expected: 3,
                found: 1
            })
        );
        let c = IncidenceColoring::from_pairs(vec![[1, 2], [3, 0], [5, 6]]);
        assert_eq!(verify(&g, &c), Err(VerifyError::Uncolored(inc(2, 1))));
    }

    #[test]
    fn palette_count_of_empty_coloring() {
        assert_eq!(palette_count(&IncidenceColoring::default()), 0);
    }

    #[test]
    fn structural_queries() {
        let c5 = Graph::with_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(c5.is_cycle());
        assert!(!c5.is_bipartite());
        let two = Graph::with_edges(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(two.components().len(), 3);
        assert!(two.is_bipartite());
        let sub = c5
            .induced_subgraph(&[VertexId(4), VertexId(0), VertexId(1)])
            .unwrap();
        assert_eq!(sub.edge_count(), 2);
        assert!(sub.has_edge(VertexId(0), VertexId(1)));
        assert!(sub.has_edge(VertexId(1), VertexId(2)));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn graph_and_coloring() -> impl Strategy<Value = (Graph, IncidenceColoring)> {
            (2usize..=5)
                .prop_flat_map(|n| {
                    let pairs = n * (n - 1) / 2;
                    (Just(n), proptest::collection::vec(any::<bool>(), pairs))
                })
                .prop_flat_map(|(n, keep)| {
                    let mut edges = Vec::new();
                    let mut i = 0;
                    for a in 0..n {
                        for b in a + 1..n {
                            if keep[i] {
                                edges.push((a, b));
                            }
                            i += 1;
                        }
                    }
                    let g = Graph::with_edges(n, edges).unwrap();
                    let m = g.edge_count();
                    (
                        Just(g),
                        proptest::collection::vec([1u32..=7, 1u32..=7], m)
                            .prop_map(IncidenceColoring::from_pairs),
                    )
                })
        }

        proptest! {
            #[test]
            fn verify_agrees_with_pairwise_scan((g, c) in graph_and_coloring()) {
                let incs = all_incidences(&g);
                let mut clash = false;
                for (i, &a) in incs.iter().enumerate() {
                    for &b in &incs[i + 1..] {
                        if conflicting(&g, a, b).unwrap()
                            && c.color_of(&g, a) == c.color_of(&g, b)
                        {
                            clash = true;
                        }
                    }
                }
                prop_assert_eq!(verify(&g, &c).is_ok(), !clash);
            }

            #[test]
            fn incidence_set_size_is_twice_degree((g, _c) in graph_and_coloring()) {
                for v in g.vertices() {
                    prop_assert_eq!(incidences_at(&g, v).unwrap().len(), 2 * g.degree(v));
                }
            }
        }
    }
}
