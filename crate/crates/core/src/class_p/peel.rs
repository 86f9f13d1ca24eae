//! Recognition of class `P` by undoing pastes until `K4+` remains.
//!
//! A configuration occurrence is a copy of a template whose interior
//! vertices have exactly their template degree in the host. Removing it and
//! restoring the vertex or edge it replaced is the inverse of a paste, so a
//! successful peel is a certificate of membership. The search backtracks
//! over occurrences, since removing the wrong one can strand a member.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use super::gadget::{End, GadgetKind, Template, K4_PLUS_EDGES};
use crate::graph::{Graph, VertexId};
use crate::{Error, Result};

type Adj = BTreeMap<usize, BTreeSet<usize>>;

/// One undone paste, in host vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelStep {
    pub kind: GadgetKind,
    /// Host vertex for each interior template role. For `G` kinds the first
    /// role is where the replaced degree-2 vertex is restored.
    pub inner: Vec<VertexId>,
    pub x: VertexId,
    pub y: VertexId,
}

/// A full decomposition of a member of `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelTrace {
    /// Steps in the order they were peeled; replaying goes backwards.
    pub steps: Vec<PeelStep>,
    /// Host vertices playing `s, a, b, c, d` of the remaining `K4+`.
    pub base: [VertexId; 5],
    pub vertex_count: usize,
}

impl PeelTrace {
    /// Rebuilds the host from `K4+` by re-pasting every step. Edges come out
    /// sorted lexicographically.
    pub fn replay(&self) -> Graph {
        let mut edges: BTreeSet<(usize, usize)> = K4_PLUS_EDGES
            .iter()
            .map(|&(a, b)| ordered(self.base[a].index(), self.base[b].index()))
            .collect();
        for step in self.steps.iter().rev() {
            let tpl = Template::of(step.kind).expect("peeled kinds are valid");
            let (x, y) = (step.x.index(), step.y.index());
            if step.kind.replaces_vertex() {
                let z = step.inner[0].index();
                edges.remove(&ordered(z, x));
                edges.remove(&ordered(z, y));
            } else {
                edges.remove(&ordered(x, y));
            }
            let at = |end: End| match end {
                End::Inner(i) => step.inner[i].index(),
                End::X => x,
                End::Y => y,
            };
            edges.extend(tpl.edges.iter().map(|&(a, b)| ordered(at(a), at(b))));
        }
        Graph::with_edges(self.vertex_count, edges).expect("replayed edges are simple")
    }
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Degree profile every member of `P` has: connected, odd order at least
/// five, one vertex of degree 2 and all others of degree 3.
fn profile_ok(adj: &Adj) -> bool {
    let n = adj.len();
    if n < 5 || n.is_multiple_of(2) {
        return false;
    }
    let mut twos = 0;
    for nbrs in adj.values() {
        match nbrs.len() {
            2 => twos += 1,
            3 => {}
            _ => return false,
        }
    }
    twos == 1 && connected(adj)
}

fn connected(adj: &Adj) -> bool {
    let Some(&start) = adj.keys().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[&v] {
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen.len() == adj.len()
}

fn degree_two(adj: &Adj) -> Option<usize> {
    adj.iter().find(|(_, n)| n.len() == 2).map(|(&v, _)| v)
}

/// Roles `s, a, b, c, d` if `adj` is `K4+`. The profile check leaves no
/// other graph on five vertices.
fn base_roles(adj: &Adj) -> Option<[usize; 5]> {
    if adj.len() != 5 || !profile_ok(adj) {
        return None;
    }
    let s = degree_two(adj)?;
    let ab: Vec<usize> = adj[&s].iter().copied().collect();
    let cd: Vec<usize> = adj
        .keys()
        .copied()
        .filter(|v| *v != s && !ab.contains(v))
        .collect();
    Some([s, ab[0], ab[1], cd[0], cd[1]])
}

/// A template prepared for matching from a fixed anchor role.
struct Pattern {
    kind: GadgetKind,
    inner: usize,
    /// Role adjacency; roles `inner` and `inner + 1` are `X` and `Y`.
    nbrs: Vec<Vec<usize>>,
    degree: Vec<usize>,
    /// Breadth-first role order from the anchor with each role's parent.
    order: Vec<(usize, Option<usize>)>,
}

impl Pattern {
    fn new(kind: GadgetKind, anchor: usize) -> Pattern {
        let tpl = Template::of(kind).expect("valid kind");
        let m = tpl.inner;
        let role = |end: End| match end {
            End::Inner(i) => i,
            End::X => m,
            End::Y => m + 1,
        };
        let mut nbrs = vec![Vec::new(); m + 2];
        for &(a, b) in &tpl.edges {
            let (a, b) = (role(a), role(b));
            nbrs[a].push(b);
            nbrs[b].push(a);
        }
        let degree = nbrs.iter().map(Vec::len).collect();
        let mut order = vec![(anchor, None)];
        let mut seen = vec![false; m + 2];
        seen[anchor] = true;
        let mut head = 0;
        while head < order.len() {
            let (r, _) = order[head];
            head += 1;
            for &s in &nbrs[r] {
                if !seen[s] {
                    seen[s] = true;
                    order.push((s, Some(r)));
                }
            }
        }
        debug_assert_eq!(order.len(), m + 2);
        Pattern {
            kind,
            inner: m,
            nbrs,
            degree,
            order,
        }
    }

    /// Every occurrence with the anchor role on `host`.
    fn matches(&self, adj: &Adj, host: usize, out: &mut Vec<PeelStep>) {
        let mut image = vec![usize::MAX; self.inner + 2];
        self.extend(adj, host, 0, &mut image, out);
    }

    fn fits(&self, adj: &Adj, role: usize, v: usize, image: &[usize]) -> bool {
        if image.contains(&v) {
            return false;
        }
        if role < self.inner && adj[&v].len() != self.degree[role] {
            return false;
        }
        self.nbrs[role]
            .iter()
            .all(|&r| image[r] == usize::MAX || adj[&v].contains(&image[r]))
    }

    fn extend(&self, adj: &Adj, host: usize, depth: usize, image: &mut [usize], out: &mut Vec<PeelStep>) {
        if depth == self.order.len() {
            let (x, y) = (image[self.inner], image[self.inner + 1]);
            if !self.kind.replaces_vertex() && adj[&x].contains(&y) {
                return;
            }
            out.push(PeelStep {
                kind: self.kind,
                inner: image[..self.inner].iter().map(|&v| VertexId(v)).collect(),
                x: VertexId(x),
                y: VertexId(y),
            });
            return;
        }
        let (role, parent) = self.order[depth];
        let candidates: Vec<usize> = match parent {
            None => vec![host],
            Some(p) => adj[&image[p]].iter().copied().collect(),
        };
        for v in candidates {
            if self.fits(adj, role, v, image) {
                image[role] = v;
                self.extend(adj, host, depth + 1, image, out);
                image[role] = usize::MAX;
            }
        }
    }
}

struct Peeler {
    g_patterns: Vec<Pattern>,
    failed: BTreeSet<Vec<(usize, usize)>>,
}

impl Peeler {
    fn h_pattern(t: usize) -> Pattern {
        // anchored at x'
        Pattern::new(GadgetKind::H(t), 0)
    }

    fn occurrences(&self, adj: &Adj) -> Vec<PeelStep> {
        let mut found = Vec::new();
        if let Some(z) = degree_two(adj) {
            for p in &self.g_patterns {
                p.matches(adj, z, &mut found);
            }
        }
        let n = adj.len();
        let mut t = 1;
        while n >= 2 * t + 2 + 5 {
            let p = Self::h_pattern(t);
            for (&v, nbrs) in adj {
                if nbrs.len() == 3 {
                    p.matches(adj, v, &mut found);
                }
            }
            t += 1;
        }
        // The same vertex set with the same terminals is one occurrence.
        let mut seen = BTreeSet::new();
        found.retain(|s| {
            let mut inner: Vec<VertexId> = s.inner.clone();
            inner.sort_unstable();
            seen.insert((s.kind, inner, s.x.min(s.y), s.x.max(s.y)))
        });
        found
    }

    fn key(adj: &Adj) -> Vec<(usize, usize)> {
        adj.iter()
            .flat_map(|(&v, n)| n.iter().filter(move |&&w| v < w).map(move |&w| (v, w)))
            .collect()
    }

    fn run(&mut self, adj: &Adj, steps: &mut Vec<PeelStep>) -> Option<[usize; 5]> {
        if !profile_ok(adj) {
            return None;
        }
        if adj.len() == 5 {
            return base_roles(adj);
        }
        let key = Self::key(adj);
        if self.failed.contains(&key) {
            return None;
        }
        for step in self.occurrences(adj) {
            let next = undo(adj, &step);
            steps.push(step);
            if let Some(base) = self.run(&next, steps) {
                return Some(base);
            }
            steps.pop();
        }
        self.failed.insert(key);
        None
    }
}

fn undo(adj: &Adj, step: &PeelStep) -> Adj {
    let mut next = adj.clone();
    for v in &step.inner {
        let gone = next.remove(&v.index()).expect("interior vertex present");
        for w in gone {
            if let Some(n) = next.get_mut(&w) {
                n.remove(&v.index());
            }
        }
    }
    let (x, y) = (step.x.index(), step.y.index());
    if step.kind.replaces_vertex() {
        let z = step.inner[0].index();
        next.insert(z, BTreeSet::from([x, y]));
        next.get_mut(&x).expect("terminal present").insert(z);
        next.get_mut(&y).expect("terminal present").insert(z);
    } else {
        next.get_mut(&x).expect("terminal present").insert(y);
        next.get_mut(&y).expect("terminal present").insert(x);
    }
    next
}

/// Decomposes `g` into `K4+` and a sequence of pastes, or reports
/// [`Error::NotInP`].
pub fn peel(g: &Graph) -> Result<PeelTrace> {
    let adj: Adj = g
        .vertices()
        .map(|v| (v.index(), g.neighbors(v).map(VertexId::index).collect()))
        .collect();
    let mut peeler = Peeler {
        // anchored at the degree-2 role: u, w and u1
        g_patterns: vec![
            Pattern::new(GadgetKind::G2, 0),
            Pattern::new(GadgetKind::G4, 4),
            Pattern::new(GadgetKind::G8, 1),
        ],
        failed: BTreeSet::new(),
    };
    let mut steps = Vec::new();
    let base = peeler.run(&adj, &mut steps).ok_or(Error::NotInP)?;
    Ok(PeelTrace {
        steps,
        base: base.map(VertexId),
        vertex_count: g.vertex_count(),
    })
}
