//! Exact conflict-free incidence chromatic number by branch and bound.
//!
//! The search assigns each edge an unordered pair of distinct colors so that
//! the pairs around every vertex are disjoint (a 2-fold edge coloring); the
//! lower endpoint receives the smaller color. Since conflicts only depend on
//! which colors sit on which edges, this is exact for incidence colorings.
//!
//! Pruning:
//! * colors are introduced in order of first use, so the first edge always
//!   receives `(1, 2)` and no two searched colorings are renamings of each
//!   other;
//! * a vertex with `r` uncolored edges needs `2r` colors still free at it.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::graph::{Color, EdgeId, Graph, Incidence, IncidenceColoring, VertexId};
use crate::search::{bit, check_palette, colors, full_mask, Budget, Mask, Meter, SearchOutcome};
use crate::{Error, Result};

/// The exact chromatic number together with an optimal coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiResult {
    pub chi: usize,
    pub witness: IncidenceColoring,
}

/// Whether enumeration skips colorings that are renamings of one another.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    /// One representative per color renaming class.
    Canonical,
    /// Every coloring, as sets of pairs per edge.
    Full,
}

/// Summary of an enumeration run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumeration {
    pub visited: u64,
    /// False when the visitor stopped early or the budget ran out.
    pub complete: bool,
}

/// Edge order: breadth-first over vertices, incident edges by id.
fn search_order(g: &Graph) -> Vec<EdgeId> {
    let n = g.vertex_count();
    let mut seen_v = vec![false; n];
    let mut seen_e = vec![false; g.edge_count()];
    let mut order = Vec::with_capacity(g.edge_count());
    let mut queue = Vec::new();
    for s in 0..n {
        if seen_v[s] {
            continue;
        }
        seen_v[s] = true;
        queue.clear();
        queue.push(VertexId(s));
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            let mut around: Vec<(EdgeId, VertexId)> =
                g.incident(v).iter().map(|&(w, e)| (e, w)).collect();
            around.sort_unstable();
            for (e, w) in around {
                if !seen_e[e.index()] {
                    seen_e[e.index()] = true;
                    order.push(e);
                }
                if !seen_v[w.index()] {
                    seen_v[w.index()] = true;
                    queue.push(w);
                }
            }
        }
    }
    order
}

struct PairSearch<'a, F> {
    ends: Vec<(usize, usize)>,
    order: Vec<EdgeId>,
    palette: Mask,
    used: Vec<Mask>,
    remaining: Vec<u32>,
    pairs: Vec<[Color; 2]>,
    symmetry: Symmetry,
    meter: Meter,
    visited: u64,
    out_of_budget: bool,
    visit: &'a mut F,
}

impl<F> PairSearch<'_, F>
where
    F: FnMut(&[[Color; 2]]) -> ControlFlow<()>,
{
    fn slack_ok(&self, v: usize) -> bool {
        let free = (self.palette & !self.used[v]).count_ones();
        free >= 2 * self.remaining[v]
    }

    fn descend(&mut self, pos: usize, max_used: u32) -> ControlFlow<()> {
        if pos == self.ends.len() {
            self.visited += 1;
            return (self.visit)(&self.pairs);
        }
        if !self.meter.tick() {
            self.out_of_budget = true;
            return ControlFlow::Break(());
        }
        let (u, v) = self.ends[pos];
        let free = self.palette & !(self.used[u] | self.used[v]);
        let canonical = self.symmetry == Symmetry::Canonical;
        let first_limit = if canonical {
            full_mask(max_used as usize + 1)
        } else {
            Mask::MAX
        };
        self.remaining[u] -= 1;
        self.remaining[v] -= 1;
        for a in colors(free & first_limit) {
            let after_a = max_used.max(a);
            let mut second = free & !full_mask(a as usize);
            if canonical {
                second &= full_mask(after_a as usize + 1);
            }
            for b in colors(second) {
                let m = bit(a) | bit(b);
                self.used[u] |= m;
                self.used[v] |= m;
                if self.slack_ok(u) && self.slack_ok(v) {
                    self.pairs[self.order[pos].index()] = [a, b];
                    let flow = self.descend(pos + 1, after_a.max(b));
                    if flow.is_break() {
                        self.used[u] &= !m;
                        self.used[v] &= !m;
                        self.remaining[u] += 1;
                        self.remaining[v] += 1;
                        return flow;
                    }
                }
                self.used[u] &= !m;
                self.used[v] &= !m;
            }
        }
        self.remaining[u] += 1;
        self.remaining[v] += 1;
        ControlFlow::Continue(())
    }
}

/// Calls `visit` with the pairs (indexed by edge id, ascending within each
/// pair) of every 2-fold edge coloring of `g` from `k` colors, until it
/// returns `Break`.
pub fn for_each_coloring<F>(
    g: &Graph,
    k: usize,
    symmetry: Symmetry,
    budget: Budget,
    mut visit: F,
) -> Result<Enumeration>
where
    F: FnMut(&[[Color; 2]]) -> ControlFlow<()>,
{
    check_palette(k)?;
    let order = search_order(g);
    let ends = order
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            (u.index(), v.index())
        })
        .collect();
    let remaining = g.vertices().map(|v| g.degree(v) as u32).collect();
    let mut search = PairSearch {
        ends,
        order,
        palette: full_mask(k),
        used: vec![0; g.vertex_count()],
        remaining,
        pairs: vec![[0, 0]; g.edge_count()],
        symmetry,
        meter: budget.meter(),
        visited: 0,
        out_of_budget: false,
        visit: &mut visit,
    };
    if g.vertices().any(|v| 2 * g.degree(v) > k) {
        return Ok(Enumeration {
            visited: 0,
            complete: true,
        });
    }
    let flow = search.descend(0, 0);
    if search.out_of_budget {
        return Err(Error::BudgetExceeded);
    }
    Ok(Enumeration {
        visited: search.visited,
        complete: flow.is_continue(),
    })
}

/// A conflict-free incidence `k`-coloring of `g`, or proof that none exists.
pub fn feasible(g: &Graph, k: usize) -> Result<SearchOutcome<IncidenceColoring>> {
    feasible_with_budget(g, k, Budget::unlimited())
}

pub fn feasible_with_budget(
    g: &Graph,
    k: usize,
    budget: Budget,
) -> Result<SearchOutcome<IncidenceColoring>> {
    let mut found = None;
    let run = for_each_coloring(g, k, Symmetry::Canonical, budget, |pairs| {
        found = Some(IncidenceColoring::from_pairs(pairs.to_vec()));
        ControlFlow::Break(())
    });
    match run {
        Ok(_) => Ok(match found {
            Some(c) => SearchOutcome::Found(c),
            None => SearchOutcome::Infeasible,
        }),
        Err(Error::BudgetExceeded) => Ok(SearchOutcome::BudgetExceeded),
        Err(e) => Err(e),
    }
}

/// The conflict-free incidence chromatic number of `g` with a witness.
pub fn chi_exact(g: &Graph) -> Result<ChiResult> {
    chi_exact_with_budget(g, Budget::unlimited())
}

/// Tries `2Δ`, `2Δ + 1` and `2Δ + 2` in order; one of them always works for
/// a simple graph. The budget applies to each attempt separately.
pub fn chi_exact_with_budget(g: &Graph, budget: Budget) -> Result<ChiResult> {
    let delta = g.max_degree();
    for chi in 2 * delta..=2 * delta + 2 {
        match feasible_with_budget(g, chi, budget)? {
            SearchOutcome::Found(witness) => return Ok(ChiResult { chi, witness }),
            SearchOutcome::Infeasible => {}
            SearchOutcome::BudgetExceeded => return Err(Error::BudgetExceeded),
        }
    }
    unreachable!("doubling a (Δ+1)-edge-coloring always gives 2Δ+2 colors")
}

/// The graph whose vertices are the incidences of `g` and whose edges join
/// conflicting incidences. Incidence `(v, e)` becomes vertex
/// `2 * e + slot(v)`.
pub fn conflict_graph(g: &Graph) -> Graph {
    let mut out = Graph::new(2 * g.edge_count());
    let id = |i: Incidence| {
        let slot = g.slot_of(i.edge, i.vertex).expect("incidence of g");
        VertexId(2 * i.edge.index() + slot.index())
    };
    for w in g.vertices() {
        let set = crate::graph::incidences_at(g, w).expect("vertex of g");
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                let (x, y) = (id(a), id(b));
                if !out.has_edge(x, y) {
                    out.add_edge(x, y).expect("distinct incidences");
                }
            }
        }
    }
    out
}
