//! Proper edge colorings by exact search, and the doubling construction that
//! turns a proper edge `k`-coloring into a conflict-free incidence
//! `2k`-coloring.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Color, EdgeId, Graph, IncidenceColoring};
use crate::search::{bit, check_palette, colors, full_mask, Budget, Mask, Meter, SearchOutcome};
use crate::{Error, Result};

/// A color in `1..=palette` for every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<Color>,
    palette: u32,
}

impl EdgeColoring {
    pub fn new(colors: Vec<Color>, palette: u32) -> Self {
        EdgeColoring { colors, palette }
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e.index()]
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    /// Checks totality, the palette range, and that adjacent edges differ.
    pub fn check_proper(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.edge_count() {
            return Err(Error::EdgeColoringSize {
                expected: g.edge_count(),
                found: self.colors.len(),
            });
        }
        for (e, _, _) in g.edges() {
            let c = self.color(e);
            if c == 0 || c > self.palette {
                return Err(Error::ImproperEdgeColoring {
                    first: e,
                    second: e,
                });
            }
        }
        for v in g.vertices() {
            let around = g.incident(v);
            for (i, &(_, e)) in around.iter().enumerate() {
                for &(_, f) in &around[i + 1..] {
                    if self.color(e) == self.color(f) {
                        return Err(Error::ImproperEdgeColoring {
                            first: e.min(f),
                            second: e.max(f),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Edge order for the search: descending endpoint-degree sum, ties by id.
fn search_order(g: &Graph) -> Vec<EdgeId> {
    let mut order: Vec<EdgeId> = g.edges().map(|(e, _, _)| e).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.endpoints(e);
        (core::cmp::Reverse(g.degree(u) + g.degree(v)), e)
    });
    order
}

/// A proper edge `k`-coloring of `g`, or a certificate that none exists.
pub fn edge_color_exact(g: &Graph, k: usize) -> Result<SearchOutcome<EdgeColoring>> {
    edge_color_exact_with_budget(g, k, Budget::unlimited())
}

/// Backtracking over edges in a fixed order, colors tried ascending.
///
/// A color larger than every color used so far is only tried as the next
/// unused one; feasibility is invariant under renaming colors, and the first
/// solution found is the same as without this restriction.
pub fn edge_color_exact_with_budget(
    g: &Graph,
    k: usize,
    budget: Budget,
) -> Result<SearchOutcome<EdgeColoring>> {
    check_palette(k)?;
    let m = g.edge_count();
    if m == 0 {
        return Ok(SearchOutcome::Found(EdgeColoring::new(Vec::new(), k as u32)));
    }
    if g.max_degree() > k {
        return Ok(SearchOutcome::Infeasible);
    }
    let order = search_order(g);
    let ends: Vec<(usize, usize)> = order
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            (u.index(), v.index())
        })
        .collect();
    let mut state = EdgeSearch {
        ends: &ends,
        palette: full_mask(k),
        used: vec![0; g.vertex_count()],
        assigned: vec![0; m],
        meter: budget.meter(),
    };
    match state.descend(0, 0) {
        Step::Found => {
            let mut out = vec![0; m];
            for (pos, &e) in order.iter().enumerate() {
                out[e.index()] = state.assigned[pos];
            }
            Ok(SearchOutcome::Found(EdgeColoring::new(out, k as u32)))
        }
        Step::Exhausted => Ok(SearchOutcome::Infeasible),
        Step::OutOfBudget => Ok(SearchOutcome::BudgetExceeded),
    }
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct EdgeSearch<'a> {
    ends: &'a [(usize, usize)],
    palette: Mask,
    used: Vec<Mask>,
    assigned: Vec<Color>,
    meter: Meter,
}

impl EdgeSearch<'_> {
    fn descend(&mut self, pos: usize, max_used: u32) -> Step {
        if pos == self.ends.len() {
            return Step::Found;
        }
        if !self.meter.tick() {
            return Step::OutOfBudget;
        }
        let (u, v) = self.ends[pos];
        let fresh_limit = full_mask((max_used + 1) as usize);
        let free = self.palette & fresh_limit & !(self.used[u] | self.used[v]);
        for c in colors(free) {
            let b = bit(c);
            self.used[u] |= b;
            self.used[v] |= b;
            self.assigned[pos] = c;
            match self.descend(pos + 1, max_used.max(c)) {
                Step::Exhausted => {}
                other => return other,
            }
            self.used[u] &= !b;
            self.used[v] &= !b;
        }
        Step::Exhausted
    }
}

/// The chromatic index `χ'(g)`, searching only `Δ` and `Δ + 1`.
pub fn chromatic_index(g: &Graph) -> Result<usize> {
    chromatic_index_with_budget(g, Budget::unlimited())
}

pub fn chromatic_index_with_budget(g: &Graph, budget: Budget) -> Result<usize> {
    let delta = g.max_degree();
    match edge_color_exact_with_budget(g, delta, budget)? {
        SearchOutcome::Found(_) => Ok(delta),
        // Vizing: every simple graph is (Δ + 1)-edge-colorable.
        SearchOutcome::Infeasible => Ok(delta + 1),
        SearchOutcome::BudgetExceeded => Err(Error::BudgetExceeded),
    }
}

/// Minimum edge coloring; `(χ', coloring)`.
pub fn optimal_edge_coloring(g: &Graph, budget: Budget) -> Result<EdgeColoring> {
    let delta = g.max_degree();
    for k in [delta, delta + 1] {
        match edge_color_exact_with_budget(g, k, budget)? {
            SearchOutcome::Found(ec) => return Ok(ec),
            SearchOutcome::Infeasible => {}
            SearchOutcome::BudgetExceeded => return Err(Error::BudgetExceeded),
        }
    }
    unreachable!("every simple graph is (Δ+1)-edge-colorable")
}

/// Doubles a proper edge `k`-coloring: edge color `c` becomes the incidence
/// pair `(c, c + k)`, the lower endpoint taking `c`.
pub fn double(g: &Graph, ec: &EdgeColoring) -> Result<IncidenceColoring> {
    ec.check_proper(g)?;
    let k = ec.palette();
    Ok(IncidenceColoring::from_pairs(
        ec.colors().iter().map(|&c| [c, c + k]).collect(),
    ))
}
