//! Optimal colorings of connected outer-1-planar graphs.
//!
//! Outer-1-planarity is the caller's promise and is not checked. The output
//! is always verified, so a broken promise shows up as an error (typically
//! [`Error::NotClassOne`] or [`Error::BudgetExceeded`]), never as a wrong
//! coloring.

use alloc::vec::Vec;
use core::fmt;

use crate::class_p::{color_class_p_plus_with_budget, is_in_p_plus};
use crate::closed_form::color_cycle;
use crate::edge_coloring::{double, edge_color_exact_with_budget};
use crate::graph::{palette_count, verify, Graph, IncidenceColoring, VertexId};
use crate::search::{Budget, SearchOutcome};
use crate::{Error, Result};

/// Which branch of the dispatcher produced a coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum O1pCase {
    CycleC3,
    CycleEven,
    CycleOdd,
    ClassPPlus,
    ClassOne,
}

impl fmt::Display for O1pCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            O1pCase::CycleC3 => "cycle-c3",
            O1pCase::CycleEven => "cycle-even",
            O1pCase::CycleOdd => "cycle-odd",
            O1pCase::ClassPPlus => "class-p-plus",
            O1pCase::ClassOne => "class-one",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct O1pVerdict {
    pub case: O1pCase,
    pub chi: usize,
    pub coloring: IncidenceColoring,
}

fn case_of(g: &Graph) -> O1pCase {
    if g.is_cycle() {
        match g.vertex_count() {
            3 => O1pCase::CycleC3,
            n if n % 2 == 0 => O1pCase::CycleEven,
            _ => O1pCase::CycleOdd,
        }
    } else if is_in_p_plus(g) {
        O1pCase::ClassPPlus
    } else {
        O1pCase::ClassOne
    }
}

fn chi_of(case: O1pCase, g: &Graph) -> usize {
    match case {
        O1pCase::CycleC3 => 6,
        O1pCase::CycleEven => 4,
        O1pCase::CycleOdd => 5,
        O1pCase::ClassPPlus => 7,
        O1pCase::ClassOne => 2 * g.max_degree(),
    }
}

/// The order in which a cycle visits its vertices, from vertex 0 towards
/// its lower neighbor.
fn cycle_walk(g: &Graph) -> Vec<VertexId> {
    let n = g.vertex_count();
    let mut walk = Vec::with_capacity(n);
    let (mut prev, mut cur) = (None, VertexId(0));
    while walk.len() < n {
        walk.push(cur);
        let next = g
            .neighbors(cur)
            .filter(|&w| Some(w) != prev)
            .min()
            .expect("cycle vertices have degree 2");
        prev = Some(cur);
        cur = next;
    }
    walk
}

pub fn color_o1p(g: &Graph) -> Result<O1pVerdict> {
    color_o1p_with_budget(g, Budget::unlimited())
}

/// Dispatches a connected graph to the cycle construction, the class `P+`
/// colorer, or the doubling of an exact `Δ`-edge-coloring.
pub fn color_o1p_with_budget(g: &Graph, budget: Budget) -> Result<O1pVerdict> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let case = case_of(g);
    let coloring = match case {
        O1pCase::CycleC3 | O1pCase::CycleEven | O1pCase::CycleOdd => {
            let (cg, cc) = color_cycle(g.vertex_count())?;
            let mut c = IncidenceColoring::uncolored(g.edge_count());
            c.copy_from(g, &cg, &cycle_walk(g), &cc)?;
            c
        }
        O1pCase::ClassPPlus => color_class_p_plus_with_budget(g, budget)?,
        O1pCase::ClassOne => match edge_color_exact_with_budget(g, g.max_degree(), budget)? {
            SearchOutcome::Found(ec) => double(g, &ec)?,
            SearchOutcome::Infeasible => return Err(Error::NotClassOne),
            SearchOutcome::BudgetExceeded => return Err(Error::BudgetExceeded),
        },
    };
    let chi = chi_of(case, g);
    debug_assert!(verify(g, &coloring).is_ok());
    debug_assert_eq!(palette_count(&coloring), chi);
    Ok(O1pVerdict {
        case,
        chi,
        coloring,
    })
}

/// The optimal palette size of a connected outer-1-planar graph, read off
/// its shape without coloring it.
pub fn chi_o1p(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(chi_of(case_of(g), g))
}

/// Verdict for one connected component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentVerdict {
    /// Vertices of the component, ascending.
    pub vertices: Vec<VertexId>,
    pub case: O1pCase,
    pub chi: usize,
}

/// Colorings of all components merged into one, with palettes reused.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Combined {
    /// Maximum over the components.
    pub chi: usize,
    pub coloring: IncidenceColoring,
    pub components: Vec<ComponentVerdict>,
}

/// Runs the dispatcher on each component separately. Components never
/// conflict, so every one of them starts from color 1. Isolated vertices
/// are skipped.
pub fn color_components(g: &Graph, budget: Budget) -> Result<Combined> {
    let mut coloring = IncidenceColoring::uncolored(g.edge_count());
    let mut components = Vec::new();
    let mut chi = 0;
    for vertices in g.components() {
        if vertices.len() < 2 {
            continue;
        }
        let sub = g.induced_subgraph(&vertices)?;
        let verdict = color_o1p_with_budget(&sub, budget)?;
        coloring.copy_from(g, &sub, &vertices, &verdict.coloring)?;
        chi = chi.max(verdict.chi);
        components.push(ComponentVerdict {
            vertices,
            case: verdict.case,
            chi: verdict.chi,
        });
    }
    Ok(Combined {
        chi,
        coloring,
        components,
    })
}
