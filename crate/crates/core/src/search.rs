//! Shared plumbing for the exact backtracking searches.

use crate::Error;

/// Largest palette the bitmask searches handle.
pub(crate) const MAX_COLORS: usize = 128;

pub(crate) type Mask = u128;

/// Result of an exact search that may be cut short.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The search space was exhausted without a solution.
    Infeasible,
    /// The node budget ran out before the search could decide.
    BudgetExceeded,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, SearchOutcome::Infeasible)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found(t) => SearchOutcome::Found(f(t)),
            SearchOutcome::Infeasible => SearchOutcome::Infeasible,
            SearchOutcome::BudgetExceeded => SearchOutcome::BudgetExceeded,
        }
    }
}

/// Limit on the number of search nodes (partial assignments) an exact
/// search may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Budget {
    nodes: Option<u64>,
}

impl Budget {
    pub const fn unlimited() -> Self {
        Budget { nodes: None }
    }

    pub const fn nodes(limit: u64) -> Self {
        Budget { nodes: Some(limit) }
    }

    pub fn limit(&self) -> Option<u64> {
        self.nodes
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter {
            left: self.nodes,
        }
    }
}

pub(crate) struct Meter {
    left: Option<u64>,
}

impl Meter {
    /// Charges one node; false once the budget is spent.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        match &mut self.left {
            None => true,
            Some(0) => false,
            Some(n) => {
                *n -= 1;
                true
            }
        }
    }
}

pub(crate) fn check_palette(k: usize) -> Result<(), Error> {
    if k > MAX_COLORS {
        Err(Error::PaletteTooLarge {
            requested: k,
            max: MAX_COLORS,
        })
    } else {
        Ok(())
    }
}

/// Bits `0..k` set; bit `c - 1` stands for color `c`.
#[inline]
pub(crate) fn full_mask(k: usize) -> Mask {
    if k >= MAX_COLORS {
        Mask::MAX
    } else {
        (1 << k) - 1
    }
}

#[inline]
pub(crate) fn bit(color: u32) -> Mask {
    1 << (color - 1)
}

/// Iterates the colors whose bits are set, ascending.
pub(crate) fn colors(mut mask: Mask) -> impl Iterator<Item = u32> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let c = mask.trailing_zeros();
            mask &= mask - 1;
            Some(c + 1)
        }
    })
}
