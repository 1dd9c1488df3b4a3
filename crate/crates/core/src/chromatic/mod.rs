//! Exact chromatic number, independence number and fractional chromatic
//! number for graphs of desk-scale order (at most 64 vertices).

mod coloring;
mod covering;
mod fractional;
mod independent;
pub mod simplex;

pub use covering::{solve_covering, CoveringSolution};
pub use coloring::{chromatic_number, optimal_coloring, ChromaticOptions, Coloring};
pub use fractional::{fractional_chromatic, fractional_chromatic_with, FractionalColoring, FractionalOptions};
pub use independent::{independence_number, maximum_independent_set, maximal_independent_sets, maximal_independent_sets_capped, IndependentSetCollection};

use thiserror::Error;

/// Largest order the bitmask solvers accept.
pub const MAX_ORDER: usize = 64;
/// Default order limit for chromatic and independence numbers.
pub const DEFAULT_VERTEX_BUDGET: usize = 64;
/// Default order limit for the fractional chromatic number.
pub const DEFAULT_CHIF_ORDER: usize = 24;
/// Default cap on the number of maximal independent sets enumerated.
pub const DEFAULT_SET_CAP: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("graph order {order} exceeds the vertex budget {budget}")]
    BudgetExceeded { order: usize, budget: usize },
    #[error("more than {cap} maximal independent sets")]
    SetCapExceeded { cap: usize },
    #[error("linear program failed: {0}")]
    Lp(String),
}

fn check_order(order: usize, budget: usize) -> Result<(), SolverError> {
    let budget = budget.min(MAX_ORDER);
    if order > budget {
        return Err(SolverError::BudgetExceeded { order, budget });
    }
    Ok(())
}

/// Neighbourhood masks of `g`, one word per vertex.
fn masks(g: &crate::graph::Graph) -> Vec<u64> {
    (0..g.order()).map(|v| g.neighbor_mask(v)).collect()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a word, lowest first.
fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}
