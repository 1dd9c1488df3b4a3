//! Fractional chromatic number as an exact covering LP.
//!
//! Columns are the maximal independent sets: an optimal fractional colouring
//! never needs a non-maximal set, since enlarging a set only relaxes the
//! covering rows. The optimum is certified by the dual: a vertex weighting
//! `y >= 0` with weight at most 1 on every maximal independent set and the
//! same total.

use num_traits::{One, Signed};

use super::independent::{maximal_independent_sets_capped, IndependentSetCollection};
use super::covering::solve_covering;
use super::{bits, check_order, SolverError, DEFAULT_CHIF_ORDER, DEFAULT_SET_CAP};
use crate::graph::Graph;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FractionalOptions {
    pub max_order: usize,
    pub set_cap: usize,
}

impl Default for FractionalOptions {
    fn default() -> Self {
        FractionalOptions {
            max_order: DEFAULT_CHIF_ORDER,
            set_cap: DEFAULT_SET_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalColoring {
    pub value: Rational,
    pub sets: IndependentSetCollection,
    /// Weight of each maximal independent set, aligned with `sets`.
    pub weights: Vec<Rational>,
    /// Dual vertex weights.
    pub vertex_weights: Vec<Rational>,
}

impl FractionalColoring {
    /// Checks primal and dual feasibility and equal objective values, all in
    /// exact arithmetic.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.order();
        let primal_ok = self.weights.iter().all(|w| !w.is_negative())
            && (0..n).all(|v| {
                self.sets
                    .sets
                    .iter()
                    .zip(&self.weights)
                    .filter(|(s, _)| *s & (1u64 << v) != 0)
                    .map(|(_, w)| w)
                    .sum::<Rational>()
                    >= Rational::one()
            });
        let dual_ok = self.vertex_weights.iter().all(|y| !y.is_negative())
            && self
                .sets
                .sets
                .iter()
                .all(|&s| bits(s).map(|v| &self.vertex_weights[v]).sum::<Rational>() <= Rational::one());
        let sets_ok = self
            .sets
            .sets
            .iter()
            .all(|&s| bits(s).all(|v| g.neighbor_mask(v) & s == 0));
        primal_ok
            && dual_ok
            && sets_ok
            && self.weights.iter().sum::<Rational>() == self.value
            && self.vertex_weights.iter().sum::<Rational>() == self.value
    }
}

pub fn fractional_chromatic(g: &Graph) -> Result<Rational, SolverError> {
    fractional_chromatic_with(g, &FractionalOptions::default()).map(|c| c.value)
}

pub fn fractional_chromatic_with(g: &Graph, opts: &FractionalOptions) -> Result<FractionalColoring, SolverError> {
    check_order(g.order(), opts.max_order)?;
    let sets = maximal_independent_sets_capped(g, opts.set_cap)?;
    let solution = solve_covering(g.order(), &sets.sets)?;
    let coloring = FractionalColoring {
        value: solution.value,
        sets,
        weights: solution.x,
        vertex_weights: solution.duals,
    };
    if !coloring.verify(g) {
        return Err(SolverError::Lp("optimality certificate failed to verify".into()));
    }
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn odd_cycles() {
        for k in 2..6 {
            let n = 2 * k + 1;
            assert_eq!(fractional_chromatic(&gen_cycle(n).unwrap()).unwrap(), q(n as i64, k as i64));
        }
        assert_eq!(fractional_chromatic(&gen_cycle(8).unwrap()).unwrap(), q(2, 1));
    }

    #[test]
    fn small_fixtures() {
        assert_eq!(fractional_chromatic(&petersen()).unwrap(), q(5, 2));
        assert_eq!(fractional_chromatic(&gen_complete_multipartite(&[3, 3]).unwrap()).unwrap(), q(2, 1));
        assert_eq!(fractional_chromatic(&gen_complete(5).unwrap()).unwrap(), q(5, 1));
        assert_eq!(fractional_chromatic(&Graph::empty(1).unwrap()).unwrap(), q(1, 1));
        assert_eq!(fractional_chromatic(&Graph::empty(4).unwrap()).unwrap(), q(1, 1));
    }

    #[test]
    fn certificate_is_checked() {
        let g = gen_barbell(4).unwrap();
        let c = fractional_chromatic_with(&g, &FractionalOptions::default()).unwrap();
        assert!(c.verify(&g));
        assert_eq!(c.value, q(4, 1));
        let mut broken = c.clone();
        broken.vertex_weights[0] += Rational::one();
        assert!(!broken.verify(&g));
    }

    #[test]
    fn order_cap() {
        assert_eq!(
            fractional_chromatic(&gen_cycle(25).unwrap()),
            Err(SolverError::BudgetExceeded { order: 25, budget: 24 })
        );
        let opts = FractionalOptions {
            max_order: 40,
            set_cap: 10,
        };
        assert_eq!(
            fractional_chromatic_with(&gen_cycle(25).unwrap(), &opts).map(|c| c.value),
            Err(SolverError::SetCapExceeded { cap: 10 })
        );
    }
}
