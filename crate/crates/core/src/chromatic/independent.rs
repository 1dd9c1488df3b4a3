//! Independent sets: maximum size and enumeration of the maximal ones.
//!
//! Both work on the complement graph, where independent sets are cliques.

use super::{bits, check_order, full_mask, masks, SolverError, DEFAULT_SET_CAP, MAX_ORDER};
use crate::graph::Graph;

fn complement_masks(g: &Graph) -> Vec<u64> {
    let full = full_mask(g.order());
    masks(g)
        .into_iter()
        .enumerate()
        .map(|(v, m)| !m & full & !(1u64 << v))
        .collect()
}

/// Independence number, by branch and bound for a maximum clique in the
/// complement with greedy-colouring upper bounds.
pub fn independence_number(g: &Graph) -> Result<usize, SolverError> {
    check_order(g.order(), MAX_ORDER)?;
    let co = complement_masks(g);
    let mut best = 0u64;
    expand(&co, 0, full_mask(g.order()), &mut best);
    Ok(best.count_ones() as usize)
}

/// A maximum independent set of `g`, as a vertex mask.
pub fn maximum_independent_set(g: &Graph) -> Result<u64, SolverError> {
    check_order(g.order(), MAX_ORDER)?;
    let co = complement_masks(g);
    let mut best = 0u64;
    expand(&co, 0, full_mask(g.order()), &mut best);
    Ok(best)
}

fn expand(adj: &[u64], clique: u64, cand: u64, best: &mut u64) {
    if cand == 0 {
        if clique.count_ones() > best.count_ones() {
            *best = clique;
        }
        return;
    }
    // Greedy colouring of the candidates; vertex i of `order` can extend the
    // clique by at most `bound[i]` vertices using candidates up to it.
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut bound = Vec::with_capacity(order.capacity());
    let mut uncolored = cand;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1u64 << v) & !adj[v];
            uncolored &= !(1u64 << v);
            order.push(v);
            bound.push(color);
        }
    }
    let mut cand = cand;
    for i in (0..order.len()).rev() {
        if clique.count_ones() + bound[i] <= best.count_ones() {
            return;
        }
        let v = order[i];
        expand(adj, clique | (1u64 << v), cand & adj[v], best);
        cand &= !(1u64 << v);
    }
}

/// All maximal independent sets of a graph, as vertex masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSetCollection {
    pub order: usize,
    pub sets: Vec<u64>,
}

impl IndependentSetCollection {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn vertices(&self, idx: usize) -> Vec<usize> {
        bits(self.sets[idx]).collect()
    }
}

pub fn maximal_independent_sets(g: &Graph) -> Result<IndependentSetCollection, SolverError> {
    maximal_independent_sets_capped(g, DEFAULT_SET_CAP)
}

/// Bron–Kerbosch with Tomita pivoting on the complement. Fails once more
/// than `cap` sets have been found.
pub fn maximal_independent_sets_capped(g: &Graph, cap: usize) -> Result<IndependentSetCollection, SolverError> {
    check_order(g.order(), MAX_ORDER)?;
    let co = complement_masks(g);
    let mut sets = Vec::new();
    bron_kerbosch(&co, 0, full_mask(g.order()), 0, &mut sets, cap)?;
    Ok(IndependentSetCollection {
        order: g.order(),
        sets,
    })
}

fn bron_kerbosch(
    adj: &[u64],
    r: u64,
    mut p: u64,
    mut x: u64,
    out: &mut Vec<u64>,
    cap: usize,
) -> Result<(), SolverError> {
    if p == 0 {
        if x == 0 {
            if out.len() == cap {
                return Err(SolverError::SetCapExceeded { cap });
            }
            out.push(r);
        }
        return Ok(());
    }
    let pivot = bits(p | x)
        .max_by_key(|&u| (p & adj[u]).count_ones())
        .expect("p is nonempty");
    for v in bits(p & !adj[pivot]) {
        let bit = 1u64 << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out, cap)?;
        p &= !bit;
        x |= bit;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn is_independent(g: &Graph, set: u64) -> bool {
        bits(set).all(|u| g.neighbor_mask(u) & set == 0)
    }

    /// Brute force over all vertex subsets.
    fn alpha_brute(g: &Graph) -> usize {
        (0u64..1 << g.order())
            .filter(|&s| is_independent(g, s))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    fn maximal_brute(g: &Graph) -> Vec<u64> {
        let n = g.order();
        let mut out: Vec<u64> = (0u64..1 << n)
            .filter(|&s| is_independent(g, s))
            .filter(|&s| (0..n).all(|v| s & (1 << v) != 0 || !is_independent(g, s | (1 << v))))
            .collect();
        out.sort_unstable();
        out
    }

    #[test]
    fn alpha_fixtures() {
        assert_eq!(independence_number(&gen_cycle(5).unwrap()).unwrap(), 2);
        assert_eq!(independence_number(&petersen()).unwrap(), alpha_brute(&petersen()));
        assert_eq!(alpha_brute(&petersen()), 4);
        for n in 1..8 {
            assert_eq!(independence_number(&gen_complete(n).unwrap()).unwrap(), 1);
        }
        assert_eq!(independence_number(&Graph::empty(64).unwrap()).unwrap(), 64);
        // Kneser(7,3): stars of size C(6,2) = 15
        assert_eq!(independence_number(&gen_kneser(7, 3).unwrap()).unwrap(), 15);
        let g = gen_generalized_petersen(8, 3).unwrap();
        assert_eq!(independence_number(&g).unwrap(), alpha_brute(&g));
        let set = maximum_independent_set(&g).unwrap();
        assert!(is_independent(&g, set));
    }

    #[test]
    fn maximal_sets_fixtures() {
        let c5 = maximal_independent_sets(&gen_cycle(5).unwrap()).unwrap();
        assert_eq!(c5.len(), 5);
        assert!(c5.sets.iter().all(|s| s.count_ones() == 2));
        let k4 = maximal_independent_sets(&gen_complete(4).unwrap()).unwrap();
        assert_eq!(k4.len(), 4);
        assert!(k4.sets.iter().all(|s| s.count_ones() == 1));
        let e = maximal_independent_sets(&Graph::empty(6).unwrap()).unwrap();
        assert_eq!(e.sets, vec![0b111111]);
    }

    #[test]
    fn maximal_sets_match_brute_force() {
        for g in [petersen(), gen_barbell(4).unwrap(), gen_generalized_petersen(6, 2).unwrap(), gen_path(9).unwrap()] {
            let mut got = maximal_independent_sets(&g).unwrap().sets;
            got.sort_unstable();
            assert_eq!(got, maximal_brute(&g), "{g}");
        }
    }

    #[test]
    fn cap() {
        assert_eq!(
            maximal_independent_sets_capped(&gen_cycle(5).unwrap(), 4),
            Err(SolverError::SetCapExceeded { cap: 4 })
        );
        assert!(maximal_independent_sets_capped(&gen_cycle(5).unwrap(), 5).is_ok());
    }
}
