//! DSATUR branch and bound.
//!
//! The search keeps, for every vertex, how many neighbours carry each colour
//! and the resulting saturation mask. Branching picks the uncoloured vertex
//! of highest saturation, then highest degree into the uncoloured subgraph,
//! then lowest index. A greedily grown clique is precoloured, which both
//! seeds the lower bound and breaks colour symmetry.

use num_traits::ToPrimitive;

use super::{bits, check_order, full_mask, masks, SolverError, DEFAULT_VERTEX_BUDGET};
use crate::bounds::{ceil_rational, hoffman_full_chi, inertial_bound};
use crate::graph::Graph;
use crate::inertia::inertia;
use crate::spectrum::{numeric_spectrum, DEFAULT_TOL};

const UNCOLORED: u8 = u8::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChromaticOptions {
    pub vertex_budget: usize,
    /// Also use the inertial and full Hoffman bounds as lower bounds, so the
    /// search can stop as soon as it meets them. Verification of those very
    /// bounds must turn this off.
    pub spectral_pruning: bool,
}

impl Default for ChromaticOptions {
    fn default() -> Self {
        ChromaticOptions {
            vertex_budget: DEFAULT_VERTEX_BUDGET,
            spectral_pruning: true,
        }
    }
}

/// An optimal proper colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub num_colors: usize,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
            && self.colors.iter().all(|&c| c < self.num_colors)
    }
}

/// Exact chromatic number with spectral pruning enabled.
pub fn chromatic_number(g: &Graph, vertex_budget: usize) -> Result<usize, SolverError> {
    let opts = ChromaticOptions {
        vertex_budget,
        spectral_pruning: true,
    };
    optimal_coloring(g, &opts).map(|c| c.num_colors)
}

pub fn optimal_coloring(g: &Graph, opts: &ChromaticOptions) -> Result<Coloring, SolverError> {
    check_order(g.order(), opts.vertex_budget)?;
    let n = g.order();
    if g.is_edgeless() {
        return Ok(Coloring {
            colors: vec![0; n],
            num_colors: 1,
        });
    }
    let adj = masks(g);
    let clique = greedy_clique(&adj);
    let mut lower = clique.len();
    if opts.spectral_pruning {
        lower = lower.max(spectral_lower_bound(g));
    }
    let mut search = Search::new(&adj, n);
    for (c, &v) in clique.iter().enumerate() {
        search.assign(v, c as u8);
    }
    let greedy = search.clone().greedy();
    let mut best = greedy.iter().map(|&c| c as usize + 1).max().unwrap_or(1);
    let mut best_colors = greedy;
    if best > lower {
        search.branch(clique.len(), lower, &mut best, &mut best_colors);
    }
    Ok(Coloring {
        colors: best_colors.into_iter().map(usize::from).collect(),
        num_colors: best,
    })
}

fn spectral_lower_bound(g: &Graph) -> usize {
    let inertial = inertial_bound(inertia(g))
        .ok()
        .and_then(|b| ceil_rational(&b).to_usize())
        .unwrap_or(1);
    let hoffman = numeric_spectrum(g, DEFAULT_TOL)
        .ok()
        .and_then(|s| hoffman_full_chi(&s, DEFAULT_TOL).ok())
        .unwrap_or(1);
    inertial.max(hoffman)
}

/// Largest of the cliques grown greedily from each start vertex, always
/// adding the candidate with the most neighbours among the candidates.
fn greedy_clique(adj: &[u64]) -> Vec<usize> {
    let mut best = Vec::new();
    for start in 0..adj.len() {
        let mut clique = vec![start];
        let mut cand = adj[start];
        while cand != 0 {
            let v = bits(cand)
                .max_by_key(|&v| ((adj[v] & cand).count_ones(), std::cmp::Reverse(v)))
                .expect("nonempty");
            clique.push(v);
            cand &= adj[v];
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

#[derive(Clone)]
struct Search<'a> {
    adj: &'a [u64],
    colors: Vec<u8>,
    uncolored: u64,
    counts: Vec<u8>,
    saturation: Vec<u64>,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [u64], n: usize) -> Self {
        Search {
            adj,
            colors: vec![UNCOLORED; n],
            uncolored: full_mask(n),
            counts: vec![0; n * 64],
            saturation: vec![0; n],
        }
    }

    fn assign(&mut self, v: usize, c: u8) {
        self.colors[v] = c;
        self.uncolored &= !(1u64 << v);
        for u in bits(self.adj[v]) {
            let slot = &mut self.counts[u * 64 + c as usize];
            *slot += 1;
            if *slot == 1 {
                self.saturation[u] |= 1u64 << c;
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = UNCOLORED;
        self.uncolored |= 1u64 << v;
        for u in bits(self.adj[v]) {
            let slot = &mut self.counts[u * 64 + c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] &= !(1u64 << c);
            }
        }
    }

    fn select(&self) -> Option<usize> {
        bits(self.uncolored).max_by_key(|&v| {
            (
                self.saturation[v].count_ones(),
                (self.adj[v] & self.uncolored).count_ones(),
                std::cmp::Reverse(v),
            )
        })
    }

    /// DSATUR greedy completion: lowest admissible colour each step.
    fn greedy(mut self) -> Vec<u8> {
        while let Some(v) = self.select() {
            let c = (!self.saturation[v]).trailing_zeros() as u8;
            self.assign(v, c);
        }
        self.colors
    }

    fn branch(&mut self, used: usize, lower: usize, best: &mut usize, best_colors: &mut Vec<u8>) -> bool {
        let Some(v) = self.select() else {
            if used < *best {
                *best = used;
                best_colors.clone_from(&self.colors);
            }
            return *best <= lower;
        };
        let limit = (used + 1).min(*best - 1);
        for c in 0..limit {
            if self.saturation[v] & (1u64 << c) != 0 {
                continue;
            }
            self.assign(v, c as u8);
            let done = self.branch(used.max(c + 1), lower, best, best_colors);
            self.unassign(v);
            if done {
                return true;
            }
            if *best - 1 <= c {
                break;
            }
        }
        false
    }
}
