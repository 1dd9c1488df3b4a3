//! Reference implementations used as test oracles. They are deliberately
//! naive and share no code with the library algorithms they check.

#![allow(dead_code)]

use inertial::Graph;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    perm
}

fn is_proper(g: &Graph, colors: &[usize]) -> bool {
    g.edges().all(|(u, v)| colors[u] != colors[v])
}

/// Smallest `k` admitting a proper colouring, by trying all `k^n`
/// assignments.
pub fn chi_brute(g: &Graph) -> usize {
    let n = g.order();
    if g.is_edgeless() {
        return 1;
    }
    for k in 2..=n {
        let mut colors = vec![0usize; n];
        loop {
            if is_proper(g, &colors) {
                return k;
            }
            let mut i = 0;
            while i < n {
                colors[i] += 1;
                if colors[i] < k {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    n
}

/// Independence number over all vertex subsets.
pub fn alpha_brute(g: &Graph) -> usize {
    let n = g.order();
    (0u32..1 << n)
        .filter(|&s| g.edges().all(|(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `det(xI - A)` evaluated at an integer point.
pub fn charpoly_at(g: &Graph, x: i64) -> BigInt {
    let n = g.order();
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::from(x)
                    } else if g.has_edge(i, j) {
                        BigInt::from(-1)
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    det_bareiss(m)
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n || n < 0 {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Kneser graph inertia from its known spectrum: eigenvalue
/// `(-1)^i C(p-k-i, k-i)` with multiplicity `C(p,i) - C(p,i-1)`, i = 0..k.
pub fn kneser_inertia_from_spectrum(p: i64, k: i64) -> (usize, usize, usize) {
    let (mut plus, mut zero, mut minus) = (0, 0, 0);
    for i in 0..=k {
        let value = binom(p - k - i, k - i);
        let mult = (binom(p, i) - binom(p, i - 1)) as usize;
        match (value == 0, i % 2 == 0) {
            (true, _) => zero += mult,
            (false, true) => plus += mult,
            (false, false) => minus += mult,
        }
    }
    (plus, zero, minus)
}

/// The folded 5-cube: 4-bit words adjacent when they differ in one bit or
/// in all four.
pub fn clebsch() -> Graph {
    let mut g = Graph::empty(16).unwrap();
    for u in 0..16usize {
        for v in u + 1..16 {
            let d = (u ^ v).count_ones();
            if d == 1 || d == 4 {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}
