//! Named graph families.

use itertools::Itertools;

use crate::graph::{Graph, GraphError};

fn invalid(msg: String) -> GraphError {
    GraphError::InvalidParameters(msg)
}

/// Complete graph K_n.
pub fn gen_complete(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for (u, v) in (0..n).tuple_combinations() {
        g.add_edge(u, v)?;
    }
    Ok(g.with_name(format!("K{n}")))
}

/// Path P_n on `n` vertices.
pub fn gen_path(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v)?;
    }
    Ok(g.with_name(format!("P{n}")))
}

/// Cycle C_n, `n >= 3`.
pub fn gen_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let mut g = Graph::empty(n)?;
    for v in 0..n {
        g.add_edge(v, (v + 1) % n)?;
    }
    Ok(g.with_name(format!("C{n}")))
}

/// Complete multipartite graph with the given part sizes. Vertices are
/// numbered part by part.
pub fn gen_complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(invalid(format!("every part must have size >= 1, got {parts:?}")));
    }
    let mut part_of = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(i).take(p));
    }
    let mut g = Graph::empty(part_of.len())?;
    for (u, v) in (0..part_of.len()).tuple_combinations() {
        if part_of[u] != part_of[v] {
            g.add_edge(u, v)?;
        }
    }
    let label = parts.iter().map(|p| p.to_string()).join(",");
    Ok(g.with_name(format!("K({label})")))
}

/// Kneser graph: the k-subsets of `{0..p-1}` in lexicographic order, adjacent
/// when disjoint. Requires `p >= 2k >= 2`.
pub fn gen_kneser(p: usize, k: usize) -> Result<Graph, GraphError> {
    if k == 0 || p < 2 * k {
        return Err(invalid(format!("kneser needs p >= 2k >= 2, got p={p}, k={k}")));
    }
    if p > 64 {
        return Err(invalid(format!("kneser ground set limited to 64 elements, got p={p}")));
    }
    let subsets: Vec<u64> = (0..p)
        .combinations(k)
        .map(|c| c.iter().fold(0u64, |m, &x| m | (1 << x)))
        .collect();
    let mut g = Graph::empty(subsets.len())?;
    for (i, j) in (0..subsets.len()).tuple_combinations() {
        if subsets[i] & subsets[j] == 0 {
            g.add_edge(i, j)?;
        }
    }
    Ok(g.with_name(format!("Kneser({p},{k})")))
}

/// Generalized Petersen graph GP(n, k): outer cycle `u_i ~ u_{i+1}` on
/// vertices `0..n`, inner edges `v_i ~ v_{i+k}` on `n..2n`, spokes
/// `u_i ~ v_i`. Requires `n >= 3` and `1 <= k < n/2`.
pub fn gen_generalized_petersen(n: usize, k: usize) -> Result<Graph, GraphError> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(invalid(format!(
            "generalized petersen needs n >= 3 and 1 <= k < n/2, got n={n}, k={k}"
        )));
    }
    let mut g = Graph::empty(2 * n)?;
    for i in 0..n {
        g.add_edge(i, (i + 1) % n)?;
        g.add_edge(n + i, n + (i + k) % n)?;
        g.add_edge(i, n + i)?;
    }
    Ok(g.with_name(format!("GP({n},{k})")))
}

/// Barbell graph: two disjoint copies of K_n joined by a single bridge
/// between vertex `n-1` and vertex `n`. Requires `n >= 3`.
pub fn gen_barbell(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid(format!("barbell needs n >= 3, got {n}")));
    }
    let mut g = Graph::empty(2 * n)?;
    for (u, v) in (0..n).tuple_combinations() {
        g.add_edge(u, v)?;
        g.add_edge(n + u, n + v)?;
    }
    g.add_edge(n - 1, n)?;
    Ok(g.with_name(format!("Barbell({n})")))
}

/// Petersen graph, as the Kneser graph K(5,2).
pub fn petersen() -> Graph {
    gen_kneser(5, 2).expect("valid parameters").with_name("Petersen")
}
