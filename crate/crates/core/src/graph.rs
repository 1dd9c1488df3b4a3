//! Simple undirected graphs stored as symmetric bit-adjacency rows.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
}

/// A simple undirected graph on vertices `0..order`.
///
/// Row `v` of the adjacency matrix is a packed bitset of `words` u64s. The
/// constructor and every mutation keep the matrix symmetric with an empty
/// diagonal.
#[derive(Clone)]
pub struct Graph {
    order: usize,
    words: usize,
    rows: Vec<u64>,
    name: Option<String>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        if order == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let words = order.div_ceil(64);
        Ok(Graph {
            order,
            words,
            rows: vec![0; order * words],
            name: None,
        })
    }

    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: Option<String>) {
        self.name = name;
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.order {
                return Err(GraphError::VertexOutOfRange {
                    vertex: x,
                    order: self.order,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.set_bit(u, v);
        self.set_bit(v, u);
        Ok(())
    }

    #[inline]
    fn set_bit(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order
            && v < self.order
            && self.rows[u * self.words + v / 64] & (1u64 << (v % 64)) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.rows.iter().all(|&w| w == 0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&u| self.has_edge(v, u))
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| (u + 1..self.order).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Neighbourhood of `v` as a single word. Only meaningful for graphs of
    /// order at most 64.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        debug_assert!(self.order <= 64);
        self.rows[v * self.words]
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.order)
            .map(|u| (0..self.order).map(|v| self.has_edge(u, v) as i64).collect())
            .collect()
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.order).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.order];
        for start in 0..self.order {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        stack.push(v);
                    } else if side[v] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Complement graph: `{u, v}` is an edge iff it is not an edge here.
    pub fn complement(&self) -> Graph {
        let mut h = Graph::empty(self.order).expect("order >= 1");
        for u in 0..self.order {
            for v in 0..self.order {
                if u != v && !self.has_edge(u, v) {
                    h.set_bit(u, v);
                }
            }
        }
        h.name = self.name.as_ref().map(|n| match n.strip_prefix("co-") {
            Some(inner) => inner.to_string(),
            None => format!("co-{n}"),
        });
        h
    }

    /// Block-diagonal union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.order;
        let mut h = Graph::empty(self.order + other.order).expect("order >= 1");
        for (u, v) in self.edges() {
            h.add_edge(u, v).expect("in range");
        }
        for (u, v) in other.edges() {
            h.add_edge(u + offset, v + offset).expect("in range");
        }
        if let (Some(a), Some(b)) = (&self.name, &other.name) {
            h.name = Some(if a == b { format!("2{a}") } else { format!("{a}+{b}") });
        }
        h
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order, "permutation length");
        let mut h = Graph::empty(self.order).expect("order >= 1");
        for (u, v) in self.edges() {
            h.add_edge(perm[u], perm[v]).expect("permutation in range");
        }
        h.name = self.name.clone();
        h
    }

    /// Checks the structural invariants. Always true for values built
    /// through this module's API.
    pub fn is_well_formed(&self) -> bool {
        (0..self.order).all(|u| {
            !self.has_edge(u, u) && (0..self.order).all(|v| self.has_edge(u, v) == self.has_edge(v, u))
        }) && (0..self.order).all(|u| {
            // padding bits past `order` stay clear
            let row = self.row(u);
            let tail = self.order % 64;
            tail == 0 || row[self.words - 1] >> tail == 0
        })
    }
}

// Equality is structural; the label is ignored.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.rows.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "graph(n={}, m={})", self.order, self.edge_count()),
        }
    }
}
