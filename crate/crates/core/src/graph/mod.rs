//! Graph and online-instance data model.
//!
//! Vertices are dense ids `0..n`. Adjacency lists are kept sorted so that
//! neighbour scans and edge lookups are deterministic.

mod color;
mod instance;

pub use color::{is_proper, Color, ColorLabel, Coloring, LabelError};
pub use instance::{OnlineInstance, SuffixInstance};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0} in edge ({0},{0})")]
    SelfLoop(usize),
    #[error("edge ({u},{v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("vertex {0} is uncolored")]
    Uncolored(usize),
    #[error("coloring covers {got} vertices but the graph has {n}")]
    ColoringSize { got: usize, n: usize },
    #[error("order not a permutation: {0}")]
    NotAPermutation(String),
    #[error("predictions cover {got} vertices but the graph has {n}")]
    PredictionCount { got: usize, n: usize },
    #[error("suffix position {i} out of range 1..={n}")]
    SuffixOutOfRange { i: usize, n: usize },
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a validated graph. Duplicate edges (in either orientation) are
    /// collapsed; self-loops and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();

        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            adj,
            edges: normalized,
        })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Subgraph induced by `vertices`, relabelled so that `vertices[i]`
    /// becomes vertex `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self.edges.iter().filter_map(|&(u, v)| {
            let (a, b) = (new_id[u], new_id[v]);
            (a != usize::MAX && b != usize::MAX).then_some((a, b))
        });
        Graph::new(vertices.len(), edges).expect("induced edges are valid")
    }

    /// True iff every pair of distinct vertices in `set` is adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Greedy clique: repeatedly add the highest-degree vertex adjacent to
    /// everything chosen so far. A lower bound on the clique number.
    pub fn greedy_clique(&self) -> Vec<usize> {
        let mut by_degree: Vec<usize> = (0..self.n).collect();
        by_degree.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        let mut clique: Vec<usize> = Vec::new();
        for v in by_degree {
            if clique.iter().all(|&u| self.has_edge(u, v)) {
                clique.push(v);
            }
        }
        clique
    }
}
