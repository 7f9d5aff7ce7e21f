//! Simple undirected graphs on vertices `1..=n`.

mod dangerous;
mod dimacs;
mod generate;

use std::collections::BTreeSet;

pub use dangerous::{dangerous_set, DangerousSets};
pub use dimacs::{parse_dimacs, to_dimacs};
pub use generate::{generate, Family, RANDOM_REGULAR_MAX_RESTARTS};

/// Vertex id, 1-based.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Domain(String),
    #[error("cannot generate graph: {0}")]
    Generation(String),
}

/// Immutable simple graph with strictly sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    // adjacency[v - 1]
    adjacency: Vec<Vec<Vertex>>,
    m: usize,
    max_degree: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self { adjacency: vec![Vec::new(); n], m: 0, max_degree: 0 }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut sets = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            check_edge(n, u, v)?;
            sets[u - 1].insert(v);
            sets[v - 1].insert(u);
        }
        let adjacency: Vec<Vec<Vertex>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let degree_sum: usize = adjacency.iter().map(Vec::len).sum();
        let max_degree = adjacency.iter().map(Vec::len).max().unwrap_or(0);
        Ok(Self { adjacency, m: degree_sum / 2, max_degree })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v - 1]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v - 1].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.adjacency[u - 1].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices()
            .flat_map(move |u| self.neighbors(u).iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// `|N(u) ∩ N(v)|` by merging the two sorted lists.
    pub fn common_neighbor_count(&self, u: Vertex, v: Vertex) -> Result<usize, GraphError> {
        if u == v {
            return Err(GraphError::Domain(format!("common neighbors of {u} with itself")));
        }
        for x in [u, v] {
            if x == 0 || x > self.n() {
                return Err(GraphError::Domain(format!("vertex {x} out of range 1..={}", self.n())));
            }
        }
        let (a, b) = (self.neighbors(u), self.neighbors(v));
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(count)
    }

    /// Breadth-first distances from `source`; `usize::MAX` marks unreachable vertices.
    /// Indexed by vertex id, slot 0 unused.
    pub fn distances_from(&self, source: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n() + 1];
        let mut queue = std::collections::VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.distances_from(1).iter().skip(1).all(|&d| d != usize::MAX)
    }
}

fn check_edge(n: usize, u: Vertex, v: Vertex) -> Result<(), GraphError> {
    for x in [u, v] {
        if x == 0 || x > n {
            return Err(GraphError::Domain(format!("vertex {x} out of range 1..={n}")));
        }
    }
    if u == v {
        return Err(GraphError::Domain(format!("loop at vertex {u}")));
    }
    Ok(())
}
