//! Deterministic graph families used as a test and benchmark corpus.

use std::collections::BTreeSet;
use std::fmt;

use super::{Graph, GraphError, Vertex};
use crate::rng::SeededRng;

/// Restarts allowed before the pairing procedure for random regular graphs gives up.
pub const RANDOM_REGULAR_MAX_RESTARTS: usize = 1000;

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Empty { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { left: usize, right: usize },
    Hypercube { dim: u32 },
    RandomRegular { n: usize, d: usize },
    ErdosRenyi { n: usize, p: f64 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Empty { n } => write!(f, "empty(n={n})"),
            Family::Path { n } => write!(f, "path(n={n})"),
            Family::Cycle { n } => write!(f, "cycle(n={n})"),
            Family::Complete { n } => write!(f, "complete(n={n})"),
            Family::CompleteBipartite { left, right } => write!(f, "complete_bipartite({left},{right})"),
            Family::Hypercube { dim } => write!(f, "hypercube(dim={dim})"),
            Family::RandomRegular { n, d } => write!(f, "random_regular(n={n},d={d})"),
            Family::ErdosRenyi { n, p } => write!(f, "erdos_renyi(n={n},p={p})"),
        }
    }
}

fn infeasible(msg: impl Into<String>) -> GraphError {
    GraphError::Generation(msg.into())
}

/// Builds a member of `family`. Only the random families consume `seed`.
pub fn generate(family: &Family, seed: u64) -> Result<Graph, GraphError> {
    match *family {
        Family::Empty { n } => Ok(Graph::empty(n)),
        Family::Path { n } => Graph::from_edges(n, (1..n).map(|i| (i, i + 1))),
        Family::Cycle { n } => {
            if n < 3 {
                return Err(infeasible(format!("a cycle needs at least 3 vertices, got {n}")));
            }
            Graph::from_edges(n, (1..=n).map(|i| (i, i % n + 1)))
        }
        Family::Complete { n } => Graph::from_edges(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)))),
        Family::CompleteBipartite { left, right } => {
            Graph::from_edges(left + right, (1..=left).flat_map(|u| (left + 1..=left + right).map(move |v| (u, v))))
        }
        Family::Hypercube { dim } => {
            if dim > 20 {
                return Err(infeasible(format!("hypercube dimension {dim} is too large")));
            }
            let n = 1usize << dim;
            let edges = (0..n).flat_map(|x| (0..dim).map(move |b| (x, x ^ (1 << b)))).filter(|&(x, y)| x < y);
            Graph::from_edges(n, edges.map(|(x, y)| (x + 1, y + 1)))
        }
        Family::RandomRegular { n, d } => random_regular(n, d, seed, RANDOM_REGULAR_MAX_RESTARTS),
        Family::ErdosRenyi { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(infeasible(format!("edge probability {p} outside [0, 1]")));
            }
            let mut rng = SeededRng::new(seed);
            let mut edges = Vec::new();
            for u in 1..=n {
                for v in u + 1..=n {
                    if rng.unit_f64() < p {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges)
        }
    }
}

/// Random `d`-regular graph from the pairing model, pairing points one at a
/// time and restarting whenever the remaining points admit no simple pairing.
pub fn random_regular(n: usize, d: usize, seed: u64, max_restarts: usize) -> Result<Graph, GraphError> {
    if d == 0 {
        return Ok(Graph::empty(n));
    }
    if d >= n {
        return Err(infeasible(format!("degree {d} must be smaller than n = {n}")));
    }
    if n * d % 2 != 0 {
        return Err(infeasible(format!("n * d = {} must be even", n * d)));
    }
    let mut rng = SeededRng::new(seed);
    for _ in 0..max_restarts {
        if let Some(edges) = try_pairing(n, d, &mut rng) {
            return Graph::from_edges(n, edges);
        }
    }
    Err(infeasible(format!("no simple {d}-regular graph on {n} vertices after {max_restarts} restarts")))
}

fn try_pairing(n: usize, d: usize, rng: &mut SeededRng) -> Option<Vec<(Vertex, Vertex)>> {
    let mut points: Vec<Vertex> = (1..=n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    let mut adjacent: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    let mut edges = Vec::with_capacity(n * d / 2);
    let mut misses = 0usize;
    while !points.is_empty() {
        let i = rng.index(points.len());
        let j = rng.index(points.len());
        let (u, v) = (points[i], points[j]);
        let key = (u.min(v), u.max(v));
        if i == j || u == v || adjacent.contains(&key) {
            misses += 1;
            if misses > 64 && !has_suitable_pair(&points, &adjacent) {
                return None;
            }
            continue;
        }
        misses = 0;
        adjacent.insert(key);
        edges.push(key);
        let (hi, lo) = (i.max(j), i.min(j));
        points.swap_remove(hi);
        points.swap_remove(lo);
    }
    Some(edges)
}

fn has_suitable_pair(points: &[Vertex], adjacent: &BTreeSet<(Vertex, Vertex)>) -> bool {
    points.iter().enumerate().any(|(i, &u)| {
        points[i + 1..].iter().any(|&v| u != v && !adjacent.contains(&(u.min(v), u.max(v))))
    })
}
