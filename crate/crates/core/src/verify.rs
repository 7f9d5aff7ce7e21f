//! Ground truth for colorings: an acyclicity checker with witnesses, an
//! exact acyclic chromatic number for tiny graphs, and the greedy coloring
//! of the square graph.

use std::collections::{BTreeSet, HashMap, VecDeque};

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::engine::{Color, PartialColoring};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_BRUTE_FORCE_CAP: usize = 9;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("vertex {0} is uncolored")]
    Uncolored(Vertex),
    #[error("coloring has {got} entries but the graph has {n} vertices")]
    LengthMismatch { got: usize, n: usize },
    #[error("graph has {n} vertices, above the brute-force cap of {cap}")]
    TooLarge { n: usize, cap: usize },
}

/// Evidence that a coloring is not acyclic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    MonochromaticEdge(Vertex, Vertex),
    /// Closed walk listed once, first vertex not repeated.
    BichromaticCycle(Vec<Vertex>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub proper: bool,
    pub acyclic: bool,
    pub witness: Option<Witness>,
    pub colors_used: usize,
}

/// Checks a complete coloring; `colors[i]` belongs to vertex `i + 1`.
pub fn verify_acyclic(g: &Graph, colors: &[Color]) -> Result<VerifyReport, VerifyError> {
    if colors.len() != g.n() {
        return Err(VerifyError::LengthMismatch { got: colors.len(), n: g.n() });
    }
    let opts: Vec<Option<Color>> = colors.iter().map(|&c| Some(c)).collect();
    let witness = violation(g, &opts);
    let proper = !matches!(witness, Some(Witness::MonochromaticEdge(..)));
    Ok(VerifyReport {
        proper,
        acyclic: witness.is_none(),
        witness,
        colors_used: colors.iter().collect::<BTreeSet<_>>().len(),
    })
}

/// Like [`verify_acyclic`] but for optional colors; uncolored entries are an error.
pub fn verify_optional(g: &Graph, colors: &[Option<Color>]) -> Result<VerifyReport, VerifyError> {
    let full: Vec<Color> = colors
        .iter()
        .enumerate()
        .map(|(i, c)| c.ok_or(VerifyError::Uncolored(i + 1)))
        .collect::<Result<_, _>>()?;
    verify_acyclic(g, &full)
}

/// First violation among the colored vertices of a partial coloring.
pub fn partial_violation(g: &Graph, c: &PartialColoring) -> Option<Witness> {
    violation(g, c.as_slice())
}

fn violation(g: &Graph, colors: &[Option<Color>]) -> Option<Witness> {
    let color = |v: Vertex| colors[v - 1];
    let mut by_pair: HashMap<(Color, Color), Vec<(Vertex, Vertex)>> = HashMap::new();
    for (u, v) in g.edges() {
        let (Some(a), Some(b)) = (color(u), color(v)) else { continue };
        if a == b {
            return Some(Witness::MonochromaticEdge(u, v));
        }
        by_pair.entry((a.min(b), a.max(b))).or_default().push((u, v));
    }
    let mut pairs: Vec<_> = by_pair.into_iter().collect();
    pairs.sort_unstable();
    for (_, edges) in pairs {
        let mut local: HashMap<Vertex, usize> = HashMap::new();
        for &(u, v) in &edges {
            let next = local.len();
            local.entry(u).or_insert(next);
            let next = local.len();
            local.entry(v).or_insert(next);
        }
        let mut uf = UnionFind::<usize>::new(local.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            if !uf.union(local[&u], local[&v]) {
                let mut path = forest_path(&edges[..i], u, v);
                path.reverse();
                return Some(Witness::BichromaticCycle(path));
            }
        }
    }
    None
}

// Path from `from` to `to` in the forest spanned by `edges`.
fn forest_path(edges: &[(Vertex, Vertex)], from: Vertex, to: Vertex) -> Vec<Vertex> {
    let mut adj: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    for &(u, v) in edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let mut parent: HashMap<Vertex, Vertex> = HashMap::from([(from, from)]);
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        for &w in adj.get(&u).map(Vec::as_slice).unwrap_or(&[]) {
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(w) {
                e.insert(u);
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[&cur];
        path.push(cur);
    }
    path
}

/// Exact acyclic chromatic number by backtracking, for `n <= cap`.
pub fn brute_force_chi_a(g: &Graph, cap: usize) -> Result<usize, VerifyError> {
    if g.n() > cap {
        return Err(VerifyError::TooLarge { n: g.n(), cap });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    let mut colors = vec![None; g.n()];
    for k in 1..=g.n() as Color {
        if search(g, &mut colors, 1, 0, k) {
            return Ok(k as usize);
        }
    }
    unreachable!("n distinct colors are always acyclic")
}

// Colors vertices `v..=n` with at most `k` colors, introducing new colors in order.
fn search(g: &Graph, colors: &mut [Option<Color>], v: Vertex, used: Color, k: Color) -> bool {
    if v > g.n() {
        return true;
    }
    for x in 1..=(used + 1).min(k) {
        colors[v - 1] = Some(x);
        if !closes_violation(g, colors, v) && search(g, colors, v + 1, used.max(x), k) {
            return true;
        }
    }
    colors[v - 1] = None;
    false
}

// Whether the color just given to `v` creates a monochromatic edge or a
// bichromatic cycle through `v`.
fn closes_violation(g: &Graph, colors: &[Option<Color>], v: Vertex) -> bool {
    let x = colors[v - 1].expect("v is colored");
    let nbrs = g.neighbors(v);
    if nbrs.iter().any(|&u| colors[u - 1] == Some(x)) {
        return true;
    }
    for (i, &a) in nbrs.iter().enumerate() {
        let Some(y) = colors[a - 1] else { continue };
        let targets: BTreeSet<Vertex> = nbrs[i + 1..].iter().copied().filter(|&b| colors[b - 1] == Some(y)).collect();
        if targets.is_empty() {
            continue;
        }
        let mut seen = BTreeSet::from([v, a]);
        let mut stack = vec![a];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if w == v || seen.contains(&w) {
                    continue;
                }
                let cw = colors[w - 1];
                if cw != Some(x) && cw != Some(y) {
                    continue;
                }
                if targets.contains(&w) {
                    return true;
                }
                seen.insert(w);
                stack.push(w);
            }
        }
    }
    false
}

/// Greedy proper coloring of the square graph in vertex order.
pub fn square_greedy_baseline(g: &Graph) -> Vec<Color> {
    let mut colors: Vec<Color> = vec![0; g.n()];
    for v in g.vertices() {
        let mut taken = BTreeSet::new();
        for &u in g.neighbors(v) {
            taken.insert(colors[u - 1]);
            for &w in g.neighbors(u) {
                taken.insert(colors[w - 1]);
            }
        }
        colors[v - 1] = (1..).find(|c| !taken.contains(c)).expect("unbounded range");
    }
    colors
}
