//! Catalogs of the `2k`-cycles through a vertex whose distance-two pairs are
//! never mutually dangerous, in lexicographic order of their identifiers.
//!
//! The search walks `v, w2, w3, ...` taking neighbors in increasing order, so
//! completed identifiers come out already sorted. Catalogs up to
//! [`DEFAULT_CACHE_LIMIT`] entries are materialized and cached; larger ones
//! are re-walked on demand.

use std::collections::{BTreeMap, HashMap};
use std::ops::ControlFlow;
use std::sync::{Arc, RwLock};

use super::{CycleId, RecordError};
use crate::graph::{DangerousSets, Graph, Vertex};

pub const DEFAULT_CACHE_LIMIT: usize = 1 << 16;

struct Search<'a> {
    g: &'a Graph,
    d: &'a DangerousSets,
    v: Vertex,
    dist: Vec<usize>,
    on_path: Vec<bool>,
    // w2, w3, ...
    path: Vec<Vertex>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, d: &'a DangerousSets, v: Vertex) -> Self {
        let mut on_path = vec![false; g.n() + 1];
        on_path[v] = true;
        Self { g, d, v, dist: g.distances_from(v), on_path, path: Vec::new() }
    }

    // The vertex two positions before the one about to be placed, if any.
    fn before_previous(&self) -> Option<Vertex> {
        match self.path.len() {
            0 => None,
            1 => Some(self.v),
            len => Some(self.path[len - 2]),
        }
    }

    // Closing checks for a cycle ending at the last path vertex.
    fn closes(&self) -> bool {
        let len = self.path.len();
        let (w2, last) = (self.path[0], self.path[len - 1]);
        w2 < last
            && self.g.has_edge(last, self.v)
            && !self.d.are_dangerous(self.path[len - 2], self.v)
            && !self.d.are_dangerous(last, w2)
    }

    fn fixed_length<F>(&mut self, cycle_len: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[Vertex]) -> ControlFlow<()>,
    {
        // position of the vertex being placed: w_j
        let j = self.path.len() + 2;
        let last = self.path.last().copied().unwrap_or(self.v);
        let prev2 = self.before_previous();
        for &u in self.g.neighbors(last) {
            if self.on_path[u] || self.dist[u] > cycle_len + 1 - j {
                continue;
            }
            if prev2.is_some_and(|p| self.d.are_dangerous(p, u)) {
                continue;
            }
            self.path.push(u);
            self.on_path[u] = true;
            let flow = if j == cycle_len {
                if self.closes() {
                    visit(&self.path)
                } else {
                    ControlFlow::Continue(())
                }
            } else {
                self.fixed_length(cycle_len, visit)
            };
            self.on_path[u] = false;
            self.path.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn all_lengths(&mut self, max_len: usize, hist: &mut BTreeMap<usize, u64>) {
        let j = self.path.len() + 2;
        let last = self.path.last().copied().unwrap_or(self.v);
        let prev2 = self.before_previous();
        for &u in self.g.neighbors(last) {
            if self.on_path[u] || self.dist[u] > max_len + 1 - j {
                continue;
            }
            if prev2.is_some_and(|p| self.d.are_dangerous(p, u)) {
                continue;
            }
            self.path.push(u);
            self.on_path[u] = true;
            if j >= 4 && j % 2 == 0 && self.closes() {
                *hist.entry(j / 2).or_default() += 1;
            }
            if j < max_len {
                self.all_lengths(max_len, hist);
            }
            self.on_path[u] = false;
            self.path.pop();
        }
    }
}

/// Visits the identifiers of the catalog of `2k`-cycles through `v` in order.
pub fn for_each_in_catalog<F>(g: &Graph, d: &DangerousSets, v: Vertex, k: usize, mut visit: F)
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    assert!(k >= 2, "cycles have length at least 4");
    if 2 * k > g.n() {
        return;
    }
    let _ = Search::new(g, d, v).fixed_length(2 * k, &mut visit);
}

/// The full sorted catalog of `2k`-cycles through `v`.
pub fn enumerate_catalog(g: &Graph, d: &DangerousSets, v: Vertex, k: usize) -> Vec<CycleId> {
    let mut out = Vec::new();
    for_each_in_catalog(g, d, v, k, |ws| {
        out.push(CycleId::from_canonical(ws.to_vec()));
        ControlFlow::Continue(())
    });
    out
}

/// Catalog sizes for every `k` with `2k <= max_len`, in one search.
pub fn cycle_count_histogram(g: &Graph, d: &DangerousSets, v: Vertex, max_len: usize) -> BTreeMap<usize, u64> {
    let mut hist = BTreeMap::new();
    let max_len = max_len.min(g.n());
    if max_len >= 4 {
        Search::new(g, d, v).all_lengths(max_len, &mut hist);
    }
    hist
}

/// Whether `id` names a cycle through `v` that belongs to its catalog.
pub fn is_catalog_member(g: &Graph, d: &DangerousSets, v: Vertex, id: &CycleId) -> bool {
    let ws = id.vertices();
    let len = ws.len() + 1;
    if len < 4 || len % 2 != 0 || ws[0] >= ws[ws.len() - 1] {
        return false;
    }
    let cyc: Vec<Vertex> = std::iter::once(v).chain(ws.iter().copied()).collect();
    if cyc.iter().any(|&u| u == 0 || u > g.n()) {
        return false;
    }
    let mut sorted = cyc.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return false;
    }
    (0..len).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % len]) && !d.are_dangerous(cyc[i], cyc[(i + 2) % len]))
}

#[derive(Debug, Clone)]
enum Cached {
    Listed(Arc<Vec<CycleId>>),
    TooLarge,
}

/// Lazily filled, thread-safe cache of catalogs keyed by `(v, k)`.
#[derive(Debug)]
pub struct CycleCatalog {
    cache: RwLock<HashMap<(Vertex, usize), Cached>>,
    limit: usize,
}

impl Default for CycleCatalog {
    fn default() -> Self {
        Self::new()
    }
}

impl CycleCatalog {
    pub fn new() -> Self {
        Self::with_cache_limit(DEFAULT_CACHE_LIMIT)
    }

    pub fn with_cache_limit(limit: usize) -> Self {
        Self { cache: RwLock::new(HashMap::new()), limit }
    }

    fn lookup(&self, g: &Graph, d: &DangerousSets, v: Vertex, k: usize) -> Cached {
        if let Some(hit) = self.cache.read().unwrap().get(&(v, k)) {
            return hit.clone();
        }
        let mut list = Vec::new();
        let mut overflow = false;
        for_each_in_catalog(g, d, v, k, |ws| {
            if list.len() == self.limit {
                overflow = true;
                return ControlFlow::Break(());
            }
            list.push(CycleId::from_canonical(ws.to_vec()));
            ControlFlow::Continue(())
        });
        let entry = if overflow { Cached::TooLarge } else { Cached::Listed(Arc::new(list)) };
        self.cache.write().unwrap().entry((v, k)).or_insert(entry).clone()
    }

    /// `|C_2k(v)|`.
    pub fn len(&self, g: &Graph, d: &DangerousSets, v: Vertex, k: usize) -> u64 {
        match self.lookup(g, d, v, k) {
            Cached::Listed(list) => list.len() as u64,
            Cached::TooLarge => {
                let mut count = 0u64;
                for_each_in_catalog(g, d, v, k, |_| {
                    count += 1;
                    ControlFlow::Continue(())
                });
                count
            }
        }
    }

    /// 1-based position of `id` in the catalog of cycles through `v`.
    pub fn index_of(&self, g: &Graph, d: &DangerousSets, v: Vertex, id: &CycleId) -> Result<u64, RecordError> {
        let not_found = || RecordError::NotInCatalog { vertex: v, cycle: id.clone() };
        if !is_catalog_member(g, d, v, id) {
            return Err(not_found());
        }
        match self.lookup(g, d, v, id.half_len()) {
            Cached::Listed(list) => list.binary_search(id).map(|i| i as u64 + 1).map_err(|_| not_found()),
            Cached::TooLarge => {
                let mut seen = 0u64;
                let mut found = false;
                for_each_in_catalog(g, d, v, id.half_len(), |ws| {
                    seen += 1;
                    if ws == id.vertices() {
                        found = true;
                        ControlFlow::Break(())
                    } else {
                        ControlFlow::Continue(())
                    }
                });
                if found {
                    Ok(seen)
                } else {
                    Err(not_found())
                }
            }
        }
    }

    /// The `z`-th (1-based) identifier of the catalog of `2k`-cycles through `v`.
    pub fn identifier_at(
        &self,
        g: &Graph,
        d: &DangerousSets,
        v: Vertex,
        k: usize,
        z: u64,
    ) -> Result<CycleId, RecordError> {
        let out_of_range =
            |len: u64| RecordError::IndexOutOfRange { vertex: v, cycle_len: 2 * k, z: z.to_string(), len };
        if z == 0 {
            return Err(out_of_range(self.len(g, d, v, k)));
        }
        match self.lookup(g, d, v, k) {
            Cached::Listed(list) => list.get(z as usize - 1).cloned().ok_or_else(|| out_of_range(list.len() as u64)),
            Cached::TooLarge => {
                let mut seen = 0u64;
                let mut hit = None;
                for_each_in_catalog(g, d, v, k, |ws| {
                    seen += 1;
                    if seen == z {
                        hit = Some(CycleId::from_canonical(ws.to_vec()));
                        ControlFlow::Break(())
                    } else {
                        ControlFlow::Continue(())
                    }
                });
                hit.ok_or_else(|| out_of_range(seen))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{dangerous_set, generate, Family};
    use crate::params::{Kappa, DEFAULT_KAPPA};
    use crate::records::cycle_identifier;

    fn setup(f: Family, kappa: Kappa) -> (Graph, DangerousSets) {
        let g = generate(&f, 3).unwrap();
        let d = dangerous_set(&g, kappa).unwrap();
        (g, d)
    }

    // All vertex sequences v, w2, ..., w2k by brute force over permutations.
    fn brute_force(g: &Graph, d: &DangerousSets, v: Vertex, k: usize) -> Vec<CycleId> {
        fn rec(g: &Graph, d: &DangerousSets, v: Vertex, k: usize, cur: &mut Vec<Vertex>, out: &mut Vec<CycleId>) {
            if cur.len() == 2 * k - 1 {
                if let Ok(id) = cycle_identifier(v, cur) {
                    if id.vertices() == cur.as_slice() && is_catalog_member(g, d, v, &id) {
                        out.push(id);
                    }
                }
                return;
            }
            for u in g.vertices() {
                if u != v && !cur.contains(&u) {
                    cur.push(u);
                    rec(g, d, v, k, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(g, d, v, k, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    #[test]
    fn complete_four_has_three_squares() {
        let (g, d) = setup(Family::Complete { n: 4 }, DEFAULT_KAPPA);
        let cat = enumerate_catalog(&g, &d, 1, 2);
        let names: Vec<String> = cat.iter().map(|c| c.to_string()).collect();
        assert_eq!(names, ["2,3,4", "2,4,3", "3,2,4"]);
        assert_eq!(cat, brute_force(&g, &d, 1, 2));
    }

    #[test]
    fn six_cycle_catalogs() {
        let (g, d) = setup(Family::Cycle { n: 6 }, Kappa::new(63, 50).unwrap());
        assert_eq!(enumerate_catalog(&g, &d, 1, 3), vec![cycle_identifier(1, &[2, 3, 4, 5, 6]).unwrap()]);
        assert!(enumerate_catalog(&g, &d, 1, 2).is_empty());
        assert!(enumerate_catalog(&g, &d, 1, 4).is_empty());
    }

    #[test]
    fn dangerous_pairs_are_filtered() {
        // every pair of K_5 is dangerous at delta = 4
        let (g, d) = setup(Family::Complete { n: 5 }, DEFAULT_KAPPA);
        assert!(enumerate_catalog(&g, &d, 1, 2).is_empty());
        // same-side vertices of K_{3,3} are dangerous, which blocks every 4-cycle
        let (g, d) = setup(Family::CompleteBipartite { left: 3, right: 3 }, DEFAULT_KAPPA);
        assert!(enumerate_catalog(&g, &d, 1, 2).is_empty());
        assert!(enumerate_catalog(&g, &d, 1, 3).is_empty());
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let cases = [
            (Family::Hypercube { dim: 3 }, DEFAULT_KAPPA),
            (Family::RandomRegular { n: 8, d: 3 }, DEFAULT_KAPPA),
            (Family::Complete { n: 6 }, Kappa::new(2, 1).unwrap()),
            (Family::ErdosRenyi { n: 8, p: 0.5 }, Kappa::new(2, 1).unwrap()),
        ];
        for (f, kappa) in cases {
            let (g, d) = setup(f.clone(), kappa);
            for v in g.vertices() {
                let hist = cycle_count_histogram(&g, &d, v, g.n());
                for k in 2..=g.n() / 2 {
                    let fast = enumerate_catalog(&g, &d, v, k);
                    assert_eq!(fast, brute_force(&g, &d, v, k), "{f} v={v} k={k}");
                    assert_eq!(hist.get(&k).copied().unwrap_or(0), fast.len() as u64, "{f} v={v} k={k}");
                }
            }
        }
    }

    #[test]
    fn index_round_trip_listed_and_streamed() {
        let (g, d) = setup(Family::Hypercube { dim: 3 }, DEFAULT_KAPPA);
        let cached = CycleCatalog::new();
        let streamed = CycleCatalog::with_cache_limit(2);
        for v in g.vertices() {
            for k in 2..=4 {
                let all = enumerate_catalog(&g, &d, v, k);
                assert_eq!(cached.len(&g, &d, v, k), all.len() as u64);
                assert_eq!(streamed.len(&g, &d, v, k), all.len() as u64);
                for (i, id) in all.iter().enumerate() {
                    let z = i as u64 + 1;
                    assert_eq!(cached.index_of(&g, &d, v, id).unwrap(), z);
                    assert_eq!(streamed.index_of(&g, &d, v, id).unwrap(), z);
                    assert_eq!(&cached.identifier_at(&g, &d, v, k, z).unwrap(), id);
                    assert_eq!(&streamed.identifier_at(&g, &d, v, k, z).unwrap(), id);
                }
                let past = all.len() as u64 + 1;
                assert!(cached.identifier_at(&g, &d, v, k, past).is_err());
                assert!(streamed.identifier_at(&g, &d, v, k, past).is_err());
                assert!(cached.identifier_at(&g, &d, v, k, 0).is_err());
            }
        }
    }

    #[test]
    fn non_members_are_rejected() {
        let (g, d) = setup(Family::Cycle { n: 6 }, Kappa::new(63, 50).unwrap());
        let cat = CycleCatalog::new();
        let bogus = cycle_identifier(1, &[2, 4, 3, 5, 6]).unwrap();
        assert!(matches!(cat.index_of(&g, &d, 1, &bogus), Err(RecordError::NotInCatalog { .. })));
    }
}
