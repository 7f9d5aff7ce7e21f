use super::{Graph, Vertex};
use crate::params::{danger_threshold, Kappa, ParamError};

/// For every vertex `v`, the vertices sharing at least `kappa * delta^(2/3)`
/// common neighbors with `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DangerousSets {
    // sets[v - 1], sorted
    sets: Vec<Vec<Vertex>>,
    /// Smallest common-neighbor count that makes a pair dangerous.
    threshold: u64,
    delta: u64,
    kappa: Kappa,
}

/// Dangerous sets of `g` for `kappa`, taking `delta = max(max_degree, 1)`.
pub fn dangerous_set(g: &Graph, kappa: Kappa) -> Result<DangerousSets, ParamError> {
    DangerousSets::compute(g, g.max_degree().max(1) as u64, kappa)
}

impl DangerousSets {
    /// Dangerous sets with an explicit degree bound `delta >= max_degree`.
    pub fn compute(g: &Graph, delta: u64, kappa: Kappa) -> Result<Self, ParamError> {
        if delta == 0 {
            return Err(ParamError::ZeroDelta);
        }
        if (g.max_degree() as u64) > delta {
            return Err(ParamError::DeltaMismatch { params: delta, graph: g.max_degree() as u64 });
        }
        if !kappa.admissible_for(delta) {
            return Err(ParamError::KappaTooSmall { delta, kappa, minimal: Kappa::minimal_for(delta) });
        }
        let threshold = danger_threshold(delta, kappa);
        let n = g.n();
        let mut counts = vec![0u64; n + 1];
        let mut touched = Vec::new();
        let mut sets = Vec::with_capacity(n);
        for v in g.vertices() {
            for &w in g.neighbors(v) {
                for &u in g.neighbors(w) {
                    if u != v {
                        if counts[u] == 0 {
                            touched.push(u);
                        }
                        counts[u] += 1;
                    }
                }
            }
            let mut set: Vec<Vertex> = touched.iter().copied().filter(|&u| counts[u] >= threshold).collect();
            set.sort_unstable();
            for &u in &touched {
                counts[u] = 0;
            }
            touched.clear();
            sets.push(set);
        }
        Ok(Self { sets, threshold, delta, kappa })
    }

    pub fn of(&self, v: Vertex) -> &[Vertex] {
        &self.sets[v - 1]
    }

    pub fn are_dangerous(&self, u: Vertex, v: Vertex) -> bool {
        self.sets[u - 1].binary_search(&v).is_ok()
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn kappa(&self) -> Kappa {
        self.kappa
    }

    pub fn n(&self) -> usize {
        self.sets.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::params::{exact::pow, DEFAULT_KAPPA};

    fn k(a: u64, b: u64) -> Kappa {
        Kappa::new(a, b).unwrap()
    }

    // Pairwise oracle: sorted-list intersection plus the cube comparison.
    fn oracle(g: &Graph, delta: u64, kappa: Kappa, u: Vertex, v: Vertex) -> bool {
        let s = g.common_neighbor_count(u, v).unwrap() as u64;
        pow(s, 3) * pow(kappa.den(), 3) >= pow(kappa.num(), 3) * pow(delta, 2)
    }

    #[test]
    fn complete_bipartite_same_side() {
        let g = generate(&Family::CompleteBipartite { left: 3, right: 3 }, 0).unwrap();
        let d = dangerous_set(&g, DEFAULT_KAPPA).unwrap();
        assert_eq!(d.of(1), &[2, 3]);
        assert_eq!(d.of(4), &[5, 6]);
        assert_eq!(d.threshold(), 3);
    }

    #[test]
    fn cycles_have_no_dangerous_pairs() {
        for n in [4, 6] {
            let g = generate(&Family::Cycle { n }, 0).unwrap();
            let d = dangerous_set(&g, k(63, 50)).unwrap();
            assert!(g.vertices().all(|v| d.of(v).is_empty()));
        }
        // borderline: 2^3 * 50^3 < 63^3 * 2^2
        assert!(pow(2, 3) * pow(50, 3) < pow(63, 3) * pow(2, 2));
    }

    #[test]
    fn equality_counts_as_dangerous() {
        // delta 1, kappa 2: threshold is exactly 2
        let g = Graph::from_edges(3, [(1, 2)]).unwrap();
        let d = dangerous_set(&g, k(2, 1)).unwrap();
        assert_eq!(d.threshold(), 2);
        assert!(d.of(1).is_empty());
    }

    #[test]
    fn rejects_small_kappa() {
        let g = generate(&Family::Cycle { n: 5 }, 0).unwrap();
        assert!(matches!(dangerous_set(&g, DEFAULT_KAPPA), Err(ParamError::KappaTooSmall { .. })));
    }

    #[test]
    fn corpus_properties() {
        let corpus = [
            Family::Complete { n: 5 },
            Family::Complete { n: 7 },
            Family::Hypercube { dim: 3 },
            Family::Hypercube { dim: 4 },
            Family::CompleteBipartite { left: 4, right: 6 },
            Family::RandomRegular { n: 20, d: 5 },
            Family::RandomRegular { n: 40, d: 8 },
            Family::ErdosRenyi { n: 30, p: 0.3 },
        ];
        for fam in &corpus {
            let g = generate(fam, 5).unwrap();
            let delta = g.max_degree().max(1) as u64;
            let kappa = Kappa::default_for(delta);
            let d = dangerous_set(&g, kappa).unwrap();
            for v in g.vertices() {
                assert!(!d.are_dangerous(v, v));
                for u in g.vertices().filter(|&u| u != v) {
                    assert_eq!(d.are_dangerous(u, v), d.are_dangerous(v, u), "{fam}");
                    assert_eq!(d.are_dangerous(u, v), oracle(&g, delta, kappa, u, v), "{fam}");
                }
                // |D(v)| kappa delta^(2/3) <= delta (delta - 1), exactly
                let size = d.of(v).len() as u64;
                assert!(
                    pow(size * kappa.num(), 3) * pow(delta, 2) <= pow(delta * (delta - 1) * kappa.den(), 3),
                    "{fam}: |D({v})| = {size}"
                );
            }
        }
    }
}
