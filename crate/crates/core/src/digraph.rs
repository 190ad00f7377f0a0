//! Simple directed graphs on the vertex set `0..n`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dsu::Dsu;
use crate::{Error, Result};

/// An ordered pair `(tail, head)`.
pub type Arc = (usize, usize);

/// A finite simple digraph: no loops and no parallel arcs.
///
/// Arcs are kept sorted lexicographically, so iteration order is
/// deterministic and the out-neighbours of a vertex form a contiguous run.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Digraph {
    n: usize,
    arcs: Vec<Arc>,
}

/// Out- and in-degrees of every vertex together with `Δ(G)` and `|E|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub out_deg: Vec<usize>,
    pub in_deg: Vec<usize>,
    /// Maximum over all vertices of both the out- and in-degree.
    pub max_deg: usize,
    pub arc_count: usize,
}

impl Digraph {
    /// Builds a digraph, rejecting loops, repeated arcs and endpoints `>= n`.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let mut arcs: Vec<Arc> = arcs.into_iter().collect();
        for &(u, v) in &arcs {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::OutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::LoopArc(u));
            }
        }
        arcs.sort_unstable();
        if let Some(w) = arcs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateArc(w[0].0, w[0].1));
        }
        Ok(Digraph { n, arcs })
    }

    /// The graph on `n` vertices with no arcs.
    pub fn edgeless(n: usize) -> Self {
        Digraph {
            n,
            arcs: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    /// Heads of the arcs leaving `v`, ascending.
    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let start = self.arcs.partition_point(|&(u, _)| u < v);
        self.arcs[start..]
            .iter()
            .take_while(move |&&(u, _)| u == v)
            .map(|&(_, w)| w)
    }

    /// Tails of the arcs entering `v`, ascending.
    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arcs
            .iter()
            .filter(move |&&(_, w)| w == v)
            .map(|&(u, _)| u)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut out_deg = vec![0; self.n];
        let mut in_deg = vec![0; self.n];
        for &(u, v) in &self.arcs {
            out_deg[u] += 1;
            in_deg[v] += 1;
        }
        let max_deg = out_deg.iter().chain(&in_deg).copied().max().unwrap_or(0);
        DegreeProfile {
            out_deg,
            in_deg,
            max_deg,
            arc_count: self.arcs.len(),
        }
    }

    /// The same vertex set with every arc turned around.
    pub fn reverse(&self) -> Digraph {
        let mut arcs: Vec<Arc> = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        arcs.sort_unstable();
        Digraph { n: self.n, arcs }
    }

    /// Weakly connected components, each sorted ascending, ordered by their
    /// smallest vertex.
    pub fn weak_components(&self) -> Vec<Vec<usize>> {
        let mut dsu = Dsu::new(self.n);
        for &(u, v) in &self.arcs {
            dsu.union(u, v);
        }
        let mut slot = vec![usize::MAX; self.n];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            let root = dsu.find(v);
            if slot[root] == usize::MAX {
                slot[root] = components.len();
                components.push(Vec::new());
            }
            components[slot[root]].push(v);
        }
        components
    }

    /// Places the given graphs side by side, relabelling each one after the
    /// vertices of its predecessors.
    pub fn disjoint_union<'a>(parts: impl IntoIterator<Item = &'a Digraph>) -> Digraph {
        let mut n = 0;
        let mut arcs = Vec::new();
        for g in parts {
            arcs.extend(g.arcs.iter().map(|&(u, v)| (u + n, v + n)));
            n += g.n;
        }
        arcs.sort_unstable();
        Digraph { n, arcs }
    }
}

/// Directed cycle `0 → 1 → … → n-1 → 0`.
pub fn gen_cycle(n: usize) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::BadParameter(format!("cycle needs n >= 2, got {n}")));
    }
    Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Directed path `0 → 1 → … → n-1`.
pub fn gen_path(n: usize) -> Result<Digraph> {
    if n < 1 {
        return Err(Error::BadParameter("path needs n >= 1".into()));
    }
    Digraph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// Complete source-to-sink orientation `→K_{n,m}`: sources `0..n`, sinks
/// `n..n+m`.
pub fn gen_kbip(n: usize, m: usize) -> Result<Digraph> {
    if n < 1 || m < 1 {
        return Err(Error::BadParameter(format!(
            "kbip needs n, m >= 1, got ({n}, {m})"
        )));
    }
    let arcs = (0..n).flat_map(|s| (n..n + m).map(move |t| (s, t)));
    Digraph::new(n + m, arcs)
}

/// Includes each ordered pair `(u, v)`, `u != v`, independently with
/// probability `p`. The stream of coin flips is fixed by `seed`.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Result<Digraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParameter(format!("p must lie in [0, 1], got {p}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Ok(Digraph { n, arcs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_vertex_graph() -> Digraph {
        Digraph::new(3, [(0, 1), (1, 2), (0, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn construction_rejects_bad_arcs() {
        assert_eq!(Digraph::new(3, [(0, 0)]), Err(Error::LoopArc(0)));
        assert_eq!(
            Digraph::new(3, [(0, 3)]),
            Err(Error::OutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Digraph::new(3, [(0, 1), (1, 2), (0, 1)]),
            Err(Error::DuplicateArc(0, 1))
        );
    }

    #[test]
    fn arcs_are_sorted() {
        let g = Digraph::new(3, [(1, 2), (0, 1)]).unwrap();
        assert_eq!(g.arcs(), &[(0, 1), (1, 2)]);
        assert_eq!(g, gen_path(3).unwrap());
    }

    #[test]
    fn five_vertex_graph_example_builds() {
        let g = Digraph::new(5, [(0, 3), (0, 4), (1, 3), (4, 0), (4, 1), (4, 2)]).unwrap();
        assert_eq!(g.arc_count(), 6);
        assert!(g.has_arc(4, 2));
        assert!(!g.has_arc(2, 4));
    }

    #[test]
    fn degree_profiles() {
        let p = three_vertex_graph().degree_profile();
        assert_eq!(p.out_deg, vec![2, 1, 1]);
        assert_eq!(p.in_deg, vec![1, 1, 2]);
        assert_eq!((p.max_deg, p.arc_count), (2, 4));

        let p = Digraph::edgeless(3).degree_profile();
        assert_eq!(p.out_deg, vec![0, 0, 0]);
        assert_eq!(p.in_deg, vec![0, 0, 0]);
        assert_eq!((p.max_deg, p.arc_count), (0, 0));

        let p = gen_cycle(4).unwrap().degree_profile();
        assert_eq!(p.out_deg, vec![1; 4]);
        assert_eq!(p.in_deg, vec![1; 4]);
        assert_eq!((p.max_deg, p.arc_count), (1, 4));
    }

    #[test]
    fn neighbourhoods() {
        let g = three_vertex_graph();
        assert_eq!(g.out_neighbors(0).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(g.out_neighbors(1).collect::<Vec<_>>(), vec![2]);
        assert_eq!(g.in_neighbors(2).collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(g.in_neighbors(0).collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn reversal() {
        let r = gen_path(3).unwrap().reverse();
        assert_eq!(r.arcs(), &[(1, 0), (2, 1)]);
        let r = three_vertex_graph().reverse();
        assert_eq!(r.arcs(), &[(0, 2), (1, 0), (2, 0), (2, 1)]);
        assert_eq!(r.reverse(), three_vertex_graph());
        assert_eq!(r.degree_profile().out_deg, three_vertex_graph().degree_profile().in_deg);
    }

    #[test]
    fn components() {
        let g = Digraph::new(4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.weak_components(), vec![vec![0, 1, 2], vec![3]]);
        let five = Digraph::new(5, [(0, 3), (0, 4), (1, 3), (4, 0), (4, 1), (4, 2)]).unwrap();
        assert_eq!(five.weak_components(), vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(
            Digraph::edgeless(3).weak_components(),
            vec![vec![0], vec![1], vec![2]]
        );
        let g = Digraph::new(4, [(3, 0), (1, 2)]).unwrap();
        assert_eq!(g.weak_components(), vec![vec![0, 3], vec![1, 2]]);
    }

    #[test]
    fn generators() {
        assert_eq!(gen_kbip(1, 1).unwrap(), gen_path(2).unwrap());
        assert_eq!(gen_cycle(3).unwrap().arcs(), &[(0, 1), (1, 2), (2, 0)]);
        let k = gen_kbip(2, 3).unwrap();
        assert_eq!(k.vertex_count(), 5);
        assert_eq!(k.arc_count(), 6);
        assert!(k.arcs().iter().all(|&(u, v)| u < 2 && (2..5).contains(&v)));
        assert_eq!(gen_path(1).unwrap(), Digraph::edgeless(1));
    }

    #[test]
    fn generator_preconditions() {
        assert!(matches!(gen_cycle(1), Err(Error::BadParameter(_))));
        assert!(matches!(gen_path(0), Err(Error::BadParameter(_))));
        assert!(matches!(gen_kbip(0, 2), Err(Error::BadParameter(_))));
        assert!(matches!(gen_random(4, 1.5, 0), Err(Error::BadParameter(_))));
        assert!(matches!(gen_random(4, f64::NAN, 0), Err(Error::BadParameter(_))));
    }

    #[test]
    fn random_is_reproducible() {
        let a = gen_random(20, 0.3, 42).unwrap();
        let b = gen_random(20, 0.3, 42).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, gen_random(20, 0.3, 43).unwrap());
        assert_eq!(gen_random(6, 0.0, 1).unwrap().arc_count(), 0);
        assert_eq!(gen_random(6, 1.0, 1).unwrap().arc_count(), 30);
    }

    #[test]
    fn disjoint_union_relabels() {
        let g = Digraph::disjoint_union([&gen_cycle(3).unwrap(), &gen_path(2).unwrap()]);
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.arcs(), &[(0, 1), (1, 2), (2, 0), (3, 4)]);
    }
}
