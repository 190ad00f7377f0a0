//! The bipartite double `B(G)`.
//!
//! Each vertex `i` of a digraph on `n` vertices gets two copies, `i⁻` at index
//! `i` and `i⁺` at index `n + i`, and every arc `i → j` becomes the undirected
//! edge `{i⁻, j⁺}`. The adjacency matrix of `B(G)` is then the block matrix
//! `[[0, A], [Aᵗ, 0]]`, whose eigenvalues are `±σ_k(A)`. Hence
//! `E(B(G)) = 2E(G)`, and the degree of `i⁻` (resp. `i⁺`) is `d⁺(i)`
//! (resp. `d⁻(i)`), which gives `R(B(G)) = 2R(G)`.

use serde::Serialize;

use crate::densela::{sym_eigen, singular_values, DenseMatrix, JACOBI_TOL};
use crate::digraph::Digraph;
use crate::energy::energy_report;
use crate::randic::randic_index;
use crate::{Error, Result};

/// Simple undirected graph; edges stored as `(min, max)` pairs, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut norm = Vec::new();
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::OutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::LoopArc(u));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateArc(w[0].0, w[0].1));
        }
        Ok(UndirectedGraph { n, edges: norm })
    }

    /// The bipartite graph `[[0, M], [Mᵗ, 0]]` of a {0,1} matrix `M`: rows
    /// become vertices `0..r`, columns `r..r+s`. Nonzero entries count as 1.
    pub fn from_biadjacency(m: &DenseMatrix) -> Self {
        let r = m.rows();
        let mut edges = Vec::new();
        for i in 0..r {
            for j in 0..m.cols() {
                if m.get(i, j) != 0.0 {
                    edges.push((i, r + j));
                }
            }
        }
        UndirectedGraph {
            n: r + m.cols(),
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Symmetric {0,1} adjacency matrix.
    pub fn adjacency(&self) -> DenseMatrix {
        let mut a = DenseMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            a.set(u, v, 1.0);
            a.set(v, u, 1.0);
        }
        a
    }

    /// Connected components (sorted, ordered by smallest vertex).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let as_digraph = Digraph::new(self.n, self.edges.iter().copied())
            .expect("undirected edges are valid arcs");
        as_digraph.weak_components()
    }
}

/// `B(G)` together with the index maps of the two vertex copies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteDouble {
    pub graph: UndirectedGraph,
    pub source_n: usize,
}

impl BipartiteDouble {
    /// Index of `i⁻`.
    pub fn minus_of(&self, i: usize) -> usize {
        i
    }

    /// Index of `i⁺`.
    pub fn plus_of(&self, i: usize) -> usize {
        self.source_n + i
    }

    /// Edges as `(minus index, plus index)` pairs, in arc order.
    pub fn edge_pairs(&self) -> &[(usize, usize)] {
        // every edge is (i, n + j) with i < n <= n + j, so the stored
        // (min, max) order is already (minus, plus)
        self.graph.edges()
    }

    /// Relabels `i⁻ ↔ i⁺`.
    pub fn swap_sides(&self) -> UndirectedGraph {
        let n = self.source_n;
        let flip = |x: usize| if x < n { x + n } else { x - n };
        UndirectedGraph::new(
            2 * n,
            self.graph.edges().iter().map(|&(u, v)| (flip(u), flip(v))),
        )
        .expect("relabelling preserves simplicity")
    }
}

pub fn double(g: &Digraph) -> BipartiteDouble {
    let n = g.vertex_count();
    let graph = UndirectedGraph {
        n: 2 * n,
        // arcs are sorted by (i, j), so (i, n + j) is sorted too
        edges: g.arcs().iter().map(|&(i, j)| (i, n + j)).collect(),
    };
    BipartiteDouble {
        graph,
        source_n: n,
    }
}

/// Checks `deg(i⁻) = d⁺(i)` and `deg(i⁺) = d⁻(i)` for every vertex.
pub fn double_degrees_check(g: &Digraph) -> bool {
    let b = double(g);
    let deg = b.graph.degrees();
    let p = g.degree_profile();
    (0..g.vertex_count())
        .all(|i| deg[b.minus_of(i)] == p.out_deg[i] && deg[b.plus_of(i)] == p.in_deg[i])
}

/// Sum of the absolute eigenvalues of the adjacency matrix.
pub fn undirected_energy(h: &UndirectedGraph) -> Result<f64> {
    let eig = sym_eigen(&h.adjacency(), JACOBI_TOL)?;
    Ok(eig.eigenvalues.iter().map(|l| l.abs()).sum())
}

/// Sum of the singular values of a possibly rectangular matrix.
pub fn nikiforov_energy(m: &DenseMatrix) -> Result<f64> {
    Ok(singular_values(m)?.iter().sum())
}

/// `Σ_{ {u,v} } 1/√(d(u)·d(v))`.
pub fn undirected_randic(h: &UndirectedGraph) -> f64 {
    let d = h.degrees();
    h.edges
        .iter()
        .map(|&(u, v)| 1.0 / ((d[u] * d[v]) as f64).sqrt())
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TransferCheck {
    pub energy_ok: bool,
    pub randic_ok: bool,
    /// `|2E(G) − E(B(G))|`.
    pub energy_gap: f64,
    /// `|2R(G) − R(B(G))|`.
    pub randic_gap: f64,
}

/// Compares `2E(G)` with `E(B(G))` and `2R(G)` with `R(B(G))`. The digraph
/// side goes through singular values of `A`, the double side through a full
/// eigensolve of the `2n × 2n` adjacency matrix.
pub fn transfer_check(g: &Digraph, tol: f64) -> Result<TransferCheck> {
    let b = double(g);
    let energy_gap = (2.0 * energy_report(g)?.total - undirected_energy(&b.graph)?).abs();
    let randic_gap = (2.0 * randic_index(g) - undirected_randic(&b.graph)).abs();
    Ok(TransferCheck {
        energy_ok: energy_gap <= tol,
        randic_ok: randic_gap <= tol,
        energy_gap,
        randic_gap,
    })
}
