//! Reference computations that do not go through the library's numeric or
//! structural code paths.

#![allow(dead_code)]

use std::collections::VecDeque;

use dgspec::Digraph;

pub fn three_vertex_graph() -> Digraph {
    Digraph::new(3, [(0, 1), (1, 2), (0, 2), (2, 0)]).unwrap()
}

pub fn five_vertex_graph() -> Digraph {
    Digraph::new(5, [(0, 3), (0, 4), (1, 3), (4, 0), (4, 1), (4, 2)]).unwrap()
}

pub fn transitive_triangle() -> Digraph {
    Digraph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
}

/// Diagonal of the principal square root of the 2x2 PSD matrix
/// `[[a, b], [b, d]]`, via `(B + √det·I) / √(tr + 2√det)`.
pub fn sqrt2x2_diag(a: f64, b: f64, d: f64) -> [f64; 2] {
    let det = a * d - b * b;
    let denom = (a + d + 2.0 * det.sqrt()).sqrt();
    [(a + det.sqrt()) / denom, (d + det.sqrt()) / denom]
}

/// Out- and in-degree by scanning every ordered pair.
pub fn brute_degrees(g: &Digraph) -> (Vec<usize>, Vec<usize>) {
    let n = g.vertex_count();
    let mut out = vec![0; n];
    let mut inn = vec![0; n];
    for u in 0..n {
        for v in 0..n {
            if g.has_arc(u, v) {
                out[u] += 1;
                inn[v] += 1;
            }
        }
    }
    (out, inn)
}

/// True when every component of the bipartite double that has an edge is a
/// complete bipartite graph. Components are found by BFS over an explicit
/// adjacency list of the `2n` copies (`i` for `i⁻`, `n + i` for `i⁺`).
pub fn double_components_complete(g: &Digraph) -> bool {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); 2 * n];
    for u in 0..n {
        for v in 0..n {
            if g.has_arc(u, v) {
                adj[u].push(n + v);
                adj[n + v].push(u);
            }
        }
    }
    let mut seen = vec![false; 2 * n];
    for start in 0..2 * n {
        if seen[start] || adj[start].is_empty() {
            continue;
        }
        let mut comp = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(x) = queue.pop_front() {
            comp.push(x);
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        let minus: Vec<usize> = comp.iter().copied().filter(|&x| x < n).collect();
        let plus: Vec<usize> = comp.iter().copied().filter(|&x| x >= n).map(|x| x - n).collect();
        for &u in &minus {
            for &v in &plus {
                if !g.has_arc(u, v) {
                    return false;
                }
            }
        }
    }
    true
}

/// All ways to fill at most `budget` vertices with cycles (length >= 2),
/// paths (length >= 2) and isolated vertices, as nondecreasing lists of
/// `(kind, size)` with kind 0 = isolated, 1 = path, 2 = cycle.
pub fn component_multisets(budget: usize) -> Vec<Vec<(u8, usize)>> {
    let mut kinds = vec![(0u8, 1usize)];
    for size in 2..=budget {
        kinds.push((1, size));
        kinds.push((2, size));
    }
    let mut out = Vec::new();
    fn rec(
        kinds: &[(u8, usize)],
        from: usize,
        left: usize,
        cur: &mut Vec<(u8, usize)>,
        out: &mut Vec<Vec<(u8, usize)>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for k in from..kinds.len() {
            if kinds[k].1 <= left {
                cur.push(kinds[k]);
                rec(kinds, k, left - kinds[k].1, cur, out);
                cur.pop();
            }
        }
    }
    rec(&kinds, 0, budget, &mut Vec::new(), &mut out);
    out
}
