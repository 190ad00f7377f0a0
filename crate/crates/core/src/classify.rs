//! Structural recognition of the two equality cases.
//!
//! A *splitting* covers the arcs of `G` by sink-source digraphs `G₁, …, G_k`
//! such that whenever a part uses some out-arc (in-arc) of a vertex it uses
//! all of them. Parts may share vertices; they may not share arcs.
//!
//! Any part containing the arc `(u, v)` must contain the whole out-star of `u`
//! and in-star of `v`, so the parts of the finest splitting are the connected
//! components of the bipartite double `B(G)`, with sources read off the minus
//! copies and sinks off the plus copies. Such a splitting exists iff no
//! component holds both copies of one vertex.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::digraph::{Arc, Digraph};
use crate::dsu::Dsu;
use crate::{Error, Result};

fn check_vertex(g: &Digraph, v: usize) -> Result<()> {
    if v >= g.vertex_count() {
        return Err(Error::OutOfRange {
            vertex: v,
            n: g.vertex_count(),
        });
    }
    Ok(())
}

/// `d⁻(v) = 0`.
pub fn is_source(g: &Digraph, v: usize) -> Result<bool> {
    check_vertex(g, v)?;
    Ok(g.in_neighbors(v).next().is_none())
}

/// `d⁺(v) = 0`.
pub fn is_sink(g: &Digraph, v: usize) -> Result<bool> {
    check_vertex(g, v)?;
    Ok(g.out_neighbors(v).next().is_none())
}

/// Every vertex is a sink or a source (isolated vertices are both).
pub fn is_sink_source(g: &Digraph) -> bool {
    let p = g.degree_profile();
    p.out_deg.iter().zip(&p.in_deg).all(|(&o, &i)| o == 0 || i == 0)
}

/// One sink-source part of a splitting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitPart {
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
    pub arcs: Vec<Arc>,
}

impl SplitPart {
    /// Every source reaches every sink.
    pub fn is_complete(&self) -> bool {
        self.arcs.len() == self.sources.len() * self.sinks.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Splitting {
    pub parts: Vec<SplitPart>,
}

/// Vertex whose minus and plus copies lie in one component of `B(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NoSplitting {
    pub vertex: usize,
}

impl fmt::Display for NoSplitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertex {} is forced to be both a source and a sink of one part",
            self.vertex
        )
    }
}

/// Why a graph is not an equality case, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotEqualityCase {
    NoSplitting(NoSplitting),
    /// Part `part` lacks the arc `missing` between one of its sources and
    /// one of its sinks.
    IncompletePart { part: usize, missing: Arc },
    /// `vertex` has out- or in-degree at least two.
    DegreeAboveOne { vertex: usize },
}

impl fmt::Display for NotEqualityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotEqualityCase::NoSplitting(e) => write!(f, "no sink-source splitting: {e}"),
            NotEqualityCase::IncompletePart { part, missing } => {
                write!(f, "part {part} misses arc {missing:?}")
            }
            NotEqualityCase::DegreeAboveOne { vertex } => {
                write!(f, "vertex {vertex} has a degree above one")
            }
        }
    }
}

/// The finest splitting of `g` into sink-source parts, if one exists.
///
/// Parts are ordered by their first arc.
pub fn find_splitting(g: &Digraph) -> Result<Splitting, NoSplitting> {
    let n = g.vertex_count();
    let mut dsu = Dsu::new(2 * n);
    for &(i, j) in g.arcs() {
        dsu.union(i, n + j);
    }
    let p = g.degree_profile();
    for v in 0..n {
        if p.out_deg[v] > 0 && p.in_deg[v] > 0 && dsu.same(v, n + v) {
            return Err(NoSplitting { vertex: v });
        }
    }

    let mut slot = vec![usize::MAX; 2 * n];
    let mut parts: Vec<(BTreeSet<usize>, BTreeSet<usize>, Vec<Arc>)> = Vec::new();
    for &(i, j) in g.arcs() {
        let root = dsu.find(i);
        if slot[root] == usize::MAX {
            slot[root] = parts.len();
            parts.push(Default::default());
        }
        let part = &mut parts[slot[root]];
        part.0.insert(i);
        part.1.insert(j);
        part.2.push((i, j));
    }
    Ok(Splitting {
        parts: parts
            .into_iter()
            .map(|(sources, sinks, arcs)| SplitPart {
                sources: sources.into_iter().collect(),
                sinks: sinks.into_iter().collect(),
                arcs,
            })
            .collect(),
    })
}

/// Re-checks the defining conditions of a splitting of `g` from scratch.
pub fn verify_splitting(g: &Digraph, s: &Splitting) -> Result<(), String> {
    let mut covered: Vec<Arc> = Vec::new();
    let p = g.degree_profile();
    for (k, part) in s.parts.iter().enumerate() {
        let sources: BTreeSet<usize> = part.sources.iter().copied().collect();
        let sinks: BTreeSet<usize> = part.sinks.iter().copied().collect();
        if let Some(v) = sources.intersection(&sinks).next() {
            return Err(format!("part {k}: vertex {v} is both source and sink"));
        }
        let mut out_deg = vec![0usize; g.vertex_count()];
        let mut in_deg = vec![0usize; g.vertex_count()];
        for &(u, v) in &part.arcs {
            if !sources.contains(&u) || !sinks.contains(&v) {
                return Err(format!("part {k}: arc ({u}, {v}) is not source-to-sink"));
            }
            out_deg[u] += 1;
            in_deg[v] += 1;
        }
        for v in 0..g.vertex_count() {
            if out_deg[v] != 0 && out_deg[v] != p.out_deg[v] {
                return Err(format!("part {k}: out-degree of {v} is partial"));
            }
            if in_deg[v] != 0 && in_deg[v] != p.in_deg[v] {
                return Err(format!("part {k}: in-degree of {v} is partial"));
            }
        }
        covered.extend_from_slice(&part.arcs);
    }
    covered.sort_unstable();
    if covered.windows(2).any(|w| w[0] == w[1]) {
        return Err("parts share an arc".into());
    }
    if covered != g.arcs() {
        return Err("parts do not cover exactly the arcs of the graph".into());
    }
    Ok(())
}

/// Succeeds iff `g` splits into complete parts `→K_{n_i,m_i}`, the structural
/// form of `E(G) = 2R(G)`.
pub fn classify_lower_equality(g: &Digraph) -> Result<Splitting, NotEqualityCase> {
    let splitting = find_splitting(g).map_err(NotEqualityCase::NoSplitting)?;
    for (k, part) in splitting.parts.iter().enumerate() {
        if !part.is_complete() {
            let missing = part
                .sources
                .iter()
                .flat_map(|&u| part.sinks.iter().map(move |&v| (u, v)))
                .find(|&(u, v)| !g.has_arc(u, v))
                .expect("an incomplete part misses some arc");
            return Err(NotEqualityCase::IncompletePart { part: k, missing });
        }
    }
    Ok(splitting)
}

/// Shape of one weak component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "snake_case")]
pub enum ComponentKind {
    IsolatedVertex(Vec<usize>),
    /// Vertices in path order.
    DirectedPath(Vec<usize>),
    /// Vertices in cycle order, starting at the smallest.
    DirectedCycle(Vec<usize>),
    Other(Vec<usize>),
}

impl ComponentKind {
    pub fn vertices(&self) -> &[usize] {
        match self {
            ComponentKind::IsolatedVertex(v)
            | ComponentKind::DirectedPath(v)
            | ComponentKind::DirectedCycle(v)
            | ComponentKind::Other(v) => v,
        }
    }
}

/// Classifies one weak component of `g` (given as its vertex list).
///
/// With all in- and out-degrees at most one, a walk from a vertex without
/// in-arcs traces a path, a walk back from a vertex without out-arcs traces
/// one in reverse, and otherwise every degree is one and the walk closes a
/// cycle. Anything else is `Other`.
pub fn classify_component(g: &Digraph, component: &[usize]) -> ComponentKind {
    let mut vertices = component.to_vec();
    vertices.sort_unstable();
    let other = ComponentKind::Other(vertices.clone());
    let Some(&first) = vertices.first() else {
        return other;
    };
    let succ = |v: usize| {
        let mut it = g.out_neighbors(v);
        (it.next(), it.next())
    };
    let pred = |v: usize| {
        let mut it = g.in_neighbors(v);
        (it.next(), it.next())
    };
    if vertices.iter().any(|&v| succ(v).1.is_some() || pred(v).1.is_some()) {
        return other;
    }

    let walk = |start: usize, step: &dyn Fn(usize) -> Option<usize>| {
        let mut order = vec![start];
        let mut cur = start;
        while let Some(next) = step(cur) {
            if next == start || order.len() > vertices.len() {
                break;
            }
            order.push(next);
            cur = next;
        }
        order
    };
    let spans = |order: &[usize]| {
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        sorted == vertices
    };

    if vertices.len() == 1 && succ(first).0.is_none() && pred(first).0.is_none() {
        return ComponentKind::IsolatedVertex(vertices);
    }
    if let Some(&start) = vertices.iter().find(|&&v| pred(v).0.is_none()) {
        let order = walk(start, &|v| succ(v).0);
        return if spans(&order) {
            ComponentKind::DirectedPath(order)
        } else {
            other
        };
    }
    if let Some(&end) = vertices.iter().find(|&&v| succ(v).0.is_none()) {
        let mut order = walk(end, &|v| pred(v).0);
        order.reverse();
        return if spans(&order) {
            ComponentKind::DirectedPath(order)
        } else {
            other
        };
    }
    let order = walk(first, &|v| succ(v).0);
    if spans(&order) && succ(*order.last().unwrap()).0 == Some(first) {
        ComponentKind::DirectedCycle(order)
    } else {
        other
    }
}

/// Succeeds iff every in- and out-degree is at most one, the structural form
/// of `E(G) = 2√Δ(G)·R(G)`; returns the kind of every weak component.
pub fn classify_upper_equality(g: &Digraph) -> Result<Vec<ComponentKind>, NotEqualityCase> {
    let p = g.degree_profile();
    if let Some(vertex) = (0..g.vertex_count()).find(|&v| p.out_deg[v] > 1 || p.in_deg[v] > 1) {
        return Err(NotEqualityCase::DegreeAboveOne { vertex });
    }
    Ok(g.weak_components()
        .iter()
        .map(|c| classify_component(g, c))
        .collect())
}
