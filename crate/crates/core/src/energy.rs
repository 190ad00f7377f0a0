//! Energy of a digraph and the outer/inner energies of its vertices.
//!
//! `E(G)` is the sum of the singular values of `A`. The outer energy `E⁺(v)`
//! is the diagonal entry of `(AAᵗ)^½` at `v`, the inner energy `E⁻(v)` the
//! one of `(AᵗA)^½`; each vector sums to `E(G)`. The two generally differ.

use serde::Serialize;

use crate::densela::{adjacency, gram_in, gram_out, psd_sqrt, singular_values};
use crate::digraph::{Arc, Digraph};
use crate::{Error, Result, DEFAULT_TOL};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyReport {
    /// Singular values of the adjacency matrix, descending.
    pub sigma: Vec<f64>,
    pub total: f64,
    pub vertex_out: Vec<f64>,
    pub vertex_in: Vec<f64>,
}

impl EnergyReport {
    /// `Tr |A|⁺`.
    pub fn trace_out(&self) -> f64 {
        self.vertex_out.iter().sum()
    }

    /// `Tr |A|⁻`.
    pub fn trace_in(&self) -> f64 {
        self.vertex_in.iter().sum()
    }
}

pub fn energy_report(g: &Digraph) -> Result<EnergyReport> {
    let a = adjacency(g);
    let sigma = singular_values(&a)?;
    let total = sigma.iter().sum();
    let vertex_out = psd_sqrt(&gram_out(&a))?.diagonal();
    let vertex_in = psd_sqrt(&gram_in(&a))?.diagonal();
    Ok(EnergyReport {
        sigma,
        total,
        vertex_out,
        vertex_in,
    })
}

/// `E(e) = E⁺(v)/d⁺(v) + E⁻(w)/d⁻(w)` for the arc `e = (v, w)`.
pub fn edge_energy(g: &Digraph, report: &EnergyReport, (v, w): Arc) -> Result<f64> {
    if !g.has_arc(v, w) {
        return Err(Error::NoSuchArc(v, w));
    }
    let out_deg = g.out_neighbors(v).count() as f64;
    let in_deg = g.in_neighbors(w).count() as f64;
    Ok(report.vertex_out[v] / out_deg + report.vertex_in[w] / in_deg)
}

/// One arc `(v, w)` with `E⁺(v)·E⁻(w)` and `E⁺(v) + E⁻(w)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairRecord {
    pub arc: Arc,
    pub product: f64,
    pub sum: f64,
    /// Product below 1 or sum below 2 by more than the tolerance.
    pub violation: bool,
}

/// Evaluates the adjacent-vertex inequalities `E⁺(v)E⁻(w) ≥ 1` and
/// `E⁺(v) + E⁻(w) ≥ 2` on every arc.
pub fn adjacent_pair_check(g: &Digraph, report: &EnergyReport) -> Vec<PairRecord> {
    g.arcs()
        .iter()
        .map(|&(v, w)| {
            let (out, inn) = (report.vertex_out[v], report.vertex_in[w]);
            let product = out * inn;
            let sum = out + inn;
            PairRecord {
                arc: (v, w),
                product,
                sum,
                violation: product < 1.0 - DEFAULT_TOL || sum < 2.0 - DEFAULT_TOL,
            }
        })
        .collect()
}

/// `E⁺(v) ≤ √d⁺(v)` and `E⁻(v) ≤ √d⁻(v)` evaluated at one vertex.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VertexBoundRecord {
    pub vertex: usize,
    pub energy_out: f64,
    pub bound_out: f64,
    pub energy_in: f64,
    pub bound_in: f64,
    pub violation: bool,
}

impl VertexBoundRecord {
    pub fn slack_out(&self) -> f64 {
        self.bound_out - self.energy_out
    }

    pub fn slack_in(&self) -> f64 {
        self.bound_in - self.energy_in
    }
}

pub fn vertex_degree_bound_check(g: &Digraph, report: &EnergyReport) -> Vec<VertexBoundRecord> {
    let profile = g.degree_profile();
    (0..g.vertex_count())
        .map(|v| {
            let mut r = VertexBoundRecord {
                vertex: v,
                energy_out: report.vertex_out[v],
                bound_out: (profile.out_deg[v] as f64).sqrt(),
                energy_in: report.vertex_in[v],
                bound_in: (profile.in_deg[v] as f64).sqrt(),
                violation: false,
            };
            r.violation = r.slack_out() < -DEFAULT_TOL || r.slack_in() < -DEFAULT_TOL;
            r
        })
        .collect()
}

/// The McClelland-type chain `E(G) ≤ Σ√d± ≤ √(a·n)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McClellandBound {
    pub sqrt_out_sum: f64,
    pub sqrt_in_sum: f64,
    pub sqrt_an: f64,
}

impl McClellandBound {
    /// True when `energy` respects both links of the chain within `tol`.
    pub fn holds_for(&self, energy: f64, tol: f64) -> bool {
        energy <= self.sqrt_out_sum.min(self.sqrt_in_sum) + tol
            && self.sqrt_out_sum.max(self.sqrt_in_sum) <= self.sqrt_an + tol
    }
}

pub fn mcclelland_bound(g: &Digraph) -> McClellandBound {
    let p = g.degree_profile();
    let root_sum = |d: &[usize]| d.iter().map(|&x| (x as f64).sqrt()).sum::<f64>();
    McClellandBound {
        sqrt_out_sum: root_sum(&p.out_deg),
        sqrt_in_sum: root_sum(&p.in_deg),
        sqrt_an: ((p.arc_count * g.vertex_count()) as f64).sqrt(),
    }
}
