//! Digraph Randić index and the certified bounds `2R ≤ E ≤ 2√Δ·R`.

use serde::Serialize;

use crate::digraph::{DegreeProfile, Digraph};
use crate::energy::energy_report;
use crate::Result;

/// `R(G) = ½ Σ_{(v,w)} 1/√(d⁺(v)·d⁻(w))`. Only arcs contribute, so vertices of
/// degree zero never enter a denominator.
pub fn randic_index(g: &Digraph) -> f64 {
    randic_from_profile(g, &g.degree_profile())
}

fn randic_from_profile(g: &Digraph, p: &DegreeProfile) -> f64 {
    0.5 * g
        .arcs()
        .iter()
        .map(|&(v, w)| 1.0 / ((p.out_deg[v] * p.in_deg[w]) as f64).sqrt())
        .sum::<f64>()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsCertificate {
    pub randic: f64,
    pub energy: f64,
    pub max_deg: usize,
    /// `2R(G)`.
    pub lower: f64,
    /// `2√Δ(G)·R(G)`.
    pub upper: f64,
    pub lower_slack: f64,
    pub upper_slack: f64,
    pub lower_equal: bool,
    pub upper_equal: bool,
    pub tolerance: f64,
}

impl BoundsCertificate {
    pub fn from_parts(randic: f64, energy: f64, max_deg: usize, tolerance: f64) -> Self {
        let lower = 2.0 * randic;
        let upper = 2.0 * (max_deg as f64).sqrt() * randic;
        let lower_slack = energy - lower;
        let upper_slack = upper - energy;
        BoundsCertificate {
            randic,
            energy,
            max_deg,
            lower,
            upper,
            lower_slack,
            upper_slack,
            lower_equal: lower_slack.abs() <= tolerance,
            upper_equal: upper_slack.abs() <= tolerance,
            tolerance,
        }
    }

    /// Both inequalities hold within the tolerance.
    pub fn holds(&self) -> bool {
        self.lower_slack >= -self.tolerance && self.upper_slack >= -self.tolerance
    }
}

pub fn bounds_certificate(g: &Digraph, tol: f64) -> Result<BoundsCertificate> {
    let profile = g.degree_profile();
    let energy = energy_report(g)?.total;
    Ok(BoundsCertificate::from_parts(
        randic_from_profile(g, &profile),
        energy,
        profile.max_deg,
        tol,
    ))
}
