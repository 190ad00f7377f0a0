//! Exhaustive enumeration of small digraphs and a harness that re-checks every
//! bound, identity and equality characterization on each of them.
//!
//! A digraph on `n` vertices is encoded as a bitmask over the ordered pairs
//! `(u, v)`, `u != v`, taken in lexicographic order: bit `k` set means the
//! `k`-th pair is an arc. There is no isomorphism reduction.

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{classify_lower_equality, classify_upper_equality};
use crate::digraph::{Arc, Digraph};
use crate::energy::{
    adjacent_pair_check, edge_energy, energy_report, mcclelland_bound, vertex_degree_bound_check,
};
use crate::hermitian::transfer_check;
use crate::randic::{randic_index, BoundsCertificate};
use crate::{Error, Result};

/// Largest vertex count accepted by [`enumerate_digraphs`] and [`sweep`].
pub const MAX_ENUM_N: usize = 5;
/// Tolerance for `Σ E(e) = 2E(G)` and `2E(G) = E(B(G))`.
pub const IDENTITY_TOL: f64 = 1e-8;
/// Tolerance for `2R(G) = R(B(G))`.
pub const RANDIC_TRANSFER_TOL: f64 = 1e-10;
/// Numerical gap below which a bound counts as attained when cross-checking
/// the structural classifiers.
pub const EQUALITY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    LowerBound,
    UpperBound,
    PairProduct,
    PairSum,
    VertexDegreeBound,
    Mcclelland,
    EdgeEnergySum,
    TransferEnergy,
    TransferRandic,
    LowerEqualityIff,
    UpperEqualityIff,
    TraceAgreement,
}

impl Property {
    pub const ALL: [Property; 12] = [
        Property::LowerBound,
        Property::UpperBound,
        Property::PairProduct,
        Property::PairSum,
        Property::VertexDegreeBound,
        Property::Mcclelland,
        Property::EdgeEnergySum,
        Property::TransferEnergy,
        Property::TransferRandic,
        Property::LowerEqualityIff,
        Property::UpperEqualityIff,
        Property::TraceAgreement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::LowerBound => "lower_bound",
            Property::UpperBound => "upper_bound",
            Property::PairProduct => "pair_product",
            Property::PairSum => "pair_sum",
            Property::VertexDegreeBound => "vertex_degree_bound",
            Property::Mcclelland => "mcclelland",
            Property::EdgeEnergySum => "edge_energy_sum",
            Property::TransferEnergy => "transfer_energy",
            Property::TransferRandic => "transfer_randic",
            Property::LowerEqualityIff => "lower_equality_iff",
            Property::UpperEqualityIff => "upper_equality_iff",
            Property::TraceAgreement => "trace_agreement",
        }
    }
}

/// Where a property failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Arc(Arc),
    Vertex(usize),
    Graph,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyResult {
    pub property: Property,
    pub passed: bool,
    /// Margin of the tightest instance; negative beyond the tolerance means
    /// failure. `None` when the property is vacuous (e.g. no arcs).
    pub worst_slack: Option<f64>,
    /// Tightest instance; always present on failure.
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub n: usize,
    /// Arc bitmask, when the graph is small enough to have one.
    pub graph_code: Option<u64>,
    pub properties: Vec<PropertyResult>,
    pub min_pair_product: Option<f64>,
    pub lower_equal_numeric: bool,
    pub lower_equal_structural: bool,
    pub upper_equal_numeric: bool,
    pub upper_equal_structural: bool,
    /// Numerical failure that prevented evaluation.
    pub error: Option<String>,
}

impl CheckOutcome {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }

    pub fn get(&self, property: Property) -> &PropertyResult {
        &self.properties[property as usize]
    }
}

/// The ordered pairs of `0..n` without the diagonal, lexicographically.
pub fn ordered_pairs(n: usize) -> Vec<Arc> {
    (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect()
}

/// Decodes an arc bitmask. Panics if `code` has bits beyond `n(n-1)`.
pub fn digraph_from_code(n: usize, code: u64) -> Digraph {
    let pairs = ordered_pairs(n);
    assert!(pairs.len() >= 64 || code >> pairs.len() == 0, "code out of range");
    let arcs = pairs
        .iter()
        .enumerate()
        .filter(|&(k, _)| code >> k & 1 == 1)
        .map(|(_, &a)| a);
    Digraph::new(n, arcs).expect("enumerated pairs are valid arcs")
}

/// Inverse of [`digraph_from_code`]; `None` when `n(n-1) > 64`.
pub fn code_of(g: &Digraph) -> Option<u64> {
    let n = g.vertex_count();
    if n * n.saturating_sub(1) > 64 {
        return None;
    }
    // index of (u, v) among the ordered pairs
    let index = |(u, v): Arc| u * (n - 1) + if v > u { v - 1 } else { v };
    Some(g.arcs().iter().fold(0u64, |c, &a| c | 1 << index(a)))
}

fn check_range(n: usize) -> Result<()> {
    if !(1..=MAX_ENUM_N).contains(&n) {
        return Err(Error::BadParameter(format!(
            "vertex count must lie in 1..={MAX_ENUM_N}, got {n}"
        )));
    }
    Ok(())
}

/// All `2^(n(n-1))` simple digraphs on `n` vertices in increasing code order.
pub fn enumerate_digraphs(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    check_range(n)?;
    let count = 1u64 << (n * (n - 1));
    Ok((0..count).map(move |code| digraph_from_code(n, code)))
}

fn min_by_slack<T>(items: impl IntoIterator<Item = (f64, T)>) -> Option<(f64, T)> {
    items
        .into_iter()
        .fold(None, |best: Option<(f64, T)>, (s, t)| match best {
            Some((b, _)) if b <= s => best,
            _ => Some((s, t)),
        })
}

fn bound_result(property: Property, worst: Option<(f64, Witness)>, tol: f64) -> PropertyResult {
    match worst {
        None => PropertyResult {
            property,
            passed: true,
            worst_slack: None,
            witness: None,
        },
        Some((slack, witness)) => PropertyResult {
            property,
            passed: slack >= -tol,
            worst_slack: Some(slack),
            witness: Some(witness),
        },
    }
}

fn identity_result(property: Property, gap: f64, tol: f64) -> PropertyResult {
    PropertyResult {
        property,
        passed: gap <= tol,
        worst_slack: Some(-gap),
        witness: Some(Witness::Graph),
    }
}

/// Structural and numerical verdicts must agree; the slack is the distance of
/// the numerical gap from the threshold, positive when they agree.
fn iff_result(property: Property, structural: bool, gap: f64) -> PropertyResult {
    let slack = if structural {
        EQUALITY_TOL - gap
    } else {
        gap - EQUALITY_TOL
    };
    PropertyResult {
        property,
        passed: structural == (gap <= EQUALITY_TOL),
        worst_slack: Some(slack),
        witness: Some(Witness::Graph),
    }
}

/// Evaluates all twelve properties on `g`, using `tol` for the inequalities.
pub fn check_graph(g: &Digraph, tol: f64) -> CheckOutcome {
    let n = g.vertex_count();
    let graph_code = code_of(g);
    let fail_all = |error: String| CheckOutcome {
        n,
        graph_code,
        properties: Property::ALL
            .iter()
            .map(|&property| PropertyResult {
                property,
                passed: false,
                worst_slack: None,
                witness: Some(Witness::Graph),
            })
            .collect(),
        min_pair_product: None,
        lower_equal_numeric: false,
        lower_equal_structural: false,
        upper_equal_numeric: false,
        upper_equal_structural: false,
        error: Some(error),
    };

    let report = match energy_report(g) {
        Ok(r) => r,
        Err(e) => return fail_all(e.to_string()),
    };
    let transfer = match transfer_check(g, IDENTITY_TOL) {
        Ok(t) => t,
        Err(e) => return fail_all(e.to_string()),
    };
    let profile = g.degree_profile();
    let cert = BoundsCertificate::from_parts(randic_index(g), report.total, profile.max_deg, tol);
    let pairs = adjacent_pair_check(g, &report);
    let vertex_bounds = vertex_degree_bound_check(g, &report);
    let mc = mcclelland_bound(g);

    let edge_sum: f64 = g
        .arcs()
        .iter()
        .map(|&e| edge_energy(g, &report, e).expect("arc of g"))
        .sum();
    let lower_structural = classify_lower_equality(g).is_ok();
    let upper_structural = classify_upper_equality(g).is_ok();
    let lower_gap = cert.lower_slack.abs();
    let upper_gap = cert.upper_slack.abs();

    let mc_slack = (mc.sqrt_out_sum.min(mc.sqrt_in_sum) - report.total)
        .min(mc.sqrt_an - mc.sqrt_out_sum.max(mc.sqrt_in_sum));

    let properties = vec![
        bound_result(
            Property::LowerBound,
            Some((cert.lower_slack, Witness::Graph)),
            tol,
        ),
        bound_result(
            Property::UpperBound,
            Some((cert.upper_slack, Witness::Graph)),
            tol,
        ),
        bound_result(
            Property::PairProduct,
            min_by_slack(pairs.iter().map(|p| (p.product - 1.0, Witness::Arc(p.arc)))),
            tol,
        ),
        bound_result(
            Property::PairSum,
            min_by_slack(pairs.iter().map(|p| (p.sum - 2.0, Witness::Arc(p.arc)))),
            tol,
        ),
        bound_result(
            Property::VertexDegreeBound,
            min_by_slack(vertex_bounds.iter().map(|r| {
                (r.slack_out().min(r.slack_in()), Witness::Vertex(r.vertex))
            })),
            tol,
        ),
        bound_result(Property::Mcclelland, Some((mc_slack, Witness::Graph)), tol),
        identity_result(
            Property::EdgeEnergySum,
            (edge_sum - 2.0 * report.total).abs(),
            IDENTITY_TOL,
        ),
        identity_result(Property::TransferEnergy, transfer.energy_gap, IDENTITY_TOL),
        identity_result(
            Property::TransferRandic,
            transfer.randic_gap,
            RANDIC_TRANSFER_TOL,
        ),
        iff_result(Property::LowerEqualityIff, lower_structural, lower_gap),
        iff_result(Property::UpperEqualityIff, upper_structural, upper_gap),
        identity_result(
            Property::TraceAgreement,
            (report.trace_out() - report.trace_in()).abs(),
            tol,
        ),
    ];

    CheckOutcome {
        n,
        graph_code,
        properties,
        min_pair_product: pairs.iter().map(|p| p.product).reduce(f64::min),
        lower_equal_numeric: lower_gap <= EQUALITY_TOL,
        lower_equal_structural: lower_structural,
        upper_equal_numeric: upper_gap <= EQUALITY_TOL,
        upper_equal_structural: upper_structural,
        error: None,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertySummary {
    pub property: Property,
    pub passed: u64,
    pub failed: u64,
    pub worst_slack: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub n: usize,
    pub code: u64,
    pub property: Property,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    pub max_n: usize,
    pub tol: f64,
    pub total_graphs: u64,
    /// Graph count for `n = 1..=max_n`.
    pub graphs_per_n: Vec<u64>,
    pub properties: Vec<PropertySummary>,
    pub min_pair_product: Option<f64>,
    pub min_lower_slack: Option<f64>,
    pub min_upper_slack: Option<f64>,
    pub lower_equal_numeric: u64,
    pub lower_equal_structural: u64,
    pub upper_equal_numeric: u64,
    pub upper_equal_structural: u64,
    pub failures: Vec<Failure>,
}

fn min_opt(a: Option<f64>, b: Option<f64>) -> Option<f64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl SweepSummary {
    fn empty(max_n: usize, tol: f64) -> Self {
        SweepSummary {
            max_n,
            tol,
            total_graphs: 0,
            graphs_per_n: vec![0; max_n],
            properties: Property::ALL
                .iter()
                .map(|&property| PropertySummary {
                    property,
                    passed: 0,
                    failed: 0,
                    worst_slack: None,
                })
                .collect(),
            min_pair_product: None,
            min_lower_slack: None,
            min_upper_slack: None,
            lower_equal_numeric: 0,
            lower_equal_structural: 0,
            upper_equal_numeric: 0,
            upper_equal_structural: 0,
            failures: Vec::new(),
        }
    }

    fn absorb(mut self, outcome: &CheckOutcome) -> Self {
        self.total_graphs += 1;
        self.graphs_per_n[outcome.n - 1] += 1;
        for (acc, r) in self.properties.iter_mut().zip(&outcome.properties) {
            if r.passed {
                acc.passed += 1;
            } else {
                acc.failed += 1;
                self.failures.push(Failure {
                    n: outcome.n,
                    code: outcome.graph_code.unwrap_or(u64::MAX),
                    property: r.property,
                    witness: r.witness.unwrap_or(Witness::Graph),
                });
            }
            acc.worst_slack = min_opt(acc.worst_slack, r.worst_slack);
        }
        self.min_pair_product = min_opt(self.min_pair_product, outcome.min_pair_product);
        self.min_lower_slack = min_opt(
            self.min_lower_slack,
            outcome.get(Property::LowerBound).worst_slack,
        );
        self.min_upper_slack = min_opt(
            self.min_upper_slack,
            outcome.get(Property::UpperBound).worst_slack,
        );
        self.lower_equal_numeric += u64::from(outcome.lower_equal_numeric);
        self.lower_equal_structural += u64::from(outcome.lower_equal_structural);
        self.upper_equal_numeric += u64::from(outcome.upper_equal_numeric);
        self.upper_equal_structural += u64::from(outcome.upper_equal_structural);
        self
    }

    /// Associative and commutative up to the final sort of `failures`.
    fn merge(mut self, other: SweepSummary) -> Self {
        self.total_graphs += other.total_graphs;
        for (a, b) in self.graphs_per_n.iter_mut().zip(other.graphs_per_n) {
            *a += b;
        }
        for (a, b) in self.properties.iter_mut().zip(other.properties) {
            a.passed += b.passed;
            a.failed += b.failed;
            a.worst_slack = min_opt(a.worst_slack, b.worst_slack);
        }
        self.min_pair_product = min_opt(self.min_pair_product, other.min_pair_product);
        self.min_lower_slack = min_opt(self.min_lower_slack, other.min_lower_slack);
        self.min_upper_slack = min_opt(self.min_upper_slack, other.min_upper_slack);
        self.lower_equal_numeric += other.lower_equal_numeric;
        self.lower_equal_structural += other.lower_equal_structural;
        self.upper_equal_numeric += other.upper_equal_numeric;
        self.upper_equal_structural += other.upper_equal_structural;
        self.failures.extend(other.failures);
        self
    }

    pub fn failure_count(&self) -> usize {
        self.failures.len()
    }

    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs [`check_graph`] on every digraph with `1..=max_n` vertices.
///
/// `jobs = 0` uses rayon's default thread count. The summary does not depend
/// on `jobs`.
pub fn sweep(max_n: usize, tol: f64, jobs: usize) -> Result<SweepSummary> {
    check_range(max_n)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::BadParameter(e.to_string()))?;
    let work: Vec<(usize, u64)> = (1..=max_n)
        .flat_map(|n| (0..1u64 << (n * (n - 1))).map(move |c| (n, c)))
        .collect();
    let mut summary = pool.install(|| {
        work.par_iter()
            .fold(
                || SweepSummary::empty(max_n, tol),
                |acc, &(n, code)| acc.absorb(&check_graph(&digraph_from_code(n, code), tol)),
            )
            .reduce(|| SweepSummary::empty(max_n, tol), SweepSummary::merge)
    });
    summary.failures.sort();
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::gen_cycle;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_digraphs(1).unwrap().count(), 1);
        assert_eq!(enumerate_digraphs(3).unwrap().count(), 64);
        assert_eq!(enumerate_digraphs(4).unwrap().count(), 4096);
        assert!(matches!(enumerate_digraphs(0), Err(Error::BadParameter(_))));
        assert!(matches!(enumerate_digraphs(6), Err(Error::BadParameter(_))));
    }

    #[test]
    fn code_order() {
        assert_eq!(ordered_pairs(3), vec![(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]);
        let g = digraph_from_code(3, 0b01_1001);
        assert_eq!(g.arcs(), &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(code_of(&g), Some(0b01_1001));
        for (code, g) in enumerate_digraphs(4).unwrap().enumerate() {
            assert_eq!(code_of(&g), Some(code as u64));
        }
        assert_eq!(code_of(&Digraph::edgeless(9)), None);
    }

    #[test]
    fn three_vertex_graph_passes_with_tight_pair() {
        let g = Digraph::new(3, [(0, 1), (1, 2), (0, 2), (2, 0)]).unwrap();
        let out = check_graph(&g, 1e-9);
        assert!(out.all_passed(), "{out:?}");
        let pp = out.get(Property::PairProduct);
        assert!(pp.worst_slack.unwrap().abs() < 1e-12);
        assert_eq!(pp.witness, Some(Witness::Arc((2, 0))));
    }

    #[test]
    fn cycle_is_both_equality_cases() {
        let out = check_graph(&gen_cycle(4).unwrap(), 1e-9);
        assert!(out.all_passed());
        assert!(out.lower_equal_numeric && out.lower_equal_structural);
        assert!(out.upper_equal_numeric && out.upper_equal_structural);
    }

    #[test]
    fn transitive_triangle_agrees_on_no_equality() {
        let g = Digraph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let out = check_graph(&g, 1e-9);
        assert!(out.all_passed());
        assert!(!out.lower_equal_numeric && !out.lower_equal_structural);
    }

    #[test]
    fn edgeless_pair_checks_are_vacuous() {
        let out = check_graph(&Digraph::edgeless(3), 1e-9);
        assert!(out.all_passed());
        assert_eq!(out.get(Property::PairProduct).worst_slack, None);
        assert_eq!(out.min_pair_product, None);
    }

    #[test]
    fn failing_iff_is_reported_with_witness() {
        let r = iff_result(Property::LowerEqualityIff, true, 0.5);
        assert!(!r.passed && r.witness.is_some());
        let r = bound_result(Property::PairSum, Some((-1.0, Witness::Arc((0, 1)))), 1e-9);
        assert!(!r.passed && r.witness == Some(Witness::Arc((0, 1))));
    }

    #[test]
    fn sweep_three() {
        let s = sweep(3, 1e-9, 1).unwrap();
        assert_eq!(s.total_graphs, 69);
        assert_eq!(s.graphs_per_n, vec![1, 4, 64]);
        assert!(s.is_clean(), "{:?}", s.failures);
        assert!(s.min_pair_product.unwrap() >= 1.0 - 1e-9);
        assert_eq!(s.lower_equal_numeric, s.lower_equal_structural);
    }

    #[test]
    fn sweep_is_independent_of_jobs() {
        let a = sweep(3, 1e-9, 1).unwrap();
        let b = sweep(3, 1e-9, 4).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn sweep_range() {
        assert!(sweep(0, 1e-9, 1).is_err());
        assert!(sweep(6, 1e-9, 1).is_err());
    }
}
