//! Edge-list input and JSON/text reports for the `dgspec` binary.
//!
//! Edge-list grammar, one item per line:
//!
//! ```text
//! # comment to end of line
//! n 3        optional, must precede every arc
//! 0 1        arc 0 → 1
//! ```
//!
//! Without an `n` directive the vertex count is one more than the largest
//! label (zero for an empty document).

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::classify::{classify_lower_equality, classify_upper_equality, find_splitting};
use crate::digraph::{Arc, Digraph};
use crate::energy::energy_report;
use crate::hermitian::double;
use crate::oracle::SweepSummary;
use crate::randic::{bounds_certificate, randic_index};
use crate::{Error, Result};

/// Significant digits kept for every real in a report.
pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListDocument {
    pub declared_n: Option<usize>,
    /// Arcs with the line each came from.
    pub arcs: Vec<(usize, Arc)>,
}

impl EdgeListDocument {
    pub fn vertex_count(&self) -> usize {
        self.declared_n.unwrap_or_else(|| {
            self.arcs
                .iter()
                .map(|&(_, (u, v))| u.max(v) + 1)
                .max()
                .unwrap_or(0)
        })
    }

    pub fn into_digraph(self) -> Result<Digraph> {
        let n = self.vertex_count();
        let mut seen = std::collections::HashSet::new();
        for &(line, (u, v)) in &self.arcs {
            let at = |source: Error| Error::AtLine {
                line,
                source: Box::new(source),
            };
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(at(Error::OutOfRange { vertex, n }));
                }
            }
            if u == v {
                return Err(at(Error::LoopArc(u)));
            }
            if !seen.insert((u, v)) {
                return Err(at(Error::DuplicateArc(u, v)));
            }
        }
        Digraph::new(n, self.arcs.into_iter().map(|(_, a)| a))
    }
}

fn parse_label(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Syntax {
        line,
        reason: format!("expected a nonnegative integer, found {tok:?}"),
    })
}

pub fn parse_document(text: &str) -> Result<EdgeListDocument> {
    let mut doc = EdgeListDocument {
        declared_n: None,
        arcs: Vec::new(),
    };
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks.as_slice() {
            [] => {}
            ["n", count] => {
                if doc.declared_n.is_some() || !doc.arcs.is_empty() {
                    return Err(Error::Syntax {
                        line,
                        reason: "the n directive must come first and only once".into(),
                    });
                }
                doc.declared_n = Some(parse_label(count, line)?);
            }
            [u, v] => {
                let arc = (parse_label(u, line)?, parse_label(v, line)?);
                doc.arcs.push((line, arc));
            }
            _ => {
                return Err(Error::Syntax {
                    line,
                    reason: format!("expected `<u> <v>` or `n <count>`, found {:?}", content.trim()),
                })
            }
        }
    }
    Ok(doc)
}

pub fn parse_edge_list(text: &str) -> Result<Digraph> {
    parse_document(text)?.into_digraph()
}

/// Canonical form: `n` directive, then arcs in sorted order.
pub fn serialize_edge_list(g: &Digraph) -> String {
    let mut s = format!("n {}\n", g.vertex_count());
    for &(u, v) in g.arcs() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Rounds to [`SIGNIFICANT_DIGITS`] significant digits; `-0` becomes `0`.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn round_value(v: Value) -> Value {
    match v {
        Value::Number(num) if num.is_f64() => {
            let x = round_sig(num.as_f64().expect("f64 number"));
            serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(round_value).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, round_value(v))).collect()),
        other => other,
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportKind {
    Energy,
    Randic,
    Bounds,
    Double,
    Classify,
}

/// Builds the JSON object for one analysis of `g`, reals already rounded.
pub fn emit_report(g: &Digraph, which: ReportKind, tol: f64) -> Result<Value> {
    let profile = g.degree_profile();
    let mut out = Map::new();
    out.insert("n".into(), json!(g.vertex_count()));
    out.insert("arc_count".into(), json!(profile.arc_count));
    out.insert("max_degree".into(), json!(profile.max_deg));
    match which {
        ReportKind::Energy => {
            let r = energy_report(g)?;
            out.insert("singular_values".into(), json!(r.sigma));
            out.insert("energy".into(), json!(r.total));
            out.insert("vertex_energy_out".into(), json!(r.vertex_out));
            out.insert("vertex_energy_in".into(), json!(r.vertex_in));
        }
        ReportKind::Randic => {
            out.insert("randic".into(), json!(randic_index(g)));
        }
        ReportKind::Bounds => {
            let cert = bounds_certificate(g, tol)?;
            if let Value::Object(fields) = to_value(&cert) {
                out.extend(fields);
            }
        }
        ReportKind::Double => {
            let b = double(g);
            out.insert("double_vertex_count".into(), json!(b.graph.vertex_count()));
            out.insert("double_edges".into(), json!(b.edge_pairs()));
        }
        ReportKind::Classify => {
            out.insert(
                "splitting".into(),
                find_splitting(g).map_or(Value::Null, |s| to_value(&s.parts)),
            );
            out.insert(
                "lower_equality".into(),
                classify_lower_equality(g).map_or(Value::Null, |s| to_value(&s.parts)),
            );
            out.insert(
                "upper_equality".into(),
                classify_upper_equality(g).map_or(Value::Null, |k| to_value(&k)),
            );
        }
    }
    Ok(round_value(Value::Object(out)))
}

/// JSON form of a sweep, reals rounded.
pub fn sweep_report(summary: &SweepSummary) -> Value {
    let mut v = to_value(summary);
    if let Value::Object(map) = &mut v {
        map.insert("failure_count".into(), json!(summary.failure_count()));
    }
    round_value(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Text,
}

/// Renders a report object. Text output has one `key: value` line per field,
/// with nested values written as compact JSON.
pub fn render(report: &Value, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("value serializes");
            s.push('\n');
            s
        }
        OutputFormat::Text => match report {
            Value::Object(map) => map
                .iter()
                .map(|(k, v)| format!("{k}: {v}\n"))
                .collect(),
            other => format!("{other}\n"),
        },
    }
}
