//! Text formats: edge lists, event traces, CSV outputs.
//!
//! This module is the single owner of every grammar the toolkit reads or
//! writes. All serializations are deterministic — fixed sort orders, fixed
//! numeric formatting — so identical inputs produce byte-identical files on
//! every platform, which is what makes golden-file testing and reproducible
//! experiment outputs possible.
//!
//! Edge-list grammar (one item per line):
//! ```text
//! # comment, blank lines ignored
//! a b       <- edge between a and b
//! c         <- isolated vertex c
//! ```
//!
//! Event-trace grammar: `u v unix_timestamp`, whitespace-separated, one
//! event per line, timestamps non-decreasing.

use crate::centrality::CentralityVector;
use crate::error::{Error, Result};
use crate::evolution::{DistanceProfile, EvolutionPath};
use crate::experiment::{EdgeEvent, StepOutcome, TimestepRecord};
use crate::graph::{EditOp, NamedGraph, VertexId};

/// Parses the edge-list format. Vertices appear implicitly via edges or
/// explicitly on a line of their own; `#` starts a comment. Repeating an
/// edge is an error (a likely sign of a malformed file), repeating a vertex
/// mention is not (it adds no information).
pub fn parse_edge_list(text: &str) -> Result<NamedGraph> {
    let mut vertices: Vec<VertexId> = Vec::new();
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut seen_edges = std::collections::BTreeSet::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => continue,
            [v] => vertices.push(VertexId::new(*v)),
            [u, v] => {
                if u == v {
                    return Err(Error::SelfLoop {
                        vertex: (*u).to_owned(),
                    });
                }
                let (a, b) = if u < v { (*u, *v) } else { (*v, *u) };
                if !seen_edges.insert((a.to_owned(), b.to_owned())) {
                    return Err(Error::DuplicateEdge {
                        line,
                        a: a.to_owned(),
                        b: b.to_owned(),
                    });
                }
                edges.push((VertexId::new(*u), VertexId::new(*v)));
            }
            more => {
                return Err(Error::Parse {
                    line,
                    reason: format!("expected 1 or 2 tokens, found {}", more.len()),
                })
            }
        }
    }
    NamedGraph::from_parts(vertices, edges)
}

/// Serializes a graph in the edge-list format: isolated vertices first,
/// then edges, both in sorted order. `parse_edge_list` inverts this exactly.
pub fn serialize_edge_list(g: &NamedGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        if g.degree(v) == 0 {
            out.push_str(v.as_str());
            out.push('\n');
        }
    }
    for e in g.edges() {
        let (a, b) = e.endpoints();
        out.push_str(a.as_str());
        out.push(' ');
        out.push_str(b.as_str());
        out.push('\n');
    }
    out
}

fn parse_one_event(line_no: usize, tokens: &[&str]) -> Result<EdgeEvent> {
    let [u, v, ts] = tokens else {
        return Err(Error::Parse {
            line: line_no,
            reason: format!("expected `u v timestamp`, found {} tokens", tokens.len()),
        });
    };
    if u == v {
        return Err(Error::SelfLoop {
            vertex: (*u).to_owned(),
        });
    }
    let timestamp: u64 = ts.parse().map_err(|_| Error::Parse {
        line: line_no,
        reason: format!("bad timestamp '{ts}'"),
    })?;
    Ok(EdgeEvent {
        u: VertexId::new(*u),
        v: VertexId::new(*v),
        timestamp,
    })
}

fn parse_events_inner(text: &str, require_sorted: bool) -> Result<Vec<EdgeEvent>> {
    let mut events = Vec::new();
    let mut previous: Option<u64> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let event = parse_one_event(line, &tokens)?;
        if require_sorted {
            if let Some(prev) = previous {
                if event.timestamp < prev {
                    return Err(Error::NonMonotoneTimestamps {
                        line,
                        got: event.timestamp,
                        previous: prev,
                    });
                }
            }
            previous = Some(event.timestamp);
        }
        events.push(event);
    }
    if events.is_empty() {
        return Err(Error::EmptyTrace);
    }
    Ok(events)
}

/// Parses an event trace, requiring non-decreasing timestamps.
pub fn parse_events(text: &str) -> Result<Vec<EdgeEvent>> {
    parse_events_inner(text, true)
}

/// Parses an event trace that may be out of order, then sorts it by
/// timestamp (stably, so same-timestamp events keep file order).
pub fn parse_events_unsorted(text: &str) -> Result<Vec<EdgeEvent>> {
    let mut events = parse_events_inner(text, false)?;
    events.sort_by_key(|e| e.timestamp);
    Ok(events)
}

/// Formats with 12 significant digits, shortest-form: trailing zeros
/// dropped, plain decimal notation in the human range, scientific notation
/// (`1.5e+300`, `1e-05`-style exponents) outside it. Integers print bare:
/// `2`, not `2.000000000000`.
pub fn format_sig12(x: f64) -> String {
    format_sig(x, 12)
}

fn format_sig(x: f64, sig: usize) -> String {
    assert!(sig >= 1);
    if x == 0.0 {
        return "0".to_owned(); // covers -0.0 as well
    }
    if x.is_nan() {
        return "nan".to_owned();
    }
    if x.is_infinite() {
        return if x < 0.0 { "-inf" } else { "inf" }.to_owned();
    }

    // Round to `sig` digits via exponential formatting, then lay the digits
    // out by hand. `{:.*e}` gives e.g. "1.23456789012e2" (digits, raw
    // exponent, no zero padding).
    let formatted = format!("{:.*e}", sig - 1, x.abs());
    let (mantissa, exp_str) = formatted
        .split_once('e')
        .expect("exponential format always has an exponent");
    let exp: i32 = exp_str.parse().expect("exponent is an integer");
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    debug_assert_eq!(digits.len(), sig);

    let sign = if x < 0.0 { "-" } else { "" };
    let body = if exp < -4 || exp >= sig as i32 {
        // Scientific: strip trailing zeros from the fraction, pad the
        // exponent to at least two digits.
        let head = &digits[..1];
        let tail = digits[1..].trim_end_matches('0');
        let mantissa = if tail.is_empty() {
            head.to_owned()
        } else {
            format!("{head}.{tail}")
        };
        let esign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{esign}{:02}", exp.abs())
    } else if exp >= 0 {
        // Fixed notation, decimal point inside or right after the digits.
        let point = exp as usize + 1;
        let int_part = &digits[..point];
        let frac = digits[point..].trim_end_matches('0');
        if frac.is_empty() {
            int_part.to_owned()
        } else {
            format!("{int_part}.{frac}")
        }
    } else {
        // Fixed notation with leading zeros: 0.00123...
        let zeros = "0".repeat((-exp - 1) as usize);
        let frac = digits.trim_end_matches('0');
        format!("0.{zeros}{frac}")
    };
    format!("{sign}{body}")
}

/// CSV of a centrality vector: `vertex,value`, rows in vertex order.
pub fn centrality_csv(cv: &CentralityVector) -> String {
    let mut out = String::from("vertex,value\n");
    for (v, x) in cv.iter() {
        out.push_str(v.as_str());
        out.push(',');
        out.push_str(&format_sig12(x));
        out.push('\n');
    }
    out
}

fn edit_label(op: &EditOp) -> String {
    match op {
        EditOp::AddEdge(e) | EditOp::RemoveEdge(e) => {
            let (a, b) = e.endpoints();
            format!("{a}-{b}")
        }
        EditOp::AddVertex(v) | EditOp::RemoveVertex(v) => v.to_string(),
    }
}

/// CSV of a per-step distance profile: `step,edge,dC` with 1-based steps.
/// The `edge` column names the edit's edge as `u-v` (or the vertex for
/// vertex edits).
pub fn profile_csv(path: &EvolutionPath, profile: &DistanceProfile) -> String {
    assert_eq!(
        path.len(),
        profile.per_step.len(),
        "profile does not belong to this path"
    );
    let mut out = String::from("step,edge,dC\n");
    for (i, (op, value)) in path.edits().iter().zip(&profile.per_step).enumerate() {
        out.push_str(&format!(
            "{},{},{}\n",
            i + 1,
            edit_label(op),
            format_sig12(*value)
        ));
    }
    out
}

/// CSV of experiment records: header
/// `t,radius,observed_dC,rank,p5,p50,p95,skipped`; skipped timesteps leave
/// the measured columns empty.
pub fn records_csv(records: &[TimestepRecord]) -> String {
    let mut out = String::from("t,radius,observed_dC,rank,p5,p50,p95,skipped\n");
    for r in records {
        match &r.outcome {
            StepOutcome::SkippedZeroRadius => {
                out.push_str(&format!("{},{},,,,,,true\n", r.t, r.radius));
            }
            StepOutcome::Measured(m) => {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},false\n",
                    r.t,
                    r.radius,
                    format_sig12(m.observed_distance),
                    m.rank,
                    format_sig12(m.percentiles.p5),
                    format_sig12(m.percentiles.p50),
                    format_sig12(m.percentiles.p95),
                ));
            }
        }
    }
    out
}

/// CSV of a rank CDF: `rank,fraction`.
pub fn cdf_csv(cdf: &[(usize, f64)]) -> String {
    let mut out = String::from("rank,fraction\n");
    for (rank, fraction) in cdf {
        out.push_str(&format!("{},{}\n", rank, format_sig12(*fraction)));
    }
    out
}
