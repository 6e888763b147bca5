//! Browser bindings for the demo page in `www/`.
//!
//! Three operations, each returning a JSON string so the page stays plain
//! JavaScript: build one thinned graph with its counting companions, tabulate
//! a sequence with its differences, and sweep a grid of identity checks.
//! Invalid or oversized inputs come back as `{"error": ".."}` rather than a
//! panic.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use schreier_turan::graph::{CanonicalPolicy, Family, GraphBuilder};
use schreier_turan::schreier::{sr_bruteforce, sr_difference, sr_partial_sum, SchreierParams};
use schreier_turan::verify::{sweep_cell, VerifyStatus};

#[derive(Serialize)]
struct ErrorView {
    error: String,
}

fn error_json(message: impl Into<String>) -> String {
    serde_json::to_string(&ErrorView { error: message.into() }).unwrap()
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).unwrap()
}

#[derive(Serialize)]
struct GraphView {
    n: u32,
    p: u32,
    q: u32,
    parts: u32,
    graph_vertices: u64,
    /// Vertex ids per part, part index order.
    members: Vec<Vec<u32>>,
    /// Sorted `(min, max)` id pairs.
    edges: Vec<(u32, u32)>,
    edge_count: u64,
    sr_enumerated: u64,
    sr_partial_sum: u64,
    identity_holds: bool,
}

/// The thinned graph on `pq+1` parts with `n+1` vertices, next to both
/// counts of `Sr(n, p, q)`. Limits: `n <= 150`, `p, q <= 9`.
#[wasm_bindgen]
pub fn graph_json(n: u32, p: u32, q: u32) -> String {
    if n < 1 || p < 1 || q < 1 {
        return error_json("n, p and q must be at least 1");
    }
    if n > 150 || p > 9 || q > 9 {
        return error_json("demo limits: n <= 150, p <= 9, q <= 9");
    }
    let (n64, p64, q64) = (n as u64, p as u64, q as u64);
    let parts = p64 * q64 + 1;
    let mut builder = GraphBuilder::new(Family::T, parts, q64);
    let mut policy = CanonicalPolicy;
    if let Err(err) = builder.grow_to(n64 + 1, &mut policy) {
        return error_json(format!("construction failed: {err}"));
    }
    let graph = builder.into_graph();

    let params = SchreierParams::new(n64, p64, q64);
    let sr_enumerated = sr_bruteforce(&params);
    let sr_sum = sr_partial_sum(&params);
    let view = GraphView {
        n,
        p,
        q,
        parts: parts as u32,
        graph_vertices: graph.vertex_count(),
        members: graph.parts().map(|(_, m)| m.iter().map(|v| v.0).collect()).collect(),
        edges: graph.edges().map(|(a, b)| (a.0, b.0)).collect(),
        edge_count: graph.edge_count(),
        sr_enumerated,
        sr_partial_sum: sr_sum,
        identity_holds: sr_enumerated == graph.edge_count() && sr_sum == graph.edge_count(),
    };
    to_json(&view)
}

#[derive(Serialize)]
struct TermView {
    n: u64,
    sr: u64,
    diff: u64,
}

#[derive(Serialize)]
struct SequenceView {
    p: u32,
    q: u32,
    /// Whether every term was re-checked by exhaustive enumeration.
    checked: bool,
    terms: Vec<TermView>,
}

/// `Sr(1..=n_max, p, q)` with forward differences. Terms come from the
/// closed form; up to `n_max = 400` each is re-checked by enumeration.
/// Limits: `n_max <= 2000`, `p, q <= 9`.
#[wasm_bindgen]
pub fn sequence_json(p: u32, q: u32, n_max: u32) -> String {
    if p < 1 || q < 1 || n_max < 1 {
        return error_json("p, q and n_max must be at least 1");
    }
    if n_max > 2000 || p > 9 || q > 9 {
        return error_json("demo limits: n_max <= 2000, p <= 9, q <= 9");
    }
    let checked = n_max <= 400;
    let mut terms = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max as u64 {
        let params = SchreierParams::new(n, p as u64, q as u64);
        let sr = sr_partial_sum(&params);
        if checked && sr_bruteforce(&params) != sr {
            return error_json(format!("routes disagree at {params}"));
        }
        terms.push(TermView { n, sr, diff: sr_difference(n, p as u64, q as u64) });
    }
    to_json(&SequenceView { p, q, checked, terms })
}

#[derive(Serialize)]
struct CellView {
    p: u64,
    q: u64,
    pass: usize,
    total: usize,
    first_failure: Option<String>,
}

#[derive(Serialize)]
struct SweepView {
    n_max: u32,
    p_max: u32,
    q_max: u32,
    all_pass: bool,
    cells: Vec<CellView>,
}

/// Identity verification over the whole grid, aggregated per `(p, q)`.
/// Limits: `n_max <= 150`, `p_max, q_max <= 6`.
#[wasm_bindgen]
pub fn sweep_json(n_max: u32, p_max: u32, q_max: u32) -> String {
    if n_max < 1 || p_max < 1 || q_max < 1 {
        return error_json("all bounds must be at least 1");
    }
    if n_max > 150 || p_max > 6 || q_max > 6 {
        return error_json("demo limits: n_max <= 150, p_max <= 6, q_max <= 6");
    }
    let mut cells = Vec::new();
    let mut all_pass = true;
    for p in 1..=p_max as u64 {
        for q in 1..=q_max as u64 {
            let reports = sweep_cell(p, q, n_max as u64);
            let pass = reports.iter().filter(|r| r.passed()).count();
            let first_failure = reports.iter().find(|r| !r.passed()).map(|r| {
                match &r.status {
                    VerifyStatus::Fail(detail) => format!("{}: {detail}", r.params),
                    VerifyStatus::Pass => unreachable!(),
                }
            });
            all_pass &= pass == reports.len();
            cells.push(CellView { p, q, pass, total: reports.len(), first_failure });
        }
    }
    to_json(&SweepView { n_max, p_max, q_max, all_pass, cells })
}
