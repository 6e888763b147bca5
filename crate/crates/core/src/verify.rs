//! Cross-checks between every computation route.
//!
//! Verification never panics on a disagreement: each `(n, p, q)` cell yields
//! a [`VerificationReport`] recording the values all routes produced, so a
//! sweep over a whole grid localises a bug instead of dying on it.

use std::fmt;

use crate::graph::{growth_delta, CanonicalPolicy, Family, GraphBuilder, GrowthStep};
use crate::schreier::{sr_bruteforce, sr_difference, SchreierParams};

/// How many of `N` cyclically `1..q`-numbered items carry the number 1:
/// `⌊(N−1)/q⌋ + 1`. This is the per-step edge count of the thinned family.
pub fn lemma1_count(candidates: u64, q: u64) -> u64 {
    assert!(candidates >= 1 && q >= 1, "arguments must be positive");
    (candidates - 1) / q + 1
}

/// `k` was outside the hypothesis range `1 ..= (p−1)q`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Lemma2OutOfRange {
    pub k: u64,
    pub max: u64,
}

impl fmt::Display for Lemma2OutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k = {} outside the hypothesis range 1..={}", self.k, self.max)
    }
}

impl std::error::Error for Lemma2OutOfRange {}

/// Whether `⌊k/q⌋ = ⌊(pk+p−1)/(pq+1)⌋`; true on the whole range
/// `1 ≤ k ≤ (p−1)q`, which is the floor identity behind the partial-sum
/// closed form.
pub fn lemma2_holds(k: u64, p: u64, q: u64) -> Result<bool, Lemma2OutOfRange> {
    assert!(p >= 1 && q >= 1, "p and q must be positive");
    let max = (p - 1) * q;
    if k < 1 || k > max {
        return Err(Lemma2OutOfRange { k, max });
    }
    let lhs = k / q;
    let numerator = p
        .checked_mul(k)
        .and_then(|pk| pk.checked_add(p - 1))
        .expect("overflow computing pk + p - 1");
    let rhs = numerator / (p * q + 1);
    Ok(lhs == rhs)
}

/// Outcome of one verification cell.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum VerifyStatus {
    Pass,
    /// Detail of the first disagreement found.
    Fail(String),
}

/// Values produced by each computation route for one `(n, p, q)`, plus the
/// per-step delta agreement along the whole growth of the companion graph.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub params: SchreierParams,
    /// Exhaustive enumeration count.
    pub sr_bf: u64,
    /// Closed-form partial sum.
    pub sr_sum: u64,
    /// Edge count of the thinned graph on `pq+1` parts with `n+1` vertices.
    pub t_edges: u64,
    /// Every growth step agreed with the difference formulas.
    pub deltas_ok: bool,
    pub status: VerifyStatus,
}

impl VerificationReport {
    fn conclude(
        params: SchreierParams,
        sr_bf: u64,
        sr_sum: u64,
        t_edges: u64,
        deltas_ok: bool,
        delta_failure: Option<String>,
    ) -> Self {
        let status = if let Some(detail) = delta_failure {
            VerifyStatus::Fail(detail)
        } else if sr_bf != sr_sum {
            VerifyStatus::Fail(format!("enumeration gives {sr_bf} but partial sum gives {sr_sum}"))
        } else if sr_bf != t_edges {
            VerifyStatus::Fail(format!("enumeration gives {sr_bf} but graph has {t_edges} edges"))
        } else {
            VerifyStatus::Pass
        };
        Self { params, sr_bf, sr_sum, t_edges, deltas_ok, status }
    }

    pub fn passed(&self) -> bool {
        matches!(self.status, VerifyStatus::Pass)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: enumeration={} partial_sum={} graph_edges={} deltas={} {}",
            self.params,
            self.sr_bf,
            self.sr_sum,
            self.t_edges,
            if self.deltas_ok { "ok" } else { "BAD" },
            match &self.status {
                VerifyStatus::Pass => "PASS".to_string(),
                VerifyStatus::Fail(detail) => format!("FAIL ({detail})"),
            }
        )
    }
}

/// Checks one growth step against the difference formulas. `before` is the
/// vertex count the step grew from.
fn check_step(before: u64, step: &GrowthStep, p: u64, q: u64) -> Result<(), String> {
    if before == 1 {
        // Seed step: both one-vertex counts are 1 by definition.
        if step.edges_added != 1 {
            return Err(format!("seed step added {} edges instead of 1", step.edges_added));
        }
        return Ok(());
    }
    let n = before - 1;
    let from_cases = growth_delta(n, p, q);
    let from_difference = sr_difference(n, p, q);
    let from_floor = p * (n + q + 1) / (p * q + 1);
    let counted = if step.candidate_count == 0 {
        0
    } else {
        lemma1_count(step.candidate_count, q)
    };
    if step.edges_added != from_cases
        || step.edges_added != from_difference
        || step.edges_added != from_floor
        || step.edges_added != counted
    {
        return Err(format!(
            "step {before}->{}: added {} edges, growth cases say {from_cases}, \
             set difference says {from_difference}, closed floor says {from_floor}, \
             numbering count says {counted}",
            before + 1,
            step.edges_added,
        ));
    }
    Ok(())
}

/// Runs every route for one parameter triple: exhaustive enumeration, the
/// partial-sum closed form, the thinned graph on `pq+1` parts grown with the
/// canonical policy, and all per-step difference formulas along the way.
pub fn verify_identity(params: &SchreierParams) -> VerificationReport {
    let (n, p, q) = (params.n(), params.p(), params.q());
    let sr_bf = sr_bruteforce(params);
    let sr_sum = crate::schreier::sr_partial_sum(params);

    let mut policy = CanonicalPolicy;
    let mut builder = GraphBuilder::new(Family::T, p * q + 1, q);
    let mut deltas_ok = true;
    let mut delta_failure = None;
    for before in 1..=n {
        match builder.step(&mut policy) {
            Ok(step) => {
                if let Err(detail) = check_step(before, &step, p, q) {
                    if deltas_ok {
                        delta_failure = Some(detail);
                        deltas_ok = false;
                    }
                }
            }
            Err(err) => {
                if deltas_ok {
                    delta_failure = Some(format!("construction failed: {err}"));
                    deltas_ok = false;
                }
                break;
            }
        }
    }
    let t_edges = builder.graph().edge_count();
    VerificationReport::conclude(*params, sr_bf, sr_sum, t_edges, deltas_ok, delta_failure)
}

/// All reports for one `(p, q)` column, `n = 1..=n_max`, sharing a single
/// incrementally grown graph so the graph work is linear in `n_max`.
pub fn sweep_cell(p: u64, q: u64, n_max: u64) -> Vec<VerificationReport> {
    assert!(n_max >= 1 && p >= 1 && q >= 1, "bounds must be positive");
    let modulus = p * q + 1;
    let mut policy = CanonicalPolicy;
    let mut builder = GraphBuilder::new(Family::T, modulus, q);
    let mut reports = Vec::with_capacity(n_max as usize);
    let mut running_sum: u64 = 1;
    let mut deltas_ok = true;
    let mut delta_failure: Option<String> = None;

    for n in 1..=n_max {
        if n > 1 {
            running_sum += p * (n - 1 + q + 1) / modulus;
        }
        match builder.step(&mut policy) {
            Ok(step) => {
                if let Err(detail) = check_step(n, &step, p, q) {
                    if deltas_ok {
                        delta_failure = Some(detail);
                        deltas_ok = false;
                    }
                }
            }
            Err(err) => {
                if deltas_ok {
                    delta_failure = Some(format!("construction failed: {err}"));
                    deltas_ok = false;
                }
            }
        }
        let params = SchreierParams::new(n, p, q);
        reports.push(VerificationReport::conclude(
            params,
            sr_bruteforce(&params),
            running_sum,
            builder.graph().edge_count(),
            deltas_ok,
            delta_failure.clone(),
        ));
    }
    reports
}

/// Runs [`verify_identity`] over the whole grid, ordered by `(p, q, n)`.
/// Failures are recorded in the reports; the sweep itself never aborts.
pub fn sweep(n_max: u64, p_max: u64, q_max: u64) -> Vec<VerificationReport> {
    assert!(n_max >= 1 && p_max >= 1 && q_max >= 1, "bounds must be positive");
    let mut reports = Vec::new();
    for p in 1..=p_max {
        for q in 1..=q_max {
            reports.extend(sweep_cell(p, q, n_max));
        }
    }
    reports
}
