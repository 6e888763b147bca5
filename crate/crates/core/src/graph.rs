//! Recursive Turán-style graph constructions.
//!
//! Three families are grown one vertex at a time from a single-vertex seed
//! with a fixed number of parts:
//!
//! * `M(n, p)` — balanced growth where a "full" step wires the newcomer to
//!   its own part and to everything else except one chosen part;
//! * `M(n, p, q)` — the same with a three-way case split driven by `q`;
//! * `T(n, p, q)` — as `M(n, p, q)`, except the newcomer's candidate
//!   neighbours are numbered cyclically `1..q` and only those numbered 1
//!   receive an edge.
//!
//! The constructions leave several decisions open (which part hosts the new
//! vertex, which part is skipped, how candidates are ordered). Those choices
//! are captured by [`ChoicePolicy`]; edge counts do not depend on them, which
//! the test suite checks by fuzzing [`RandomPolicy`] against
//! [`CanonicalPolicy`].

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{quot_rem, Remainder};

/// 1-based vertex id; ids equal insertion order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// 0-based part index. Parts (including empty ones) exist for the whole life
/// of a graph, so indices are stable across growth steps.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PartId(pub usize);

impl fmt::Display for PartId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An undirected graph with an ordered list of parts and an explicit edge
/// set, stored as a sorted list of `(min, max)` id pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartiteGraph {
    parts: Vec<Vec<VertexId>>,
    part_of: Vec<PartId>,
    edges: BTreeSet<(VertexId, VertexId)>,
}

impl PartiteGraph {
    /// An empty graph with `part_count` (>= 1) parts and no vertices.
    pub fn new(part_count: usize) -> Self {
        assert!(part_count >= 1, "need at least one part");
        Self {
            parts: vec![Vec::new(); part_count],
            part_of: Vec::new(),
            edges: BTreeSet::new(),
        }
    }

    pub fn vertex_count(&self) -> u64 {
        self.part_of.len() as u64
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// Members of one part, in insertion order (which is ascending id order).
    pub fn part(&self, part: PartId) -> &[VertexId] {
        &self.parts[part.0]
    }

    pub fn parts(&self) -> impl Iterator<Item = (PartId, &[VertexId])> {
        self.parts.iter().enumerate().map(|(i, members)| (PartId(i), members.as_slice()))
    }

    pub fn part_of(&self, v: VertexId) -> PartId {
        self.part_of[(v.0 - 1) as usize]
    }

    /// All vertex ids, ascending.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (1..=self.part_of.len() as u32).map(VertexId)
    }

    /// Edges as `(min, max)` pairs in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> u64 {
        self.edges.len() as u64
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.contains(&key)
    }

    /// Appends a vertex to `part` and returns its id (insertion index).
    pub fn add_vertex(&mut self, part: PartId) -> VertexId {
        assert!(part.0 < self.parts.len(), "part {part} out of range");
        let id = VertexId(self.part_of.len() as u32 + 1);
        self.parts[part.0].push(id);
        self.part_of.push(part);
        id
    }

    /// Inserts the undirected edge `{a, b}`. Panics on self-loops, unknown
    /// ids and duplicates: the constructions never produce any of those.
    pub fn add_edge(&mut self, a: VertexId, b: VertexId) {
        assert!(a != b, "self-loop at {a}");
        let n = self.part_of.len() as u32;
        assert!(a.0 >= 1 && a.0 <= n && b.0 >= 1 && b.0 <= n, "edge endpoint out of range");
        let key = if a < b { (a, b) } else { (b, a) };
        let inserted = self.edges.insert(key);
        assert!(inserted, "duplicate edge {a} -- {b}");
    }

    /// Sizes of all parts, by part index.
    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }
}

/// Which growth rule fires at a step, under the decomposition
/// `count = parts·ell + k` with `1 ≤ k ≤ parts` of the current vertex count.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CaseTag {
    /// `k = parts`: every part has `ell+1` vertices; the newcomer may join
    /// any part, sees its own part and skips one other part.
    Full,
    /// `parts − q < k < parts`: the newcomer joins a minimum-size part, sees
    /// its own part and skips one part that has `ell+1` vertices.
    Middle,
    /// `k ≤ parts − q`: the newcomer joins a minimum-size part and sees
    /// everything outside it.
    Low,
}

/// The decomposition and rule applying at one growth step.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GrowthCase {
    /// Quotient of the current vertex count by the part count.
    pub ell: u64,
    /// Remainder, in `1..=parts`.
    pub k: u64,
    pub tag: CaseTag,
}

/// The three graph families sharing one growth skeleton.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    /// Two growth cases (full/low); the gap plays no role.
    M,
    /// Three growth cases driven by the gap; connects to all candidates.
    Mq,
    /// As `Mq`, but keeps only every `q`-th candidate neighbour.
    T,
}

impl Family {
    /// Classifies the step that grows a `count`-vertex graph by one vertex.
    pub fn growth_case(self, count: u64, parts: u64, q: u64) -> GrowthCase {
        let (ell, k) = quot_rem(count, parts, Remainder::OneBased);
        let tag = match self {
            Family::M => {
                if k == parts {
                    CaseTag::Full
                } else {
                    CaseTag::Low
                }
            }
            Family::Mq | Family::T => {
                if k == parts {
                    CaseTag::Full
                } else if k + q > parts {
                    CaseTag::Middle
                } else {
                    CaseTag::Low
                }
            }
        };
        GrowthCase { ell, k, tag }
    }
}

/// Resolution of the construction's free choices.
///
/// The builder always presents the set of valid options; a policy that
/// answers with something outside that set makes the build fail with a
/// [`BuildError`] rather than silently producing a different graph.
pub trait ChoicePolicy {
    /// Pick the part that receives the new vertex. `eligible` is nonempty
    /// and sorted by part index.
    fn host_part(&mut self, graph: &PartiteGraph, eligible: &[PartId]) -> PartId;

    /// Pick the part whose vertices the new vertex will not see.
    /// `candidates` is nonempty and sorted by part index.
    fn excluded_part(&mut self, graph: &PartiteGraph, candidates: &[PartId]) -> PartId;

    /// Reorder the candidate neighbours before cyclic numbering. Called with
    /// ids ascending; must permute them in place.
    fn order_candidates(&mut self, graph: &PartiteGraph, candidates: &mut [VertexId]);
}

/// Lowest-index host, lowest-index excluded part, candidates in ascending id
/// order. Builds are reproducible byte for byte with this policy.
#[derive(Clone, Copy, Default, Debug)]
pub struct CanonicalPolicy;

impl ChoicePolicy for CanonicalPolicy {
    fn host_part(&mut self, _graph: &PartiteGraph, eligible: &[PartId]) -> PartId {
        eligible[0]
    }

    fn excluded_part(&mut self, _graph: &PartiteGraph, candidates: &[PartId]) -> PartId {
        candidates[0]
    }

    fn order_candidates(&mut self, _graph: &PartiteGraph, _candidates: &mut [VertexId]) {
        // Already ascending.
    }
}

/// Uniformly random valid choices from a seeded generator; used to check
/// that edge counts do not depend on the free choices.
#[derive(Clone, Debug)]
pub struct RandomPolicy {
    rng: ChaCha8Rng,
}

impl RandomPolicy {
    pub fn seeded(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }
}

impl ChoicePolicy for RandomPolicy {
    fn host_part(&mut self, _graph: &PartiteGraph, eligible: &[PartId]) -> PartId {
        *eligible.choose(&mut self.rng).expect("eligible set is nonempty")
    }

    fn excluded_part(&mut self, _graph: &PartiteGraph, candidates: &[PartId]) -> PartId {
        *candidates.choose(&mut self.rng).expect("candidate set is nonempty")
    }

    fn order_candidates(&mut self, _graph: &PartiteGraph, candidates: &mut [VertexId]) {
        candidates.shuffle(&mut self.rng);
    }
}

/// A policy answer that the construction cannot accept.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BuildError {
    /// The chosen host part was not among the eligible parts.
    IneligibleHost { step: u64, chosen: PartId },
    /// The chosen excluded part was not among the valid candidates.
    InvalidExcludedPart { step: u64, chosen: PartId },
    /// A middle-case step found no part with `ell+1` vertices to exclude.
    /// The size census rules this out, but it is validated rather than
    /// assumed.
    MissingOversizedPart { step: u64 },
    /// The policy's reordering was not a permutation of the candidate set.
    CorruptedOrdering { step: u64 },
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::IneligibleHost { step, chosen } => {
                write!(f, "step {step}: policy chose ineligible host part {chosen}")
            }
            BuildError::InvalidExcludedPart { step, chosen } => {
                write!(f, "step {step}: policy chose invalid excluded part {chosen}")
            }
            BuildError::MissingOversizedPart { step } => {
                write!(f, "step {step}: no oversized part available to exclude")
            }
            BuildError::CorruptedOrdering { step } => {
                write!(f, "step {step}: policy did not permute the candidate set")
            }
        }
    }
}

impl std::error::Error for BuildError {}

/// Record of one growth step.
#[derive(Clone, Copy, Debug)]
pub struct GrowthStep {
    /// Id of the vertex this step added.
    pub vertex: VertexId,
    /// Decomposition of the vertex count before the step.
    pub case: GrowthCase,
    /// Size of the candidate neighbour set `V`.
    pub candidate_count: u64,
    /// Edges actually created (all of `V` for `M`/`Mq`, every `q`-th for `T`).
    pub edges_added: u64,
}

/// Incremental growth engine. Starts at the one-vertex seed (one occupied
/// part, `parts − 1` empty ones) and adds one vertex per [`step`] call, so a
/// whole family prefix can be scanned in one pass.
///
/// [`step`]: GraphBuilder::step
pub struct GraphBuilder {
    family: Family,
    q: u64,
    graph: PartiteGraph,
}

impl GraphBuilder {
    pub fn new(family: Family, parts: u64, q: u64) -> Self {
        assert!(parts >= 1 && q >= 1, "parts and q must be positive");
        let mut graph = PartiteGraph::new(parts as usize);
        graph.add_vertex(PartId(0));
        Self { family, q, graph }
    }

    pub fn graph(&self) -> &PartiteGraph {
        &self.graph
    }

    pub fn into_graph(self) -> PartiteGraph {
        self.graph
    }

    fn parts_with_size(&self, size: usize) -> Vec<PartId> {
        self.graph
            .parts()
            .filter(|(_, members)| members.len() == size)
            .map(|(id, _)| id)
            .collect()
    }

    /// Adds one vertex according to the family's growth rule.
    pub fn step(&mut self, policy: &mut dyn ChoicePolicy) -> Result<GrowthStep, BuildError> {
        let count = self.graph.vertex_count();
        let parts = self.graph.part_count() as u64;
        let case = self.family.growth_case(count, parts, self.q);

        let eligible = match case.tag {
            CaseTag::Full => (0..parts as usize).map(PartId).collect::<Vec<_>>(),
            CaseTag::Middle | CaseTag::Low => self.parts_with_size(case.ell as usize),
        };
        debug_assert!(!eligible.is_empty(), "size census violated");
        let host = policy.host_part(&self.graph, &eligible);
        if !eligible.contains(&host) {
            return Err(BuildError::IneligibleHost { step: count, chosen: host });
        }

        let excluded = match case.tag {
            CaseTag::Full => {
                let candidates: Vec<PartId> =
                    (0..parts as usize).map(PartId).filter(|&id| id != host).collect();
                if candidates.is_empty() {
                    // Single-part graph: there is no part to skip and the
                    // family keeps zero edges, so the newcomer sees nothing.
                    None
                } else {
                    let chosen = policy.excluded_part(&self.graph, &candidates);
                    if !candidates.contains(&chosen) {
                        return Err(BuildError::InvalidExcludedPart { step: count, chosen });
                    }
                    Some(chosen)
                }
            }
            CaseTag::Middle => {
                // Pre-insertion census: the k parts of size ell+1. The host
                // has ell vertices, so it is never among them.
                let candidates = self.parts_with_size(case.ell as usize + 1);
                if candidates.is_empty() {
                    return Err(BuildError::MissingOversizedPart { step: count });
                }
                let chosen = policy.excluded_part(&self.graph, &candidates);
                if !candidates.contains(&chosen) {
                    return Err(BuildError::InvalidExcludedPart { step: count, chosen });
                }
                Some(chosen)
            }
            CaseTag::Low => None,
        };

        let vertex = self.graph.add_vertex(host);
        let mut candidates: Vec<VertexId> = match (case.tag, excluded) {
            // Everything outside the host part; the newcomer sits in the
            // host, so it is filtered out with the rest.
            (CaseTag::Low, _) => self
                .graph
                .vertices()
                .filter(|&v| self.graph.part_of(v) != host)
                .collect(),
            // Own part plus every other part except the excluded one, i.e.
            // everything outside the excluded part (minus the newcomer).
            (_, Some(skip)) => self
                .graph
                .vertices()
                .filter(|&v| v != vertex && self.graph.part_of(v) != skip)
                .collect(),
            (_, None) => Vec::new(),
        };
        let candidate_count = candidates.len() as u64;

        let neighbours: Vec<VertexId> = match self.family {
            Family::M | Family::Mq => candidates,
            Family::T => {
                let issued = candidates.clone();
                policy.order_candidates(&self.graph, &mut candidates);
                let mut sorted = candidates.clone();
                sorted.sort_unstable();
                if sorted != issued {
                    return Err(BuildError::CorruptedOrdering { step: count });
                }
                // Cyclic numbering 1..q along the chosen order; positions
                // 0, q, 2q, .. carry number 1 and receive the edges.
                candidates.into_iter().step_by(self.q as usize).collect()
            }
        };
        let edges_added = neighbours.len() as u64;
        for u in neighbours {
            self.graph.add_edge(vertex, u);
        }

        Ok(GrowthStep { vertex, case, candidate_count, edges_added })
    }

    /// Grows until the graph has `vertex_count` vertices, returning the step
    /// records. Does nothing if the graph is already that large.
    pub fn grow_to(
        &mut self,
        vertex_count: u64,
        policy: &mut dyn ChoicePolicy,
    ) -> Result<Vec<GrowthStep>, BuildError> {
        let mut steps = Vec::new();
        while self.graph.vertex_count() < vertex_count {
            steps.push(self.step(policy)?);
        }
        Ok(steps)
    }
}

/// The `n`-vertex member of the two-case family on `p` parts.
pub fn build_m(n: u64, p: u64, policy: &mut dyn ChoicePolicy) -> Result<PartiteGraph, BuildError> {
    assert!(n >= 1, "n must be positive");
    let mut builder = GraphBuilder::new(Family::M, p, 1);
    builder.grow_to(n, policy)?;
    Ok(builder.into_graph())
}

/// The `n`-vertex member of the three-case family on `p` parts with gap `q`.
pub fn build_mq(
    n: u64,
    p: u64,
    q: u64,
    policy: &mut dyn ChoicePolicy,
) -> Result<PartiteGraph, BuildError> {
    assert!(n >= 1, "n must be positive");
    let mut builder = GraphBuilder::new(Family::Mq, p, q);
    builder.grow_to(n, policy)?;
    Ok(builder.into_graph())
}

/// The `n`-vertex member of the thinned family on `p` parts with gap `q`.
pub fn build_t(
    n: u64,
    p: u64,
    q: u64,
    policy: &mut dyn ChoicePolicy,
) -> Result<PartiteGraph, BuildError> {
    Ok(build_t_traced(n, p, q, policy)?.0)
}

/// As [`build_t`], also returning the per-step records.
pub fn build_t_traced(
    n: u64,
    p: u64,
    q: u64,
    policy: &mut dyn ChoicePolicy,
) -> Result<(PartiteGraph, Vec<GrowthStep>), BuildError> {
    assert!(n >= 1, "n must be positive");
    let mut builder = GraphBuilder::new(Family::T, p, q);
    let steps = builder.grow_to(n, policy)?;
    Ok((builder.into_graph(), steps))
}

/// Edge count of the balanced complete `p`-partite graph on `n` vertices:
/// with `n = pℓ + k`, `0 ≤ k < p`, this is `(n² − k(ℓ+1)² − (p−k)ℓ²) / 2`.
///
/// Independent of the recursive constructions; serves as their oracle.
pub fn turan_edge_count(n: u64, p: u64) -> u64 {
    assert!(p >= 1, "p must be positive");
    let (ell, k) = quot_rem(n, p, Remainder::ZeroBased);
    let n2 = (n as u128) * (n as u128);
    let oversized = (k as u128) * ((ell + 1) as u128) * ((ell + 1) as u128);
    let rest = ((p - k) as u128) * (ell as u128) * (ell as u128);
    u64::try_from((n2 - oversized - rest) / 2).expect("edge count exceeds u64")
}

/// Edge increment of the thinned family on `pq+1` parts: the number of edges
/// the step from the `(n+1)`-vertex member to the `(n+2)`-vertex member adds.
///
/// Writes `n = (pq+1)ℓ + k` with `0 ≤ k ≤ pq` and applies the three-case
/// split: `⌊(n−ℓ−1)/q⌋ + 1` when `k = pq` or `(p−1)q < k < pq`, else
/// `⌊(n−ℓ)/q⌋ + 1`.
pub fn growth_delta(n: u64, p: u64, q: u64) -> u64 {
    assert!(n >= 1 && p >= 1 && q >= 1, "parameters must be positive");
    let modulus = p.checked_mul(q).and_then(|pq| pq.checked_add(1)).expect("overflow computing pq + 1");
    let (ell, k) = quot_rem(n, modulus, Remainder::ZeroBased);
    if k == p * q {
        (n - ell - 1) / q + 1
    } else if k > (p - 1) * q {
        (n - ell - 1) / q + 1
    } else {
        (n - ell) / q + 1
    }
}
