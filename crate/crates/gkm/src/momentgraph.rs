//! Moment graphs: directed graphs whose edges carry nonzero degree-one
//! forms, with optional vertex positions and an optional generic direction
//! vector used for orientation and ordering.
//!
//! Edges are stored south to north. Validation is reported check by check
//! rather than failing on the first problem; the Palais-Smale condition
//! (down-degrees strictly increase along edges) is advisory and lives in
//! its own routine.

use crate::polyring::{LinearForm, Rational};
use num::Zero;
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};
use std::fmt;

/// Errors from graph construction and reorientation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("malformed graph: {0}")]
    Malformed(String),
    #[error("orientation is cyclic")]
    CyclicOrientation,
    #[error("vertex '{0}' has no position")]
    MissingPosition(String),
    #[error("direction vector is not generic: edge {south} -> {north} pairs to zero")]
    NotGeneric { south: String, north: String },
    #[error("invalid builtin parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown builtin '{0}'")]
    UnknownBuiltin(String),
}

/// A named vertex, optionally placed in `Q^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Vertex {
    pub name: String,
    pub position: Option<Vec<Rational>>,
}

impl Vertex {
    pub fn new(name: impl Into<String>) -> Self {
        Vertex { name: name.into(), position: None }
    }

    pub fn at(name: impl Into<String>, position: Vec<Rational>) -> Self {
        Vertex { name: name.into(), position: Some(position) }
    }
}

/// A directed edge from `south` to `north` (vertex indices) carrying a
/// direction form.
#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub south: usize,
    pub north: usize,
    pub direction: LinearForm,
}

/// Status of a single validation check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "PASS"),
            CheckStatus::Fail => write!(f, "FAIL"),
            CheckStatus::Skipped => write!(f, "SKIPPED"),
        }
    }
}

/// One validation check with its findings.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    pub failures: Vec<String>,
}

/// Outcome of [`MomentGraph::validate`], one entry per check.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    /// Human-readable summary of the failed checks.
    pub fn failure_summary(&self) -> String {
        let mut parts = Vec::new();
        for c in &self.checks {
            if c.status == CheckStatus::Fail {
                parts.push(format!("{}: {}", c.name, c.failures.join("; ")));
            }
        }
        parts.join("; ")
    }
}

/// Advisory report for the Palais-Smale condition.
#[derive(Debug, Clone)]
pub struct PalaisSmaleReport {
    pub ok: bool,
    /// Edges along which the down-degree fails to strictly increase.
    pub violations: Vec<String>,
}

/// A moment graph over `Q[t1..tk]`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentGraph {
    rank: usize,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    xi: Option<Vec<Rational>>,
}

impl MomentGraph {
    /// Assemble a graph, checking only structural well-formedness (index
    /// bounds and dimension agreement). Semantic problems such as duplicate
    /// names, cycles or non-generic `xi` are left for [`Self::validate`].
    pub fn new(
        rank: usize,
        vertices: Vec<Vertex>,
        edges: Vec<Edge>,
        xi: Option<Vec<Rational>>,
    ) -> Result<Self, GraphError> {
        if rank == 0 {
            return Err(GraphError::Malformed("rank must be at least 1".into()));
        }
        for v in &vertices {
            if let Some(pos) = &v.position {
                if pos.len() != rank {
                    return Err(GraphError::Malformed(format!(
                        "vertex '{}' position has {} coordinates, expected {}",
                        v.name,
                        pos.len(),
                        rank
                    )));
                }
            }
        }
        for e in &edges {
            if e.south >= vertices.len() || e.north >= vertices.len() {
                return Err(GraphError::Malformed("edge endpoint out of range".into()));
            }
            if e.direction.vars() != rank {
                return Err(GraphError::Malformed(format!(
                    "edge direction has {} coefficients, expected {}",
                    e.direction.vars(),
                    rank
                )));
            }
        }
        if let Some(x) = &xi {
            if x.len() != rank {
                return Err(GraphError::Malformed(format!(
                    "xi has {} coordinates, expected {}",
                    x.len(),
                    rank
                )));
            }
        }
        Ok(MomentGraph { rank, vertices, edges, xi })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn xi(&self) -> Option<&[Rational]> {
        self.xi.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v].name
    }

    /// Index of the vertex with the given name (first match).
    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name == name)
    }

    /// Edges leaving `v`, as (edge index, edge).
    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = (usize, &Edge)> {
        self.edges.iter().enumerate().filter(move |(_, e)| e.south == v)
    }

    /// Edges entering `v`, as (edge index, edge).
    pub fn in_edges(&self, v: usize) -> impl Iterator<Item = (usize, &Edge)> {
        self.edges.iter().enumerate().filter(move |(_, e)| e.north == v)
    }

    /// Number of edges entering `v`.
    pub fn down_degree(&self, v: usize) -> usize {
        self.in_edges(v).count()
    }

    pub fn down_degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.vertices.len()];
        for e in &self.edges {
            d[e.north] += 1;
        }
        d
    }

    pub fn max_down_degree(&self) -> usize {
        self.down_degrees().into_iter().max().unwrap_or(0)
    }

    /// Label of an edge for messages, `south -> north`.
    pub fn edge_label(&self, e: usize) -> String {
        format!(
            "{} -> {}",
            self.vertices[self.edges[e].south].name,
            self.vertices[self.edges[e].north].name
        )
    }

    /// Run every validation check and report each outcome.
    ///
    /// Checks, in order: `unique-names`, `endpoints-exist`,
    /// `acyclic-orientation` (self-loops are length-one cycles),
    /// `distinct-directions-at-vertex`, `xi-generic` (skipped without `xi`),
    /// and `positions-parallel-to-directions` (each edge whose endpoints
    /// both carry positions must satisfy `north - south = c * direction`
    /// with `c > 0`; skipped when no edge has positions on both ends).
    pub fn validate(&self) -> ValidationReport {
        let mut checks = Vec::new();

        // unique-names
        let mut seen: HashMap<&str, usize> = HashMap::new();
        let mut dups = Vec::new();
        for v in &self.vertices {
            *seen.entry(v.name.as_str()).or_insert(0) += 1;
        }
        for v in &self.vertices {
            if seen.get(v.name.as_str()) == Some(&0) {
                continue;
            }
            if seen[v.name.as_str()] > 1 {
                dups.push(format!("duplicate vertex name '{}'", v.name));
                seen.insert(v.name.as_str(), 0);
            }
        }
        checks.push(check("unique-names", dups));

        // endpoints-exist (constructor guarantees this for in-memory graphs)
        let mut bad_endpoints = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.south >= self.vertices.len() || e.north >= self.vertices.len() {
                bad_endpoints.push(format!("edge {} references a missing vertex", i));
            }
        }
        checks.push(check("endpoints-exist", bad_endpoints));

        // acyclic-orientation
        let mut acyclic_failures = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.south == e.north {
                acyclic_failures.push(format!("self-loop {}", self.edge_label(i)));
            }
        }
        if acyclic_failures.is_empty() {
            if let Some(stuck) = self.find_cycle_vertices() {
                let names: Vec<&str> =
                    stuck.iter().map(|&v| self.vertices[v].name.as_str()).collect();
                acyclic_failures.push(format!("cycle through {}", names.join(", ")));
            }
        }
        checks.push(check("acyclic-orientation", acyclic_failures));

        // distinct-directions-at-vertex
        let mut prop_failures = Vec::new();
        for v in 0..self.vertices.len() {
            let incident: Vec<usize> = self
                .edges
                .iter()
                .enumerate()
                .filter(|(_, e)| e.south == v || e.north == v)
                .map(|(i, _)| i)
                .collect();
            for a in 0..incident.len() {
                for b in (a + 1)..incident.len() {
                    let (ea, eb) = (incident[a], incident[b]);
                    if self.edges[ea]
                        .direction
                        .is_proportional(&self.edges[eb].direction)
                    {
                        prop_failures.push(format!(
                            "vertex '{}': edges {} and {} have proportional directions",
                            self.vertices[v].name,
                            self.edge_label(ea),
                            self.edge_label(eb)
                        ));
                    }
                }
            }
        }
        checks.push(check("distinct-directions-at-vertex", prop_failures));

        // xi-generic
        if let Some(xi) = &self.xi {
            let mut failures = Vec::new();
            for (i, e) in self.edges.iter().enumerate() {
                if e.direction.pairing(xi).is_zero() {
                    failures.push(format!(
                        "edge {} has direction orthogonal to xi",
                        self.edge_label(i)
                    ));
                }
            }
            checks.push(check("xi-generic", failures));
        } else {
            checks.push(CheckResult {
                name: "xi-generic",
                status: CheckStatus::Skipped,
                failures: Vec::new(),
            });
        }

        // positions-parallel-to-directions
        let mut pos_failures = Vec::new();
        let mut pos_checked = 0usize;
        for (i, e) in self.edges.iter().enumerate() {
            let (Some(ps), Some(pn)) = (
                &self.vertices[e.south].position,
                &self.vertices[e.north].position,
            ) else {
                continue;
            };
            pos_checked += 1;
            let delta: Vec<Rational> = pn.iter().zip(ps).map(|(a, b)| a - b).collect();
            match positive_multiple(&delta, e.direction.coeffs()) {
                Some(true) => {}
                Some(false) => pos_failures.push(format!(
                    "edge {}: displacement is a negative multiple of the direction",
                    self.edge_label(i)
                )),
                None => pos_failures.push(format!(
                    "edge {}: displacement is not parallel to the direction",
                    self.edge_label(i)
                )),
            }
        }
        if pos_checked == 0 {
            checks.push(CheckResult {
                name: "positions-parallel-to-directions",
                status: CheckStatus::Skipped,
                failures: Vec::new(),
            });
        } else {
            checks.push(check("positions-parallel-to-directions", pos_failures));
        }

        ValidationReport { checks }
    }

    /// Vertices left with positive in-degree after peeling sources, i.e. a
    /// witness that the orientation has a cycle. Self-loops count.
    fn find_cycle_vertices(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for e in &self.edges {
            indeg[e.north] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = queue.pop() {
            removed += 1;
            for (_, e) in self.out_edges(v) {
                indeg[e.north] -= 1;
                if indeg[e.north] == 0 {
                    queue.push(e.north);
                }
            }
        }
        if removed == n {
            None
        } else {
            Some((0..n).filter(|&v| indeg[v] > 0).collect())
        }
    }

    /// Advisory check: the down-degree must strictly increase along every
    /// edge. Graphs failing this still support every computation, but
    /// flow-up classes need not be unique in their degree.
    pub fn palais_smale(&self) -> PalaisSmaleReport {
        let dd = self.down_degrees();
        let mut violations = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if dd[e.north] <= dd[e.south] {
                violations.push(format!(
                    "edge {}: down-degree {} -> {}",
                    self.edge_label(i),
                    dd[e.south],
                    dd[e.north]
                ));
            }
        }
        PalaisSmaleReport { ok: violations.is_empty(), violations }
    }

    /// Vertices reachable from `v` along directed edges, including `v`.
    pub fn up_set(&self, v: usize) -> HashSet<usize> {
        let mut seen = HashSet::new();
        let mut stack = vec![v];
        while let Some(w) = stack.pop() {
            if seen.insert(w) {
                for (_, e) in self.out_edges(w) {
                    stack.push(e.north);
                }
            }
        }
        seen
    }

    /// True when `a <= b` in the reachability order.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up_set(a).contains(&b)
    }

    /// A deterministic linear extension of the reachability order: Kahn's
    /// algorithm, releasing ready vertices by ascending (down-degree,
    /// pairing of position with `xi` when both exist, name, index).
    pub fn linear_extension(&self) -> Result<Vec<usize>, GraphError> {
        let n = self.vertices.len();
        let dd = self.down_degrees();
        let key = |v: usize| {
            let pairing = match (&self.xi, &self.vertices[v].position) {
                (Some(xi), Some(pos)) => Some(
                    xi.iter()
                        .zip(pos)
                        .fold(Rational::zero(), |acc, (a, b)| acc + a * b),
                ),
                _ => None,
            };
            (dd[v], pairing, self.vertices[v].name.clone(), v)
        };
        let mut indeg = vec![0usize; n];
        for e in &self.edges {
            indeg[e.north] += 1;
        }
        let mut heap = BinaryHeap::new();
        for v in 0..n {
            if indeg[v] == 0 {
                heap.push(Reverse(key(v)));
            }
        }
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse((_, _, _, v))) = heap.pop() {
            order.push(v);
            for (_, e) in self.out_edges(v) {
                indeg[e.north] -= 1;
                if indeg[e.north] == 0 {
                    heap.push(Reverse(key(e.north)));
                }
            }
        }
        if order.len() != n {
            return Err(GraphError::CyclicOrientation);
        }
        Ok(order)
    }

    /// Reorient every edge to point up along `xi`: an edge keeps its ends
    /// ordered so that the displacement of positions pairs positively with
    /// `xi`. Flipped edges get negated directions, so directions are
    /// unchanged as lines and the positive-multiple position invariant is
    /// preserved. Requires positions on all vertices and a `xi` that pairs
    /// nonzero with every edge displacement. The result stores `xi`.
    pub fn orient_from_xi(&self, xi: &[Rational]) -> Result<MomentGraph, GraphError> {
        if xi.len() != self.rank {
            return Err(GraphError::Malformed(format!(
                "xi has {} coordinates, expected {}",
                xi.len(),
                self.rank
            )));
        }
        for v in &self.vertices {
            if v.position.is_none() {
                return Err(GraphError::MissingPosition(v.name.clone()));
            }
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let ps = self.vertices[e.south].position.as_ref().unwrap();
            let pn = self.vertices[e.north].position.as_ref().unwrap();
            let pairing = xi
                .iter()
                .zip(pn.iter().zip(ps))
                .fold(Rational::zero(), |acc, (x, (a, b))| acc + x * &(a - b));
            if pairing.is_zero() {
                return Err(GraphError::NotGeneric {
                    south: self.vertices[e.south].name.clone(),
                    north: self.vertices[e.north].name.clone(),
                });
            }
            if pairing.is_positive() {
                edges.push(e.clone());
            } else {
                edges.push(Edge {
                    south: e.north,
                    north: e.south,
                    direction: e.direction.negated(),
                });
            }
        }
        Ok(MomentGraph {
            rank: self.rank,
            vertices: self.vertices.clone(),
            edges,
            xi: Some(xi.to_vec()),
        })
    }
}

use num::Signed;

fn check(name: &'static str, failures: Vec<String>) -> CheckResult {
    CheckResult {
        name,
        status: if failures.is_empty() { CheckStatus::Pass } else { CheckStatus::Fail },
        failures,
    }
}

/// Is `delta == c * dir` for some rational `c`? Returns `Some(c > 0)` when
/// parallel, `None` otherwise. A zero `delta` is not a positive multiple.
fn positive_multiple(delta: &[Rational], dir: &[Rational]) -> Option<bool> {
    let i = dir.iter().position(|c| !c.is_zero())?;
    let c = &delta[i] / &dir[i];
    if c.is_zero() {
        return None;
    }
    for (d, e) in delta.iter().zip(dir) {
        if *d != e * &c {
            return None;
        }
    }
    Some(c.is_positive())
}
