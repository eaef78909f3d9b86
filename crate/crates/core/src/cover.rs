//! Even covers and the splice calculus used to assemble them.
//!
//! An even cover is a spanning subgraph in which every vertex has degree 0
//! or 2: a disjoint union of cycles plus isolated vertices. Its excess is
//! twice the cycle count plus the isolated count. Covers are built by
//! opening a cycle at an edge, threading the resulting paths together with
//! link edges into a new cycle, and taking disjoint unions.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::multigraph::{EdgeId, Multigraph, Vertex};

/// Errors from cover construction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverError {
    /// A vertex has cover-degree 1 or at least 3.
    #[error("vertex {0} has cover degree 1 or more than 2")]
    DegreeViolation(Vertex),
    /// The edge does not lie on a cycle of the cover.
    #[error("edge does not lie on a cycle of the cover")]
    EdgeNotInCycle,
    /// The spliced union is not a single cycle.
    #[error("spliced edges do not form a single cycle")]
    NotACycle,
    /// Parts of a union overlap.
    #[error("cover parts overlap")]
    Overlap,
}

/// A valid even cover: an edge set partitioned into cycles, plus the host
/// vertices left isolated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenCover {
    edges: BTreeSet<EdgeId>,
    cycles: Vec<Vec<EdgeId>>,
    isolated: Vec<Vertex>,
}

/// A path fragment produced by opening a cycle at an edge. The empty path
/// (from opening a loop) has equal ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenPath {
    /// Path edges.
    pub edges: BTreeSet<EdgeId>,
    /// The two path ends.
    pub ends: (Vertex, Vertex),
}

impl EvenCover {
    /// All cover edges, ascending.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().copied()
    }

    /// The cycles, each an edge list in traversal order.
    pub fn cycles(&self) -> &[Vec<EdgeId>] {
        &self.cycles
    }

    /// Isolated host vertices, ascending.
    pub fn isolated(&self) -> &[Vertex] {
        &self.isolated
    }

    /// Whether the cover uses the edge.
    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    /// exc = 2 * cycles + isolated vertices.
    pub fn exc(&self) -> i64 {
        2 * self.cycles.len() as i64 + self.isolated.len() as i64
    }

    /// Serializes per the cover text format: one "cycle: v1 v2 ..." line per
    /// cycle ordered by smallest vertex (starting there, heading toward its
    /// smaller neighbor), then "isolated: v ..." unless empty.
    pub fn render(&self, g: &Multigraph) -> String {
        let mut cycle_lines: Vec<(Vertex, String)> = self
            .cycles
            .iter()
            .map(|cycle| {
                let seq = cycle_vertex_order(g, cycle);
                let line = format!(
                    "cycle: {}",
                    seq.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                );
                (seq[0], line)
            })
            .collect();
        cycle_lines.sort();
        let mut out: Vec<String> = cycle_lines.into_iter().map(|(_, line)| line).collect();
        if !self.isolated.is_empty() {
            out.push(format!(
                "isolated: {}",
                self.isolated.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
            ));
        }
        out.join("\n")
    }
}

/// Vertices of a cycle in traversal order, starting at the smallest vertex
/// and moving toward its smaller neighbor (smaller edge id on ties).
fn cycle_vertex_order(g: &Multigraph, cycle: &[EdgeId]) -> Vec<Vertex> {
    let mut adj: BTreeMap<Vertex, Vec<(EdgeId, Vertex)>> = BTreeMap::new();
    for &e in cycle {
        let (a, b) = g.endpoints(e);
        if a == b {
            return vec![a];
        }
        adj.entry(a).or_default().push((e, b));
        adj.entry(b).or_default().push((e, a));
    }
    let start = *adj.keys().next().expect("cycles are nonempty");
    let mut order = vec![start];
    // Pick the first step: smaller neighbor, then smaller edge id.
    let mut options = adj[&start].clone();
    options.sort_by_key(|&(e, w)| (w, e));
    let (mut via, mut at) = options[0];
    while at != start {
        order.push(at);
        let &(e, w) = adj[&at]
            .iter()
            .find(|&&(e, _)| e != via)
            .expect("cycle vertices have two distinct incident cycle edges");
        via = e;
        at = w;
    }
    order
}

/// Checks an edge set against the host and structures it as an even cover.
pub fn validate(
    g: &Multigraph,
    edges: impl IntoIterator<Item = EdgeId>,
) -> Result<EvenCover, CoverError> {
    let edges: BTreeSet<EdgeId> = edges.into_iter().collect();
    let mut degree: BTreeMap<Vertex, u32> = g.vertices().map(|v| (v, 0)).collect();
    for &e in &edges {
        assert!(g.has_edge(e), "cover edges must belong to the host");
        let (a, b) = g.endpoints(e);
        // A loop contributes 2 to its vertex because a == b here.
        *degree.get_mut(&a).unwrap() += 1;
        *degree.get_mut(&b).unwrap() += 1;
    }
    if let Some((&v, _)) = degree.iter().find(|&(_, &d)| d != 0 && d != 2) {
        return Err(CoverError::DegreeViolation(v));
    }
    let isolated: Vec<Vertex> =
        degree.iter().filter(|&(_, &d)| d == 0).map(|(&v, _)| v).collect();

    // Recover cycles by walking degree-2 adjacency from the smallest
    // unvisited edge.
    let mut cycles = Vec::new();
    let mut used: BTreeSet<EdgeId> = BTreeSet::new();
    for &e in &edges {
        if used.contains(&e) {
            continue;
        }
        let mut cycle = vec![e];
        used.insert(e);
        if !g.is_loop(e) {
            let (start, mut at) = g.endpoints(e);
            let mut via = e;
            while at != start {
                let &(next, w) = g
                    .incident(at)
                    .iter()
                    .find(|&&(id, _)| id != via && edges.contains(&id) && !used.contains(&id))
                    .expect("degree-2 walk continues until closed");
                used.insert(next);
                cycle.push(next);
                via = next;
                at = w;
            }
        }
        cycles.push(cycle);
    }
    Ok(EvenCover { edges, cycles, isolated })
}

/// Opens the cover's cycle through `e`: that cycle minus `e` becomes a path
/// with ends at `e`'s endpoints; everything else is the remainder.
pub fn open_at(
    g: &Multigraph,
    cover: &EvenCover,
    e: EdgeId,
) -> Result<(OpenPath, EvenCover), CoverError> {
    let pos = cover
        .cycles
        .iter()
        .position(|c| c.contains(&e))
        .ok_or(CoverError::EdgeNotInCycle)?;
    let path_edges: BTreeSet<EdgeId> =
        cover.cycles[pos].iter().copied().filter(|&x| x != e).collect();
    let path = OpenPath { edges: path_edges, ends: g.endpoints(e) };
    let mut cycles = cover.cycles.clone();
    cycles.remove(pos);
    let edges: BTreeSet<EdgeId> = cycles.iter().flatten().copied().collect();
    let remainder = EvenCover { edges, cycles, isolated: cover.isolated.clone() };
    Ok((path, remainder))
}

/// Threads path segments and link edges into one cycle; `extra_vertices`
/// are way-points that must appear on the cycle via links alone. Returns
/// the cycle's edges.
pub fn splice_cycle(
    g: &Multigraph,
    segments: &[OpenPath],
    links: &[EdgeId],
    extra_vertices: &BTreeSet<Vertex>,
) -> Result<Vec<EdgeId>, CoverError> {
    let mut edges: BTreeSet<EdgeId> = BTreeSet::new();
    for e in segments
        .iter()
        .flat_map(|s| s.edges.iter().copied())
        .chain(links.iter().copied())
    {
        if !edges.insert(e) {
            return Err(CoverError::NotACycle);
        }
    }
    if edges.is_empty() {
        return Err(CoverError::NotACycle);
    }

    // One closed degree-2 component covering all segment ends and extras.
    let mut degree: BTreeMap<Vertex, u32> = BTreeMap::new();
    for &e in &edges {
        let (a, b) = g.endpoints(e);
        // A loop contributes 2 to its vertex because a == b here.
        *degree.entry(a).or_insert(0) += 1;
        *degree.entry(b).or_insert(0) += 1;
    }
    if degree.values().any(|&d| d != 2) {
        return Err(CoverError::NotACycle);
    }
    for s in segments {
        if !degree.contains_key(&s.ends.0) || !degree.contains_key(&s.ends.1) {
            return Err(CoverError::NotACycle);
        }
    }
    if extra_vertices.iter().any(|v| !degree.contains_key(v)) {
        return Err(CoverError::NotACycle);
    }
    // Connectivity of the edge set.
    let mut seen: BTreeSet<Vertex> = BTreeSet::new();
    let mut stack = vec![*degree.keys().next().expect("nonempty")];
    seen.insert(stack[0]);
    while let Some(v) = stack.pop() {
        for &(id, w) in g.incident(v) {
            if edges.contains(&id) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    if seen.len() != degree.len() {
        return Err(CoverError::NotACycle);
    }
    Ok(edges.into_iter().collect())
}

/// Unions covers of disjoint parts of a host, adding extra isolated
/// vertices.
pub fn disjoint_union(
    parts: &[EvenCover],
    isolated_extra: impl IntoIterator<Item = Vertex>,
) -> Result<EvenCover, CoverError> {
    let mut edges = BTreeSet::new();
    let mut cycles = Vec::new();
    let mut isolated: Vec<Vertex> = Vec::new();
    for part in parts {
        for &e in &part.edges {
            if !edges.insert(e) {
                return Err(CoverError::Overlap);
            }
        }
        cycles.extend(part.cycles.iter().cloned());
        isolated.extend(part.isolated.iter().copied());
    }
    isolated.extend(isolated_extra);
    isolated.sort();
    if isolated.windows(2).any(|w| w[0] == w[1]) {
        return Err(CoverError::Overlap);
    }
    Ok(EvenCover { edges, cycles, isolated })
}
