//! Conversion of even covers into closed spanning walks.
//!
//! A cover with excess exc yields a TSP walk of length n + exc - 2: contract
//! each cover component, connect the contraction by a doubled spanning tree,
//! and walk the resulting Eulerian multigraph.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::cover::EvenCover;
use crate::multigraph::{EdgeId, Multigraph, Vertex};

/// Errors from walk construction and validation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum WalkError {
    /// The cover does not span the host.
    #[error("cover does not match the host graph")]
    InvalidCover,
    /// The host graph is not connected.
    #[error("host graph is disconnected")]
    Disconnected,
    /// The walk does not end where it starts.
    #[error("walk is not closed")]
    NotClosed,
    /// The walk misses a host vertex.
    #[error("walk does not visit every vertex")]
    NotSpanning,
    /// Consecutive walk vertices are not joined by the listed edge.
    #[error("walk step {0} does not follow an edge")]
    MissingEdge(usize),
}

/// A closed spanning walk certified by its edge traversals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TspWalk {
    /// Visited vertices; first equals last.
    pub vertices: Vec<Vertex>,
    /// Edge of each step; `edges[i]` joins `vertices[i]` and `vertices[i+1]`.
    pub edges: Vec<EdgeId>,
}

impl TspWalk {
    /// Number of edge traversals.
    pub fn length(&self) -> usize {
        self.edges.len()
    }

    /// Serializes as one line of space-separated vertex ids.
    pub fn render(&self) -> String {
        self.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
    }
}

/// Turns an even cover into a closed spanning walk of length n + exc - 2.
pub fn cover_to_walk(g: &Multigraph, f: &EvenCover) -> Result<TspWalk, WalkError> {
    if !g.connected() {
        return Err(WalkError::Disconnected);
    }
    // Component id per vertex: one per cycle, one per isolated vertex.
    let mut comp_of: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut comp_count = 0;
    for cycle in f.cycles() {
        for &e in cycle {
            let (a, b) = g.endpoints(e);
            comp_of.insert(a, comp_count);
            comp_of.insert(b, comp_count);
        }
        comp_count += 1;
    }
    for &v in f.isolated() {
        comp_of.insert(v, comp_count);
        comp_count += 1;
    }
    if comp_of.len() != g.n() || g.vertices().any(|v| !comp_of.contains_key(&v)) {
        return Err(WalkError::InvalidCover);
    }

    // Spanning tree of the contraction: breadth-first from the component of
    // the smallest vertex; tree edges are the smallest connecting edge ids.
    let mut arcs: Vec<Vec<(EdgeId, usize)>> = vec![Vec::new(); comp_count];
    for (id, (a, b)) in g.edges() {
        let (ca, cb) = (comp_of[&a], comp_of[&b]);
        if ca != cb {
            arcs[ca].push((id, cb));
            arcs[cb].push((id, ca));
        }
    }
    for list in &mut arcs {
        list.sort();
    }
    let start_vertex = g.vertices().next().expect("connected hosts are nonempty");
    let start_comp = comp_of[&start_vertex];
    let mut tree_edges: Vec<EdgeId> = Vec::new();
    let mut seen_comp = vec![false; comp_count];
    seen_comp[start_comp] = true;
    let mut queue = VecDeque::from([start_comp]);
    while let Some(c) = queue.pop_front() {
        for &(id, d) in &arcs[c] {
            if !seen_comp[d] {
                seen_comp[d] = true;
                tree_edges.push(id);
                queue.push_back(d);
            }
        }
    }
    assert!(
        seen_comp.iter().all(|&s| s),
        "a connected host contracts to a connected graph"
    );

    // Eulerian multigraph: cover edges once, tree edges twice.
    let mut copies: Vec<(EdgeId, Vertex, Vertex)> = Vec::new();
    for e in f.edges() {
        let (a, b) = g.endpoints(e);
        copies.push((e, a, b));
    }
    for &e in &tree_edges {
        let (a, b) = g.endpoints(e);
        copies.push((e, a, b));
        copies.push((e, a, b));
    }
    let mut incidence: BTreeMap<Vertex, Vec<usize>> = g.vertices().map(|v| (v, vec![])).collect();
    for (i, &(_, a, b)) in copies.iter().enumerate() {
        incidence.get_mut(&a).unwrap().push(i);
        if a != b {
            incidence.get_mut(&b).unwrap().push(i);
        }
    }
    for list in incidence.values_mut() {
        list.sort_by_key(|&i| copies[i].0);
    }

    // Hierholzer with smallest-edge-first branching.
    let mut used = vec![false; copies.len()];
    let mut cursor: BTreeMap<Vertex, usize> = g.vertices().map(|v| (v, 0)).collect();
    let mut stack: Vec<(Vertex, Option<EdgeId>)> = vec![(start_vertex, None)];
    let mut out_vertices = Vec::new();
    let mut out_edges = Vec::new();
    while let Some(&(v, via)) = stack.last() {
        let slots = &incidence[&v];
        let pos = cursor.get_mut(&v).unwrap();
        while *pos < slots.len() && used[slots[*pos]] {
            *pos += 1;
        }
        if *pos == slots.len() {
            stack.pop();
            out_vertices.push(v);
            if let Some(e) = via {
                out_edges.push(e);
            }
        } else {
            let slot = slots[*pos];
            used[slot] = true;
            let (e, a, b) = copies[slot];
            let to = if v == a { b } else { a };
            stack.push((to, Some(e)));
        }
    }
    out_vertices.reverse();
    out_edges.reverse();

    let walk = TspWalk { vertices: out_vertices, edges: out_edges };
    assert_eq!(
        walk.length() as i64,
        g.n() as i64 + f.exc() - 2,
        "walk length must equal n + exc - 2"
    );
    debug_assert_eq!(validate_walk(g, &walk), Ok(walk.length()));
    Ok(walk)
}

/// Checks closure, spanning, and edge consistency; returns the length.
pub fn validate_walk(g: &Multigraph, w: &TspWalk) -> Result<usize, WalkError> {
    if w.vertices.is_empty() || w.vertices.len() != w.edges.len() + 1 {
        return Err(WalkError::NotClosed);
    }
    if w.vertices.first() != w.vertices.last() {
        return Err(WalkError::NotClosed);
    }
    for (i, &e) in w.edges.iter().enumerate() {
        if !g.has_edge(e) {
            return Err(WalkError::MissingEdge(i));
        }
        let (a, b) = g.endpoints(e);
        let (x, y) = (w.vertices[i], w.vertices[i + 1]);
        if (x, y) != (a, b) && (x, y) != (b, a) {
            return Err(WalkError::MissingEdge(i));
        }
    }
    let visited: BTreeSet<Vertex> = w.vertices.iter().copied().collect();
    if g.vertices().any(|v| !visited.contains(&v)) || visited.iter().any(|v| !g.has_vertex(*v)) {
        return Err(WalkError::NotSpanning);
    }
    Ok(w.length())
}
