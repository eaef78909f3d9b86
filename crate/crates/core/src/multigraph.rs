//! Identity-preserving multigraphs with loops and parallel edges.
//!
//! Vertices are `u32` ids whose natural order doubles as the global
//! tie-breaking order for every deterministic choice in the crate. Edges
//! carry stable [`EdgeId`]s so parallel copies and edges minted by
//! suppression stay distinguishable; ids are never reused within one graph
//! value. Graphs are immutable after construction: derived graphs (subgraph,
//! suppression, edge addition) are fresh values that preserve the ids of
//! surviving edges.

use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Vertex identifier; the natural `u32` order is the global tie-break order.
pub type Vertex = u32;

/// Stable edge identifier, unique within one graph value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub u32);

/// Errors from graph construction and decomposition.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    /// An edge endpoint is not a vertex of the graph under construction.
    #[error("edge endpoint {0} out of range for {1} vertices")]
    IndexOutOfRange(Vertex, usize),
    /// The operation needs a connected graph.
    #[error("graph is disconnected")]
    Disconnected,
    /// A suppressed set must have exactly one or two outside neighbors.
    #[error("suppressed set has {0} outside neighbors, need 1 or 2")]
    BadNeighborhood(usize),
}

/// Coarse connectivity classification.
///
/// `Tiny` covers every graph with at most two vertices; such graphs are never
/// reported `TwoConnected`, so branches keyed on "not 2-connected" treat the
/// 2-cycle uniformly with the other decomposable cases.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConnectivityClass {
    /// More than one connected component (only reported for n >= 3).
    Disconnected,
    /// Connected with at least one cut vertex.
    HasCutVertex,
    /// Connected, n >= 3, and no cut vertex.
    TwoConnected,
    /// At most two vertices.
    Tiny,
}

/// A maximal 2-connected subgraph, a single cut edge, or a loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Vertices of the block, ascending.
    pub vertices: Vec<Vertex>,
    /// Edges of the block, ascending.
    pub edges: Vec<EdgeId>,
}

/// Result of the biconnected decomposition of a connected graph.
///
/// The block-cut tree is bipartite between blocks and cut vertices: block
/// `i` is adjacent to exactly the cut vertices listed in
/// `blocks[i].vertices`, and `blocks_of_vertex` gives the reverse direction.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    /// Every block; each edge appears in exactly one.
    pub blocks: Vec<Block>,
    /// Vertices whose removal disconnects the graph.
    pub cut_vertices: BTreeSet<Vertex>,
    /// Bridges: non-loop edges forming a single-edge block.
    pub cut_edges: BTreeSet<EdgeId>,
    /// Index into `blocks` for every edge.
    pub block_of_edge: BTreeMap<EdgeId, usize>,
    /// Indices of the blocks containing each vertex, ascending.
    pub blocks_of_vertex: BTreeMap<Vertex, Vec<usize>>,
}

/// Undirected multigraph over ordered vertex ids with stable edge ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    edges: BTreeMap<EdgeId, (Vertex, Vertex)>,
    // Incident edges per vertex, ascending by edge id; loops appear twice.
    adj: BTreeMap<Vertex, Vec<(EdgeId, Vertex)>>,
}

impl Multigraph {
    /// Builds a graph on vertices `0..num_vertices` with edge ids assigned
    /// in input order.
    pub fn build(num_vertices: usize, edge_list: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut edges = BTreeMap::new();
        for (i, &(u, v)) in edge_list.iter().enumerate() {
            for w in [u, v] {
                if w as usize >= num_vertices {
                    return Err(GraphError::IndexOutOfRange(w, num_vertices));
                }
            }
            edges.insert(EdgeId(i as u32), (u, v));
        }
        Ok(Self::assemble((0..num_vertices as Vertex).collect(), edges))
    }

    /// Builds a graph from explicit vertex and edge sets. Every edge endpoint
    /// must be listed as a vertex.
    pub(crate) fn assemble(
        vertices: BTreeSet<Vertex>,
        edges: BTreeMap<EdgeId, (Vertex, Vertex)>,
    ) -> Self {
        let mut adj: BTreeMap<Vertex, Vec<(EdgeId, Vertex)>> =
            vertices.into_iter().map(|v| (v, Vec::new())).collect();
        for (&id, &(u, v)) in &edges {
            adj.get_mut(&u)
                .expect("edge endpoint missing from vertex set")
                .push((id, v));
            adj.get_mut(&v)
                .expect("edge endpoint missing from vertex set")
                .push((id, u));
        }
        Multigraph { edges, adj }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Vertices in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    /// Edge ids in ascending order.
    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    /// Edges with endpoints, ascending by id.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, (Vertex, Vertex))> + '_ {
        self.edges.iter().map(|(&id, &ends)| (id, ends))
    }

    /// Whether `v` is a vertex of this graph.
    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    /// Whether `e` is an edge of this graph.
    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    /// Endpoints of `e` as stored (unordered pair).
    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        *self.edges.get(&e).expect("edge id not in graph")
    }

    /// Whether `e` is a loop.
    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (u, v) = self.endpoints(e);
        u == v
    }

    /// The endpoint of `e` other than `v` (equals `v` for a loop at `v`).
    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.endpoints(e);
        debug_assert!(a == v || b == v, "vertex not an endpoint of the edge");
        if a == v {
            b
        } else {
            a
        }
    }

    /// Incident edges of `v`, ascending by edge id; a loop appears twice.
    pub fn incident(&self, v: Vertex) -> &[(EdgeId, Vertex)] {
        self.adj.get(&v).expect("vertex not in graph").as_slice()
    }

    /// Degree of `v`; a loop contributes 2.
    pub fn degree(&self, v: Vertex) -> usize {
        self.incident(v).len()
    }

    /// `(n, n2, max_degree)`: vertex count, number of degree-2 vertices, and
    /// the maximum degree (0 for the empty graph).
    pub fn degree_profile(&self) -> (usize, usize, usize) {
        let mut n2 = 0;
        let mut max_degree = 0;
        for list in self.adj.values() {
            if list.len() == 2 {
                n2 += 1;
            }
            max_degree = max_degree.max(list.len());
        }
        (self.n(), n2, max_degree)
    }

    /// Whether the graph has neither loops nor parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        for &(u, v) in self.edges.values() {
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                return false;
            }
        }
        true
    }

    /// Whether every degree is at most 3.
    pub fn is_subcubic(&self) -> bool {
        self.adj.values().all(|list| list.len() <= 3)
    }

    /// All edges joining `u` and `v`, ascending.
    pub fn edges_between(&self, u: Vertex, v: Vertex) -> Vec<EdgeId> {
        self.incident(u)
            .iter()
            .filter(|&&(_, w)| w == v)
            .map(|&(id, _)| id)
            .collect()
    }

    /// Smallest edge id, if any.
    pub fn smallest_edge(&self) -> Option<EdgeId> {
        self.edges.keys().next().copied()
    }

    /// An edge id strictly larger than every id used by this graph.
    pub fn fresh_edge_id(&self) -> EdgeId {
        EdgeId(self.edges.keys().next_back().map_or(0, |e| e.0 + 1))
    }

    /// Largest vertex id, if any.
    pub fn max_vertex(&self) -> Option<Vertex> {
        self.adj.keys().next_back().copied()
    }

    /// A copy with one extra `u`-`v` edge under a fresh id.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> (Self, EdgeId) {
        assert!(self.has_vertex(u) && self.has_vertex(v), "endpoint not in graph");
        let id = self.fresh_edge_id();
        let mut edges = self.edges.clone();
        edges.insert(id, (u, v));
        let vertices = self.vertices().collect();
        (Self::assemble(vertices, edges), id)
    }

    /// A copy without edge `e`; vertices are kept (possibly isolated).
    pub fn without_edge(&self, e: EdgeId) -> Self {
        assert!(self.has_edge(e), "edge id not in graph");
        let mut edges = self.edges.clone();
        edges.remove(&e);
        Self::assemble(self.vertices().collect(), edges)
    }

    /// A copy without the vertices in `s` and all their incident edges.
    pub fn without_vertices(&self, s: &BTreeSet<Vertex>) -> Self {
        let vertices: BTreeSet<Vertex> = self.vertices().filter(|v| !s.contains(v)).collect();
        let edges = self
            .edges
            .iter()
            .filter(|(_, (u, v))| !s.contains(u) && !s.contains(v))
            .map(|(&id, &ends)| (id, ends))
            .collect();
        Self::assemble(vertices, edges)
    }

    /// The subgraph on the given vertices and edges, preserving ids. Every
    /// listed edge must have both endpoints listed.
    pub(crate) fn subgraph(
        &self,
        vertices: impl IntoIterator<Item = Vertex>,
        edge_ids: impl IntoIterator<Item = EdgeId>,
    ) -> Self {
        let vertices: BTreeSet<Vertex> = vertices.into_iter().collect();
        let edges: BTreeMap<EdgeId, (Vertex, Vertex)> = edge_ids
            .into_iter()
            .map(|id| (id, self.endpoints(id)))
            .collect();
        Self::assemble(vertices, edges)
    }

    /// Whether the graph is connected (true for the empty graph).
    pub fn connected(&self) -> bool {
        let Some(root) = self.vertices().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([root]);
        let mut queue = vec![root];
        while let Some(u) = queue.pop() {
            for &(_, w) in self.incident(u) {
                if seen.insert(w) {
                    queue.push(w);
                }
            }
        }
        seen.len() == self.n()
    }

    /// Classifies connectivity; see [`ConnectivityClass`].
    pub fn connectivity_class(&self) -> ConnectivityClass {
        if self.n() <= 2 {
            return ConnectivityClass::Tiny;
        }
        if !self.connected() {
            return ConnectivityClass::Disconnected;
        }
        let decomposition = self
            .block_decomposition()
            .expect("connectivity was just checked");
        if decomposition.cut_vertices.is_empty() {
            ConnectivityClass::TwoConnected
        } else {
            ConnectivityClass::HasCutVertex
        }
    }

    /// Biconnected decomposition by one depth-first traversal.
    ///
    /// A loop is a single-edge block of its own but never a cut edge; cut
    /// edges are exactly the non-loop single-edge blocks.
    pub fn block_decomposition(&self) -> Result<BlockDecomposition, GraphError> {
        if !self.connected() {
            return Err(GraphError::Disconnected);
        }
        let mut disc: BTreeMap<Vertex, usize> = BTreeMap::new();
        let mut low: BTreeMap<Vertex, usize> = BTreeMap::new();
        let mut processed: BTreeSet<EdgeId> = BTreeSet::new();
        let mut edge_stack: Vec<EdgeId> = Vec::new();
        let mut blocks: Vec<Block> = Vec::new();
        let mut cut_vertices: BTreeSet<Vertex> = BTreeSet::new();

        struct Frame {
            v: Vertex,
            pos: usize,
            entered_by: Option<EdgeId>,
        }

        if let Some(root) = self.vertices().next() {
            let mut timer = 0usize;
            disc.insert(root, timer);
            low.insert(root, timer);
            timer += 1;
            let mut root_children = 0usize;
            let mut stack = vec![Frame { v: root, pos: 0, entered_by: None }];

            while let Some(frame) = stack.last_mut() {
                let u = frame.v;
                if frame.pos < self.incident(u).len() {
                    let (eid, w) = self.incident(u)[frame.pos];
                    frame.pos += 1;
                    if !processed.insert(eid) {
                        continue;
                    }
                    if w == u {
                        blocks.push(Block { vertices: vec![u], edges: vec![eid] });
                    } else if let Some(&dw) = disc.get(&w) {
                        // Back edge to an ancestor.
                        edge_stack.push(eid);
                        if dw < low[&u] {
                            low.insert(u, dw);
                        }
                    } else {
                        edge_stack.push(eid);
                        disc.insert(w, timer);
                        low.insert(w, timer);
                        timer += 1;
                        stack.push(Frame { v: w, pos: 0, entered_by: Some(eid) });
                    }
                } else {
                    let entered_by = frame.entered_by;
                    stack.pop();
                    let Some(tree_edge) = entered_by else {
                        break;
                    };
                    let parent = stack.last().expect("non-root frame has a parent").v;
                    let lu = low[&u];
                    if lu < low[&parent] {
                        low.insert(parent, lu);
                    }
                    if parent == root {
                        root_children += 1;
                    }
                    if lu >= disc[&parent] {
                        let mut block_edges = Vec::new();
                        loop {
                            let top = edge_stack.pop().expect("tree edge must be stacked");
                            block_edges.push(top);
                            if top == tree_edge {
                                break;
                            }
                        }
                        blocks.push(self.collect_block(block_edges));
                        if parent != root {
                            cut_vertices.insert(parent);
                        }
                    }
                }
            }
            if root_children >= 2 {
                cut_vertices.insert(root);
            }
            debug_assert!(edge_stack.is_empty(), "all edges must be assigned to blocks");
        }

        let mut block_of_edge = BTreeMap::new();
        let mut blocks_of_vertex: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
        let mut cut_edges = BTreeSet::new();
        for (i, block) in blocks.iter().enumerate() {
            for &e in &block.edges {
                block_of_edge.insert(e, i);
            }
            for &v in &block.vertices {
                blocks_of_vertex.entry(v).or_default().push(i);
            }
            if block.edges.len() == 1 && !self.is_loop(block.edges[0]) {
                cut_edges.insert(block.edges[0]);
            }
        }
        Ok(BlockDecomposition {
            blocks,
            cut_vertices,
            cut_edges,
            block_of_edge,
            blocks_of_vertex,
        })
    }

    fn collect_block(&self, mut edges: Vec<EdgeId>) -> Block {
        edges.sort();
        let mut vertices = BTreeSet::new();
        for &e in &edges {
            let (u, v) = self.endpoints(e);
            vertices.insert(u);
            vertices.insert(v);
        }
        Block { vertices: vertices.into_iter().collect(), edges }
    }

    /// Deletes the vertex set `s` and adds one fresh edge joining its one or
    /// two outside neighbors (a loop for one neighbor). Returns the new
    /// graph, the new edge id, and the identity map on surviving edge ids.
    pub fn suppress(
        &self,
        s: &BTreeSet<Vertex>,
    ) -> Result<(Self, EdgeId, BTreeMap<EdgeId, EdgeId>), GraphError> {
        for v in s {
            assert!(self.has_vertex(*v), "suppressed vertex not in graph");
        }
        let mut neighbors = BTreeSet::new();
        for &(u, v) in self.edges.values() {
            if s.contains(&u) && !s.contains(&v) {
                neighbors.insert(v);
            } else if s.contains(&v) && !s.contains(&u) {
                neighbors.insert(u);
            }
        }
        let ends = match (neighbors.iter().next(), neighbors.iter().next_back()) {
            (Some(&a), Some(&b)) if neighbors.len() <= 2 => (a, b),
            _ => return Err(GraphError::BadNeighborhood(neighbors.len())),
        };
        let new_edge = self.fresh_edge_id();
        let vertices: BTreeSet<Vertex> = self.vertices().filter(|v| !s.contains(v)).collect();
        let mut edges: BTreeMap<EdgeId, (Vertex, Vertex)> = BTreeMap::new();
        let mut kept = BTreeMap::new();
        for (&id, &(u, v)) in &self.edges {
            if !s.contains(&u) && !s.contains(&v) {
                edges.insert(id, (u, v));
                kept.insert(id, id);
            }
        }
        edges.insert(new_edge, ends);
        Ok((Self::assemble(vertices, edges), new_edge, kept))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Multigraph {
        let edges: Vec<(Vertex, Vertex)> =
            (0..n).map(|i| (i as Vertex, ((i + 1) % n) as Vertex)).collect();
        Multigraph::build(n, &edges).unwrap()
    }

    fn brute_cut_vertices(g: &Multigraph) -> BTreeSet<Vertex> {
        g.vertices()
            .filter(|&v| {
                let rest = g.without_vertices(&BTreeSet::from([v]));
                rest.n() > 0 && !rest.connected()
            })
            .collect()
    }

    fn brute_bridges(g: &Multigraph) -> BTreeSet<EdgeId> {
        g.edge_ids().filter(|&e| !g.without_edge(e).connected()).collect()
    }

    #[test]
    fn build_k23_profile() {
        let g = Multigraph::build(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(g.degree_profile(), (5, 3, 3));
        assert!(g.is_simple());
        assert!(g.is_subcubic());
    }

    #[test]
    fn build_loop_counts_twice() {
        let g = Multigraph::build(1, &[(0, 0)]).unwrap();
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.degree_profile(), (1, 1, 2));
        assert!(!g.is_simple());
    }

    #[test]
    fn build_two_cycle_profile() {
        let g = Multigraph::build(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.degree_profile(), (2, 2, 2));
        assert!(!g.is_simple());
        assert_eq!(g.edges_between(0, 1).len(), 2);
    }

    #[test]
    fn build_rejects_out_of_range_endpoints() {
        assert_eq!(
            Multigraph::build(3, &[(0, 3)]),
            Err(GraphError::IndexOutOfRange(3, 3))
        );
    }

    #[test]
    fn handshake_identity_holds() {
        let g = Multigraph::build(4, &[(0, 1), (0, 1), (2, 2), (2, 3), (1, 3)]).unwrap();
        let degree_sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum, 2 * g.m());
    }

    #[test]
    fn blocks_of_cycle_and_k4() {
        let c5 = cycle(5);
        let d = c5.block_decomposition().unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cut_vertices.is_empty());
        assert!(d.cut_edges.is_empty());

        let k4 = Multigraph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.block_decomposition().unwrap().blocks.len(), 1);
    }

    #[test]
    fn blocks_of_two_squares_and_a_bridge() {
        // Two 4-cycles joined by one bridge (n=8, m=9).
        let g = Multigraph::build(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
            ],
        )
        .unwrap();
        let d = g.block_decomposition().unwrap();
        assert_eq!(d.blocks.len(), 3);
        assert_eq!(d.cut_vertices, brute_cut_vertices(&g));
        assert_eq!(d.cut_vertices.len(), 2);
        assert_eq!(d.cut_edges, brute_bridges(&g));
        assert_eq!(d.cut_edges, BTreeSet::from([EdgeId(4)]));
        let bridge_block = d.block_of_edge[&EdgeId(4)];
        assert_eq!(d.blocks[bridge_block].edges, vec![EdgeId(4)]);
    }

    #[test]
    fn block_decomposition_matches_brute_force_on_multigraphs() {
        let graphs = [
            Multigraph::build(2, &[(0, 1), (0, 1)]).unwrap(),
            Multigraph::build(4, &[(0, 1), (0, 1), (1, 2), (2, 3), (2, 3)]).unwrap(),
            Multigraph::build(1, &[(0, 0)]).unwrap(),
            cycle(6),
        ];
        for g in &graphs {
            let d = g.block_decomposition().unwrap();
            assert_eq!(d.cut_vertices, brute_cut_vertices(g), "graph {g:?}");
            assert_eq!(d.cut_edges, brute_bridges(g), "graph {g:?}");
            let mut covered: Vec<EdgeId> =
                d.blocks.iter().flat_map(|b| b.edges.iter().copied()).collect();
            covered.sort();
            assert_eq!(covered, g.edge_ids().collect::<Vec<_>>());
        }
    }

    #[test]
    fn block_decomposition_requires_connectivity() {
        let g = Multigraph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.block_decomposition().unwrap_err(), GraphError::Disconnected);
    }

    #[test]
    fn suppress_path_interior() {
        let g = Multigraph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let (h, e, kept) = g.suppress(&BTreeSet::from([1])).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.endpoints(e), (0, 2));
        assert!(kept.is_empty());
    }

    #[test]
    fn suppress_triangle_vertex_gives_parallel() {
        let g = Multigraph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let (h, e, kept) = g.suppress(&BTreeSet::from([2])).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.m(), 2);
        assert_eq!(h.endpoints(e), (0, 1));
        assert_eq!(kept.len(), 1);
        assert!(!h.is_simple());
    }

    #[test]
    fn suppress_two_cycle_vertex_gives_loop() {
        let g = Multigraph::build(2, &[(0, 1), (0, 1)]).unwrap();
        let (h, e, _) = g.suppress(&BTreeSet::from([1])).unwrap();
        assert_eq!(h.n(), 1);
        assert_eq!(h.endpoints(e), (0, 0));
        assert!(h.is_loop(e));
    }

    #[test]
    fn suppress_rejects_wide_neighborhoods() {
        let star = Multigraph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            star.suppress(&BTreeSet::from([0])).unwrap_err(),
            GraphError::BadNeighborhood(3)
        );
    }

    #[test]
    fn suppress_then_reexpand_preserves_degrees() {
        let g = Multigraph::build(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)])
            .unwrap();
        let s = BTreeSet::from([2, 3]);
        let (h, e, kept) = g.suppress(&s).unwrap();
        assert_eq!(h.n(), g.n() - s.len());
        for (&old, &new) in &kept {
            assert_eq!(old, new);
            assert_eq!(g.endpoints(old), h.endpoints(new));
        }
        // Re-expand: replace the new edge by a two-vertex path again.
        let (a, b) = h.endpoints(e);
        let mut edges: BTreeMap<EdgeId, (Vertex, Vertex)> =
            h.edges().filter(|&(id, _)| id != e).collect();
        let base = h.fresh_edge_id().0;
        edges.insert(EdgeId(base), (a, 2));
        edges.insert(EdgeId(base + 1), (2, 3));
        edges.insert(EdgeId(base + 2), (3, b));
        let mut vertices: BTreeSet<Vertex> = h.vertices().collect();
        vertices.extend([2, 3]);
        let restored = Multigraph::assemble(vertices, edges);
        assert_eq!(restored.n(), g.n());
        let mut original: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        let mut rebuilt: Vec<usize> = restored.vertices().map(|v| restored.degree(v)).collect();
        original.sort();
        rebuilt.sort();
        assert_eq!(original, rebuilt);
    }

    #[test]
    fn connectivity_classes() {
        assert_eq!(
            Multigraph::build(2, &[(0, 1)]).unwrap().connectivity_class(),
            ConnectivityClass::Tiny
        );
        let path = Multigraph::build(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(path.connectivity_class(), ConnectivityClass::HasCutVertex);
        let diamond = Multigraph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(brute_cut_vertices(&diamond).is_empty());
        assert_eq!(diamond.connectivity_class(), ConnectivityClass::TwoConnected);
        let split = Multigraph::build(5, &[(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        assert_eq!(split.connectivity_class(), ConnectivityClass::Disconnected);
    }

    #[test]
    fn derived_graphs_preserve_edge_ids() {
        let g = Multigraph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (h, added) = g.with_edge(0, 2);
        assert_eq!(added, EdgeId(4));
        assert_eq!(h.endpoints(EdgeId(1)), (1, 2));
        let back = h.without_edge(added);
        assert_eq!(back.edge_ids().collect::<Vec<_>>(), g.edge_ids().collect::<Vec<_>>());
        let trimmed = g.without_vertices(&BTreeSet::from([0]));
        assert_eq!(trimmed.n(), 3);
        assert_eq!(trimmed.edge_ids().collect::<Vec<_>>(), vec![EdgeId(1), EdgeId(2)]);
    }
}
