//! Chain decompositions of subcubic graphs.
//!
//! A chain `x e_0 B_1 e_1 ... B_k e_k y` strings blocks (single vertices or
//! 2-connected subgraphs) along cut edges between two endpoints. This module
//! recovers chains from their closures, splits a graph at the endpoints of a
//! root edge into the two chains of a rooted theta, suppresses a root
//! endpoint, and computes the Z/U/V/Y decomposition used by the Delta = -1
//! cover construction.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::multigraph::{ConnectivityClass, EdgeId, Multigraph, Vertex};

/// Errors from chain extraction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChainError {
    /// (G,e) is not the closure of a chain.
    #[error("(G,e) is not a chain closure: {0}")]
    NotAChainCase(&'static str),
    /// The operation needs a nontrivial chain.
    #[error("operation needs a nontrivial chain")]
    TrivialChain,
    /// A caller obligation does not hold.
    #[error("precondition violated: {0}")]
    BadPrecondition(&'static str),
}

/// One block `B_i` of a chain together with its attachment vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainBlock {
    /// Vertices of the block, ascending.
    pub vertices: Vec<Vertex>,
    /// Edges inside the block, ascending.
    pub edges: Vec<EdgeId>,
    /// Attachment toward the start of the chain (endpoint of `e_{i-1}`).
    pub x: Vertex,
    /// Attachment toward the end of the chain (endpoint of `e_i`).
    pub y: Vertex,
}

impl ChainBlock {
    /// Whether the block is a single vertex.
    pub fn is_singleton(&self) -> bool {
        self.vertices.len() == 1
    }
}

/// A chain living inside a host graph, with real endpoint vertices.
///
/// `blocks` empty encodes the trivial chain: a single edge `xy`, whose only
/// cut edge is that edge itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubcubicChain {
    /// Start endpoint (not part of any block).
    pub x: Vertex,
    /// End endpoint (not part of any block).
    pub y: Vertex,
    /// Cut edges `e_0 ... e_k`; exactly one more entry than `blocks`.
    pub cut_edges: Vec<EdgeId>,
    /// Blocks `B_1 ... B_k` in chain order.
    pub blocks: Vec<ChainBlock>,
}

/// A pair (G,e) presented as the closure of a chain: the phantom endpoints
/// are gone and the root edge joins `B_1`'s x-attachment to `B_k`'s
/// y-attachment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedChain {
    /// The root edge `e_C`.
    pub root: EdgeId,
    /// Inner cut edges `e_1 ... e_{k-1}`.
    pub cut_edges: Vec<EdgeId>,
    /// Blocks `B_1 ... B_k`; at least two whenever G - e has two vertices.
    pub blocks: Vec<ChainBlock>,
}

/// Closure of a chain or chain-block: a standalone graph plus root edge, or
/// the trivial sentinel, which carries exc = delta = delta_hat = 0.
#[derive(Clone, Debug)]
pub enum ChainClosure {
    /// Closure of a trivial chain.
    Trivial,
    /// Closure of a nontrivial chain: `graph - root` is simple.
    Graph {
        /// The closure graph.
        graph: Multigraph,
        /// The minted root edge.
        root: EdgeId,
    },
}

/// Shape of a closure.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClosureKind {
    /// Trivial sentinel.
    Trivial,
    /// Single vertex with a loop root.
    Loop,
    /// Anything larger.
    Proper,
}

impl ChainClosure {
    /// The shape of this closure.
    pub fn kind(&self) -> ClosureKind {
        match self {
            ChainClosure::Trivial => ClosureKind::Trivial,
            ChainClosure::Graph { graph, root } => {
                if graph.is_loop(*root) {
                    ClosureKind::Loop
                } else {
                    ClosureKind::Proper
                }
            }
        }
    }
}

fn closure_of_block(host: &Multigraph, block: &ChainBlock) -> ChainClosure {
    let root = host.fresh_edge_id();
    let mut edges: BTreeMap<EdgeId, (Vertex, Vertex)> =
        block.edges.iter().map(|&e| (e, host.endpoints(e))).collect();
    edges.insert(root, (block.x, block.y));
    let graph = Multigraph::assemble(block.vertices.iter().copied().collect(), edges);
    ChainClosure::Graph { graph, root }
}

fn closures_of_blocks(host: &Multigraph, blocks: &[ChainBlock]) -> Vec<ChainClosure> {
    blocks.iter().map(|b| closure_of_block(host, b)).collect()
}

impl SubcubicChain {
    /// Whether this is the trivial chain (a single edge).
    pub fn is_trivial(&self) -> bool {
        self.blocks.is_empty()
    }

    /// First cut edge `e_0`.
    pub fn first_cut(&self) -> EdgeId {
        self.cut_edges[0]
    }

    /// Last cut edge `e_k`.
    pub fn last_cut(&self) -> EdgeId {
        *self.cut_edges.last().expect("chains have at least one cut edge")
    }

    /// Interior vertices (all block vertices; endpoints excluded).
    pub fn interior_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.blocks.iter().flat_map(|b| b.vertices.iter().copied())
    }

    /// Every edge of the chain: cut edges and block edges.
    pub fn all_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.cut_edges
            .iter()
            .copied()
            .chain(self.blocks.iter().flat_map(|b| b.edges.iter().copied()))
    }

    /// The same chain traversed from `y` to `x`.
    pub fn reversed(&self) -> SubcubicChain {
        SubcubicChain {
            x: self.y,
            y: self.x,
            cut_edges: self.cut_edges.iter().rev().copied().collect(),
            blocks: self
                .blocks
                .iter()
                .rev()
                .map(|b| ChainBlock {
                    vertices: b.vertices.clone(),
                    edges: b.edges.clone(),
                    x: b.y,
                    y: b.x,
                })
                .collect(),
        }
    }

    /// The closure: interior plus a minted root edge joining the attachments
    /// of the outermost blocks; the trivial sentinel for a trivial chain.
    pub fn closure(&self, host: &Multigraph) -> ChainClosure {
        if self.is_trivial() {
            return ChainClosure::Trivial;
        }
        let root_id = host.fresh_edge_id();
        let mut vertices = BTreeSet::new();
        let mut edges: BTreeMap<EdgeId, (Vertex, Vertex)> = BTreeMap::new();
        for block in &self.blocks {
            vertices.extend(block.vertices.iter().copied());
            for &e in &block.edges {
                edges.insert(e, host.endpoints(e));
            }
        }
        for &e in &self.cut_edges[1..self.cut_edges.len() - 1] {
            edges.insert(e, host.endpoints(e));
        }
        let a = self.blocks[0].x;
        let b = self.blocks.last().expect("nontrivial").y;
        edges.insert(root_id, (a, b));
        ChainClosure::Graph {
            graph: Multigraph::assemble(vertices, edges),
            root: root_id,
        }
    }

    /// Chain-block closures `B_i + x_i y_i`, in chain order.
    pub fn block_closures(&self, host: &Multigraph) -> Result<Vec<ChainClosure>, ChainError> {
        if self.is_trivial() {
            return Err(ChainError::TrivialChain);
        }
        Ok(closures_of_blocks(host, &self.blocks))
    }
}

impl ClosedChain {
    /// Number of blocks `k`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    /// Whether the chain has no blocks (never true for values built by
    /// [`as_chain_closure`]).
    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Chain-block closures `B_i + x_i y_i`, in chain order.
    pub fn block_closures(&self, host: &Multigraph) -> Vec<ChainClosure> {
        closures_of_blocks(host, &self.blocks)
    }
}

/// The 2-edge-connected components of a graph and the bridges joining them,
/// as a forest (a tree when the graph is connected).
struct BridgeForest {
    comp_of: BTreeMap<Vertex, usize>,
    comps: Vec<(Vec<Vertex>, Vec<EdgeId>)>,
    // Per component: (bridge, neighbor component), ascending by bridge id.
    adj: Vec<Vec<(EdgeId, usize)>>,
}

impl BridgeForest {
    fn build(g: &Multigraph) -> BridgeForest {
        let bridges = g
            .block_decomposition()
            .expect("bridge forest needs a connected graph")
            .cut_edges;
        let mut comp_of = BTreeMap::new();
        let mut comps: Vec<(Vec<Vertex>, Vec<EdgeId>)> = Vec::new();
        for start in g.vertices() {
            if comp_of.contains_key(&start) {
                continue;
            }
            let idx = comps.len();
            let mut vertices = vec![start];
            comp_of.insert(start, idx);
            let mut queue = VecDeque::from([start]);
            while let Some(w) = queue.pop_front() {
                for &(eid, t) in g.incident(w) {
                    if bridges.contains(&eid) || comp_of.contains_key(&t) {
                        continue;
                    }
                    comp_of.insert(t, idx);
                    vertices.push(t);
                    queue.push_back(t);
                }
            }
            vertices.sort();
            comps.push((vertices, Vec::new()));
        }
        for (id, (u, v)) in g.edges() {
            if !bridges.contains(&id) {
                let c = comp_of[&u];
                debug_assert_eq!(c, comp_of[&v]);
                comps[c].1.push(id);
            }
        }
        let mut adj = vec![Vec::new(); comps.len()];
        for &b in &bridges {
            let (u, v) = g.endpoints(b);
            let (cu, cv) = (comp_of[&u], comp_of[&v]);
            adj[cu].push((b, cv));
            adj[cv].push((b, cu));
        }
        for list in &mut adj {
            list.sort();
        }
        BridgeForest { comp_of, comps, adj }
    }

    /// Components and bridges along the tree path `from .. to`:
    /// `(comps, bridges)` with `comps.len() == bridges.len() + 1`.
    fn path(&self, from: usize, to: usize) -> (Vec<usize>, Vec<EdgeId>) {
        let mut parent: BTreeMap<usize, (usize, EdgeId)> = BTreeMap::new();
        let mut seen = BTreeSet::from([from]);
        let mut queue = VecDeque::from([from]);
        while let Some(c) = queue.pop_front() {
            if c == to {
                break;
            }
            for &(b, d) in &self.adj[c] {
                if seen.insert(d) {
                    parent.insert(d, (c, b));
                    queue.push_back(d);
                }
            }
        }
        assert!(seen.contains(&to), "bridge forest path endpoints disconnected");
        let mut comps = vec![to];
        let mut bridges = Vec::new();
        let mut cur = to;
        while cur != from {
            let (prev, b) = parent[&cur];
            bridges.push(b);
            comps.push(prev);
            cur = prev;
        }
        comps.reverse();
        bridges.reverse();
        (comps, bridges)
    }

    /// The unique tree node lying on all three pairwise paths.
    fn median(&self, a: usize, b: usize, c: usize) -> usize {
        let (pab, _) = self.path(a, b);
        let (pac, _) = self.path(a, c);
        let (pbc, _) = self.path(b, c);
        let sab: BTreeSet<usize> = pab.into_iter().collect();
        let sac: BTreeSet<usize> = pac.into_iter().collect();
        let common: Vec<usize> = pbc
            .into_iter()
            .filter(|x| sab.contains(x) && sac.contains(x))
            .collect();
        assert_eq!(common.len(), 1, "tree median must be unique");
        common[0]
    }
}

/// Builds the chain whose interior is the tree path of 2-edge-connected
/// components from `first_comp` toward `last_comp` (exclusive), entered by
/// `first_edge` and left by the path's final bridge into `last_comp`.
/// Returns the chain (endpoints `x`, attachment-in-last-comp) given the
/// already-known real endpoints.
fn chain_from_path(
    g: &Multigraph,
    forest: &BridgeForest,
    x: Vertex,
    first_edge: EdgeId,
    comps: &[usize],
    bridges: &[EdgeId],
    y: Vertex,
) -> SubcubicChain {
    let mut cut_edges = vec![first_edge];
    cut_edges.extend(bridges.iter().copied());
    let mut blocks = Vec::new();
    let mut enter = first_edge;
    for (i, &c) in comps.iter().enumerate() {
        let leave = bridges[i];
        let (vertices, edges) = &forest.comps[c];
        let bx = block_attachment(g, enter, vertices);
        let by = block_attachment(g, leave, vertices);
        blocks.push(ChainBlock {
            vertices: vertices.clone(),
            edges: edges.clone(),
            x: bx,
            y: by,
        });
        enter = leave;
    }
    SubcubicChain { x, y, cut_edges, blocks }
}

fn block_attachment(g: &Multigraph, e: EdgeId, vertices: &[Vertex]) -> Vertex {
    let (a, b) = g.endpoints(e);
    if vertices.binary_search(&a).is_ok() {
        a
    } else {
        debug_assert!(vertices.binary_search(&b).is_ok());
        b
    }
}

/// Writes (G,e) as the closure of a subcubic chain.
///
/// Expects G to be 2-connected or a 2-cycle with G-e simple; fails with
/// [`ChainError::NotAChainCase`] when G is a loop or G-e is 2-connected.
pub fn as_chain_closure(g: &Multigraph, e: EdgeId) -> Result<ClosedChain, ChainError> {
    if g.is_loop(e) {
        return Err(ChainError::NotAChainCase("G is a loop"));
    }
    let rest = g.without_edge(e);
    assert!(rest.is_simple(), "chain closure needs G-e simple");
    match rest.connectivity_class() {
        ConnectivityClass::TwoConnected => {
            return Err(ChainError::NotAChainCase("G-e is 2-connected"))
        }
        ConnectivityClass::Disconnected => panic!("chain closure needs G-e connected"),
        ConnectivityClass::HasCutVertex | ConnectivityClass::Tiny => {}
    }
    let (eu, ev) = g.endpoints(e);
    let (u0, v0) = (eu.min(ev), eu.max(ev));
    assert!(u0 != v0, "loop was excluded above");

    let forest = BridgeForest::build(&rest);
    let (cu, cv) = (forest.comp_of[&u0], forest.comp_of[&v0]);
    assert!(cu != cv, "a 2-connected host cannot close a one-sided chain");
    let (comps, bridges) = forest.path(cu, cv);
    assert_eq!(
        comps.len(),
        forest.comps.len(),
        "every component must lie on the chain path in a 2-connected host"
    );

    let mut blocks = Vec::new();
    let mut enter_vertex = u0;
    for (i, &c) in comps.iter().enumerate() {
        let (vertices, edges) = &forest.comps[c];
        let bx = if i == 0 {
            enter_vertex
        } else {
            block_attachment(g, bridges[i - 1], vertices)
        };
        let by = if i + 1 == comps.len() {
            v0
        } else {
            block_attachment(g, bridges[i], vertices)
        };
        debug_assert!(vertices.binary_search(&bx).is_ok());
        debug_assert!(vertices.binary_search(&by).is_ok());
        blocks.push(ChainBlock {
            vertices: vertices.clone(),
            edges: edges.clone(),
            x: bx,
            y: by,
        });
        enter_vertex = by;
    }
    Ok(ClosedChain { root: e, cut_edges: bridges, blocks })
}

/// Splits (G,e) into the two chains of a rooted theta when G-{u,v} is
/// disconnected. `C_1` is the chain containing the smallest interior vertex;
/// both chains run from `min(u,v)` to `max(u,v)`.
///
/// Expects G-e simple, e not a loop, and e without a parallel copy.
pub fn rooted_theta_split(
    g: &Multigraph,
    e: EdgeId,
) -> Option<(SubcubicChain, SubcubicChain)> {
    assert!(!g.is_loop(e), "rooted theta split needs a non-loop root");
    let (eu, ev) = g.endpoints(e);
    assert_eq!(
        g.edges_between(eu, ev).len(),
        1,
        "rooted theta split needs a root without parallel copies"
    );
    assert!(g.without_edge(e).is_simple(), "rooted theta split needs G-e simple");
    let (x, y) = (eu.min(ev), eu.max(ev));
    let h = g.without_vertices(&BTreeSet::from([x, y]));
    if h.n() == 0 || h.connected() {
        return None;
    }
    let mut comp_of: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut comps: Vec<BTreeSet<Vertex>> = Vec::new();
    for start in h.vertices() {
        if comp_of.contains_key(&start) {
            continue;
        }
        let idx = comps.len();
        let mut comp = BTreeSet::from([start]);
        comp_of.insert(start, idx);
        let mut queue = VecDeque::from([start]);
        while let Some(w) = queue.pop_front() {
            for &(_, t) in h.incident(w) {
                if comp_of.insert(t, idx).is_none() {
                    comp.insert(t);
                    queue.push_back(t);
                }
            }
        }
        comps.push(comp);
    }
    assert_eq!(
        comps.len(),
        2,
        "a subcubic root admits at most two chains at its endpoints"
    );
    let c1 = chain_through_component(g, x, y, &comps[0]);
    let c2 = chain_through_component(g, x, y, &comps[1]);
    Some((c1, c2))
}

/// Builds the x-to-y chain whose interior is `comp` (a connected component
/// of G-{x,y} attaching to both endpoints by exactly one edge each).
fn chain_through_component(
    g: &Multigraph,
    x: Vertex,
    y: Vertex,
    comp: &BTreeSet<Vertex>,
) -> SubcubicChain {
    let into = |from: Vertex| -> Vec<EdgeId> {
        g.incident(from)
            .iter()
            .filter(|&&(_, t)| comp.contains(&t))
            .map(|&(id, _)| id)
            .collect()
    };
    let from_x = into(x);
    let from_y = into(y);
    assert_eq!(from_x.len(), 1, "chain interiors attach to each endpoint once");
    assert_eq!(from_y.len(), 1, "chain interiors attach to each endpoint once");
    let e0 = from_x[0];
    let ek = from_y[0];

    let interior = g.subgraph(
        comp.iter().copied(),
        g.edges()
            .filter(|&(_, (a, b))| comp.contains(&a) && comp.contains(&b))
            .map(|(id, _)| id),
    );
    let forest = BridgeForest::build(&interior);
    let first = forest.comp_of[&g.other_end(e0, x)];
    let last = forest.comp_of[&g.other_end(ek, y)];
    let (comps, bridges) = forest.path(first, last);
    assert_eq!(
        comps.len(),
        forest.comps.len(),
        "chain interior must be a path of blocks"
    );

    let mut cut_edges = vec![e0];
    cut_edges.extend(bridges.iter().copied());
    cut_edges.push(ek);
    let mut blocks = Vec::new();
    for (i, &c) in comps.iter().enumerate() {
        let (vertices, edges) = &forest.comps[c];
        let bx = if i == 0 {
            g.other_end(e0, x)
        } else {
            block_attachment(g, bridges[i - 1], vertices)
        };
        let by = if i + 1 == comps.len() {
            g.other_end(ek, y)
        } else {
            block_attachment(g, bridges[i], vertices)
        };
        blocks.push(ChainBlock {
            vertices: vertices.clone(),
            edges: edges.clone(),
            x: bx,
            y: by,
        });
    }
    SubcubicChain { x, y, cut_edges, blocks }
}

/// Suppresses the endpoint `u` of `e` in G-e, producing `(G_u, f_u)` where
/// `f_u` joins the two other neighbors of `u`.
///
/// Expects G-e simple and 2-connected and `u` the smaller endpoint of `e`.
pub fn suppress_endpoint(
    g: &Multigraph,
    e: EdgeId,
    u: Vertex,
) -> Result<(Multigraph, EdgeId), ChainError> {
    let (a, b) = g.endpoints(e);
    if u != a.min(b) {
        return Err(ChainError::BadPrecondition("u must be the smaller endpoint of e"));
    }
    let rest = g.without_edge(e);
    if !rest.is_simple() {
        return Err(ChainError::BadPrecondition("G-e must be simple"));
    }
    if rest.connectivity_class() != ConnectivityClass::TwoConnected {
        return Err(ChainError::BadPrecondition("G-e must be 2-connected"));
    }
    if rest.degree(u) != 2 {
        return Err(ChainError::BadPrecondition("u must have degree 3 in G"));
    }
    let (g_u, f_u, _) = rest
        .suppress(&BTreeSet::from([u]))
        .expect("degree-2 vertices have two outside neighbors");
    Ok((g_u, f_u))
}

/// Which shape the Z decomposition takes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZMode {
    /// Z1 and Z2 are distinct components joined by the chain Y.
    Split,
    /// Z1 = Z2 = Z is one component holding all four attachments.
    Merged,
}

/// The structure around a root edge `e = uv` when `Scan(G,e) = (-1,1)`:
/// four attachment chains from u and v into the core, and the core itself.
#[derive(Clone, Debug)]
pub struct ZDecomposition {
    /// Split or merged core.
    pub mode: ZMode,
    /// The root endpoints, `u < v`.
    pub u: Vertex,
    /// See `u`.
    pub v: Vertex,
    /// Neighbors `u_1, u_2` of u other than v.
    pub u_n: [Vertex; 2],
    /// Neighbors `v_1, v_2` of v, labeled so disjoint paths pair `u_i`
    /// with `v_i`.
    pub v_n: [Vertex; 2],
    /// Attachments `u_1', u_2'` of the u-chains in Z1, Z2.
    pub u_att: [Vertex; 2],
    /// Attachments `v_1', v_2'` of the v-chains in Z1, Z2.
    pub v_att: [Vertex; 2],
    /// Chains `U_1, U_2` from u to `u_i'` (trivial when `u_i` lies in Z).
    pub chains_u: [SubcubicChain; 2],
    /// Chains `V_1, V_2` from v to `v_j'`.
    pub chains_v: [SubcubicChain; 2],
    /// The chain joining Z1 to Z2 (split mode only; possibly trivial).
    pub y: Option<SubcubicChain>,
    /// Vertices and edges of Z1.
    pub z1: (Vec<Vertex>, Vec<EdgeId>),
    /// Vertices and edges of Z2 (same as `z1` in merged mode).
    pub z2: (Vec<Vertex>, Vec<EdgeId>),
}

impl ZDecomposition {
    /// The core graph plus a fresh root edge `a-b`: Z in merged mode,
    /// Z1 + Y + Z2 in split mode.
    pub fn core_with_root(&self, host: &Multigraph, a: Vertex, b: Vertex) -> (Multigraph, EdgeId) {
        let mut vertices: BTreeSet<Vertex> = self.z1.0.iter().copied().collect();
        let mut edge_ids: BTreeSet<EdgeId> = self.z1.1.iter().copied().collect();
        if self.mode == ZMode::Split {
            vertices.extend(self.z2.0.iter().copied());
            edge_ids.extend(self.z2.1.iter().copied());
            let y = self.y.as_ref().expect("split mode carries Y");
            vertices.extend(y.interior_vertices());
            edge_ids.extend(y.all_edges());
        }
        let root = host.fresh_edge_id();
        let mut edges: BTreeMap<EdgeId, (Vertex, Vertex)> =
            edge_ids.into_iter().map(|id| (id, host.endpoints(id))).collect();
        edges.insert(root, (a, b));
        (Multigraph::assemble(vertices, edges), root)
    }

    /// The merged-mode core Z as a standalone graph.
    pub fn core_graph(&self, host: &Multigraph) -> Multigraph {
        assert_eq!(self.mode, ZMode::Merged);
        host.subgraph(self.z1.0.iter().copied(), self.z1.1.iter().copied())
    }

    /// Swaps the two sides of a split frame: the u-pair, the v-pair, and the
    /// cores move together so `u_i'` and `v_i'` stay inside `Z_i`.
    pub fn swap_split_frame(&mut self) {
        assert_eq!(self.mode, ZMode::Split);
        self.u_n.swap(0, 1);
        self.u_att.swap(0, 1);
        self.chains_u.swap(0, 1);
        self.v_n.swap(0, 1);
        self.v_att.swap(0, 1);
        self.chains_v.swap(0, 1);
        std::mem::swap(&mut self.z1, &mut self.z2);
        if let Some(y) = &mut self.y {
            *y = y.reversed();
        }
    }
}

/// Computes the Z decomposition at `e`.
///
/// Expects G subcubic with no parallel copy of `e`, G-e 2-connected, and
/// G-{u,v} connected (the `Scan = (-1,1)` situation).
pub fn z_decomposition(g: &Multigraph, e: EdgeId) -> Result<ZDecomposition, ChainError> {
    let (eu, ev) = g.endpoints(e);
    if eu == ev {
        return Err(ChainError::BadPrecondition("root edge must not be a loop"));
    }
    let (u, v) = (eu.min(ev), eu.max(ev));
    if g.edges_between(u, v).len() != 1 {
        return Err(ChainError::BadPrecondition("root edge must have no parallel copy"));
    }
    if g.without_edge(e).connectivity_class() != ConnectivityClass::TwoConnected {
        return Err(ChainError::BadPrecondition("G-e must be 2-connected"));
    }
    let neighbors = |w: Vertex| -> Vec<Vertex> {
        let mut out: Vec<Vertex> = g
            .incident(w)
            .iter()
            .filter(|&&(id, _)| id != e)
            .map(|&(_, t)| t)
            .collect();
        out.sort();
        out
    };
    let u_n_vec = neighbors(u);
    let v_n_vec = neighbors(v);
    if u_n_vec.len() != 2 || v_n_vec.len() != 2 {
        return Err(ChainError::BadPrecondition("root endpoints must have degree 3"));
    }
    let u_n = [u_n_vec[0], u_n_vec[1]];
    let h = g.without_vertices(&BTreeSet::from([u, v]));
    if !h.connected() {
        return Err(ChainError::BadPrecondition("G-{u,v} must be connected"));
    }

    let v_n = pair_by_disjoint_paths(&h, u_n, [v_n_vec[0], v_n_vec[1]]);

    let forest = BridgeForest::build(&h);
    let comp = |w: Vertex| forest.comp_of[&w];
    let z_idx = |i: usize| -> usize {
        let a = forest.median(comp(u_n[i]), comp(v_n[i]), comp(u_n[1 - i]));
        let b = forest.median(comp(u_n[i]), comp(v_n[i]), comp(v_n[1 - i]));
        assert_eq!(a, b, "the two median readings of Z_{} must agree", i + 1);
        a
    };
    let z_of = [z_idx(0), z_idx(1)];
    let mode = if z_of[0] == z_of[1] { ZMode::Merged } else { ZMode::Split };

    let attach_chain = |from: Vertex, n: Vertex, target: usize| -> (SubcubicChain, Vertex) {
        let first_edge = g.edges_between(from, n)[0];
        if comp(n) == target {
            let chain = SubcubicChain {
                x: from,
                y: n,
                cut_edges: vec![first_edge],
                blocks: Vec::new(),
            };
            (chain, n)
        } else {
            let (comps, bridges) = forest.path(comp(n), target);
            let att = block_attachment(g, *bridges.last().unwrap(), &forest.comps[target].0);
            let chain = chain_from_path(
                g,
                &forest,
                from,
                first_edge,
                &comps[..comps.len() - 1],
                &bridges,
                att,
            );
            (chain, att)
        }
    };
    let (cu1, ua1) = attach_chain(u, u_n[0], z_of[0]);
    let (cu2, ua2) = attach_chain(u, u_n[1], z_of[1]);
    let (cv1, va1) = attach_chain(v, v_n[0], z_of[0]);
    let (cv2, va2) = attach_chain(v, v_n[1], z_of[1]);

    let y = if mode == ZMode::Split {
        let (comps, bridges) = forest.path(z_of[0], z_of[1]);
        let x_att = block_attachment(g, bridges[0], &forest.comps[z_of[0]].0);
        let y_att =
            block_attachment(g, *bridges.last().unwrap(), &forest.comps[z_of[1]].0);
        Some(SubcubicChain {
            x: x_att,
            y: y_att,
            cut_edges: bridges.clone(),
            blocks: comps[1..comps.len() - 1]
                .iter()
                .map(|&c| {
                    let (vertices, edges) = &forest.comps[c];
                    ChainBlock {
                        vertices: vertices.clone(),
                        edges: edges.clone(),
                        x: block_attachment_of_prev(g, &comps, &bridges, c, &forest),
                        y: block_attachment_of_next(g, &comps, &bridges, c, &forest),
                    }
                })
                .collect(),
        })
    } else {
        None
    };

    let decomposition = ZDecomposition {
        mode,
        u,
        v,
        u_n,
        v_n,
        u_att: [ua1, ua2],
        v_att: [va1, va2],
        chains_u: [cu1, cu2],
        chains_v: [cv1, cv2],
        y,
        z1: forest.comps[z_of[0]].clone(),
        z2: forest.comps[z_of[1]].clone(),
    };
    verify_partition(g, e, &decomposition);
    Ok(decomposition)
}

fn block_attachment_of_prev(
    g: &Multigraph,
    comps: &[usize],
    bridges: &[EdgeId],
    c: usize,
    forest: &BridgeForest,
) -> Vertex {
    let pos = comps.iter().position(|&x| x == c).unwrap();
    block_attachment(g, bridges[pos - 1], &forest.comps[c].0)
}

fn block_attachment_of_next(
    g: &Multigraph,
    comps: &[usize],
    bridges: &[EdgeId],
    c: usize,
    forest: &BridgeForest,
) -> Vertex {
    let pos = comps.iter().position(|&x| x == c).unwrap();
    block_attachment(g, bridges[pos], &forest.comps[c].0)
}

/// Finds two vertex-disjoint paths in `h` from `{sources}` to `{targets}`
/// and returns the targets relabeled so path `i` joins `sources[i]` to the
/// returned `targets[i]`. Panics if no two disjoint paths exist.
fn pair_by_disjoint_paths(h: &Multigraph, sources: [Vertex; 2], targets: [Vertex; 2]) -> [Vertex; 2] {
    // Unit-capacity vertex-split flow network over h.
    // Node encoding: 2*idx = in, 2*idx + 1 = out; then source, sink.
    let vertex_at: Vec<Vertex> = h.vertices().collect();
    let index: BTreeMap<Vertex, usize> =
        vertex_at.iter().enumerate().map(|(i, &w)| (w, i)).collect();
    let nv = vertex_at.len();
    let source = 2 * nv;
    let sink = 2 * nv + 1;
    let mut cap: BTreeMap<(usize, usize), i32> = BTreeMap::new();
    let mut orig: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); 2 * nv + 2];
    let mut arc = |a: usize, b: usize, cap: &mut BTreeMap<(usize, usize), i32>| {
        cap.insert((a, b), 1);
        cap.entry((b, a)).or_insert(0);
        orig.insert((a, b));
        adj[a].insert(b);
        adj[b].insert(a);
    };
    for i in 0..nv {
        arc(2 * i, 2 * i + 1, &mut cap);
    }
    for (_, (a, b)) in h.edges() {
        let (ia, ib) = (index[&a], index[&b]);
        arc(2 * ia + 1, 2 * ib, &mut cap);
        arc(2 * ib + 1, 2 * ia, &mut cap);
    }
    for s in sources {
        arc(source, 2 * index[&s], &mut cap);
    }
    for t in targets {
        arc(2 * index[&t] + 1, sink, &mut cap);
    }

    let mut flow = 0;
    loop {
        // BFS over positive-residual arcs.
        let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
        let mut queue = VecDeque::from([source]);
        let mut seen = BTreeSet::from([source]);
        'bfs: while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if cap[&(x, y)] > 0 && seen.insert(y) {
                    parent.insert(y, x);
                    if y == sink {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
        }
        if !parent.contains_key(&sink) {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = parent[&y];
            *cap.get_mut(&(x, y)).unwrap() -= 1;
            *cap.get_mut(&(y, x)).unwrap() += 1;
            y = x;
        }
        flow += 1;
    }
    assert_eq!(flow, 2, "two vertex-disjoint attachment paths must exist");

    // Trace the net-flow path leaving sources[0]. An original arc carries
    // net flow exactly when its residual capacity dropped to 0.
    let carries = |a: usize, b: usize| orig.contains(&(a, b)) && cap[&(a, b)] == 0;
    let mut at_in = 2 * index[&sources[0]];
    let mut visited = BTreeSet::new();
    let endpoint = loop {
        visited.insert(at_in);
        let out = at_in + 1;
        if carries(out, sink) {
            break vertex_at[at_in / 2];
        }
        let next = adj[out]
            .iter()
            .copied()
            .find(|&y| y != sink && y % 2 == 0 && carries(out, y) && !visited.contains(&y));
        at_in = next.expect("flow path tracing must reach a target");
    };
    if endpoint == targets[0] {
        [targets[0], targets[1]]
    } else {
        assert_eq!(endpoint, targets[1], "path must end in a target");
        [targets[1], targets[0]]
    }
}

/// Checks that the decomposition partitions V(G) and E(G) exactly.
fn verify_partition(g: &Multigraph, e: EdgeId, d: &ZDecomposition) {
    let mut vertices: Vec<Vertex> = vec![d.u, d.v];
    let mut edges: Vec<EdgeId> = vec![e];
    for chain in d.chains_u.iter().chain(d.chains_v.iter()) {
        vertices.extend(chain.interior_vertices());
        edges.extend(chain.all_edges());
    }
    vertices.extend(d.z1.0.iter().copied());
    edges.extend(d.z1.1.iter().copied());
    if d.mode == ZMode::Split {
        vertices.extend(d.z2.0.iter().copied());
        edges.extend(d.z2.1.iter().copied());
        let y = d.y.as_ref().expect("split mode carries Y");
        vertices.extend(y.interior_vertices());
        edges.extend(y.all_edges());
    }
    vertices.sort();
    edges.sort();
    assert!(
        vertices.windows(2).all(|w| w[0] != w[1]),
        "Z decomposition parts must be vertex-disjoint"
    );
    assert!(
        edges.windows(2).all(|w| w[0] != w[1]),
        "Z decomposition parts must be edge-disjoint"
    );
    assert_eq!(vertices, g.vertices().collect::<Vec<_>>(), "vertex partition");
    assert_eq!(edges, g.edge_ids().collect::<Vec<_>>(), "edge partition");

    // Attachment sanity. Merged mode forces four distinct degree-2 core
    // vertices (a shared one would exceed degree 3). In split mode `u_i'`
    // and `v_i'` lie in Z_i and may coincide when Z_i is a singleton.
    if d.mode == ZMode::Merged {
        let mut atts = vec![d.u_att[0], d.u_att[1], d.v_att[0], d.v_att[1]];
        atts.sort();
        assert!(atts.windows(2).all(|w| w[0] != w[1]), "attachments must be distinct");
        let core_edges: BTreeSet<EdgeId> = d.z1.1.iter().copied().collect();
        for &a in &atts {
            let inside = g
                .incident(a)
                .iter()
                .filter(|&&(id, _)| core_edges.contains(&id))
                .count();
            assert_eq!(inside, 2, "attachments have degree 2 in the core");
        }
    } else {
        for i in 0..2 {
            let zi = if i == 0 { &d.z1.0 } else { &d.z2.0 };
            assert!(zi.contains(&d.u_att[i]), "u attachment lies in its core");
            assert!(zi.contains(&d.v_att[i]), "v attachment lies in its core");
        }
        let y = d.y.as_ref().expect("split mode carries Y");
        assert!(d.z1.0.contains(&y.x), "Y starts in Z1");
        assert!(d.z2.0.contains(&y.y), "Y ends in Z2");
    }
}
