//! The approximation suite: delta scanning and certified cover construction.
//!
//! `scan` computes a half-integral pair (Delta, Delta-hat) bounding the best
//! excess of covers through and avoiding a root edge; `algo` builds a cover
//! achieving exc <= (n + n2)/4 + Delta + 2 (through) or (n + n2)/4 +
//! Delta-hat (avoiding). The recursion follows the structure around the
//! root: loops, chains, parallel roots, rooted thetas (Delta = -1/2), the
//! Z decomposition (Delta = -1), and the suppressed-endpoint theta
//! (Delta = -3/2). `solve` runs both flags from the smallest edge and keeps
//! the better cover, certifying exc(G) <= (n + n2)/4 + 1.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::chains::{
    as_chain_closure, rooted_theta_split, suppress_endpoint, z_decomposition, ChainClosure,
    SubcubicChain, ZDecomposition, ZMode,
};
use crate::cover::{self, EvenCover, OpenPath};
use crate::multigraph::{ConnectivityClass, EdgeId, Multigraph, Vertex};
use crate::Half;

/// Errors on the public entry points. Violations detected deeper in the
/// recursion indicate decomposition bugs and abort instead.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ApproxError {
    /// The input pair is outside the algorithm's domain.
    #[error("bad input: {0}")]
    BadInput(&'static str),
    /// A stated precondition does not hold.
    #[error("precondition violated: {0}")]
    BadPrecondition(&'static str),
}

/// The scan certificate (Delta, Delta-hat) for a rooted pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeltaPair {
    /// Upper bound certificate for covers through the root, -2 convention.
    pub delta: Half,
    /// Upper bound certificate for covers avoiding the root.
    pub delta_hat: Half,
}

impl DeltaPair {
    const ZERO: DeltaPair = DeltaPair { delta: Half::ZERO, delta_hat: Half::ZERO };

    fn new(delta: Half, delta_hat: Half) -> DeltaPair {
        DeltaPair { delta, delta_hat }
    }
}

fn is_two_cycle(g: &Multigraph) -> bool {
    g.n() == 2 && g.m() == 2 && g.edge_ids().all(|e| !g.is_loop(e))
}

/// Whether (G,e) may enter the recursion: G is a loop, or G is 2-connected
/// (a 2-cycle counts) and G-e is simple.
fn valid_root_pair(g: &Multigraph, e: EdgeId) -> bool {
    if !g.has_edge(e) {
        return false;
    }
    if g.is_loop(e) {
        return g.n() == 1 && g.m() == 1;
    }
    if !g.without_edge(e).is_simple() {
        return false;
    }
    g.connectivity_class() == ConnectivityClass::TwoConnected || is_two_cycle(g)
}

/// (n + n2)/4 as a half-integer; defined since n + n2 is even whenever all
/// degrees are 2 or 3.
fn quarter(g: &Multigraph) -> Half {
    let (n, n2, _) = g.degree_profile();
    assert!((n + n2) % 2 == 0, "n + n2 must be even on recursion inputs");
    Half::halves(((n + n2) / 2) as i64)
}

/// Computes the certificate pair (Delta, Delta-hat) for (G,e) in linear
/// time per recursion level.
pub fn scan(g: &Multigraph, e: EdgeId) -> Result<DeltaPair, ApproxError> {
    if !valid_root_pair(g, e) {
        return Err(ApproxError::BadInput(
            "scan needs a loop, or a 2-connected graph with G-e simple",
        ));
    }
    Ok(scan_inner(g, e))
}

fn scan_inner(g: &Multigraph, e: EdgeId) -> DeltaPair {
    if g.is_loop(e) {
        return DeltaPair::new(Half::NEG_HALF, Half::halves(1));
    }
    if g.without_edge(e).connectivity_class() != ConnectivityClass::TwoConnected {
        // Chain case: sum the certificates of the chain-block closures.
        let chain = as_chain_closure(g, e).expect("non-2-connected remainder forms a chain");
        let mut total = DeltaPair::ZERO;
        for closure in chain.block_closures(g) {
            let ChainClosure::Graph { graph, root } = closure else {
                unreachable!("chain blocks close to graphs");
            };
            let p = scan_inner(&graph, root);
            total = DeltaPair::new(total.delta + p.delta, total.delta_hat + p.delta_hat);
        }
        return total;
    }
    let (a, b) = g.endpoints(e);
    let (u, v) = (a.min(b), a.max(b));
    if g.edges_between(u, v).len() > 1 {
        // Parallel root: suppress {u,v} and recenter.
        let (g2, e2, _) = g
            .suppress(&BTreeSet::from([u, v]))
            .expect("parallel roots leave one or two outside neighbors");
        assert!(valid_root_pair(&g2, e2), "parallel reduction must stay in the domain");
        let p = scan_inner(&g2, e2);
        return DeltaPair::new(p.delta - Half::halves(1), p.delta + Half::halves(3));
    }
    if !g.without_vertices(&BTreeSet::from([u, v])).connected() {
        return DeltaPair::new(Half::NEG_HALF, Half::halves(1));
    }
    let (g_u, f_u) = suppress_endpoint(g, e, u).expect("2-connected roots allow suppression");
    let (x, y) = g_u.endpoints(f_u);
    if !g_u.without_vertices(&BTreeSet::from([x, y])).connected() {
        return DeltaPair::new(Half::halves(-3), Half::halves(3));
    }
    DeltaPair::new(Half::from_int(-1), Half::from_int(1))
}

/// Certificate pair of a chain via its closure; trivial chains contribute
/// (0, 0).
fn chain_pair(host: &Multigraph, chain: &SubcubicChain) -> DeltaPair {
    match chain.closure(host) {
        ChainClosure::Trivial => DeltaPair::ZERO,
        ChainClosure::Graph { graph, root } => scan_inner(&graph, root),
    }
}

/// The link edges a threaded chain contributes to the grand cycle: its two
/// outer cut edges. The inner cut edges travel inside the chain's closure,
/// and a trivial chain is one link on its own.
fn chain_links(chain: &SubcubicChain) -> Vec<EdgeId> {
    if chain.is_trivial() {
        vec![chain.first_cut()]
    } else {
        vec![chain.first_cut(), chain.last_cut()]
    }
}

/// Builds an even cover of G through e (flag = true, exc <= (n+n2)/4 +
/// Delta + 2) or avoiding e (flag = false, exc <= (n+n2)/4 + Delta-hat).
pub fn algo(g: &Multigraph, e: EdgeId, flag: bool) -> Result<EvenCover, ApproxError> {
    if !valid_root_pair(g, e) {
        return Err(ApproxError::BadInput(
            "algo needs a loop, or a 2-connected graph with G-e simple",
        ));
    }
    Ok(algo_inner(g, e, flag))
}

fn algo_inner(g: &Multigraph, e: EdgeId, flag: bool) -> EvenCover {
    assert!(
        valid_root_pair(g, e),
        "recursion must preserve the rooted-pair invariant"
    );
    let pair = scan_inner(g, e);
    let (f, certified) = build(g, e, flag, pair);
    assert_eq!(f.contains(e), flag, "the flag dictates membership of the root edge");
    let bound = if flag {
        quarter(g) + certified + Half::from_int(2)
    } else {
        quarter(g) + pair.delta_hat
    };
    assert!(
        Half::from_int(f.exc()) <= bound,
        "certified excess bound violated"
    );
    f
}

fn build(g: &Multigraph, e: EdgeId, flag: bool, pair: DeltaPair) -> (EvenCover, Half) {
    if g.is_loop(e) {
        let edges = if flag { vec![e] } else { vec![] };
        let f = cover::validate(g, edges).expect("loop covers are even");
        return (f, pair.delta);
    }
    if g.without_edge(e).connectivity_class() != ConnectivityClass::TwoConnected {
        return (build_chain(g, e, flag), pair.delta);
    }
    let (a, b) = g.endpoints(e);
    let (u, v) = (a.min(b), a.max(b));
    if g.edges_between(u, v).len() > 1 {
        return (build_parallel(g, e, u, v, flag), if flag { pair.delta } else { pair.delta_hat });
    }
    if !flag {
        return (bec_inner(g, e), pair.delta_hat);
    }
    if pair.delta == Half::NEG_HALF {
        ec_half(g, e)
    } else if pair.delta == Half::from_int(-1) {
        ec_one(g, e)
    } else if pair.delta == Half::halves(-3) {
        ec_three_halves(g, e)
    } else {
        unreachable!("scan yields -1/2, -1, or -3/2 at 2-connected roots");
    }
}

fn build_chain(g: &Multigraph, e: EdgeId, flag: bool) -> EvenCover {
    let chain = as_chain_closure(g, e).expect("chain branch");
    let closures = chain.block_closures(g);
    if flag {
        let mut asm = Assembly::new();
        asm.links.push(e);
        asm.links.extend(chain.cut_edges.iter().copied());
        for closure in &closures {
            let ChainClosure::Graph { graph, root } = closure else {
                unreachable!("chain blocks close to graphs");
            };
            asm.thread_graph(graph, *root);
        }
        asm.finish(g)
    } else {
        let mut edges: BTreeSet<EdgeId> = BTreeSet::new();
        let mut sum = 0;
        for closure in &closures {
            let ChainClosure::Graph { graph, root } = closure else {
                unreachable!("chain blocks close to graphs");
            };
            let fi = algo_inner(graph, *root, false);
            sum += fi.exc();
            edges.extend(fi.edges());
        }
        let f = cover::validate(g, edges).expect("blockwise union is an even cover");
        assert_eq!(f.exc(), sum, "avoiding covers add up blockwise");
        f
    }
}

fn build_parallel(g: &Multigraph, e: EdgeId, u: Vertex, v: Vertex, flag: bool) -> EvenCover {
    let twin = g
        .edges_between(u, v)
        .into_iter()
        .find(|&x| x != e)
        .expect("parallel branch has a twin edge");
    let (g2, e2, _) = g
        .suppress(&BTreeSet::from([u, v]))
        .expect("parallel roots leave one or two outside neighbors");
    let outside = |w: Vertex| -> EdgeId {
        g.incident(w)
            .iter()
            .map(|&(id, _)| id)
            .find(|&id| id != e && id != twin)
            .expect("parallel root endpoints have degree 3")
    };
    let mut asm = Assembly::new();
    asm.links.push(outside(u));
    asm.links.push(if flag { e } else { twin });
    asm.links.push(outside(v));
    asm.extra.extend([u, v]);
    asm.thread_graph(&g2, e2);
    asm.finish(g)
}

/// The avoiding cover of Alg. 3: suppress the smaller root endpoint, route
/// a through-cover over the replacement edge, and reinstate the endpoint.
fn bec_inner(g: &Multigraph, e: EdgeId) -> EvenCover {
    let (a, b) = g.endpoints(e);
    let u = a.min(b);
    let (g_u, f_u) = suppress_endpoint(g, e, u).expect("bec needs G-e 2-connected");
    let (x, y) = g_u.endpoints(f_u);
    let link_to = |w: Vertex| -> EdgeId {
        g.edges_between(u, w)
            .into_iter()
            .find(|&id| id != e)
            .expect("u keeps one edge toward each replacement endpoint")
    };
    let mut asm = Assembly::new();
    asm.links.push(link_to(x));
    asm.links.push(link_to(y));
    asm.extra.insert(u);
    asm.thread_graph(&g_u, f_u);
    asm.finish(g)
}

fn ec_half(g: &Multigraph, e: EdgeId) -> (EvenCover, Half) {
    let (c1, c2) = rooted_theta_split(g, e).expect("Delta = -1/2 implies a rooted theta");
    let p1 = chain_pair(g, &c1);
    let p2 = chain_pair(g, &c2);
    let (threaded, aside) = if p1.delta + p2.delta_hat <= Half::ZERO {
        (c1, c2)
    } else {
        assert!(
            p2.delta + p1.delta_hat <= Half::ZERO,
            "one orientation of the theta chains is always feasible"
        );
        (c2, c1)
    };
    (thread_theta(g, e, &threaded, &aside), Half::NEG_HALF)
}

/// Threads one chain of a rooted theta through the root edge and covers the
/// other chain aside.
fn thread_theta(
    g: &Multigraph,
    e: EdgeId,
    threaded: &SubcubicChain,
    aside: &SubcubicChain,
) -> EvenCover {
    let mut asm = Assembly::new();
    asm.links.push(e);
    asm.links.extend(chain_links(threaded));
    asm.extra.extend([threaded.x, threaded.y]);
    asm.thread_chain(g, threaded);
    asm.aside_chain(g, aside);
    asm.finish(g)
}

fn ec_one(g: &Multigraph, e: EdgeId) -> (EvenCover, Half) {
    let mut d = z_decomposition(g, e).expect("Delta = -1 admits the Z decomposition");
    let pair_of = |d: &ZDecomposition, side: bool, i: usize| -> DeltaPair {
        let chain = if side { &d.chains_u[i] } else { &d.chains_v[i] };
        chain_pair(g, chain)
    };
    let f = match d.mode {
        ZMode::Split => {
            let score = |d: &ZDecomposition| {
                pair_of(d, true, 0).delta
                    + pair_of(d, false, 1).delta
                    + pair_of(d, true, 1).delta_hat
                    + pair_of(d, false, 0).delta_hat
            };
            if score(&d) > Half::ZERO {
                d.swap_split_frame();
                assert!(
                    score(&d) <= Half::ZERO,
                    "one orientation of the split frame is always feasible"
                );
            }
            let (zc, root) = d.core_with_root(g, d.u_att[0], d.v_att[1]);
            let fz = algo_inner(&zc, root, true);
            check_z_accounting(g, &d, &zc);
            thread_z(g, e, &d, 0, 1, &zc, root, fz)
        }
        ZMode::Merged => {
            let pu = [pair_of(&d, true, 0), pair_of(&d, true, 1)];
            let pv = [pair_of(&d, false, 0), pair_of(&d, false, 1)];
            let su = [pu[0].delta + pu[1].delta_hat, pu[1].delta + pu[0].delta_hat];
            let sv = [pv[0].delta + pv[1].delta_hat, pv[1].delta + pv[0].delta_hat];
            let z = d.core_graph(g);
            let (a, b, fz, zc, root) = if su[0].min(su[1]) + sv[0].max(sv[1]) <= Half::ZERO {
                let a = if su[0] <= su[1] { 0 } else { 1 };
                let (i, f, zi, ei) = subroutine_inner(&z, d.u_att[a], [d.v_att[0], d.v_att[1]]);
                (a, i - 1, f, zi, ei)
            } else {
                let b = if sv[0] <= sv[1] { 0 } else { 1 };
                let (i, f, zi, ei) = subroutine_inner(&z, d.v_att[b], [d.u_att[0], d.u_att[1]]);
                (i - 1, b, f, zi, ei)
            };
            assert!(
                su[a] + sv[b] <= Half::ZERO,
                "the chosen u/v orientation must be feasible"
            );
            check_z_accounting(g, &d, &zc);
            thread_z(g, e, &d, a, b, &zc, root, fz)
        }
    };
    (f, Half::from_int(-1))
}

/// Threads the grand cycle u -> U_a -> core path -> V_b -> v -> e -> u and
/// lays the remaining chains aside.
#[allow(clippy::too_many_arguments)]
fn thread_z(
    g: &Multigraph,
    e: EdgeId,
    d: &ZDecomposition,
    a: usize,
    b: usize,
    zc: &Multigraph,
    root: EdgeId,
    fz: EvenCover,
) -> EvenCover {
    let mut asm = Assembly::new();
    asm.links.push(e);
    asm.links.extend(chain_links(&d.chains_u[a]));
    asm.links.extend(chain_links(&d.chains_v[b]));
    asm.extra.extend([d.u, d.v]);
    asm.thread_chain(g, &d.chains_u[a]);
    asm.thread_cover(zc, fz, root);
    asm.thread_chain(g, &d.chains_v[b]);
    asm.aside_chain(g, &d.chains_u[1 - a]);
    asm.aside_chain(g, &d.chains_v[1 - b]);
    asm.finish(g)
}

/// Checks the size bookkeeping of the Z decomposition: the four chain
/// closures and the rooted core partition G up to the endpoints {u,v} and
/// the two attachments whose chain edges the core replaces by the root.
fn check_z_accounting(g: &Multigraph, d: &ZDecomposition, zc: &Multigraph) {
    let mut n_sum = 0usize;
    let mut n2_sum = 0usize;
    for chain in d.chains_u.iter().chain(d.chains_v.iter()) {
        if let ChainClosure::Graph { graph, .. } = chain.closure(g) {
            let (n, n2, _) = graph.degree_profile();
            n_sum += n;
            n2_sum += n2;
        }
    }
    let (zn, zn2, _) = zc.degree_profile();
    let (n, n2, _) = g.degree_profile();
    assert_eq!(n, n_sum + zn + 2, "Z decomposition vertex accounting");
    assert_eq!(n2 + 2, n2_sum + zn2, "Z decomposition degree-2 accounting");
}

/// Alg. 4: augment Z by one of the two candidate root edges and build a
/// through-cover with exc <= (n + n2)/4 + 1 over the augmented graph.
/// Returns the 1-based chosen index, the cover, and the augmented pair.
fn subroutine_inner(
    z: &Multigraph,
    u: Vertex,
    targets: [Vertex; 2],
) -> (usize, EvenCover, Multigraph, EdgeId) {
    let candidates: Vec<(Multigraph, EdgeId)> =
        targets.iter().map(|&t| z.with_edge(u, t)).collect();
    let pairs: Vec<DeltaPair> =
        candidates.iter().map(|(zi, ei)| scan_inner(zi, *ei)).collect();

    for i in 0..2 {
        if pairs[i].delta <= Half::from_int(-1) {
            let (zi, ei) = &candidates[i];
            let f = algo_inner(zi, *ei, true);
            assert!(
                Half::from_int(f.exc()) <= quarter(zi) + Half::from_int(1),
                "subroutine bound"
            );
            return (i + 1, f, zi.clone(), *ei);
        }
    }
    assert!(
        pairs.iter().all(|p| p.delta == Half::NEG_HALF),
        "non-reducing candidates are rooted thetas"
    );
    let splits: Vec<(SubcubicChain, SubcubicChain)> = candidates
        .iter()
        .map(|(zi, ei)| rooted_theta_split(zi, *ei).expect("Delta = -1/2 implies a theta"))
        .collect();
    for (i, a, b) in [(0, 0, 1), (0, 1, 0), (1, 0, 1), (1, 1, 0)] {
        let (zi, ei) = &candidates[i];
        let (ca, cb) = (&split_part(&splits[i], a), &split_part(&splits[i], b));
        let (pa, pb) = (chain_pair(zi, ca), chain_pair(zi, cb));
        if pa.delta + pb.delta_hat <= Half::NEG_HALF {
            let f = thread_theta(zi, *ei, ca, cb);
            assert!(
                Half::from_int(f.exc()) <= quarter(zi) + Half::from_int(1),
                "subroutine bound"
            );
            return (i + 1, f, zi.clone(), *ei);
        }
    }
    unreachable!("one candidate split always satisfies the -1/2 margin");
}

fn split_part(split: &(SubcubicChain, SubcubicChain), idx: usize) -> SubcubicChain {
    if idx == 0 {
        split.0.clone()
    } else {
        split.1.clone()
    }
}

fn ec_three_halves(g: &Multigraph, e: EdgeId) -> (EvenCover, Half) {
    let (a0, b0) = g.endpoints(e);
    let (u, v) = (a0.min(b0), a0.max(b0));
    let (g_u, f_u) = suppress_endpoint(g, e, u).expect("Delta = -3/2 allows suppression");
    let (p, q) = g_u.endpoints(f_u);
    // Alg. 7 preconditions, verified rather than assumed. On failure fall
    // back to the Delta = -1 construction with its weaker certificate.
    if g_u.edges_between(p, q).len() != 1 || !g_u.without_edge(f_u).is_simple() {
        return (ec_one(g, e).0, Half::from_int(-1));
    }
    let Some((ca, cb)) = rooted_theta_split(&g_u, f_u) else {
        return (ec_one(g, e).0, Half::from_int(-1));
    };

    let has_v = |c: &SubcubicChain| c.interior_vertices().any(|w| w == v);
    let mut c1 = if has_v(&ca) { ca.clone() } else { cb.clone() };
    let c2 = if has_v(&ca) { cb } else { ca };
    assert!(has_v(&c1), "the root's other endpoint lies inside one chain");

    let slice = |c: &SubcubicChain| -> (usize, SubcubicChain, SubcubicChain) {
        let j = c
            .blocks
            .iter()
            .position(|b| b.vertices.binary_search(&v).is_ok())
            .expect("v sits in a block of C1");
        let d1 = SubcubicChain {
            x: c.x,
            y: c.blocks[j].x,
            cut_edges: c.cut_edges[..=j].to_vec(),
            blocks: c.blocks[..j].to_vec(),
        };
        let d2 = SubcubicChain {
            x: c.blocks[j].y,
            y: c.y,
            cut_edges: c.cut_edges[j + 1..].to_vec(),
            blocks: c.blocks[j + 1..].to_vec(),
        };
        (j, d1, d2)
    };
    let (mut j, mut d1, mut d2) = slice(&c1);
    let (pd1, pd2) = (chain_pair(g, &d1), chain_pair(g, &d2));
    if pd1.delta + pd2.delta_hat > Half::ZERO {
        c1 = c1.reversed();
        (j, d1, d2) = slice(&c1);
        let (pd1, pd2) = (chain_pair(g, &d1), chain_pair(g, &d2));
        assert!(
            pd1.delta + pd2.delta_hat <= Half::ZERO,
            "one orientation of the D chains is always feasible"
        );
    }
    let (u1, u2) = (c1.x, c1.y);
    let bl = &c1.blocks[j];

    // B_l plus the edge v'v (a loop when B_l is the singleton {v}).
    let bl_root = g.fresh_edge_id();
    let mut bl_edges: std::collections::BTreeMap<EdgeId, (Vertex, Vertex)> =
        bl.edges.iter().map(|&id| (id, g.endpoints(id))).collect();
    bl_edges.insert(bl_root, (bl.x, v));
    let bl_graph =
        Multigraph::assemble(bl.vertices.iter().copied().collect(), bl_edges);

    let mut asm = Assembly::new();
    asm.links.push(e);
    asm.links.extend(chain_links(&d1));
    asm.links.push(g.edges_between(u, u2)[0]);
    asm.links.extend(chain_links(&c2));
    asm.extra.extend([u, u1, u2]);
    asm.thread_chain(g, &d1);
    asm.thread_graph(&bl_graph, bl_root);
    asm.thread_chain(g, &c2);
    asm.aside_chain(g, &d2);
    (asm.finish(g), Half::halves(-3))
}

/// Accumulates threaded path fragments, aside cover edges, and the excess
/// bookkeeping of one splice: exc(result) = 2 + sum over threaded parts of
/// (exc - 2) + sum over aside parts of exc.
struct Assembly {
    segments: Vec<OpenPath>,
    links: Vec<EdgeId>,
    extra: BTreeSet<Vertex>,
    aside_edges: BTreeSet<EdgeId>,
    cyclic_sum: i64,
    acyclic_sum: i64,
}

impl Assembly {
    fn new() -> Assembly {
        Assembly {
            segments: Vec::new(),
            links: Vec::new(),
            extra: BTreeSet::new(),
            aside_edges: BTreeSet::new(),
            cyclic_sum: 0,
            acyclic_sum: 0,
        }
    }

    /// Threads an existing through-cover of `graph` by opening it at `root`.
    fn thread_cover(&mut self, graph: &Multigraph, f: EvenCover, root: EdgeId) {
        self.cyclic_sum += f.exc() - 2;
        let (path, rem) = cover::open_at(graph, &f, root).expect("through-covers contain the root");
        self.segments.push(path);
        self.aside_edges.extend(rem.edges());
    }

    fn thread_graph(&mut self, graph: &Multigraph, root: EdgeId) {
        let f = algo_inner(graph, root, true);
        self.thread_cover(graph, f, root);
    }

    fn thread_chain(&mut self, host: &Multigraph, chain: &SubcubicChain) {
        match chain.closure(host) {
            ChainClosure::Trivial => {}
            ChainClosure::Graph { graph, root } => self.thread_graph(&graph, root),
        }
    }

    fn aside_chain(&mut self, host: &Multigraph, chain: &SubcubicChain) {
        match chain.closure(host) {
            ChainClosure::Trivial => {}
            ChainClosure::Graph { graph, root } => {
                let f = algo_inner(&graph, root, false);
                self.acyclic_sum += f.exc();
                self.aside_edges.extend(f.edges());
            }
        }
    }

    fn finish(self, host: &Multigraph) -> EvenCover {
        let cycle = cover::splice_cycle(host, &self.segments, &self.links, &self.extra)
            .expect("threaded fragments close into one cycle");
        let f = cover::validate(host, cycle.into_iter().chain(self.aside_edges))
            .expect("assembled edge set is an even cover");
        assert_eq!(
            f.exc(),
            2 + self.cyclic_sum + self.acyclic_sum,
            "splice arithmetic identity"
        );
        f
    }
}

/// Builds a cover of G through e with exc <= (n + n2)/4 + Delta + 2, for
/// the stated scan value Delta in {-1/2, -1, -3/2}.
pub fn ec(g: &Multigraph, e: EdgeId, delta: Half) -> Result<EvenCover, ApproxError> {
    if !valid_root_pair(g, e) || g.is_loop(e) {
        return Err(ApproxError::BadPrecondition("ec needs a 2-connected rooted pair"));
    }
    let (a, b) = g.endpoints(e);
    if g.edges_between(a, b).len() > 1 {
        return Err(ApproxError::BadPrecondition("ec forbids edges parallel to the root"));
    }
    if g.without_edge(e).connectivity_class() != ConnectivityClass::TwoConnected {
        return Err(ApproxError::BadPrecondition("ec needs G-e 2-connected"));
    }
    if scan_inner(g, e).delta != delta {
        return Err(ApproxError::BadPrecondition("stated delta disagrees with scan"));
    }
    let (f, _) = if delta == Half::NEG_HALF {
        ec_half(g, e)
    } else if delta == Half::from_int(-1) {
        ec_one(g, e)
    } else if delta == Half::halves(-3) {
        ec_three_halves(g, e)
    } else {
        return Err(ApproxError::BadPrecondition("delta must be -1/2, -1, or -3/2"));
    };
    Ok(f)
}

/// Builds a cover of G avoiding e with exc <= (n + n2)/4 + Delta-hat.
pub fn bec(g: &Multigraph, e: EdgeId) -> Result<EvenCover, ApproxError> {
    if !valid_root_pair(g, e) || g.is_loop(e) {
        return Err(ApproxError::BadPrecondition("bec needs a 2-connected rooted pair"));
    }
    if g.without_edge(e).connectivity_class() != ConnectivityClass::TwoConnected {
        return Err(ApproxError::BadPrecondition("bec needs G-e 2-connected"));
    }
    Ok(bec_inner(g, e))
}

/// Alg. 4 entry point: augments Z by u-v1 or u-v2 and returns the chosen
/// index with a through-cover of the augmented graph.
pub fn subroutine(
    z: &Multigraph,
    u: Vertex,
    v1: Vertex,
    v2: Vertex,
) -> Result<(usize, EvenCover), ApproxError> {
    if !z.is_simple() || !z.is_subcubic() {
        return Err(ApproxError::BadPrecondition("subroutine needs a simple subcubic core"));
    }
    if z.connectivity_class() != ConnectivityClass::TwoConnected {
        return Err(ApproxError::BadPrecondition("subroutine needs a 2-connected core"));
    }
    if u == v1 || u == v2 || v1 == v2 {
        return Err(ApproxError::BadPrecondition("attachments must be distinct"));
    }
    for w in [u, v1, v2] {
        if !z.has_vertex(w) || z.degree(w) != 2 {
            return Err(ApproxError::BadPrecondition("attachments must have degree 2"));
        }
    }
    let (i, f, _, _) = subroutine_inner(z, u, [v1, v2]);
    Ok((i, f))
}

/// Runs the algorithm with both flags from the smallest edge id and keeps
/// the cover of smaller excess (ties prefer the through-cover), certifying
/// exc(G) <= (n + n2)/4 + 1.
pub fn solve(g: &Multigraph) -> Result<EvenCover, ApproxError> {
    if !g.is_simple() {
        return Err(ApproxError::BadInput("solve needs a simple graph"));
    }
    if !g.is_subcubic() {
        return Err(ApproxError::BadInput("solve needs a subcubic graph"));
    }
    if g.n() < 3 {
        return Err(ApproxError::BadInput("solve needs at least 3 vertices"));
    }
    if g.connectivity_class() != ConnectivityClass::TwoConnected {
        return Err(ApproxError::BadInput("solve needs a 2-connected graph"));
    }
    let e = g.smallest_edge().expect("2-connected graphs have edges");
    let through = algo_inner(g, e, true);
    let avoiding = algo_inner(g, e, false);
    let f = if through.exc() <= avoiding.exc() { through } else { avoiding };
    assert!(
        Half::from_int(f.exc()) <= quarter(g) + Half::from_int(1),
        "solver bound"
    );
    Ok(f)
}
