//! Brute-force computation of minimum even-cover excess on small graphs.
//!
//! An even cover is a spanning subgraph with all degrees 0 or 2; its excess
//! is twice the number of cycles plus the number of isolated vertices. The
//! oracle enumerates all even covers by deciding edges one at a time and
//! pruning as soon as a vertex's degree is forced out of {0, 2}.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::chains::{rooted_theta_split, ChainClosure, SubcubicChain};
use crate::multigraph::{EdgeId, Multigraph, Vertex};
use crate::Half;

/// Default cap on vertex count for exhaustive enumeration.
pub const DEFAULT_LIMIT: usize = 16;

/// Errors from the oracle.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    /// The graph exceeds the enumeration limit.
    #[error("graph has {n} vertices, above the oracle limit {limit}")]
    TooLarge {
        /// Vertex count of the input.
        n: usize,
        /// The limit in force.
        limit: usize,
    },
    /// The graph is not connected.
    #[error("oracle needs a connected graph")]
    Disconnected,
}

/// Exact excess values for a graph, with optional per-edge refinements.
#[derive(Clone, Debug)]
pub struct ExactReport {
    /// exc(G): minimum excess over all even covers.
    pub exc: i64,
    /// exc(G,e): minimum excess over covers containing e, minus 2.
    pub exc_with: Option<i64>,
    /// exc-hat(G,e): minimum excess over covers avoiding e.
    pub exc_without: Option<i64>,
    /// delta(G,e) = exc(G,e) - (n + n2)/4, when (n + n2) is even.
    pub delta: Option<Half>,
    /// delta-hat(G,e) = exc-hat(G,e) - (n + n2)/4, when (n + n2) is even.
    pub delta_hat: Option<Half>,
    /// An optimal even cover (edge ids).
    pub witness: Vec<EdgeId>,
    /// An optimal even cover containing e.
    pub witness_with: Option<Vec<EdgeId>>,
    /// An optimal even cover avoiding e.
    pub witness_without: Option<Vec<EdgeId>>,
}

/// Structural classification of a rooted pair (G,e).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyReport {
    /// Whether G-{u,v} splits (G,e) into two chains.
    pub is_rooted_theta: bool,
    /// Whether delta(G,e) + delta-hat(G,e) = 0.
    pub tight: bool,
    /// Whether the two chain closures have equal delta (rooted thetas only).
    pub balanced: Option<bool>,
    /// Whether both chains are minimal: tight with closure delta -1/2.
    pub minimal: Option<bool>,
}

/// Computes exc(G) and, when `e` is given, exc(G,e) and exc-hat(G,e) with
/// deltas and witnesses, by exhaustive enumeration with [`DEFAULT_LIMIT`].
pub fn exact(g: &Multigraph, e: Option<EdgeId>) -> Result<ExactReport, OracleError> {
    exact_with_limit(g, e, DEFAULT_LIMIT)
}

/// [`exact`] with an explicit vertex-count limit.
pub fn exact_with_limit(
    g: &Multigraph,
    e: Option<EdgeId>,
    limit: usize,
) -> Result<ExactReport, OracleError> {
    if g.n() > limit {
        return Err(OracleError::TooLarge { n: g.n(), limit });
    }
    if !g.connected() {
        return Err(OracleError::Disconnected);
    }
    if let Some(id) = e {
        assert!(g.has_edge(id), "refinement edge must belong to the graph");
    }

    let edges: Vec<(EdgeId, (Vertex, Vertex))> = g.edges().collect();
    let index_of: BTreeMap<Vertex, usize> =
        g.vertices().enumerate().map(|(i, w)| (w, i)).collect();
    let n = index_of.len();
    // Position of the last edge touching each vertex; once that edge is
    // decided the vertex degree is final.
    let mut last_touch = vec![usize::MAX; n];
    for (pos, &(_, (a, b))) in edges.iter().enumerate() {
        last_touch[index_of[&a]] = pos;
        last_touch[index_of[&b]] = pos;
    }

    let mut search = Search {
        edges: &edges,
        index_of: &index_of,
        last_touch: &last_touch,
        degree: vec![0u8; n],
        chosen: Vec::with_capacity(edges.len()),
        target: e,
        best: None,
        best_with: None,
        best_without: None,
    };
    search.run(0);

    let (exc, witness) = search.best.expect("every graph has the empty cover");
    let to_ids = |mask: &Vec<bool>| -> Vec<EdgeId> {
        mask.iter()
            .zip(edges.iter())
            .filter(|&(&take, _)| take)
            .map(|(_, &(id, _))| id)
            .collect()
    };
    let witness = to_ids(&witness);
    let (mut exc_with, mut exc_without) = (None, None);
    let (mut witness_with, mut witness_without) = (None, None);
    if e.is_some() {
        if let Some((v, mask)) = search.best_with {
            exc_with = Some(v - 2);
            witness_with = Some(to_ids(&mask));
        }
        if let Some((v, mask)) = search.best_without {
            exc_without = Some(v);
            witness_without = Some(to_ids(&mask));
        }
    }

    let (nn, n2, _) = g.degree_profile();
    let quarters_x4 = (nn + n2) as i64;
    let halves = |value: i64| -> Option<Half> {
        (quarters_x4 % 2 == 0).then(|| Half::halves(2 * value - quarters_x4 / 2))
    };
    let delta = exc_with.and_then(halves);
    let delta_hat = exc_without.and_then(halves);

    Ok(ExactReport {
        exc,
        exc_with,
        exc_without,
        delta,
        delta_hat,
        witness,
        witness_with,
        witness_without,
    })
}

struct Search<'a> {
    edges: &'a [(EdgeId, (Vertex, Vertex))],
    index_of: &'a BTreeMap<Vertex, usize>,
    last_touch: &'a [usize],
    degree: Vec<u8>,
    chosen: Vec<bool>,
    target: Option<EdgeId>,
    best: Option<(i64, Vec<bool>)>,
    best_with: Option<(i64, Vec<bool>)>,
    best_without: Option<(i64, Vec<bool>)>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize) {
        if pos == self.edges.len() {
            self.record();
            return;
        }
        let (_, (a, b)) = self.edges[pos];
        let (ia, ib) = (self.index_of[&a], self.index_of[&b]);

        // Skip the edge.
        self.chosen.push(false);
        if self.vertex_ok(ia, pos) && (ia == ib || self.vertex_ok(ib, pos)) {
            self.run(pos + 1);
        }
        self.chosen.pop();

        // Take the edge.
        let gain = if ia == ib { 2 } else { 1 };
        if self.degree[ia] + gain <= 2 && (ia == ib || self.degree[ib] < 2) {
            self.degree[ia] += gain;
            if ia != ib {
                self.degree[ib] += 1;
            }
            self.chosen.push(true);
            if self.vertex_ok(ia, pos) && (ia == ib || self.vertex_ok(ib, pos)) {
                self.run(pos + 1);
            }
            self.chosen.pop();
            self.degree[ia] -= gain;
            if ia != ib {
                self.degree[ib] -= 1;
            }
        }
    }

    fn vertex_ok(&self, iv: usize, pos: usize) -> bool {
        self.last_touch[iv] != pos || matches!(self.degree[iv], 0 | 2)
    }

    fn record(&mut self) {
        let value = self.excess();
        let update = |slot: &mut Option<(i64, Vec<bool>)>, chosen: &[bool]| {
            if slot.as_ref().is_none_or(|(best, _)| value < *best) {
                *slot = Some((value, chosen.to_vec()));
            }
        };
        update(&mut self.best, &self.chosen);
        if let Some(target) = self.target {
            let pos = self
                .edges
                .iter()
                .position(|&(id, _)| id == target)
                .expect("target edge present");
            if self.chosen[pos] {
                update(&mut self.best_with, &self.chosen);
            } else {
                update(&mut self.best_without, &self.chosen);
            }
        }
    }

    /// Excess of the currently chosen spanning subgraph: twice the number of
    /// cycles plus the number of isolated vertices.
    fn excess(&self) -> i64 {
        let isolated = self.degree.iter().filter(|&&d| d == 0).count() as i64;
        // Count cycle components among chosen edges.
        let mut comp: BTreeMap<usize, usize> = BTreeMap::new();
        let mut cycles = 0i64;
        let mut next = 0usize;
        let find = |comp: &mut BTreeMap<usize, usize>, mut x: usize| -> usize {
            while comp[&x] != x {
                let up = comp[&comp[&x]];
                comp.insert(x, up);
                x = up;
            }
            x
        };
        for (pos, &(_, (a, b))) in self.edges.iter().enumerate() {
            if !self.chosen[pos] {
                continue;
            }
            let (ia, ib) = (self.index_of[&a], self.index_of[&b]);
            for i in [ia, ib] {
                comp.entry(i).or_insert_with(|| {
                    next = i;
                    i
                });
            }
            let _ = next;
            let (ra, rb) = (find(&mut comp, ia), find(&mut comp, ib));
            if ra == rb {
                cycles += 1;
            } else {
                comp.insert(ra, rb);
            }
        }
        2 * cycles + isolated
    }
}

/// Closure deltas `(delta, delta_hat)` of a chain, via exhaustive search on
/// the closure graph; the trivial chain contributes (0, 0).
pub fn chain_closure_deltas(
    host: &Multigraph,
    chain: &SubcubicChain,
    limit: usize,
) -> Result<(Half, Half), OracleError> {
    match chain.closure(host) {
        ChainClosure::Trivial => Ok((Half::ZERO, Half::ZERO)),
        ChainClosure::Graph { graph, root } => {
            let report = exact_with_limit(&graph, Some(root), limit)?;
            Ok((
                report.delta.expect("closures have n + n2 even"),
                report.delta_hat.expect("closures have n + n2 even"),
            ))
        }
    }
}

/// Classifies (G,e): tightness, and for rooted thetas whether the two chain
/// closures are balanced and whether both chains are minimal.
///
/// Expects e not a loop with G-e simple. Uses [`DEFAULT_LIMIT`].
pub fn classify(g: &Multigraph, e: EdgeId) -> Result<ClassifyReport, OracleError> {
    classify_with_limit(g, e, DEFAULT_LIMIT)
}

/// [`classify`] with an explicit vertex-count limit.
pub fn classify_with_limit(
    g: &Multigraph,
    e: EdgeId,
    limit: usize,
) -> Result<ClassifyReport, OracleError> {
    let report = exact_with_limit(g, Some(e), limit)?;
    let tight = match (report.delta, report.delta_hat) {
        (Some(d), Some(dh)) => d + dh == Half::ZERO,
        _ => false,
    };
    let splittable = !g.is_loop(e) && {
        let (u, v) = g.endpoints(e);
        g.edges_between(u, v).len() == 1 && g.without_edge(e).is_simple()
    };
    let split = if splittable { rooted_theta_split(g, e) } else { None };
    let (balanced, minimal) = match &split {
        None => (None, None),
        Some((c1, c2)) => {
            let (d1, dh1) = chain_closure_deltas(g, c1, limit)?;
            let (d2, dh2) = chain_closure_deltas(g, c2, limit)?;
            let balanced = d1 == d2;
            let minimal = d1 + dh1 == Half::ZERO
                && d2 + dh2 == Half::ZERO
                && d1 == Half::NEG_HALF
                && d2 == Half::NEG_HALF;
            (Some(balanced), Some(minimal))
        }
    };
    Ok(ClassifyReport {
        is_rooted_theta: split.is_some(),
        tight,
        balanced,
        minimal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::as_chain_closure;

    fn k4() -> Multigraph {
        Multigraph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn diamond() -> Multigraph {
        Multigraph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    fn k23() -> Multigraph {
        Multigraph::build(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    fn cycle(n: usize) -> Multigraph {
        let edges: Vec<(Vertex, Vertex)> =
            (0..n).map(|i| (i as Vertex, ((i + 1) % n) as Vertex)).collect();
        Multigraph::build(n, &edges).unwrap()
    }

    #[test]
    fn loop_graph_values() {
        let g = Multigraph::build(1, &[(0, 0)]).unwrap();
        let r = exact(&g, Some(EdgeId(0))).unwrap();
        assert_eq!(r.exc, 1);
        assert_eq!(r.exc_with, Some(0));
        assert_eq!(r.exc_without, Some(1));
        assert_eq!(r.delta, Some(Half::NEG_HALF));
        assert_eq!(r.delta_hat, Some(Half::halves(1)));
        assert_eq!(r.witness_with.unwrap(), vec![EdgeId(0)]);
    }

    #[test]
    fn two_cycle_values() {
        let g = Multigraph::build(2, &[(0, 1), (0, 1)]).unwrap();
        let r = exact(&g, Some(EdgeId(0))).unwrap();
        assert_eq!(r.exc, 2);
        assert_eq!(r.exc_with, Some(0));
        assert_eq!(r.exc_without, Some(2));
        assert_eq!(r.delta, Some(Half::from_int(-1)));
        assert_eq!(r.delta_hat, Some(Half::from_int(1)));
    }

    #[test]
    fn cycle_values() {
        let g = cycle(6);
        let r = exact(&g, Some(EdgeId(0))).unwrap();
        assert_eq!(r.exc, 2);
        assert_eq!(r.exc_with, Some(0));
        assert_eq!(r.exc_without, Some(6));
        // (n + n2)/4 = 3.
        assert_eq!(r.delta, Some(Half::from_int(-3)));
        assert_eq!(r.delta_hat, Some(Half::from_int(3)));
        assert_eq!(r.witness.len(), 6);
    }

    #[test]
    fn k4_edge_values() {
        let r = exact(&k4(), Some(EdgeId(0))).unwrap();
        assert_eq!(r.exc, 2);
        assert_eq!(r.exc_with, Some(0));
        assert_eq!(r.exc_without, Some(2));
        assert_eq!(r.delta, Some(Half::from_int(-1)));
        assert_eq!(r.delta_hat, Some(Half::from_int(1)));
    }

    #[test]
    fn diamond_chord_values() {
        let r = exact(&diamond(), Some(EdgeId(0))).unwrap();
        assert_eq!(r.exc, 2);
        // (n + n2)/4 = (4 + 2)/4 = 3/2.
        assert_eq!(r.exc_with, Some(1));
        assert_eq!(r.exc_without, Some(2));
        assert_eq!(r.delta, Some(Half::NEG_HALF));
        assert_eq!(r.delta_hat, Some(Half::halves(1)));
    }

    #[test]
    fn k23_hub_leaf_values() {
        let r = exact(&k23(), Some(EdgeId(0))).unwrap();
        assert_eq!(r.exc, 3);
        assert_eq!(r.exc_with, Some(1));
        assert_eq!(r.exc_without, Some(3));
        // (n + n2)/4 = (5 + 3)/4 = 2.
        assert_eq!(r.delta, Some(Half::from_int(-1)));
        assert_eq!(r.delta_hat, Some(Half::from_int(1)));
    }

    #[test]
    fn oracle_rejects_large_graphs() {
        let g = cycle(17);
        assert_eq!(
            exact(&g, None).unwrap_err(),
            OracleError::TooLarge { n: 17, limit: 16 }
        );
        assert!(exact_with_limit(&g, None, 17).is_ok());
    }

    #[test]
    fn oracle_rejects_disconnected_graphs() {
        let g = Multigraph::build(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(exact(&g, None).unwrap_err(), OracleError::Disconnected);
    }

    #[test]
    fn classify_diamond_chord() {
        let c = classify(&diamond(), EdgeId(0)).unwrap();
        assert_eq!(
            c,
            ClassifyReport {
                is_rooted_theta: true,
                tight: true,
                balanced: Some(true),
                minimal: Some(true),
            }
        );
    }

    #[test]
    fn classify_k4_edge() {
        let c = classify(&k4(), EdgeId(0)).unwrap();
        assert!(!c.is_rooted_theta);
        assert!(c.tight);
        assert_eq!(c.balanced, None);
        assert_eq!(c.minimal, None);
    }

    #[test]
    fn classify_k23_hub_leaf_is_tight_like_its_blocks() {
        let g = k23();
        let c = classify(&g, EdgeId(0)).unwrap();
        assert!(c.tight);
        assert!(!c.is_rooted_theta);
        // Tightness matches all chain-block closures being tight.
        let chain = as_chain_closure(&g, EdgeId(0)).unwrap();
        for closure in chain.block_closures(&g) {
            match closure {
                ChainClosure::Graph { graph, root } => {
                    let r = exact(&graph, Some(root)).unwrap();
                    assert_eq!(r.delta.unwrap() + r.delta_hat.unwrap(), Half::ZERO);
                }
                ChainClosure::Trivial => {}
            }
        }
    }
}
