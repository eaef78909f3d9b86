//! Named, extremal, and seeded random test graphs.
//!
//! All generators are deterministic: the same parameters and seed always
//! produce the same graph, edge ids included. The `k23_constructible` family
//! realizes the worst case of the excess bound; `random_two_connected_subcubic`
//! grows an ear decomposition for broad coverage.

use thiserror::Error;

use crate::multigraph::{ConnectivityClass, Multigraph, Vertex};

/// Errors from graph generation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    /// The requested size is outside the generator's domain.
    #[error("bad size: {0}")]
    BadSize(&'static str),
}

/// SplitMix64: a tiny, seedable, high-quality PRNG with reproducible output
/// across platforms.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    /// Seeds the generator.
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    /// Next 64 random bits.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..n` (n > 0) by multiply-shift.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "below needs a nonempty range");
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }

    /// A uniformly chosen element of a nonempty slice.
    pub fn choose<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len())]
    }
}

/// The complete graph K4.
pub fn k4() -> Multigraph {
    Multigraph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// The complete bipartite graph K_{2,3}; hubs 0 and 1, leaves 2, 3, 4.
pub fn k23() -> Multigraph {
    Multigraph::build(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
}

/// The diamond: K4 minus one edge; the chord joins the degree-3 vertices
/// 0 and 1 as edge 0.
pub fn diamond() -> Multigraph {
    Multigraph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
}

/// The Petersen graph: outer 5-cycle 0..4, spokes, inner pentagram 5..9.
pub fn petersen() -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i as Vertex, ((i + 1) % 5) as Vertex));
    }
    for i in 0..5 {
        edges.push((i as Vertex, (i + 5) as Vertex));
    }
    for i in 0..5 {
        edges.push(((5 + i) as Vertex, (5 + (i + 2) % 5) as Vertex));
    }
    Multigraph::build(10, &edges).unwrap()
}

/// The triangular prism: two triangles joined by a perfect matching.
pub fn prism() -> Multigraph {
    Multigraph::build(
        6,
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
    )
    .unwrap()
}

/// The 3-cube graph Q3 with bit-labeled vertices.
pub fn cube() -> Multigraph {
    let mut edges = Vec::new();
    for v in 0..8u32 {
        for bit in [1, 2, 4] {
            let w = v ^ bit;
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Multigraph::build(8, &edges).unwrap()
}

/// The cycle C_n (n >= 3).
pub fn cycle(n: usize) -> Result<Multigraph, GenError> {
    if n < 3 {
        return Err(GenError::BadSize("cycles need n >= 3"));
    }
    let edges: Vec<(Vertex, Vertex)> =
        (0..n).map(|i| (i as Vertex, ((i + 1) % n) as Vertex)).collect();
    Ok(Multigraph::build(n, &edges).unwrap())
}

/// The theta graph: hubs 0 and 1 joined by three internally disjoint paths
/// of `k` interior vertices each (k >= 1); n = 3k + 2.
pub fn theta(k: usize) -> Result<Multigraph, GenError> {
    if k == 0 {
        return Err(GenError::BadSize("theta needs k >= 1 interior vertices per path"));
    }
    let n = 3 * k + 2;
    let mut edges = Vec::new();
    for p in 0..3 {
        let first = (2 + p * k) as Vertex;
        edges.push((0, first));
        for i in 0..k - 1 {
            let a = (2 + p * k + i) as Vertex;
            edges.push((a, a + 1));
        }
        edges.push(((2 + p * k + k - 1) as Vertex, 1));
    }
    Ok(Multigraph::build(n, &edges).unwrap())
}

/// Replaces a degree-2 vertex `v` by a 4-cycle: `v` disappears, a square
/// c1-c2-c3-c4 appears on fresh vertex ids, and the former neighbors attach
/// to the opposite corners c1 and c3.
pub fn diamond_op(g: &Multigraph, v: Vertex) -> Result<Multigraph, GenError> {
    if !g.has_vertex(v) || g.degree(v) != 2 {
        return Err(GenError::BadSize("diamond_op needs a degree-2 vertex"));
    }
    let mut ends: Vec<Vertex> = g.incident(v).iter().map(|&(_, w)| w).collect();
    ends.sort();
    let (a, b) = (ends[0], ends[1]);
    if a == b {
        return Err(GenError::BadSize("diamond_op needs two distinct neighbors"));
    }
    let base = g.max_vertex().expect("graph has vertices") + 1;
    let (c1, c2, c3, c4) = (base, base + 1, base + 2, base + 3);
    let mut edges: Vec<(Vertex, Vertex)> = g
        .edges()
        .filter(|&(_, (x, y))| x != v && y != v)
        .map(|(_, ends)| ends)
        .collect();
    edges.extend([(c1, c2), (c2, c3), (c3, c4), (c4, c1), (a, c1), (b, c3)]);
    let vertices: Vec<Vertex> = g
        .vertices()
        .filter(|&w| w != v)
        .chain([c1, c2, c3, c4])
        .collect();
    Ok(renumber(&vertices, &edges))
}

/// Builds a graph on `0..vertices.len()` renaming the given vertices in
/// ascending order; edge order is preserved.
fn renumber(vertices: &[Vertex], edges: &[(Vertex, Vertex)]) -> Multigraph {
    let mut sorted = vertices.to_vec();
    sorted.sort();
    let rank = |w: Vertex| -> Vertex {
        sorted.binary_search(&w).expect("edge endpoint must be listed") as Vertex
    };
    let renamed: Vec<(Vertex, Vertex)> =
        edges.iter().map(|&(x, y)| (rank(x), rank(y))).collect();
    Multigraph::build(sorted.len(), &renamed).unwrap()
}

/// A member of the extremal family: K_{2,3} with `steps` seeded diamond
/// expansions applied at random degree-2 vertices; n = 5 + 3 * steps.
pub fn k23_constructible(steps: usize, seed: u64) -> Multigraph {
    let mut rng = SplitMix64::new(seed);
    let mut g = k23();
    for _ in 0..steps {
        let candidates: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) == 2).collect();
        let v = *rng.choose(&candidates);
        g = diamond_op(&g, v).expect("degree-2 vertices admit the expansion");
    }
    g
}

/// A seeded random simple 2-connected subcubic graph on exactly `n >= 3`
/// vertices: a random cycle, random ears and subdivisions up to size, then
/// random chords.
pub fn random_two_connected_subcubic(n: usize, seed: u64) -> Result<Multigraph, GenError> {
    if n < 3 {
        return Err(GenError::BadSize("random graphs need n >= 3"));
    }
    let mut rng = SplitMix64::new(seed);
    let c = 3 + if n > 3 { rng.below(n - 2) } else { 0 };
    let mut edges: Vec<(Vertex, Vertex)> =
        (0..c).map(|i| (i as Vertex, ((i + 1) % c) as Vertex)).collect();
    let mut degree = vec![0usize; n];
    degree[..c].fill(2);
    let mut next = c;

    while next < n {
        let room = n - next;
        let candidates: Vec<Vertex> = (0..next as Vertex)
            .filter(|&v| degree[v as usize] <= 2)
            .collect();
        if candidates.len() >= 2 {
            // Attach an ear of r interior vertices between two distinct
            // low-degree vertices.
            let r = 1 + rng.below(room);
            let x = *rng.choose(&candidates);
            let others: Vec<Vertex> = candidates.iter().copied().filter(|&w| w != x).collect();
            let y = *rng.choose(&others);
            let mut prev = x;
            for i in 0..r {
                let w = (next + i) as Vertex;
                edges.push((prev, w));
                prev = w;
            }
            edges.push((prev, y));
            degree[x as usize] += 1;
            degree[y as usize] += 1;
            for i in 0..r {
                degree[next + i] = 2;
            }
            next += r;
        } else {
            // Everything is saturated: subdivide a random edge instead.
            let k = rng.below(edges.len());
            let (x, y) = edges[k];
            let w = next as Vertex;
            edges[k] = (x, w);
            edges.push((w, y));
            degree[next] = 2;
            next += 1;
        }
    }

    // Random chord attempts between non-adjacent degree-2 vertices.
    let attempts = rng.below(n) + 1;
    for _ in 0..attempts {
        let candidates: Vec<Vertex> =
            (0..n as Vertex).filter(|&v| degree[v as usize] == 2).collect();
        if candidates.len() < 2 {
            break;
        }
        let x = *rng.choose(&candidates);
        let y = *rng.choose(&candidates);
        if x == y || edges.iter().any(|&(a, b)| (a, b) == (x, y) || (a, b) == (y, x)) {
            continue;
        }
        edges.push((x, y));
        degree[x as usize] += 1;
        degree[y as usize] += 1;
    }

    let g = Multigraph::build(n, &edges).unwrap();
    assert!(g.is_simple(), "generator output must be simple");
    assert!(g.is_subcubic(), "generator output must be subcubic");
    assert_eq!(
        g.connectivity_class(),
        ConnectivityClass::TwoConnected,
        "generator output must be 2-connected"
    );
    Ok(g)
}
