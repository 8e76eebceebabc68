//! Seeded random graphs whose cycles are pairwise vertex-disjoint.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub const DEFAULT_SEED: u64 = 20_140_501;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphShape {
    pub max_vertices: usize,
    pub max_cycles: usize,
}

impl Default for GraphShape {
    fn default() -> Self {
        GraphShape { max_vertices: 12, max_cycles: 2 }
    }
}

/// Cycles of length 3 to 5 on disjoint vertex sets, then trees grown on
/// top. New vertices attach to one existing vertex, and some components are
/// joined by a bridge, so no further cycles appear.
pub fn random_graph<R: Rng>(rng: &mut R, shape: GraphShape) -> Graph {
    let nv = rng.gen_range(2..=shape.max_vertices.max(2));
    let label = |i: usize| format!("v{i}");
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut used = 0;
    let cycles = rng.gen_range(0..=shape.max_cycles);
    for _ in 0..cycles {
        let len = rng.gen_range(3..=5);
        if used + len > nv {
            break;
        }
        for k in 0..len {
            edges.push((used + k, used + (k + 1) % len));
        }
        used += len;
    }
    // union-find over vertices to track components for bridges
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(a, b) in &edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    for v in used..nv {
        if v > 0 && rng.gen_bool(0.85) {
            let u = rng.gen_range(0..v);
            edges.push((u, v));
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            parent[ru] = rv;
        }
    }
    let bridges = rng.gen_range(0..=2);
    for _ in 0..bridges {
        let a = rng.gen_range(0..nv);
        let b = rng.gen_range(0..nv);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            edges.push((a, b));
            parent[ra] = rb;
        }
    }
    let mut g = Graph::from_parts((0..nv).map(label), std::iter::empty()).expect("fresh labels");
    for (a, b) in edges {
        g = g.with_edges([&crate::graph::Edge::new(label(a), label(b)).expect("distinct endpoints")]);
    }
    g
}

/// `count` graphs from the seed.
pub fn random_suite(seed: u64, count: usize, shape: GraphShape) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_graph(&mut rng, shape)).collect()
}

/// `count` (graph, vertex) pairs from the seed; graphs have at least one edge.
pub fn random_vertex_samples(seed: u64, count: usize, shape: GraphShape) -> Vec<(Graph, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let g = random_graph(&mut rng, shape).without_isolated();
        let vs: Vec<String> = g.vertices().iter().cloned().collect();
        if let Some(v) = vs.choose(&mut rng) {
            out.push((g.clone(), v.clone()));
        }
    }
    out
}
