//! Explicit generators for `I(G)` up to radical, at most `bight I(G) + n` of
//! them, for graphs whose cycles are pairwise vertex-disjoint.
//!
//! The recursion follows the induction on edges: degree-two cycle vertices are
//! split off and glued back by substitution, a non-terminal bridge splits the
//! graph into two sides whose covers decide how the certificates combine, and
//! fully whiskered graphs are handed to an arrangement search. Every node
//! checks its own count against `bight + n`; a node that overshoots is
//! replaced by a direct search on that subgraph.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cover::{self, big_height, classify_removal, CoverError, RemovalCase, RemovalOutcome};
use crate::graph::{Edge, Graph, GraphError, SPLIT_PREFIX};
use crate::poly::{Polynomial, Ring};
use crate::sv::{shortest_arrangement, SvArrangement, SvError, DEFAULT_NODE_LIMIT};
use crate::verify::{edge_monomial, graph_ring, verify_radical_equals_edge_ideal, Verdict, VerifyError, VerifyOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("the cycles of the graph are not pairwise vertex-disjoint")]
    NotDisjoint,
    #[error("arrangement search exceeded {limit} nodes after {} trace steps", partial_trace.len())]
    Budget { limit: u64, partial_trace: Vec<TraceStep> },
    #[error("no certificate within {bound} generators for a subgraph with {edges} edges")]
    BoundExceeded { bound: usize, edges: usize },
    #[error("certificate failed verification: {}", .0.describe())]
    Verification(Verdict),
    #[error("structural precondition: {0}")]
    Precondition(String),
    #[error("replay: {0}")]
    Replay(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

/// A sum of distinct edge monomials, each with coefficient one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Generator(pub Vec<Edge>);

impl Generator {
    pub fn monomial(e: Edge) -> Generator {
        Generator(vec![e])
    }

    pub fn sum(terms: impl IntoIterator<Item = Edge>) -> Generator {
        Generator(terms.into_iter().collect())
    }

    pub fn terms(&self) -> &[Edge] {
        &self.0
    }

    pub fn to_polynomial(&self, ring: &Ring) -> Result<Polynomial, crate::poly::PolyError> {
        let mut p = ring.zero();
        for e in &self.0 {
            p = &p + &Polynomial::from_monomial(edge_monomial(ring, e)?);
        }
        Ok(p)
    }

    /// `x1*y1 + x3*x4`.
    pub fn format(&self) -> String {
        self.0.iter().map(|e| format!("{}*{}", e.first(), e.second())).collect::<Vec<_>>().join(" + ")
    }
}

/// Why two certificates may be concatenated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnionRule {
    /// Connected components.
    Components,
    /// One side of the bridge has its endpoint in every maximum cover.
    ForcedEndpoint,
    /// A maximum cover of one side avoids the endpoint without a redundant
    /// neighbour.
    NoRedundantNeighbour,
    /// Splitting off the far component of a free redundant neighbour.
    PendantSplit,
}

/// One step of the post-order program that rebuilds the generator list.
/// Steps that consume certificates pop them from a stack.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum TraceStep {
    /// Pushes the empty certificate of an edgeless graph.
    Empty,
    /// Pops `parts` certificates and pushes their concatenation.
    Union { parts: usize, rule: UnionRule, bridge: Option<Edge> },
    /// Renames the two leaves of a split cycle vertex back to the vertex.
    GlueSubstitute { leaf1: String, leaf2: String, vertex: String },
    /// Appends `xy + aw`.
    PairFreeEdges { xy: Edge, aw: Edge },
    /// Appends `xy + av1` and `av2`.
    PairWithCycle { xy: Edge, av1: Edge, av2: Edge },
    /// Appends the lone monomial of an edge whose removal breaks a cycle.
    AppendEdge { edge: Edge },
    /// Appends `aw_i + xu_i` for each pair, then `alpha + beta`.
    PairNeighbourSets { pairs: Vec<(Edge, Edge)>, alpha: Option<Edge>, beta: Option<Edge> },
    /// Pushes the row sums of the first arrangement found for `edges` with
    /// between `min_rows` and `max_rows` rows.
    Arrangement { edges: Vec<Edge>, min_rows: usize, max_rows: usize, node_limit: u64, fallback: bool },
}

/// A verified list of generators for `I(G)` up to radical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorCertificate {
    pub graph: Graph,
    pub generators: Vec<Generator>,
    pub big_height: usize,
    pub cycle_rank: usize,
    pub trace: Vec<TraceStep>,
}

impl GeneratorCertificate {
    /// `bight + n`.
    pub fn bound(&self) -> usize {
        self.big_height + self.cycle_rank
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn polynomials(&self, ring: &Ring) -> Result<Vec<Polynomial>, crate::poly::PolyError> {
        self.generators.iter().map(|g| g.to_polynomial(ring)).collect()
    }

    /// JSON with sorted keys.
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<&Edge> = self.graph.edges().iter().collect();
        let value = serde_json::json!({
            "graph": edges,
            "bound": self.bound(),
            "generators": self.generators,
            "trace": self.trace,
        });
        // round trip through Value sorts keys at every level
        serde_json::from_str(&value.to_string()).expect("valid json")
    }
}

/// The certificate file: graph, claimed bound and generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub graph: Vec<Edge>,
    pub bound: usize,
    pub generators: Vec<Generator>,
    #[serde(default)]
    pub trace: Vec<TraceStep>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructOptions {
    pub node_limit: u64,
    pub verify: VerifyOptions,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        ConstructOptions { node_limit: DEFAULT_NODE_LIMIT, verify: VerifyOptions::default() }
    }
}

/// Record of a split cycle vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueRecord {
    pub leaf1: String,
    pub leaf2: String,
    pub vertex: String,
}

/// Splits the least-labelled degree-two cycle vertex into two leaves.
pub fn reduce_degree2(g: &Graph) -> Result<(Graph, GlueRecord), ConstructError> {
    let cyc = g.cycle_vertices();
    let v = cyc
        .iter()
        .find(|v| g.degree(v) == 2)
        .ok_or_else(|| ConstructError::Precondition("no cycle vertex of degree 2".into()))?;
    let s = g.split_degree2_cycle_vertex(v)?;
    Ok((s.graph, GlueRecord { leaf1: s.leaf1, leaf2: s.leaf2, vertex: s.vertex }))
}

fn rename(e: &Edge, from: &str, to: &str) -> Edge {
    let f = |v: &str| if v == from { to.to_string() } else { v.to_string() };
    Edge::new(f(e.first()), f(e.second())).expect("renaming keeps endpoints distinct")
}

/// Replaces both leaves by the glued vertex in every generator.
pub fn substitute_glue(gens: &[Generator], record: &GlueRecord) -> Result<Vec<Generator>, ConstructError> {
    gens.iter()
        .map(|g| {
            let terms: Vec<Edge> = g
                .0
                .iter()
                .map(|e| {
                    let e = rename(e, &record.leaf1, &record.vertex);
                    rename(&e, &record.leaf2, &record.vertex)
                })
                .collect();
            let distinct: BTreeSet<&Edge> = terms.iter().collect();
            if distinct.len() != terms.len() {
                return Err(ConstructError::Precondition(format!(
                    "gluing {} and {} merges terms of {}",
                    record.leaf1,
                    record.leaf2,
                    g.format()
                )));
            }
            Ok(Generator(terms))
        })
        .collect()
}

/// Whether some edge of `base` divides `e·f`, which makes `e·f ∈ I(base)`.
fn linked(base: &Graph, e: &Edge, f: &Edge) -> bool {
    base.edges()
        .iter()
        .any(|d| d != e && d != f && d.labels().iter().all(|v| e.contains(v) || f.contains(v)))
}

fn require_link(base: &Graph, e: &Edge, f: &Edge) -> Result<(), ConstructError> {
    if linked(base, e, f) {
        Ok(())
    } else {
        Err(ConstructError::Precondition(format!("no edge of the remaining graph links {e} and {f}")))
    }
}

fn require_absent(base: &Graph, edges: &[&Edge]) -> Result<(), ConstructError> {
    match edges.iter().find(|e| base.contains_edge(e)) {
        Some(e) => Err(ConstructError::Precondition(format!("{e} is already an edge of the remaining graph"))),
        None => Ok(()),
    }
}

/// Appends `xy + aw` to a certificate of `base = G \ {xy, aw}`; with `aw`
/// absent, appends `xy`.
pub fn combine_case1a(base: &Graph, gens: Vec<Generator>, xy: &Edge, aw: Option<&Edge>) -> Result<Vec<Generator>, ConstructError> {
    let mut gens = gens;
    match aw {
        None => {
            require_absent(base, &[xy])?;
            gens.push(Generator::monomial(xy.clone()));
        }
        Some(aw) => {
            require_absent(base, &[xy, aw])?;
            require_link(base, xy, aw)?;
            gens.push(Generator::sum([xy.clone(), aw.clone()]));
        }
    }
    Ok(gens)
}

/// Appends `xy + av1` and `av2` to a certificate of `G \ {xy, av1, av2}`.
pub fn combine_case1d(base: &Graph, gens: Vec<Generator>, xy: &Edge, av1: &Edge, av2: &Edge) -> Result<Vec<Generator>, ConstructError> {
    if av1 == av2 {
        return Err(ConstructError::Precondition("the two cycle edges coincide".into()));
    }
    require_absent(base, &[xy, av1, av2])?;
    require_link(base, xy, av1)?;
    let mut gens = gens;
    gens.push(Generator::sum([xy.clone(), av1.clone()]));
    gens.push(Generator::monomial(av2.clone()));
    Ok(gens)
}

/// Appends the monomial `xz1` to a certificate of `G \ {xz1}`.
pub fn combine_case2(base: &Graph, gens: Vec<Generator>, xz1: &Edge) -> Result<Vec<Generator>, ConstructError> {
    require_absent(base, &[xz1])?;
    let mut gens = gens;
    gens.push(Generator::monomial(xz1.clone()));
    Ok(gens)
}

/// Appends `aw_i + xu_i` for each pair and `alpha + beta` when either is
/// present, to a certificate of the core graph.
pub fn combine_case3(
    base: &Graph,
    gens: Vec<Generator>,
    pairs: &[(Edge, Edge)],
    alpha: Option<&Edge>,
    beta: Option<&Edge>,
) -> Result<Vec<Generator>, ConstructError> {
    if pairs.is_empty() {
        return Err(ConstructError::Precondition("no neighbour-set pairs".into()));
    }
    for (aw, xu) in pairs {
        require_absent(base, &[aw, xu])?;
        require_link(base, aw, xu)?;
    }
    if let (Some(al), Some(be)) = (alpha, beta) {
        require_absent(base, &[al, be])?;
        require_link(base, al, be)?;
    }
    Ok(append_case3(gens, pairs, alpha, beta))
}

fn append_case3(mut gens: Vec<Generator>, pairs: &[(Edge, Edge)], alpha: Option<&Edge>, beta: Option<&Edge>) -> Vec<Generator> {
    for (aw, xu) in pairs {
        gens.push(Generator::sum([aw.clone(), xu.clone()]));
    }
    let tail: Vec<Edge> = alpha.into_iter().chain(beta).cloned().collect();
    if !tail.is_empty() {
        gens.push(Generator(tail));
    }
    gens
}

fn arrangement_generators(a: &SvArrangement) -> Vec<Generator> {
    a.rows.iter().map(|r| Generator(r.clone())).collect()
}

fn run_arrangement(edges: &[Edge], min_rows: usize, max_rows: usize, node_limit: u64) -> Result<Option<Vec<Generator>>, SvError> {
    let g = Graph::from_edges(edges.iter().map(|e| (e.first(), e.second()))).expect("edges form a graph");
    Ok(shortest_arrangement(&g, min_rows, max_rows, node_limit)?.map(|a| arrangement_generators(&a)))
}

/// Arrangement search from `bight` up to `bight + n` rows.
pub fn base_case_certificate(g: &Graph, node_limit: u64) -> Result<Vec<Generator>, ConstructError> {
    let b = big_height(g)?;
    let n = g.cycle_rank();
    let edges: Vec<Edge> = g.edges().iter().cloned().collect();
    match run_arrangement(&edges, b, b + n, node_limit) {
        Ok(Some(gens)) => Ok(gens),
        Ok(None) => Err(ConstructError::BoundExceeded { bound: b + n, edges: edges.len() }),
        Err(SvError::Budget(limit)) => Err(ConstructError::Budget { limit, partial_trace: Vec::new() }),
        Err(SvError::TooLarge(m)) => Err(ConstructError::Precondition(format!("{m} edges is too many for the search"))),
    }
}

struct Builder {
    node_limit: u64,
    bight: HashMap<BTreeSet<Edge>, usize>,
    trace: Vec<TraceStep>,
}

fn is_eligible_bridge(g: &Graph, e: &Edge, cycle_edges: &BTreeSet<Edge>) -> bool {
    !cycle_edges.contains(e)
        && !g.is_terminal_edge(e)
        && !(g.has_whisker(e.first()) && g.has_whisker(e.second()))
}

impl Builder {
    fn bight(&mut self, g: &Graph) -> Result<usize, ConstructError> {
        if let Some(&b) = self.bight.get(g.edges()) {
            return Ok(b);
        }
        let b = big_height(g)?;
        self.bight.insert(g.edges().clone(), b);
        Ok(b)
    }

    fn budget(&self, limit: u64) -> ConstructError {
        ConstructError::Budget { limit, partial_trace: self.trace.clone() }
    }

    fn arrangement(&mut self, g: &Graph, min_rows: usize, max_rows: usize, fallback: bool) -> Result<Vec<Generator>, ConstructError> {
        let edges: Vec<Edge> = g.edges().iter().cloned().collect();
        match run_arrangement(&edges, min_rows, max_rows, self.node_limit) {
            Ok(Some(gens)) => {
                self.trace.push(TraceStep::Arrangement { edges, min_rows, max_rows, node_limit: self.node_limit, fallback });
                Ok(gens)
            }
            Ok(None) => Err(ConstructError::BoundExceeded { bound: max_rows, edges: edges.len() }),
            Err(SvError::Budget(limit)) => Err(self.budget(limit)),
            Err(SvError::TooLarge(m)) => Err(ConstructError::Precondition(format!("{m} edges is too many for the search"))),
        }
    }

    /// Certificate for `g` with at most `bight(g) + n(g)` generators.
    fn build(&mut self, g: &Graph) -> Result<Vec<Generator>, ConstructError> {
        let g = g.without_isolated();
        if g.is_empty() {
            self.trace.push(TraceStep::Empty);
            return Ok(Vec::new());
        }
        let mark = self.trace.len();
        let bound = self.bight(&g)? + g.cycle_rank();
        match self.reduce(&g) {
            Ok(gens) if gens.len() <= bound => return Ok(gens),
            Ok(_) | Err(ConstructError::BoundExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
        self.trace.truncate(mark);
        let b = self.bight(&g)?;
        self.arrangement(&g, b, bound, true)
    }

    fn reduce(&mut self, g: &Graph) -> Result<Vec<Generator>, ConstructError> {
        let comps = g.components();
        if comps.len() > 1 {
            return self.union(&comps, UnionRule::Components, None);
        }
        if g.cycle_vertices().iter().any(|v| g.degree(v) == 2) {
            let (l, record) = reduce_degree2(g)?;
            let gens = self.build(&l)?;
            let out = substitute_glue(&gens, &record)?;
            self.trace.push(TraceStep::GlueSubstitute {
                leaf1: record.leaf1,
                leaf2: record.leaf2,
                vertex: record.vertex,
            });
            return Ok(out);
        }
        let cycle_edges = g.cycle_edges();
        let bridge = g.edges().iter().find(|e| is_eligible_bridge(g, e, &cycle_edges)).cloned();
        match bridge {
            None => {
                let b = self.bight(g)?;
                let n = g.cycle_rank();
                self.arrangement(g, b, b + n, false)
            }
            Some(ax) => self.decompose(g, &ax),
        }
    }

    fn union(&mut self, parts: &[Graph], rule: UnionRule, bridge: Option<&Edge>) -> Result<Vec<Generator>, ConstructError> {
        let mut out = Vec::new();
        for p in parts {
            out.extend(self.build(p)?);
        }
        self.trace.push(TraceStep::Union { parts: parts.len(), rule, bridge: bridge.cloned() });
        Ok(out)
    }

    fn decompose(&mut self, g: &Graph, ax: &Edge) -> Result<Vec<Generator>, ConstructError> {
        let (a, x) = (ax.first().to_string(), ax.second().to_string());
        let (g1, g2) = g.decompose_at_edge(&a, &x)?;
        let g1p = g1.with_edges([ax]);
        let g2p = g2.with_edges([ax]);

        if cover::vertex_in_all_maximum_covers(&g1, &a)? {
            return self.union(&[g1p, g2], UnionRule::ForcedEndpoint, Some(ax));
        }
        if cover::vertex_in_all_maximum_covers(&g2, &x)? {
            return self.union(&[g1, g2p], UnionRule::ForcedEndpoint, Some(ax));
        }
        if has_bare_avoiding_cover(&g1, &a)? {
            return self.union(&[g1, g2p], UnionRule::NoRedundantNeighbour, Some(ax));
        }
        if has_bare_avoiding_cover(&g2, &x)? {
            return self.union(&[g1p, g2], UnionRule::NoRedundantNeighbour, Some(ax));
        }

        let side1 = Side { g: g1, v: a, outcome: None };
        let side2 = Side { g: g2, v: x, outcome: None };
        let mut side1 = side1.classified()?;
        let mut side2 = side2.classified()?;
        let c1 = side1.case();
        let c2 = side2.case();
        if c2 == RemovalCase::B && (side2.pendant_nonempty() || c1 != RemovalCase::B) {
            return self.case1(g, ax, &side1, &side2);
        }
        if c1 == RemovalCase::B {
            return self.case1(g, ax, &side2, &side1);
        }
        if c2 == RemovalCase::E {
            return self.case2(g, &side2);
        }
        if c1 == RemovalCase::E {
            return self.case2(g, &side1);
        }
        if [c1, c2].contains(&RemovalCase::NotApplicable) {
            return Err(ConstructError::BoundExceeded { bound: 0, edges: g.edge_count() });
        }
        self.case3(g, ax, &mut side1, &mut side2)
    }

    /// `other` is the side holding the free redundant neighbour `y`.
    fn case1(&mut self, g: &Graph, ax: &Edge, near: &Side, other: &Side) -> Result<Vec<Generator>, ConstructError> {
        let out = other.outcome.as_ref().expect("classified");
        let y = out.witness.clone().expect("witness");
        let x = &other.v;
        let xy = Edge::new(x.clone(), y)?;
        let (h, k) = out.parts.clone().expect("case (b) carries its parts");
        if !h.is_empty() {
            let rest = near.g.with_edges([ax]).union(&k).with_edges([&xy]);
            return self.union(&[rest, h], UnionRule::PendantSplit, Some(&xy));
        }
        let nout = near.outcome.as_ref().expect("classified");
        let a = &near.v;
        match nout.case {
            RemovalCase::E => self.case2(g, near),
            RemovalCase::A | RemovalCase::C => {
                let aw = Edge::new(a.clone(), nout.witness.clone().expect("witness"))?;
                let base = g.without_edges([&xy, &aw]);
                let gens = self.build(&base)?;
                let out = combine_case1a(&base.without_isolated(), gens, &xy, Some(&aw))?;
                self.trace.push(TraceStep::PairFreeEdges { xy, aw });
                Ok(out)
            }
            RemovalCase::D => {
                let av1 = Edge::new(a.clone(), nout.witness.clone().expect("witness"))?;
                let av2 = Edge::new(a.clone(), nout.companion.clone().expect("companion"))?;
                let base = g.without_edges([&xy, &av1, &av2]);
                let gens = self.build(&base)?;
                let out = combine_case1d(&base.without_isolated(), gens, &xy, &av1, &av2)?;
                self.trace.push(TraceStep::PairWithCycle { xy, av1, av2 });
                Ok(out)
            }
            _ => Err(ConstructError::BoundExceeded { bound: 0, edges: g.edge_count() }),
        }
    }

    fn case2(&mut self, g: &Graph, side: &Side) -> Result<Vec<Generator>, ConstructError> {
        let out = side.outcome.as_ref().expect("classified");
        let xz1 = Edge::new(side.v.clone(), out.witness.clone().expect("witness"))?;
        let base = g.without_edges([&xz1]);
        let gens = self.build(&base)?;
        let out = combine_case2(&base, gens, &xz1)?;
        self.trace.push(TraceStep::AppendEdge { edge: xz1 });
        Ok(out)
    }

    fn case3(&mut self, g: &Graph, ax: &Edge, s1: &mut Side, s2: &mut Side) -> Result<Vec<Generator>, ConstructError> {
        let mut chain1 = self.drop_chain(&s1.g, &s1.v, None)?;
        let mut chain2 = self.drop_chain(&s2.g, &s2.v, None)?;
        let (mut s1, mut s2) = (s1, s2);
        if chain1.len() > chain2.len() {
            std::mem::swap(&mut s1, &mut s2);
            std::mem::swap(&mut chain1, &mut chain2);
        }
        let h = chain1.len();
        if h == 0 {
            return Err(ConstructError::BoundExceeded { bound: 0, edges: g.edge_count() });
        }
        chain2 = self.drop_chain(&s2.g, &s2.v, Some(h))?;
        let removed1: Vec<&Edge> = chain1.iter().flatten().collect();
        let removed2: Vec<&Edge> = chain2.iter().flatten().collect();
        let core = s1.g.without_edges(removed1.iter().copied()).with_edges([ax]).union(&s2.g.without_edges(removed2.iter().copied()));

        let mut pairs = Vec::with_capacity(h);
        let (mut alpha, mut beta) = (None, None);
        for (w, u) in chain1.iter().zip(&chain2) {
            pairs.push((w[0].clone(), u[0].clone()));
            if let Some(e) = w.get(1) {
                alpha = Some(e.clone());
            }
            if let Some(e) = u.get(1) {
                beta = Some(e.clone());
            }
        }
        let gens = self.build(&core)?;
        let out = combine_case3(&core.without_isolated(), gens, &pairs, alpha.as_ref(), beta.as_ref())?;
        self.trace.push(TraceStep::PairNeighbourSets { pairs, alpha, beta });
        Ok(out)
    }

    /// Longest sequence of neighbour sets of `v` in `g` whose successive
    /// removal lowers the big height by one each time; with `want`, the first
    /// sequence of that length.
    fn drop_chain(&mut self, g: &Graph, v: &str, want: Option<usize>) -> Result<Vec<Vec<Edge>>, ConstructError> {
        let cyc: Vec<String> = g.non_free_neighbors(v)?.into_iter().collect();
        let base = self.bight(g)?;
        let mut best = Vec::new();
        let mut cur = Vec::new();
        self.chain_dfs(g, v, &cyc, base, &mut cur, &mut best, want)?;
        Ok(best)
    }

    #[allow(clippy::too_many_arguments)]
    fn chain_dfs(
        &mut self,
        g: &Graph,
        v: &str,
        cyc: &[String],
        b: usize,
        cur: &mut Vec<Vec<Edge>>,
        best: &mut Vec<Vec<Edge>>,
        want: Option<usize>,
    ) -> Result<bool, ConstructError> {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        if want == Some(cur.len()) {
            return Ok(true);
        }
        if b == 0 || !g.contains_vertex(v) {
            return Ok(false);
        }
        let mut sets: Vec<Vec<Edge>> = g.neighbors(v)?.into_iter().map(|w| vec![Edge::new(v, w).expect("edge")]).collect();
        if cyc.len() == 2 {
            let pair: Vec<Edge> = cyc.iter().map(|w| Edge::new(v, w.clone()).expect("edge")).collect();
            if pair.iter().all(|e| g.contains_edge(e)) {
                sets.push(pair);
            }
        }
        for s in sets {
            let next = g.without_edges(&s);
            if self.bight(&next)? + 1 == b {
                cur.push(s);
                let done = self.chain_dfs(&next, v, cyc, b - 1, cur, best, want)?;
                cur.pop();
                if done {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

struct Side {
    g: Graph,
    v: String,
    outcome: Option<RemovalOutcome>,
}

impl Side {
    fn classified(mut self) -> Result<Side, ConstructError> {
        self.outcome = Some(classify_removal(&self.g, &self.v)?);
        Ok(self)
    }

    fn case(&self) -> RemovalCase {
        self.outcome.as_ref().map_or(RemovalCase::NotApplicable, |o| o.case)
    }

    fn pendant_nonempty(&self) -> bool {
        self.outcome.as_ref().and_then(|o| o.parts.as_ref()).is_some_and(|(h, _)| !h.is_empty())
    }
}

/// Some maximum cover of `g` avoids `v` and holds no redundant neighbour of it.
fn has_bare_avoiding_cover(g: &Graph, v: &str) -> Result<bool, ConstructError> {
    for c in cover::maximum_covers(g)? {
        if !c.contains(v) && cover::redundant_neighbors(g, &c, v)?.is_empty() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Builds and verifies a certificate with at most `bight + n` generators.
pub fn construct_generators(g: &Graph, options: ConstructOptions) -> Result<GeneratorCertificate, ConstructError> {
    if !g.has_disjoint_cycles() {
        return Err(ConstructError::NotDisjoint);
    }
    let mut b = Builder { node_limit: options.node_limit, bight: HashMap::new(), trace: Vec::new() };
    let generators = b.build(g)?;
    let big_height = b.bight(&g.without_isolated())?;
    let cert = GeneratorCertificate { graph: g.clone(), generators, big_height, cycle_rank: g.cycle_rank(), trace: b.trace };
    if cert.len() > cert.bound() {
        return Err(ConstructError::BoundExceeded { bound: cert.bound(), edges: g.edge_count() });
    }
    let ring = graph_ring(g);
    let polys = cert.polynomials(&ring).map_err(VerifyError::from)?;
    let verdict = verify_radical_equals_edge_ideal(g, &ring, &polys, options.verify)?;
    if !verdict.passed() {
        return Err(ConstructError::Verification(verdict));
    }
    Ok(cert)
}

fn pop(stack: &mut Vec<Vec<Generator>>) -> Result<Vec<Generator>, ConstructError> {
    stack.pop().ok_or_else(|| ConstructError::Replay("stack underflow".into()))
}

/// Re-executes a trace and returns the generator list it describes.
pub fn replay_trace(trace: &[TraceStep]) -> Result<Vec<Generator>, ConstructError> {
    let mut stack: Vec<Vec<Generator>> = Vec::new();
    for step in trace {
        match step {
            TraceStep::Empty => stack.push(Vec::new()),
            TraceStep::Union { parts, .. } => {
                if stack.len() < *parts {
                    return Err(ConstructError::Replay("stack underflow".into()));
                }
                let tail = stack.split_off(stack.len() - parts);
                stack.push(tail.into_iter().flatten().collect());
            }
            TraceStep::GlueSubstitute { leaf1, leaf2, vertex } => {
                let gens = pop(&mut stack)?;
                let record = GlueRecord { leaf1: leaf1.clone(), leaf2: leaf2.clone(), vertex: vertex.clone() };
                stack.push(substitute_glue(&gens, &record)?);
            }
            TraceStep::PairFreeEdges { xy, aw } => {
                let mut gens = pop(&mut stack)?;
                gens.push(Generator::sum([xy.clone(), aw.clone()]));
                stack.push(gens);
            }
            TraceStep::PairWithCycle { xy, av1, av2 } => {
                let mut gens = pop(&mut stack)?;
                gens.push(Generator::sum([xy.clone(), av1.clone()]));
                gens.push(Generator::monomial(av2.clone()));
                stack.push(gens);
            }
            TraceStep::AppendEdge { edge } => {
                let mut gens = pop(&mut stack)?;
                gens.push(Generator::monomial(edge.clone()));
                stack.push(gens);
            }
            TraceStep::PairNeighbourSets { pairs, alpha, beta } => {
                let gens = pop(&mut stack)?;
                stack.push(append_case3(gens, pairs, alpha.as_ref(), beta.as_ref()));
            }
            TraceStep::Arrangement { edges, min_rows, max_rows, node_limit, .. } => {
                let gens = run_arrangement(edges, *min_rows, *max_rows, *node_limit)
                    .map_err(|e| ConstructError::Replay(e.to_string()))?
                    .ok_or_else(|| ConstructError::Replay("arrangement no longer found".into()))?;
                stack.push(gens);
            }
        }
    }
    match (stack.pop(), stack.is_empty()) {
        (Some(gens), true) => Ok(gens),
        _ => Err(ConstructError::Replay("trace does not reduce to one certificate".into())),
    }
}

/// Leaf labels used when splitting cycle vertices never survive into the
/// final generators.
pub fn mentions_synthetic_labels(gens: &[Generator]) -> bool {
    gens.iter().flat_map(|g| &g.0).any(|e| e.labels().iter().any(|l| l.starts_with(SPLIT_PREFIX)))
}
