//! Minimal vertex covers and the cover-theoretic predicates built on them.
//!
//! Minimal vertex covers of `G` are the generating sets of the minimal primes
//! of `I(G)`, so `hgt` and `bight` are the smallest and largest minimal cover
//! sizes. Enumeration runs on a bitset copy of the graph (up to 128 vertices).

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, GraphId};

/// Default ceiling on the number of minimal covers enumerated.
pub const DEFAULT_COVER_LIMIT: usize = 1_000_000;

const MAX_VERTICES: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("cover enumeration supports at most {MAX_VERTICES} vertices, graph has {0}")]
    TooLarge(usize),
    #[error("more than {0} minimal vertex covers")]
    TooManyCovers(usize),
    #[error("cover belongs to a different graph")]
    ForeignCover,
    #[error("{0:?} is not a vertex cover")]
    NotACover(Vec<String>),
    #[error("{0:?} is not a minimal vertex cover")]
    NotMinimal(Vec<String>),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// A vertex cover tagged with the graph it was checked against.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexCover {
    vertices: BTreeSet<String>,
    graph_id: GraphId,
    minimal: bool,
}

impl VertexCover {
    /// Checks that `vertices` covers every edge of `g`.
    pub fn new<I, S>(g: &Graph, vertices: I) -> Result<VertexCover, CoverError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vertices: BTreeSet<String> = vertices.into_iter().map(Into::into).collect();
        for v in &vertices {
            if !g.contains_vertex(v) {
                return Err(GraphError::UnknownVertex(v.clone()).into());
            }
        }
        if !is_vertex_cover(g, &vertices) {
            return Err(CoverError::NotACover(vertices.into_iter().collect()));
        }
        let minimal = is_minimal_cover(g, &vertices);
        Ok(VertexCover { vertices, graph_id: g.id(), minimal })
    }

    /// Like [`VertexCover::new`] but also requires minimality.
    pub fn minimal<I, S>(g: &Graph, vertices: I) -> Result<VertexCover, CoverError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let c = VertexCover::new(g, vertices)?;
        if !c.minimal {
            return Err(CoverError::NotMinimal(c.vertices.into_iter().collect()));
        }
        Ok(c)
    }

    pub fn vertices(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: &str) -> bool {
        self.vertices.contains(v)
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn graph_id(&self) -> GraphId {
        self.graph_id
    }

    pub fn to_vec(&self) -> Vec<String> {
        self.vertices.iter().cloned().collect()
    }

    fn check_graph(&self, g: &Graph) -> Result<(), CoverError> {
        if self.graph_id == g.id() {
            Ok(())
        } else {
            Err(CoverError::ForeignCover)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSummary {
    pub height: usize,
    pub big_height: usize,
    #[serde(rename = "n_min_covers")]
    pub count: usize,
    pub maximum_covers: Vec<Vec<String>>,
}

pub fn is_vertex_cover(g: &Graph, set: &BTreeSet<String>) -> bool {
    g.edges().iter().all(|e| set.contains(e.first()) || set.contains(e.second()))
}

/// A cover none of whose vertices can be dropped.
pub fn is_minimal_cover(g: &Graph, set: &BTreeSet<String>) -> bool {
    is_vertex_cover(g, set)
        && set.iter().all(|v| {
            g.edges().iter().filter_map(|e| e.other(v)).any(|w| !set.contains(w))
        })
}

/// Bitset view of a graph used by the enumeration core.
#[derive(Debug, Clone)]
pub(crate) struct BitGraph {
    pub labels: Vec<String>,
    pub adj: Vec<u128>,
    pub edges: Vec<(usize, usize)>,
}

impl BitGraph {
    pub fn new(g: &Graph) -> Result<BitGraph, CoverError> {
        if g.vertex_count() > MAX_VERTICES {
            return Err(CoverError::TooLarge(g.vertex_count()));
        }
        let labels: Vec<String> = g.vertices().iter().cloned().collect();
        let index: BTreeMap<&str, usize> =
            labels.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut adj = vec![0u128; labels.len()];
        let mut edges = Vec::with_capacity(g.edge_count());
        for e in g.edges() {
            let (a, b) = (index[e.first()], index[e.second()]);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
            edges.push((a, b));
        }
        Ok(BitGraph { labels, adj, edges })
    }

    pub fn index_of(&self, v: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(v)).ok()
    }

    pub fn labels_of(&self, mask: u128) -> BTreeSet<String> {
        (0..self.labels.len()).filter(|i| mask >> i & 1 == 1).map(|i| self.labels[i].clone()).collect()
    }

    pub fn is_cover(&self, mask: u128) -> bool {
        self.edges.iter().all(|&(a, b)| (mask >> a | mask >> b) & 1 == 1)
    }

    pub fn is_minimal(&self, mask: u128) -> bool {
        self.is_cover(mask)
            && (0..self.labels.len()).filter(|i| mask >> i & 1 == 1).all(|i| self.adj[i] & !mask != 0)
    }

    /// Branches on an uncovered edge `uv`: either `u` joins the cover, or `u`
    /// stays out and all of its neighbours join. A chosen vertex whose
    /// neighbours are all chosen can never become necessary again, which
    /// prunes non-minimal branches early.
    pub fn minimal_covers(&self, limit: usize) -> Result<Vec<u128>, CoverError> {
        let mut out = Vec::new();
        self.branch(0, 0, limit, &mut out)?;
        out.retain(|&c| self.is_minimal(c));
        out.sort_unstable_by_key(|&c| self.sort_key(c));
        Ok(out)
    }

    fn sort_key(&self, mask: u128) -> Vec<&str> {
        (0..self.labels.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| self.labels[i].as_str())
            .collect()
    }

    fn redundant_inside(&self, included: u128) -> bool {
        let mut m = included;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.adj[i] & !included == 0 {
                return true;
            }
        }
        false
    }

    fn branch(&self, included: u128, excluded: u128, limit: usize, out: &mut Vec<u128>) -> Result<(), CoverError> {
        if self.redundant_inside(included) {
            return Ok(());
        }
        let uncovered = self
            .edges
            .iter()
            .find(|&&(a, b)| (included >> a | included >> b) & 1 == 0);
        let Some(&(u, _)) = uncovered else {
            out.push(included);
            if out.len() > limit {
                return Err(CoverError::TooManyCovers(limit));
            }
            return Ok(());
        };
        self.branch(included | 1 << u, excluded, limit, out)?;
        let forced = self.adj[u];
        if forced & excluded == 0 {
            self.branch(included | forced, excluded | 1 << u, limit, out)?;
        }
        Ok(())
    }
}

pub(crate) fn popcount(m: u128) -> usize {
    m.count_ones() as usize
}

/// All minimal vertex covers in lexicographic order of their sorted labels.
/// The empty graph has exactly one, the empty set.
pub fn enumerate_minimal_covers(g: &Graph) -> Result<Vec<VertexCover>, CoverError> {
    enumerate_minimal_covers_with_limit(g, DEFAULT_COVER_LIMIT)
}

pub fn enumerate_minimal_covers_with_limit(g: &Graph, limit: usize) -> Result<Vec<VertexCover>, CoverError> {
    let bg = BitGraph::new(g)?;
    let id = g.id();
    Ok(bg
        .minimal_covers(limit)?
        .into_iter()
        .map(|m| VertexCover { vertices: bg.labels_of(m), graph_id: id, minimal: true })
        .collect())
}

pub fn cover_summary(g: &Graph) -> Result<CoverSummary, CoverError> {
    let bg = BitGraph::new(g)?;
    let covers = bg.minimal_covers(DEFAULT_COVER_LIMIT)?;
    let sizes: Vec<usize> = covers.iter().map(|&c| popcount(c)).collect();
    let height = sizes.iter().copied().min().unwrap_or(0);
    let big_height = sizes.iter().copied().max().unwrap_or(0);
    let maximum_covers = covers
        .iter()
        .filter(|&&c| popcount(c) == big_height)
        .map(|&c| bg.labels_of(c).into_iter().collect())
        .collect();
    Ok(CoverSummary { height, big_height, count: covers.len(), maximum_covers })
}

/// The maximum size of a minimal vertex cover; 0 for the empty graph.
pub fn big_height(g: &Graph) -> Result<usize, CoverError> {
    let bg = BitGraph::new(g)?;
    Ok(bg.minimal_covers(DEFAULT_COVER_LIMIT)?.into_iter().map(popcount).max().unwrap_or(0))
}

/// The minimum size of a minimal vertex cover.
pub fn height(g: &Graph) -> Result<usize, CoverError> {
    let bg = BitGraph::new(g)?;
    Ok(bg.minimal_covers(DEFAULT_COVER_LIMIT)?.into_iter().map(popcount).min().unwrap_or(0))
}

/// Maximum minimal vertex covers, lexicographically ordered.
pub fn maximum_covers(g: &Graph) -> Result<Vec<VertexCover>, CoverError> {
    let covers = enumerate_minimal_covers(g)?;
    let best = covers.iter().map(VertexCover::len).max().unwrap_or(0);
    Ok(covers.into_iter().filter(|c| c.len() == best).collect())
}

/// `C ∩ V(H)`.
pub fn induced_cover(c: &VertexCover, h: &Graph) -> BTreeSet<String> {
    c.vertices.iter().filter(|v| h.contains_vertex(v)).cloned().collect()
}

/// Which restriction of a minimal cover to a pendant subgraph is minimal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InducedMinimality {
    Minimal,
    MinimalAfterRemovingX,
}

/// For a subgraph `H` meeting the rest of `G` only in `x`, decides whether the
/// cover `D` induced by a minimal cover `C` is minimal on `H`, or whether
/// `D \ {x}` is. The answer is re-checked directly.
pub fn check_induced_minimality(
    g: &Graph,
    h: &Graph,
    x: &str,
    c: &VertexCover,
) -> Result<InducedMinimality, CoverError> {
    c.check_graph(g)?;
    if !c.minimal {
        return Err(CoverError::NotMinimal(c.to_vec()));
    }
    if !h.edges().is_subset(g.edges()) {
        return Err(CoverError::Precondition("H is not a subgraph of G".into()));
    }
    let rest = g.edge_difference(h);
    let hv = h.support();
    let shared: BTreeSet<String> = hv.intersection(&rest.support()).cloned().collect();
    if !(shared.is_empty() || shared.len() == 1 && shared.contains(x)) || !hv.contains(x) && !h.is_empty() {
        return Err(CoverError::Precondition(format!("H meets G \\ H outside of {x}")));
    }
    let h = h.without_isolated();
    let d = induced_cover(c, &h);
    if is_minimal_cover(&h, &d) {
        return Ok(InducedMinimality::Minimal);
    }
    if c.contains(x) {
        let mut dx = d.clone();
        dx.remove(x);
        if is_minimal_cover(&h, &dx) {
            return Ok(InducedMinimality::MinimalAfterRemovingX);
        }
    }
    Err(CoverError::Precondition(format!("neither restriction of {:?} is minimal", c.to_vec())))
}

/// Neighbours `y` of `x` with `y` and all of `N(y) \ {x}` inside `C`, for a
/// minimal cover `C` avoiding `x`.
pub fn redundant_neighbors(g: &Graph, c: &VertexCover, x: &str) -> Result<BTreeSet<String>, CoverError> {
    c.check_graph(g)?;
    if c.contains(x) {
        return Err(CoverError::Precondition(format!("{x} belongs to the cover")));
    }
    Ok(redundant_in(g, c.vertices(), x)?)
}

fn redundant_in(g: &Graph, c: &BTreeSet<String>, x: &str) -> Result<BTreeSet<String>, GraphError> {
    let mut out = BTreeSet::new();
    for y in g.neighbors(x)? {
        if c.contains(&y) && g.neighbors(&y)?.iter().all(|z| z == x || c.contains(z)) {
            out.insert(y);
        }
    }
    Ok(out)
}

/// Whether `x` lies in every maximum minimal vertex cover.
pub fn vertex_in_all_maximum_covers(g: &Graph, x: &str) -> Result<bool, CoverError> {
    if !g.contains_vertex(x) {
        return Err(GraphError::UnknownVertex(x.to_string()).into());
    }
    let bg = BitGraph::new(g)?;
    Ok(max_covers_mask(&bg)?.into_iter().all(|c| bg.index_of(x).is_some_and(|i| c >> i & 1 == 1)))
}

fn max_covers_mask(bg: &BitGraph) -> Result<Vec<u128>, CoverError> {
    let covers = bg.minimal_covers(DEFAULT_COVER_LIMIT)?;
    let best = covers.iter().map(|&c| popcount(c)).max().unwrap_or(0);
    Ok(covers.into_iter().filter(|&c| popcount(c) == best).collect())
}

/// The five ways removing edges at `x` can behave, for a vertex avoided by a
/// maximum minimal cover all of whose such covers contain a redundant
/// neighbour of `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RemovalCase {
    /// Free redundant neighbour `y`: `bight(G - xy) = bight(G) - 1`.
    A,
    /// Free redundant neighbour `y`: splitting off the component of `y` in
    /// `G - xy` leaves a part all of whose maximum covers contain `x`.
    B,
    /// Non-free redundant neighbour `z1`: `bight(G - xz1) = bight(G) - 1`.
    C,
    /// Non-free `z1`, other cycle neighbour `z2`: removing both edges drops
    /// the big height by one.
    D,
    /// Non-free `z1`: splitting off the component of `z1` in `G - xz1 - xz2`
    /// leaves a part all of whose maximum covers contain `x`.
    E,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovalOutcome {
    pub case: RemovalCase,
    /// `y` for cases A/B, `z1` for C/D/E.
    pub witness: Option<String>,
    /// `z2` for cases C/D/E.
    pub companion: Option<String>,
    /// `(H, K)` for cases B and E: the component of the witness and the rest.
    pub parts: Option<(Graph, Graph)>,
    /// Why the classification does not apply.
    pub reason: Option<String>,
}

impl RemovalOutcome {
    fn not_applicable(reason: impl Into<String>) -> RemovalOutcome {
        RemovalOutcome {
            case: RemovalCase::NotApplicable,
            witness: None,
            companion: None,
            parts: None,
            reason: Some(reason.into()),
        }
    }

    fn found(case: RemovalCase, witness: &str, companion: Option<&str>, parts: Option<(Graph, Graph)>) -> Self {
        RemovalOutcome {
            case,
            witness: Some(witness.to_string()),
            companion: companion.map(str::to_string),
            parts,
            reason: None,
        }
    }
}

/// Splits `g` into the component of `v` and the remaining edges.
fn split_off(g: &Graph, v: &str) -> Result<(Graph, Graph), GraphError> {
    let h = g.component_of(v)?.without_isolated();
    let k = g.edge_difference(&h);
    Ok((h, k))
}

fn all_max_contain(g: &Graph, x: &str) -> Result<bool, CoverError> {
    if !g.contains_vertex(x) {
        // x is isolated in g: it belongs to no minimal cover
        return Ok(false);
    }
    vertex_in_all_maximum_covers(g, x)
}

/// Classifies the behaviour of `G` under removal of edges at `x`.
///
/// Cases are decided by directly checking each defining property: free
/// witnesses first ((a) before (b)), then non-free ones ((c), (d), (e)),
/// each scanned in label order.
pub fn classify_removal(g: &Graph, x: &str) -> Result<RemovalOutcome, CoverError> {
    if !g.contains_vertex(x) {
        return Err(GraphError::UnknownVertex(x.to_string()).into());
    }
    if !g.has_disjoint_cycles() {
        return Ok(RemovalOutcome::not_applicable("cycles are not pairwise disjoint"));
    }
    let bg = BitGraph::new(g)?;
    let xi = bg.index_of(x).unwrap();
    let maxes = max_covers_mask(&bg)?;
    let avoiding: Vec<BTreeSet<String>> =
        maxes.iter().filter(|&&c| c >> xi & 1 == 0).map(|&c| bg.labels_of(c)).collect();
    if avoiding.is_empty() {
        return Ok(RemovalOutcome::not_applicable(format!("{x} lies in every maximum minimal cover")));
    }
    let free = g.free_neighbors(x)?;
    let mut free_candidates = BTreeSet::new();
    let mut nonfree_candidates = BTreeSet::new();
    for c in &avoiding {
        let r = redundant_in(g, c, x)?;
        if r.is_empty() {
            return Ok(RemovalOutcome::not_applicable(format!(
                "maximum cover {:?} has no redundant neighbour of {x}",
                c
            )));
        }
        for y in r {
            if free.contains(&y) {
                free_candidates.insert(y);
            } else {
                nonfree_candidates.insert(y);
            }
        }
    }

    let bight = popcount(maxes[0]);
    let drops = |h: &Graph| -> Result<bool, CoverError> { Ok(big_height(h)? + 1 == bight) };

    for y in &free_candidates {
        if drops(&g.without_edges([&Edge::new(x, y.clone())?]))? {
            return Ok(RemovalOutcome::found(RemovalCase::A, y, None, None));
        }
    }
    for y in &free_candidates {
        let bar = g.without_edges([&Edge::new(x, y.clone())?]);
        let (h, k) = split_off(&bar, y)?;
        if !k.is_empty() && all_max_contain(&k, x)? {
            return Ok(RemovalOutcome::found(RemovalCase::B, y, None, Some((h, k))));
        }
    }
    let nonfree: Vec<String> = g.non_free_neighbors(x)?.into_iter().collect();
    for z1 in &nonfree_candidates {
        let z2 = nonfree.iter().find(|z| *z != z1).cloned();
        let e1 = Edge::new(x, z1.clone())?;
        if drops(&g.without_edges([&e1]))? {
            return Ok(RemovalOutcome::found(RemovalCase::C, z1, z2.as_deref(), None));
        }
    }
    for z1 in &nonfree_candidates {
        let Some(z2) = nonfree.iter().find(|z| *z != z1) else { continue };
        let pair = [Edge::new(x, z1.clone())?, Edge::new(x, z2.clone())?];
        if drops(&g.without_edges(&pair))? {
            return Ok(RemovalOutcome::found(RemovalCase::D, z1, Some(z2), None));
        }
    }
    for z1 in &nonfree_candidates {
        let Some(z2) = nonfree.iter().find(|z| *z != z1) else { continue };
        let pair = [Edge::new(x, z1.clone())?, Edge::new(x, z2.clone())?];
        let tilde = g.without_edges(&pair);
        let (h, k) = split_off(&tilde, z1)?;
        if !k.is_empty() && all_max_contain(&k, x)? {
            return Ok(RemovalOutcome::found(RemovalCase::E, z1, Some(z2), Some((h, k))));
        }
    }
    Ok(RemovalOutcome::not_applicable(format!("no case holds at {x}")))
}

/// Whether the refinement applies: every maximum cover avoiding `x` contains
/// a free redundant neighbour of `x`.
pub fn every_avoiding_cover_has_free_redundant(g: &Graph, x: &str) -> Result<bool, CoverError> {
    let bg = BitGraph::new(g)?;
    let Some(xi) = bg.index_of(x) else {
        return Err(GraphError::UnknownVertex(x.to_string()).into());
    };
    let free = g.free_neighbors(x)?;
    for c in max_covers_mask(&bg)?.into_iter().filter(|&c| c >> xi & 1 == 0) {
        let r = redundant_in(g, &bg.labels_of(c), x)?;
        if r.is_disjoint(&free) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Glues maximum covers of two parts of `G` and certifies the union is a
/// maximum minimal cover of `G`.
///
/// Accepted patterns: the parts share exactly one vertex lying in all maximum
/// covers of both; or the parts are vertex-disjoint, joined by one edge
/// `x1x2`, and either `x1` lies in all maximum covers of its part, or
/// `x1 ∈ D1` while neither `xi` lies in a maximum cover of its part with the
/// joining edge added.
pub fn union_cover_maximality(
    g: &Graph,
    h1: &Graph,
    h2: &Graph,
    d1: &VertexCover,
    d2: &VertexCover,
) -> Result<VertexCover, CoverError> {
    d1.check_graph(h1)?;
    d2.check_graph(h2)?;
    let b1 = big_height(h1)?;
    let b2 = big_height(h2)?;
    if d1.len() != b1 || !d1.minimal || d2.len() != b2 || !d2.minimal {
        return Err(CoverError::Precondition("D1 and D2 must be maximum minimal covers".into()));
    }
    let s1 = h1.support();
    let s2 = h2.support();
    let shared: Vec<String> = s1.intersection(&s2).cloned().collect();
    let whole = h1.union(h2).without_isolated();
    let satisfied = if shared.len() == 1 && whole.edges() == g.edges() {
        let x = &shared[0];
        all_max_contain(h1, x)? && all_max_contain(h2, x)?
    } else if shared.is_empty() {
        let joins: Vec<&Edge> = g
            .edges()
            .iter()
            .filter(|e| !h1.contains_edge(e) && !h2.contains_edge(e))
            .collect();
        if joins.len() != 1 || whole.edges().len() + 1 != g.edge_count() {
            false
        } else {
            let e = joins[0];
            let (x1, x2) = if s1.contains(e.first()) && s2.contains(e.second()) {
                (e.first(), e.second())
            } else if s2.contains(e.first()) && s1.contains(e.second()) {
                (e.second(), e.first())
            } else {
                return Err(CoverError::Precondition("joining edge does not connect the parts".into()));
            };
            let pattern_ii = all_max_contain(h1, x1)?;
            let pattern_i = d1.contains(x1) && {
                let h1e = h1.with_edges([e]);
                let h2e = h2.with_edges([e]);
                !maximum_covers(&h1e)?.iter().any(|c| c.contains(x1))
                    && !maximum_covers(&h2e)?.iter().any(|c| c.contains(x2))
            };
            pattern_i || pattern_ii
        }
    } else {
        false
    };
    if !satisfied {
        return Err(CoverError::Precondition("no union pattern applies".into()));
    }
    let union: BTreeSet<String> = d1.vertices.union(&d2.vertices).cloned().collect();
    let c = VertexCover::minimal(g, union)?;
    if c.len() != big_height(g)? {
        return Err(CoverError::Precondition("union is not maximum".into()));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn path(labels: &[&str]) -> Graph {
        Graph::from_edges(labels.windows(2).map(|w| (w[0], w[1]))).unwrap()
    }

    fn labels(covers: &[VertexCover]) -> Vec<Vec<String>> {
        covers.iter().map(VertexCover::to_vec).collect()
    }

    fn brute_force(g: &Graph) -> Vec<Vec<String>> {
        let vs: Vec<String> = g.vertices().iter().cloned().collect();
        let mut out = Vec::new();
        for mask in 0u32..1 << vs.len() {
            let set: BTreeSet<String> =
                (0..vs.len()).filter(|i| mask >> i & 1 == 1).map(|i| vs[i].clone()).collect();
            if is_minimal_cover(g, &set) {
                out.push(set.into_iter().collect::<Vec<_>>());
            }
        }
        out.sort();
        out
    }

    #[test]
    fn enumeration_examples() {
        let p = path(&["a", "b", "c"]);
        assert_eq!(labels(&enumerate_minimal_covers(&p).unwrap()), brute_force(&p));
        assert_eq!(labels(&enumerate_minimal_covers(&p).unwrap()), vec![vec!["a", "c"], vec!["b"]]);
        assert_eq!(labels(&enumerate_minimal_covers(&Graph::new()).unwrap()), vec![Vec::<String>::new()]);
        let c4 = path(&["x1", "x2", "x3", "x4", "x1"]);
        assert_eq!(
            labels(&enumerate_minimal_covers(&c4).unwrap()),
            vec![vec!["x1", "x3"], vec!["x2", "x4"]]
        );
        assert_eq!(brute_force(&c4).len(), 2);
    }

    #[test]
    fn cover_limit() {
        // 8 disjoint edges have 256 minimal covers
        let g = Graph::from_edges((0..8).map(|i| (format!("a{i}"), format!("b{i}")))).unwrap();
        assert_eq!(enumerate_minimal_covers(&g).unwrap().len(), 256);
        assert_eq!(enumerate_minimal_covers_with_limit(&g, 100), Err(CoverError::TooManyCovers(100)));
    }

    #[test]
    fn big_heights_of_worked_examples() {
        let g1 = parse_graph(include_str!("../fixtures/g1.edges")).unwrap();
        let g2 = parse_graph(include_str!("../fixtures/g2.edges")).unwrap();
        assert_eq!(big_height(&g1).unwrap(), 5);
        assert_eq!(big_height(&g2).unwrap(), 10);
        assert_eq!(big_height(&path(&["a", "b"])).unwrap(), 1);
        assert_eq!(big_height(&Graph::new()).unwrap(), 0);
        let s = cover_summary(&g1).unwrap();
        assert!(s.maximum_covers.contains(&vec![
            "x2".to_string(),
            "x4".into(),
            "y1".into(),
            "y3".into(),
            "y4".into()
        ]));
    }

    #[test]
    fn induced_cover_examples() {
        let p = path(&["a", "b", "c"]);
        let c = VertexCover::minimal(&p, ["b"]).unwrap();
        assert_eq!(induced_cover(&c, &path(&["a", "b"])), ["b".to_string()].into());
        assert!(induced_cover(&c, &path(&["u", "v"])).is_empty());

        let g1 = parse_graph(include_str!("../fixtures/g1.edges")).unwrap();
        let c = VertexCover::minimal(&g1, ["x2", "x4", "y1", "y3", "y4"]).unwrap();
        let cycle = path(&["x1", "x2", "x3", "x4", "x1"]);
        assert_eq!(induced_cover(&c, &cycle), ["x2".to_string(), "x4".into()].into());
    }

    #[test]
    fn induced_minimality_cases() {
        // star H centred at x, glued to a path x - p - q
        let g = Graph::from_edges([("x", "l1"), ("x", "l2"), ("x", "p"), ("p", "q")]).unwrap();
        let h = Graph::from_edges([("x", "l1"), ("x", "l2")]).unwrap();
        let outside = VertexCover::minimal(&g, ["l1", "l2", "p"]).unwrap();
        assert_eq!(check_induced_minimality(&g, &h, "x", &outside).unwrap(), InducedMinimality::Minimal);
        let inside = VertexCover::minimal(&g, ["x", "q"]).unwrap();
        assert_eq!(check_induced_minimality(&g, &h, "x", &inside).unwrap(), InducedMinimality::Minimal);
        // x needed only for the far side: D = {x, l1}? use a cover with leaves and x
        let g = Graph::from_edges([("x", "l1"), ("x", "p"), ("p", "q"), ("x", "r")]).unwrap();
        let h = Graph::from_edges([("x", "l1"), ("l1", "m")]).unwrap();
        let g = g.union(&h);
        let c = VertexCover::minimal(&g, ["x", "l1", "p"]).unwrap();
        assert_eq!(
            check_induced_minimality(&g, &h, "x", &c).unwrap(),
            InducedMinimality::MinimalAfterRemovingX
        );
        assert_eq!(check_induced_minimality(&g, &g, "x", &c).unwrap(), InducedMinimality::Minimal);
        let other = path(&["x", "y"]);
        assert!(check_induced_minimality(&other, &h, "x", &c).is_err());
    }

    #[test]
    fn redundant_neighbour_examples() {
        let p = path(&["a", "b", "c"]);
        let c = VertexCover::minimal(&p, ["a", "c"]).unwrap();
        assert_eq!(redundant_neighbors(&p, &c, "b").unwrap(), ["a".to_string(), "c".into()].into());
        assert!(is_minimal_cover(&p.without_edges(&[Edge::new("a", "b").unwrap()]), &["c".to_string()].into()));

        let star = Graph::from_edges([("x", "l1"), ("x", "l2"), ("x", "l3")]).unwrap();
        let c = VertexCover::minimal(&star, ["l1", "l2", "l3"]).unwrap();
        assert_eq!(redundant_neighbors(&star, &c, "x").unwrap().len(), 3);

        let c4 = path(&["x1", "x2", "x3", "x4", "x1"]);
        let c = VertexCover::minimal(&c4, ["x1", "x3"]).unwrap();
        assert!(redundant_neighbors(&c4, &c, "x2").unwrap().is_empty());
        assert!(redundant_neighbors(&c4, &c, "x1").is_err());
        assert_eq!(redundant_neighbors(&p, &c, "b"), Err(CoverError::ForeignCover));
    }

    #[test]
    fn all_maximum_cover_membership() {
        let e = path(&["a", "b"]);
        assert!(!vertex_in_all_maximum_covers(&e, "a").unwrap());
        assert!(!vertex_in_all_maximum_covers(&e, "b").unwrap());
        let p = path(&["a", "b", "c"]);
        assert!(vertex_in_all_maximum_covers(&p, "a").unwrap());
        assert!(vertex_in_all_maximum_covers(&p, "c").unwrap());
        assert!(!vertex_in_all_maximum_covers(&p, "b").unwrap());
        assert!(vertex_in_all_maximum_covers(&p, "z").is_err());
        // whisker law at b: bight stays 2 iff b in all maximum covers
        let w = p.add_whisker("b").unwrap().graph;
        assert_eq!(big_height(&w).unwrap(), 3);
    }

    #[test]
    fn removal_case_a_on_whiskered_path() {
        // path u - x - y with a second leaf v on x: dropping xu loses a cover vertex
        let g = Graph::from_edges([("x", "u"), ("x", "v"), ("x", "y"), ("y", "w")]).unwrap();
        let out = classify_removal(&g, "x").unwrap();
        assert_eq!(out.case, RemovalCase::A);
        let y = out.witness.unwrap();
        let removed = g.without_edges(&[Edge::new("x", y.clone()).unwrap()]);
        assert_eq!(big_height(&removed).unwrap() + 1, big_height(&g).unwrap());
    }

    #[test]
    fn removal_case_b_on_path() {
        // u - x - y - w: removing xu leaves nothing on u's side and x forced in x - y - w
        let g = path(&["u", "x", "y", "w"]);
        let out = classify_removal(&g, "x").unwrap();
        assert_eq!(out.case, RemovalCase::B);
        assert_eq!(out.witness.as_deref(), Some("u"));
        let (h, k) = out.parts.unwrap();
        assert!(h.is_empty());
        assert!(vertex_in_all_maximum_covers(&k, "x").unwrap());
    }

    #[test]
    fn removal_case_c_on_whiskered_cycle() {
        let g = parse_graph(include_str!("../fixtures/removal_c.edges")).unwrap();
        let out = classify_removal(&g, "v1").unwrap();
        assert_eq!(out.case, RemovalCase::C);
        let z1 = out.witness.unwrap();
        assert!(!g.free_neighbors("v1").unwrap().contains(&z1));
        let removed = g.without_edges(&[Edge::new("v1", z1).unwrap()]);
        assert_eq!(big_height(&removed).unwrap() + 1, big_height(&g).unwrap());
    }

    #[test]
    fn removal_cases_from_fixtures() {
        let g = parse_graph(include_str!("../fixtures/removal_b.edges")).unwrap();
        let out = classify_removal(&g, "v1").unwrap();
        assert_eq!((out.case, out.witness.as_deref()), (RemovalCase::B, Some("v0")));
        let (h, k) = out.parts.unwrap();
        assert!(!h.is_empty());
        assert!(vertex_in_all_maximum_covers(&k, "v1").unwrap());

        let g = parse_graph(include_str!("../fixtures/removal_d.edges")).unwrap();
        let out = classify_removal(&g, "v0").unwrap();
        assert_eq!(out.case, RemovalCase::D);
        assert_eq!(out.companion.as_deref(), Some("v2"));

        let g = parse_graph(include_str!("../fixtures/removal_e.edges")).unwrap();
        let out = classify_removal(&g, "v2").unwrap();
        assert_eq!(out.case, RemovalCase::E);
        let (_, k) = out.parts.unwrap();
        assert!(vertex_in_all_maximum_covers(&k, "v2").unwrap());
    }

    #[test]
    fn not_applicable_when_forced() {
        let p = path(&["a", "b", "c"]);
        assert_eq!(classify_removal(&p, "a").unwrap().case, RemovalCase::NotApplicable);
        let bowtie = path(&["a", "b", "c", "a"]).union(&path(&["a", "d", "e", "a"]));
        assert_eq!(classify_removal(&bowtie, "b").unwrap().case, RemovalCase::NotApplicable);
    }

    #[test]
    fn union_patterns() {
        let h1 = path(&["a", "b", "c"]);
        let h2 = path(&["c", "d", "e"]);
        let g = h1.union(&h2);
        let d1 = VertexCover::minimal(&h1, ["a", "c"]).unwrap();
        let d2 = VertexCover::minimal(&h2, ["c", "e"]).unwrap();
        let u = union_cover_maximality(&g, &h1, &h2, &d1, &d2).unwrap();
        assert_eq!(u.to_vec(), vec!["a", "c", "e"]);

        let h1 = path(&["a", "b", "c"]);
        let h2 = path(&["p", "q"]);
        let g = h1.union(&h2).with_edges(&[Edge::new("c", "p").unwrap()]);
        let d1 = VertexCover::minimal(&h1, ["a", "c"]).unwrap();
        let d2 = VertexCover::minimal(&h2, ["q"]).unwrap();
        let u = union_cover_maximality(&g, &h1, &h2, &d1, &d2).unwrap();
        assert_eq!(u.len(), big_height(&g).unwrap());

        // single edge hanging from a forced vertex behaves like a whisker
        let h2 = path(&["c", "w"]);
        let g = h1.union(&h2);
        let d2 = VertexCover::minimal(&h2, ["c"]).unwrap();
        assert!(union_cover_maximality(&g, &h1, &h2, &d1, &d2).is_err());
        let d2 = VertexCover::minimal(&h2, ["w"]).unwrap();
        assert!(union_cover_maximality(&g, &h1, &h2, &d1, &d2).is_err());
        assert_eq!(big_height(&g).unwrap(), big_height(&h1).unwrap());
    }
}
