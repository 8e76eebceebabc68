//! Finite simple graphs over opaque string labels.
//!
//! A [`Graph`] is an immutable value: every transformation (whiskering,
//! gluing leaves, splitting a cycle vertex, decomposing at a bridge) returns a
//! fresh graph together with the labels it introduced. Isolated vertices are
//! allowed; they never appear in a minimal vertex cover and contribute nothing
//! to the edge ideal.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

/// Prefix of labels minted for whiskers.
pub const WHISKER_PREFIX: &str = "_w";
/// Prefix of labels minted when two leaves are identified.
pub const GLUE_PREFIX: &str = "_g";
/// Prefix of the two leaves created when a cycle vertex is split.
pub const SPLIT_PREFIX: &str = "_s";

/// Default ceiling on the number of enumerated cycles.
pub const DEFAULT_CYCLE_LIMIT: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: loop edge {label}-{label} is not allowed in a simple graph")]
    Loop { line: usize, label: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("loop edge {0}-{0} is not allowed in a simple graph")]
    LoopEdge(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("no edge {0}-{1}")]
    UnknownEdge(String, String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cycle enumeration aborted after {0} cycles")]
    TooManyCycles(usize),
}

/// An unordered pair of distinct labels, stored with the smaller label first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "(String, String)", into = "(String, String)")]
pub struct Edge(String, String);

impl Edge {
    pub fn new(a: impl Into<String>, b: impl Into<String>) -> Result<Edge, GraphError> {
        let (a, b) = (a.into(), b.into());
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge(a, b)),
            std::cmp::Ordering::Greater => Ok(Edge(b, a)),
            std::cmp::Ordering::Equal => Err(GraphError::LoopEdge(a)),
        }
    }

    pub fn first(&self) -> &str {
        &self.0
    }

    pub fn second(&self) -> &str {
        &self.1
    }

    pub fn contains(&self, v: &str) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint opposite to `v`, if `v` is an endpoint.
    pub fn other(&self, v: &str) -> Option<&str> {
        if self.0 == v {
            Some(&self.1)
        } else if self.1 == v {
            Some(&self.0)
        } else {
            None
        }
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.contains(&other.0) || self.contains(&other.1)
    }

    /// Both labels, in sorted order.
    pub fn labels(&self) -> [&str; 2] {
        [&self.0, &self.1]
    }
}

impl TryFrom<(String, String)> for Edge {
    type Error = GraphError;

    fn try_from((a, b): (String, String)) -> Result<Self, Self::Error> {
        Edge::new(a, b)
    }
}

impl From<Edge> for (String, String) {
    fn from(e: Edge) -> Self {
        (e.0, e.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

/// A finite simple graph: an ordered label set plus a set of unordered edges.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    vertices: BTreeSet<String>,
    edges: BTreeSet<Edge>,
}

/// Opaque identity of a graph value, derived from its canonical edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphId(u64);

/// Result of [`Graph::add_whisker`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Whiskered {
    pub graph: Graph,
    pub leaf: String,
}

/// Result of [`Graph::glue_leaves`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Glued {
    pub graph: Graph,
    /// The vertex that replaced both leaves.
    pub vertex: String,
}

/// Result of [`Graph::split_degree2_cycle_vertex`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitVertex {
    pub graph: Graph,
    /// The removed vertex.
    pub vertex: String,
    /// New leaf attached to `neighbors[0]`.
    pub leaf1: String,
    /// New leaf attached to `neighbors[1]`.
    pub leaf2: String,
    pub neighbors: [String; 2],
}

/// The role an edge plays in the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeRole {
    pub edge: Edge,
    pub is_terminal: bool,
    pub on_cycle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleStructure {
    /// Each cycle starts at its smallest label; the second entry is smaller
    /// than the last so that every cycle is listed once.
    pub cycles: Vec<Vec<String>>,
    pub pairwise_disjoint: bool,
    /// `e - |V| + k`, computed from a spanning forest.
    pub cycle_rank: usize,
}

/// Shape of a connected component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComponentClass {
    /// A single vertex without edges.
    Isolated,
    Star,
    Cycle,
    WhiskerOnCycle,
    Other,
}

impl Graph {
    pub fn new() -> Graph {
        Graph::default()
    }

    /// Builds a graph from label pairs. Duplicate pairs collapse.
    pub fn from_edges<I, A, B>(pairs: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (A, B)>,
        A: Into<String>,
        B: Into<String>,
    {
        let mut g = Graph::new();
        for (a, b) in pairs {
            g.insert_edge(Edge::new(a, b)?);
        }
        Ok(g)
    }

    /// Builds a graph from an explicit vertex set and edges over it.
    pub fn from_parts<V, S>(vertices: V, edges: impl IntoIterator<Item = Edge>) -> Result<Graph, GraphError>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut g = Graph::new();
        for v in vertices {
            g.vertices.insert(v.into());
        }
        for e in edges {
            for v in e.labels() {
                if !g.vertices.contains(v) {
                    return Err(GraphError::UnknownVertex(v.to_string()));
                }
            }
            g.edges.insert(e);
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, e: Edge) {
        self.vertices.insert(e.0.clone());
        self.vertices.insert(e.1.clone());
        self.edges.insert(e);
    }

    pub(crate) fn insert_vertex(&mut self, v: impl Into<String>) {
        self.vertices.insert(v.into());
    }

    pub fn vertices(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// True when the graph has no edges (isolated vertices are ignored, as the
    /// graph is identified with its edge set).
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_vertex(&self, v: &str) -> bool {
        self.vertices.contains(v)
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        match Edge::new(a, b) {
            Ok(e) => self.edges.contains(&e),
            Err(_) => false,
        }
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    fn require(&self, v: &str) -> Result<(), GraphError> {
        if self.vertices.contains(v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v.to_string()))
        }
    }

    pub fn id(&self) -> GraphId {
        let digest = Sha256::digest(self.to_edge_list().as_bytes());
        let mut bytes = [0u8; 8];
        bytes.copy_from_slice(&digest[..8]);
        GraphId(u64::from_be_bytes(bytes))
    }

    /// Adjacency map over all vertices.
    pub fn adjacency(&self) -> BTreeMap<&str, BTreeSet<&str>> {
        let mut adj: BTreeMap<&str, BTreeSet<&str>> =
            self.vertices.iter().map(|v| (v.as_str(), BTreeSet::new())).collect();
        for e in &self.edges {
            adj.get_mut(e.first()).unwrap().insert(e.second());
            adj.get_mut(e.second()).unwrap().insert(e.first());
        }
        adj
    }

    pub fn neighbors(&self, x: &str) -> Result<BTreeSet<String>, GraphError> {
        self.require(x)?;
        Ok(self.edges.iter().filter_map(|e| e.other(x)).map(str::to_string).collect())
    }

    pub fn degree(&self, x: &str) -> usize {
        self.edges.iter().filter(|e| e.contains(x)).count()
    }

    /// Vertices with exactly one neighbour.
    pub fn leaves(&self) -> BTreeSet<String> {
        self.adjacency()
            .into_iter()
            .filter(|(_, n)| n.len() == 1)
            .map(|(v, _)| v.to_string())
            .collect()
    }

    pub fn is_leaf(&self, v: &str) -> bool {
        self.degree(v) == 1
    }

    /// An edge with an endpoint of degree one.
    pub fn is_terminal_edge(&self, e: &Edge) -> bool {
        self.is_leaf(e.first()) || self.is_leaf(e.second())
    }

    /// Whether some leaf hangs off `v`.
    pub fn has_whisker(&self, v: &str) -> bool {
        self.edges.iter().filter_map(|e| e.other(v)).any(|w| self.is_leaf(w))
    }

    /// Smallest unused label of the form `{prefix}{k}`.
    pub fn fresh_label(&self, prefix: &str) -> String {
        (0..)
            .map(|k| format!("{prefix}{k}"))
            .find(|l| !self.vertices.contains(l))
            .unwrap()
    }

    /// Same vertex set, without the given edges.
    pub fn without_edges<'a>(&self, removed: impl IntoIterator<Item = &'a Edge>) -> Graph {
        let mut g = self.clone();
        for e in removed {
            g.edges.remove(e);
        }
        g
    }

    /// Adds edges (and their endpoints).
    pub fn with_edges<'a>(&self, added: impl IntoIterator<Item = &'a Edge>) -> Graph {
        let mut g = self.clone();
        for e in added {
            g.insert_edge(e.clone());
        }
        g
    }

    /// Union of vertex and edge sets.
    pub fn union(&self, other: &Graph) -> Graph {
        let mut g = self.clone();
        g.vertices.extend(other.vertices.iter().cloned());
        g.edges.extend(other.edges.iter().cloned());
        g
    }

    /// Edge-set difference; the vertex set shrinks to the endpoints of the
    /// remaining edges.
    pub fn edge_difference(&self, other: &Graph) -> Graph {
        let mut g = Graph::new();
        for e in self.edges.difference(&other.edges) {
            g.insert_edge(e.clone());
        }
        g
    }

    /// The graph spanned by the endpoints of the edges, dropping isolated
    /// vertices.
    pub fn without_isolated(&self) -> Graph {
        let mut g = Graph::new();
        for e in &self.edges {
            g.insert_edge(e.clone());
        }
        g
    }

    /// Vertices that are endpoints of some edge.
    pub fn support(&self) -> BTreeSet<String> {
        self.edges.iter().flat_map(|e| e.labels()).map(str::to_string).collect()
    }

    pub fn rename_vertex(&self, old: &str, new: &str) -> Result<Graph, GraphError> {
        self.require(old)?;
        if old != new && self.vertices.contains(new) {
            return Err(GraphError::Precondition(format!("label `{new}` already in use")));
        }
        let rename = |v: &str| if v == old { new.to_string() } else { v.to_string() };
        let mut g = Graph::new();
        for v in &self.vertices {
            g.vertices.insert(rename(v));
        }
        for e in &self.edges {
            g.edges.insert(Edge::new(rename(e.first()), rename(e.second()))?);
        }
        Ok(g)
    }

    /// Component labels: maps each vertex to the smallest label in its
    /// component.
    fn component_roots(&self) -> BTreeMap<&str, &str> {
        let adj = self.adjacency();
        let mut root = BTreeMap::new();
        for start in self.vertices.iter().map(String::as_str) {
            if root.contains_key(start) {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            root.insert(start, start);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !root.contains_key(w) {
                        root.insert(w, start);
                        queue.push_back(w);
                    }
                }
            }
        }
        root
    }

    /// Connected components, isolated vertices included, ordered by their
    /// smallest label.
    pub fn components(&self) -> Vec<Graph> {
        let roots = self.component_roots();
        let mut parts: BTreeMap<&str, Graph> = BTreeMap::new();
        for (v, r) in &roots {
            parts.entry(r).or_default().insert_vertex(*v);
        }
        for e in &self.edges {
            parts.get_mut(roots[e.first()]).unwrap().edges.insert(e.clone());
        }
        parts.into_values().collect()
    }

    /// Number of connected components, isolated vertices included.
    pub fn component_count(&self) -> usize {
        self.component_roots().values().collect::<BTreeSet<_>>().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Connected component containing `v`.
    pub fn component_of(&self, v: &str) -> Result<Graph, GraphError> {
        self.require(v)?;
        let roots = self.component_roots();
        let r = roots[v];
        let mut g = Graph::new();
        for (w, rw) in &roots {
            if *rw == r {
                g.insert_vertex(*w);
            }
        }
        for e in &self.edges {
            if roots[e.first()] == r {
                g.edges.insert(e.clone());
            }
        }
        Ok(g)
    }

    /// `e - |V| + k`, via union-find over the edge list.
    pub fn cycle_rank(&self) -> usize {
        let index: BTreeMap<&str, usize> =
            self.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        let mut forest_edges = 0;
        for e in &self.edges {
            let (a, b) = (find(&mut parent, index[e.first()]), find(&mut parent, index[e.second()]));
            if a != b {
                parent[a] = b;
                forest_edges += 1;
            }
        }
        self.edges.len() - forest_edges
    }

    /// Edges lying on some cycle, i.e. the non-bridges.
    pub fn cycle_edges(&self) -> BTreeSet<Edge> {
        let labels: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let index: BTreeMap<&str, usize> = labels.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let n = labels.len();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let edges: Vec<&Edge> = self.edges.iter().collect();
        for (k, e) in edges.iter().enumerate() {
            let (a, b) = (index[e.first()], index[e.second()]);
            adj[a].push((b, k));
            adj[b].push((a, k));
        }
        // Iterative lowpoint computation.
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut bridge = vec![false; edges.len()];
        let mut time = 0;
        for s in 0..n {
            if disc[s] != usize::MAX {
                continue;
            }
            let mut stack: Vec<(usize, usize, usize)> = vec![(s, usize::MAX, 0)];
            disc[s] = time;
            low[s] = time;
            time += 1;
            while let Some(&mut (v, via, ref mut next)) = stack.last_mut() {
                if *next < adj[v].len() {
                    let (w, k) = adj[v][*next];
                    *next += 1;
                    if k == via {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, k, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            bridge[via] = true;
                        }
                    }
                }
            }
        }
        edges
            .into_iter()
            .zip(bridge)
            .filter(|(_, b)| !b)
            .map(|(e, _)| e.clone())
            .collect()
    }

    pub fn edge_roles(&self) -> Vec<EdgeRole> {
        let on_cycle = self.cycle_edges();
        self.edges
            .iter()
            .map(|e| EdgeRole {
                edge: e.clone(),
                is_terminal: self.is_terminal_edge(e),
                on_cycle: on_cycle.contains(e),
            })
            .collect()
    }

    /// Vertices lying on some cycle.
    pub fn cycle_vertices(&self) -> BTreeSet<String> {
        self.cycle_edges().iter().flat_map(|e| e.labels()).map(str::to_string).collect()
    }

    pub fn cycle_structure(&self) -> Result<CycleStructure, GraphError> {
        self.cycle_structure_with_limit(DEFAULT_CYCLE_LIMIT)
    }

    /// Enumerates every simple cycle by depth-first search rooted at the
    /// smallest vertex of each cycle.
    pub fn cycle_structure_with_limit(&self, limit: usize) -> Result<CycleStructure, GraphError> {
        let labels: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let index: BTreeMap<&str, usize> = labels.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let n = labels.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for e in &self.edges {
            let (a, b) = (index[e.first()], index[e.second()]);
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }

        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut on_path = vec![false; n];
        for s in 0..n {
            let mut path = vec![s];
            on_path[s] = true;
            // (vertex, next neighbour index)
            let mut stack: Vec<(usize, usize)> = vec![(s, 0)];
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                if *next < adj[v].len() {
                    let w = adj[v][*next];
                    *next += 1;
                    if w == s && path.len() >= 3 && path[1] < *path.last().unwrap() {
                        cycles.push(path.clone());
                        if cycles.len() > limit {
                            return Err(GraphError::TooManyCycles(limit));
                        }
                    } else if w > s && !on_path[w] {
                        on_path[w] = true;
                        path.push(w);
                        stack.push((w, 0));
                    }
                } else {
                    stack.pop();
                    on_path[v] = false;
                    path.pop();
                }
            }
        }

        let mut pairwise_disjoint = true;
        let sets: Vec<BTreeSet<usize>> = cycles.iter().map(|c| c.iter().copied().collect()).collect();
        'outer: for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                if !sets[i].is_disjoint(&sets[j]) {
                    pairwise_disjoint = false;
                    break 'outer;
                }
            }
        }
        let mut cycles: Vec<Vec<String>> = cycles
            .into_iter()
            .map(|c| c.into_iter().map(|i| labels[i].to_string()).collect())
            .collect();
        cycles.sort();
        Ok(CycleStructure { cycles, pairwise_disjoint, cycle_rank: self.cycle_rank() })
    }

    /// Cheap disjointness test: cycles are pairwise vertex-disjoint iff every
    /// block with a cycle is itself a single cycle, i.e. every connected piece
    /// of cycle edges has as many edges as vertices.
    pub fn has_disjoint_cycles(&self) -> bool {
        let cyc = Graph::from_parts(self.vertices.iter().cloned(), self.cycle_edges()).unwrap();
        cyc.components()
            .iter()
            .filter(|c| !c.is_empty())
            .all(|c| c.edge_count() == c.vertex_count())
    }

    /// Classifies a connected graph.
    pub fn classify_component(&self) -> Result<ComponentClass, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Precondition("graph is not connected".into()));
        }
        if self.edges.is_empty() {
            return Ok(ComponentClass::Isolated);
        }
        let adj = self.adjacency();
        if adj.values().any(|n| n.len() == self.edges.len()) {
            return Ok(ComponentClass::Star);
        }
        if adj.values().all(|n| n.len() == 2) {
            return Ok(ComponentClass::Cycle);
        }
        let on_cycle = self.cycle_edges();
        let single_cycle = self.cycle_rank() == 1 && self.has_disjoint_cycles();
        let rest_terminal = self
            .edges
            .iter()
            .filter(|e| !on_cycle.contains(*e))
            .all(|e| self.is_terminal_edge(e));
        if single_cycle && rest_terminal {
            Ok(ComponentClass::WhiskerOnCycle)
        } else {
            Ok(ComponentClass::Other)
        }
    }

    /// Every vertex of degree at least two carries a leaf, so the graph is a
    /// whisker graph over its non-leaf core with every core vertex whiskered.
    /// A single edge is a whisker on an isolated vertex.
    pub fn is_fully_whiskered(&self) -> bool {
        let adj = self.adjacency();
        let leaf = |v: &str| adj[v].len() == 1;
        adj.iter()
            .filter(|(v, n)| n.len() > 1 && !leaf(v))
            .all(|(_, n)| n.iter().any(|w| leaf(w)))
    }

    pub fn add_whisker(&self, x: &str) -> Result<Whiskered, GraphError> {
        self.require(x)?;
        let leaf = self.fresh_label(WHISKER_PREFIX);
        let mut graph = self.clone();
        graph.insert_edge(Edge::new(x, leaf.clone())?);
        Ok(Whiskered { graph, leaf })
    }

    fn check_gluable(&self, x1: &str, x2: &str) -> Result<(String, String), GraphError> {
        self.require(x1)?;
        self.require(x2)?;
        if !self.is_leaf(x1) || !self.is_leaf(x2) {
            return Err(GraphError::Precondition(format!("{x1} and {x2} must both be leaves")));
        }
        let y1 = self.neighbors(x1)?.into_iter().next().unwrap();
        let y2 = self.neighbors(x2)?.into_iter().next().unwrap();
        if y1 == y2 || y1 == x2 || y2 == x1 {
            return Err(GraphError::Precondition(format!(
                "edges {x1}{y1} and {x2}{y2} are not disjoint"
            )));
        }
        Ok((y1, y2))
    }

    /// Identifies two leaves on disjoint edges into one fresh vertex.
    pub fn glue_leaves(&self, x1: &str, x2: &str) -> Result<Glued, GraphError> {
        let vertex = self.fresh_label(GLUE_PREFIX);
        let graph = self.glue_leaves_as(x1, x2, &vertex)?;
        Ok(Glued { graph, vertex })
    }

    /// Like [`Graph::glue_leaves`], naming the merged vertex explicitly.
    pub fn glue_leaves_as(&self, x1: &str, x2: &str, vertex: &str) -> Result<Graph, GraphError> {
        let (y1, y2) = self.check_gluable(x1, x2)?;
        if self.vertices.contains(vertex) && vertex != x1 && vertex != x2 {
            return Err(GraphError::Precondition(format!("label `{vertex}` already in use")));
        }
        let mut g = self.without_edges(&[Edge::new(x1, y1.clone())?, Edge::new(x2, y2.clone())?]);
        g.vertices.remove(x1);
        g.vertices.remove(x2);
        g.insert_edge(Edge::new(vertex, y1)?);
        g.insert_edge(Edge::new(vertex, y2)?);
        Ok(g)
    }

    /// Replaces the two edges at a degree-2 cycle vertex `x` by two pendant
    /// edges ending in new leaves, destroying the cycle through `x`.
    pub fn split_degree2_cycle_vertex(&self, x: &str) -> Result<SplitVertex, GraphError> {
        self.require(x)?;
        let nbrs: Vec<String> = self.neighbors(x)?.into_iter().collect();
        if nbrs.len() != 2 {
            return Err(GraphError::Precondition(format!("{x} has degree {}, not 2", nbrs.len())));
        }
        if !self.cycle_vertices().contains(x) {
            return Err(GraphError::Precondition(format!("{x} lies on no cycle")));
        }
        let mut g = self.without_edges(&[Edge::new(x, nbrs[0].clone())?, Edge::new(x, nbrs[1].clone())?]);
        g.vertices.remove(x);
        let leaf1 = g.fresh_label(SPLIT_PREFIX);
        g.insert_edge(Edge::new(leaf1.clone(), nbrs[0].clone())?);
        let leaf2 = g.fresh_label(SPLIT_PREFIX);
        g.insert_edge(Edge::new(leaf2.clone(), nbrs[1].clone())?);
        Ok(SplitVertex {
            graph: g,
            vertex: x.to_string(),
            leaf1,
            leaf2,
            neighbors: [nbrs[0].clone(), nbrs[1].clone()],
        })
    }

    /// Splits the graph at a non-terminal bridge `ax` into the component of `a`
    /// in `G - ax` and everything else.
    pub fn decompose_at_edge(&self, a: &str, x: &str) -> Result<(Graph, Graph), GraphError> {
        let e = Edge::new(a, x)?;
        if !self.edges.contains(&e) {
            return Err(GraphError::UnknownEdge(a.to_string(), x.to_string()));
        }
        if self.is_terminal_edge(&e) {
            return Err(GraphError::Precondition(format!("{e} is a terminal edge")));
        }
        if self.cycle_edges().contains(&e) {
            return Err(GraphError::Precondition(format!("{e} lies on a cycle")));
        }
        let rest = self.without_edges([&e]);
        let g1 = rest.component_of(a)?;
        let mut g2 = Graph::new();
        for v in rest.vertices.difference(&g1.vertices) {
            g2.insert_vertex(v.clone());
        }
        for f in rest.edges.difference(&g1.edges) {
            g2.edges.insert(f.clone());
        }
        Ok((g1, g2))
    }

    /// Neighbours of `x` that lie on no cycle through `x`.
    pub fn free_neighbors(&self, x: &str) -> Result<BTreeSet<String>, GraphError> {
        let on_cycle = self.cycle_edges();
        Ok(self
            .neighbors(x)?
            .into_iter()
            .filter(|y| !on_cycle.contains(&Edge::new(x, y.clone()).unwrap()))
            .collect())
    }

    /// Neighbours of `x` sharing a cycle with it.
    pub fn non_free_neighbors(&self, x: &str) -> Result<BTreeSet<String>, GraphError> {
        let free = self.free_neighbors(x)?;
        Ok(self.neighbors(x)?.into_iter().filter(|y| !free.contains(y)).collect())
    }

    /// Canonical edge-list text: declared isolated vertices, then edges.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let support = self.support();
        for v in self.vertices.difference(&support) {
            out.push_str(&format!("vertex {v}\n"));
        }
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", e.first(), e.second()));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(|e| format!("{}-{}", e.0, e.1)).collect();
        let support = self.support();
        let isolated: Vec<&String> = self.vertices.difference(&support).collect();
        if isolated.is_empty() {
            write!(f, "Graph{{{}}}", edges.join(", "))
        } else {
            write!(f, "Graph{{{}; isolated {:?}}}", edges.join(", "), isolated)
        }
    }
}

/// Parses the edge-list format: one edge per line as two whitespace-separated
/// labels, `#` starts a comment, `vertex <label>` declares a vertex.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut g = Graph::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["vertex", label] => g.insert_vertex(*label),
            [a, b] if a == b => return Err(GraphError::Loop { line, label: a.to_string() }),
            [a, b] => g.insert_edge(Edge::new(*a, *b).unwrap()),
            _ => {
                return Err(GraphError::Parse {
                    line,
                    message: format!("expected two labels, found {} token(s)", tokens.len()),
                })
            }
        }
    }
    Ok(g)
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_graph(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g1() -> Graph {
        parse_graph(include_str!("../fixtures/g1.edges")).unwrap()
    }

    fn path(labels: &[&str]) -> Graph {
        Graph::from_edges(labels.windows(2).map(|w| (w[0], w[1]))).unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<String> {
        items.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_examples() {
        let g = parse_graph("a b\nb c").unwrap();
        assert_eq!(g.vertices(), &set(&["a", "b", "c"]));
        assert_eq!(g.edge_count(), 2);
        assert_eq!(parse_graph("a b\nb a").unwrap().edge_count(), 1);
        assert!(matches!(parse_graph("a a"), Err(GraphError::Loop { line: 1, .. })));
        assert!(matches!(
            parse_graph("# header\na b\nc\n"),
            Err(GraphError::Parse { line: 3, .. })
        ));
        let g = parse_graph("vertex z\n\na b # comment\n").unwrap();
        assert!(g.contains_vertex("z"));
        assert_eq!(g.degree("z"), 0);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = parse_graph("vertex q\nb a\nc b\n").unwrap();
        assert_eq!(parse_graph(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn neighbours_and_leaves() {
        let star = Graph::from_edges([("x", "y1"), ("x", "y2"), ("x", "y3")]).unwrap();
        assert_eq!(star.neighbors("x").unwrap(), set(&["y1", "y2", "y3"]));
        let mut g = star.clone();
        g.insert_vertex("z");
        assert!(g.neighbors("z").unwrap().is_empty());
        assert!(matches!(g.neighbors("nope"), Err(GraphError::UnknownVertex(_))));

        assert_eq!(g1().neighbors("x1").unwrap(), set(&["x2", "x4", "y1"]));
        assert_eq!(path(&["a", "b", "c"]).leaves(), set(&["a", "c"]));
        assert!(path(&["a", "b", "c", "a"]).leaves().is_empty());
        assert_eq!(g1().leaves(), set(&["y3", "y4"]));
    }

    #[test]
    fn cycle_structure_examples() {
        let forest = path(&["a", "b", "c"]).union(&path(&["d", "e"]));
        let cs = forest.cycle_structure().unwrap();
        assert!(cs.cycles.is_empty() && cs.pairwise_disjoint && cs.cycle_rank == 0);

        let cs = g1().cycle_structure().unwrap();
        assert_eq!(cs.cycles, vec![vec!["x1", "x2", "x3", "x4"]]);
        assert!(cs.pairwise_disjoint);
        assert_eq!(cs.cycle_rank, 1);

        let bowtie = path(&["a", "b", "c", "a"]).union(&path(&["a", "d", "e", "a"]));
        let cs = bowtie.cycle_structure().unwrap();
        assert_eq!(cs.cycles.len(), 2);
        assert!(!cs.pairwise_disjoint);
        assert!(!bowtie.has_disjoint_cycles());
    }

    #[test]
    fn k4_has_seven_cycles() {
        let k4 = Graph::from_edges([("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")])
            .unwrap();
        let cs = k4.cycle_structure().unwrap();
        // 4 triangles + 3 four-cycles
        assert_eq!(cs.cycles.len(), 7);
        assert_eq!(cs.cycle_rank, 3);
    }

    #[test]
    fn cycle_guard_trips() {
        let mut pairs = Vec::new();
        for i in 0..9 {
            for j in i + 1..9 {
                pairs.push((format!("v{i}"), format!("v{j}")));
            }
        }
        let k9 = Graph::from_edges(pairs).unwrap();
        assert_eq!(k9.cycle_structure(), Err(GraphError::TooManyCycles(DEFAULT_CYCLE_LIMIT)));
    }

    #[test]
    fn component_classes() {
        let k13 = Graph::from_edges([("c", "a"), ("c", "b"), ("c", "d")]).unwrap();
        assert_eq!(k13.classify_component().unwrap(), ComponentClass::Star);
        let c5 = path(&["a", "b", "c", "d", "e", "a"]);
        assert_eq!(c5.classify_component().unwrap(), ComponentClass::Cycle);
        let tri_pendant = path(&["a", "b", "c", "a"]).with_edges(&[Edge::new("a", "p").unwrap()]);
        assert_eq!(tri_pendant.classify_component().unwrap(), ComponentClass::WhiskerOnCycle);
        let long_tail = tri_pendant.with_edges(&[Edge::new("p", "q").unwrap()]);
        assert_eq!(long_tail.classify_component().unwrap(), ComponentClass::Other);
        assert!(long_tail.union(&path(&["u", "v"])).classify_component().is_err());
    }

    #[test]
    fn fully_whiskered_examples() {
        assert!(path(&["a", "b"]).is_fully_whiskered());
        // a path on four vertices is the whiskered edge b-c
        assert!(path(&["a", "b", "c", "d"]).is_fully_whiskered());
        assert!(!path(&["a", "b", "c", "d", "e"]).is_fully_whiskered());
        let mut c4 = path(&["a", "b", "c", "d", "a"]);
        assert!(!c4.is_fully_whiskered());
        for v in ["a", "b", "c", "d"] {
            c4 = c4.add_whisker(v).unwrap().graph;
        }
        assert!(c4.is_fully_whiskered());
    }

    #[test]
    fn whiskers_get_fresh_labels() {
        let mut g = Graph::new();
        g.insert_vertex("a");
        let w = g.add_whisker("a").unwrap();
        assert_eq!(w.leaf, "_w0");
        assert_eq!(w.graph.edges().iter().next().unwrap(), &Edge::new("a", "_w0").unwrap());
        let mut t = path(&["a", "b", "c", "a"]);
        for v in ["a", "b", "c"] {
            t = t.add_whisker(v).unwrap().graph;
        }
        assert!(t.is_fully_whiskered());
        assert_eq!(t.leaves(), set(&["_w0", "_w1", "_w2"]));
        let cs = t.cycle_structure().unwrap();
        assert!(cs.pairwise_disjoint && cs.cycles.len() == 1);
        assert!(g.add_whisker("zz").is_err());
    }

    #[test]
    fn glue_examples() {
        let two = Graph::from_edges([("a", "b"), ("c", "d")]).unwrap();
        let glued = two.glue_leaves("a", "c").unwrap();
        assert_eq!(glued.graph, path(&["b", &glued.vertex, "d"]));

        let g = path(&["x1", "y1", "m", "y2", "x2"]);
        let glued = g.glue_leaves("x1", "x2").unwrap();
        let cs = glued.graph.cycle_structure().unwrap();
        assert_eq!(cs.cycles.len(), 1);
        assert_eq!(cs.cycles[0].len(), 4);
        assert_eq!(glued.graph.vertex_count(), 4);

        let cherry = path(&["a", "b", "c"]);
        assert!(matches!(cherry.glue_leaves("a", "c"), Err(GraphError::Precondition(_))));
        assert!(cherry.glue_leaves("a", "b").is_err());
    }

    #[test]
    fn split_examples() {
        let tri = path(&["a", "b", "c", "a"]);
        let s = tri.split_degree2_cycle_vertex("a").unwrap();
        assert_eq!(s.graph, path(&[&s.leaf1, "b", "c", &s.leaf2]));
        assert_eq!(s.graph.cycle_rank(), 0);

        let c4 = path(&["a", "b", "c", "d", "a"]);
        let s = c4.split_degree2_cycle_vertex("c").unwrap();
        assert_eq!(s.graph.vertex_count(), 5);
        assert_eq!(s.graph.edge_count(), 4);
        assert_eq!(s.graph.leaves().len(), 2);
        let back = s.graph.glue_leaves_as(&s.leaf1, &s.leaf2, "c").unwrap();
        assert_eq!(back, c4);

        assert!(path(&["a", "b", "c"]).split_degree2_cycle_vertex("b").is_err());
        assert!(g1().split_degree2_cycle_vertex("x1").is_err());
    }

    #[test]
    fn decompose_examples() {
        let p = path(&["a0", "a", "x", "x0"]);
        let (left, right) = p.decompose_at_edge("a", "x").unwrap();
        assert_eq!(left, path(&["a0", "a"]));
        assert_eq!(right, path(&["x", "x0"]));

        let g = g1();
        let (c, rest) = g.decompose_at_edge("x1", "y1").unwrap();
        assert_eq!(c.classify_component().unwrap(), ComponentClass::Cycle);
        assert_eq!(rest.edge_count(), 3);
        assert!(rest.contains_vertex("y1"));

        assert!(p.decompose_at_edge("a0", "a").is_err());
        assert!(g.decompose_at_edge("x1", "x2").is_err());
    }

    #[test]
    fn free_neighbour_examples() {
        let g = g1();
        assert_eq!(g.free_neighbors("x1").unwrap(), set(&["y1"]));
        assert_eq!(g.non_free_neighbors("x1").unwrap(), set(&["x2", "x4"]));
        assert_eq!(g.free_neighbors("y2").unwrap(), set(&["y1", "y3", "y4"]));
        let tri = path(&["a", "b", "c", "a"]);
        for v in ["a", "b", "c"] {
            assert!(tri.free_neighbors(v).unwrap().is_empty());
        }
    }

    #[test]
    fn edge_roles_of_g1() {
        let roles = g1().edge_roles();
        let terminal: Vec<String> =
            roles.iter().filter(|r| r.is_terminal).map(|r| r.edge.to_string()).collect();
        assert_eq!(terminal, vec!["y2y3", "y2y4"]);
        assert_eq!(roles.iter().filter(|r| r.on_cycle).count(), 4);
    }
}
