//! Layered arrangements of edge monomials whose row sums generate `I(G)` up
//! to radical.
//!
//! Rows `P_0, ..., P_r` with `|P_0| = 1` such that for any two distinct
//! `p, p''` in a row `P_l` (`l >= 1`) some `p'` in an earlier row divides
//! `p·p''`. Then the row sums `q_l` satisfy `√(q_0, ..., q_r) = √(P)`.
//!
//! For edge monomials `p'` must be an edge inside `supp(p) ∪ supp(p'')`
//! other than `p` and `p''`: the edge closing a triangle when the two share a
//! vertex, or one of the four connecting edges when they are disjoint.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph};

/// Search nodes allowed per arrangement search.
pub const DEFAULT_NODE_LIMIT: u64 = 1_000_000;

/// Most monomials allowed per row, so each generator has at most 3 terms.
pub const MAX_ROW: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SvError {
    #[error("arrangement search exceeded {0} nodes")]
    Budget(u64),
    #[error("arrangement search supports at most 128 edges, graph has {0}")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SvArrangement {
    pub rows: Vec<Vec<Edge>>,
}

impl SvArrangement {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Whether the edge monomial `d` divides `p·q`.
fn divides_product(d: &Edge, p: &Edge, q: &Edge) -> bool {
    d.labels().iter().all(|v| p.contains(v) || q.contains(v))
}

/// Checks the row conditions and that the rows partition `target`.
pub fn sv_check(arr: &SvArrangement, target: &BTreeSet<Edge>) -> bool {
    if arr.rows.is_empty() {
        return target.is_empty();
    }
    if arr.rows[0].len() != 1 {
        return false;
    }
    let mut seen = BTreeSet::new();
    for row in &arr.rows {
        for e in row {
            if !target.contains(e) || !seen.insert(e.clone()) {
                return false;
            }
        }
    }
    if seen.len() != target.len() {
        return false;
    }
    let mut earlier: Vec<&Edge> = arr.rows[0].iter().collect();
    for row in &arr.rows[1..] {
        for (i, p) in row.iter().enumerate() {
            for q in &row[i + 1..] {
                if !earlier.iter().any(|d| divides_product(d, p, q)) {
                    return false;
                }
            }
        }
        earlier.extend(row);
    }
    true
}

/// Precomputed link structure: for each unordered pair of edges, the edges
/// that can serve as an earlier divisor.
struct Links {
    edges: Vec<Edge>,
    links: Vec<Vec<u128>>,
}

impl Links {
    fn new(g: &Graph) -> Result<Links, SvError> {
        let m = g.edge_count();
        if m > 128 {
            return Err(SvError::TooLarge(m));
        }
        let mut edges: Vec<Edge> = g.edges().iter().cloned().collect();
        // edges near many others first: they are the ones usable as links
        let adj = g.adjacency();
        let weight = |e: &Edge| adj[e.first()].len() + adj[e.second()].len();
        edges.sort_by(|a, b| weight(b).cmp(&weight(a)).then_with(|| a.cmp(b)));
        let mut links = vec![vec![0u128; m]; m];
        for i in 0..m {
            for j in i + 1..m {
                let mut mask = 0u128;
                for (k, d) in edges.iter().enumerate() {
                    if k != i && k != j && divides_product(d, &edges[i], &edges[j]) {
                        mask |= 1 << k;
                    }
                }
                links[i][j] = mask;
                links[j][i] = mask;
            }
        }
        Ok(Links { edges, links })
    }

    fn compatible(&self, i: usize, j: usize, placed: u128) -> bool {
        self.links[i][j] & placed != 0
    }
}

struct Search<'a> {
    l: &'a Links,
    all: u128,
    failed: HashSet<(u128, usize)>,
    nodes: u64,
    limit: u64,
    rows: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<(), SvError> {
        self.nodes += 1;
        if self.nodes > self.limit {
            Err(SvError::Budget(self.limit))
        } else {
            Ok(())
        }
    }

    /// Rows that are compatible under `placed` and either full or not
    /// extendable; moving an extendable edge into an earlier row never hurts.
    fn candidate_rows(&self, placed: u128) -> Vec<Vec<usize>> {
        let free: Vec<usize> = (0..self.l.edges.len()).filter(|&i| (self.all & !placed) >> i & 1 == 1).collect();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.grow(&free, 0, placed, &mut cur, &mut out);
        out
    }

    fn grow(&self, free: &[usize], from: usize, placed: u128, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let ok = |e: usize, cur: &[usize]| cur.iter().all(|&f| self.l.compatible(e, f, placed));
        if cur.len() == MAX_ROW {
            out.push(cur.clone());
            return;
        }
        let mut extended = false;
        for k in from..free.len() {
            let e = free[k];
            if ok(e, cur) {
                extended = true;
                cur.push(e);
                self.grow(free, k + 1, placed, cur, out);
                cur.pop();
            }
        }
        if !extended && !cur.is_empty() {
            // skipped edges before `from` may still extend this row; it is
            // then produced again along the branch that includes them
            let maximal = free.iter().all(|&e| cur.contains(&e) || !ok(e, cur));
            if maximal {
                out.push(cur.clone());
            }
        }
    }

    fn run(&mut self, placed: u128, left: usize) -> Result<bool, SvError> {
        if placed == self.all {
            return Ok(true);
        }
        let remaining = (self.all & !placed).count_ones() as usize;
        if left == 0 || remaining > left * MAX_ROW || self.failed.contains(&(placed, left)) {
            return Ok(false);
        }
        self.tick()?;
        for row in self.candidate_rows(placed) {
            let mask = row.iter().fold(0u128, |m, &i| m | 1 << i);
            self.rows.push(row);
            if self.run(placed | mask, left - 1)? {
                return Ok(true);
            }
            self.rows.pop();
        }
        self.failed.insert((placed, left));
        Ok(false)
    }
}

/// Searches for an arrangement of the edges of `g` with at most `rows` rows.
pub fn find_arrangement(g: &Graph, rows: usize, node_limit: u64) -> Result<Option<SvArrangement>, SvError> {
    if g.edge_count() == 0 {
        return Ok(Some(SvArrangement { rows: Vec::new() }));
    }
    if rows == 0 {
        return Ok(None);
    }
    let l = Links::new(g)?;
    let m = l.edges.len();
    let all = if m == 128 { u128::MAX } else { (1u128 << m) - 1 };
    let mut s = Search { l: &l, all, failed: HashSet::new(), nodes: 0, limit: node_limit, rows: Vec::new() };
    for first in 0..m {
        s.rows.push(vec![first]);
        if s.run(1 << first, rows - 1)? {
            let rows = s.rows.iter().map(|r| r.iter().map(|&i| l.edges[i].clone()).collect()).collect();
            return Ok(Some(SvArrangement { rows }));
        }
        s.rows.pop();
    }
    Ok(None)
}

/// The shortest arrangement with between `from` and `to` rows.
pub fn shortest_arrangement(g: &Graph, from: usize, to: usize, node_limit: u64) -> Result<Option<SvArrangement>, SvError> {
    for rows in from..=to {
        if let Some(a) = find_arrangement(g, rows, node_limit)? {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::big_height;
    use crate::graph::parse_graph;

    fn e(a: &str, b: &str) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn check_examples() {
        let target: BTreeSet<Edge> = [e("x1", "x2"), e("x1", "x4"), e("x2", "x3")].into();
        let good = SvArrangement { rows: vec![vec![e("x1", "x2")], vec![e("x1", "x4"), e("x2", "x3")]] };
        assert!(sv_check(&good, &target));
        let singles = SvArrangement { rows: target.iter().map(|x| vec![x.clone()]).collect() };
        assert!(sv_check(&singles, &target));
        let bad = SvArrangement { rows: vec![vec![e("x1", "x4")], vec![e("x1", "x2"), e("x2", "x3")]] };
        assert!(!sv_check(&bad, &target));
        let wide_first = SvArrangement { rows: vec![vec![e("x1", "x2"), e("x1", "x4")], vec![e("x2", "x3")]] };
        assert!(!sv_check(&wide_first, &target));
        let missing = SvArrangement { rows: vec![vec![e("x1", "x2")]] };
        assert!(!sv_check(&missing, &target));
    }

    #[test]
    fn paths_and_stars_reach_big_height() {
        for g in [
            Graph::from_edges([("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")]).unwrap(),
            Graph::from_edges([("x", "a"), ("x", "b"), ("x", "c")]).unwrap(),
            parse_graph("a b\nb c\nc d\na a1\nb b1\nc c1\nd d1\n").unwrap(),
        ] {
            let b = big_height(&g).unwrap();
            let a = find_arrangement(&g, b, DEFAULT_NODE_LIMIT).unwrap().expect("arrangement");
            assert_eq!(a.len(), b);
            assert!(sv_check(&a, g.edges()));
            assert!(find_arrangement(&g, b - 1, DEFAULT_NODE_LIMIT).unwrap().is_none());
        }
    }

    #[test]
    fn whiskered_triangle_pairs_whiskers_through_the_triangle() {
        let g = parse_graph("a b\nb c\na c\na a1\nb b1\nc c1\n").unwrap();
        assert_eq!(big_height(&g).unwrap(), 3);
        let a = shortest_arrangement(&g, 3, 6, DEFAULT_NODE_LIMIT).unwrap().unwrap();
        assert_eq!(a.len(), 3);
        assert!(sv_check(&a, g.edges()));
        assert_eq!(a.rows[2].len(), 3);
    }

    #[test]
    fn budget_is_reported() {
        let g = parse_graph(include_str!("../fixtures/g2.edges")).unwrap();
        assert_eq!(find_arrangement(&g, 10, 5), Err(SvError::Budget(5)));
    }
}
