//! Executable forms of the cover laws, checked on samples.
//!
//! - whisker: `bight(G) <= bight(G + whisker at x) <= bight(G) + 1`, with
//!   equality on the left exactly when `x` is in every maximum cover;
//! - gluing: identifying two leaves on disjoint edges lowers the big height
//!   by at most one;
//! - redundancy: for a minimal cover `C` avoiding `x` and `y ∈ C ∩ N(x)`,
//!   `y` is redundant iff `C \ {y}` is a minimal cover of `G \ {xy}`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cover::{self, big_height, is_minimal_cover, CoverError};
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawTally {
    pub law: &'static str,
    pub checked: usize,
    pub violations: Vec<String>,
}

impl LawTally {
    fn new(law: &'static str) -> LawTally {
        LawTally { law, checked: 0, violations: Vec::new() }
    }

    fn record(&mut self, violation: Option<String>) {
        self.checked += 1;
        self.violations.extend(violation);
    }
}

/// `None` when the law holds at `x`.
pub fn whisker_law(g: &Graph, x: &str) -> Result<Option<String>, CoverError> {
    let b = big_height(g)?;
    let w = g.add_whisker(x)?;
    let bw = big_height(&w.graph)?;
    let forced = cover::vertex_in_all_maximum_covers(g, x)?;
    if bw < b || bw > b + 1 {
        return Ok(Some(format!("whisker at {x}: big height {b} -> {bw}")));
    }
    if (bw == b) != forced {
        return Ok(Some(format!("whisker at {x}: big height {b} -> {bw} but in-all-maximum-covers is {forced}")));
    }
    Ok(None)
}

/// Adds whiskers at `x` and at the next vertex in label order, then glues
/// the two new leaves.
pub fn gluing_law(g: &Graph, x: &str) -> Result<Option<String>, CoverError> {
    let vs: Vec<&String> = g.vertices().iter().collect();
    let Some(pos) = vs.iter().position(|v| *v == x) else {
        return Err(crate::graph::GraphError::UnknownVertex(x.to_string()).into());
    };
    if vs.len() < 2 {
        return Ok(None);
    }
    let y = vs[(pos + 1) % vs.len()].clone();
    let w1 = g.add_whisker(x)?;
    let w2 = w1.graph.add_whisker(&y)?;
    let before = big_height(&w2.graph)?;
    let glued = w2.graph.glue_leaves(&w1.leaf, &w2.leaf)?;
    let after = big_height(&glued.graph)?;
    if after + 1 < before {
        return Ok(Some(format!("gluing whiskers at {x} and {y}: big height {before} -> {after}")));
    }
    Ok(None)
}

/// Checks every neighbour in every minimal cover avoiding `x`.
pub fn redundancy_law(g: &Graph, x: &str) -> Result<Vec<Option<String>>, CoverError> {
    let mut out = Vec::new();
    for c in cover::enumerate_minimal_covers(g)? {
        if c.contains(x) {
            continue;
        }
        let redundant = cover::redundant_neighbors(g, &c, x)?;
        for y in g.neighbors(x)? {
            if !c.contains(&y) {
                continue;
            }
            let h = g.without_edges([&Edge::new(x, y.clone())?]);
            let rest: BTreeSet<String> = c.vertices().iter().filter(|v| **v != y).cloned().collect();
            let minimal = is_minimal_cover(&h, &rest);
            out.push((minimal != redundant.contains(&y)).then(|| {
                format!("cover {:?}, neighbour {y} of {x}: redundant {} but minimal after removal {minimal}", c.to_vec(), redundant.contains(&y))
            }));
        }
    }
    Ok(out)
}

pub fn check_cover_laws(samples: &[(Graph, String)]) -> Result<Vec<LawTally>, CoverError> {
    let mut whisker = LawTally::new("whisker");
    let mut gluing = LawTally::new("gluing");
    let mut redundancy = LawTally::new("redundancy");
    for (g, x) in samples {
        let tag = |m: String| format!("{m} in [{}]", g.to_edge_list().trim().replace('\n', "; "));
        whisker.record(whisker_law(g, x)?.map(tag));
        gluing.record(gluing_law(g, x)?.map(tag));
        for v in redundancy_law(g, x)? {
            redundancy.record(v.map(tag));
        }
    }
    Ok(vec![whisker, gluing, redundancy])
}
