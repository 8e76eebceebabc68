//! Classifies every vertex of a graph by how its big height reacts to
//! removing edges at that vertex.
//!
//! cargo run --example classify_removal -- fixtures/g1.edges

use std::env;
use std::fs;

use edge_ara::cover::classify_removal;
use edge_ara::graph::parse_graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/g1.edges").to_string());
    let g = parse_graph(&fs::read_to_string(&path)?)?;
    for x in g.vertices() {
        let o = classify_removal(&g, x)?;
        let mut line = format!("{x:>4}: {:?}", o.case);
        if let Some(w) = &o.witness {
            line += &format!(" witness {w}");
        }
        if let Some(z) = &o.companion {
            line += &format!(" companion {z}");
        }
        if let Some((h, _)) = &o.parts {
            line += &format!(" split part has {} edges", h.edge_count());
        }
        if let Some(r) = &o.reason {
            line += &format!(" ({r})");
        }
        println!("{line}");
    }
    Ok(())
}
