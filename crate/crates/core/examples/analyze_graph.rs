//! Cover data and cycle structure of a graph read from an edge list.
//!
//! cargo run --example analyze_graph -- fixtures/g2.edges

use std::env;
use std::fs;

use edge_ara::cover::cover_summary;
use edge_ara::graph::parse_graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/g1.edges").to_string());
    let g = parse_graph(&fs::read_to_string(&path)?)?;
    let s = cover_summary(&g)?;

    println!("{path}: {} vertices, {} edges, {} components", g.vertex_count(), g.edge_count(), g.component_count());
    println!("height {}, big height {}, {} minimal covers", s.height, s.big_height, s.count);
    for c in &s.maximum_covers {
        println!("  maximum cover {{{}}}", c.join(", "));
    }
    println!("cycle rank {}, disjoint cycles: {}", g.cycle_rank(), g.has_disjoint_cycles());
    println!("ara <= {}", s.big_height + g.cycle_rank());
    Ok(())
}
