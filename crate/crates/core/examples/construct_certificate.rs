//! Builds radical generators for a graph, prints the trace, and replays it.
//!
//! cargo run --example construct_certificate -- fixtures/construct_pair_cycle.edges

use std::env;
use std::fs;

use edge_ara::construct::{construct_generators, replay_trace, ConstructOptions};
use edge_ara::graph::parse_graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/g2.edges").to_string());
    let g = parse_graph(&fs::read_to_string(&path)?)?;
    let cert = construct_generators(&g, ConstructOptions::default())?;

    println!("{} generators, bound {} = {} + {}", cert.len(), cert.bound(), cert.big_height, cert.cycle_rank);
    for (i, q) in cert.generators.iter().enumerate() {
        println!("  q{i} = {}", q.format());
    }
    println!("trace:");
    for step in &cert.trace {
        println!("  {}", serde_json::to_string(step)?);
    }
    assert_eq!(replay_trace(&cert.trace)?, cert.generators);
    println!("replay reproduces the generators");
    Ok(())
}
