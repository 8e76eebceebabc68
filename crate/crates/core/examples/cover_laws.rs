//! Tallies the whisker, gluing and redundancy laws over random vertex samples.

use edge_ara::laws::check_cover_laws;
use edge_ara::random::{random_vertex_samples, GraphShape, DEFAULT_SEED};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let samples = random_vertex_samples(DEFAULT_SEED, 200, GraphShape { max_vertices: 10, max_cycles: 2 });
    for t in check_cover_laws(&samples)? {
        println!("{:<10} {:>5} checked, {} violations", t.law, t.checked, t.violations.len());
        for v in t.violations.iter().take(3) {
            println!("  {v}");
        }
    }
    Ok(())
}
