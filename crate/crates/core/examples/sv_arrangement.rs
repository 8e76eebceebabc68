//! Searches for a layered arrangement of the edges of a whiskered triangle
//! and checks its row conditions.

use edge_ara::graph::parse_graph;
use edge_ara::sv::{shortest_arrangement, sv_check, DEFAULT_NODE_LIMIT};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = parse_graph("a b\nb c\nc a\na a1\nb b1\nc c1\n")?;
    let bight = edge_ara::cover::big_height(&g)?;
    let arr = shortest_arrangement(&g, bight, bight + g.cycle_rank(), DEFAULT_NODE_LIMIT)?.ok_or("no arrangement in range")?;
    println!("{} rows (big height {bight})", arr.len());
    for (l, row) in arr.rows.iter().enumerate() {
        let terms: Vec<String> = row.iter().map(|e| format!("{}*{}", e.first(), e.second())).collect();
        println!("  P{l}: {}", terms.join(" + "));
    }
    println!("row conditions hold: {}", sv_check(&arr, g.edges()));
    Ok(())
}
