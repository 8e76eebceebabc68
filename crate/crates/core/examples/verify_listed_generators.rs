//! Checks hand-written generator lists for the two bundled example graphs,
//! then shows that dropping any one generator breaks the equality.

use edge_ara::graph::parse_graph;
use edge_ara::poly::Polynomial;
use edge_ara::verify::{graph_ring, verify_radical_equals_edge_ideal, VerifyOptions};

const CASES: [(&str, &str, &str); 2] = [
    ("g1", include_str!("../fixtures/g1.edges"), include_str!("../fixtures/g1_listed.poly")),
    ("g2", include_str!("../fixtures/g2.edges"), include_str!("../fixtures/g2_listed.poly")),
];

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, edges, list) in CASES {
        let g = parse_graph(edges)?;
        let ring = graph_ring(&g);
        let gens = list
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty())
            .map(|l| ring.parse(l))
            .collect::<Result<Vec<Polynomial>, _>>()?;
        let v = verify_radical_equals_edge_ideal(&g, &ring, &gens, VerifyOptions::default())?;
        println!("{name}: {} generators, {}", gens.len(), v.describe());
        for i in 0..gens.len() {
            let mut fewer = gens.clone();
            fewer.remove(i);
            let v = verify_radical_equals_edge_ideal(&g, &ring, &fewer, VerifyOptions::default())?;
            println!("  without q{i}: {}", v.describe());
        }
    }
    Ok(())
}
