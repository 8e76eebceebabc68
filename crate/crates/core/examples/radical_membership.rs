//! Radical membership by the Rabinowitsch trick, compared with plain ideal
//! membership.

use edge_ara::poly::{groebner_basis, MonomialOrder, Ring};
use edge_ara::verify::radical_membership;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = Ring::new(["a", "w", "x", "y"])?;
    let gens = [r.parse("a*x")?, r.parse("x*y + a*w")?];
    let gb = groebner_basis(&gens, &MonomialOrder::grevlex(r.len()))?;
    println!("basis of (a*x, x*y + a*w):");
    for g in gb.generators() {
        println!("  {}", r.format(&g));
    }
    for f in ["x*y", "a*w", "x^2*y^2", "a*y", "w*x"] {
        let p = r.parse(f)?;
        println!("{f:>8}: in ideal {:<5} in radical {}", gb.contains(&p), radical_membership(&r, &p, &gens)?);
    }
    Ok(())
}
