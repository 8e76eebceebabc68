//! Exact check that a list of polynomials generates `I(G)` up to radical.
//!
//! `√J ⊆ I(G)` holds exactly when `J ⊆ I(G)`, because `I(G)` is radical, and
//! for a monomial ideal that means every term of every generator is divisible
//! by an edge monomial. `I(G) ⊆ √J` is checked edge by edge with the
//! Rabinowitsch trick: `f ∈ √J` iff `1 ∈ J + (1 - t·f)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::poly::{GroebnerBasis, GroebnerError, Monomial, MonomialOrder, OrderKind, PolyError, Polynomial, Ring, DEFAULT_STEP_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("generator {0} is zero")]
    ZeroGenerator(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub order: OrderKind,
    pub step_limit: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { order: OrderKind::DegRevLex, step_limit: DEFAULT_STEP_LIMIT }
    }
}

/// The polynomial ring on the vertices of `g`, in label order.
pub fn graph_ring(g: &Graph) -> Ring {
    Ring::new(g.vertices().iter().cloned()).expect("vertex labels are distinct")
}

pub fn edge_monomial(ring: &Ring, e: &Edge) -> Result<Monomial, PolyError> {
    ring.monomial(e.labels())
}

/// Radical membership oracle for a fixed ideal `J`. The Gröbner basis of `J`
/// is computed once, in a ring with an extra variable ranked last, and each
/// query extends it by `1 - t·f`.
pub struct RadicalOracle {
    ring: Ring,
    t: usize,
    base: GroebnerBasis,
    step_limit: u64,
}

impl RadicalOracle {
    pub fn new(ring: &Ring, generators: &[Polynomial], options: VerifyOptions) -> Result<RadicalOracle, VerifyError> {
        let (ext, t) = ring.with_extra_variable("t");
        let order = MonomialOrder::new(options.order, ring.len()).extended();
        let gens: Vec<Polynomial> = generators.iter().map(|g| g.extend_vars(ext.len())).collect();
        let base = GroebnerBasis::compute(&gens, &order, options.step_limit)?;
        Ok(RadicalOracle { ring: ext, t, base, step_limit: options.step_limit })
    }

    /// Whether `f` lies in the radical of `J`; the zero polynomial always does.
    pub fn contains(&self, f: &Polynomial) -> Result<bool, VerifyError> {
        let f = f.extend_vars(self.ring.len());
        if self.base.contains(&f) {
            return Ok(true);
        }
        let t = Polynomial::from_monomial(Monomial::var(self.ring.len(), self.t));
        let probe = &self.ring.one() - &(&t * &f);
        Ok(self.base.extend(&[probe], self.step_limit)?.is_unit())
    }

    pub fn is_unit(&self) -> bool {
        self.base.is_unit()
    }
}

/// `f ∈ √J` by the Rabinowitsch trick.
pub fn radical_membership(ring: &Ring, f: &Polynomial, generators: &[Polynomial]) -> Result<bool, VerifyError> {
    RadicalOracle::new(ring, generators, VerifyOptions::default())?.contains(f)
}

/// `m ∈ √J` for a monomial ideal `J`: some generator's support lies inside
/// the support of `m`.
pub fn monomial_radical_membership(m: &Monomial, generators: &[Monomial]) -> bool {
    generators.iter().any(|g| g.support().all(|i| m.exponents()[i] > 0))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    /// A generator has a term not divisible by any edge monomial.
    TermOutsideEdgeIdeal { generator: usize, term: String },
    /// An edge monomial is not in the radical of the generated ideal.
    EdgeNotInRadical { edge: String },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn describe(&self) -> String {
        match self {
            Verdict::Pass => "PASS".to_string(),
            Verdict::TermOutsideEdgeIdeal { generator, term } => {
                format!("FAIL: term {term} of generator {generator} is not divisible by an edge monomial")
            }
            Verdict::EdgeNotInRadical { edge } => format!("FAIL: edge monomial {edge} is not in the radical"),
        }
    }
}

/// Decides `√(generators) = I(G)` over `ring`, which must contain the
/// vertices of `g`. Reports the first failing term or edge.
pub fn verify_radical_equals_edge_ideal(
    g: &Graph,
    ring: &Ring,
    generators: &[Polynomial],
    options: VerifyOptions,
) -> Result<Verdict, VerifyError> {
    let edges: Vec<(String, Monomial)> = g
        .edges()
        .iter()
        .map(|e| Ok((format!("{}*{}", e.first(), e.second()), edge_monomial(ring, e)?)))
        .collect::<Result<_, PolyError>>()?;
    let edge_monos: Vec<Monomial> = edges.iter().map(|(_, m)| m.clone()).collect();
    for (i, p) in generators.iter().enumerate() {
        if p.is_zero() {
            return Err(VerifyError::ZeroGenerator(i));
        }
        for (m, _) in p.terms() {
            if !edge_monos.iter().any(|e| e.divides(m)) {
                return Ok(Verdict::TermOutsideEdgeIdeal { generator: i, term: ring.format_monomial(m) });
            }
        }
    }
    let oracle = RadicalOracle::new(ring, generators, options)?;
    for (label, m) in edges {
        if !oracle.contains(&Polynomial::from_monomial(m))? {
            return Ok(Verdict::EdgeNotInRadical { edge: label });
        }
    }
    Ok(Verdict::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn read_poly_file(ring: &Ring, text: &str) -> Vec<Polynomial> {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| ring.parse(l).unwrap())
            .collect()
    }

    #[test]
    fn square_recovered_from_pairing() {
        let r = Ring::new(["a", "w", "x", "y"]).unwrap();
        let p = |s: &str| r.parse(s).unwrap();
        assert!(radical_membership(&r, &p("x*y"), &[p("a*x"), p("x*y + a*w")]).unwrap());
        assert!(radical_membership(&r, &p("a*w"), &[p("a*x"), p("x*y + a*w")]).unwrap());
        assert!(!radical_membership(&r, &p("x*w"), &[p("a*x"), p("x*y + a*w")]).unwrap());
        assert!(!radical_membership(&r, &p("y"), &[p("x")]).unwrap());
        assert!(radical_membership(&r, &p("x^2*y"), &[p("x*y")]).unwrap());
        assert!(radical_membership(&r, &r.zero(), &[p("x")]).unwrap());
    }

    #[test]
    fn monomial_fast_path() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let m = |s: &[&str]| r.monomial(s.iter().copied()).unwrap();
        assert!(monomial_radical_membership(&m(&["x", "x", "y"]), &[m(&["x", "y"])]));
        assert!(!monomial_radical_membership(&m(&["x"]), &[m(&["x", "y"])]));
        assert!(monomial_radical_membership(&m(&["x", "z"]), &[m(&["y"]), m(&["z", "z"])]));
        assert!(!monomial_radical_membership(&m(&["x"]), &[]));
    }

    #[test]
    fn edge_monomials_certify_themselves() {
        let g = parse_graph(include_str!("../fixtures/g1.edges")).unwrap();
        let r = graph_ring(&g);
        let gens: Vec<Polynomial> = g
            .edges()
            .iter()
            .map(|e| Polynomial::from_monomial(edge_monomial(&r, e).unwrap()))
            .collect();
        assert_eq!(verify_radical_equals_edge_ideal(&g, &r, &gens, VerifyOptions::default()).unwrap(), Verdict::Pass);
    }

    #[test]
    fn worked_example_list_and_its_mutilation() {
        let g = parse_graph(include_str!("../fixtures/g1.edges")).unwrap();
        let r = graph_ring(&g);
        let gens = read_poly_file(&r, include_str!("../fixtures/g1_listed.poly"));
        assert_eq!(gens.len(), 6);
        let opts = VerifyOptions::default();
        assert_eq!(verify_radical_equals_edge_ideal(&g, &r, &gens, opts).unwrap(), Verdict::Pass);
        let v = verify_radical_equals_edge_ideal(&g, &r, &gens[..5], opts).unwrap();
        assert_eq!(v, Verdict::EdgeNotInRadical { edge: "y2*y4".into() });
        let lex = VerifyOptions { order: OrderKind::Lex, ..opts };
        assert_eq!(verify_radical_equals_edge_ideal(&g, &r, &gens, lex).unwrap(), Verdict::Pass);
    }

    #[test]
    fn terms_outside_the_edge_ideal_are_rejected() {
        let g = Graph::from_edges([("a", "b"), ("b", "c")]).unwrap();
        let r = graph_ring(&g);
        let gens = vec![r.parse("a*b + a*c").unwrap(), r.parse("b*c").unwrap()];
        let v = verify_radical_equals_edge_ideal(&g, &r, &gens, VerifyOptions::default()).unwrap();
        assert_eq!(v, Verdict::TermOutsideEdgeIdeal { generator: 0, term: "a*c".into() });
        // a power of an edge monomial is fine
        let gens = vec![r.parse("a^2*b").unwrap(), r.parse("b*c").unwrap()];
        assert!(verify_radical_equals_edge_ideal(&g, &r, &gens, VerifyOptions::default()).unwrap().passed());
    }
}
