mod common;

use std::collections::BTreeSet;

use edge_ara::construct::{construct_generators, replay_trace, substitute_glue, ConstructOptions, GlueRecord};
use edge_ara::cover::{self, enumerate_minimal_covers};
use edge_ara::graph::{Edge, Graph};
use edge_ara::poly::{GroebnerBasis, Monomial, MonomialOrder, OrderKind, Polynomial, Ring, DEFAULT_STEP_LIMIT};
use edge_ara::random::{random_graph, GraphShape};
use edge_ara::verify::{graph_ring, monomial_radical_membership, radical_membership, verify_radical_equals_edge_ideal, VerifyOptions};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn graph_from_seed(seed: u64, shape: GraphShape) -> Graph {
    random_graph(&mut ChaCha8Rng::seed_from_u64(seed), shape).without_isolated()
}

fn graphs(max_vertices: usize) -> impl Strategy<Value = Graph> {
    any::<u64>().prop_map(move |s| graph_from_seed(s, GraphShape { max_vertices, max_cycles: 2 }))
}

fn verifies(g: &Graph, gens: &[Polynomial]) -> bool {
    let ring = graph_ring(g);
    verify_radical_equals_edge_ideal(g, &ring, gens, VerifyOptions::default()).unwrap().passed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cover_enumeration_matches_subsets(g in graphs(11)) {
        let mut fast: Vec<BTreeSet<String>> = enumerate_minimal_covers(&g).unwrap().iter().map(|c| c.vertices().clone()).collect();
        let mut slow = common::minimal_covers(&g);
        fast.sort();
        slow.sort();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn split_then_glue_restores_the_graph(g in graphs(10)) {
        let cyc = g.cycle_vertices();
        if let Some(x) = cyc.iter().find(|v| g.degree(v) == 2) {
            let s = g.split_degree2_cycle_vertex(x).unwrap();
            prop_assert_eq!(s.graph.cycle_rank() + 1, g.cycle_rank());
            let back = s.graph.glue_leaves_as(&s.leaf1, &s.leaf2, x).unwrap();
            prop_assert_eq!(back, g);
        }
    }

    #[test]
    fn whisker_changes_big_height_by_at_most_one(g in graphs(10), pick in any::<prop::sample::Index>()) {
        if g.vertex_count() > 0 {
            let vs: Vec<&String> = g.vertices().iter().collect();
            let x = vs[pick.index(vs.len())];
            let b = common::big_height(&g);
            let bw = common::big_height(&g.add_whisker(x).unwrap().graph);
            prop_assert!(b <= bw && bw <= b + 1);
            prop_assert_eq!(bw == b, common::in_all_maximum_covers(&g, x));
        }
    }

    #[test]
    fn certificates_meet_the_bound_and_verify(g in graphs(12)) {
        let c = construct_generators(&g, ConstructOptions::default()).unwrap();
        let b = common::big_height(&g);
        prop_assert!(c.len() <= b + g.cycle_rank());
        if g.cycle_rank() == 0 {
            prop_assert!(c.len() <= b);
        }
        prop_assert_eq!(replay_trace(&c.trace).unwrap(), c.generators.clone());
        for q in &c.generators {
            for t in q.terms() {
                prop_assert!(g.contains_edge(t));
            }
        }
        let polys = c.polynomials(&graph_ring(&g)).unwrap();
        // independent second route: lex order instead of the default
        let lex = VerifyOptions { order: OrderKind::Lex, ..VerifyOptions::default() };
        prop_assert!(verify_radical_equals_edge_ideal(&g, &graph_ring(&g), &polys, lex).unwrap().passed());
    }

    #[test]
    fn tight_certificates_lose_a_generator_and_fail(g in graphs(9)) {
        let c = construct_generators(&g, ConstructOptions::default()).unwrap();
        if c.len() == common::big_height(&g) && !c.is_empty() {
            let polys = c.polynomials(&graph_ring(&g)).unwrap();
            for i in 0..polys.len() {
                let mut fewer = polys.clone();
                fewer.remove(i);
                prop_assert!(!verifies(&g, &fewer), "dropping {} still verifies", i);
            }
        }
    }

    #[test]
    fn substitution_keeps_certificates_valid(g in graphs(10)) {
        let cyc = g.cycle_vertices();
        if let Some(x) = cyc.iter().find(|v| g.degree(v) == 2) {
            let s = g.split_degree2_cycle_vertex(x).unwrap();
            let cl = construct_generators(&s.graph, ConstructOptions::default()).unwrap();
            let record = GlueRecord { leaf1: s.leaf1, leaf2: s.leaf2, vertex: x.clone() };
            let glued = substitute_glue(&cl.generators, &record).unwrap();
            let polys: Vec<Polynomial> = glued.iter().map(|q| q.to_polynomial(&graph_ring(&g)).unwrap()).collect();
            prop_assert!(verifies(&g, &polys));
        }
    }
}

fn int_poly(n: usize, terms: &[(Vec<u32>, i64)]) -> Polynomial {
    Polynomial::from_terms(
        n,
        terms.iter().filter(|(_, c)| *c != 0).map(|(e, c)| (Monomial::from_exponents(e.clone()), BigRational::from_integer(BigInt::from(*c)))),
    )
}

fn random_homogeneous(rng: &mut ChaCha8Rng, n: usize, d: u32) -> Polynomial {
    let monos: Vec<Monomial> = common::monomials_up_to(n, d).into_iter().filter(|m| m.degree() == d).collect();
    let k = rng.gen_range(1..=3);
    let terms: Vec<(Vec<u32>, i64)> = (0..k).map(|_| (monos[rng.gen_range(0..monos.len())].exponents().to_vec(), rng.gen_range(-3..=3))).collect();
    int_poly(n, &terms)
}

/// Homogeneous ideals: membership in degree `d` is decided by the span of
/// the degree-`d` multiples, so both routes must agree exactly.
#[test]
fn normal_form_agrees_with_linear_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut members, mut others) = (0, 0);
    for _ in 0..150 {
        let n = rng.gen_range(2..=5);
        let mut gens = Vec::new();
        for _ in 0..rng.gen_range(1..=4) {
            let d = rng.gen_range(1..=2);
            let p = random_homogeneous(&mut rng, n, d);
            if !p.is_zero() {
                gens.push(p);
            }
        }
        if gens.is_empty() {
            continue;
        }
        let fd = 3;
        let f = if rng.gen_bool(0.5) {
            gens.iter().fold(Polynomial::zero(n), |f, g| &f + &(g * &random_homogeneous(&mut rng, n, fd - g.total_degree().unwrap())))
        } else {
            random_homogeneous(&mut rng, n, fd)
        };
        let want = common::in_span_up_to_degree(&f, &gens, n, fd);
        if want { members += 1 } else { others += 1 }
        for kind in [OrderKind::DegRevLex, OrderKind::Lex] {
            let gb = GroebnerBasis::compute(&gens, &MonomialOrder::new(kind, n), DEFAULT_STEP_LIMIT).unwrap();
            assert_eq!(gb.contains(&f), want, "{kind:?}");
        }
    }
    assert!(members > 20 && others > 20, "{members} members, {others} non-members");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Non-homogeneous: a combination of bounded degree lies in the span of
    /// the multiples up to that degree, and then in the ideal.
    #[test]
    fn bounded_degree_combinations_are_members(
        n in 2usize..=4,
        gens in prop::collection::vec(prop::collection::vec((prop::collection::vec(0u32..=1, 4), -3i64..=3), 1..=3), 1..=3),
        mults in prop::collection::vec(prop::collection::vec((prop::collection::vec(0u32..=1, 4), -2i64..=2), 1..=2), 3),
    ) {
        let trim = |ts: &Vec<(Vec<u32>, i64)>| ts.iter().map(|(e, c)| (e[..n].to_vec(), *c)).collect::<Vec<_>>();
        let gens: Vec<Polynomial> = gens.iter().map(|t| int_poly(n, &trim(t))).filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let mut f = Polynomial::zero(n);
        let mut d = 0;
        for (g, h) in gens.iter().zip(&mults) {
            let h = int_poly(n, &trim(h));
            d = d.max(g.total_degree().unwrap_or(0) + h.total_degree().unwrap_or(0));
            f = &f + &(g * &h);
        }
        prop_assert!(common::in_span_up_to_degree(&f, &gens, n, d));
        let gb = GroebnerBasis::compute(&gens, &MonomialOrder::grevlex(n), DEFAULT_STEP_LIMIT).unwrap();
        prop_assert!(gb.contains(&f));
    }

    #[test]
    fn monomial_ideal_basis_is_the_minimal_generating_set(
        exps in prop::collection::vec(prop::collection::vec(0u32..=3, 4), 1..=5),
    ) {
        let n = 4;
        let gens: Vec<Monomial> = exps.into_iter().map(Monomial::from_exponents).filter(|m| !m.is_one()).collect();
        prop_assume!(!gens.is_empty());
        let mut minimal: Vec<Monomial> = gens.iter().filter(|m| !gens.iter().any(|o| o != *m && o.divides(m))).cloned().collect();
        minimal.sort();
        minimal.dedup();
        let polys: Vec<Polynomial> = gens.iter().cloned().map(Polynomial::from_monomial).collect();
        let gb = GroebnerBasis::compute(&polys, &MonomialOrder::grevlex(n), DEFAULT_STEP_LIMIT).unwrap();
        let mut got: Vec<Monomial> = gb.generators().iter().map(|p| p.as_monomial().cloned().expect("monomial basis element")).collect();
        got.sort();
        prop_assert_eq!(got, minimal);
    }

    #[test]
    fn monomial_fast_path_matches_rabinowitsch(
        m in prop::collection::vec(0u32..=2, 6),
        gens in prop::collection::vec(prop::collection::vec(0u32..=2, 6), 0..=4),
        n in 2usize..=6,
    ) {
        let ring = Ring::new((0..n).map(|i| format!("z{i}"))).unwrap();
        let m = Monomial::from_exponents(m[..n].to_vec());
        let gens: Vec<Monomial> = gens.iter().map(|e| Monomial::from_exponents(e[..n].to_vec())).collect();
        let polys: Vec<Polynomial> = gens.iter().cloned().map(Polynomial::from_monomial).collect();
        let slow = radical_membership(&ring, &Polynomial::from_monomial(m.clone()), &polys).unwrap();
        prop_assert_eq!(monomial_radical_membership(&m, &gens), slow);
        prop_assert_eq!(common::monomial_power_oracle(&m, &gens), slow);
    }

    #[test]
    fn radical_membership_is_monotone(g in graphs(7), extra in any::<prop::sample::Index>()) {
        let ring = graph_ring(&g);
        let edges: Vec<&Edge> = g.edges().iter().collect();
        prop_assume!(edges.len() >= 2);
        let mono = |e: &Edge| Polynomial::from_monomial(ring.monomial(e.labels()).unwrap());
        let half: Vec<Polynomial> = edges.iter().step_by(2).map(|e| mono(e)).collect();
        let mut more = half.clone();
        more.push(mono(edges[extra.index(edges.len())]));
        for e in &edges {
            let f = mono(e);
            if radical_membership(&ring, &f, &half).unwrap() {
                prop_assert!(radical_membership(&ring, &f, &more).unwrap());
            }
        }
    }
}

#[test]
fn redundant_neighbours_match_their_definition() {
    for seed in 0..40u64 {
        let g = graph_from_seed(seed, GraphShape { max_vertices: 9, max_cycles: 2 });
        for x in g.vertices() {
            for c in enumerate_minimal_covers(&g).unwrap().iter().filter(|c| !c.contains(x)) {
                let got = cover::redundant_neighbors(&g, c, x).unwrap();
                let want: BTreeSet<String> = g
                    .neighbors(x)
                    .unwrap()
                    .into_iter()
                    .filter(|y| c.contains(y) && g.neighbors(y).unwrap().iter().all(|z| z == x || c.contains(z)))
                    .collect();
                assert_eq!(got, want);
            }
        }
    }
}
