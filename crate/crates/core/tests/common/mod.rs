//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's cover search or Gröbner engine.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use edge_ara::graph::Graph;
use edge_ara::poly::{Monomial, Polynomial};
use num_rational::BigRational;
use num_traits::{One, Zero};

fn covers_mask(edges: &[(usize, usize)], mask: u64) -> bool {
    edges.iter().all(|&(a, b)| mask >> a & 1 == 1 || mask >> b & 1 == 1)
}

/// All minimal vertex covers by scanning every subset of the vertices.
pub fn minimal_covers(g: &Graph) -> Vec<BTreeSet<String>> {
    let vs: Vec<&String> = g.vertices().iter().collect();
    let idx: BTreeMap<&str, usize> = vs.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (idx[e.first()], idx[e.second()])).collect();
    assert!(vs.len() <= 20, "brute force is for small graphs");
    let mut out = Vec::new();
    for mask in 0u64..1 << vs.len() {
        if !covers_mask(&edges, mask) {
            continue;
        }
        let minimal = (0..vs.len()).filter(|i| mask >> i & 1 == 1).all(|i| !covers_mask(&edges, mask & !(1 << i)));
        if minimal {
            out.push((0..vs.len()).filter(|i| mask >> i & 1 == 1).map(|i| vs[i].clone()).collect());
        }
    }
    out
}

pub fn big_height(g: &Graph) -> usize {
    minimal_covers(g).iter().map(BTreeSet::len).max().unwrap_or(0)
}

pub fn in_all_maximum_covers(g: &Graph, x: &str) -> bool {
    let cs = minimal_covers(g);
    let b = cs.iter().map(BTreeSet::len).max().unwrap_or(0);
    cs.iter().filter(|c| c.len() == b).all(|c| c.contains(x))
}

/// All monomials in `n` variables of total degree at most `d`.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial::from_exponents(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            go(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    go(0, d, &mut cur, &mut out);
    out
}

/// Whether `f` is a linear combination of `m·g` over all generators `g` and
/// monomials `m` with `deg(m·g) <= d`. Exact Gaussian elimination.
pub fn in_span_up_to_degree(f: &Polynomial, gens: &[Polynomial], n: usize, d: u32) -> bool {
    let mut rows: Vec<BTreeMap<Monomial, BigRational>> = Vec::new();
    for g in gens {
        let Some(dg) = g.total_degree() else { continue };
        if dg > d {
            continue;
        }
        for m in monomials_up_to(n, d - dg) {
            let p = g.mul_monomial(&m);
            rows.push(p.terms().map(|(k, c)| (k.clone(), c.clone())).collect());
        }
    }
    let basis = echelon(rows);
    let mut v: BTreeMap<Monomial, BigRational> = f.terms().map(|(k, c)| (k.clone(), c.clone())).collect();
    for (pivot, row) in &basis {
        if let Some(c) = v.get(pivot).cloned() {
            sub_scaled(&mut v, row, &c);
        }
    }
    v.is_empty()
}

fn sub_scaled(v: &mut BTreeMap<Monomial, BigRational>, row: &BTreeMap<Monomial, BigRational>, c: &BigRational) {
    for (k, r) in row {
        let e = v.entry(k.clone()).or_insert_with(BigRational::zero);
        *e -= c * r;
        if e.is_zero() {
            v.remove(k);
        }
    }
}

/// Rows reduced so that each has a distinct pivot with coefficient one,
/// and no row contains another row's pivot.
fn echelon(rows: Vec<BTreeMap<Monomial, BigRational>>) -> Vec<(Monomial, BTreeMap<Monomial, BigRational>)> {
    let mut basis: Vec<(Monomial, BTreeMap<Monomial, BigRational>)> = Vec::new();
    for mut r in rows {
        for (pivot, row) in &basis {
            if let Some(c) = r.get(pivot).cloned() {
                sub_scaled(&mut r, row, &c);
            }
        }
        let Some((pivot, c)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else { continue };
        let inv = BigRational::one() / c;
        for v in r.values_mut() {
            *v *= &inv;
        }
        for (_, row) in basis.iter_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                sub_scaled(row, &r, &c);
            }
        }
        basis.push((pivot, r));
    }
    basis
}

/// `m ∈ √(gens)` for monomials, by raising `m` to a power that dominates
/// every generator exponent.
pub fn monomial_power_oracle(m: &Monomial, gens: &[Monomial]) -> bool {
    let k = gens.iter().flat_map(|g| g.exponents().iter().copied()).max().unwrap_or(1).max(1);
    let p = m.pow(k);
    gens.iter().any(|g| g.divides(&p))
}
