//! Buchberger completion with Gebauer–Möller pair elimination.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{Monomial, MonomialOrder, Polynomial};

/// Reduction steps allowed before a computation is declared indeterminate.
pub const DEFAULT_STEP_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("indeterminate: Groebner computation exceeded {0} reduction steps")]
    Indeterminate(u64),
}

/// Terms sorted decreasingly in the working order.
type Terms = Vec<(Monomial, BigRational)>;

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine<'a> {
    ord: &'a MonomialOrder,
    polys: Vec<Terms>,
    basis: Vec<usize>,
    pairs: Vec<Pair>,
    steps: u64,
    limit: u64,
    unit: bool,
}

fn sorted_terms(p: &Polynomial, ord: &MonomialOrder) -> Terms {
    let mut t: Terms = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    t.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    t
}

fn make_monic(mut t: Terms) -> Terms {
    if let Some((_, lc)) = t.first() {
        if !lc.is_one() {
            let inv = lc.recip();
            for (_, c) in &mut t {
                *c = &*c * &inv;
            }
        }
    }
    t
}

/// `a - c * m * b` where the terms of both are sorted.
fn sub_scaled(ord: &MonomialOrder, a: &[(Monomial, BigRational)], c: &BigRational, m: &Monomial, b: &[(Monomial, BigRational)]) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let shifted = |k: usize| b[k].0.mul(m);
    let mut next_b = if b.is_empty() { None } else { Some(shifted(0)) };
    while i < a.len() || next_b.is_some() {
        let take = match (&next_b, a.get(i)) {
            (None, _) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (Some(mb), Some((ma, _))) => ord.cmp(ma, mb),
        };
        match take {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let mb = next_b.take().unwrap();
                out.push((mb, -(c * &b[j].1)));
                j += 1;
                next_b = (j < b.len()).then(|| shifted(j));
            }
            Ordering::Equal => {
                let mb = next_b.take().unwrap();
                let v = &a[i].1 - c * &b[j].1;
                if !v.is_zero() {
                    out.push((mb, v));
                }
                i += 1;
                j += 1;
                next_b = (j < b.len()).then(|| shifted(j));
            }
        }
    }
    out
}

impl<'a> Engine<'a> {
    fn new(ord: &'a MonomialOrder, limit: u64) -> Self {
        Engine { ord, polys: Vec::new(), basis: Vec::new(), pairs: Vec::new(), steps: 0, limit, unit: false }
    }

    fn lt(&self, i: usize) -> &Monomial {
        &self.polys[i][0].0
    }

    fn tick(&mut self) -> Result<(), GroebnerError> {
        self.steps += 1;
        if self.steps > self.limit {
            Err(GroebnerError::Indeterminate(self.limit))
        } else {
            Ok(())
        }
    }

    /// Full reduction of `f` modulo the current basis, made monic.
    fn reduce(&mut self, f: Terms) -> Result<Terms, GroebnerError> {
        Ok(make_monic(self.remainder(f)?))
    }

    fn remainder(&mut self, f: Terms) -> Result<Terms, GroebnerError> {
        let mut f = f;
        let mut rem: Terms = Vec::new();
        let mut pos = 0;
        while pos < f.len() {
            let m = &f[pos].0;
            match self.basis.iter().copied().find(|&g| self.lt(g).divides(m)) {
                None => pos += 1,
                Some(g) => {
                    self.tick()?;
                    let q = m.div(self.lt(g));
                    let c = f[pos].1.clone();
                    let tail = sub_scaled(self.ord, &f[pos + 1..], &c, &q, &self.polys[g][1..]);
                    rem.extend(f.drain(..pos));
                    f = tail;
                    pos = 0;
                }
            }
        }
        rem.extend(f);
        Ok(rem)
    }

    fn s_poly(&self, p: &Pair) -> Terms {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let mf = p.lcm.div(&f[0].0);
        let mg = p.lcm.div(&g[0].0);
        let fs: Terms = f[1..].iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
        sub_scaled(self.ord, &fs, &BigRational::one(), &mg, &g[1..])
    }

    /// Inserts a new monic polynomial and updates the pair set.
    fn insert(&mut self, h: Terms) {
        if h[0].0.is_one() {
            self.unit = true;
        }
        let hi = self.polys.len();
        self.polys.push(h);
        let lth = self.lt(hi).clone();
        let coprime = |e: &Self, g: usize| e.lt(g).is_coprime(&lth);

        let candidates: Vec<Pair> = self
            .basis
            .iter()
            .map(|&g| Pair { i: g, j: hi, lcm: self.lt(g).lcm(&lth) })
            .collect();
        let mut kept: Vec<Pair> = Vec::new();
        for (k, p) in candidates.iter().enumerate() {
            let dominated = candidates[k + 1..].iter().chain(&kept).any(|q| q.lcm.divides(&p.lcm));
            if coprime(self, p.i) || !dominated {
                kept.push(p.clone());
            }
        }
        kept.retain(|p| !coprime(self, p.i));

        let old = std::mem::take(&mut self.pairs);
        self.pairs = old
            .into_iter()
            .filter(|p| {
                !lth.divides(&p.lcm) || self.lt(p.i).lcm(&lth) == p.lcm || self.lt(p.j).lcm(&lth) == p.lcm
            })
            .collect();
        self.pairs.extend(kept);

        let basis = std::mem::take(&mut self.basis);
        self.basis = basis.into_iter().filter(|&g| !lth.divides(self.lt(g))).collect();
        self.basis.push(hi);
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ord = self.ord;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k].lcm, &self.pairs[best].lcm);
            let better = a.degree().cmp(&b.degree()).then_with(|| ord.cmp(a, b));
            if better == Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn add_generator(&mut self, f: Terms) -> Result<(), GroebnerError> {
        let h = self.reduce(f)?;
        if !h.is_empty() {
            self.insert(h);
        }
        Ok(())
    }

    fn complete(&mut self) -> Result<(), GroebnerError> {
        while !self.unit {
            let Some(p) = self.select() else { break };
            let s = self.s_poly(&p);
            self.tick()?;
            let h = self.reduce(s)?;
            if !h.is_empty() {
                self.insert(h);
            }
        }
        Ok(())
    }

    /// Interreduces the minimal basis.
    fn finish(mut self) -> Result<Vec<Terms>, GroebnerError> {
        if self.unit {
            let n = self.ord.nvars();
            return Ok(vec![vec![(Monomial::one(n), BigRational::one())]]);
        }
        let idx = self.basis.clone();
        let mut out: Vec<Terms> = Vec::with_capacity(idx.len());
        for &g in &idx {
            self.basis = idx.iter().copied().filter(|&h| h != g).collect();
            let mut p = vec![self.polys[g][0].clone()];
            p.extend(self.remainder(self.polys[g][1..].to_vec())?);
            out.push(p);
        }
        out.sort_by(|a, b| self.ord.cmp(&b[0].0, &a[0].0));
        Ok(out)
    }
}

/// A reduced Gröbner basis: monic, interreduced, sorted by decreasing
/// leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    polys: Vec<Terms>,
    steps: u64,
}

impl GroebnerBasis {
    pub fn compute(generators: &[Polynomial], order: &MonomialOrder, step_limit: u64) -> Result<GroebnerBasis, GroebnerError> {
        let mut e = Engine::new(order, step_limit);
        for g in generators {
            assert_eq!(g.nvars(), order.nvars(), "order and polynomial rings differ");
            if !g.is_zero() {
                e.add_generator(sorted_terms(g, order))?;
            }
            if e.unit {
                break;
            }
        }
        e.complete()?;
        let steps = e.steps;
        let polys = e.finish()?;
        Ok(GroebnerBasis { order: order.clone(), polys, steps })
    }

    /// Gröbner basis of the ideal with `extra` adjoined, reusing this basis.
    pub fn extend(&self, extra: &[Polynomial], step_limit: u64) -> Result<GroebnerBasis, GroebnerError> {
        let mut e = Engine::new(&self.order, step_limit);
        for p in &self.polys {
            let i = e.polys.len();
            e.polys.push(p.clone());
            e.basis.push(i);
        }
        e.unit = self.is_unit();
        for g in extra {
            if e.unit {
                break;
            }
            if !g.is_zero() {
                e.add_generator(sorted_terms(g, &self.order))?;
            }
        }
        e.complete()?;
        let steps = e.steps;
        let polys = e.finish()?;
        Ok(GroebnerBasis { order: self.order.clone(), polys, steps })
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Reduction steps spent building this basis.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0][0].0.is_one()
    }

    pub fn generators(&self) -> Vec<Polynomial> {
        let n = self.order.nvars();
        self.polys.iter().map(|t| Polynomial::from_terms(n, t.iter().cloned())).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|t| t[0].0.clone()).collect()
    }

    /// Remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let mut e = Engine::new(&self.order, u64::MAX);
        for p in &self.polys {
            let i = e.polys.len();
            e.polys.push(p.clone());
            e.basis.push(i);
        }
        let r = e.remainder(sorted_terms(f, &self.order)).expect("unbounded");
        Polynomial::from_terms(self.order.nvars(), r)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// Reduced Gröbner basis with the default step guard.
pub fn groebner_basis(generators: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    GroebnerBasis::compute(generators, order, DEFAULT_STEP_LIMIT)
}
