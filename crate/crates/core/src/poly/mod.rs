//! Sparse multivariate polynomials over the rationals.
//!
//! A [`Ring`] fixes the variables; polynomials store dense exponent vectors
//! indexed by ring position, so two polynomials can only be combined when
//! they live over rings with the same number of variables.

mod groebner;
mod order;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use groebner::{groebner_basis, GroebnerBasis, GroebnerError, DEFAULT_STEP_LIMIT};
pub use order::{MonomialOrder, OrderKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("duplicate variable {0:?}")]
    DuplicateVariable(String),
    #[error("cannot parse polynomial {text:?}: {message}")]
    Parse { text: String, message: String },
}

/// An ordered list of variable names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Ring {
    pub fn new<I, S>(labels: I) -> Result<Ring, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(PolyError::DuplicateVariable(l.clone()));
            }
        }
        Ok(Ring { labels, index })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// A ring with one extra variable appended, named after `prefix` and
    /// distinct from the existing labels.
    pub fn with_extra_variable(&self, prefix: &str) -> (Ring, usize) {
        let mut name = prefix.to_string();
        let mut k = 0;
        while self.index.contains_key(&name) {
            name = format!("{prefix}{k}");
            k += 1;
        }
        let mut labels = self.labels.clone();
        labels.push(name);
        let n = labels.len() - 1;
        (Ring::new(labels).expect("fresh label"), n)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.len())
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::constant(self.len(), BigRational::one())
    }

    pub fn var(&self, label: &str) -> Result<Polynomial, PolyError> {
        let i = self.index_of(label).ok_or_else(|| PolyError::UnknownVariable(label.to_string()))?;
        Ok(Polynomial::from_monomial(Monomial::var(self.len(), i)))
    }

    /// Squarefree monomial on the given labels.
    pub fn monomial<'a>(&self, labels: impl IntoIterator<Item = &'a str>) -> Result<Monomial, PolyError> {
        let mut m = Monomial::one(self.len());
        for l in labels {
            let i = self.index_of(l).ok_or_else(|| PolyError::UnknownVariable(l.to_string()))?;
            m.exps[i] += 1;
        }
        Ok(m)
    }

    /// Parses `"x1*y1 + 2*x3^2*x4 - 3"`.
    pub fn parse(&self, text: &str) -> Result<Polynomial, PolyError> {
        parse_polynomial(self, text)
    }

    pub fn format(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in p.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let a = c.abs();
            let body = self.format_monomial(m);
            if m.is_one() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&body);
            } else {
                out.push_str(&format!("{a}*{body}"));
            }
        }
        out
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        m.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { self.labels[i].clone() } else { format!("{}^{e}", self.labels[i]) })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Exponent vector. Ordered by total degree, then lexicographically with the
/// first ring variable largest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u32>) -> Monomial {
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect() }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect() }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial { exps: self.exps.iter().map(|e| e * k).collect() }
    }

    fn padded(&self, nvars: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.resize(nvars, 0);
        Monomial { exps }
    }
}

/// Canonical sparse polynomial: no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Polynomial {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Polynomial {
        let mut p = Polynomial::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn from_monomial(m: Monomial) -> Polynomial {
        let mut p = Polynomial::zero(m.nvars());
        p.add_term(m, BigRational::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Polynomial {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial over a different ring");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The single monomial of a one-term polynomial with coefficient 1.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(m),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut d = self.terms.keys().map(Monomial::degree);
        match d.next() {
            None => true,
            Some(first) => d.all(|x| x == first),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::constant(self.nvars, BigRational::one());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Same polynomial over a ring extended by trailing variables.
    pub fn extend_vars(&self, nvars: usize) -> Polynomial {
        assert!(nvars >= self.nvars);
        Polynomial {
            nvars,
            terms: self.terms.iter().map(|(m, c)| (m.padded(nvars), c.clone())).collect(),
        }
    }

    /// Replaces every variable `i` by `image[i]` in monomials.
    pub fn rename_variables(&self, image: &[usize], nvars: usize) -> Polynomial {
        let mut out = Polynomial::zero(nvars);
        for (m, c) in &self.terms {
            let mut exps = vec![0; nvars];
            for (i, &e) in m.exps.iter().enumerate() {
                exps[image[i]] += e;
            }
            out.add_term(Monomial { exps }, c.clone());
        }
        out
    }

    fn check_ring(&self, other: &Polynomial) {
        assert_eq!(self.nvars, other.nvars, "polynomials over different rings");
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut out = Polynomial::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-BigRational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Wraps a polynomial with its ring for display.
pub struct Display<'a>(pub &'a Ring, pub &'a Polynomial);

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.format(self.1))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Number(BigInt),
    Ident(String),
}

fn tokenize(text: &str) -> Result<Vec<Token>, String> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '0'..='9' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Number(s.parse().expect("digits")));
            }
            _ => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_whitespace() || "+-*^".contains(d) {
                        break;
                    }
                    s.push(d);
                    chars.next();
                }
                out.push(Token::Ident(s));
            }
        }
    }
    Ok(out)
}

fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial, PolyError> {
    let err = |message: &str| PolyError::Parse { text: text.to_string(), message: message.to_string() };
    let tokens = tokenize(text).map_err(|m| err(&m))?;
    if tokens.is_empty() {
        return Err(err("empty input"));
    }
    let mut p = ring.zero();
    let mut i = 0;
    let mut first = true;
    while i < tokens.len() {
        let mut sign = BigRational::one();
        match tokens[i] {
            Token::Plus if !first => i += 1,
            Token::Minus => {
                sign = -sign;
                i += 1;
            }
            _ if first => {}
            _ => return Err(err("expected + or -")),
        }
        first = false;
        let mut coeff = sign;
        let mut mono = Monomial::one(ring.len());
        let mut expect_factor = true;
        while i < tokens.len() {
            match &tokens[i] {
                Token::Star if !expect_factor => {
                    expect_factor = true;
                    i += 1;
                }
                Token::Number(n) if expect_factor => {
                    coeff *= BigRational::from_integer(n.clone());
                    expect_factor = false;
                    i += 1;
                }
                Token::Ident(name) if expect_factor => {
                    let v = ring.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.clone()))?;
                    i += 1;
                    let mut e = 1u32;
                    if matches!(tokens.get(i), Some(Token::Caret)) {
                        match tokens.get(i + 1) {
                            Some(Token::Number(n)) => {
                                e = n.try_into().map_err(|_| err("exponent too large"))?;
                                i += 2;
                            }
                            _ => return Err(err("expected exponent after ^")),
                        }
                    }
                    mono.exps[v] += e;
                    expect_factor = false;
                }
                Token::Plus | Token::Minus if !expect_factor => break,
                _ => return Err(err("unexpected token")),
            }
        }
        if expect_factor {
            return Err(err("dangling operator"));
        }
        p.add_term(mono, coeff);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::new(["a", "w", "x", "y"]).unwrap()
    }

    #[test]
    fn identity_from_case_one_pairing() {
        let r = ring();
        let p = |s: &str| r.parse(s).unwrap();
        let lhs = p("x^2*y^2");
        let rhs = &(&p("x*y") * &p("x*y + a*w")) - &p("a*x*y*w");
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn parse_and_format_round_trip() {
        let r = ring();
        for s in ["x*y + a*w", "a*x", "2*x^2*y - 3", "-w", "1", "x^3 + y^3 - 5*a*w"] {
            let p = r.parse(s).unwrap();
            assert_eq!(r.parse(&r.format(&p)).unwrap(), p, "{s}");
        }
        assert_eq!(r.format(&r.parse("y*x + w*a").unwrap()), "a*w + x*y");
        assert_eq!(r.format(&r.parse("x - x").unwrap()), "0");
        assert_eq!(r.parse("x*x").unwrap(), r.parse("x^2").unwrap());
        assert_eq!(r.parse("3*2*x").unwrap(), r.parse("6*x").unwrap());
    }

    #[test]
    fn parse_errors() {
        let r = ring();
        assert_eq!(r.parse("x*z"), Err(PolyError::UnknownVariable("z".into())));
        for bad in ["", "x +", "x * * y", "x y", "x^", "+ x"] {
            assert!(r.parse(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn arithmetic() {
        let r = ring();
        let p = |s: &str| r.parse(s).unwrap();
        assert_eq!(&p("x + y") * &p("x - y"), p("x^2 - y^2"));
        assert_eq!(p("x + y").pow(2), p("x^2 + 2*x*y + y^2"));
        assert!((&p("a*w") - &p("a*w")).is_zero());
        assert_eq!(-&p("x"), p("-x"));
        assert_eq!(p("2*x").scale(&BigRational::new(1.into(), 2.into())), p("x"));
        assert!(p("x^2 + y^2").is_homogeneous());
        assert!(!p("x^2 + y").is_homogeneous());
        assert_eq!(p("x*y").as_monomial(), Some(&r.monomial(["x", "y"]).unwrap()));
        assert_eq!(p("2*x*y").as_monomial(), None);
    }

    #[test]
    fn extra_variable_is_fresh() {
        let r = Ring::new(["t", "t0"]).unwrap();
        let (s, i) = r.with_extra_variable("t");
        assert_eq!(i, 2);
        assert_eq!(s.label(2), "t1");
        let p = r.parse("t*t0").unwrap().extend_vars(3);
        assert_eq!(s.format(&p), "t*t0");
    }
}
