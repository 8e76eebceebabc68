use std::cmp::Ordering;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Monomial, PolyError, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    #[serde(rename = "grevlex")]
    DegRevLex,
}

impl FromStr for OrderKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "grevlex" | "degrevlex" => Ok(OrderKind::DegRevLex),
            _ => Err(format!("unknown monomial order {s:?} (expected lex or grevlex)")),
        }
    }
}

/// A monomial order together with a variable ranking, highest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    ranking: Vec<usize>,
}

impl MonomialOrder {
    /// Ranks ring variables in ring order: the first variable is largest.
    pub fn new(kind: OrderKind, nvars: usize) -> MonomialOrder {
        MonomialOrder { kind, ranking: (0..nvars).collect() }
    }

    pub fn lex(nvars: usize) -> MonomialOrder {
        MonomialOrder::new(OrderKind::Lex, nvars)
    }

    pub fn grevlex(nvars: usize) -> MonomialOrder {
        MonomialOrder::new(OrderKind::DegRevLex, nvars)
    }

    /// Ranks the named variables first, in the given order; the rest follow
    /// in ring order.
    pub fn with_ranking(kind: OrderKind, ring: &Ring, ranked: &[&str]) -> Result<MonomialOrder, PolyError> {
        let mut ranking = Vec::with_capacity(ring.len());
        for l in ranked {
            let i = ring.index_of(l).ok_or_else(|| PolyError::UnknownVariable(l.to_string()))?;
            if ranking.contains(&i) {
                return Err(PolyError::DuplicateVariable(l.to_string()));
            }
            ranking.push(i);
        }
        for i in 0..ring.len() {
            if !ranking.contains(&i) {
                ranking.push(i);
            }
        }
        Ok(MonomialOrder { kind, ranking })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.ranking.len()
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    /// The same order on a ring with one more trailing variable, ranked last.
    pub fn extended(&self) -> MonomialOrder {
        let mut ranking = self.ranking.clone();
        ranking.push(ranking.len());
        MonomialOrder { kind: self.kind, ranking }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (&a.exps, &b.exps);
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.ranking {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegRevLex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                if da != db {
                    return da.cmp(&db);
                }
                for &v in self.ranking.iter().rev() {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}
