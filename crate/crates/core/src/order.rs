//! Term orders on monomials of a common degree.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A degree-compatible term order.
///
/// Every order first compares degrees. Within a degree:
/// * `Lex`: larger at the first index where the exponents differ wins.
/// * `RevLex`: at the last index where exponents differ, the smaller exponent
///   wins. On squarefree supports: `u > v` iff the largest index where the
///   supports differ lies in `v`.
/// * weight orders compare `w . exps` first and break ties by lex or revlex.
/// * `Inverse(s)` reverses the within-degree comparison of `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    Lex,
    RevLex,
    WeightThenLex(Vec<i64>),
    WeightThenRevLex(Vec<i64>),
    Inverse(Box<TermOrder>),
}

impl TermOrder {
    pub fn inverse(&self) -> TermOrder {
        TermOrder::Inverse(Box::new(self.clone()))
    }

    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Result<Ordering> {
        if !u.same_shape(v) {
            return Err(Error::invalid(format!(
                "cannot compare {u} ({} vars, {}) with {v} ({} vars, {})",
                u.n(),
                u.ring(),
                v.n(),
                v.ring()
            )));
        }
        self.check_arity(u.n())?;
        Ok(self.cmp(u, v))
    }

    /// Weight vectors must match the number of variables.
    pub fn check_arity(&self, n: usize) -> Result<()> {
        match self {
            TermOrder::WeightThenLex(w) | TermOrder::WeightThenRevLex(w) if w.len() != n => Err(Error::invalid(
                format!("weight vector has {} entries, expected {n}", w.len()),
            )),
            TermOrder::Inverse(inner) => inner.check_arity(n),
            _ => Ok(()),
        }
    }

    /// Comparison without shape checks. Callers guarantee equal ring and arity.
    pub fn cmp(&self, u: &Monomial, v: &Monomial) -> Ordering {
        u.degree().cmp(&v.degree()).then_with(|| self.cmp_same_degree(u, v))
    }

    fn cmp_same_degree(&self, u: &Monomial, v: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => lex(u, v),
            TermOrder::RevLex => revlex(u, v),
            TermOrder::WeightThenLex(w) => weight(w, u).cmp(&weight(w, v)).then_with(|| lex(u, v)),
            TermOrder::WeightThenRevLex(w) => weight(w, u).cmp(&weight(w, v)).then_with(|| revlex(u, v)),
            TermOrder::Inverse(inner) => inner.cmp_same_degree(v, u),
        }
    }

    /// Sorts in place, largest first.
    pub fn sort_descending(&self, monos: &mut [Monomial]) {
        monos.sort_by(|a, b| self.cmp(b, a));
    }

    /// Variable indices (1-based) ordered from largest to smallest `x_i` under this order.
    pub fn variable_ranking(&self, ring: crate::monomial::Ring, n: usize) -> Vec<usize> {
        let mut vars: Vec<Monomial> = (1..=n)
            .map(|i| {
                let mut e = vec![0u8; n];
                e[i - 1] = 1;
                Monomial::from_exps(ring, e).expect("degree one")
            })
            .collect();
        self.sort_descending(&mut vars);
        vars.iter().map(|m| m.min_index().expect("degree one")).collect()
    }

    /// True when `x_1 > x_2 > ... > x_n`.
    pub fn is_standard(&self, n: usize) -> bool {
        self.variable_ranking(crate::monomial::Ring::Polynomial, n) == (1..=n).collect::<Vec<_>>()
    }
}

fn lex(u: &Monomial, v: &Monomial) -> Ordering {
    for (a, b) in u.exps().iter().zip(v.exps()) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn revlex(u: &Monomial, v: &Monomial) -> Ordering {
    for (a, b) in u.exps().iter().zip(v.exps()).rev() {
        match a.cmp(b) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

fn weight(w: &[i64], u: &Monomial) -> i64 {
    w.iter().zip(u.exps()).map(|(&wi, &e)| wi * e as i64).sum()
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join(w: &[i64]) -> String {
            w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        }
        match self {
            TermOrder::Lex => f.write_str("lex"),
            TermOrder::RevLex => f.write_str("revlex"),
            TermOrder::WeightThenLex(w) => write!(f, "weight:{}:lex", join(w)),
            TermOrder::WeightThenRevLex(w) => write!(f, "weight:{}:revlex", join(w)),
            TermOrder::Inverse(inner) => write!(f, "inv:{inner}"),
        }
    }
}

impl FromStr for TermOrder {
    type Err = Error;

    /// `lex | revlex | weight:<w1,...,wn>:<lex|revlex> | inv:<order>`
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("inv:") {
            return Ok(TermOrder::Inverse(Box::new(rest.parse()?)));
        }
        if let Some(rest) = s.strip_prefix("weight:") {
            let (ws, tie) = rest
                .rsplit_once(':')
                .ok_or_else(|| Error::invalid(format!("weight order needs a tie-break: {s:?}")))?;
            let w = ws
                .split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| Error::invalid(format!("bad weight {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            return match tie {
                "lex" => Ok(TermOrder::WeightThenLex(w)),
                "revlex" => Ok(TermOrder::WeightThenRevLex(w)),
                other => Err(Error::invalid(format!("unknown tie-break {other:?}"))),
            };
        }
        match s {
            "lex" => Ok(TermOrder::Lex),
            "revlex" | "rev" => Ok(TermOrder::RevLex),
            other => Err(Error::invalid(format!("unknown term order {other:?}"))),
        }
    }
}

impl Serialize for TermOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
