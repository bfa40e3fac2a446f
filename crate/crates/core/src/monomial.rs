//! Monomials of the exterior algebra and of the polynomial ring.
//!
//! Both share one representation: an exponent vector tagged with its ring.
//! Exterior monomials `e_S` have 0/1 exponents; the sign of a wedge product is
//! irrelevant for monomial spans and is only tracked by coordinate changes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ring {
    #[serde(rename = "ext")]
    Exterior,
    #[serde(rename = "poly")]
    Polynomial,
}

impl Ring {
    pub fn tag(&self) -> &'static str {
        match self {
            Ring::Exterior => "ext",
            Ring::Polynomial => "poly",
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Ring {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "ext" | "exterior" => Ok(Ring::Exterior),
            "poly" | "polynomial" => Ok(Ring::Polynomial),
            other => Err(Error::invalid(format!("unknown ring {other:?}"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    ring: Ring,
    exps: Vec<u8>,
}

impl Monomial {
    /// `e_S` on `n` variables; `support` holds 1-based indices in any order.
    pub fn ext(n: usize, support: &[usize]) -> Result<Self> {
        let mut exps = vec![0u8; n];
        for &i in support {
            if i == 0 || i > n {
                return Err(Error::invalid(format!("index {i} outside 1..={n}")));
            }
            if exps[i - 1] == 1 {
                return Err(Error::invalid(format!("repeated index {i} in exterior monomial")));
            }
            exps[i - 1] = 1;
        }
        Ok(Monomial { ring: Ring::Exterior, exps })
    }

    pub fn poly(exps: Vec<u8>) -> Self {
        Monomial { ring: Ring::Polynomial, exps }
    }

    pub fn from_exps(ring: Ring, exps: Vec<u8>) -> Result<Self> {
        if ring == Ring::Exterior && exps.iter().any(|&e| e > 1) {
            return Err(Error::invalid("exterior monomials are squarefree"));
        }
        Ok(Monomial { ring, exps })
    }

    pub fn one(ring: Ring, n: usize) -> Self {
        Monomial { ring, exps: vec![0; n] }
    }

    /// Squarefree polynomial monomial with the same support (`J -> J*`).
    pub fn to_poly(&self) -> Monomial {
        Monomial { ring: Ring::Polynomial, exps: self.exps.clone() }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u8] {
        &self.exps
    }

    /// Exponent of `x_i`, 1-based.
    pub fn exp(&self, i: usize) -> u8 {
        self.exps[i - 1]
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    /// 1-based indices with positive exponent, increasing.
    pub fn support(&self) -> Vec<usize> {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i + 1).collect()
    }

    /// Support as a bitmask, bit `i-1` for index `i`.
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1 << i))
    }

    pub fn min_index(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0).map(|i| i + 1)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0).map(|i| i + 1)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Divisibility; in the exterior algebra this is support containment.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.ring == other.ring
            && self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Multiply by `x_i` / wedge with `e_i`. `None` when the exterior product vanishes.
    pub fn times_var(&self, i: usize) -> Option<Monomial> {
        let mut exps = self.exps.clone();
        if self.ring == Ring::Exterior && exps[i - 1] == 1 {
            return None;
        }
        exps[i - 1] += 1;
        Some(Monomial { ring: self.ring, exps })
    }

    /// Divide by `x_i`; `None` if `x_i` does not divide.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i - 1] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i - 1] -= 1;
        Some(Monomial { ring: self.ring, exps })
    }

    pub(crate) fn same_shape(&self, other: &Monomial) -> bool {
        self.ring == other.ring && self.exps.len() == other.exps.len()
    }

    /// Parses `e{1,3,4}` or `x1^2*x3` in `n` variables. `1` parses in either ring
    /// only through [`Monomial::parse_in`].
    pub fn parse(s: &str, n: usize) -> Result<Monomial> {
        let s = s.trim();
        if s.starts_with('e') {
            Self::parse_in(s, Ring::Exterior, n)
        } else if s.starts_with('x') {
            Self::parse_in(s, Ring::Polynomial, n)
        } else {
            Err(Error::invalid(format!("cannot parse monomial {s:?}")))
        }
    }

    pub fn parse_in(s: &str, ring: Ring, n: usize) -> Result<Monomial> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one(ring, n));
        }
        match ring {
            Ring::Exterior => {
                let inner = s
                    .strip_prefix("e{")
                    .and_then(|r| r.strip_suffix('}'))
                    .ok_or_else(|| Error::invalid(format!("exterior monomial must look like e{{1,3}}: {s:?}")))?;
                let idx = inner
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(|t| t.trim().parse::<usize>().map_err(|_| Error::invalid(format!("bad index in {s:?}"))))
                    .collect::<Result<Vec<_>>>()?;
                if idx.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::invalid(format!("indices must be strictly increasing: {s:?}")));
                }
                Monomial::ext(n, &idx)
            }
            Ring::Polynomial => {
                let mut exps = vec![0u8; n];
                for factor in s.split('*') {
                    let factor = factor.trim();
                    let body = factor
                        .strip_prefix('x')
                        .ok_or_else(|| Error::invalid(format!("bad factor {factor:?}")))?;
                    let (var, pow) = match body.split_once('^') {
                        Some((v, p)) => (v, p),
                        None => (body, "1"),
                    };
                    let var: usize = var.parse().map_err(|_| Error::invalid(format!("bad variable in {factor:?}")))?;
                    let pow: u8 = pow.parse().map_err(|_| Error::invalid(format!("bad exponent in {factor:?}")))?;
                    if var == 0 || var > n {
                        return Err(Error::invalid(format!("variable x{var} outside 1..={n}")));
                    }
                    exps[var - 1] = exps[var - 1]
                        .checked_add(pow)
                        .ok_or_else(|| Error::invalid("exponent overflow"))?;
                }
                Ok(Monomial::poly(exps))
            }
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("1");
        }
        match self.ring {
            Ring::Exterior => {
                let s: Vec<String> = self.support().iter().map(|i| i.to_string()).collect();
                write!(f, "e{{{}}}", s.join(","))
            }
            Ring::Polynomial => {
                let mut first = true;
                for (i, &e) in self.exps.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        f.write_str("*")?;
                    }
                    first = false;
                    if e == 1 {
                        write!(f, "x{}", i + 1)?;
                    } else {
                        write!(f, "x{}^{}", i + 1, e)?;
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of degree-`d` monomials in `n` variables.
pub fn count_of_degree(ring: Ring, n: usize, d: usize) -> usize {
    match ring {
        Ring::Exterior => binomial(n, d),
        Ring::Polynomial => {
            if n == 0 {
                usize::from(d == 0)
            } else {
                binomial(n + d - 1, d)
            }
        }
    }
}

/// All degree-`d` monomials, in lexicographically descending order.
pub fn monomials_of_degree(ring: Ring, n: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(count_of_degree(ring, n, d));
    let mut exps = vec![0u8; n];
    let cap = match ring {
        Ring::Exterior => 1,
        Ring::Polynomial => u8::MAX as usize,
    };
    fill(&mut out, &mut exps, 0, d, cap, ring);
    out
}

fn fill(out: &mut Vec<Monomial>, exps: &mut [u8], pos: usize, left: usize, cap: usize, ring: Ring) {
    if pos == exps.len() {
        if left == 0 {
            out.push(Monomial { ring, exps: exps.to_vec() });
        }
        return;
    }
    // remaining positions can absorb at most cap each
    let rest = exps.len() - pos - 1;
    let max_here = left.min(cap);
    for e in (0..=max_here).rev() {
        if left - e > rest * cap {
            continue;
        }
        exps[pos] = e as u8;
        fill(out, exps, pos + 1, left - e, cap, ring);
    }
    exps[pos] = 0;
}
