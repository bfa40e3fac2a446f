//! Graded Betti numbers: closed formulas for stable ideals and a Taylor-complex oracle.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::ideal::{MonomialIdeal, Stability};
use crate::gin::engine::{gin, GinOptions};
use crate::linalg::rank;
use crate::monomial::{Monomial, Ring};
use crate::order::TermOrder;

/// Generator limit of [`resolution_oracle`]; the Taylor complex has `2^r - 1` basis elements.
pub const ORACLE_MAX_GENERATORS: usize = 16;

/// `beta_{i,i+j}` keyed by `(i, j)`; `i = 0` counts minimal generators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    fn add(&mut self, i: usize, j: usize, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    /// Nonzero entries `(i, j, beta_{i,i+j})`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    /// `max j` with a nonzero entry.
    pub fn regularity(&self) -> Option<usize> {
        self.entries.keys().map(|&(_, j)| j).max()
    }

    /// Row `j` of the table: `beta_{i,i+j}` for `i = 0..`.
    pub fn row(&self, j: usize) -> Vec<u64> {
        let top = self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
        (0..=top).map(|i| self.get(i, j)).collect()
    }

    /// Cells where the tables differ: `(i, j, self, other)`.
    pub fn differences(&self, other: &BettiTable) -> Vec<(usize, usize, u64, u64)> {
        let keys: std::collections::BTreeSet<(usize, usize)> =
            self.entries.keys().chain(other.entries.keys()).copied().collect();
        keys.into_iter()
            .map(|(i, j)| (i, j, self.get(i, j), other.get(i, j)))
            .filter(|&(_, _, a, b)| a != b)
            .collect()
    }

    /// Plain-text table: rows `j`, columns `i`.
    pub fn render(&self) -> String {
        let top_i = self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let js: std::collections::BTreeSet<usize> = self.entries.keys().map(|&(_, j)| j).collect();
        let mut s = String::from("j\\i");
        for i in 0..=top_i {
            s.push_str(&format!("{i:>6}"));
        }
        s.push('\n');
        for j in js {
            s.push_str(&format!("{j:>3}"));
            for i in 0..=top_i {
                let v = self.get(i, j);
                if v == 0 {
                    s.push_str(&format!("{:>6}", "-"));
                } else {
                    s.push_str(&format!("{v:>6}"));
                }
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("BettiTable", 2)?;
        let e: Vec<[u64; 3]> = self.entries().map(|(i, j, v)| [i as u64, j as u64, v]).collect();
        st.serialize_field("entries", &e)?;
        st.serialize_field("convention", "ideal-indexed")?;
        st.end()
    }
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BettiFlavor {
    /// Strongly stable ideal of `R`.
    StronglyStable,
    /// Squarefree strongly stable ideal of `R`, or a strongly stable exterior ideal read as `J*`.
    SquarefreeStronglyStable,
}

/// Betti table of a stable ideal by the Eliahou-Kervaire or Aramova-Herzog-Hibi formula.
pub fn betti_stable(ideal: &MonomialIdeal, flavor: BettiFlavor) -> Result<BettiTable> {
    let ranking: Vec<usize> = (1..=ideal.n()).collect();
    let rule = match flavor {
        BettiFlavor::StronglyStable => Stability::Strong,
        BettiFlavor::SquarefreeStronglyStable => {
            if !ideal.is_squarefree() {
                return Err(Error::invalid("squarefree flavour needs a squarefree ideal"));
            }
            Stability::Squarefree
        }
    };
    if ideal.ring() == Ring::Exterior && flavor == BettiFlavor::StronglyStable {
        return Err(Error::invalid("exterior ideals use the squarefree flavour"));
    }
    if let Some(w) = ideal.stability_violation_with(rule, &ranking) {
        return Err(Error::invalid(format!("ideal is not stable: {w}")));
    }
    let mut t = BettiTable::default();
    for g in ideal.generators() {
        let j = g.degree();
        let m = g.max_index().unwrap_or(0);
        for i in 0..ideal.n() {
            let v = match flavor {
                BettiFlavor::StronglyStable => binomial(m.saturating_sub(1), i),
                BettiFlavor::SquarefreeStronglyStable => {
                    if m < j {
                        0
                    } else {
                        binomial(m - j, i)
                    }
                }
            };
            t.add(i, j, v);
        }
    }
    Ok(t)
}

/// Minimal graded Betti numbers of a monomial ideal of `R` from its Taylor complex.
///
/// In each multidegree `b`, only Taylor basis elements with `lcm = b` survive tensoring
/// with `K`, and the differential keeps the faces with the same lcm. Then
/// `beta_{i,b} = c_i - rank d_i - rank d_{i+1}`.
pub fn resolution_oracle(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let ideal = match ideal.ring() {
        Ring::Polynomial => ideal.clone(),
        Ring::Exterior => ideal.to_polynomial(),
    };
    let gens = ideal.generators();
    let r = gens.len();
    if r > ORACLE_MAX_GENERATORS {
        return Err(Error::size(format!("oracle handles at most {ORACLE_MAX_GENERATORS} generators, got {r}")));
    }
    let n = ideal.n();
    // lcm of every nonempty subset, built from the subset without its top element
    let mut lcm: Vec<Vec<u8>> = vec![vec![0; n]; 1 << r];
    for a in 1usize..(1 << r) {
        let top = usize::BITS as usize - 1 - a.leading_zeros() as usize;
        let rest = a & !(1 << top);
        lcm[a] = lcm[rest].iter().zip(gens[top].exps()).map(|(x, y)| *x.max(y)).collect();
    }
    let mut strata: HashMap<Vec<u8>, Vec<usize>> = HashMap::new();
    for a in 1usize..(1 << r) {
        strata.entry(lcm[a].clone()).or_default().push(a);
    }
    let f = PrimeField::default();
    let mut table = BettiTable::default();
    let mut keys: Vec<&Vec<u8>> = strata.keys().collect();
    keys.sort();
    for b in keys {
        let subsets = &strata[b];
        let deg: usize = b.iter().map(|&e| e as usize).sum();
        let top = subsets.iter().map(|a| a.count_ones() as usize).max().unwrap_or(0);
        let by_size: Vec<Vec<usize>> =
            (0..=top).map(|s| subsets.iter().copied().filter(|a| a.count_ones() as usize == s).collect()).collect();
        // ranks[s] = rank of the differential from size s to size s-1
        let mut ranks = vec![0usize; top + 2];
        for s in 2..=top {
            let index: HashMap<usize, usize> = by_size[s - 1].iter().enumerate().map(|(k, &a)| (a, k)).collect();
            if index.is_empty() || by_size[s].is_empty() {
                continue;
            }
            let rows: Vec<Vec<u64>> = by_size[s]
                .iter()
                .map(|&a| {
                    let mut row = vec![0u64; index.len()];
                    let mut sign = false;
                    for bit in 0..r {
                        if a >> bit & 1 == 1 {
                            if let Some(&k) = index.get(&(a & !(1 << bit))) {
                                row[k] = if sign { f.neg(&1) } else { 1 };
                            }
                            sign = !sign;
                        }
                    }
                    row
                })
                .collect();
            ranks[s] = rank(&f, &rows);
        }
        for s in 1..=top {
            let c = by_size[s].len();
            let beta = c - ranks[s] - ranks[s + 1];
            let i = s - 1;
            if beta > 0 {
                table.add(i, deg - i, beta as u64);
            }
        }
    }
    Ok(table)
}

/// `alpha(x_{i1} x_{i2} ... x_{ik}) = x_{i1} x_{i2+1} ... x_{ik+k-1}` on generators.
pub fn alpha(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.ring() != Ring::Polynomial {
        return Err(Error::invalid("alpha acts on polynomial ideals"));
    }
    if let Some(w) = ideal.stability_violation() {
        return Err(Error::invalid(format!("alpha needs a strongly stable ideal: {w}")));
    }
    let n = ideal.n();
    let mut out = Vec::new();
    for g in ideal.generators() {
        out.push(alpha_monomial(g)?);
    }
    MonomialIdeal::new(Ring::Polynomial, n, out)
}

pub fn alpha_monomial(u: &Monomial) -> Result<Monomial> {
    let n = u.n();
    let mut idx: Vec<usize> = Vec::new();
    for i in 1..=n {
        for _ in 0..u.exp(i) {
            idx.push(i);
        }
    }
    let mut exps = vec![0u8; n];
    for (k, &i) in idx.iter().enumerate() {
        let t = i + k;
        if t > n {
            return Err(Error::invalid(format!("alpha({u}) needs variable x{t} beyond n = {n}")));
        }
        exps[t - 1] = 1;
    }
    Ok(Monomial::poly(exps))
}

/// Top generator degree of the certified revlex gin.
pub fn regularity_from_gin<F: Field>(f: &F, ideal: &MonomialIdeal, opts: &GinOptions) -> Result<usize> {
    let g = gin(f, &TermOrder::RevLex, ideal, opts)?;
    Ok(g.ideal.max_generator_degree().unwrap_or(0))
}
