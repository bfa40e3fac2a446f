//! Monomial spaces and monomial ideals.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial, Ring};
use crate::order::TermOrder;

/// A set of monomials of one degree, i.e. a monomial-spanned subspace of a graded piece.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialSet {
    ring: Ring,
    n: usize,
    degree: usize,
    monos: BTreeSet<Monomial>,
}

impl MonomialSet {
    pub fn new(ring: Ring, n: usize, degree: usize, monos: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let monos: BTreeSet<Monomial> = monos.into_iter().collect();
        for m in &monos {
            if m.ring() != ring || m.n() != n || m.degree() != degree {
                return Err(Error::invalid(format!("{m} is not a degree-{degree} {ring} monomial in {n} variables")));
            }
        }
        Ok(MonomialSet { ring, n, degree, monos })
    }

    pub fn empty(ring: Ring, n: usize, degree: usize) -> Self {
        MonomialSet { ring, n, degree, monos: BTreeSet::new() }
    }

    /// The whole degree-`d` component of the ambient ring.
    pub fn full(ring: Ring, n: usize, degree: usize) -> Self {
        MonomialSet { ring, n, degree, monos: monomials_of_degree(ring, n, degree).into_iter().collect() }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn len(&self) -> usize {
        self.monos.len()
    }
    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }
    pub fn contains(&self, m: &Monomial) -> bool {
        self.monos.contains(m)
    }
    pub fn iter(&self) -> impl Iterator<Item = &Monomial> {
        self.monos.iter()
    }

    /// Monomials of the same degree not in the set (the `W-bar` of a monomial space).
    pub fn complement(&self) -> MonomialSet {
        let monos = monomials_of_degree(self.ring, self.n, self.degree)
            .into_iter()
            .filter(|m| !self.monos.contains(m))
            .collect();
        MonomialSet { ring: self.ring, n: self.n, degree: self.degree, monos }
    }

    pub fn is_subset(&self, other: &MonomialSet) -> bool {
        self.monos.is_subset(&other.monos)
    }

    /// Members sorted largest first under `order`.
    pub fn sorted(&self, order: &TermOrder) -> Vec<Monomial> {
        let mut v: Vec<Monomial> = self.monos.iter().cloned().collect();
        order.sort_descending(&mut v);
        v
    }

    /// Members rendered in lexicographically descending order.
    pub fn to_strings(&self) -> Vec<String> {
        self.sorted(&TermOrder::Lex).iter().map(|m| m.to_string()).collect()
    }
}

impl fmt::Debug for MonomialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_strings().join(", "))
    }
}

/// A failed index-decreasing exchange: `generator` with `x_from` replaced by `x_to`
/// gives `image`, which is not in the ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityWitness {
    pub generator: Monomial,
    pub from: usize,
    pub to: usize,
    pub image: Monomial,
}

impl fmt::Display for StabilityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} (x{} replaced by x{})", self.generator, self.image, self.from, self.to)
    }
}

/// Which exchange rule defines stability.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stability {
    /// `u x_q in I => u x_p in I` for `p` ranked above `q`.
    Strong,
    /// Same, but only exchanges into indices absent from the monomial.
    /// This is the rule in the exterior algebra and for squarefree images in `R`.
    Squarefree,
}

/// A monomial ideal given by minimal generators.
///
/// Generators are stored sorted by degree, then lexicographically descending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding non-minimal ones.
    pub fn new(ring: Ring, n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        for g in &all {
            if g.ring() != ring || g.n() != n {
                return Err(Error::invalid(format!("generator {g} is not a {ring} monomial in {n} variables")));
            }
        }
        canonical_sort(&mut all);
        all.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(all.len());
        for g in all {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal { ring, n, gens: minimal })
    }

    pub fn zero(ring: Ring, n: usize) -> Self {
        MonomialIdeal { ring, n, gens: Vec::new() }
    }

    /// Reassembles an ideal from its graded components. Components must be closed
    /// under multiplication by variables within the supplied degree range.
    pub fn from_components(ring: Ring, n: usize, comps: &BTreeMap<usize, MonomialSet>) -> Result<Self> {
        let mut gens: Vec<Monomial> = Vec::new();
        for (d, set) in comps {
            if set.ring() != ring || set.n() != n || set.degree() != *d {
                return Err(Error::invalid("component does not match ring, arity or degree"));
            }
            let mut new: Vec<Monomial> = set.iter().filter(|m| !gens.iter().any(|g| g.divides(m))).cloned().collect();
            canonical_sort(&mut new);
            gens.extend(new);
        }
        Ok(MonomialIdeal { ring, n, gens })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }
    pub fn generators_of_degree(&self, d: usize) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().filter(move |g| g.degree() == d)
    }
    pub fn max_generator_degree(&self) -> Option<usize> {
        self.gens.iter().map(|g| g.degree()).max()
    }
    pub fn min_generator_degree(&self) -> Option<usize> {
        self.gens.iter().map(|g| g.degree()).min()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// The degree-`d` component: every degree-`d` monomial divisible by a generator.
    pub fn degree_component(&self, d: usize) -> MonomialSet {
        let monos = monomials_of_degree(self.ring, self.n, d).into_iter().filter(|m| self.contains(m)).collect();
        MonomialSet { ring: self.ring, n: self.n, degree: d, monos }
    }

    /// `dim I_d` for `d = 0..=max_degree`.
    pub fn hilbert_function(&self, max_degree: usize) -> Vec<usize> {
        (0..=max_degree).map(|d| self.degree_component(d).len()).collect()
    }

    /// Adds generators.
    pub fn with_generators(&self, extra: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        MonomialIdeal::new(self.ring, self.n, self.gens.iter().cloned().chain(extra))
    }

    /// Drops generators of degree above `d`.
    pub fn truncate(&self, d: usize) -> MonomialIdeal {
        MonomialIdeal {
            ring: self.ring,
            n: self.n,
            gens: self.gens.iter().filter(|g| g.degree() <= d).cloned().collect(),
        }
    }

    /// Componentwise containment for degrees `0..=max_degree`.
    pub fn is_contained_in(&self, other: &MonomialIdeal, max_degree: usize) -> bool {
        self.gens.iter().filter(|g| g.degree() <= max_degree).all(|g| other.contains(g))
    }

    /// The squarefree polynomial ideal `J*` of an exterior monomial ideal.
    pub fn to_polynomial(&self) -> MonomialIdeal {
        MonomialIdeal { ring: Ring::Polynomial, n: self.n, gens: self.gens.iter().map(|g| g.to_poly()).collect() }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    /// First failing exchange under the natural ring rule (strong for `R`,
    /// squarefree for `E`), with `x_1 > ... > x_n`.
    pub fn stability_violation(&self) -> Option<StabilityWitness> {
        let rule = match self.ring {
            Ring::Exterior => Stability::Squarefree,
            Ring::Polynomial => Stability::Strong,
        };
        let ranking: Vec<usize> = (1..=self.n).collect();
        self.stability_violation_with(rule, &ranking)
    }

    pub fn is_strongly_stable(&self) -> bool {
        self.stability_violation().is_none()
    }

    /// Squarefree strong stability of a squarefree polynomial ideal.
    pub fn is_squarefree_strongly_stable(&self) -> bool {
        self.is_squarefree()
            && self.stability_violation_with(Stability::Squarefree, &(1..=self.n).collect::<Vec<_>>()).is_none()
    }

    /// Stability relative to a variable ranking (largest variable first).
    ///
    /// Generators are scanned in canonical order; for each index `j` of a generator the
    /// candidate replacements are tried from the nearest higher-ranked variable upwards.
    pub fn stability_violation_with(&self, rule: Stability, ranking: &[usize]) -> Option<StabilityWitness> {
        let mut pos = vec![0usize; self.n + 1];
        for (r, &v) in ranking.iter().enumerate() {
            pos[v] = r;
        }
        for g in &self.gens {
            for &j in ranking {
                if g.exp(j) == 0 {
                    continue;
                }
                for &i in ranking[..pos[j]].iter().rev() {
                    if rule == Stability::Squarefree && g.exp(i) > 0 {
                        continue;
                    }
                    let image = match g.div_var(j).and_then(|h| h.times_var(i)) {
                        Some(m) => m,
                        None => continue,
                    };
                    if !self.contains(&image) {
                        return Some(StabilityWitness { generator: g.clone(), from: j, to: i, image });
                    }
                }
            }
        }
        None
    }

    /// Stability with respect to the variable ranking a term order induces.
    pub fn is_stable_for(&self, order: &TermOrder) -> bool {
        let rule = match self.ring {
            Ring::Exterior => Stability::Squarefree,
            Ring::Polynomial => Stability::Strong,
        };
        self.stability_violation_with(rule, &order.variable_ranking(self.ring, self.n)).is_none()
    }

    /// Generators as strings, canonical order.
    pub fn generator_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string()).collect()
    }

    /// Ideal file: header `ring=<ext|poly> n=<int>` then one generator per line.
    pub fn to_file_string(&self) -> String {
        let mut s = format!("ring={} n={}\n", self.ring, self.n);
        for g in &self.gens {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }

    pub fn parse_file(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::invalid("empty ideal file"))?;
        let (mut ring, mut n) = (None, None);
        for tok in header.split_whitespace() {
            match tok.split_once('=') {
                Some(("ring", r)) => ring = Some(r.parse::<Ring>()?),
                Some(("n", v)) => {
                    n = Some(v.parse::<usize>().map_err(|_| Error::invalid(format!("bad n in header {header:?}")))?)
                }
                _ => return Err(Error::invalid(format!("bad header token {tok:?}"))),
            }
        }
        let ring = ring.ok_or_else(|| Error::invalid("header lacks ring="))?;
        let n = n.ok_or_else(|| Error::invalid("header lacks n="))?;
        let gens = lines.map(|l| Monomial::parse_in(l, ring, n)).collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(ring, n, gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator_strings().join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("MonomialIdeal", 3)?;
        st.serialize_field("ring", &self.ring)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("generators", &self.generator_strings())?;
        st.end()
    }
}

fn canonical_sort(v: &mut [Monomial]) {
    v.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| TermOrder::Lex.cmp(b, a)));
}
