//! Graded subspaces and exact row reduction.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::MonomialSet;
use crate::monomial::{monomials_of_degree, Monomial, Ring};
use crate::order::TermOrder;

/// Reduced row echelon form in place. Zero rows are dropped.
/// Returns the pivot column of each remaining row.
pub fn row_reduce<F: Field>(f: &F, rows: &mut Vec<Vec<F::Elem>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(&rows[r][c]).expect("nonzero pivot");
        for x in rows[r][c..].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let (head, tail) = rows.split_at_mut(r);
        let (prow, tail) = tail.split_first_mut().expect("row r exists");
        for other in head.iter_mut().chain(tail.iter_mut()) {
            if f.is_zero(&other[c]) {
                continue;
            }
            let factor = other[c].clone();
            for k in c..ncols {
                if !f.is_zero(&prow[k]) {
                    let t = f.mul(&factor, &prow[k]);
                    other[k] = f.sub(&other[k], &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(f: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut m = rows.to_vec();
    row_reduce(f, &mut m).len()
}

/// A subspace of the degree-`d` component, spanned by coefficient rows over the
/// monomial basis `basis` (lexicographically descending).
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    ring: Ring,
    n: usize,
    degree: usize,
    basis: Vec<Monomial>,
    rows: Vec<Vec<F::Elem>>,
}

impl<F: Field> Subspace<F> {
    pub fn new(ring: Ring, n: usize, degree: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let basis = monomials_of_degree(ring, n, degree);
        if let Some(r) = rows.iter().find(|r| r.len() != basis.len()) {
            return Err(Error::invalid(format!("row has {} entries, ambient dimension is {}", r.len(), basis.len())));
        }
        Ok(Subspace { ring, n, degree, basis, rows })
    }

    /// The span of a monomial set.
    pub fn from_monomials(f: &F, set: &MonomialSet) -> Self {
        let basis = monomials_of_degree(set.ring(), set.n(), set.degree());
        let rows = basis
            .iter()
            .enumerate()
            .filter(|(_, m)| set.contains(m))
            .map(|(i, _)| {
                let mut row = vec![f.zero(); basis.len()];
                row[i] = f.one();
                row
            })
            .collect();
        Subspace { ring: set.ring(), n: set.n(), degree: set.degree(), basis, rows }
    }

    /// Spanning rows given as sparse (monomial, coefficient) lists.
    pub fn from_sparse(
        f: &F,
        ring: Ring,
        n: usize,
        degree: usize,
        elems: &[Vec<(Monomial, F::Elem)>],
    ) -> Result<Self> {
        let basis = monomials_of_degree(ring, n, degree);
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::with_capacity(elems.len());
        for e in elems {
            let mut row = vec![f.zero(); basis.len()];
            for (m, c) in e {
                let i = *index
                    .get(m)
                    .ok_or_else(|| Error::invalid(format!("{m} is not a degree-{degree} monomial of this ring")))?;
                row[i] = f.add(&row[i], c);
            }
            rows.push(row);
        }
        Ok(Subspace { ring, n, degree, basis, rows })
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
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }
    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn dim(&self, f: &F) -> usize {
        rank(f, &self.rows)
    }

    /// Rank and pivot monomials with columns sorted `order`-descending.
    pub fn row_reduce(&self, f: &F, order: &TermOrder) -> Result<(usize, Vec<Monomial>)> {
        order.check_arity(self.n)?;
        let mut perm: Vec<usize> = (0..self.basis.len()).collect();
        perm.sort_by(|&a, &b| order.cmp(&self.basis[b], &self.basis[a]));
        let mut m: Vec<Vec<F::Elem>> =
            self.rows.iter().map(|r| perm.iter().map(|&c| r[c].clone()).collect()).collect();
        let pivots = row_reduce(f, &mut m);
        Ok((pivots.len(), pivots.iter().map(|&c| self.basis[perm[c]].clone()).collect()))
    }

    /// `in_sigma(W)`: the leading monomials of the reduced basis.
    pub fn initial_space(&self, f: &F, order: &TermOrder) -> Result<MonomialSet> {
        let (_, piv) = self.row_reduce(f, order)?;
        MonomialSet::new(self.ring, self.n, self.degree, piv)
    }
}
