//! Linear coordinate changes and their action on graded components.

use std::collections::HashMap;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{rank, Subspace};
use crate::monomial::{monomials_of_degree, Monomial, Ring};

/// Largest `n` for which exterior minors are tabulated.
pub const MAX_EXTERIOR_VARS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChangeKind {
    RandomDense,
    RandomUpperTriangular,
    Elementary(usize, usize),
    Permutation(Vec<usize>),
    Identity,
    Explicit,
}

/// An invertible matrix `(a_ki)` acting by `phi(e_i) = sum_k a_ki e_k`.
#[derive(Clone, Debug)]
pub struct CoordinateChange<F: Field> {
    n: usize,
    /// `a[k][i]`, zero-based.
    a: Vec<Vec<F::Elem>>,
    kind: ChangeKind,
}

impl<F: Field> CoordinateChange<F> {
    pub fn from_matrix(f: &F, a: Vec<Vec<F::Elem>>) -> Result<Self> {
        Self::checked(f, a, ChangeKind::Explicit)
    }

    fn checked(f: &F, a: Vec<Vec<F::Elem>>, kind: ChangeKind) -> Result<Self> {
        let n = a.len();
        if a.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("coordinate change must be square"));
        }
        if rank(f, &a) != n {
            return Err(Error::invalid("coordinate change is singular"));
        }
        Ok(CoordinateChange { n, a, kind })
    }

    pub fn identity(f: &F, n: usize) -> Self {
        let a = (0..n).map(|k| (0..n).map(|i| if i == k { f.one() } else { f.zero() }).collect()).collect();
        CoordinateChange { n, a, kind: ChangeKind::Identity }
    }

    /// `phi_{a,b}`: `e_b -> e_a + e_b`, other basis vectors fixed.
    pub fn elementary(f: &F, n: usize, a: usize, b: usize) -> Result<Self> {
        if !(1 <= a && a < b && b <= n) {
            return Err(Error::invalid(format!("elementary change needs 1 <= a < b <= n, got ({a},{b}) with n={n}")));
        }
        let mut c = Self::identity(f, n);
        c.a[a - 1][b - 1] = f.one();
        c.kind = ChangeKind::Elementary(a, b);
        Ok(c)
    }

    /// `e_i -> e_{pi(i)}`; `pi` lists the 1-based images of `1..=n`.
    pub fn permutation(f: &F, pi: &[usize]) -> Result<Self> {
        let n = pi.len();
        let mut seen = vec![false; n + 1];
        for &p in pi {
            if p == 0 || p > n || seen[p] {
                return Err(Error::invalid(format!("{pi:?} is not a permutation of 1..={n}")));
            }
            seen[p] = true;
        }
        let mut a = vec![vec![f.zero(); n]; n];
        for (i, &p) in pi.iter().enumerate() {
            a[p - 1][i] = f.one();
        }
        Ok(CoordinateChange { n, a, kind: ChangeKind::Permutation(pi.to_vec()) })
    }

    pub fn random_dense<R: Rng + ?Sized>(f: &F, n: usize, rng: &mut R) -> Self {
        loop {
            let a: Vec<Vec<F::Elem>> = (0..n).map(|_| (0..n).map(|_| f.random(rng)).collect()).collect();
            if let Ok(c) = Self::checked(f, a, ChangeKind::RandomDense) {
                return c;
            }
        }
    }

    pub fn random_upper_triangular<R: Rng + ?Sized>(f: &F, n: usize, rng: &mut R) -> Self {
        loop {
            let a: Vec<Vec<F::Elem>> =
                (0..n).map(|k| (0..n).map(|i| if i >= k { f.random(rng) } else { f.zero() }).collect()).collect();
            if (0..n).all(|k| !f.is_zero(&a[k][k])) {
                return CoordinateChange { n, a, kind: ChangeKind::RandomUpperTriangular };
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn kind(&self) -> &ChangeKind {
        &self.kind
    }
    /// Entry `a_{ki}`, 1-based.
    pub fn entry(&self, k: usize, i: usize) -> &F::Elem {
        &self.a[k - 1][i - 1]
    }

    /// Image of a single monomial as `(monomial, coefficient)` pairs with nonzero coefficients.
    pub fn apply(&self, f: &F, m: &Monomial) -> Result<Vec<(Monomial, F::Elem)>> {
        if m.n() != self.n {
            return Err(Error::invalid(format!("{m} has {} variables, change has {}", m.n(), self.n)));
        }
        let table = ImageTable::new(f, self, m.ring(), m.degree())?;
        let basis = table.basis(m.degree());
        let row = &table.rows(m.degree())[table.index(m)];
        Ok(basis.iter().zip(row).filter(|(_, c)| !f.is_zero(c)).map(|(b, c)| (b.clone(), c.clone())).collect())
    }

    /// `phi(W)` for a subspace of one graded piece.
    pub fn apply_subspace(&self, f: &F, w: &Subspace<F>) -> Result<Subspace<F>> {
        let table = ImageTable::new(f, self, w.ring(), w.degree())?;
        table.image(f, w)
    }
}

/// Images of every basis monomial, for all degrees up to a cap.
///
/// `rows(d)[s]` is the coefficient row of `phi(b_s)` over the degree-`d` basis,
/// with bases in lexicographically descending order.
pub struct ImageTable<F: Field> {
    ring: Ring,
    n: usize,
    bases: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Vec<u8>, usize>>,
    rows: Vec<Vec<Vec<F::Elem>>>,
}

impl<F: Field> ImageTable<F> {
    pub fn new(f: &F, phi: &CoordinateChange<F>, ring: Ring, max_degree: usize) -> Result<Self> {
        let n = phi.n;
        if ring == Ring::Exterior {
            if max_degree > n {
                return Err(Error::invalid(format!("exterior degree {max_degree} exceeds n = {n}")));
            }
            if n > MAX_EXTERIOR_VARS {
                return Err(Error::size(format!("exterior minors limited to n <= {MAX_EXTERIOR_VARS}")));
            }
        }
        let bases: Vec<Vec<Monomial>> = (0..=max_degree).map(|d| monomials_of_degree(ring, n, d)).collect();
        let index: Vec<HashMap<Vec<u8>, usize>> = bases
            .iter()
            .map(|b| b.iter().enumerate().map(|(i, m)| (m.exps().to_vec(), i)).collect())
            .collect();
        let mut rows: Vec<Vec<Vec<F::Elem>>> = vec![vec![vec![f.one()]]];
        for d in 1..=max_degree {
            let prev = &rows[d - 1];
            let mut cur = Vec::with_capacity(bases[d].len());
            for m in &bases[d] {
                let mut row = vec![f.zero(); bases[d].len()];
                match ring {
                    Ring::Exterior => {
                        // Laplace expansion along the column of the smallest index of m:
                        // det A[T,S] = sum_p (-1)^p a[t_p, s_0] det A[T - t_p, S - s_0].
                        let s0 = m.min_index().expect("positive degree");
                        let rest = m.div_var(s0).expect("s0 in support");
                        let prow = &prev[index[d - 1][rest.exps()]];
                        for (ti, t) in bases[d].iter().enumerate() {
                            let mut acc = f.zero();
                            for (p, tp) in t.support().into_iter().enumerate() {
                                let coef = &phi.a[tp - 1][s0 - 1];
                                if f.is_zero(coef) {
                                    continue;
                                }
                                let sub = t.div_var(tp).expect("tp in support");
                                let minor = &prow[index[d - 1][sub.exps()]];
                                if f.is_zero(minor) {
                                    continue;
                                }
                                let term = f.mul(coef, minor);
                                acc = if p % 2 == 0 { f.add(&acc, &term) } else { f.sub(&acc, &term) };
                            }
                            row[ti] = acc;
                        }
                    }
                    Ring::Polynomial => {
                        // phi(m) = phi(m / x_j) * phi(x_j), j the largest index of m
                        let j = m.max_index().expect("positive degree");
                        let rest = m.div_var(j).expect("j in support");
                        let prow = &prev[index[d - 1][rest.exps()]];
                        for (ci, c) in prow.iter().enumerate() {
                            if f.is_zero(c) {
                                continue;
                            }
                            let base = &bases[d - 1][ci];
                            for k in 1..=n {
                                let coef = &phi.a[k - 1][j - 1];
                                if f.is_zero(coef) {
                                    continue;
                                }
                                let target = base.times_var(k).expect("polynomial product");
                                let ti = index[d][target.exps()];
                                let t = f.mul(c, coef);
                                row[ti] = f.add(&row[ti], &t);
                            }
                        }
                    }
                }
                cur.push(row);
            }
            rows.push(cur);
        }
        Ok(ImageTable { ring, n, bases, index, rows })
    }

    pub fn basis(&self, d: usize) -> &[Monomial] {
        &self.bases[d]
    }
    pub fn rows(&self, d: usize) -> &[Vec<F::Elem>] {
        &self.rows[d]
    }
    pub fn index(&self, m: &Monomial) -> usize {
        self.index[m.degree()][m.exps()]
    }
    pub fn max_degree(&self) -> usize {
        self.rows.len() - 1
    }

    /// `phi(W)`: each spanning row is replaced by the same combination of images.
    pub fn image(&self, f: &F, w: &Subspace<F>) -> Result<Subspace<F>> {
        if w.ring() != self.ring || w.n() != self.n || w.degree() > self.max_degree() {
            return Err(Error::invalid("subspace does not match the coordinate change table"));
        }
        let d = w.degree();
        let imgs = &self.rows[d];
        let width = self.bases[d].len();
        let rows = w
            .rows()
            .iter()
            .map(|r| {
                let mut out = vec![f.zero(); width];
                for (s, c) in r.iter().enumerate() {
                    if f.is_zero(c) {
                        continue;
                    }
                    for (t, x) in imgs[s].iter().enumerate() {
                        if !f.is_zero(x) {
                            let p = f.mul(c, x);
                            out[t] = f.add(&out[t], &p);
                        }
                    }
                }
                out
            })
            .collect();
        Subspace::new(self.ring, self.n, d, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, RationalField};
    use num_rational::BigRational;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn e(n: usize, s: &[usize]) -> Monomial {
        Monomial::ext(n, s).unwrap()
    }

    fn show<F: Field>(v: &[(Monomial, F::Elem)]) -> Vec<(String, F::Elem)> {
        v.iter().map(|(m, c)| (m.to_string(), c.clone())).collect()
    }

    #[test]
    fn elementary_and_permutation_images() {
        let f = PrimeField::default();
        let phi = CoordinateChange::elementary(&f, 4, 1, 3).unwrap();
        let img = phi.apply(&f, &e(4, &[3, 4])).unwrap();
        assert_eq!(show::<PrimeField>(&img), vec![("e{1,4}".into(), 1), ("e{3,4}".into(), 1)]);
        let swap = CoordinateChange::permutation(&f, &[2, 1, 3]).unwrap();
        let img = swap.apply(&f, &e(3, &[1, 2])).unwrap();
        assert_eq!(show::<PrimeField>(&img), vec![("e{1,2}".into(), f.neg(&1))]);
        let id = CoordinateChange::identity(&f, 3);
        assert_eq!(id.apply(&f, &e(3, &[2])).unwrap(), vec![(e(3, &[2]), 1)]);
        assert!(CoordinateChange::elementary(&f, 4, 3, 1).is_err());
        assert!(CoordinateChange::permutation(&f, &[1, 1]).is_err());
    }

    #[test]
    fn singular_rejected() {
        let f = PrimeField::default();
        assert!(CoordinateChange::from_matrix(&f, vec![vec![1, 2], vec![2, 4]]).is_err());
        assert!(CoordinateChange::from_matrix(&f, vec![vec![1, 2], vec![3, 4]]).is_ok());
    }

    // Minors against a direct Leibniz-formula determinant.
    #[test]
    fn exterior_images_are_minors() {
        let f = RationalField;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let phi = CoordinateChange::random_dense(&f, 5, &mut rng);
        let table = ImageTable::new(&f, &phi, Ring::Exterior, 3).unwrap();
        for (si, s) in table.basis(3).iter().enumerate() {
            for (ti, t) in table.basis(3).iter().enumerate() {
                let (ts, ss) = (t.support(), s.support());
                let mut det = f.zero();
                for p in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                    let inversions = (0..3).flat_map(|x| (x + 1..3).map(move |y| (x, y))).filter(|&(x, y)| p[x] > p[y]).count();
                    let mut term = f.one();
                    for c in 0..3 {
                        term = f.mul(&term, phi.entry(ts[p[c]], ss[c]));
                    }
                    det = if inversions % 2 == 0 { f.add(&det, &term) } else { f.sub(&det, &term) };
                }
                assert_eq!(table.rows(3)[si][ti], det);
            }
        }
    }

    #[test]
    fn polynomial_square_of_linear_form() {
        let f = RationalField;
        let q = |v: i64| BigRational::from_integer(v.into());
        let phi = CoordinateChange::from_matrix(&f, vec![vec![q(1), q(2)], vec![q(3), q(4)]]).unwrap();
        // phi(x1) = x1 + 3 x2, so phi(x1^2) = x1^2 + 6 x1 x2 + 9 x2^2
        let img = phi.apply(&f, &Monomial::poly(vec![2, 0])).unwrap();
        assert_eq!(
            show::<RationalField>(&img),
            vec![("x1^2".into(), q(1)), ("x1*x2".into(), q(6)), ("x2^2".into(), q(9))]
        );
        // phi(x1 x2) = (x1 + 3x2)(2x1 + 4x2)
        let img = phi.apply(&f, &Monomial::poly(vec![1, 1])).unwrap();
        assert_eq!(
            show::<RationalField>(&img),
            vec![("x1^2".into(), q(2)), ("x1*x2".into(), q(10)), ("x2^2".into(), q(12))]
        );
    }

    #[test]
    fn upper_triangular_shape() {
        let f = PrimeField::default();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let phi = CoordinateChange::random_upper_triangular(&f, 4, &mut rng);
        assert_eq!(*phi.entry(3, 1), 0);
        assert_ne!(*phi.entry(2, 2), 0);
    }
}
