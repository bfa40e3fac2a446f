//! Rank oracle for degree-2 generic initial spaces via the maps `rho_{phi,m}`.
//!
//! `rho_{phi,m}(e_i e_j) = (a_{tj} e_i - a_{ti} e_j)_{t=1..m}` in `V^m`, and the polynomial
//! analogue uses `+`. For generic `phi`,
//! `|{e_i e_j not in Gin(W) : max{i,j} >= k}| = rank rho_{phi,n+1-k}(complement of W)`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complexes::Graph;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::gin::change::CoordinateChange;
use crate::ideal::MonomialSet;
use crate::linalg::rank;
use crate::monomial::Ring;

/// `dim span {rho_{phi,m}(pair)}` (`sign = -1`) or the `+` variant (`sign = +1`).
pub fn rho_rank<F: Field>(f: &F, phi: &CoordinateChange<F>, pairs: &[(usize, usize)], m: usize, plus: bool) -> usize {
    let n = phi.n();
    let rows: Vec<Vec<F::Elem>> = pairs
        .iter()
        .map(|&(i, j)| {
            let mut row = vec![f.zero(); m * n];
            for t in 1..=m {
                let base = (t - 1) * n;
                row[base + i - 1] = f.add(&row[base + i - 1], phi.entry(t, j));
                let other = phi.entry(t, i).clone();
                let other = if plus { other } else { f.neg(&other) };
                row[base + j - 1] = f.add(&row[base + j - 1], &other);
            }
            row
        })
        .collect();
    rank(f, &rows)
}

fn pairs_of(set: &MonomialSet) -> Vec<(usize, usize)> {
    set.iter()
        .map(|u| {
            let s = u.support();
            match s[..] {
                [i, j] => (i, j),
                [i] => (i, i),
                _ => unreachable!("degree two"),
            }
        })
        .collect()
}

/// Oracle values `k = 1..=n` for a degree-2 monomial space `W`, using one random `phi`.
pub fn hyperplane_rank_oracle<F: Field>(f: &F, w: &MonomialSet, seed: u64) -> Result<Vec<usize>> {
    if w.degree() != 2 {
        return Err(Error::invalid("the rank oracle takes degree-2 spaces"));
    }
    let n = w.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let phi = CoordinateChange::random_dense(f, n, &mut rng);
    let pairs = pairs_of(&w.complement());
    let plus = w.ring() == Ring::Polynomial;
    Ok((1..=n).map(|k| rho_rank(f, &phi, &pairs, n + 1 - k, plus)).collect())
}

/// Engine side of the oracle: `|{u not in G : max(u) >= k}|` for `k = 1..=n`.
pub fn complement_max_ge(g: &MonomialSet) -> Vec<usize> {
    let c = g.complement();
    (1..=g.n()).map(|k| c.iter().filter(|u| u.max_index().is_some_and(|m| m >= k)).count()).collect()
}

/// Exterior and polynomial ranks of the edges of `G` under one random `phi`, for `m = 1..=n`.
pub fn sign_flip_ranks<F: Field>(f: &F, g: &Graph, seed: u64) -> (Vec<usize>, Vec<usize>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let phi = CoordinateChange::random_dense(f, g.n(), &mut rng);
    let edges = g.edges();
    let ext = (1..=g.n()).map(|m| rho_rank(f, &phi, &edges, m, false)).collect();
    let pol = (1..=g.n()).map(|m| rho_rank(f, &phi, &edges, m, true)).collect();
    (ext, pol)
}
