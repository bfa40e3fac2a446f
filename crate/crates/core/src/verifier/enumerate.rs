//! Isomorphism classes of small graphs by brute-force canonical forms.

use rayon::prelude::*;

use crate::complexes::Graph;
use crate::error::{Error, Result};

/// Labelled enumeration goes through `2^C(n,2)` graphs and `n!` relabellings.
pub const MAX_ENUM_VERTICES: usize = 7;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        // next permutation in lexicographic order
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![0; n]; n];
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            idx[i][j] = bit;
            idx[j][i] = bit;
            bit += 1;
        }
    }
    idx
}

/// For each permutation, where each edge bit is sent.
struct BitMaps {
    maps: Vec<Vec<u8>>,
}

impl BitMaps {
    fn new(n: usize) -> Self {
        let idx = pair_index(n);
        let maps = permutations(n)
            .into_iter()
            .map(|p| {
                let mut m = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        m.push(idx[p[i]][p[j]] as u8);
                    }
                }
                m
            })
            .collect();
        BitMaps { maps }
    }

    fn apply(map: &[u8], code: u64) -> u64 {
        let mut out = 0;
        let mut c = code;
        while c != 0 {
            let b = c.trailing_zeros() as usize;
            out |= 1 << map[b];
            c &= c - 1;
        }
        out
    }

    fn is_canonical(&self, code: u64) -> bool {
        self.maps.iter().all(|m| Self::apply(m, code) >= code)
    }

    fn canonical(&self, code: u64) -> u64 {
        self.maps.iter().map(|m| Self::apply(m, code)).min().unwrap_or(code)
    }
}

fn check(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ENUM_VERTICES {
        return Err(Error::invalid(format!("graph enumeration needs 1 <= n <= {MAX_ENUM_VERTICES}, got {n}")));
    }
    Ok(())
}

/// The relabelling of `g` with the smallest edge code.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    check(g.n())?;
    Ok(Graph::from_edge_code(g.n(), BitMaps::new(g.n()).canonical(g.edge_code())))
}

/// One representative per isomorphism class on `n` vertices, the minimal-code labelling,
/// in increasing code order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    check(n)?;
    let maps = BitMaps::new(n);
    let total = 1u64 << (n * (n - 1) / 2);
    let codes: Vec<u64> = (0..total).into_par_iter().filter(|&c| maps.is_canonical(c)).collect();
    Ok(codes.into_iter().map(|c| Graph::from_edge_code(n, c)).collect())
}
