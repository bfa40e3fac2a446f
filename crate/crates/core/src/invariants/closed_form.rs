//! Closed-form shifted profiles of `K_{a,b}` and `K_a ∪ K_b`, and the lex/revlex
//! complement relation for shifted graphs.

use serde::Serialize;

use crate::complexes::Graph;
use crate::error::Result;
use crate::field::Field;
use crate::gin::engine::GinOptions;
use crate::invariants::betti::binomial;
use crate::invariants::profile::{max_ge, min_ge, shifted_graph};
use crate::order::TermOrder;

fn c2(n: usize) -> usize {
    binomial(n, 2) as usize
}

fn sorted(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// `max_{>= n+1-k}(Delta^e(K_{a,b}))` for `k = 1..=n`: `kn - k^2` up to `a`, then `ab`.
pub fn bipartite_profile(a: usize, b: usize) -> Vec<usize> {
    let (a, b) = sorted(a, b);
    let n = a + b;
    (1..=n).map(|k| if k <= a { k * n - k * k } else { a * b }).collect()
}

/// `min_{>= n+1-k}(Delta^e(K_a ∪ K_b))` for `k = 1..=n`: `C(k,2)` up to `b`, then `f_1 - C(n-k,2)`.
pub fn two_cliques_profile(a: usize, b: usize) -> Vec<usize> {
    let (a, b) = sorted(a, b);
    let n = a + b;
    let f1 = c2(a) + c2(b);
    (1..=n).map(|k| if k <= b { c2(k) } else { f1 - c2(n - k) }).collect()
}

/// `h_k`: edges of `Delta^e(K_a ∪ K_b)` with larger endpoint `n+1-k`.
pub fn h_counts(a: usize, b: usize) -> Vec<usize> {
    let (a, b) = sorted(a, b);
    (1..=a + b)
        .map(|k| {
            if k <= a {
                (a - k) + (b - k)
            } else if k <= b {
                b - k
            } else {
                0
            }
        })
        .collect()
}

/// The two-cliques profile summed from `h`: `sum_{l<k} min(k-l, h_l)`.
pub fn two_cliques_profile_from_h(a: usize, b: usize) -> Vec<usize> {
    let h = h_counts(a, b);
    (1..=h.len()).map(|k| (1..k).map(|l| (k - l).min(h[l - 1])).sum()).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosedForms {
    pub a: usize,
    pub b: usize,
    pub bipartite: Vec<usize>,
    pub two_cliques: Vec<usize>,
    pub h: Vec<usize>,
}

pub fn closed_form_profiles(a: usize, b: usize) -> ClosedForms {
    let (a, b) = sorted(a, b);
    ClosedForms {
        a,
        b,
        bipartite: bipartite_profile(a, b),
        two_cliques: two_cliques_profile(a, b),
        h: h_counts(a, b),
    }
}

/// `max_{>= n+1-k}` of a graph for `k = 1..=n`.
pub fn max_ge_profile(g: &Graph) -> Vec<usize> {
    let n = g.n();
    (1..=n).map(|k| max_ge(g, n + 1 - k)).collect()
}

/// `min_{>= n+1-k}` of a graph for `k = 1..=n`.
pub fn min_ge_profile(g: &Graph) -> Vec<usize> {
    let n = g.n();
    (1..=n).map(|k| min_ge(g, n + 1 - k)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplementIdentity {
    /// `max_{>= n+1-k}(Delta^lex(G))`.
    pub lhs: Vec<usize>,
    /// `C(n,2) - C(n-k,2) - (f_1(G-bar) - min_{>= k+1}(Delta^e(G-bar)))`.
    pub rhs: Vec<usize>,
    pub holds: bool,
}

/// Evaluates both sides of the relation between `Delta^lex(G)` and `Delta^e(G-bar)`.
pub fn lex_rev_complement_identity<F: Field>(f: &F, g: &Graph, opts: &GinOptions) -> Result<ComplementIdentity> {
    let n = g.n();
    let (lex, _) = shifted_graph(f, &TermOrder::Lex, g, opts)?;
    let gc = g.complement();
    let (rev, _) = shifted_graph(f, &TermOrder::RevLex, &gc, opts)?;
    let lhs = max_ge_profile(&lex);
    let f1 = gc.edge_count();
    let rhs: Vec<usize> = (1..=n)
        .map(|k| {
            let inner = f1 - min_ge(&rev, k + 1);
            (c2(n) - c2(n - k)) - inner
        })
        .collect();
    let holds = lhs == rhs;
    Ok(ComplementIdentity { lhs, rhs, holds })
}
