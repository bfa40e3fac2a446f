//! Positional statistics of monomial ideals and shifted graphs.

use serde::Serialize;

use crate::complexes::{graph_face_ideal, Graph};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::gin::engine::{gin, GinCertificate, GinOptions};
use crate::ideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::order::TermOrder;

/// `min_le[k-1] = |{u in I_d : min(u) <= k}|` and likewise for `max`, `k = 1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexProfile {
    pub min_le: Vec<usize>,
    pub max_le: Vec<usize>,
}

pub fn index_profile(ideal: &MonomialIdeal, d: usize) -> IndexProfile {
    let n = ideal.n();
    let comp = ideal.degree_component(d);
    let count = |f: &dyn Fn(&Monomial) -> Option<usize>, k: usize| comp.iter().filter(|u| f(u).is_some_and(|x| x <= k)).count();
    IndexProfile {
        min_le: (1..=n).map(|k| count(&|u| u.min_index(), k)).collect(),
        max_le: (1..=n).map(|k| count(&|u| u.max_index(), k)).collect(),
    }
}

/// `m_{sigma,u}(I) = |{v in I : deg v = deg u, v >=_sigma u}|`.
pub fn m_count(order: &TermOrder, ideal: &MonomialIdeal, u: &Monomial) -> Result<usize> {
    if u.ring() != ideal.ring() || u.n() != ideal.n() {
        return Err(Error::invalid(format!("{u} does not live in the ring of the ideal")));
    }
    order.check_arity(u.n())?;
    Ok(ideal.degree_component(u.degree()).iter().filter(|v| order.cmp(v, u).is_ge()).count())
}

/// Every degree-`d` monomial `u` with its m-count, in `order`-descending order.
pub fn m_counts(order: &TermOrder, ideal: &MonomialIdeal, d: usize) -> Vec<(Monomial, usize)> {
    let mut all = monomials_of_degree(ideal.ring(), ideal.n(), d);
    order.sort_descending(&mut all);
    let mut acc = 0;
    all.into_iter()
        .map(|u| {
            if ideal.contains(&u) {
                acc += 1;
            }
            (u, acc)
        })
        .collect()
}

/// Number of edges `{i,j}` with `max{i,j} >= k`.
pub fn max_ge(g: &Graph, k: usize) -> usize {
    g.edges().iter().filter(|&&(_, j)| j >= k).count()
}

/// Number of edges `{i,j}` with `min{i,j} >= k`.
pub fn min_ge(g: &Graph, k: usize) -> usize {
    g.edges().iter().filter(|&&(i, _)| i >= k).count()
}

pub fn max_le(g: &Graph, k: usize) -> usize {
    g.edges().iter().filter(|&&(_, j)| j <= k).count()
}

pub fn min_le(g: &Graph, k: usize) -> usize {
    g.edges().iter().filter(|&&(i, _)| i <= k).count()
}

/// `Delta^sigma(G)`: the graph whose edges are the degree-2 monomials outside `Gin_sigma(J_G)`.
pub fn shifted_graph<F: Field>(f: &F, order: &TermOrder, g: &Graph, opts: &GinOptions) -> Result<(Graph, GinCertificate)> {
    let opts = GinOptions { degree_cap: Some(2.min(g.n())), ..opts.clone() };
    let r = gin(f, order, &graph_face_ideal(g), &opts)?;
    Ok((graph_of_complement(&r.ideal), r.certificate))
}

/// Edges `{i,j}` with `e_i e_j` outside a degree-2 component.
pub fn graph_of_complement(ideal: &MonomialIdeal) -> Graph {
    let n = ideal.n();
    let edges: Vec<(usize, usize)> = ideal
        .degree_component(2)
        .complement()
        .iter()
        .map(|m| {
            let s = m.support();
            (s[0], s[1])
        })
        .collect();
    Graph::from_edges(n, &edges).expect("valid pairs")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Ring;

    fn ext(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::new(Ring::Exterior, n, gens.iter().map(|s| Monomial::ext(n, s).unwrap())).unwrap()
    }

    #[test]
    fn profiles() {
        let i = ext(4, &[&[1, 2], &[1, 3]]);
        let p = index_profile(&i, 2);
        assert_eq!(p.min_le, vec![2, 2, 2, 2]);
        assert_eq!(p.max_le, vec![0, 1, 2, 2]);
        let z = MonomialIdeal::zero(Ring::Exterior, 4);
        assert_eq!(index_profile(&z, 2).max_le, vec![0; 4]);
    }

    #[test]
    fn m_counts_small() {
        let i = ext(4, &[&[1, 2], &[1, 3]]);
        let top = Monomial::ext(4, &[1, 2]).unwrap();
        assert_eq!(m_count(&TermOrder::Lex, &i, &top).unwrap(), 1);
        assert_eq!(m_count(&TermOrder::Lex, &i, &Monomial::ext(4, &[1, 3]).unwrap()).unwrap(), 2);
        let table = m_counts(&TermOrder::Lex, &i, 2);
        assert_eq!(table.last().unwrap().1, 2);
        assert!(m_count(&TermOrder::Lex, &i, &Monomial::ext(5, &[1]).unwrap()).is_err());
    }

    #[test]
    fn graph_counts() {
        let g = Graph::from_edges(4, &[(1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!((1..=4).map(|k| max_ge(&g, k)).collect::<Vec<_>>(), vec![4, 4, 4, 3]);
        assert_eq!((1..=4).map(|k| min_ge(&g, k)).collect::<Vec<_>>(), vec![4, 3, 1, 0]);
        assert_eq!(max_le(&g, 3), 1);
        assert_eq!(min_le(&g, 1), 1);
    }
}
