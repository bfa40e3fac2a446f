//! Combinatorial shifting and the search for transformed strongly stable ideals.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gin::change::CoordinateChange;
use crate::gin::engine::truncated_initial_ideal;
use crate::ideal::MonomialIdeal;
use crate::order::TermOrder;

/// Default number of shift applications explored by [`trans_witnesses`].
pub const DEFAULT_BUDGET: usize = 2000;

/// `in(phi_{a_p,b_p}( ... in(phi_{a_1,b_1}(I)) ... ))`.
pub fn combinatorial_shift<F: Field>(
    f: &F,
    order: &TermOrder,
    ideal: &MonomialIdeal,
    pairs: &[(usize, usize)],
    cap: usize,
) -> Result<MonomialIdeal> {
    let mut cur = ideal.truncate(cap);
    for &(a, b) in pairs {
        let phi = CoordinateChange::elementary(f, ideal.n(), a, b)?;
        cur = truncated_initial_ideal(f, order, &phi, &cur, cap)?;
    }
    Ok(cur)
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub ideal: MonomialIdeal,
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TransSearch {
    /// Distinct strongly stable ideals reached, in discovery order.
    pub witnesses: Vec<Witness>,
    /// Shift applications performed.
    pub steps: usize,
    /// True when the budget ran out before the search space was exhausted.
    pub truncated: bool,
}

impl TransSearch {
    /// Two witnesses with different degree-`d` components, if any.
    pub fn distinct_in_degree(&self, d: usize) -> Option<(&Witness, &Witness)> {
        let first = self.witnesses.first()?;
        let c = first.ideal.degree_component(d);
        self.witnesses.iter().find(|w| w.ideal.degree_component(d) != c).map(|w| (first, w))
    }
}

/// Breadth-first search over shift sequences, pairs `(a,b)` tried in lexicographic order.
/// Ideals that are already strongly stable are recorded and not expanded further.
pub fn trans_witnesses<F: Field>(
    f: &F,
    order: &TermOrder,
    ideal: &MonomialIdeal,
    budget: usize,
    cap: usize,
) -> Result<TransSearch> {
    let n = ideal.n();
    let start = ideal.truncate(cap);
    if start.is_strongly_stable() {
        return Ok(TransSearch { witnesses: vec![Witness { ideal: start, pairs: vec![] }], steps: 0, truncated: false });
    }
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
    let mut seen: HashSet<MonomialIdeal> = HashSet::from([start.clone()]);
    let mut queue: VecDeque<(MonomialIdeal, Vec<(usize, usize)>)> = VecDeque::from([(start, vec![])]);
    let mut witnesses: Vec<Witness> = Vec::new();
    let mut steps = 0;
    let mut truncated = false;
    'outer: while let Some((cur, seq)) = queue.pop_front() {
        for &(a, b) in &pairs {
            if steps == budget {
                truncated = true;
                break 'outer;
            }
            steps += 1;
            let phi = CoordinateChange::elementary(f, n, a, b)?;
            let next = truncated_initial_ideal(f, order, &phi, &cur, cap)?;
            if next == cur || !seen.insert(next.clone()) {
                continue;
            }
            let mut s = seq.clone();
            s.push((a, b));
            if next.is_strongly_stable() {
                witnesses.push(Witness { ideal: next, pairs: s });
            } else {
                queue.push_back((next, s));
            }
        }
    }
    if witnesses.is_empty() {
        return Err(Error::BudgetExhausted(format!("no strongly stable ideal within {budget} shifts")));
    }
    Ok(TransSearch { witnesses, steps, truncated })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::monomial::{Monomial, Ring};

    fn ext(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::new(Ring::Exterior, n, gens.iter().map(|s| Monomial::ext(n, s).unwrap())).unwrap()
    }

    fn triangle() -> MonomialIdeal {
        MonomialIdeal::new(Ring::Polynomial, 3, ["x1*x2", "x1*x3", "x2*x3"].iter().map(|s| Monomial::parse(s, 3).unwrap()))
            .unwrap()
    }

    #[test]
    fn shift_sequences() {
        let f = PrimeField::default();
        let i = ext(4, &[&[1, 2], &[1, 3], &[3, 4]]);
        assert_eq!(combinatorial_shift(&f, &TermOrder::Lex, &i, &[], 4).unwrap(), i);
        assert_eq!(
            combinatorial_shift(&f, &TermOrder::Lex, &i, &[(1, 3)], 4).unwrap(),
            ext(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3, 4]])
        );
        let t = combinatorial_shift(&f, &TermOrder::Lex, &triangle(), &[(1, 2), (2, 3)], 3).unwrap();
        assert_eq!(t.degree_component(2).to_strings(), ["x1^2", "x1*x2", "x2^2"]);
    }

    #[test]
    fn exterior_witnesses() {
        let f = PrimeField::default();
        let i = ext(4, &[&[1, 2], &[1, 3], &[3, 4]]);
        let s = trans_witnesses(&f, &TermOrder::Lex, &i, 50, 4).unwrap();
        let found: Vec<&MonomialIdeal> = s.witnesses.iter().map(|w| &w.ideal).collect();
        assert!(found.contains(&&ext(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3, 4]])));
        assert!(found.contains(&&ext(4, &[&[1, 2], &[1, 3], &[2, 3]])));
        assert!(s.distinct_in_degree(2).is_some());
        let stable = ext(4, &[&[1, 2], &[1, 3]]);
        let s = trans_witnesses(&f, &TermOrder::Lex, &stable, 50, 4).unwrap();
        assert_eq!(s.witnesses.len(), 1);
        assert!(s.witnesses[0].pairs.is_empty());
    }

    #[test]
    fn polynomial_witnesses() {
        let f = PrimeField::default();
        let s = trans_witnesses(&f, &TermOrder::Lex, &triangle(), 500, 3).unwrap();
        let parts: Vec<Vec<String>> = s.witnesses.iter().map(|w| w.ideal.degree_component(2).to_strings()).collect();
        assert!(parts.contains(&vec!["x1^2".into(), "x1*x2".into(), "x2^2".into()]));
        assert!(parts.contains(&vec!["x1^2".into(), "x1*x2".into(), "x1*x3".into()]));
    }
}
