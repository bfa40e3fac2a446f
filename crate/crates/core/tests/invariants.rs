use std::cmp::Ordering;

use gin_core::complexes::{condition_v, shifted_complex, Graph, SimplicialComplex};
use gin_core::field::{PrimeField, RationalField};
use gin_core::gin::{gin, GinOptions};
use gin_core::invariants::betti::alpha;
use gin_core::invariants::{betti_stable, resolution_oracle, BettiFlavor};
use gin_core::linalg::row_reduce;
use gin_core::monomial::monomials_of_degree;
use gin_core::verifier::enumerate_graphs;
use gin_core::{Field, Monomial, MonomialIdeal, Ring, TermOrder};
use proptest::prelude::*;

fn order() -> impl Strategy<Value = TermOrder> {
    prop_oneof![
        Just(TermOrder::Lex),
        Just(TermOrder::RevLex),
        prop::collection::vec(-3i64..4, 4).prop_map(TermOrder::WeightThenLex),
        prop::collection::vec(-3i64..4, 4).prop_map(TermOrder::WeightThenRevLex),
        Just(TermOrder::Lex.inverse()),
        Just(TermOrder::RevLex.inverse()),
    ]
}

fn poly_monomial(d: usize) -> impl Strategy<Value = Monomial> {
    prop::sample::select(monomials_of_degree(Ring::Polynomial, 4, d))
}

fn graph() -> impl Strategy<Value = Graph> {
    (2usize..=6).prop_flat_map(|n| (0u64..1 << (n * (n - 1) / 2)).prop_map(move |c| Graph::from_edge_code(n, c)))
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle()
}

fn ext_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (3usize..=5).prop_flat_map(|n| {
        let pool: Vec<Monomial> =
            (2..=3).flat_map(|d| monomials_of_degree(Ring::Exterior, n, d)).collect();
        prop::sample::subsequence(pool.clone(), 1..=4.min(pool.len()))
            .prop_map(move |g| MonomialIdeal::new(Ring::Exterior, n, g).unwrap())
    })
}

fn poly_ideal() -> impl Strategy<Value = MonomialIdeal> {
    let pool: Vec<Monomial> = (2..=3).flat_map(|d| monomials_of_degree(Ring::Polynomial, 3, d)).collect();
    prop::sample::subsequence(pool, 1..=3).prop_map(|g| MonomialIdeal::new(Ring::Polynomial, 3, g).unwrap())
}

fn cheap() -> ProptestConfig {
    ProptestConfig { cases: 24, ..ProptestConfig::default() }
}

proptest! {
    #[test]
    fn orders_are_total_and_antisymmetric(o in order(), u in poly_monomial(3), v in poly_monomial(3), w in poly_monomial(3)) {
        prop_assert_eq!(o.cmp(&u, &v) == Ordering::Equal, u == v);
        prop_assert_eq!(o.cmp(&u, &v), o.cmp(&v, &u).reverse());
        if o.cmp(&u, &v).is_ge() && o.cmp(&v, &w).is_ge() {
            prop_assert!(o.cmp(&u, &w).is_ge());
        }
        prop_assert_eq!(o.inverse().inverse().cmp(&u, &v), o.cmp(&u, &v));
    }

    #[test]
    fn pivots_ignore_scaling_and_row_order(
        rows in prop::collection::vec(prop::collection::vec(-3i64..4, 6), 1..5),
        scale in prop::collection::vec(1i64..7, 5),
        perm in Just((0..5).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let f = PrimeField::default();
        let lift = |r: &[i64], s: i64| r.iter().map(|&x| f.from_i64(x * s)).collect::<Vec<_>>();
        let mut a: Vec<_> = rows.iter().map(|r| lift(r, 1)).collect();
        let order: Vec<usize> = perm.into_iter().filter(|&i| i < rows.len()).collect();
        let mut b: Vec<_> = order.iter().map(|&i| lift(&rows[i], scale[i])).collect();
        prop_assert_eq!(row_reduce(&f, &mut a), row_reduce(&f, &mut b));
    }

    #[test]
    fn prime_and_rational_pivots_agree(rows in prop::collection::vec(prop::collection::vec(-3i64..4, 5), 1..5)) {
        let p = PrimeField::default();
        let q = RationalField;
        let mut a: Vec<_> = rows.iter().map(|r| r.iter().map(|&x| p.from_i64(x)).collect::<Vec<_>>()).collect();
        let mut b: Vec<_> = rows.iter().map(|r| r.iter().map(|&x| q.from_i64(x)).collect::<Vec<_>>()).collect();
        prop_assert_eq!(row_reduce(&p, &mut a), row_reduce(&q, &mut b));
    }

    #[test]
    fn components_grow_by_multiplication(i in poly_ideal(), d in 2usize..4) {
        for m in i.degree_component(d).iter() {
            for v in 1..=3 {
                let up = m.times_var(v).unwrap();
                prop_assert!(i.degree_component(d + 1).contains(&up));
            }
        }
    }

    #[test]
    fn condition_v_ignores_complement_and_labels((g, pi) in graph().prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })) {
        prop_assert_eq!(condition_v(&g), condition_v(&g.complement()));
        prop_assert_eq!(condition_v(&g), condition_v(&g.relabel(&pi)));
    }
}

proptest! {
    #![proptest_config(cheap())]

    #[test]
    fn gin_preserves_hilbert_function_ext(i in ext_ideal(), seed in any::<u64>()) {
        let f = PrimeField::default();
        for o in [TermOrder::Lex, TermOrder::RevLex] {
            let g = gin(&f, &o, &i, &GinOptions::with_seed(seed)).unwrap().ideal;
            prop_assert_eq!(g.hilbert_function(i.n()), i.hilbert_function(i.n()));
            prop_assert!(g.is_squarefree_strongly_stable());
        }
    }

    #[test]
    fn gin_preserves_hilbert_function_poly(i in poly_ideal(), seed in any::<u64>()) {
        let f = PrimeField::default();
        let opts = GinOptions { degree_cap: Some(4), ..GinOptions::with_seed(seed) };
        let g = gin(&f, &TermOrder::RevLex, &i, &opts).unwrap().ideal;
        prop_assert_eq!(g.hilbert_function(4), i.hilbert_function(4));
    }

    #[test]
    fn shifting_keeps_face_counts(g in graph(), seed in any::<u64>()) {
        let f = PrimeField::default();
        let k = SimplicialComplex::flag(&g);
        for o in [TermOrder::Lex, TermOrder::RevLex] {
            let (s, _) = shifted_complex(&f, &o, &k, &GinOptions::with_seed(seed)).unwrap();
            prop_assert_eq!(s.face_counts(), k.face_counts());
        }
    }

    #[test]
    fn betti_formulas_match_oracle(e in ext_ideal(), p in poly_ideal(), seed in any::<u64>()) {
        let f = PrimeField::default();
        let opts = GinOptions::with_seed(seed);
        let ge = gin(&f, &TermOrder::RevLex, &e, &opts).unwrap().ideal;
        if ge.generators().len() <= 16 {
            prop_assert_eq!(betti_stable(&ge, BettiFlavor::SquarefreeStronglyStable).unwrap(), resolution_oracle(&ge).unwrap());
        }
        let opts = GinOptions { degree_cap: Some(4), ..opts };
        let gp = gin(&f, &TermOrder::RevLex, &p, &opts).unwrap().ideal;
        if gp.generators().len() <= 16 {
            prop_assert_eq!(betti_stable(&gp, BettiFlavor::StronglyStable).unwrap(), resolution_oracle(&gp).unwrap());
        }
    }

    #[test]
    fn alpha_keeps_betti_table(p in poly_ideal(), seed in any::<u64>()) {
        let f = PrimeField::default();
        let opts = GinOptions { degree_cap: Some(4), ..GinOptions::with_seed(seed) };
        let g = gin(&f, &TermOrder::RevLex, &p, &opts).unwrap().ideal;
        let n = g.n() + 4;
        let wide = MonomialIdeal::new(Ring::Polynomial, n, g.generators().iter().map(|m| {
            let mut e = m.exps().to_vec();
            e.resize(n, 0);
            Monomial::poly(e)
        })).unwrap();
        let a = alpha(&wide).unwrap();
        prop_assert!(a.is_squarefree());
        prop_assert_eq!(betti_stable(&wide, BettiFlavor::StronglyStable).unwrap(),
            betti_stable(&a, BettiFlavor::SquarefreeStronglyStable).unwrap());
    }
}

#[test]
fn graph_class_counts() {
    let counts: Vec<usize> = (1..=6).map(|n| enumerate_graphs(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 2, 4, 11, 34, 156]);
}
