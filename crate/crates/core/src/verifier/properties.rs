//! Randomized property checks cross-checking the engine against combinatorial statements.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::complexes::{condition_v, graph_face_ideal, shifted_complex, Graph, SimplicialComplex};
use crate::error::Result;
use crate::field::{BinaryField, Field};
use crate::gin::duality::{duality_report, gin_space};
use crate::gin::engine::{gin, trial_seed, GinOptions, RandomKind};
use crate::gin::shift::trans_witnesses;
use crate::ideal::{MonomialIdeal, MonomialSet};
use crate::invariants::hyperplane::{complement_max_ge, hyperplane_rank_oracle};
use crate::invariants::profile::{index_profile, m_counts};
use crate::monomial::{monomials_of_degree, Monomial, Ring};
use crate::order::TermOrder;
use crate::verifier::enumerate::enumerate_graphs;
use crate::verifier::sweep::random_decreasing_weights;

pub const DEFAULT_SAMPLES: usize = 200;
pub const HYPERPLANE_SAMPLES: usize = 100;
pub const PARTIAL_SUPPORT_SAMPLES: usize = 100;
/// Shift applications per witness search in the sandwich check.
pub const SANDWICH_BUDGET: usize = 2000;
pub const MAX_SPACE_VARS: usize = 8;
pub const MAX_CONE_VERTICES: usize = 5;
pub const RESTRICTION_MAX_N: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub samples: usize,
    pub violations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_violation: Option<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub properties: Vec<PropertyResult>,
    pub pass: bool,
}

impl PropertyReport {
    pub fn render_table(&self) -> String {
        let mut s = String::new();
        for p in &self.properties {
            s.push_str(&format!(
                "{:<28} samples={:<5} violations={:<3} {}\n",
                p.name,
                p.samples,
                p.violations,
                if p.pass { "PASS" } else { "FAIL" }
            ));
            if let Some(v) = &p.first_violation {
                s.push_str(&format!("    {v}\n"));
            }
        }
        s.push_str(if self.pass { "properties PASS\n" } else { "properties FAIL\n" });
        s
    }
}

#[derive(Clone, Debug)]
pub struct PropertyOptions {
    pub seed: u64,
    pub samples: usize,
    pub hyperplane_samples: usize,
    pub partial_support_samples: usize,
}

impl PropertyOptions {
    pub fn with_seed(seed: u64) -> Self {
        PropertyOptions {
            seed,
            samples: DEFAULT_SAMPLES,
            hyperplane_samples: HYPERPLANE_SAMPLES,
            partial_support_samples: PARTIAL_SUPPORT_SAMPLES,
        }
    }
}

/// `None` when the instance passes, otherwise a description of it.
type Check = Result<Option<String>>;

fn tally(name: &'static str, outcomes: Vec<Check>) -> Result<PropertyResult> {
    let samples = outcomes.len();
    let mut violations = 0;
    let mut first_violation = None;
    for o in outcomes {
        if let Some(msg) = o? {
            violations += 1;
            first_violation.get_or_insert(msg);
        }
    }
    Ok(PropertyResult { name, samples, violations, first_violation, pass: violations == 0 })
}

fn run_all<T: Sync>(instances: &[T], check: impl Fn(&T) -> Check + Sync + Send) -> Vec<Check> {
    instances.par_iter().map(check).collect()
}

/// A random monomial subspace of the degree-2 piece, each monomial kept with probability one half.
pub fn random_space<R: Rng + ?Sized>(ring: Ring, n: usize, rng: &mut R) -> MonomialSet {
    let monos = monomials_of_degree(ring, n, 2).into_iter().filter(|_| rng.gen_bool(0.5));
    MonomialSet::new(ring, n, 2, monos).expect("degree-2 monomials")
}

fn random_order<R: Rng + ?Sized>(n: usize, i: usize, rng: &mut R) -> TermOrder {
    match i % 3 {
        0 => TermOrder::Lex,
        1 => TermOrder::RevLex,
        _ => TermOrder::WeightThenLex(random_decreasing_weights(n, rng)),
    }
}

pub fn random_graph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.gen_bool(0.5) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

fn ext(n: usize, sets: &[&[usize]]) -> Vec<Monomial> {
    sets.iter().map(|s| Monomial::ext(n, s).expect("valid support")).collect()
}

fn duality<F: Field>(f: &F, ring: Ring, opts: &PropertyOptions) -> Result<PropertyResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ ring as u64 ^ 0xD0);
    let mut instances = Vec::new();
    if ring == Ring::Exterior {
        let w = MonomialSet::new(ring, 4, 2, ext(4, &[&[1, 2], &[2, 3], &[3, 4]]))?;
        instances.push((w, TermOrder::RevLex, opts.seed));
    }
    for i in instances.len()..opts.samples {
        let n = rng.gen_range(2..=MAX_SPACE_VARS);
        let w = random_space(ring, n, &mut rng);
        let o = random_order(n, i, &mut rng);
        instances.push((w, o, trial_seed(opts.seed, i)));
    }
    let name = match ring {
        Ring::Exterior => "duality-exterior",
        Ring::Polynomial => "duality-polynomial",
    };
    tally(
        name,
        run_all(&instances, |(w, o, s)| {
            let r = duality_report(f, o, w, &GinOptions::with_seed(*s))?;
            Ok((!r.holds).then(|| format!("W={:?} order={o}", w.to_strings())))
        }),
    )
}

/// The one deliberate failure: `span{x1^2, x2^2}` in characteristic two.
fn char2_negative(opts: &PropertyOptions) -> Result<PropertyResult> {
    let w = MonomialSet::new(Ring::Polynomial, 2, 2, [Monomial::poly(vec![2, 0]), Monomial::poly(vec![0, 2])])?;
    // Borel-fixed ideals need not be strongly stable in positive characteristic.
    let g = GinOptions { check_stability: false, ..GinOptions::with_seed(opts.seed) };
    let r = duality_report(&BinaryField, &TermOrder::RevLex, &w, &g)?;
    let msg = r.holds.then(|| "duality unexpectedly holds in characteristic 2".to_string());
    tally("char2-duality-fails", vec![Ok(msg)])
}

fn sandwich_instance<F: Field>(f: &F, j: &MonomialIdeal, seed: u64) -> Check {
    let n = j.n();
    let cap = 2.min(n);
    let opts = GinOptions { degree_cap: Some(cap), ..GinOptions::with_seed(seed) };
    let lex = gin(f, &TermOrder::Lex, j, &opts)?.ideal;
    let rev = gin(f, &TermOrder::RevLex, j, &opts)?.ideal;
    let search = match trans_witnesses(f, &TermOrder::Lex, j, SANDWICH_BUDGET, cap) {
        Ok(s) => s,
        // nothing reached within the budget, so nothing to bracket
        Err(crate::Error::BudgetExhausted(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let (pl, pr) = (index_profile(&lex, 2), index_profile(&rev, 2));
    let (ml, mr) = (m_counts(&TermOrder::Lex, &lex, 2), m_counts(&TermOrder::RevLex, &rev, 2));
    for w in &search.witnesses {
        let p = index_profile(&w.ideal, 2);
        let le = |a: &[usize], b: &[usize]| a.iter().zip(b).all(|(x, y)| x <= y);
        if !le(&pl.max_le, &p.max_le) || !le(&p.max_le, &pr.max_le) {
            return Ok(Some(format!("max profile of {} outside [{:?}, {:?}]", w.ideal, pl.max_le, pr.max_le)));
        }
        if !le(&p.min_le, &pl.min_le) {
            return Ok(Some(format!("min profile of {} exceeds the lex gin", w.ideal)));
        }
        for (order, top) in [(TermOrder::Lex, &ml), (TermOrder::RevLex, &mr)] {
            let mine = m_counts(&order, &w.ideal, 2);
            if let Some((u, _)) = mine.iter().zip(top.iter()).find(|(a, b)| a.1 > b.1).map(|(a, _)| a) {
                return Ok(Some(format!("m-count of {u} under {order} in {} beats the gin", w.ideal)));
            }
        }
    }
    Ok(None)
}

fn sandwich<F: Field>(f: &F, opts: &PropertyOptions) -> Result<PropertyResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5A);
    let mut instances = vec![(MonomialIdeal::new(Ring::Exterior, 4, ext(4, &[&[1, 2], &[1, 3], &[3, 4]]))?, opts.seed)];
    for i in 1..opts.samples {
        let n = rng.gen_range(3..=6);
        instances.push((graph_face_ideal(&random_graph(n, &mut rng)), trial_seed(opts.seed, i)));
    }
    tally("sandwich-and-m-counts", run_all(&instances, |(j, s)| sandwich_instance(f, j, *s)))
}

fn random_complex<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SimplicialComplex {
    let k = rng.gen_range(0..=n);
    let facets: Vec<Vec<usize>> = (0..k)
        .map(|_| (1..=n).filter(|_| rng.gen_bool(0.5)).collect())
        .collect();
    SimplicialComplex::from_facets(n, &facets).expect("vertices in range")
}

fn cone_commutation<F: Field>(f: &F, opts: &PropertyOptions) -> Result<PropertyResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xC0);
    let instances: Vec<(SimplicialComplex, u64)> = (0..opts.samples)
        .map(|i| (random_complex(rng.gen_range(1..=MAX_CONE_VERTICES), &mut rng), trial_seed(opts.seed, i)))
        .collect();
    tally(
        "cone-commutation",
        run_all(&instances, |(c, s)| {
            let o = GinOptions::with_seed(*s);
            let (shifted, _) = shifted_complex(f, &TermOrder::RevLex, c, &o)?;
            let (of_cone, _) = shifted_complex(f, &TermOrder::RevLex, &c.cone()?, &o)?;
            Ok((of_cone != shifted.cone()?).then(|| format!("{c}")))
        }),
    )
}

fn hyperplane<F: Field>(f: &F, opts: &PropertyOptions) -> Result<PropertyResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x4B);
    let instances: Vec<(MonomialSet, u64)> = (0..opts.hyperplane_samples)
        .map(|i| {
            let ring = if i % 2 == 0 { Ring::Exterior } else { Ring::Polynomial };
            let n = rng.gen_range(2..=MAX_SPACE_VARS);
            (random_space(ring, n, &mut rng), trial_seed(opts.seed, i))
        })
        .collect();
    tally(
        "hyperplane-rank-oracle",
        run_all(&instances, |(w, s)| {
            let (g, _) = gin_space(f, &TermOrder::RevLex, w, &GinOptions::with_seed(*s))?;
            let oracle = hyperplane_rank_oracle(f, w, s ^ 0xAB)?;
            let engine = complement_max_ge(&g);
            Ok((oracle != engine).then(|| format!("W={:?}: oracle {oracle:?} engine {engine:?}", w.to_strings())))
        }),
    )
}

/// Spaces avoiding every `x_s x_t` with `s >= p`, `t >= q`, and the target `x_p x_q`.
fn partial_support<F: Field>(f: &F, opts: &PropertyOptions) -> Result<PropertyResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x35);
    let mut instances = Vec::new();
    for i in 0..opts.partial_support_samples {
        let n = rng.gen_range(2..=MAX_SPACE_VARS);
        let p = rng.gen_range(1..=n);
        let q = rng.gen_range(p..=n);
        let monos = monomials_of_degree(Ring::Polynomial, n, 2).into_iter().filter(|m| {
            let s = m.support();
            let (a, b) = (s[0], *s.last().unwrap());
            !(a >= p && b >= q) && rng.gen_bool(0.5)
        });
        let w = MonomialSet::new(Ring::Polynomial, n, 2, monos)?;
        let mut e = vec![0u8; n];
        e[p - 1] += 1;
        e[q - 1] += 1;
        instances.push((w, Monomial::poly(e), random_order(n, i, &mut rng), trial_seed(opts.seed, i)));
    }
    tally(
        "partial-support-exclusion",
        run_all(&instances, |(w, target, o, s)| {
            let g = GinOptions { kind: RandomKind::UpperTriangular, ..GinOptions::with_seed(*s) };
            let (gin_w, _) = gin_space(f, o, w, &g)?;
            Ok(gin_w.contains(target).then(|| format!("{target} in gin of {:?} under {o}", w.to_strings())))
        }),
    )
}

/// Every induced subgraph of a graph satisfying condition (v) satisfies it too.
fn restriction() -> Result<PropertyResult> {
    let mut outcomes = Vec::new();
    for n in 2..=RESTRICTION_MAX_N {
        for g in enumerate_graphs(n)?.into_iter().filter(condition_v) {
            let bad = (1..=n).map(|v| g.remove_vertex(v)).find(|h| !condition_v(h));
            outcomes.push(Ok(bad.map(|h| format!("{g} has induced subgraph {h} failing (v)"))));
        }
    }
    tally("restriction", outcomes)
}

/// Runs every property. The field is used for all characteristic-zero checks.
pub fn property_suite<F: Field>(f: &F, opts: &PropertyOptions) -> Result<PropertyReport> {
    let properties = vec![
        duality(f, Ring::Exterior, opts)?,
        duality(f, Ring::Polynomial, opts)?,
        char2_negative(opts)?,
        sandwich(f, opts)?,
        cone_commutation(f, opts)?,
        hyperplane(f, opts)?,
        partial_support(f, opts)?,
        restriction()?,
    ];
    let pass = properties.iter().all(|p| p.pass);
    Ok(PropertyReport { properties, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn small_suite_passes() {
        let f = PrimeField::default();
        let opts = PropertyOptions { seed: 7, samples: 12, hyperplane_samples: 8, partial_support_samples: 8 };
        let r = property_suite(&f, &opts).unwrap();
        assert!(r.pass, "{}", r.render_table());
        assert_eq!(r.properties.len(), 8);
        assert_eq!(r.properties[0].samples, 12);
    }

    #[test]
    fn random_spaces_are_degree_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let w = random_space(Ring::Polynomial, 5, &mut rng);
        assert!(w.iter().all(|m| m.degree() == 2));
    }
}
