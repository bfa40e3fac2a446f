//! Exhaustive sweeps over graph isomorphism classes.
//!
//! A sweep report holds only results. The master seed and timing live in a
//! separate [`Provenance`] so that reports from different seeds can be compared
//! byte for byte.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::complexes::classify::forbidden_hit;
use crate::complexes::{base_form, condition_vi, edge_ideal, graph_face_ideal, BaseForm, Graph, SimplicialComplex};
use crate::error::Result;
use crate::field::Field;
use crate::gin::engine::{gin, trial_seed, GinOptions};
use crate::gin::shift::{trans_witnesses, DEFAULT_BUDGET};
use crate::ideal::MonomialIdeal;
use crate::order::TermOrder;
use crate::verifier::enumerate::enumerate_graphs;

/// Weight orders sampled per flag-complex ideal.
pub const SAMPLED_WEIGHT_ORDERS: usize = 20;
pub const MAX_WEIGHT: i64 = 1_000_000;

/// Two ideals whose degree-`degree` components differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    /// `trans` for two shifting witnesses, `gins` for two generic initial ideals.
    pub source: &'static str,
    pub degree: usize,
    pub first: Vec<String>,
    pub second: Vec<String>,
    /// Shift sequences of trans witnesses.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<(Vec<(usize, usize)>, Vec<(usize, usize)>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphRecord {
    pub graph: Graph,
    pub code: u64,
    pub condition_v: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forbidden: Option<String>,
    pub condition_vi: bool,
    pub peel: Vec<usize>,
    pub base_form: BaseForm,
    /// `gin_lex(J_G)_2 == gin_revlex(J_G)_2`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree2_agree: Option<bool>,
    /// Full agreement of lex, revlex and the sampled weight orders on `J_F(G)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampled_orders_agree: Option<bool>,
    /// `gin_lex(I(G)) == gin_revlex(I(G))` up to `degree_cap`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_ideal_agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Discrepancy>,
    pub consistent: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub classes: usize,
    pub condition_v: usize,
    pub condition_vi: usize,
    pub degree2_agree: usize,
    pub sampled_orders_checked: usize,
    pub sampled_orders_agree: usize,
    pub edge_ideal_agree: usize,
    pub semi_complete_bipartite: usize,
    pub witnesses: usize,
    pub disagreements: Vec<String>,
}

impl Summary {
    fn of(records: &[GraphRecord]) -> Summary {
        let count = |p: &dyn Fn(&GraphRecord) -> bool| records.iter().filter(|r| p(r)).count();
        Summary {
            classes: records.len(),
            condition_v: count(&|r| r.condition_v),
            condition_vi: count(&|r| r.condition_vi),
            degree2_agree: count(&|r| r.degree2_agree == Some(true)),
            sampled_orders_checked: count(&|r| r.sampled_orders_agree.is_some()),
            sampled_orders_agree: count(&|r| r.sampled_orders_agree == Some(true)),
            edge_ideal_agree: count(&|r| r.edge_ideal_agree == Some(true)),
            semi_complete_bipartite: count(&|r| r.base_form == BaseForm::SemiCompleteBipartite),
            witnesses: count(&|r| r.witness.is_some()),
            disagreements: records.iter().filter(|r| !r.consistent).map(|r| r.graph.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub theorem: &'static str,
    pub n: usize,
    pub records: Vec<GraphRecord>,
    pub summary: Summary,
    pub pass: bool,
}

impl SweepReport {
    fn new(theorem: &'static str, n: usize, records: Vec<GraphRecord>) -> Self {
        let summary = Summary::of(&records);
        let pass = summary.disagreements.is_empty();
        SweepReport { theorem, n, records, summary, pass }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per class, then a summary line.
    pub fn render_table(&self) -> String {
        let mark = |b: Option<bool>| match b {
            Some(true) => "yes",
            Some(false) => "no",
            None => "-",
        };
        let mut s = format!("{:<36} {:>4} {:>4} {:>4} {:>7} {:>5}  base\n", "graph", "v", "vi", "deg2", "orders", "I(G)");
        for r in &self.records {
            s.push_str(&format!(
                "{:<36} {:>4} {:>4} {:>4} {:>7} {:>5}  {}{}\n",
                r.graph.to_string(),
                mark(Some(r.condition_v)),
                mark(Some(r.condition_vi)),
                mark(r.degree2_agree),
                mark(r.sampled_orders_agree),
                mark(r.edge_ideal_agree),
                r.base_form,
                if r.consistent { "" } else { "  DISAGREE" },
            ));
        }
        s.push_str(&format!(
            "{} n={} classes={} {}\n",
            self.theorem,
            self.n,
            self.summary.classes,
            if self.pass { "PASS" } else { "FAIL" }
        ));
        s
    }
}

/// Seed and wall-clock time of a run, kept apart from the results.
#[derive(Clone, Debug, Serialize)]
pub struct Provenance {
    pub seed: u64,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepRun {
    pub report: SweepReport,
    pub provenance: Provenance,
}

fn graph_seed(seed: u64, g: &Graph) -> u64 {
    trial_seed(seed ^ g.n() as u64, g.edge_code() as usize)
}

/// Strictly decreasing weights in `[1, MAX_WEIGHT]`.
pub fn random_decreasing_weights<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<i64> {
    let mut w: Vec<i64> = Vec::with_capacity(n);
    while w.len() < n {
        let x = rng.gen_range(1..=MAX_WEIGHT);
        if !w.contains(&x) {
            w.push(x);
        }
    }
    w.sort_unstable_by(|a, b| b.cmp(a));
    w
}

fn classify(g: &Graph) -> GraphRecord {
    let hit = forbidden_hit(g);
    let p = condition_vi(g);
    GraphRecord {
        graph: g.clone(),
        code: g.edge_code(),
        condition_v: hit.is_none(),
        forbidden: hit.map(|h| h.to_string()),
        condition_vi: p.holds,
        peel: p.peel,
        base_form: base_form(g),
        degree2_agree: None,
        sampled_orders_agree: None,
        edge_ideal_agree: None,
        degree_cap: None,
        witness: None,
        consistent: true,
    }
}

fn first_difference(a: &MonomialIdeal, b: &MonomialIdeal, top: usize) -> Option<usize> {
    (0..=top).find(|&d| a.degree_component(d) != b.degree_component(d))
}

fn gins_discrepancy(a: &MonomialIdeal, b: &MonomialIdeal, d: usize) -> Discrepancy {
    Discrepancy {
        source: "gins",
        degree: d,
        first: a.degree_component(d).to_strings(),
        second: b.degree_component(d).to_strings(),
        pairs: None,
    }
}

/// All checks on one graph class for the flag-complex characterization.
pub fn theorem1_record<F: Field>(f: &F, g: &Graph, seed: u64) -> Result<GraphRecord> {
    let mut r = classify(g);
    let s = graph_seed(seed, g);
    let n = g.n();
    let j = graph_face_ideal(g);
    let deg2 = GinOptions { degree_cap: Some(2.min(n)), ..GinOptions::with_seed(s) };
    let lex2 = gin(f, &TermOrder::Lex, &j, &deg2)?.ideal;
    let rev2 = gin(f, &TermOrder::RevLex, &j, &deg2)?.ideal;
    let agree2 = lex2.degree_component(2) == rev2.degree_component(2);
    r.degree2_agree = Some(agree2);

    let counterexample;
    if r.condition_v {
        let flag = SimplicialComplex::flag(g).exterior_face_ideal();
        let opts = GinOptions::with_seed(s);
        let reference = gin(f, &TermOrder::RevLex, &flag, &opts)?.ideal;
        let mut rng = ChaCha8Rng::seed_from_u64(s ^ 0x5EED);
        let mut orders = vec![TermOrder::Lex];
        orders.extend((0..SAMPLED_WEIGHT_ORDERS).map(|_| TermOrder::WeightThenLex(random_decreasing_weights(n, &mut rng))));
        let mut all = true;
        for o in &orders {
            let other = gin(f, o, &flag, &opts)?.ideal;
            if other != reference {
                let d = first_difference(&reference, &other, n).unwrap_or(0);
                r.witness = Some(gins_discrepancy(&reference, &other, d));
                all = false;
                break;
            }
        }
        r.sampled_orders_agree = Some(all);
        counterexample = !all;
    } else {
        let found = match trans_witnesses(f, &TermOrder::Lex, &j, DEFAULT_BUDGET, 2.min(n)) {
            Ok(t) => t.distinct_in_degree(2).map(|(a, b)| Discrepancy {
                source: "trans",
                degree: 2,
                first: a.ideal.degree_component(2).to_strings(),
                second: b.ideal.degree_component(2).to_strings(),
                pairs: Some((a.pairs.clone(), b.pairs.clone())),
            }),
            Err(crate::Error::BudgetExhausted(_)) => None,
            Err(e) => return Err(e),
        };
        r.witness = found.or_else(|| (!agree2).then(|| gins_discrepancy(&lex2, &rev2, 2)));
        counterexample = r.witness.is_none();
    }
    r.consistent = r.condition_v == r.condition_vi && r.condition_v == agree2 && !counterexample;
    Ok(r)
}

/// Checks on one graph class for the edge-ideal characterization.
pub fn theorem2_record<F: Field>(f: &F, g: &Graph, seed: u64) -> Result<GraphRecord> {
    let mut r = classify(g);
    let s = graph_seed(seed, g);
    let i = edge_ideal(g);
    let rev = gin(f, &TermOrder::RevLex, &i, &GinOptions::with_seed(s))?;
    let cap = rev.certificate.degree_cap;
    let lex = gin(f, &TermOrder::Lex, &i, &GinOptions { degree_cap: Some(cap), ..GinOptions::with_seed(s) })?;
    let agree = lex.ideal == rev.ideal;
    if let Some(d) = first_difference(&lex.ideal, &rev.ideal, cap) {
        r.witness = Some(gins_discrepancy(&lex.ideal, &rev.ideal, d));
    }
    r.edge_ideal_agree = Some(agree);
    r.degree_cap = Some(cap);
    r.consistent = agree == (r.base_form == BaseForm::SemiCompleteBipartite);
    Ok(r)
}

fn sweep<F: Field>(
    f: &F,
    theorem: &'static str,
    n: usize,
    seed: u64,
    record: fn(&F, &Graph, u64) -> Result<GraphRecord>,
) -> Result<SweepRun> {
    let start = Instant::now();
    let graphs = enumerate_graphs(n)?;
    let records: Vec<GraphRecord> = graphs.par_iter().map(|g| record(f, g, seed)).collect::<Result<_>>()?;
    Ok(SweepRun {
        report: SweepReport::new(theorem, n, records),
        provenance: Provenance { seed, elapsed_ms: start.elapsed().as_millis() },
    })
}

/// Flag-complex characterization on every class with `n` vertices.
pub fn sweep_theorem1<F: Field>(f: &F, n: usize, seed: u64) -> Result<SweepRun> {
    sweep(f, "thm1", n, seed, theorem1_record)
}

/// Edge-ideal characterization on every class with `n` vertices.
pub fn sweep_theorem2<F: Field>(f: &F, n: usize, seed: u64) -> Result<SweepRun> {
    sweep(f, "thm2", n, seed, theorem2_record)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn k22_and_p4() {
        let f = PrimeField::default();
        let r = theorem1_record(&f, &Graph::complete_bipartite(2, 2), 1).unwrap();
        assert!(r.condition_v && r.condition_vi && r.degree2_agree == Some(true));
        assert_eq!(r.sampled_orders_agree, Some(true));
        assert!(r.consistent);
        let r = theorem1_record(&f, &Graph::path(4), 1).unwrap();
        assert!(!r.condition_v && !r.condition_vi && r.degree2_agree == Some(false));
        assert_eq!(r.witness.as_ref().unwrap().source, "trans");
        assert!(r.consistent);
    }

    #[test]
    fn edge_ideal_examples() {
        let f = PrimeField::default();
        let r = theorem2_record(&f, &Graph::complete_bipartite(2, 3), 2).unwrap();
        assert_eq!(r.edge_ideal_agree, Some(true));
        assert!(r.consistent);
        let r = theorem2_record(&f, &Graph::complete(3), 2).unwrap();
        assert_eq!(r.edge_ideal_agree, Some(false));
        assert_eq!(r.witness.as_ref().unwrap().degree, 2);
        assert!(r.consistent);
    }

    #[test]
    fn small_sweeps_pass() {
        let f = PrimeField::default();
        let run = sweep_theorem1(&f, 4, 3).unwrap();
        assert_eq!(run.report.summary.classes, 11);
        assert!(run.report.pass, "{}", run.report.render_table());
        let run = sweep_theorem2(&f, 4, 3).unwrap();
        assert!(run.report.pass, "{}", run.report.render_table());
    }

    #[test]
    fn weights_decrease() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let w = random_decreasing_weights(6, &mut rng);
        assert!(w.windows(2).all(|p| p[0] > p[1]) && w.iter().all(|&x| (1..=MAX_WEIGHT).contains(&x)));
    }
}
