//! Initial spaces, truncated initial ideals and certified generic initial ideals.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gin::change::{CoordinateChange, ImageTable};
use crate::ideal::{MonomialIdeal, MonomialSet, Stability};
use crate::linalg::Subspace;
use crate::monomial::{count_of_degree, Ring};
use crate::order::TermOrder;

/// Default number of independent random trials.
pub const DEFAULT_TRIALS: usize = 3;
/// Polynomial degree caps never grow beyond this.
pub const MAX_POLY_DEGREE_CAP: usize = 12;
/// Refuse graded pieces larger than this many monomials.
pub const MAX_COMPONENT_DIM: usize = 4000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RandomKind {
    Dense,
    UpperTriangular,
}

#[derive(Clone, Debug)]
pub struct GinOptions {
    pub trials: usize,
    pub seed: u64,
    /// `None`: `n` in the exterior algebra, adaptive in the polynomial ring.
    pub degree_cap: Option<usize>,
    pub kind: RandomKind,
    /// Require the result to be stable for the order's variable ranking.
    pub check_stability: bool,
}

impl Default for GinOptions {
    fn default() -> Self {
        GinOptions { trials: DEFAULT_TRIALS, seed: 0, degree_cap: None, kind: RandomKind::Dense, check_stability: true }
    }
}

impl GinOptions {
    pub fn with_seed(seed: u64) -> Self {
        GinOptions { seed, ..Self::default() }
    }
}

/// Evidence gathered for one generic initial ideal computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GinCertificate {
    pub order: String,
    pub field: String,
    pub trials: usize,
    pub seeds: Vec<u64>,
    /// Whether trial `t` agreed with trial 0.
    pub agreement: Vec<bool>,
    pub strongly_stable: bool,
    pub hilbert_match: bool,
    pub degree_cap: usize,
    pub escalated: bool,
    pub accepted: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GinResult {
    pub ideal: MonomialIdeal,
    pub certificate: GinCertificate,
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of trial `t` under master seed `seed`.
pub fn trial_seed(seed: u64, t: usize) -> u64 {
    splitmix(seed ^ splitmix(t as u64 + 1))
}

fn check_size(ring: Ring, n: usize, d: usize) -> Result<()> {
    let c = count_of_degree(ring, n, d);
    if c > MAX_COMPONENT_DIM {
        return Err(Error::size(format!("degree-{d} component of {ring} in {n} variables has {c} monomials")));
    }
    Ok(())
}

/// `in_sigma(W)`.
pub fn initial_space<F: Field>(f: &F, order: &TermOrder, w: &Subspace<F>) -> Result<MonomialSet> {
    w.initial_space(f, order)
}

/// Graded pieces of `I` as spanning families, degrees `0..=cap`.
pub fn family_of<F: Field>(f: &F, ideal: &MonomialIdeal, cap: usize) -> BTreeMap<usize, Subspace<F>> {
    (0..=cap)
        .map(|d| (d, ideal.degree_component(d)))
        .filter(|(_, s)| !s.is_empty())
        .map(|(d, s)| (d, Subspace::from_monomials(f, &s)))
        .collect()
}

/// `in_sigma(phi(W_d))` for every piece of a family.
pub fn initial_family<F: Field>(
    f: &F,
    order: &TermOrder,
    phi: &CoordinateChange<F>,
    ring: Ring,
    family: &BTreeMap<usize, Subspace<F>>,
) -> Result<BTreeMap<usize, MonomialSet>> {
    let top = family.keys().next_back().copied().unwrap_or(0);
    let table = ImageTable::new(f, phi, ring, top)?;
    family
        .iter()
        .map(|(&d, w)| Ok((d, table.image(f, w)?.initial_space(f, order)?)))
        .collect()
}

/// `in_sigma(phi(I))` with exact components in degrees `0..=cap`.
pub fn truncated_initial_ideal<F: Field>(
    f: &F,
    order: &TermOrder,
    phi: &CoordinateChange<F>,
    ideal: &MonomialIdeal,
    cap: usize,
) -> Result<MonomialIdeal> {
    validate(order, ideal, cap)?;
    if phi.n() != ideal.n() {
        return Err(Error::invalid("coordinate change and ideal have different n"));
    }
    let comps = initial_family(f, order, phi, ideal.ring(), &family_of(f, ideal, cap))?;
    MonomialIdeal::from_components(ideal.ring(), ideal.n(), &comps)
}

fn validate(order: &TermOrder, ideal: &MonomialIdeal, cap: usize) -> Result<()> {
    order.check_arity(ideal.n())?;
    if ideal.ring() == Ring::Exterior && cap > ideal.n() {
        return Err(Error::invalid(format!("exterior degree cap {cap} exceeds n = {}", ideal.n())));
    }
    for d in 0..=cap {
        check_size(ideal.ring(), ideal.n(), d)?;
    }
    Ok(())
}

/// Generic initial components of a family of graded pieces, certified by repeated trials.
///
/// The returned certificate's `degree_cap` is the top degree of the family.
pub fn gin_family<F: Field>(
    f: &F,
    order: &TermOrder,
    ring: Ring,
    n: usize,
    family: &BTreeMap<usize, Subspace<F>>,
    opts: &GinOptions,
) -> Result<(BTreeMap<usize, MonomialSet>, GinCertificate)> {
    if opts.trials < 1 {
        return Err(Error::invalid("at least one trial is required"));
    }
    order.check_arity(n)?;
    let dims: BTreeMap<usize, usize> = family.iter().map(|(&d, w)| (d, w.dim(f))).collect();
    let cap = family.keys().next_back().copied().unwrap_or(0);
    let ranking = order.variable_ranking(ring, n);
    let rule = match ring {
        Ring::Exterior => Stability::Squarefree,
        Ring::Polynomial => Stability::Strong,
    };

    let run = |trials: std::ops::Range<usize>| -> Result<(Vec<u64>, Vec<BTreeMap<usize, MonomialSet>>)> {
        let mut seeds = Vec::new();
        let mut out = Vec::new();
        for t in trials {
            let s = trial_seed(opts.seed, t);
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let phi = match opts.kind {
                RandomKind::Dense => CoordinateChange::random_dense(f, n, &mut rng),
                RandomKind::UpperTriangular => CoordinateChange::random_upper_triangular(f, n, &mut rng),
            };
            seeds.push(s);
            out.push(initial_family(f, order, &phi, ring, family)?);
        }
        Ok((seeds, out))
    };

    let judge = |results: &[BTreeMap<usize, MonomialSet>]| -> Result<(Vec<bool>, bool, bool)> {
        let agreement: Vec<bool> = results.iter().map(|r| *r == results[0]).collect();
        let ideal = MonomialIdeal::from_components(ring, n, &results[0])?;
        let stable = ideal.stability_violation_with(rule, &ranking).is_none();
        let hilbert = results[0].iter().all(|(d, s)| dims.get(d) == Some(&s.len()));
        Ok((agreement, stable, hilbert))
    };

    let mut escalated = false;
    let (mut seeds, mut results) = run(0..opts.trials)?;
    let (mut agreement, mut stable, mut hilbert) = judge(&results)?;
    let ok = |a: &[bool], s: bool, h: bool| a.iter().all(|&x| x) && (s || !opts.check_stability) && h;
    if !ok(&agreement, stable, hilbert) {
        escalated = true;
        (seeds, results) = run(opts.trials..3 * opts.trials)?;
        (agreement, stable, hilbert) = judge(&results)?;
    }
    let accepted = ok(&agreement, stable, hilbert);
    let cert = GinCertificate {
        order: order.to_string(),
        field: f.describe(),
        trials: results.len(),
        seeds,
        agreement,
        strongly_stable: stable,
        hilbert_match: hilbert,
        degree_cap: cap,
        escalated,
        accepted,
    };
    if !accepted {
        let mut candidates: Vec<String> = Vec::new();
        for r in &results {
            let s = MonomialIdeal::from_components(ring, n, r)?.to_string();
            if !candidates.contains(&s) {
                candidates.push(s);
            }
        }
        let reason = if !cert.agreement.iter().all(|&x| x) {
            "random trials disagree"
        } else if !cert.hilbert_match {
            "Hilbert function not preserved"
        } else {
            "result is not strongly stable"
        };
        return Err(Error::CertificationFailed { reason: reason.into(), candidates });
    }
    let comps = results.swap_remove(0);
    Ok((comps, cert))
}

/// `gin_sigma(I)` with components exact up to the degree cap.
pub fn gin<F: Field>(f: &F, order: &TermOrder, ideal: &MonomialIdeal, opts: &GinOptions) -> Result<GinResult> {
    let n = ideal.n();
    let ring = ideal.ring();
    let fixed = match (ring, opts.degree_cap) {
        (_, Some(c)) => Some(c),
        (Ring::Exterior, None) => Some(n),
        (Ring::Polynomial, None) => None,
    };
    if let Some(cap) = fixed {
        return gin_capped(f, order, ideal, cap, opts);
    }
    // Adaptive: one past the top generator degree of the candidate, until stable.
    let mut cap = ideal.max_generator_degree().map_or(0, |d| d + 1);
    loop {
        let res = gin_capped(f, order, ideal, cap, opts)?;
        match res.ideal.max_generator_degree() {
            Some(top) if top >= cap => {
                cap = top + 1;
                if cap > MAX_POLY_DEGREE_CAP {
                    return Err(Error::size(format!("degree cap would exceed {MAX_POLY_DEGREE_CAP}")));
                }
            }
            _ => return Ok(res),
        }
    }
}

fn gin_capped<F: Field>(
    f: &F,
    order: &TermOrder,
    ideal: &MonomialIdeal,
    cap: usize,
    opts: &GinOptions,
) -> Result<GinResult> {
    validate(order, ideal, cap)?;
    let family = family_of(f, ideal, cap);
    let (comps, mut certificate) = gin_family(f, order, ideal.ring(), ideal.n(), &family, opts)?;
    certificate.degree_cap = cap;
    Ok(GinResult { ideal: MonomialIdeal::from_components(ideal.ring(), ideal.n(), &comps)?, certificate })
}
