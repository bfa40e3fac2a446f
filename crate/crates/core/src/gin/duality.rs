//! Complement duality of generic initial spaces of monomial spaces.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gin::engine::{gin_family, GinCertificate, GinOptions};
use crate::ideal::MonomialSet;
use crate::linalg::Subspace;
use crate::order::TermOrder;

/// `gin_sigma(span W)` for a monomial space in one degree.
pub fn gin_space<F: Field>(
    f: &F,
    order: &TermOrder,
    w: &MonomialSet,
    opts: &GinOptions,
) -> Result<(MonomialSet, GinCertificate)> {
    let family = BTreeMap::from([(w.degree(), Subspace::from_monomials(f, w))]);
    let (mut comps, cert) = gin_family(f, order, w.ring(), w.n(), &family, opts)?;
    let g = comps.remove(&w.degree()).unwrap_or_else(|| MonomialSet::empty(w.ring(), w.n(), w.degree()));
    Ok((g, cert))
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub order: TermOrder,
    /// `gin_sigma(W)`.
    pub gin: MonomialSet,
    /// Its complement among all monomials of the degree.
    pub complement: MonomialSet,
    /// `gin_{sigma^-1}(W-bar)`.
    pub dual: MonomialSet,
    pub holds: bool,
}

/// Computes both sides of `gin_sigma(W)-bar = gin_{sigma^-1}(W-bar)`.
pub fn duality_report<F: Field>(f: &F, order: &TermOrder, w: &MonomialSet, opts: &GinOptions) -> Result<DualityReport> {
    let (g, _) = gin_space(f, order, w, opts)?;
    let dual_opts = GinOptions { seed: opts.seed ^ 0xD0A1, ..opts.clone() };
    let (dual, _) = gin_space(f, &order.inverse(), &w.complement(), &dual_opts)?;
    let complement = g.complement();
    let holds = complement == dual;
    Ok(DualityReport { order: order.clone(), gin: g, complement, dual, holds })
}

/// The complement of `gin_sigma(W)`, verified against the inverse-order side.
pub fn complement_dual<F: Field>(f: &F, order: &TermOrder, w: &MonomialSet, opts: &GinOptions) -> Result<MonomialSet> {
    let r = duality_report(f, order, w, opts)?;
    if !r.holds {
        return Err(Error::DualityViolation(format!(
            "complement of gin is {:?} but gin of complement under {} is {:?}",
            r.complement,
            order.inverse(),
            r.dual
        )));
    }
    Ok(r.complement)
}
