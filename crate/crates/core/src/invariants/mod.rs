//! Numerical invariants of monomial ideals and shifted graphs.

pub mod betti;
pub mod closed_form;
pub mod hyperplane;
pub mod profile;

pub use betti::{alpha, betti_stable, regularity_from_gin, resolution_oracle, BettiFlavor, BettiTable};
pub use closed_form::{closed_form_profiles, lex_rev_complement_identity, ClosedForms};
pub use hyperplane::hyperplane_rank_oracle;
pub use profile::{index_profile, m_count, shifted_graph, IndexProfile};
