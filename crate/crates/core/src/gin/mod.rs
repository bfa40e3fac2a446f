//! Generic initial ideals and combinatorial shifting.

pub mod change;
pub mod duality;
pub mod engine;
pub mod shift;

pub use change::{ChangeKind, CoordinateChange};
pub use duality::{complement_dual, duality_report, gin_space, DualityReport};
pub use engine::{gin, truncated_initial_ideal, GinCertificate, GinOptions, GinResult, RandomKind};
pub use shift::{combinatorial_shift, trans_witnesses, TransSearch, Witness};
