//! Exhaustive sweeps and randomized property suites.

pub mod enumerate;
pub mod properties;
pub mod sweep;

pub use enumerate::{canonical_form, enumerate_graphs};
pub use properties::{property_suite, PropertyOptions, PropertyReport};
pub use sweep::{sweep_theorem1, sweep_theorem2, SweepReport, SweepRun};
