//! Generic initial ideals in the exterior algebra and the polynomial ring,
//! combinatorial shifting, and checks of when a graph's generic initial ideal
//! does not depend on the term order.

pub mod complexes;
pub mod error;
pub mod field;
pub mod gin;
pub mod ideal;
pub mod invariants;
pub mod linalg;
pub mod monomial;
pub mod order;
pub mod verifier;

pub use error::{Error, Result};
pub use field::{Field, FieldMode};
pub use ideal::{MonomialIdeal, MonomialSet};
pub use monomial::{Monomial, Ring};
pub use order::TermOrder;
