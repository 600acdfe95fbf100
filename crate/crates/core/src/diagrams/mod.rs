//! Path terms, coherence isomorphisms and diagram evaluation.

pub mod coherence;
pub mod eval;
pub mod mor;
pub mod notation;

pub use eval::{compare, diagram_commutes, Comparison, Discrepancy};
pub use mor::{Mor, NamedMor};
