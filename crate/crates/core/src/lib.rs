//! Verification engine for linear exponential comonads on finite monoidal
//! categories.

pub mod diagrams;
pub mod elem;
pub mod em;
pub mod error;
pub mod fincat;
pub mod linexp;
pub mod models;
pub mod report;

pub use elem::Elem;
pub use error::{Error, Result};
