//! Linear exponential comonads and their axiom suite.

pub mod axioms;
pub mod comonad;
pub mod identity;
pub mod mutation;
pub mod sigma;

pub use axioms::{delta_monoidal, delta_obj, Suite};
pub use comonad::ExpComonad;
pub use identity::IdentityComonad;
pub use mutation::{Mutation, MutantComonad, MutantModel, MUTATIONS};
pub use sigma::{sigma, sigma_path, sigma_path_simplified};
