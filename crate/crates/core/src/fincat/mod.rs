//! Finite concrete categories: objects, tabulated morphisms, models.

pub mod homs;
pub mod laws;
pub mod model;
pub mod morphism;
pub mod object;

pub use model::{pair_carrier, Braiding, Ctx, Kernel, Limits, Model, Product};
pub use morphism::{compose, tensor_mor, FinMorphism, MorKind};
pub use object::{FinObject, Obj, Payload};
