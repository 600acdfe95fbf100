//! Concrete model backends.

pub mod algebra;
pub mod day;
pub mod slice;
pub mod xrel;

pub use algebra::{preset, FinGroup, FinMonoid, PRESETS};
pub use day::{day_preset, DayModel, DAY_PRESETS};
pub use slice::{SliceComonad, SliceModel};
pub use xrel::{XRelComonad, XRelModel};
