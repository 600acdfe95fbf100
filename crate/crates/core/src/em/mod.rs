//! Eilenberg-Moore and co-Kleisli constructions.

pub mod adjunction;
pub mod cartesian;
pub mod coalgebra;
pub mod iff;
pub mod props;

pub use adjunction::{
    check_adjunction, compare_comonads, validate_adjunction, Adjunction, AdjunctionComonad, EmAdjunction, IdentityAdjunction, SliceAdjunction,
    XKernel, XObj,
};
pub use cartesian::{check_em_cartesian, check_em_symmetry_and_monoidal_adjunction, EmCategory, CARTESIAN_IDS, SYMMETRY_IDS};
pub use coalgebra::{cofree, em_homs, em_product, em_unit, enumerate_coalgebras, induced_comonoid, induced_comonoid_laws, is_coalgebra_morphism, Coalgebra};
pub use iff::{check_iff_characterization, diagonals, extract_at, Extracted, IffOutcome, Stripped, Verdict};
pub use props::{check_prop2, check_prop3, pairing, prop2_maps, PROP3_IDS};
