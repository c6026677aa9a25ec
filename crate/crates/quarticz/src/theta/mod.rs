//! Genus-2 theta constants: characteristics, the symplectic action, exact
//! expansions and numeric evaluation.

pub mod boundary;
pub mod characteristic;
pub mod eval;
pub mod expansion;
pub mod orbits;
pub mod siegel;
pub mod symplectic;
pub mod transform;

pub use characteristic::{all_characteristics, even_characteristics, fz_tuple, Characteristic, Parity};
pub use eval::{fz_eval, theta_eval, theta_eval_g1, theta_eval_matrix, theta_gradient, tuple_eval};
pub use expansion::{fz_expansion, phi_after_g0, theta_expansion, theta_square_product, tuple_expansion};
pub use orbits::orbit_decomposition;
pub use siegel::{sample_points, SiegelPoint, C64};
pub use symplectic::{gamma_z_generators, generator, generators, SymplecticMat};
pub use transform::{
    characteristic_action, gamma_z_invariant_by_table, gamma_z_tuple_predicate, gamma_z_tuple_predicate_printed, kappa_squared, pair_character_numeric, table1_char, table1_tuple_char,
    verify_igusa_transformation, Phase8,
};
