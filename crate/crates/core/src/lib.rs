//! Orbit numbers of Young modules, p-Kostka numbers and partition combinatorics
//! for symmetric groups.

pub mod config;
pub mod dims;
pub mod error;
pub mod export;
pub mod kostka;
pub mod mullineux;
pub mod orbit_numbers;
pub mod orbit_type;
pub mod partition;
pub mod verify;

/// Arbitrary-precision nonnegative integer used for all dimensions.
pub type BigNat = num_bigint::BigUint;

pub use dims::{perm_module_dimension, specht_dimension};
pub use error::{Error, Result};
pub use export::{kostka_csv, kostka_json, table_csv, table_json, Matrix};
pub use kostka::{
    kostka_matrix, ordinary_kostka, p_kostka, two_part_young_dimension, young_module_dimension,
    KostkaMatrix,
};
pub use mullineux::{mullineux_regular, mullineux_restricted};
pub use orbit_numbers::{
    build_tables, generic_jordan_type, m_number, m_oracle, orbit_number, y_canonical_product,
    y_hook_closed_form, y_two_part_closed_form, y_two_part_hook_product, JordanType, Module,
    OrbitNumberTable,
};
pub use orbit_type::{canonical_orbit_type, orbit_types, refines_up_to_rearrangement, OrbitType};
pub use partition::{
    composition_combine, conjugate, dominance_compare, is_p_regular, is_p_restricted,
    p_adic_expansion, p_core_and_weight, partitions, Combine, Composition, Dominance,
    PAdicExpansion, Partition,
};
pub use verify::{run_suite, Failure, Suite, VerificationReport};
