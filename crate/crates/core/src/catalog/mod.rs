//! Generators of im_L(4) and its named subalgebras, with structure tables
//! computed from the vector fields themselves.

pub mod generator;
pub mod table;

pub use generator::{
    basis24, cartan, eta, generator, lorentz, r_generators, signed_field, translations,
    translations_minus, translations_plus, translations_prime, triple_basis, x_lower, GeneratorId,
    SignedGenerator, ETA,
};
pub use table::{
    adjoint_action, bracket_combination, check_closure, format_combination, is_abelian,
    structure_table, AlgebraName, Basis, Closure, Combination, StructureTable,
};
