//! Adequacy of finite subgroups of `GL_n(F_q)`: group enumeration, the four
//! adequacy conditions and the group constructions they are tested on.
//!
//! Condition (1) asks for no non-trivial quotient of `l`-power order. A
//! finite `l`-group is nilpotent, so any such quotient has a non-trivial
//! abelian `l`-quotient; the condition is therefore `l ∤ |G / [G, G]|`.
//!
//! Every dimension is computed over the entry field `F_q`. Ranks of spans
//! and cohomology of finite groups do not change under field extension, so
//! the answers agree with those over `F̄_l`.

pub mod cohomology;
pub mod field;
pub mod group;
pub mod linalg;
pub mod report;
pub mod standard;

pub use cohomology::{adjoint_matrix, fixed_subspace_dim, h1_adjoint, h1_adjoint_bruteforce, BRUTE_FORCE_MAX};
pub use field::{Elem, FiniteField};
pub use group::{
    abelianization_l_part, derived_subgroup, element_order, group_closure, prime_to_l_elements,
    span_rank_prime_to_l, MatGroup, DEFAULT_CAP,
};
pub use linalg::{Echelon, Mat};
pub use report::{is_adequate, scalar_saturate, tensor_image, tensor_of_pairs, AdequacyReport, Condition};
pub use standard::{standard_group, StandardGroup};
