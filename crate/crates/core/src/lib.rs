//! Explicit Serre weight sets for two-dimensional mod-`l` representations
//! of local Galois groups, described through characters of tame inertia,
//! and adequacy of finite subgroups of `GL_n` over finite fields.

pub mod adequacy;
pub mod char_arith;
pub mod error;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
