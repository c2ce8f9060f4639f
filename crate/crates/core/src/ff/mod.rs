//! Finite fields `GF(p^k)` and square matrices over them.

mod field;
mod matrix;

pub use field::{norm_one_generator, Elem, Field};
pub use matrix::{enumerate_unitary_group, parse_header, FFMatrix};
