//! Brute-force ground truth on explicitly enumerated groups.

mod dixon;
mod group;
pub mod groups;
mod modp;

pub use dixon::{class_coefficients, dixon_character_table, dixon_prime};
pub use group::{
    class_letters, count_tuples, involution_width_oracle, is_strongly_real, ClassData,
    GroupElement, SmallGroup, WidthReport,
};
