//! Exact tools for studying involution widths of finite groups.

pub mod arith;
pub mod chartab;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod ff;
pub mod involution;
pub mod lie;
pub mod oracle;
pub mod permutation;

pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use involution::{decompose, InvolutionFactorization};
pub use permutation::{CycleDecomposition, Parity, Permutation};
