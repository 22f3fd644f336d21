pub mod canonical;
pub mod classify;
pub mod error;
pub mod kernel;
pub mod likelihood;
pub mod pencil;
pub mod reciprocal;
pub mod selftest;
pub mod strata;
pub mod symbol;
pub mod tables;

pub use error::{Error, Result};
