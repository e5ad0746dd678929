//! Exact classification of associative algebras of dimension one to three
//! over the real and complex numbers, with structure constants in the
//! Gaussian rationals.

pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod document;
pub mod error;
pub mod iso;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod selftest;

pub use error::{Error, Result};
