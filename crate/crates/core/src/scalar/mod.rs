//! Exact coefficient arithmetic: rationals, Gaussian rationals and a small
//! quadratic tower for square roots that show up in witnesses.

mod ext;
mod field;
mod gaussian;
mod rational;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use ext::{ext_arith, scalar_sqrt, ExtOp, ExtResult, ExtScalar, MAX_TOWER_DEPTH};
pub use field::Field;
pub use gaussian::Scalar;
pub use rational::{format_rational, parse_rational, rat, rat_normalize, ratio, rational_sqrt, rational_to_f64, Rational};

/// Base field of an algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldMode {
    Real,
    Complex,
}

impl FieldMode {
    pub fn name(self) -> &'static str {
        match self {
            FieldMode::Real => "real",
            FieldMode::Complex => "complex",
        }
    }

    pub fn parse(s: &str) -> Option<FieldMode> {
        match s.trim().to_ascii_lowercase().as_str() {
            "real" | "r" => Some(FieldMode::Real),
            "complex" | "c" => Some(FieldMode::Complex),
            _ => None,
        }
    }
}

impl std::fmt::Display for FieldMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("square root of a negative number in real mode")]
    NegativeRadicand,
    #[error("division by zero")]
    DivisionByZero,
    #[error("more than {MAX_TOWER_DEPTH} independent square roots")]
    UnsupportedTower,
}
