//! One-dimensional QCA in Margolus form, folded-ring circuits, index and
//! symmetry checks.

use alloc::string::String;
use core::fmt;

pub mod circuit;
pub mod compact;
pub mod folded;
pub mod index;
pub mod lemmas;
pub mod linalg;
pub mod margolus;
pub mod operator;

pub use circuit::{compare, compare_exact, Circuit, Deviation};
pub use compact::{column_translation, compactify_2d_shift};
pub use index::{gnvw_index, RationalIndex};
pub use folded::{build_vr, build_w, build_w1_w2, verify_ring_equality, RingLayout, RingReport};
pub use lemmas::{check_w_symmetry, check_w_translation, schmidt_operator_decompose};
pub use margolus::{apply_margolus_on_ring, MargolusQca};
pub use operator::DenseOperator;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QcaError {
    Shape(String),
    Budget(String),
    NotUnitary(String),
    Invalid(String),
}

impl fmt::Display for QcaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QcaError::Shape(s) => write!(f, "shape mismatch: {s}"),
            QcaError::Budget(s) => write!(f, "over budget: {s}"),
            QcaError::NotUnitary(s) => write!(f, "not unitary: {s}"),
            QcaError::Invalid(s) => write!(f, "invalid input: {s}"),
        }
    }
}
