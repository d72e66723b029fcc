//! Exact computations with braided SL(2): the quantized coordinate ring as a
//! rewriting system, its braided Hopf structure, the braid group action on
//! tensor powers, and the ideals attached to braid closures.

pub mod axioms;
pub mod bhopf;
pub mod braidrep;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod ncring;
pub mod parse;
pub mod scalar;
pub mod tensor;
pub mod verify;

pub use bhopf::{BraidedHopf, Instance, StructureTables};
pub use error::{Error, Result};
pub use ncring::{AlgebraElement, Letter, NormalWord, RewriteSystem};
pub use scalar::Scalar;
pub use tensor::TensorElement;
