//! Classification of binary cubics and quartics, equivalently 2×2×2 and
//! 2×2×2×2 symmetric tensors, by eigenpair classes over ℂ and by root
//! patterns over ℝ, plus the matching classification of third- and
//! fourth-order linear PDE principal parts in two variables.

pub mod algebra;
pub mod classify;
pub mod error;
pub mod json;
pub mod pde;
pub mod poly;
pub mod roots;
pub mod spectra;
pub mod tolerance;

pub use algebra::{BinaryForm, GaussianRational, Scalar, SymmetricTensor2, Transform2};
pub use error::{Error, Result};
pub use tolerance::Tolerances;
