//! Scalars, binary forms, symmetric tensors and the GL₂ action on forms.

mod form;
mod scalar;
mod tensor;
mod transform;

pub use form::{BinaryForm, Var};
pub(crate) use scalar::{fmt_ratio, parse_real};
pub use scalar::{format_c64, format_f64, GaussianRational, Scalar};
pub use tensor::{form_to_tensor, tensor_to_form, SymmetricTensor2};
pub use transform::{
    transform, transform_coeffs_closed, Transform2, RANDOM_BOX, RANDOM_MIN_DET, RATIONAL_GRID, SINGULAR_THRESHOLD,
};

/// Random invertible matrix; see [`Transform2::random`].
pub fn random_transform(seed: u64, real_only: bool) -> Transform2 {
    Transform2::random(seed, real_only)
}
