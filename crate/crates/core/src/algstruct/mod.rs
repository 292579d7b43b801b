//! Finite-dimensional algebras, homomorphisms, precosheaves of algebras,
//! graded and interior algebras, and modules over category algebras.

mod algebra;
mod graded;
mod module;
mod precosheaf;

use thiserror::Error;

use crate::linalg::LinalgError;

pub(crate) use algebra::format_combination;
pub use algebra::{
    kron, multiply, tensor_product, validate_algebra, validate_hom, AlgebraElement, AlgebraHom,
    FinAlgebra,
};
pub use graded::{validate_graded, validate_interior, GradedAlgebra, InteriorAlgebra};
pub(crate) use module::block_offsets;
pub use module::{
    module_to_precosheaf, precosheaf_to_module, validate_module, CatModule, VectFunctor,
};
pub use precosheaf::{validate_precosheaf, Precosheaf};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("the unit does not lie in the subspace")]
    UnitNotInSubspace,
    #[error("subspace is not closed under products: ({left})·({right})")]
    NotClosed { left: String, right: String },
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
