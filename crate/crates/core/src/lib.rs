//! Quadratic and odd-quadratic Lie superalgebras from structure constants.
//!
//! The crate builds algebras from explicit bracket tables, verifies the
//! graded Jacobi identity and invariance of a bilinear form, solves for
//! derivation spaces, and implements the double extension, T*-extension,
//! super double extension and odd T*s-extension constructions. A catalog
//! of the low-dimensional algebras is included and checked on demand.
//!
//! ```
//! use superquad::catalog;
//! use superquad::field::Rational;
//!
//! let g4 = catalog::build::<Rational>("g4", &[]).unwrap();
//! assert!(g4.is_verified());
//! assert_eq!(superquad::structure::center(g4.algebra()).dim(), 1);
//! ```

pub mod algebra;
pub mod catalog;
pub mod derivations;
pub mod error;
pub mod extensions;
pub mod field;
pub mod form;
pub mod format;
pub mod linalg;
pub mod morphisms;
pub mod quadratic;
pub mod report;
pub mod space;
pub mod structure;
pub mod verification;

pub use algebra::LieSuperalgebra;
pub use error::{Error, Result};
pub use field::{Backend, Complex, Rational, Scalar};
pub use form::{BilinearForm, FormParity};
pub use linalg::Matrix;
pub use quadratic::QuadraticAlgebra;
pub use report::{Check, Report, Status};
pub use space::{Subspace, SuperSpace};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/file-format.md")]
    mod file_format {}
    #[doc = include_str!("../../../book/src/derivations.md")]
    mod derivations {}
    #[doc = include_str!("../../../book/src/extensions.md")]
    mod extensions {}
    #[doc = include_str!("../../../book/src/morphisms.md")]
    mod morphisms {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
}
