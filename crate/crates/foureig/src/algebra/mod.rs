//! Exact integer/rational linear algebra and algebraic-number arithmetic.
//!
//! Everything in this module is exact: arbitrary-precision integers and
//! rationals only, no floating point on any decision path.

mod algnum;
mod charpoly;
mod factor;
mod linalg;
mod matrix;
mod poly;
pub mod roots;

pub use algnum::AlgebraicNumber;
pub use charpoly::{char_poly, char_poly_faddeev};
pub use factor::{factor_over_rationals, Factorization};
pub use linalg::{rational_kernel_basis, KernelError};
pub use matrix::IntMatrix;
pub use poly::IntPolynomial;
pub use roots::{isolate_real_roots, refine_interval, Interval};
