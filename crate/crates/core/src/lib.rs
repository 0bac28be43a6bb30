//! Exact stability analysis of real and complex polynomials: where the roots
//! lie relative to the imaginary axis, decided five independent ways over the
//! rationals.
//!
//! ```
//! use rhstab_core::poly::Polynomial;
//! use rhstab_core::routh::{classify, StabilityKind};
//!
//! let p = Polynomial::from_ints(&[1, 2, 3, 1]);
//! assert_eq!(classify(&p).unwrap().kind, StabilityKind::Stable);
//! ```

pub mod error;
pub mod hankel;
pub mod hodograph;
pub mod hurwitz;
pub mod linalg;
pub mod lorenz;
pub mod methods;
pub mod poly;
pub mod report;
pub mod roots;
pub mod routh;
pub mod stieltjes;
pub mod sturm;
pub mod text;

pub use error::{Error, Result};
pub use poly::{ComplexPolynomial, Polynomial, Rat, RationalFunction};
pub use roots::{AxisRoots, RootDistribution};
