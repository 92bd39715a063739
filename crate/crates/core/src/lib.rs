//! Exact simultaneous rational approximants to the q-zeta values
//!
//! ```text
//! zeta_q(1) = sum_{k>=1} 1/(p^k - 1),    zeta_q(2) = sum_{k>=1} k/(p^k - 1),    q = 1/p
//! ```
//!
//! built from Hermite-Padé approximation with multiple little q-Jacobi
//! polynomials, together with exact checks of every identity, bound,
//! integrality statement and congruence the construction relies on.
//!
//! Everything that decides a check is done in exact rational arithmetic;
//! real numbers (zeta values, logarithms, pi^2) only ever appear as
//! [`RationalInterval`] enclosures with rational endpoints.

pub mod approximants;
pub mod cyclotomic;
mod error;
pub mod exact;
pub mod independence;
pub mod qjacobi;
pub mod zeta;

pub use approximants::ApproximantRow;
pub use cyclotomic::CycloTable;
pub use error::{Error, Result};
pub use exact::{BigInt, BigRational, IntPoly, QContext, RatPoly};
pub use qjacobi::QJacobiPoly;
pub use zeta::RationalInterval;
