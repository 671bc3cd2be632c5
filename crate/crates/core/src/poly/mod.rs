//! Polynomials over [`Rat`](crate::arith::Rat): dense in one variable, sparse in many.

mod multi;
mod newton;
mod uni;

pub(crate) use multi::monomial_label;
pub use multi::MultiPoly;
pub use newton::{is_integer_valued, newton_coefficients, NewtonExpansion};
pub use uni::{binomial_poly, binomial_poly_shifted, UniPoly};
