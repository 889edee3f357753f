//! Exact scalars, polynomials, L-fractions and shift calculus.

pub mod lfrac;
pub mod multipoly;
pub mod scalar;
pub mod unipoly;

pub use lfrac::{lfrac_add, lfrac_invert, lfrac_mul, lfrac_shift, LFraction, RationalH};
pub use multipoly::{
    finite_difference, lex_leading, Direction, LaurentPoly, MultiPoly, MultiRational, ShiftSpec,
};
pub use scalar::Scalar;
pub use unipoly::{mu_of_poly, natplus_roots, poly_shift, UniPoly, Var};
