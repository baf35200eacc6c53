//! Weil heights of algebraic numbers, rational projective points and polynomials.

mod algebraic;
mod point;
pub mod quadrature;
mod value;

pub use algebraic::{height_algebraic, height_from_min_poly, height_from_roots, locate_root, mahler_measure_log, AlgebraicNumber, DEFAULT_TOLERANCE};
pub use point::{height_point, height_poly, sandwich_check, Norm, ProjectivePoint};
pub use quadrature::mahler_integral_height;
pub use value::{HeightValue, Method};
