//! Exact and certified arithmetic: integer/rational polynomials, resultants,
//! factorization over Q, certified complex root isolation.

pub mod ball;
pub mod bipoly;
pub mod factor;
pub mod modp;
pub mod mpoly;
pub mod parse;
pub mod primes;
pub mod resultant;
pub mod ring;
pub mod roots;
pub mod squarefree;
pub mod sturm;
pub mod unipoly;

pub use ball::ComplexBall;
pub use bipoly::BiPoly;
pub use factor::{factor_rationals, factor_rationals_with, is_irreducible, FactorOptions, Factorization};
pub use mpoly::MPoly;
pub use parse::{parse_bivariate, parse_mpoly, parse_univariate, ParsedPoly};
pub use resultant::{discriminant, eliminate_t, resultant, resultant_int};
pub use ring::{Field, GaussRat, Ring};
pub use roots::{complex_roots, isolate_roots, RootIsolation, RootOptions};
pub use squarefree::{is_squarefree, squarefree_decompose};
pub use sturm::{real_root_count, RealInterval};
pub use unipoly::{IntPoly, UniPoly};
